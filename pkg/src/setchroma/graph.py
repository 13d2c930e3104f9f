"""Simple graphs, their connected partitions, and Mobius values.

Vertices are labelled 1..n. A partition is a tuple of blocks, each block a
sorted tuple of vertices, blocks ordered by their smallest vertex.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .limits import LATTICE_CAPACITY, check_capacity

Partition = tuple[tuple[int, ...], ...]


class GraphFormatError(ValueError):
    """A graph document that does not follow the edge-list format."""

    def __init__(self, message: str, lineno: int | None = None, line: str | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}: {line!r}"
        super().__init__(message)
        self.lineno = lineno
        self.line = line


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {e} has an endpoint outside 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "SimpleGraph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components, by smallest vertex."""
        seen = set()
        comps = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            stack = [start]
            seen.add(start)
            comp = []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, vertices) -> "SimpleGraph":
        """Subgraph induced on ``vertices``, relabelled 1..m in increasing order."""
        vertices = sorted(vertices)
        index = {v: i + 1 for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return SimpleGraph(len(vertices), frozenset(edges))

    def relabel(self, perm) -> "SimpleGraph":
        """Rename vertex v to perm[v - 1]; ``perm`` is a permutation of 1..n."""
        perm = list(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError("relabelling must be a permutation of 1..n")
        return SimpleGraph(self.n, frozenset((perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def __str__(self):
        return format_graph(self)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """``g`` keeps labels 1..g.n; ``h`` is shifted to g.n+1..g.n+h.n."""
    shift = g.n
    edges = set(g.edges) | {(u + shift, v + shift) for u, v in h.edges}
    return SimpleGraph(g.n + h.n, frozenset(edges))


def parse_graph(text: str) -> SimpleGraph:
    """Read the edge-list format.

    The first line that is neither blank nor a ``#`` comment holds the vertex
    count n. Each later such line is ``u v`` with 1 <= u < v <= n. Loops,
    repeated edges, and out-of-range endpoints are rejected.
    """
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not _is_int(fields[0]) or int(fields[0]) < 0:
                raise GraphFormatError("expected a vertex count", lineno, raw)
            n = int(fields[0])
            continue
        if len(fields) != 2 or not all(_is_int(f) for f in fields):
            raise GraphFormatError("expected an edge 'u v'", lineno, raw)
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise GraphFormatError("loop edge", lineno, raw)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range 1..{n}", lineno, raw)
        if u > v:
            raise GraphFormatError("edge must be written 'u v' with u < v", lineno, raw)
        if (u, v) in edges:
            raise GraphFormatError("duplicate edge", lineno, raw)
        edges.add((u, v))
    if n is None:
        raise GraphFormatError("missing vertex count")
    return SimpleGraph(n, frozenset(edges))


def format_graph(g: SimpleGraph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _is_int(s: str) -> bool:
    return s.lstrip("+-").isdigit()


def delete_edge(g: SimpleGraph, e) -> SimpleGraph:
    key = (min(e), max(e))
    if key not in g.edges:
        raise ValueError(f"edge {tuple(e)} is not in the graph")
    return SimpleGraph(g.n, g.edges - {key})


def contract_edge(g: SimpleGraph, e) -> SimpleGraph:
    """Identify the endpoints of ``e``; the loop is dropped and parallels merged.

    The merged vertex takes the smaller label and the vertices above the
    larger endpoint shift down by one, so the result lives on 1..n-1.
    """
    u, v = min(e), max(e)
    if (u, v) not in g.edges:
        raise ValueError(f"edge {tuple(e)} is not in the graph")

    def rename(x):
        if x == v:
            return u
        return x - 1 if x > v else x

    edges = set()
    for a, b in g.edges:
        a, b = rename(a), rename(b)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return SimpleGraph(g.n - 1, frozenset(edges))


def restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """All a_1..a_n with a_1 = 0 and a_i <= 1 + max(a_1..a_{i-1}), in lex order."""
    if n == 0:
        yield []
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[0..i-1]) (with m[0] = 0)
    while True:
        yield list(a)
        i = n - 1
        while i > 0 and a[i] == m[i] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = max(m[j - 1], a[j - 1])


def set_partitions(n: int) -> Iterator[Partition]:
    """Every partition of {1..n}, generated from restricted growth strings."""
    for rgs in restricted_growth_strings(n):
        blocks: list[list[int]] = []
        for v, b in enumerate(rgs, start=1):
            if b == len(blocks):
                blocks.append([v])
            else:
                blocks[b].append(v)
        yield tuple(tuple(b) for b in blocks)


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
    return row[0]


def block_is_connected(g: SimpleGraph, block) -> bool:
    """Union-find over the edges inside ``block``."""
    parent = {v: v for v in block}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pieces = len(parent)
    for u, v in g.edges:
        if u in parent and v in parent:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                pieces -= 1
    return pieces == 1


def refines(p: Partition, q: Partition) -> bool:
    """True when every block of ``p`` sits inside a block of ``q``."""
    where = {}
    for i, block in enumerate(q):
        for v in block:
            where[v] = i
    return all(len({where[v] for v in block}) == 1 for block in p)


def partition_key(p: Partition):
    return (-len(p), p)


@dataclass(frozen=True)
class BondLattice:
    """Connected partitions of a graph with Mobius values mu(bottom, .).

    ``elements`` are in canonical order: more blocks first, then
    lexicographic, so every partition comes after all its refinements.
    """

    graph: SimpleGraph
    elements: tuple
    mobius: dict = field(compare=False, repr=False)

    @property
    def bottom(self) -> Partition:
        return tuple((v,) for v in range(1, self.graph.n + 1))

    @property
    def top(self) -> Partition:
        return self.elements[-1]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return p in self.mobius

    def leq(self, p: Partition, q: Partition) -> bool:
        return refines(p, q)


def connected_partitions(g: SimpleGraph) -> BondLattice:
    """Build the bond lattice of ``g``.

    Partitions are grown block by block: the block holding the smallest
    uncovered vertex ranges over the connected vertex sets that contain it.
    This yields exactly the set partitions whose blocks induce connected
    subgraphs, without visiting the others.
    """
    check_capacity(bell_number(g.n), LATTICE_CAPACITY, f"partition lattice on {g.n} vertices")
    tools = _SubsetLattice(g)
    full = _mask(range(1, g.n + 1))
    names = {}
    mobius = {}
    for blocks in tools.partitions(full):
        p = []
        mu = 1
        for b in blocks:
            name = names.get(b)
            if name is None:
                name = names[b] = _unmask(b)
            p.append(name)
            mu *= tools.block_mobius(b)
        mobius[tuple(p)] = mu
    elements = sorted(mobius, key=partition_key)
    return BondLattice(g, tuple(elements), mobius)


def mobius_from_bottom(lattice: BondLattice) -> dict:
    """mu(bottom, p) for every element p of the lattice.

    The recursion mu(bottom, p) = -sum_{s < p} mu(bottom, s) is run once per
    vertex set: the interval below p is the product of the bond lattices of
    its blocks, so mu(bottom, p) is the product over blocks B of
    mu_B = mu(bottom, top) in the lattice of the subgraph induced on B.
    """
    cache = _SubsetLattice(lattice.graph)
    return {p: _prod(cache.block_mobius(_mask(b)) for b in p) for p in lattice.elements}


class _SubsetLattice:
    """Connected vertex sets, connected partitions and mu_B, memoized by bitmask.

    For |B| >= 2 the sum of mu over all connected partitions of B vanishes.
    Grouping partitions by the block C that holds min(B) gives
    mu_B = -sum_{C connected, min(B) in C, C != B} mu_C * S(B \\ C),
    where S(X) sums prod mu over connected partitions of X (S(empty) = 1).
    """

    def __init__(self, g: SimpleGraph):
        self.g = g
        self.adj = [0] * (g.n + 1)
        for u, v in g.edges:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
        self._mu = {}
        self._total = {0: 1}
        self._connected = {}
        self._blocks = {}

    def connected(self, mask: int) -> bool:
        hit = self._connected.get(mask)
        if hit is None:
            start = mask & -mask
            seen = start
            frontier = start
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nbrs = self.adj[low.bit_length() - 1] & mask & ~seen
                seen |= nbrs
                frontier |= nbrs
            hit = self._connected[mask] = seen == mask
        return hit

    def blocks_with_min(self, mask: int) -> list[int]:
        """Connected subsets of ``mask`` that contain its smallest vertex."""
        hit = self._blocks.get(mask)
        if hit is None:
            low = mask & -mask
            rest = mask ^ low
            hit = []
            sub = rest
            while True:
                if self.connected(low | sub):
                    hit.append(low | sub)
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            self._blocks[mask] = hit
        return hit

    def partitions(self, mask: int):
        """Connected partitions of ``mask`` as tuples of block masks."""
        if mask == 0:
            yield ()
            return
        for c in self.blocks_with_min(mask):
            for rest in self.partitions(mask ^ c):
                yield (c,) + rest

    def block_mobius(self, mask: int) -> int:
        hit = self._mu.get(mask)
        if hit is None:
            if mask & (mask - 1) == 0:
                hit = 1
            else:
                hit = -sum(self.block_mobius(c) * self.total(mask ^ c)
                           for c in self.blocks_with_min(mask) if c != mask)
            self._mu[mask] = hit
        return hit

    def total(self, mask: int) -> int:
        hit = self._total.get(mask)
        if hit is None:
            hit = sum(self.block_mobius(c) * self.total(mask ^ c)
                      for c in self.blocks_with_min(mask))
            self._total[mask] = hit
        return hit


def _mask(block) -> int:
    m = 0
    for v in block:
        m |= 1 << v
    return m


def _unmask(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(1, mask.bit_length()) if mask >> v & 1)


def _prod(values) -> int:
    out = 1
    for x in values:
        out *= x
    return out


_NAMED = {"K": complete_graph, "P": path_graph, "C": cycle_graph, "E": empty_graph}


def named_graph(name: str) -> SimpleGraph:
    """Built-in families: K<n> complete, P<n> path, C<n> cycle, E<n> edgeless."""
    family, digits = name[:1].upper(), name[1:]
    if family not in _NAMED or not digits.isdigit():
        raise ValueError(f"unknown graph name {name!r}; expected K<n>, P<n>, C<n> or E<n>")
    return _NAMED[family](int(digits))
