"""Permutation gain graphs and their proper set colorings.

A permutation of {1..k} is a tuple ``p`` in one-line notation: element s
maps to ``p[s - 1]``. It acts on a set by S.p = {p(s) : s in S}. Subsets
of {1..k} are stored as bitmasks, element s at bit s - 1.
"""

from dataclasses import dataclass
from itertools import permutations, product
import math

from . import chromafn
from .graph import SimpleGraph, contract_edge, delete_edge
from .limits import ORACLE_CAPACITY, check_capacity


class GainGraphFormatError(ValueError):
    pass


def identity(k: int) -> tuple[int, ...]:
    return tuple(range(1, k + 1))


def inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, image in enumerate(p, start=1):
        inv[image - 1] = i
    return tuple(inv)


def check_permutation(p, k: int) -> tuple[int, ...]:
    p = tuple(p)
    if sorted(p) != list(range(1, k + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{k}")
    return p


def act_on_mask(mask: int, p) -> int:
    """Image of the subset ``mask`` under ``p``."""
    out = 0
    for s, image in enumerate(p):
        if mask >> s & 1:
            out |= 1 << (image - 1)
    return out


@dataclass(frozen=True)
class GainEdge:
    i: int
    j: int
    gain: tuple[int, ...]


@dataclass(frozen=True)
class PermutationGainGraph:
    """Multigraph with a permutation gain on each edge, loops allowed.

    Edges are stored with i <= j and the gain read from i to j; the reverse
    orientation carries the inverse permutation.
    """

    n: int
    k: int
    edges: tuple[GainEdge, ...] = ()

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be >= 0")
        stored = []
        for e in self.edges:
            i, j, gain = e if not isinstance(e, GainEdge) else (e.i, e.j, e.gain)
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i}, {j}) has an endpoint outside 1..{self.n}")
            gain = check_permutation(gain, self.k)
            if i > j:
                i, j, gain = j, i, inverse(gain)
            stored.append(GainEdge(i, j, gain))
        object.__setattr__(self, "edges", tuple(stored))

    def gain(self, index: int, source: int) -> tuple[int, ...]:
        """Gain of edge ``index`` read starting from vertex ``source``."""
        e = self.edges[index]
        if source == e.i:
            return e.gain
        if source == e.j:
            return inverse(e.gain)
        raise ValueError(f"vertex {source} is not an endpoint of edge {index}")

    def oriented(self):
        """Every edge in both orientations as (source, target, gain)."""
        for e in self.edges:
            yield e.i, e.j, e.gain
            yield e.j, e.i, inverse(e.gain)

    def flipped(self) -> "PermutationGainGraph":
        """Same gain graph with each edge given in its reverse orientation."""
        return PermutationGainGraph(
            self.n, self.k, tuple((e.j, e.i, inverse(e.gain)) for e in self.edges)
        )

    def relabel(self, perm) -> "PermutationGainGraph":
        perm = list(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError("relabelling must be a permutation of 1..n")
        return PermutationGainGraph(
            self.n, self.k, tuple((perm[e.i - 1], perm[e.j - 1], e.gain) for e in self.edges)
        )


def sk_expansion(g: SimpleGraph, k: int) -> PermutationGainGraph:
    """Replace each edge of ``g`` by k! parallel edges, one per permutation of {1..k}."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    check_capacity(math.factorial(k) * len(g.edges), ORACLE_CAPACITY, "S_k-expansion")
    perms = list(permutations(range(1, k + 1)))
    edges = tuple((u, v, p) for u, v in g.sorted_edges() for p in perms)
    return PermutationGainGraph(g.n, k, edges)


def count_proper_set_colorings(phi: PermutationGainGraph, k: int | None = None) -> int:
    """Count assignments S_1..S_n of subsets of {1..k} with S_j != S_i.gain(e_ij) on every edge.

    One orientation per edge is checked: S_j != S_i.p holds exactly when
    S_i != S_j.p^-1.
    """
    if k is None:
        k = phi.k
    if k != phi.k:
        raise ValueError(f"gains act on 1..{phi.k}, not 1..{k}")
    check_capacity(2 ** (phi.n * k), ORACLE_CAPACITY, "gain-graph set-coloring enumeration")
    subsets = range(2**k)
    # image tables keyed by distinct gain
    tables = {}
    constraints = []
    for e in phi.edges:
        if e.gain not in tables:
            tables[e.gain] = [act_on_mask(m, e.gain) for m in subsets]
        constraints.append((e.i - 1, e.j - 1, tables[e.gain]))
    count = 0
    for masks in product(subsets, repeat=phi.n):
        if all(masks[j] != table[masks[i]] for i, j, table in constraints):
            count += 1
    return count


@dataclass(frozen=True)
class ProbeReport:
    lhs: int
    deleted: int
    contracted: int

    @property
    def rhs(self) -> int:
        return self.deleted - self.contracted

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def deletion_contraction_probe(g: SimpleGraph, e, k: int) -> ProbeReport:
    """Compare chi(G) with chi(G - e) - chi(G / e) for the set-coloring function."""
    minus = delete_edge(g, e)
    over = contract_edge(g, e)
    return ProbeReport(
        lhs=chromafn.set_chromatic(g, k),
        deleted=chromafn.set_chromatic(minus, k),
        contracted=chromafn.set_chromatic(over, k),
    )


def parse_gain_graph(text: str) -> PermutationGainGraph:
    """Read the gain-graph format.

    Header ``n k``, then one line ``i j p_1 ... p_k`` per edge, where
    p_1..p_k is the gain from i to j in one-line notation. Blank lines and
    ``#`` comments are skipped.
    """
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            fields = [int(f) for f in line.split()]
        except ValueError:
            raise GainGraphFormatError(f"line {lineno}: non-integer field: {raw!r}") from None
        if header is None:
            if len(fields) != 2 or min(fields) < 0:
                raise GainGraphFormatError(f"line {lineno}: expected header 'n k': {raw!r}")
            header = fields
            continue
        n, k = header
        if len(fields) != k + 2:
            raise GainGraphFormatError(
                f"line {lineno}: expected 'i j' and {k} permutation entries: {raw!r}"
            )
        i, j, gain = fields[0], fields[1], fields[2:]
        if not (1 <= i <= n and 1 <= j <= n):
            raise GainGraphFormatError(f"line {lineno}: vertex out of range 1..{n}: {raw!r}")
        if sorted(gain) != list(range(1, k + 1)):
            raise GainGraphFormatError(f"line {lineno}: gain is not a permutation of 1..{k}: {raw!r}")
        edges.append((i, j, tuple(gain)))
    if header is None:
        raise GainGraphFormatError("missing header 'n k'")
    return PermutationGainGraph(header[0], header[1], tuple(edges))


def format_gain_graph(phi: PermutationGainGraph) -> str:
    lines = [f"{phi.n} {phi.k}"]
    for e in phi.edges:
        lines.append(" ".join(str(x) for x in (e.i, e.j, *e.gain)))
    return "\n".join(lines) + "\n"
