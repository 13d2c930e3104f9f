"""Cross-checks between the formula routes and the brute-force oracles."""

from dataclasses import dataclass, field
from itertools import combinations, permutations
import random

from . import chromafn, gaingraph, genfunc, oracle
from .graph import SimpleGraph, complete_graph, connected_partitions, disjoint_union


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def compare(self, label, got, expected):
        self.checked += 1
        if got != expected:
            self.mismatches.append((label, got, expected))


def all_graphs(n: int) -> list[SimpleGraph]:
    """Every labelled simple graph on 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    out = []
    for bits in range(2 ** len(pairs)):
        out.append(SimpleGraph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1)))
    return out


def canonical_form(g: SimpleGraph) -> tuple:
    """Lexicographically least sorted edge list over all relabellings."""
    best = None
    for perm in permutations(range(1, g.n + 1)):
        edges = sorted((min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
                       for u, v in g.edges)
        key = tuple(edges)
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def graphs_up_to_isomorphism(n: int, connected: bool = False) -> list[SimpleGraph]:
    """One representative per isomorphism class, in a fixed order."""
    seen = {}
    for g in all_graphs(n):
        if connected and not g.is_connected():
            continue
        key = canonical_form(g)
        if key not in seen:
            seen[key] = SimpleGraph(n, frozenset(key))
    return [seen[key] for key in sorted(seen, key=lambda e: (len(e), e))]


def random_graphs(count: int, seed: int, max_n: int = 5, p: float = 0.5) -> list[SimpleGraph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
        out.append(SimpleGraph(n, frozenset(edges)))
    return out


def random_weights(count: int, seed: int, max_k: int = 3, max_weight: int = 5) -> list[tuple[int, ...]]:
    """Nonnegative weight sequences of length 1..max_k+1; zeros occur often."""
    rng = random.Random(seed)
    return [
        tuple(rng.randint(0, max_weight) for _ in range(rng.randint(1, max_k + 1)))
        for _ in range(count)
    ]


def check_set_coloring(max_n: int, max_k: int, seed: int, n_random: int = 50) -> CheckResult:
    res = CheckResult("set coloring: Mobius sum = brute force")
    graphs = [g for n in range(1, max_n + 1) for g in graphs_up_to_isomorphism(n, connected=True)]
    graphs += random_graphs(n_random, seed, max_n)
    for g in graphs:
        lattice = connected_partitions(g)
        for k in range(max_k + 1):
            res.compare((g.n, g.sorted_edges(), k),
                        chromafn.set_chromatic(g, k, lattice),
                        oracle.brute_force_set_coloring(g, k))
    return res


def check_weighted(max_n: int, max_k: int, seed: int, n_weights: int = 20) -> CheckResult:
    res = CheckResult("weighted coloring: Mobius sum = brute force")
    weight_list = random_weights(n_weights, seed, max_k)
    weight_list += [w for w in [(0,), (0, 3), (2, 0, 1), (0, 0, 0, 1)] if len(w) <= max_k + 1]
    for n in range(1, max_n + 1):
        for g in graphs_up_to_isomorphism(n):
            lattice = connected_partitions(g)
            for w in weight_list:
                res.compare((g.n, g.sorted_edges(), w),
                            chromafn.weighted_chromatic(g, w, lattice),
                            oracle.brute_force_weighted(g, w))
    return res


def check_urns(max_n: int, max_k: int) -> CheckResult:
    res = CheckResult("urns: generating function = brute force = Mobius sum on K_n")
    for k in range(max_k + 1):
        counts = genfunc.urn_counts(k, max_n)
        for n in range(max_n + 1):
            res.compare(("brute", n, k), counts[n], oracle.brute_force_urns(n, k))
            res.compare(("mobius", n, k), counts[n], chromafn.set_chromatic(complete_graph(n), k))
    return res


def check_gain_expansion(max_n: int, max_k: int) -> CheckResult:
    res = CheckResult("gain graphs: S_k-expansion count = set coloring")
    for n in range(1, max_n + 1):
        for g in graphs_up_to_isomorphism(n, connected=True):
            for k in range(max_k + 1):
                res.compare((g.n, g.sorted_edges(), k),
                            gaingraph.count_proper_set_colorings(gaingraph.sk_expansion(g, k), k),
                            chromafn.set_chromatic(g, k))
    return res


def check_multiplicativity(max_n: int, max_k: int) -> CheckResult:
    res = CheckResult("multiplicativity over disjoint unions")
    for n in range(2, max_n + 1):
        for n1 in range(1, n // 2 + 1):
            for g1 in graphs_up_to_isomorphism(n1):
                for g2 in graphs_up_to_isomorphism(n - n1):
                    g = disjoint_union(g1, g2)
                    for k in range(max_k + 1):
                        res.compare((g1.sorted_edges(), g2.sorted_edges(), k),
                                    chromafn.set_chromatic(g, k),
                                    chromafn.set_chromatic(g1, k) * chromafn.set_chromatic(g2, k))
    return res


def kn_mobius_product(p) -> int:
    out = 1
    for b in p:
        s = len(b)
        f = 1
        for i in range(2, s):
            f *= i
        out *= (-1) ** (s - 1) * f
    return out


def check_mobius_kn(max_n: int) -> CheckResult:
    res = CheckResult("Mobius values on K_n = signed factorial product")
    for n in range(max_n + 1):
        lattice = connected_partitions(complete_graph(n))
        for p in lattice.elements:
            res.compare((n, p), lattice.mobius[p], kn_mobius_product(p))
    return res


def run_all(max_n: int = 5, max_k: int = 3, seed: int = 0) -> list[CheckResult]:
    """Run every sweep.

    The weighted and gain-graph sweeps run one vertex smaller than ``max_n``
    and the K_n Mobius sweep two vertices larger, matching their costs.
    """
    return [
        check_set_coloring(max_n, max_k, seed),
        check_weighted(max_n - 1, max_k, seed),
        check_urns(max_n, max_k),
        check_gain_expansion(max_n - 1, max_k),
        check_multiplicativity(max_n, max_k),
        check_mobius_kn(max_n + 2),
    ]
