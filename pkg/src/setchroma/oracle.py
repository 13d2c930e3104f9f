"""Brute-force counters used as ground truth.

Nothing in this module uses Mobius inversion or generating functions; each
count comes from enumerating every candidate assignment.
"""

from itertools import product

from .graph import SimpleGraph
from .limits import ORACLE_CAPACITY, check_capacity


def brute_force_set_coloring(g: SimpleGraph, k: int) -> int:
    """Enumerate all 2^(nk) subset assignments and count the proper ones."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    check_capacity(2 ** (g.n * k), ORACLE_CAPACITY, "set-coloring enumeration")
    size = [bin(m).count("1") for m in range(2**k)]
    edges = [(u - 1, v - 1) for u, v in g.sorted_edges()]
    count = 0
    for masks in product(range(2**k), repeat=g.n):
        if all(size[masks[u]] != size[masks[v]] for u, v in edges):
            count += 1
    return count


def brute_force_weighted(g: SimpleGraph, weights) -> int:
    """Sum prod_i weights[f(i)] over maps f: V -> indices that differ across edges."""
    weights = list(weights)
    check_capacity(len(weights) ** g.n, ORACLE_CAPACITY, "weighted coloring enumeration")
    edges = [(u - 1, v - 1) for u, v in g.sorted_edges()]
    total = 0
    for f in product(range(len(weights)), repeat=g.n):
        if all(f[u] != f[v] for u, v in edges):
            term = 1
            for c in f:
                term *= weights[c]
            total += term
    return total


def brute_force_urns(n: int, k: int) -> int:
    """n-tuples of subsets of {1..k} whose sizes are pairwise distinct."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    check_capacity(2 ** (n * k), ORACLE_CAPACITY, "urn enumeration")
    size = [bin(m).count("1") for m in range(2**k)]
    count = 0
    for masks in product(range(2**k), repeat=n):
        if len({size[m] for m in masks}) == n:
            count += 1
    return count


def brute_force_block_constant(n: int, partition, weights) -> int:
    """Sum prod_i weights[f(i)] over f: [n] -> indices constant on each block.

    No properness condition; this is the unconstrained sum over maps that
    factor through ``partition``.
    """
    weights = list(weights)
    check_capacity(len(weights) ** n, ORACLE_CAPACITY, "block-constant enumeration")
    block_of = {}
    for i, block in enumerate(partition):
        for v in block:
            block_of[v] = i
    if sorted(block_of) != list(range(1, n + 1)):
        raise ValueError("partition does not cover 1..n")
    total = 0
    for f in product(range(len(weights)), repeat=n):
        if any(f[u - 1] != f[v - 1] for u in block_of for v in block_of
               if u < v and block_of[u] == block_of[v]):
            continue
        term = 1
        for c in f:
            term *= weights[c]
        total += term
    return total


def chromatic_number(g: SimpleGraph) -> int:
    """Smallest number of colors in a proper vertex coloring, by exhaustive search."""
    if g.n == 0:
        return 0
    check_capacity(g.n**g.n, ORACLE_CAPACITY, "chromatic number search")
    edges = [(u - 1, v - 1) for u, v in g.sorted_edges()]
    for c in range(1, g.n + 1):
        for f in product(range(c), repeat=g.n):
            if all(f[u] != f[v] for u, v in edges):
                return c
    return g.n
