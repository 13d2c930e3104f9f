"""Set-coloring counts of graphs by Mobius inversion over connected partitions.

For a weight sequence alpha with power sums beta_r = sum_j alpha_j^r,

    chi_G(alpha) = sum_{p in Pi(G)} mu(bottom, p) prod_{B in p} beta_{|B|},

counts proper colorings f: V -> {0..k} weighted by prod_i alpha_{f(i)}.
Taking alpha_j = C(k, j) gives the number of proper set k-colorings, where
beta_r becomes the Franel sum Fr(k, r).
"""

import math

from .combinatorics import binomial, binomial_row, franel, power_sums
from .genfunc import as_weights
from .graph import BondLattice, SimpleGraph, connected_partitions


def _lattice_for(g: SimpleGraph, lattice: BondLattice | None) -> BondLattice:
    if lattice is None:
        return connected_partitions(g)
    if lattice.graph != g:
        raise ValueError("lattice was built for a different graph")
    return lattice


def mobius_sum(lattice: BondLattice, block_value) -> int:
    """sum_p mu(bottom, p) prod_B block_value[|B|]."""
    total = 0
    for p in lattice.elements:
        term = lattice.mobius[p]
        for b in p:
            term *= block_value[len(b)]
        total += term
    return total


def weighted_chromatic(g: SimpleGraph, weights, lattice: BondLattice | None = None) -> int:
    """Weighted count of proper colorings of ``g`` by the indices of ``weights``."""
    weights = as_weights(weights)
    lattice = _lattice_for(g, lattice)
    return mobius_sum(lattice, power_sums(weights, g.n))


def set_chromatic(g: SimpleGraph, k: int, lattice: BondLattice | None = None) -> int:
    """Number of proper set k-colorings of ``g``.

    Each vertex gets a subset of {1..k}; adjacent vertices may not get
    subsets of equal size.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    lattice = _lattice_for(g, lattice)
    fr = [k + 1] + [franel(k, r) for r in range(1, g.n + 1)]
    return mobius_sum(lattice, fr)


def partitioned_set_chromatic(g: SimpleGraph, sizes, lattice: BondLattice | None = None) -> int:
    """Colorings of ``g`` by elements of a set split into blocks of the given sizes.

    Adjacent vertices must take elements from different blocks.
    """
    sizes = as_weights(sizes)
    if any(s < 0 for s in sizes):
        raise ValueError("block sizes must be nonnegative")
    return weighted_chromatic(g, sizes, lattice)


def _chi0(k):
    return 1


def _chi1(k):
    return 2**k


def _chi2(k):
    return 2 ** (2 * k) - binomial(2 * k, k)


def _chi3(k):
    return 2 ** (3 * k) - 3 * 2**k * binomial(2 * k, k) + 2 * franel(k, 3)


def _chi_p3(k):
    return 2 ** (3 * k) - 2 * 2**k * binomial(2 * k, k) + franel(k, 3)


def _chi_empty(k, n):
    return 2 ** (n * k)


def _chi_top(k):
    # chi_{k+1}(k); the top nonzero urn count
    return math.factorial(k + 1) * math.prod(binomial_row(k))


CLOSED_FORMS = {
    "chi0": _chi0,
    "chi1": _chi1,
    "chi2": _chi2,
    "chi3": _chi3,
    "chiP3": _chi_p3,
    "chiEmpty": _chi_empty,
    "chiTop": _chi_top,
}


def closed_form_special(name: str, k: int, n: int | None = None) -> int:
    """Evaluate one of the closed-form special cases by name.

    ``chiEmpty`` (the edgeless graph on n vertices) needs ``n``; the others
    take only ``k``.
    """
    try:
        fn = CLOSED_FORMS[name]
    except KeyError:
        raise ValueError(f"unknown closed form {name!r}; choose from {sorted(CLOSED_FORMS)}") from None
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if name == "chiEmpty":
        if n is None or n < 0:
            raise ValueError("chiEmpty needs a vertex count n >= 0")
        return fn(k, n)
    return fn(k)
