"""Exact integer primitives: binomial and Gaussian coefficients, Franel sums.

Every function returns a Python ``int``; nothing here touches floats.
"""

import math


def binomial(n: int, j: int) -> int:
    """C(n, j), zero when ``j`` is outside ``0..n``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


def binomial_row(n: int) -> list[int]:
    """The full row C(n, 0), ..., C(n, n)."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    return [math.comb(n, j) for j in range(n + 1)]


def gaussian_binomial(k: int, j: int, q: int) -> int:
    """Number of ``j``-dimensional subspaces of GF(q)^k.

    Uses the q-factorial quotient
    prod_{i<j} (q^(k-i) - 1) / (q^(i+1) - 1), with exact division at the end.
    """
    if k < 0:
        raise ValueError(f"gaussian_binomial needs k >= 0, got k={k}")
    if q < 2:
        raise ValueError(f"gaussian_binomial needs an integer q >= 2, got q={q}")
    if j < 0 or j > k:
        return 0
    j = min(j, k - j)
    num = 1
    den = 1
    for i in range(j):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def franel(k: int, r: int) -> int:
    """Extended Franel number: sum of C(k, j)^r over j = 0..k."""
    if k < 0 or r < 0:
        raise ValueError(f"franel needs k, r >= 0, got k={k}, r={r}")
    return sum(c**r for c in binomial_row(k))


def power_sums(weights, r_max: int) -> list[int]:
    """[beta_0, ..., beta_{r_max}] with beta_r = sum_j weights[j]**r.

    ``beta_0`` counts every weight, including zeros.
    """
    weights = list(weights)
    sums = [len(weights)]
    powers = [1] * len(weights)
    for _ in range(r_max):
        powers = [p * w for p, w in zip(powers, weights)]
        sums.append(sum(powers))
    return sums
