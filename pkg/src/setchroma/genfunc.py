"""Products of linear factors and the coefficient sequences they generate.

The urn numbers chi_n(k) are n! times the coefficient of t^n in
prod_{j=0..k} (1 + C(k, j) t); a general weight sequence replaces the
binomials.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .combinatorics import binomial_row


def as_weights(weights) -> tuple[int, ...]:
    """Validate a finite weight sequence of exact integers."""
    out = []
    for w in weights:
        if isinstance(w, bool) or not isinstance(w, int):
            raise TypeError(f"weights must be integers, got {w!r}")
        out.append(w)
    return tuple(out)


@dataclass(frozen=True)
class CoefficientPolynomial:
    """Dense integer polynomial c_0 + c_1 t + ... + c_d t^d."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (0,)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(n)
        return self.coeffs[n] if n < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __mul__(self, other: "CoefficientPolynomial") -> "CoefficientPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CoefficientPolynomial(tuple(out))

    def padded(self, n_max: int) -> list[int]:
        """Coefficients of t^0..t^n_max, zero-filled past the degree."""
        return [self[n] for n in range(n_max + 1)]


def product_linear_factors(weights) -> CoefficientPolynomial:
    """Expand prod_j (1 + weights[j] t).

    The coefficient of t^n is the elementary symmetric polynomial e_n of
    the weights. Zero weights contribute the factor 1.
    """
    coeffs = [1]
    for a in as_weights(weights):
        if a == 0:
            continue
        # multiply in place by (1 + a t), highest degree first
        coeffs.append(0)
        for n in range(len(coeffs) - 1, 0, -1):
            coeffs[n] += a * coeffs[n - 1]
    return CoefficientPolynomial(tuple(coeffs))


def weighted_injective_counts(weights, n_max: int) -> list[int]:
    """chi_n(alpha) for n = 0..n_max.

    chi_n(alpha) sums prod_i alpha_{f(i)} over injections f: [n] -> indices,
    which is n! e_n(alpha).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    poly = product_linear_factors(weights)
    return [math.factorial(n) * poly[n] for n in range(n_max + 1)]


def urn_counts(k: int, n_max: int) -> list[int]:
    """(chi_0(k), ..., chi_{n_max}(k)): urns filled with distinct-size color sets."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return weighted_injective_counts(binomial_row(k), n_max)


def urn_grid(k_max: int, n_max: int) -> list[list[int]]:
    """Rows n = 0..n_max, columns k = 0..k_max."""
    columns = [urn_counts(k, n_max) for k in range(k_max + 1)]
    return [[col[n] for col in columns] for n in range(n_max + 1)]


def is_log_concave(seq) -> bool:
    """Check a_i^2 >= a_{i-1} a_{i+1} at every interior index.

    Positions after the last nonzero entry are ignored, so trailing zeros
    never make a sequence fail.
    """
    seq = list(seq)
    for a in seq:
        if a < 0:
            raise ValueError(f"log-concavity is only checked for nonnegative sequences, got {a}")
    while seq and seq[-1] == 0:
        seq.pop()
    return all(seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1))


def argmax_indices(seq) -> list[int]:
    seq = list(seq)
    top = max(seq)
    return [i for i, a in enumerate(seq) if a == top]


@dataclass(frozen=True)
class ModeEstimate:
    M: Fraction
    candidates: tuple[int, ...]


def darroch_mode_estimate(weights) -> ModeEstimate:
    """Locate the largest coefficient of prod_j (1 + alpha_j t).

    With M = (k + 1) - sum_j 1 / (1 + alpha_j), the index of the largest
    coefficient e_n is one of the two integers nearest M (floor and ceiling),
    and equals M when M is an integer. M is kept as an exact fraction.
    """
    weights = as_weights(weights)
    if any(a < 0 for a in weights):
        raise ValueError("the mode estimate needs nonnegative weights")
    M = len(weights) - sum((Fraction(1, 1 + a) for a in weights), Fraction(0))
    if M.denominator == 1:
        return ModeEstimate(M, (int(M),))
    lo = math.floor(M)
    return ModeEstimate(M, (lo, lo + 1))
