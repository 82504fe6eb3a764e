"""Ehrhart polynomials of descent polytopes.

Words of length ``n - 1`` index ``n``-dimensional polytopes, so the
coefficient of the empty word in the series ``A``, ``B`` and ``I`` is the
count for ``n = 1``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import NCSeries
from .geometry import halfspace_system
from .words import XYWord, as_word, composition_of

NAIVE_CAP = 10 ** 8
SERIES_TRUNC_CAP = 12
STAGES = ("A", "B", "I")


def count_lattice_points(v: str, r: int, method: str = "dp") -> int:
    """Number of integer points in ``r * DP_v``.

    ``method="dp"`` sweeps the coordinates keeping, for every value of the
    current coordinate, the number of admissible prefixes.  ``"naive"`` tests
    every point of ``{0..r}^n`` against the inequalities.
    """
    v = as_word(v)
    if r < 0:
        raise ValueError("dilation factor must be non-negative")
    if method == "naive":
        n = v.n
        if (r + 1) ** n > NAIVE_CAP:
            raise ValueError(f"(r+1)^n = {(r + 1) ** n} exceeds the naive cap {NAIVE_CAP}")
        system = halfspace_system(v)
        scaled = [(a, b * r) for a, b in system.inequalities]
        return sum(1 for p in itertools.product(range(r + 1), repeat=n)
                   if all(sum(c * q for c, q in zip(a, p)) <= b for a, b in scaled))
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    ways = [1] * (r + 1)
    for c in v:
        if c == "x":  # next >= current
            ways = list(itertools.accumulate(ways))
        else:  # next <= current
            ways = list(itertools.accumulate(reversed(ways)))[::-1]
    return sum(ways)


@dataclass(frozen=True)
class RWordCount:
    """r-words of length ``n`` whose descent set is contained in (``alpha``) or
    equal to (``beta``) the set encoded by ``word``."""

    word: XYWord
    r: int
    alpha: int
    beta: int

    @property
    def alpha_closed_form(self) -> int:
        return alpha_from_composition(self.word, self.r)


def alpha_from_composition(v: str, r: int) -> int:
    """Product of ``binom(r + g, g)`` over the parts ``g`` of the composition of ``v``."""
    return math.prod(math.comb(r + g, g) for g in composition_of(v))


def rword_counts(v: str, r: int) -> RWordCount:
    v = as_word(v)
    if r < 0:
        raise ValueError("r must be non-negative")
    alpha = [1] * (r + 1)
    beta = [1] * (r + 1)
    for c in v:
        if c == "x":  # w_i <= w_{i+1} for both counts
            alpha = list(itertools.accumulate(alpha))
            beta = list(itertools.accumulate(beta))
        else:  # alpha: unconstrained; beta: strict descent w_i > w_{i+1}
            total = sum(alpha)
            alpha = [total] * (r + 1)
            above = list(itertools.accumulate(reversed(beta)))[::-1]
            beta = above[1:] + [0]
    return RWordCount(v, r, sum(alpha), sum(beta))


def q_series(r: int, max_deg: int) -> list[int]:
    """Coefficients of ``x^0..x^max_deg`` in ``Q_r(x) = sum_{j>=1} binom(r+j, j) x^(j-1)``."""
    if r < 0 or max_deg < 0:
        raise ValueError("r and max_deg must be non-negative")
    return [math.comb(r + j, j) for j in range(1, max_deg + 2)]


def _q_of(s: NCSeries, r: int) -> NCSeries:
    """``Q_r(s)`` for a series ``s`` without constant term (Horner scheme)."""
    coeffs = q_series(r, s.trunc)
    acc = NCSeries(s.trunc, {"": coeffs[-1]})
    for c in reversed(coeffs[:-1]):
        acc = s * acc + c
    return acc


def ehrhart_series(r: int, trunc: int, stage: str = "I") -> NCSeries:
    """``A`` counts alpha, ``B`` counts beta, ``I`` counts lattice points.

    ``A = Q_r(x) (1 - y Q_r(x))^{-1}``, ``B`` is ``A`` with ``x -> x - y``, and
    ``I = (1-y)^{-1} Q_r(s) (1 - y (1-y)^{-1} Q_r(s))^{-1}`` with
    ``s = (x - y)(1-y)^{-1}``.
    """
    if stage not in STAGES:
        raise ValueError(f"stage must be one of {STAGES}")
    if trunc > SERIES_TRUNC_CAP:
        raise ValueError(f"truncation {trunc} exceeds cap {SERIES_TRUNC_CAP}")
    if r < 0:
        raise ValueError("r must be non-negative")
    x = NCSeries.monomial("x", trunc)
    y = NCSeries.monomial("y", trunc)
    if stage == "A":
        q = _q_of(x, r)
        return q * (y * q).geom_inverse()
    if stage == "B":
        q = _q_of(x - y, r)
        return q * (y * q).geom_inverse()
    y_star = y.geom_inverse()
    q = _q_of((x - y) * y_star, r)
    return y_star * q * ((y * y_star) * q).geom_inverse()


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def interpolate(points: list[tuple[int, int]]) -> list[Fraction]:
    """Lagrange interpolation; coefficients from the constant term upwards."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = _poly_mul(basis, [Fraction(-xj), Fraction(1)])
                denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += b * yi / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class EhrhartPoly:
    word: XYWord
    coefficients: tuple[Fraction, ...]  # constant term first

    @property
    def n(self) -> int:
        return len(self.word) + 1

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    def __call__(self, r) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * r + c
        return total

    def to_dict(self) -> dict:
        return {
            "word": self.word.literal,
            "ehrhart": [str(c) for c in reversed(self.coefficients)],
            "beta": descent_statistic(self.word),
            "volume": str(self.leading),
        }


def ehrhart_polynomial(v: str) -> EhrhartPoly:
    """Interpolate from ``r = 0..n`` and confirm on ``r = n+1..2n``."""
    v = as_word(v)
    if len(v) > 12:
        raise ValueError("word length exceeds cap 12")
    n = v.n
    coeffs = interpolate([(r, count_lattice_points(v, r)) for r in range(n + 1)])
    poly = EhrhartPoly(v, tuple(coeffs))
    if poly.degree != n:
        raise ArithmeticError(f"interpolated degree {poly.degree} != {n} for {v.literal}")
    if any(math.factorial(n) % c.denominator for c in coeffs):
        raise ArithmeticError(f"denominators of {coeffs} do not divide {n}!")
    for r in range(n + 1, 2 * n + 1):
        if poly(r) != count_lattice_points(v, r):
            raise ArithmeticError(f"interpolant disagrees with the lattice count at r={r}")
    return poly


def descent_statistic(v: str, method: str = "auto") -> int:
    """Number of permutations of ``[n]`` with descent set encoded by ``v``.

    ``"brute"`` scans all ``n!`` permutations (``n <= 10``); ``"dp"`` tracks
    the relative rank of the last entry (``n <= 16``).
    """
    v = as_word(v)
    n = v.n
    if method == "auto":
        method = "brute" if n <= 8 else "dp"
    if method == "brute":
        if n > 10:
            raise ValueError("brute-force descent statistic is capped at n = 10")
        want = tuple(c == "y" for c in v)
        return sum(1 for p in itertools.permutations(range(n))
                   if tuple(a > b for a, b in zip(p, p[1:])) == want)
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    if n > 16:
        raise ValueError("descent statistic is capped at n = 16")
    # ways[j]: arrangements of the first i entries whose last one has rank j
    ways = [1]
    for c in v:
        i = len(ways)
        prefix = [0] + list(itertools.accumulate(ways))
        if c == "y":  # new last entry smaller: previous rank j >= new rank k
            ways = [prefix[i] - prefix[k] for k in range(i + 1)]
        else:
            ways = [prefix[k] for k in range(i + 1)]
    return sum(ways)
