"""f-polynomials of descent polytopes.

``F_v(t) = sum_i f_i t^i`` counts the non-empty faces of ``DP_v`` by
dimension, the polytope itself included.  Four independent routes are
provided (subset sum, K/L recurrence, factorizations, series coefficient);
:mod:`descent_polytopes.geometry` supplies a fifth, geometric one.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .algebra import TPoly, phi_series
from .words import (
    XYWord,
    alternating_word,
    as_word,
    count_alternating_subwords,
    enumerate_factorizations,
    kappa,
)

#: subset-sum and factorization routes enumerate 2^|v| objects
EXPONENTIAL_CAP = 20

T1 = TPoly({0: 1, 1: 1})  # t + 1
SEGMENT = TPoly({0: 2, 1: 1})  # t + 2


@dataclass(frozen=True)
class FPolynomial:
    """The f-polynomial of ``DP_word``; ``poly`` has degree ``n = |word| + 1``."""

    poly: TPoly
    word: XYWord

    def __post_init__(self):
        if not self.poly.is_polynomial():
            raise ValueError(f"f-polynomial of {self.word.literal} has negative exponents: {self.poly}")
        if self.poly.degree != self.n:
            raise ValueError(f"f-polynomial of {self.word.literal} has degree {self.poly.degree}, expected {self.n}")

    @property
    def n(self) -> int:
        return len(self.word) + 1

    @property
    def f_vector(self) -> list[int]:
        return self.poly.coefficients()

    def __call__(self, at) -> Fraction:
        return self.poly.evaluate(at)

    def __eq__(self, other) -> bool:
        if isinstance(other, FPolynomial):
            return self.word == other.word and self.poly == other.poly
        return self.poly == other

    __hash__ = object.__hash__

    def to_dict(self) -> dict:
        return {"word": self.word.literal, "n": self.n, "f_vector": self.f_vector,
                "kappa": kappa(self.word)}


def _check_cap(v: str, cap: int = EXPONENTIAL_CAP) -> None:
    if len(v) > cap:
        raise ValueError(f"word length {len(v)} exceeds cap {cap}")


def subset_term(k: int, size: int) -> TPoly:
    """``((t+1)/t)^k * t^(size+1)`` as a Laurent polynomial."""
    return (T1 ** k).shift(size + 1 - k)


def f_direct(v: str) -> FPolynomial:
    """Sum over all position subsets ``T`` of ``((t+1)/t)^kappa(v^T) t^(|T|+1)``, plus one."""
    v = as_word(v)
    _check_cap(v)
    # group subsets by (kappa, |T|); the power computation is then shared
    counts: Counter[tuple[int, int]] = Counter()
    m = len(v)
    letters = str(v)
    for size in range(m + 1):
        for t in itertools.combinations(range(m), size):
            counts[kappa("".join(letters[i] for i in t)), size] += 1
    total = TPoly.const(1)
    for (k, size), c in counts.items():
        total = total + subset_term(k, size) * c
    return FPolynomial(total, v)


def kl_pair(v: str) -> tuple[TPoly, TPoly]:
    """``(K_v, L_v)``, splitting the subset sum by the first letter of ``v^T``.

    Letters are prepended one at a time scanning ``v`` right to left:
    ``K_{yv} = K_v``, ``L_{xv} = L_v``, ``K_{xv} = L_{yv} = (t+1)(K_v + L_v + t + 1)``.
    """
    k, l = TPoly(), TPoly()
    for c in reversed(str(as_word(v))):
        grown = T1 * (k + l + T1)
        if c == "x":
            k = grown
        else:
            l = grown
    return k, l


def f_recurrence(v: str) -> FPolynomial:
    v = as_word(v)
    k, l = kl_pair(v)
    return FPolynomial(k + l + SEGMENT, v)


def factorization_exponents(v: str) -> Counter[int]:
    """Multiset of the number of factors ``k`` over all admissible factorizations."""
    _check_cap(v)
    return Counter(len(f) for f in enumerate_factorizations(v))


def f_factorization(v: str) -> FPolynomial:
    v = as_word(v)
    total = TPoly.const(1)
    for k, c in factorization_exponents(v).items():
        total = total + (T1 ** k) * c
    return FPolynomial(total, v)


def f_phi(v: str, series=None) -> FPolynomial:
    """Coefficient of ``v`` in the generating series; pass ``series`` to reuse one."""
    v = as_word(v)
    if series is None or series.trunc < len(v):
        series = phi_series(len(v))
    return FPolynomial(series.coeff(v), v)


def facet_count(v: str) -> int:
    """``n - 1 + kappa(v)``; meaningful for ``|v| >= 1`` (the segment has 2 facets)."""
    v = as_word(v)
    if not v:
        raise ValueError("facet formula applies to words of length >= 1")
    return len(v) + kappa(v)


def vertex_count(v: str) -> int:
    return 1 + count_alternating_subwords(v)


def f_alternating(n: int) -> FPolynomial:
    """f-polynomial of ``DP_{z_{n-1}}`` from compositions of ``n`` whose parts,
    except the last, are 1 or 2.

    ``P[m]`` sums ``(t+1)^(#parts)`` over sequences of 1s and 2s with total ``m``;
    the last part then takes ``n - m >= 1``.
    """
    if not 1 <= n <= 30:
        raise ValueError("n must lie in 1..30")
    p = [TPoly.const(1)]
    for m in range(1, n):
        prev = p[m - 1] + (p[m - 2] if m >= 2 else TPoly())
        p.append(T1 * prev)
    total = TPoly.const(1)
    for pm in p:
        total = total + pm * T1
    return FPolynomial(total, alternating_word(n - 1))


def _series_mul(a: list, b: list, size: int) -> list:
    out = [Fraction(0)] * size
    for i, ai in enumerate(a[:size]):
        if ai:
            for j, bj in enumerate(b[:size - i]):
                out[i + j] += ai * bj
    return out


def _series_inv(a: list, size: int) -> list:
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    out = [Fraction(0)] * size
    out[0] = 1 / Fraction(a[0])
    for k in range(1, size):
        acc = sum((a[j] * out[k - j] for j in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out[k] = -acc * out[0]
    return out


def alternating_gf(max_n: int, t_value) -> list[Fraction]:
    """Coefficients of ``x^1..x^max_n`` in
    ``x/(1-x) + (t+1) x / ((1-x)(1 - (t+1)(x + x^2)))`` at ``t = t_value``.
    """
    if not 1 <= max_n <= 40:
        raise ValueError("max_n must lie in 1..40")
    c = Fraction(t_value) + 1
    size = max_n + 1
    x_over = [Fraction(0)] + [Fraction(1)] * max_n  # x/(1-x)
    denom = [Fraction(1), -c, -c] + [Fraction(0)] * max(0, size - 3)
    tail = _series_mul(_series_inv(denom, size), x_over, size)
    total = [a + c * b for a, b in zip(x_over, tail)]
    return total[1:]
