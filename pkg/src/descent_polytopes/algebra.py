"""Exact coefficient arithmetic.

:class:`TPoly` is a Laurent polynomial in ``t`` with integer coefficients.
:class:`NCSeries` is a formal power series in the non-commuting letters
``x`` and ``y``, truncated at a fixed word length, with coefficients in
either ``Z[t]`` (:class:`TPoly`) or ``Z`` (plain ``int``).
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Union

#: default truncation cap for the f-polynomial series
PHI_TRUNC_CAP = 14


class TPoly:
    """Laurent polynomial in ``t`` over the integers.

    Stored as a dict ``{exponent: coefficient}`` with no zero entries.
    Instances are treated as immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {e: c for e, c in (coeffs or {}).items() if c}
        self._hash = None

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> "TPoly":
        """Coefficients listed from exponent ``low`` upwards."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def const(cls, c: int) -> "TPoly":
        return cls({0: c})

    @classmethod
    def t(cls, power: int = 1) -> "TPoly":
        return cls({power: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._c)

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    @property
    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no low degree")
        return min(self._c)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    def coefficients(self) -> list[int]:
        """Dense list ``[c_0, c_1, ..., c_deg]``; requires no negative exponents."""
        if not self._c:
            return []
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative exponents")
        return [self._c.get(e, 0) for e in range(self.degree + 1)]

    # ring operations

    def __add__(self, other) -> "TPoly":
        other = _lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other) -> "TPoly":
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TPoly":
        return (-self) + other

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, int):
            return TPoly({e: c * other for e, c in self._c.items()}) if other else TPoly()
        other = _lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = defaultdict(int)
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] += c1 * c2
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TPoly":
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._c.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return TPoly({-e * -k: c ** -k})
        result = TPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "TPoly":
        """Multiply by ``t**k``."""
        return TPoly({e + k: c for e, c in self._c.items()})

    def exact_div(self, other: "TPoly") -> "TPoly":
        """Exact division; raises ``ValueError`` if there is a remainder."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return TPoly()
        rem = dict(self._c)
        floor = self.low_degree - other.low_degree
        top_e, lead = other.degree, other._c[other.degree]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            e = top - top_e
            q, r = divmod(rem[top], lead)
            if r or e < floor:
                raise ValueError(f"{other} does not divide {self}")
            quot[e] = q
            for e2, c2 in other._c.items():
                c = rem.get(e + e2, 0) - q * c2
                if c:
                    rem[e + e2] = c
                else:
                    rem.pop(e + e2, None)
        return TPoly(quot)

    def __call__(self, at) -> Fraction:
        return self.evaluate(at)

    def evaluate(self, at) -> Fraction:
        at = Fraction(at)
        if at == 0 and any(e < 0 for e in self._c):
            raise ZeroDivisionError("negative exponent evaluated at t = 0")
        return sum((c * at ** e for e, c in self._c.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        other = _lift(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"TPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            parts.append(("-" if c < 0 else "+", body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def to_pairs(self) -> list[list[int]]:
        """Sorted ``[exponent, coefficient]`` pairs, for serialisation."""
        return [[e, self._c[e]] for e in sorted(self._c)]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "TPoly":
        return cls({e: c for e, c in pairs})


def _lift(x) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, int):
        return TPoly.const(x)
    return NotImplemented


T = TPoly.t()
ONE = TPoly.const(1)


def tpoly_arith(a: TPoly, b: TPoly, op: str) -> TPoly:
    ops = {"add": TPoly.__add__, "sub": TPoly.__sub__, "mul": TPoly.__mul__}
    try:
        return ops[op](a, b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def tpoly_eval(p: TPoly, at) -> Fraction:
    return p.evaluate(at)


Coeff = Union[TPoly, int]

RINGS = ("Z[t]", "Z")


class NCSeries:
    """Truncated series in non-commuting ``x``, ``y``.

    ``terms`` maps words (plain strings over ``{x, y}``) of length at most
    ``trunc`` to non-zero coefficients.  ``ring`` is ``"Z[t]"`` or ``"Z"``.
    Every operation is exact modulo words longer than ``trunc``.
    """

    __slots__ = ("trunc", "ring", "terms")

    def __init__(self, trunc: int, terms: Mapping[str, Coeff] | None = None, ring: str = "Z"):
        if ring not in RINGS:
            raise ValueError(f"unknown coefficient ring {ring!r}")
        if trunc < 0:
            raise ValueError("truncation degree must be non-negative")
        self.trunc = trunc
        self.ring = ring
        self.terms: dict[str, Coeff] = {}
        for w, c in (terms or {}).items():
            w = str.__str__(w)
            if len(w) <= trunc and c:
                self.terms[w] = self._convert(c)

    def _convert(self, c: Coeff) -> Coeff:
        if self.ring == "Z[t]":
            return c if isinstance(c, TPoly) else TPoly.const(c)
        if not isinstance(c, int):
            raise TypeError(f"coefficient {c!r} is not an integer")
        return c

    @property
    def zero_coeff(self) -> Coeff:
        return TPoly() if self.ring == "Z[t]" else 0

    # constructors

    @classmethod
    def one(cls, trunc: int, ring: str = "Z") -> "NCSeries":
        return cls(trunc, {"": 1}, ring)

    @classmethod
    def monomial(cls, word: str, trunc: int, coeff: Coeff = 1, ring: str = "Z") -> "NCSeries":
        return cls(trunc, {word: coeff}, ring)

    @classmethod
    def all_words(cls, trunc: int, ring: str = "Z") -> "NCSeries":
        """The series ``sum_v v`` = ``1/(1 - x - y)``."""
        return cls.monomial("x", trunc, ring=ring).__add__(
            cls.monomial("y", trunc, ring=ring)).geom_inverse()

    # access

    def coeff(self, word: str) -> Coeff:
        if len(word) > self.trunc:
            raise ValueError(f"word of length {len(word)} beyond truncation {self.trunc}")
        return self.terms.get(str.__str__(word), self.zero_coeff)

    def __getitem__(self, word: str) -> Coeff:
        return self.coeff(word)

    def constant_term(self) -> Coeff:
        return self.terms.get("", self.zero_coeff)

    def __len__(self) -> int:
        return len(self.terms)

    def _check(self, other: "NCSeries") -> None:
        if not isinstance(other, NCSeries):
            raise TypeError(f"expected NCSeries, got {type(other).__name__}")
        if other.trunc != self.trunc:
            raise ValueError(f"truncation mismatch: {self.trunc} vs {other.trunc}")
        if other.ring != self.ring:
            raise ValueError(f"coefficient ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other) -> "NCSeries":
        if isinstance(other, NCSeries):
            self._check(other)
            return other
        return NCSeries(self.trunc, {"": other}, self.ring)

    # arithmetic

    def __add__(self, other) -> "NCSeries":
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NCSeries(self.trunc, out, self.ring)

    __radd__ = __add__

    def __neg__(self) -> "NCSeries":
        return NCSeries(self.trunc, {w: -c for w, c in self.terms.items()}, self.ring)

    def __sub__(self, other) -> "NCSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "NCSeries":
        return self._lift(other) - self

    def scale(self, c: Coeff) -> "NCSeries":
        """Multiply every coefficient by a central scalar."""
        return NCSeries(self.trunc, {w: a * c for w, a in self.terms.items()}, self.ring)

    def __mul__(self, other) -> "NCSeries":
        if not isinstance(other, NCSeries):
            return self.scale(self._convert(other))
        self._check(other)
        by_len = _bucket(other.terms)
        out: dict[str, Coeff] = {}
        for w1, c1 in self.terms.items():
            room = self.trunc - len(w1)
            for m in range(room + 1):
                for w2, c2 in by_len.get(m, ()):
                    w = w1 + w2
                    p = c1 * c2
                    out[w] = out[w] + p if w in out else p
        return NCSeries(self.trunc, out, self.ring)

    def __rmul__(self, other) -> "NCSeries":
        return self.scale(self._convert(other))

    def geom_inverse(self) -> "NCSeries":
        """``(1 - self)^{-1} = sum_j self^j``; needs a zero constant term.

        Solved length by length from ``g = 1 + self * g``.
        """
        if self.constant_term():
            raise ValueError("geometric inverse needs a zero constant term")
        s_len = _bucket(self.terms)
        one = 1 if self.ring == "Z" else TPoly.const(1)
        g_len: dict[int, list[tuple[str, Coeff]]] = {0: [("", one)]}
        for length in range(1, self.trunc + 1):
            acc: dict[str, Coeff] = {}
            for k in range(1, length + 1):
                for w1, c1 in s_len.get(k, ()):
                    for w2, c2 in g_len.get(length - k, ()):
                        w = w1 + w2
                        p = c1 * c2
                        acc[w] = acc[w] + p if w in acc else p
            g_len[length] = [(w, c) for w, c in acc.items() if c]
        return NCSeries(self.trunc, {w: c for items in g_len.values() for w, c in items}, self.ring)

    def swap_letters(self) -> "NCSeries":
        """Image under the substitution ``x <-> y``."""
        table = str.maketrans("xy", "yx")
        return NCSeries(self.trunc, {w.translate(table): c for w, c in self.terms.items()}, self.ring)

    def truncate(self, trunc: int) -> "NCSeries":
        if trunc > self.trunc:
            raise ValueError("cannot raise the truncation degree")
        return NCSeries(trunc, self.terms, self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (self.trunc, self.ring, self.terms) == (other.trunc, other.ring, other.terms)

    def __repr__(self) -> str:
        return f"NCSeries(trunc={self.trunc}, ring={self.ring!r}, terms={len(self.terms)})"

    def to_json(self) -> str:
        """Word -> coefficient map; words spelled with ``1`` for the empty word."""
        def enc(c):
            return c.to_pairs() if isinstance(c, TPoly) else c
        ordered = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return json.dumps({"trunc": self.trunc, "ring": self.ring,
                           "terms": {(w or "1"): enc(c) for w, c in ordered}})


def _bucket(terms: Mapping[str, Coeff]) -> dict[int, list[tuple[str, Coeff]]]:
    out: dict[int, list[tuple[str, Coeff]]] = defaultdict(list)
    for w, c in terms.items():
        out[len(w)].append((w, c))
    return out


def nc_mul(p: NCSeries, q: NCSeries) -> NCSeries:
    return p * q


def nc_geom_inverse(s: NCSeries) -> NCSeries:
    return s.geom_inverse()


def nc_coeff(s: NCSeries, v: str) -> Coeff:
    return s.coeff(v)


def phi_series(trunc: int, cap: int = PHI_TRUNC_CAP) -> NCSeries:
    """Generating series of the f-polynomials, from its rational closed form.

    ``(1 + (t+1) / (1 - (t+1)((1-y)^{-1} x + (1-x)^{-1} y))) / (1 - x - y)``
    """
    if trunc > cap:
        raise ValueError(f"truncation {trunc} exceeds cap {cap}")
    ring = "Z[t]"
    x = NCSeries.monomial("x", trunc, ring=ring)
    y = NCSeries.monomial("y", trunc, ring=ring)
    t1 = TPoly({1: 1, 0: 1})
    shaped = y.geom_inverse() * x + x.geom_inverse() * y
    inner = shaped.scale(t1).geom_inverse().scale(t1)
    return (NCSeries.one(trunc, ring) + inner) * NCSeries.all_words(trunc, ring)
