"""Words over the alphabet {x, y}.

A word ``v`` of length ``n - 1`` encodes a pair ``(n, S)`` with ``S`` a subset
of ``{1, ..., n-1}``: the letter at (1-based) position ``i`` is ``y`` when
``i`` is in ``S`` and ``x`` otherwise.  The empty word is written ``1``.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator

X = "x"
Y = "y"

EMPTY_LITERAL = "1"

#: default cap on :func:`enumerate_words`
WORD_LENGTH_CAP = 20

_SET_LITERAL = re.compile(r"^\s*(\d+)\s*:\s*\{([\d,\s]*)\}\s*$")


class XYWord(str):
    """An immutable word over ``{x, y}``.

    Subclasses ``str`` so that words hash and compare like their letters and
    can be used directly as series keys.  ``str(w)`` is the bare letters
    (possibly ``""``); :attr:`literal` gives the ``1``-for-empty spelling.
    """

    __slots__ = ()

    def __new__(cls, letters: str = "") -> "XYWord":
        if letters == EMPTY_LITERAL:
            letters = ""
        if letters.strip(X + Y):
            raise ValueError(f"not an xy-word: {letters!r}")
        return super().__new__(cls, letters)

    @property
    def literal(self) -> str:
        return str.__str__(self) or EMPTY_LITERAL

    def __repr__(self) -> str:
        return f"XYWord({self.literal!r})"

    def __add__(self, other: str) -> "XYWord":
        return XYWord(str.__add__(self, XYWord(other)))

    def __getitem__(self, key) -> "XYWord":
        return XYWord(str.__getitem__(self, key))

    def complement(self) -> "XYWord":
        return XYWord(self.translate(_SWAP))

    def reverse(self) -> "XYWord":
        return XYWord(str.__getitem__(self, slice(None, None, -1)))

    @property
    def n(self) -> int:
        """Dimension of the descent polytope indexed by this word."""
        return len(self) + 1

    def descent_set(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(str.__str__(self)) if c == Y)


_SWAP = str.maketrans({X: Y, Y: X})


def as_word(v: str | XYWord) -> XYWord:
    return v if isinstance(v, XYWord) else XYWord(v)


def parse_set(literal: str) -> tuple[int, tuple[int, ...]]:
    """Parse ``"n:{i,j,...}"`` into ``(n, (i, j, ...))``."""
    m = _SET_LITERAL.match(literal)
    if m is None:
        raise ValueError(f"bad set literal {literal!r}; expected n:{{i,j,...}}")
    n = int(m.group(1))
    if n < 1:
        raise ValueError("n must be positive")
    elems = index_set((int(e) for e in m.group(2).replace(" ", "").split(",") if e), n - 1)
    return n, elems


def format_set(v: str) -> str:
    v = as_word(v)
    return f"{v.n}:{{{','.join(map(str, v.descent_set()))}}}"


def parse_word(text: str) -> XYWord:
    """Accept either a word literal (``xyyx``, ``1``) or a set literal (``5:{2,3}``)."""
    if ":" in text:
        n, s = parse_set(text)
        return word_from_set(n, s)
    return XYWord(text.strip().lower())


def index_set(elements: Iterable[int], bound: int) -> tuple[int, ...]:
    """Validate and normalise a subset of ``{1, ..., bound}``."""
    elems = tuple(sorted(set(elements)))
    if elems and (elems[0] < 1 or elems[-1] > bound):
        raise ValueError(f"index set {elems} not contained in [1, {bound}]")
    return elems


def word_from_set(n: int, s: Iterable[int]) -> XYWord:
    if n < 1:
        raise ValueError("n must be positive")
    s = index_set(s, n - 1)
    members = set(s)
    return XYWord("".join(Y if i in members else X for i in range(1, n)))


def kappa(v: str) -> int:
    if not v:
        return 1
    return 2 + sum(1 for a, b in zip(v, v[1:]) if a != b)


def subword(v: str, t: Iterable[int]) -> XYWord:
    """Letters of ``v`` at the 1-based positions in ``t``, in increasing order."""
    t = index_set(t, len(v))
    return XYWord("".join(v[i - 1] for i in t))


def alternating_word(n: int, first: str = X) -> XYWord:
    if first not in (X, Y):
        raise ValueError(f"unknown letter {first!r}")
    other = Y if first == X else X
    return XYWord("".join(first if i % 2 == 0 else other for i in range(n)))


def is_alternating(v: str) -> bool:
    return all(a != b for a, b in zip(v, v[1:]))


def count_alternating_subwords(v: str) -> int:
    """Number of position sets ``T`` (including the empty one) with ``v^T`` alternating.

    Dynamic programme over positions: an alternating subword is determined by
    the positions it uses, and can be extended by position ``i`` exactly when
    its last letter differs from ``v_i``.
    """
    ending = {X: 0, Y: 0}
    for c in v:
        other = Y if c == X else X
        ending[c] += ending[other] + 1
    return 1 + ending[X] + ending[Y]


def is_factor_shape(u: str) -> bool:
    """True for words of the form ``x^i y`` or ``y^i x`` with ``i >= 0``."""
    return len(u) >= 1 and all(c != u[-1] for c in u[:-1])


def enumerate_factorizations(v: str) -> list[tuple[XYWord, ...]]:
    """All factorizations ``v = u_1 ... u_{k-1} . u_k``.

    Every factor but the last has the shape ``x^i y`` or ``y^i x``; the last
    factor is arbitrary and may be empty.  Ordered by ``k``, then by the
    tuple of factor lengths.
    """
    v = as_word(v)
    out: list[tuple[XYWord, ...]] = []

    def extend(start: int, prefix: tuple[XYWord, ...]) -> None:
        out.append(prefix + (v[start:],))
        if start == len(v):
            return
        # a shaped factor at `start` is either the single letter there, or the
        # whole run of that letter plus the following (different) letter
        run = 1
        while start + run < len(v) and v[start + run] == v[start]:
            run += 1
        extend(start + 1, prefix + (v[start:start + 1],))
        if start + run < len(v):
            extend(start + run + 1, prefix + (v[start:start + run + 1],))

    extend(0, ())
    out.sort(key=lambda f: (len(f), tuple(len(u) for u in f)))
    return out


def composition_of(v: str) -> tuple[int, ...]:
    """Composition of ``n = |v| + 1`` whose partial sums are the descent positions."""
    v = as_word(v)
    cuts = (0,) + v.descent_set() + (v.n,)
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def set_from_composition(parts: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    parts = tuple(parts)
    if not parts or min(parts) < 1:
        raise ValueError(f"not a composition: {parts}")
    sums = tuple(itertools.accumulate(parts))
    return sums[-1], sums[:-1]


def enumerate_words(length: int, cap: int = WORD_LENGTH_CAP) -> list[XYWord]:
    if length < 0:
        raise ValueError("length must be non-negative")
    if length > cap:
        raise ValueError(f"word length {length} exceeds cap {cap}")
    return [XYWord("".join(p)) for p in itertools.product(X + Y, repeat=length)]


def iter_words(max_length: int) -> Iterator[XYWord]:
    """All words of length 0..max_length, shortest first."""
    for m in range(max_length + 1):
        yield from enumerate_words(m)
