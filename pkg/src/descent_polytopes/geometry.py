"""Brute-force geometry of descent polytopes.

Builds ``DP_v`` from its inequalities, finds the 0/1 vertices, and
constructs the face lattice from vertex-facet incidences.  Nothing here
uses the closed formulas of :mod:`descent_polytopes.fvector`; it exists to
check them.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .algebra import TPoly
from .fvector import FPolynomial
from .words import XYWord, as_word

VERTEX_CAP = 14
LATTICE_CAP = 9


@dataclass(frozen=True)
class HalfspaceSystem:
    """Inequalities ``normal . x <= bound`` in dimension ``dim``."""

    dim: int
    inequalities: tuple[tuple[tuple[int, ...], int], ...]

    def contains(self, point) -> bool:
        return all(sum(a * p for a, p in zip(normal, point)) <= b
                   for normal, b in self.inequalities)

    def is_tight(self, index: int, point) -> bool:
        normal, b = self.inequalities[index]
        return sum(a * p for a, p in zip(normal, point)) == b


def halfspace_system(v: str) -> HalfspaceSystem:
    """``0 <= x_i <= 1`` for every coordinate, then one chain relation per letter:
    ``x_i <= x_{i+1}`` for ``x``, ``x_i >= x_{i+1}`` for ``y``."""
    v = as_word(v)
    n = v.n
    rows = []

    def unit(i, s):
        e = [0] * n
        e[i] = s
        return tuple(e)

    for i in range(n):
        rows.append((unit(i, -1), 0))
        rows.append((unit(i, 1), 1))
    for i, c in enumerate(v):
        e = [0] * n
        if c == "x":
            e[i], e[i + 1] = 1, -1
        else:
            e[i], e[i + 1] = -1, 1
        rows.append((tuple(e), 0))
    return HalfspaceSystem(n, tuple(rows))


def enumerate_vertices(v: str) -> list[tuple[int, ...]]:
    """0/1 points of ``DP_v``, in lexicographic order.

    Every vertex of an order polytope is a 0/1 point, and every 0/1 point of
    the polytope is a vertex of the cube, hence of the polytope.
    """
    v = as_word(v)
    if len(v) > VERTEX_CAP:
        raise ValueError(f"word length {len(v)} exceeds cap {VERTEX_CAP}")
    system = halfspace_system(v)
    return [p for p in itertools.product((0, 1), repeat=v.n) if system.contains(p)]


def rank(rows: list[list[int]]) -> int:
    """Exact rank over the rationals by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            a = m[i][col]
            row_i, row_r = m[i], m[r]
            m[i] = [(p * row_i[j] - a * row_r[j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def affine_dimension(points, bound: int | None = None) -> int:
    """Dimension of the affine hull of a non-empty point set.

    Incremental fraction-free elimination against the first point; stops as
    soon as the dimension reaches ``bound`` (a known upper bound).
    """
    it = iter(points)
    base = next(it)
    if bound is None:
        bound = len(base)
    basis: list[tuple[int, list[int]]] = []  # (pivot column, row)
    if bound <= 0:
        return 0
    for p in it:
        vec = [a - b for a, b in zip(p, base)]
        for col, row in basis:
            a = vec[col]
            if a:
                piv = row[col]
                vec = [piv * x - a * y for x, y in zip(vec, row)]
        col = next((j for j, a in enumerate(vec) if a), None)
        if col is None:
            continue
        basis.append((col, vec))
        if len(basis) == bound:
            break
    return len(basis)


@dataclass
class FaceLattice:
    """Non-empty faces of a polytope.

    ``faces`` maps a vertex bitmask (bit ``i`` set when ``vertices[i]`` lies on
    the face) to the face's dimension.  The full polytope is included, the
    empty face is not.
    """

    word: XYWord
    vertices: list[tuple[int, ...]]
    faces: dict[int, int]
    facets: list[int] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def vertex_indices(self, mask: int) -> list[int]:
        return [i for i in range(len(self.vertices)) if mask >> i & 1]

    def f_vector(self) -> list[int]:
        f = [0] * (self.dim + 1)
        for d in self.faces.values():
            f[d] += 1
        return f

    def to_json(self) -> str:
        faces = sorted(((self.vertex_indices(m), d) for m, d in self.faces.items()),
                       key=lambda fd: (fd[1], fd[0]))
        return json.dumps({
            "word": self.word.literal,
            "vertices": [list(p) for p in self.vertices],
            "faces": [{"vertices": vs, "dim": d} for vs, d in faces],
        })

    def to_dot(self) -> str:
        """Hasse diagram of the lattice (cover relations between non-empty faces)."""
        by_dim: dict[int, list[int]] = {}
        for m, d in self.faces.items():
            by_dim.setdefault(d, []).append(m)
        name = {m: "f" + "_".join(map(str, self.vertex_indices(m))) for m in self.faces}
        lines = [f'digraph "DP_{self.word.literal}" {{', "  rankdir=BT;"]
        for d in sorted(by_dim):
            for m in sorted(by_dim[d]):
                lines.append(f'  {name[m]} [label="{self.vertex_indices(m)}" dim={d}];')
            for lo in by_dim[d]:
                for hi in by_dim.get(d + 1, ()):
                    if lo & hi == lo:
                        lines.append(f"  {name[lo]} -> {name[hi]};")
        lines.append("}")
        return "\n".join(lines)


class _ColumnRank:
    """Affine dimension of subsets of a fixed 0/1 point set.

    For a vertex subset ``F`` the affine dimension is ``rank([V_F | 1]) - 1``.
    The columns of that matrix are 0/1 vectors indexed by ``F``, stored as
    bitmasks; repeated columns are dropped and the rank is taken of their
    Gram matrix (entries are popcounts), which has the same rank over Q.
    """

    def __init__(self, points: list[tuple[int, ...]]):
        n = len(points[0])
        self.columns = [sum(1 << k for k, p in enumerate(points) if p[i]) for i in range(n)]
        self._cache: dict[tuple, int] = {}

    def __call__(self, mask: int) -> int:
        cols = {c & mask for c in self.columns}
        cols.add(mask)
        cols.discard(0)
        cols = sorted(cols)
        gram = tuple(tuple((a & b).bit_count() for b in cols) for a in cols)
        r = self._cache.get(gram)
        if r is None:
            r = self._cache[gram] = rank(gram)
        return r - 1


def face_lattice(v: str) -> FaceLattice:
    """All non-empty faces of ``DP_v``.

    Facets are the tight vertex sets of inequalities that have dimension
    ``n - 1``; every face is the full vertex set or an intersection of
    facets, so intersecting with one facet at a time from the top reaches
    all of them.
    """
    v = as_word(v)
    if len(v) > LATTICE_CAP:
        raise ValueError(f"word length {len(v)} exceeds cap {LATTICE_CAP}")
    system = halfspace_system(v)
    verts = enumerate_vertices(v)
    n = v.n
    dim_of = _ColumnRank(verts)

    full = (1 << len(verts)) - 1
    faces = {full: dim_of(full)}
    if faces[full] != n:
        raise AssertionError(f"DP_{v.literal} is not full-dimensional")

    facets = []
    for k in range(len(system.inequalities)):
        mask = sum(1 << i for i, p in enumerate(verts) if system.is_tight(k, p))
        if mask and mask not in facets and dim_of(mask) == n - 1:
            facets.append(mask)
    facets.sort()

    queue = [full]
    while queue:
        nxt = []
        for face in queue:
            for facet in facets:
                meet = face & facet
                if meet and meet not in faces:
                    faces[meet] = dim_of(meet)
                    nxt.append(meet)
        queue = nxt
    return FaceLattice(v, verts, faces, facets)


def f_vector_oracle(v: str) -> FPolynomial:
    lattice = face_lattice(v)
    return FPolynomial(TPoly.from_list(lattice.f_vector()), lattice.word)
