"""Dissections of a convex polygon into (k+1)-gons.

The polygon has N = n(k-1)+2 vertices labelled 1..N counterclockwise, and the
edge {N, 1} is the base edge rooting the dual tree.  Faces are kept as
ascending vertex tuples; diagonals are derived from them.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from ._config import check_cap
from .counting import catalan_nk
from .diagrams import ValidationReport
from .errors import DomainError, IncompatibleGeometry, MalformedDissection, ValidationError
from .trees import FullKAryTree, validate_tree

Face = tuple[int, ...]


@dataclass(frozen=True)
class Dissection:
    sides: int
    k: int
    faces: tuple[Face, ...]

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(sorted(_normalise(f) for f in self.faces)))

    @property
    def n(self) -> int:
        return len(self.faces)

    def edges(self, face: Face) -> list[tuple[int, int]]:
        return [tuple(sorted((face[i], face[(i + 1) % len(face)]))) for i in range(len(face))]

    def is_boundary(self, edge: tuple[int, int]) -> bool:
        a, b = edge
        return b - a == 1 or (a, b) == (1, self.sides)

    def diagonals(self) -> list[tuple[int, int]]:
        return sorted({e for f in self.faces for e in self.edges(f) if not self.is_boundary(e)})

    def as_lists(self) -> list[list[int]]:
        return [list(f) for f in self.faces]


def _normalise(face) -> Face:
    # a face given as any rotation of its cyclic order is stored ascending
    face = tuple(face)
    if not face:
        return face
    i = face.index(min(face))
    return face[i:] + face[:i]


def polygon_pieces(sides: int, k: int) -> int:
    """The n with sides == n(k-1)+2, or raise IncompatibleGeometry."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    n, r = divmod(sides - 2, k - 1)
    if sides < k + 1 or r:
        raise IncompatibleGeometry(f"a {sides}-gon cannot be cut into {k + 1}-gons")
    return n


def _crosses(d1, d2) -> bool:
    (a, b), (c, e) = d1, d2
    return (a < c < b < e) or (c < a < e < b)


def validate_dissection(p: Dissection, k=None) -> ValidationReport:
    k = p.k if k is None else k
    report = ValidationReport()
    v = report.violations
    if k != p.k:
        v.append(f"dissection built for k={p.k}, checked against k={k}")
    try:
        n = polygon_pieces(p.sides, k)
    except (IncompatibleGeometry, DomainError) as exc:
        v.append(str(exc))
        return report
    if p.n != n:
        v.append(f"{p.sides}-gon needs {n} faces, found {p.n}")
    for f in p.faces:
        if len(f) != k + 1 or len(set(f)) != len(f):
            v.append(f"face {list(f)} is not a {k + 1}-gon on distinct vertices")
        elif any(not 1 <= x <= p.sides for x in f):
            v.append(f"face {list(f)} uses vertices outside 1..{p.sides}")
        elif list(f) != sorted(f):
            v.append(f"face {list(f)} is not in the polygon's cyclic order")
    if v:
        return report
    incidence = Counter(e for f in p.faces for e in p.edges(f))
    for i in range(1, p.sides + 1):
        edge = (i, i + 1) if i < p.sides else (1, p.sides)
        if incidence[edge] != 1:
            v.append(f"boundary edge {list(edge)} covered by {incidence[edge]} faces")
    diagonals = [e for e in incidence if not p.is_boundary(e)]
    for e in sorted(diagonals):
        if incidence[e] != 2:
            v.append(f"diagonal {list(e)} bordered by {incidence[e]} faces")
    if len(diagonals) != n - 1:
        v.append(f"expected {n - 1} diagonals, found {len(diagonals)}")
    for d1, d2 in combinations(sorted(diagonals), 2):
        if _crosses(d1, d2):
            v.append(f"diagonals {list(d1)} and {list(d2)} cross")
    return report


def tree_to_dissection(t: FullKAryTree, k=None) -> Dissection:
    """Root face on the base edge; each internal node splits its arc among its children."""
    k = t.k if k is None else k
    report = validate_tree(t, k)
    if not report.ok:
        raise ValidationError("invalid tree", report.violations)
    if t.n < 1:
        raise DomainError("a single leaf has no dissection counterpart")
    kids = t.children()
    internal_below = [0] * t.size
    for node in reversed(range(t.size)):
        internal_below[node] = t.preorder[node] + sum(internal_below[c] for c in kids[node])
    sides = t.n * (k - 1) + 2
    faces = []
    stack = [(0, 1, sides)]
    while stack:
        node, lo, hi = stack.pop()
        corners = [lo]
        for c in kids[node]:
            width = internal_below[c] * (k - 1) + 1
            start = corners[-1]
            corners.append(start + width)
            if t.preorder[c]:
                stack.append((c, start, start + width))
        assert corners[-1] == hi
        faces.append(tuple(corners))
    return Dissection(sides, k, tuple(faces))


def dissection_to_tree(p: Dissection, k=None) -> FullKAryTree:
    """Dual tree read from the base edge, children counterclockwise."""
    k = p.k if k is None else k
    by_base: dict[tuple[int, int], Face] = {}
    incidence = Counter(e for f in p.faces for e in p.edges(f))
    for e, count in incidence.items():
        if not p.is_boundary(e) and count != 2:
            raise MalformedDissection(f"diagonal {list(e)} has {count} incident faces")
    for f in p.faces:
        by_base[(f[0], f[-1])] = f
    if (1, p.sides) not in by_base:
        raise MalformedDissection("no face on the base edge")
    bits = []
    stack = [(1, p.sides)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo == 1:
            bits.append(0)
            continue
        face = by_base.get((lo, hi))
        if face is None:
            raise MalformedDissection(f"no face behind diagonal {[lo, hi]}")
        bits.append(1)
        stack.extend(reversed(list(zip(face, face[1:]))))
    tree = FullKAryTree(k, tuple(bits))
    if tree.n != p.n:
        raise MalformedDissection(f"dual tree reaches {tree.n} of {p.n} faces")
    return tree


def enumerate_dissections(sides: int, k: int, cap=None) -> Iterator[Dissection]:
    """Every dissection of the ``sides``-gon into (k+1)-gons.

    Recurses on the face sitting on the base edge, choosing its k-1 free
    vertices so that each cut-off piece can itself be dissected.
    """
    n = polygon_pieces(sides, k)
    check_cap(catalan_nk(n, k), cap)

    def pieces(lo, hi) -> Iterator[list[Face]]:
        if hi - lo == 1:
            yield []
            return
        inner = range(lo + 1, hi)
        for free in combinations(inner, k - 1):
            corners = (lo,) + free + (hi,)
            if any((b - a - 1) % (k - 1) for a, b in zip(corners, corners[1:])):
                continue
            yield from _product([(a, b) for a, b in zip(corners, corners[1:])], [corners])

    def _product(arcs, acc):
        if not arcs:
            yield list(acc)
            return
        (a, b), rest = arcs[0], arcs[1:]
        for sub in pieces(a, b):
            yield from _product(rest, acc + sub)

    for faces in pieces(1, sides):
        yield Dissection(sides, k, tuple(faces))
