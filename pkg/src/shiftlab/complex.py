"""Canonical simplicial complexes on the vertex set 1..n.

A face is a strictly increasing tuple of positive ints; the empty tuple is the
empty face, which belongs to every complex.
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Iterable, Mapping

from .errors import FaceNotInComplex, UnsortableFace, VertexOutOfRange

Face = tuple


def as_face(vertices: Iterable[int]) -> Face:
    face = tuple(sorted(int(v) for v in vertices))
    if len(set(face)) != len(face):
        raise UnsortableFace(f"repeated vertex in {face}")
    return face


def subsets(face: Face):
    for k in range(len(face) + 1):
        yield from combinations(face, k)


class SimplicialComplex:
    """Immutable complex stored by its facets.

    Equality and hashing look only at the facet set, so two complexes that
    differ only in the size of their ground set compare equal.
    """

    __slots__ = ("n", "facets", "_faces", "_levels")

    def __init__(self, n: int, facets: Iterable[Iterable[int]]):
        n = int(n)
        cleaned = set()
        for raw in facets:
            face = as_face(raw)
            if face and (face[0] < 1 or face[-1] > n):
                raise VertexOutOfRange(f"{face} not inside 1..{n}")
            cleaned.add(face)
        faces: set = {()}
        kept = []
        for face in sorted(cleaned, key=len, reverse=True):
            if face in faces:
                continue
            kept.append(face)
            faces.update(subsets(face))
        if not kept:
            kept = [()]
        self.n = n
        self.facets = tuple(sorted(kept))
        self._faces = frozenset(faces)
        levels: dict = {}
        for face in faces:
            levels.setdefault(len(face), []).append(face)
        self._levels = {k: tuple(sorted(v)) for k, v in levels.items()}

    # queries
    def __contains__(self, face) -> bool:
        if not isinstance(face, tuple):
            face = tuple(sorted(face))
        return face in self._faces

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __iter__(self):
        for k in sorted(self._levels):
            yield from self._levels[k]

    def __len__(self) -> int:
        return len(self._faces)

    def __repr__(self) -> str:
        body = ", ".join("".join(map(str, f)) if max(f, default=0) < 10 else str(list(f)) for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{body}])"

    def faces(self, k: int | None = None) -> tuple:
        """Faces with exactly ``k`` vertices in lex order, or all faces."""
        if k is None:
            return tuple(self)
        return self._levels.get(k, ())

    @property
    def face_set(self) -> frozenset:
        return self._faces

    @property
    def dim(self) -> int:
        return max(self._levels) - 1

    @property
    def vertices(self) -> tuple:
        return tuple(f[0] for f in self._levels.get(1, ()))

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def f_vector(self) -> tuple:
        return tuple(len(self._levels.get(k, ())) for k in range(self.dim + 2))

    # local constructions
    def _require(self, face) -> Face:
        face = as_face(face)
        if face not in self._faces:
            raise FaceNotInComplex(f"{face} is not a face")
        return face

    def link(self, face) -> SimplicialComplex:
        face = self._require(face)
        fs = set(face)
        out = [tuple(v for v in g if v not in fs) for g in self.facets if fs.issubset(g)]
        return SimplicialComplex(self.n, out)

    def closed_star(self, face) -> SimplicialComplex:
        face = self._require(face)
        fs = set(face)
        return SimplicialComplex(self.n, [g for g in self.facets if fs.issubset(g)])

    def antistar(self, face) -> SimplicialComplex:
        """Faces not containing ``face``; for a vertex this is the deletion K minus v."""
        face = self._require(face)
        fs = set(face)
        return SimplicialComplex(self.n, [g for g in self._faces if not fs.issubset(g)])

    def delete_vertex(self, v: int) -> SimplicialComplex:
        return SimplicialComplex(self.n, [g for g in self.facets if v not in g] +
                                 [tuple(x for x in g if x != v) for g in self.facets if v in g])

    def induced(self, vertices: Iterable[int]) -> SimplicialComplex:
        keep = set(vertices)
        return SimplicialComplex(self.n, [tuple(x for x in g if x in keep) for g in self.facets])

    def skeleton(self, j: int) -> SimplicialComplex:
        """Faces of dimension at most ``j``."""
        return SimplicialComplex(self.n, [f for f in self._faces if len(f) <= j + 1])

    def relabel(self, mapping: Mapping[int, int], n: int | None = None) -> SimplicialComplex:
        if n is None:
            n = max([self.n, *mapping.values()])
        return SimplicialComplex(n, [[mapping.get(v, v) for v in f] for f in self.facets])

    def shift_labels(self, offset: int) -> SimplicialComplex:
        return SimplicialComplex(self.n + offset, [[v + offset for v in f] for f in self.facets])

    def compress(self) -> tuple:
        """Relabel used vertices to 1..m in increasing order; returns (complex, old labels)."""
        verts = self.vertices
        mapping = {v: i + 1 for i, v in enumerate(verts)}
        return SimplicialComplex(len(verts), [[mapping[v] for v in f] for f in self.facets]), verts

    def is_shifted(self) -> bool:
        return is_shifted(self)


def from_facets(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex(n, facets)


def from_faces(n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Closure of an arbitrary family of faces."""
    return SimplicialComplex(n, faces)


def faces(K: SimplicialComplex, k: int) -> tuple:
    return K.faces(k)


def dim(K: SimplicialComplex) -> int:
    return K.dim


def link(K: SimplicialComplex, F) -> SimplicialComplex:
    return K.link(F)


def closed_star(K: SimplicialComplex, F) -> SimplicialComplex:
    return K.closed_star(F)


def antistar(K: SimplicialComplex, F) -> SimplicialComplex:
    return K.antistar(F)


def skeleton(K: SimplicialComplex, j: int) -> SimplicialComplex:
    return K.skeleton(j)


def is_shifted(K: SimplicialComplex) -> bool:
    # It suffices to check the moves j -> j-1.
    faces_ = K.face_set
    for face in faces_:
        fs = set(face)
        for idx, j in enumerate(face):
            i = j - 1
            if i >= 1 and i not in fs:
                moved = face[:idx] + (i,) + face[idx + 1:]
                if moved not in faces_:
                    return False
    return True


# orderings


def lex_less(S: Face, T: Face) -> bool:
    """S <_L T for faces of equal size."""
    return S < T


def product_leq(S: Face, T: Face) -> bool:
    """S <=_P T: equal size and s_j <= t_j for every j."""
    return len(S) == len(T) and all(s <= t for s, t in zip(S, T))


def shifted_span(n: int, generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Smallest shifted complex containing the generators (closure under <=_P and inclusion)."""
    out = set()
    for g in generators:
        g = as_face(g)
        out.update(c for c in combinations(range(1, (g[-1] if g else 0) + 1), len(g)) if product_leq(c, g))
    return SimplicialComplex(n, out)


class LexOrder(enum.Enum):
    K_FIRST = "K_first"
    L_FIRST = "L_first"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def lex_compare_complexes(K: SimplicialComplex, L: SimplicialComplex) -> LexOrder:
    """Partial lex order: K <=_L L iff for every size r the lex-first r-face of
    the symmetric difference lies in K."""
    winners = set()
    top = max(K.dim, L.dim) + 1
    for r in range(top + 1):
        diff = set(K.faces(r)) ^ set(L.faces(r))
        if diff:
            first = min(diff)
            winners.add("K" if first in K else "L")
    if not winners:
        return LexOrder.EQUAL
    if winners == {"K"}:
        return LexOrder.K_FIRST
    if winners == {"L"}:
        return LexOrder.L_FIRST
    return LexOrder.INCOMPARABLE
