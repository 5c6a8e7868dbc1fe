"""Joins, sums, subdivisions and named families of complexes."""

from __future__ import annotations

from itertools import combinations
from typing import Mapping, Sequence

from .complex import SimplicialComplex, as_face, subsets
from .errors import BadParameters, FaceNotInComplex, NotAFacet, SizeMismatch

# Rule used by stacked_sphere; echoed in CLI metadata.
STACKED_GLUING_RULE = "connected sum with a simplex boundary at the lex-last facet created by the previous step"


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """K * L with L relabelled to n_K+1..n_K+n_L."""
    off = K.n
    return SimplicialComplex(K.n + L.n, [f + tuple(v + off for v in g) for f in K.facets for g in L.facets])


def point(n: int = 1) -> SimplicialComplex:
    """``n`` isolated vertices."""
    return SimplicialComplex(n, [[i] for i in range(1, n + 1)])


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex 1; the vertices of K move up by one."""
    return join(point(1), K)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    return join(K, point(2))


def disjoint_union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    off = K.n
    return SimplicialComplex(K.n + L.n, list(K.facets) + [[v + off for v in g] for g in L.facets])


def union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(max(K.n, L.n), list(K.facets) + list(L.facets))


def intersection(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(max(K.n, L.n), K.face_set & L.face_set)


def remove_faces(K: SimplicialComplex, bad) -> SimplicialComplex:
    """Remove faces in ``bad`` (which must be facets for the result to make sense)."""
    bad = {as_face(b) for b in bad}
    return SimplicialComplex(K.n, [f for f in K.face_set if f not in bad])


# named families


def simplex(m: int) -> SimplicialComplex:
    """The full simplex 2^[m]."""
    return SimplicialComplex(m, [range(1, m + 1)])


complete_complex = simplex


def boundary_simplex(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex: proper subsets of [d+1]."""
    if d < 0:
        raise BadParameters("d must be nonnegative")
    return SimplicialComplex(d + 1, combinations(range(1, d + 2), d))


def complete_graph(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, combinations(range(1, n + 1), 2) if n > 1 else [[1]] * n)


def complete_bipartite(a: int, b: int) -> SimplicialComplex:
    return SimplicialComplex(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise BadParameters("a cycle needs at least 3 vertices")
    return SimplicialComplex(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, [(i, i + 1) for i in range(1, n)] or [[1]])


def octahedron() -> SimplicialComplex:
    """Boundary of the cross-polytope {1,4}*{2,5}*{3,6}."""
    return SimplicialComplex(6, [(a, b, c) for a in (1, 4) for b in (2, 5) for c in (3, 6)])


def graph_of(K: SimplicialComplex) -> SimplicialComplex:
    return K.skeleton(1)


def petersen() -> SimplicialComplex:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return SimplicialComplex(10, outer + spokes + inner)


def h_d_skeleton(d: int) -> SimplicialComplex:
    """H(d): all subsets of [2d+1] with at most d elements."""
    if d < 1:
        raise BadParameters("d must be at least 1")
    return SimplicialComplex(2 * d + 1, combinations(range(1, 2 * d + 2), d))


def cyclic_boundary(d: int, n: int) -> SimplicialComplex:
    """Boundary of the cyclic d-polytope with n vertices (Gale evenness)."""
    if d < 2 or n < d + 1:
        raise BadParameters("need d >= 2 and n >= d+1")
    facets = []
    for S in combinations(range(1, n + 1), d):
        inside = set(S)
        outside = [v for v in range(1, n + 1) if v not in inside]
        if all(sum(1 for s in S if i < s < j) % 2 == 0 for i, j in combinations(outside, 2)):
            facets.append(S)
    return SimplicialComplex(n, facets)


def ubt_complex(d: int, n: int) -> SimplicialComplex:
    """The pure complex Delta(d,n): d-subsets S with k not in S => [k+1, d-k+2] in S."""
    if d < 1 or n < d + 1:
        raise BadParameters("need d >= 1 and n >= d+1")
    facets = []
    for S in combinations(range(1, n + 1), d):
        inside = set(S)
        if all(set(range(k + 1, d - k + 3)) <= inside for k in range(1, n + 1) if k not in inside):
            facets.append(S)
    return SimplicialComplex(n, facets)


def t_set(d: int, k: int) -> tuple:
    """T_{d-k} = {k+2..d-k} u {d-k+2..d+2}."""
    if not 0 <= k <= d // 2:
        raise BadParameters("need 0 <= k <= floor(d/2)")
    return tuple(range(k + 2, d - k + 1)) + tuple(range(d - k + 2, d + 3))


# sums and subdivisions


def connected_sum(K: SimplicialComplex, L: SimplicialComplex, sigma_K, sigma_L,
                  matching: Mapping[int, int] | None = None) -> SimplicialComplex:
    """(K u L') minus sigma, where L' glues sigma_L onto sigma_K.

    ``matching`` maps vertices of sigma_L to vertices of sigma_K; by default
    the order-preserving bijection.  Other vertices of L get fresh labels.
    """
    sigma_K, sigma_L = as_face(sigma_K), as_face(sigma_L)
    if sigma_K not in K.facets:
        raise NotAFacet(f"{sigma_K} is not a facet of K")
    if sigma_L not in L.facets:
        raise NotAFacet(f"{sigma_L} is not a facet of L")
    if len(sigma_K) != len(sigma_L):
        raise SizeMismatch("glued facets differ in size")
    if matching is None:
        matching = dict(zip(sigma_L, sigma_K))
    if sorted(matching) != list(sigma_L) or sorted(matching.values()) != list(sigma_K):
        raise BadParameters("matching must be a bijection sigma_L -> sigma_K")
    relabel = dict(matching)
    nxt = K.n
    for v in range(1, L.n + 1):
        if v not in relabel:
            nxt += 1
            relabel[v] = nxt
    L2 = L.relabel(relabel, n=nxt)
    faces_ = (K.face_set | L2.face_set) - {sigma_K}
    return SimplicialComplex(nxt, faces_)


def stellar_subdivision(K: SimplicialComplex, T) -> SimplicialComplex:
    """(K minus st(T)) u (v_T * boundary(T) * lk(T)), with v_T = n+1."""
    T = as_face(T)
    if not T or T not in K:
        raise FaceNotInComplex(f"{T} is not a nonempty face")
    v = K.n + 1
    ts = set(T)
    kept = [f for f in K.face_set if not ts.issubset(f)]
    lk = K.link(T)
    new = [(v,) + tuple(sorted(b + g)) for b in combinations(T, len(T) - 1) for g in lk.facets]
    return SimplicialComplex(v, kept + new)


def stacked_sphere(d: int, n: int) -> SimplicialComplex:
    """S(d,n): start from the boundary of the d-simplex and repeatedly glue
    another simplex boundary at the most recently created facet."""
    if d < 1 or n < d + 1:
        raise BadParameters("need n >= d+1")
    K = boundary_simplex(d)
    last = K.facets[-1]
    for _ in range(n - d - 1):
        K = stellar_subdivision(K, last)
        last = max(f for f in K.facets if K.n in f)
    return K


def all_faces(face) -> list:
    return list(subsets(as_face(face)))
