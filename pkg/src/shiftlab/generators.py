"""Seeded random families: complexes, graphs, planar triangulations, near cones."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .complex import SimplicialComplex
from .constructions import boundary_simplex, stellar_subdivision


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_complex(rng: np.random.Generator, n: int, max_facets: int = 6, max_size: int = 4) -> SimplicialComplex:
    """Union of a few random faces on [n]; the vertex set is all of [n]."""
    facets = [(v,) for v in range(1, n + 1)]
    for _ in range(int(rng.integers(1, max_facets + 1))):
        size = int(rng.integers(2, min(max_size, n) + 1))
        facets.append(tuple(sorted(int(x) + 1 for x in rng.choice(n, size=size, replace=False))))
    return SimplicialComplex(n, facets)


def random_graph(rng: np.random.Generator, n: int, density: float | None = None) -> SimplicialComplex:
    if density is None:
        density = float(rng.uniform(0.3, 0.9))
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < density]
    return SimplicialComplex(n, edges + [(v,) for v in range(1, n + 1)])


def _flip(facets: set, a: int, b: int):
    """Flip edge ab of a triangulated 2-sphere; None when the flip is illegal."""
    tris = [t for t in facets if a in t and b in t]
    if len(tris) != 2:
        return None
    c = next(x for x in tris[0] if x not in (a, b))
    d = next(x for x in tris[1] if x not in (a, b))
    if any(c in t and d in t for t in facets):
        return None
    degree = lambda v: sum(1 for t in facets if v in t)
    if degree(a) <= 3 or degree(b) <= 3:
        return None
    new = set(facets) - set(tris)
    new.add(tuple(sorted((a, c, d))))
    new.add(tuple(sorted((b, c, d))))
    return new


def random_planar_triangulation(rng: np.random.Generator, n: int, flips: int = 20) -> SimplicialComplex:
    """A 2-sphere on [n]: random stellar subdivisions of triangles, then random edge flips."""
    K = boundary_simplex(3)
    while K.n < n:
        tri = K.facets[int(rng.integers(len(K.facets)))]
        K = stellar_subdivision(K, tri)
    facets = set(K.facets)
    for _ in range(flips):
        edges = sorted({e for t in facets for e in combinations(t, 2)})
        a, b = edges[int(rng.integers(len(edges)))]
        flipped = _flip(facets, a, b)
        if flipped is not None:
            facets = flipped
    return SimplicialComplex(n, facets)


def random_near_cone(rng: np.random.Generator, n: int, max_facets: int = 5, max_size: int = 3) -> SimplicialComplex:
    """A near cone with respect to vertex 1: (1 * L) u B with B on {2..n}.

    L holds every non-maximal face of B and a random part of its facets,
    which is exactly what the near-cone condition asks of lk(1).
    """
    B = random_complex(rng, n - 1, max_facets, max_size).shift_labels(1)
    tops = [F for F in B.facets if rng.random() < 0.5]
    link = [S for S in B.face_set if S not in B.facets] + tops
    cone_part = [(1,) + S for S in link]
    return SimplicialComplex(n, list(B.facets) + cone_part)
