"""Acceptance criteria 1-14, each timed against its limit.

Results are collected in ``conftest.ACCEPTANCE`` and printed as one
PASS/FAIL line per criterion at the end of the pytest run.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from conftest import ACCEPTANCE, find_minor_complex
from shiftlab import constructions as C
from shiftlab.complex import LexOrder, SimplicialComplex, is_shifted, lex_compare_complexes
from shiftlab.exterior import (exterior_shift, i_near_cone_decomposition_check, interval_faces,
                               kernel_interval_count, membership_by_d, near_cone_decomposition_check,
                               sarkaria_identities)
from shiftlab.generators import random_complex, random_graph, random_near_cone, random_planar_triangulation, rng_for
from shiftlab.homology import betti, boundary_squares_vanish, chain_complex, shifted_betti
from shiftlab.minors import contract, has_clique_minor, is_admissible, is_minor, satisfies_link_condition
from shiftlab.obstruction import deleted_join, deleted_product, integer_boundary, smith_class, vk_vanishes_Z
from shiftlab.rigidity import is_generically_rigid, is_stress_free, lee_crosscheck, rigidity_rank
from shiftlab.symmetric import is_hl_certificate, symmetric_shift
from shiftlab.vectors import g_vector, is_m_sequence, satisfies_kk
from shiftlab.verify import connected_sum_holds, h_contraction_holds, random_stacked_sphere, stacked_expected

VARIANTS = ("exterior", "symmetric")
SEEN_F_VECTORS: set = set()


def shift(K: SimplicialComplex, variant: str) -> SimplicialComplex:
    D = (exterior_shift(K) if variant == "exterior" else symmetric_shift(K)).shifted
    SEEN_F_VECTORS.add(D.f_vector())
    return D


@contextmanager
def criterion(number: int, limit: float, note: str = ""):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE[number] = (ok and elapsed < limit, elapsed, limit, note)
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"


def test_criterion_01_fixed_points():
    with criterion(1, 1, "boundary of a simplex is fixed, d = 2..5"):
        for d in range(2, 6):
            S = C.boundary_simplex(d)
            for var in VARIANTS:
                assert shift(S, var) == S


def test_criterion_02_stacked_spheres():
    with criterion(2, 10, "S(3,n) shifts to span{1 3 n, 2 3 4}, n = 5..8"):
        for n in range(5, 9):
            want = SimplicialComplex(n, [(1, 3, n), (2, 3, 4)] + [(1, 2, k) for k in range(3, n + 1)]
                                     + [(1, 3, k) for k in range(4, n + 1)] + [(2, 3, 4), (1, 3, 4)])
            assert want == stacked_expected(3, n)
            for var in VARIANTS:
                assert shift(C.stacked_sphere(3, n), var) == want


def test_criterion_03_f_and_betti():
    with criterion(3, 60, "50 random complexes, n <= 8, both variants"):
        rng = rng_for(3)
        for _ in range(50):
            K = random_complex(rng, int(rng.integers(2, 9)))
            SEEN_F_VECTORS.add(K.f_vector())
            b = betti(K)
            for var in VARIANTS:
                D = shift(K, var)
                assert is_shifted(D)
                assert D.f_vector() == K.f_vector()
                assert shifted_betti(D) == b


def test_criterion_04_cone_and_idempotence():
    with criterion(4, 60, "25 random complexes"):
        rng = rng_for(4)
        for _ in range(25):
            K = random_complex(rng, int(rng.integers(2, 8)))
            D = shift(K, "exterior")
            assert shift(C.cone(K), "exterior") == C.cone(D)
            assert shift(D, "exterior") == D


def test_criterion_05_disjoint_union():
    with criterion(5, 60, "25 random pairs, both variants"):
        rng = rng_for(5)
        for _ in range(25):
            K = random_complex(rng, int(rng.integers(2, 5)), 4, 3)
            L = random_complex(rng, int(rng.integers(2, 5)), 4, 3)
            for var in VARIANTS:
                lhs = shift(C.disjoint_union(K, L), var)
                assert lhs == shift(C.disjoint_union(shift(K, var), shift(L, var)), var)


def test_criterion_06_k33_gap():
    with criterion(6, 5, "{3,4} in the exterior shift of K33, not in the symmetric one"):
        G = C.complete_bipartite(3, 3)
        assert (3, 4) in shift(G, "exterior")
        assert (3, 4) not in shift(G, "symmetric")


def test_criterion_07_join_counterexample():
    with criterion(7, 10, "suspension of two disjoint edges"):
        B = SimplicialComplex(4, [(1, 2), (3, 4)])
        for var in VARIANTS:
            left = shift(C.suspension(B), var)
            right = shift(C.suspension(shift(B, var)), var)
            assert left.face_set - right.face_set == {(1, 2, 6)}
            assert right.face_set - left.face_set == {(1, 3, 4)}
            assert lex_compare_complexes(left, right) is LexOrder.K_FIRST


def test_criterion_08_upper_bound_complex():
    with criterion(8, 120, "cyclic polytope boundaries, (2,6) (3,7) (4,8)"):
        for d, n in ((2, 6), (3, 7), (4, 8)):
            want = C.ubt_complex(d, n)
            for var in VARIANTS:
                assert shift(C.cyclic_boundary(d, n), var) == want


def test_criterion_09_rigidity():
    with criterion(9, 60, "K6, octahedron, 10 planar triangulations, Lee on 25 graphs"):
        assert rigidity_rank(C.complete_graph(6), 3) == 12
        O = C.octahedron().skeleton(1)
        assert is_generically_rigid(O, 3) and is_stress_free(O, 3)
        rng = rng_for(9)
        for _ in range(10):
            T = random_planar_triangulation(rng, int(rng.integers(4, 11)))
            assert is_stress_free(C.graph_of(T), 3)
        done = 0
        while done < 25:
            G = random_graph(rng, int(rng.integers(4, 8)))
            if not G.faces(2):
                continue
            for d in (2, 3):
                assert lee_crosscheck(G, d).agree
            done += 1


def test_criterion_10_smith_classes():
    with criterion(10, 120, "H(1), K5, K4 and van Kampen over Z"):
        assert not smith_class(C.h_d_skeleton(1), 1).vanishes
        assert not smith_class(C.complete_graph(5), 3).vanishes
        assert smith_class(C.complete_graph(4), 3).vanishes
        assert vk_vanishes_Z(C.complete_graph(5), 2) is False
        assert vk_vanishes_Z(C.complete_graph(4), 2) is True


def test_criterion_11_minor_example():
    with criterion(11, 60, "contraction 8 -> 7 gives H(3)"):
        K = find_minor_complex()
        H = C.h_d_skeleton(3)
        assert is_admissible(K, 8, 7)
        assert contract(K, 8, 7) == H
        w = is_minor(H, K)
        assert w is not None and w.replay(K) == H


def test_criterion_12_clique_minors_from_shifting():
    with criterion(12, 300, "50 random graphs, r in {4,5}"):
        rng = rng_for(12)
        triggered = 0
        for _ in range(50):
            G, _ = random_graph(rng, int(rng.integers(5, 11))).compress()
            for var in VARIANTS:
                D = shift(G, var)
                for r in (4, 5):
                    if (r - 1, r) in D:
                        triggered += 1
                        w = has_clique_minor(G, r)
                        assert w is not None and w.replay(G) == C.complete_graph(r)
        assert triggered > 0


def test_criterion_13_h_identities():
    with criterion(13, 30, "10 sphere contractions, 10 connected sums"):
        rng = rng_for(13)
        contractions = 0
        while contractions < 10:
            K = random_planar_triangulation(rng, int(rng.integers(5, 10))) if contractions % 2 else \
                random_stacked_sphere(rng, 4, int(rng.integers(6, 9)))
            edges = [e for e in K.faces(2) if satisfies_link_condition(K, *e)]
            if not edges:
                continue
            u, v = edges[int(rng.integers(len(edges)))]
            assert h_contraction_holds(K, v, u)
            contractions += 1
        for t in range(10):
            d = 3 + t % 2
            K = random_stacked_sphere(rng, d, int(rng.integers(d + 1, d + 4)))
            L = C.cyclic_boundary(d, d + 3) if t % 3 == 0 else random_stacked_sphere(rng, d, d + 2)
            assert connected_sum_holds(K, L, K.facets[0], L.facets[-1])


def test_criterion_14_property_suites():
    with criterion(14, 300, "boundary squares, membership, kernels, Sarkaria, near cones, KK, M-sequences"):
        rng = rng_for(14)
        # boundaries square to zero
        for K in (C.boundary_simplex(4), C.octahedron(), find_minor_complex(), random_complex(rng, 7)):
            assert boundary_squares_vanish(chain_complex(K))
            for k in range(2, K.dim + 2):
                assert not (integer_boundary(K, k - 1) @ integer_boundary(K, k)).any()
        for K in (C.complete_graph(5), C.boundary_simplex(3)):
            J = deleted_join(K)
            for q in range(0, J.dim - 1):
                assert not ((J.coboundary(q + 1) @ J.coboundary(q)) % 2).any()
            P = deleted_product(K)
            for j in range(2, P.dim + 1):
                assert not (P.boundary(j - 1) @ P.boundary(j)).any()
        # membership criterion on every nonempty subset of [n]
        outputs = [shift(C.stacked_sphere(3, 7), "exterior"), shift(C.complete_bipartite(3, 3), "symmetric"),
                   shift(C.cyclic_boundary(3, 7), "exterior")]
        for D in outputs:
            for k in range(1, D.dim + 2):
                for S in combinations(range(1, D.n + 1), k):
                    assert membership_by_d(D, S) == (S in D)
        # rank-only interval counts
        for K in (C.boundary_simplex(3), C.cycle(4)):
            D = shift(K, "exterior")
            for k in range(0, D.dim + 1):
                for S in combinations(range(1, K.n + 1), k):
                    for i in range(1, D.dim + 2 - k):
                        assert kernel_interval_count(K, S, i) == len(interval_faces(D, S, i))
        # Sarkaria identities
        alpha = {v: int(rng.integers(1, 1000)) for v in range(1, 5)}
        assert sarkaria_identities(C.cone(C.boundary_simplex(2)), alpha)
        # near cones
        for _ in range(10):
            assert near_cone_decomposition_check(random_near_cone(rng, int(rng.integers(4, 8))), 1)
        assert i_near_cone_decomposition_check(C.cone(random_near_cone(rng, 5)), [1, 2])
        # Kruskal-Katona on every f-vector seen in this module
        assert SEEN_F_VECTORS
        for f in SEEN_F_VECTORS:
            assert satisfies_kk(f), f
        # g-vectors of HL-certified spheres
        spheres = [C.boundary_simplex(3), C.octahedron(), C.cyclic_boundary(3, 7), C.cyclic_boundary(4, 7),
                   C.stacked_sphere(4, 7)] + [random_planar_triangulation(rng, 8) for _ in range(3)]
        certified = 0
        for K in spheres:
            d = K.dim + 1
            if is_hl_certificate(K, d):
                certified += 1
                assert is_m_sequence(g_vector(K))
        assert certified == len(spheres)
