from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from shiftlab import constructions as C
from shiftlab.complex import SimplicialComplex, is_shifted, shifted_span
from shiftlab.errors import BadParameters, NotNearCone, NotShifted, ZeroWeight
from shiftlab.exterior import (d_value, exterior_shift, i_near_cone_decomposition_check, init, interior_sign,
                               interval, interval_faces, is_d_acyclic, is_d_hyperconnected, is_near_cone,
                               kernel_interval_count, max_face_counts, membership_by_d,
                               near_cone_decomposition_check, position_sign, sarkaria_D, sarkaria_identities,
                               sarkaria_U, shift, hyperconnectivity_kernel_dim)
from shiftlab.generators import random_complex, random_near_cone, rng_for
from shiftlab.homology import betti, shifted_betti
from shiftlab.linalg import ShiftConfig


def _det_q(M):
    A = [[Fraction(x) for x in row] for row in M]
    n, det = len(A), Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            q = A[i][c] / A[c][c]
            A[i] = [a - q * b for a, b in zip(A[i], A[c])]
    return det


def exterior_shift_over_q(K: SimplicialComplex, seed: int = 11) -> SimplicialComplex:
    """Slow oracle: the greedy compound-matrix scan over Q with a random integer matrix."""
    n = K.n
    A = np.random.default_rng(seed).integers(-30, 31, size=(n, n)).tolist()
    faces = [()]
    for k in range(1, K.dim + 2):
        cols = K.faces(k)
        basis = []  # echelon rows over Q: (pivot, row)
        for R in combinations(range(1, n + 1), k):
            row = [_det_q([[A[r - 1][t - 1] for t in T] for r in R]) for T in cols]
            for piv, b in basis:
                if row[piv]:
                    q = row[piv] / b[piv]
                    row = [x - q * y for x, y in zip(row, b)]
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is not None:
                basis.append((lead, row))
                faces.append(R)
                if len(basis) == len(cols):
                    break
    return SimplicialComplex(n, faces)


@pytest.mark.parametrize("K", [C.boundary_simplex(2), C.cycle(4), C.complete_bipartite(2, 3),
                               SimplicialComplex(5, [(1, 2, 3), (3, 4), (4, 5), (2, 5)])])
def test_exterior_shift_agrees_with_rational_oracle(K):
    assert exterior_shift(K).shifted == exterior_shift_over_q(K)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_simplex_boundary_is_fixed(d):
    K = C.boundary_simplex(d)
    assert exterior_shift(K).shifted == K


def test_stacked_sphere_example():
    assert exterior_shift(C.stacked_sphere(3, 6)).shifted == shifted_span(6, [(1, 3, 6), (2, 3, 4)])


def test_k33_contains_34():
    assert (3, 4) in exterior_shift(C.complete_bipartite(3, 3)).shifted


def test_shift_result_metadata():
    res = exterior_shift(C.cycle(4), ShiftConfig(seeds=(5, 6)))
    assert res.variant == "exterior" and res.stable and res.seeds == (5, 6)
    data = res.to_json()
    assert data["f_vector"] == [1, 4, 4]


def test_shift_keeps_ground_set_and_compresses_labels():
    K = SimplicialComplex(9, [(3, 7), (7, 9)])
    D = shift(K)
    assert D.n == 9
    assert D == SimplicialComplex(3, [(1, 2), (1, 3)])


def test_shift_rejects_unknown_variant():
    with pytest.raises(BadParameters):
        shift(C.cycle(4), "combinatorial")


@pytest.mark.parametrize("seed", range(6))
def test_f_betti_shifted(seed):
    rng = rng_for(100 + seed)
    K = random_complex(rng, 6, 5, 4)
    D = exterior_shift(K).shifted
    assert D.f_vector() == K.f_vector()
    assert is_shifted(D)
    assert shifted_betti(D) == betti(K)


def test_shifted_betti_examples():
    assert shifted_betti(exterior_shift(C.cycle(4)).shifted) == (0, 1)
    assert shifted_betti(C.simplex(4)) == (0, 0, 0, 0)
    assert shifted_betti(exterior_shift(C.stacked_sphere(3, 6)).shifted) == (0, 0, 1)
    with pytest.raises(NotShifted):
        shifted_betti(C.cycle(4))


# intervals and D(S)


def test_init_and_interval():
    assert init((2, 5, 7), 2) == (2, 5)
    assert init((2, 5), 0) == ()
    assert interval((1, 3), 1, 5) == [(1, 3, 4), (1, 3, 5)]


def test_d_value_complete_complex():
    m = 6
    K = C.simplex(m)
    for k in range(1, m + 1):
        for S in combinations(range(1, m + 1), k):
            prefix = S[:-1]
            assert d_value(K, S) == m - (prefix[-1] if prefix else 0)
            if prefix == tuple(range(1, k)):
                assert d_value(K, S) == m - k + 1


def test_d_value_needs_shifted():
    with pytest.raises(NotShifted):
        d_value(C.cycle(4), (1, 2))


@pytest.mark.parametrize("K", [C.stacked_sphere(3, 6), C.octahedron(), C.complete_bipartite(3, 3)])
def test_membership_criterion_exhaustive(K):
    D = exterior_shift(K).shifted
    n = D.n
    for k in range(1, D.dim + 2):
        for S in combinations(range(1, n + 1), k):
            assert (S in D) == membership_by_d(D, S, n)


def test_interval_faces_outside():
    D = exterior_shift(C.cycle(4)).shifted
    assert interval_faces(D, (3, 4), 1) == set()


def test_interior_sign():
    # <g, f |_ y> = <g ^ f, y>: e_1 |_ e_{1,2} = -e_2 and e_2 |_ e_{1,2} = e_1
    assert interior_sign((1,), (1, 2)) == -1
    assert interior_sign((2,), (1, 2)) == 1
    assert position_sign(3, (1, 2, 3)) == 1 and position_sign(2, (1, 2, 3)) == -1


@pytest.mark.parametrize("K", [C.boundary_simplex(3), C.cycle(4)])
def test_kernel_count_matches_intervals(K):
    D = exterior_shift(K).shifted
    n = K.n
    for k in range(0, K.dim + 1):
        for S in combinations(range(1, n + 1), k):
            for i in range(1, K.dim + 2 - k):
                assert kernel_interval_count(K, S, i) == len(interval_faces(D, S, i, n))


def test_kernel_count_edge_cases():
    K = C.octahedron()
    for i in (1, 2, 3):
        assert kernel_interval_count(K, (), i) == K.f_vector()[i]
    assert kernel_interval_count(SimplicialComplex(1, [()]), (), 1) == 0
    with pytest.raises(BadParameters):
        kernel_interval_count(K, (1,), 0)


# hyperconnectivity


def test_hyperconnectivity_examples():
    for d in (1, 2, 3):
        assert is_d_hyperconnected(C.complete_graph(d + 1), d)
    edge = SimplicialComplex(2, [(1, 2)])
    assert is_d_acyclic(edge, 1)
    C4 = C.cycle(4)
    D = exterior_shift(C4).shifted
    assert is_d_hyperconnected(C4, 2) == ((2, 4) in D)
    assert not is_d_acyclic(C4, 1)
    assert is_d_acyclic(C4, 2)


def test_hyperconnectivity_kernel():
    # K_5 with d = 3: 10 edges against 3*5 - 6 = 9 independent
    assert hyperconnectivity_kernel_dim(C.complete_graph(5), 3) == 1
    assert not is_d_acyclic(C.complete_graph(5), 3)


# Sarkaria maps and near cones


def test_sarkaria_identities_on_cone():
    K = C.cone(C.boundary_simplex(2))
    assert sarkaria_identities(K, {1: 3, 2: 5, 3: 7, 4: 11})
    U = sarkaria_U(K)
    for k, faces in U.bases.items():
        for c, S in enumerate(faces):
            if 1 in S:
                col = U.matrices[k][:, c]
                assert col[c] == 1 and np.count_nonzero(col) == 1
    D = sarkaria_D(K, {v: 1 for v in K.vertices})
    for k, M in D.matrices.items():
        assert np.array_equal(M, np.eye(M.shape[0], dtype=np.int64))
    with pytest.raises(ZeroWeight):
        sarkaria_D(K, {1: 0, 2: 1, 3: 1, 4: 1})
    with pytest.raises(NotNearCone):
        sarkaria_U(C.cycle(4))


def test_cones_are_near_cones():
    rng = rng_for(3)
    for _ in range(5):
        assert is_near_cone(C.cone(random_complex(rng, 5, 3, 3)), 1)
    assert not is_near_cone(C.cycle(5), 1)


def test_near_cone_decomposition():
    rng = rng_for(8)
    for _ in range(5):
        K = random_near_cone(rng, 6)
        assert near_cone_decomposition_check(K, 1)
    K2 = C.cone(random_near_cone(rng, 5))
    assert i_near_cone_decomposition_check(K2, [1, 2])
    with pytest.raises(NotNearCone):
        near_cone_decomposition_check(C.cycle(4), 1)


def test_cone_commutes_and_idempotent():
    rng = rng_for(21)
    for _ in range(5):
        K = random_complex(rng, 6, 4, 4)
        D = exterior_shift(K).shifted
        assert exterior_shift(C.cone(K)).shifted == C.cone(D)
        assert exterior_shift(D).shifted == D


def test_join_max_faces_counterexample_pair():
    K, L = C.boundary_simplex(2), C.point(2)
    DJ = exterior_shift(C.join(K, L)).shifted
    DK, DL = exterior_shift(K).shifted, exterior_shift(L).shifted
    for i in range(0, 6):
        assert max_face_counts(DJ, i) == max_face_counts(DK, i) * max_face_counts(DL, i)
