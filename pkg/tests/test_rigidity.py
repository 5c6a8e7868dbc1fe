from __future__ import annotations

from itertools import combinations
from math import comb

import pytest

from shiftlab import constructions as C
from shiftlab.complex import SimplicialComplex
from shiftlab.errors import BadParameters
from shiftlab.generators import random_graph, random_planar_triangulation, rng_for
from shiftlab.linalg import GenericMatrixSource, MERSENNE_31
from shiftlab.minors import contract, has_clique_minor, mader_bound
from shiftlab.rigidity import (embedding, is_generically_rigid, is_stress_free, lee_crosscheck, rigidity_matrix,
                               rigidity_rank, stress_space_dim)


def test_matrix_shape_and_columns():
    src = GenericMatrixSource(MERSENNE_31, 1, 4)
    f = embedding(src, 2, 4)
    M = rigidity_matrix([(1, 2), (2, 4)], f, MERSENNE_31)
    assert M.shape == (8, 2)
    assert sorted(set(r // 2 for r in M[:, 0].nonzero()[0])) == [0, 1]
    assert all((M[:, c].reshape(4, 2).sum(axis=0) % MERSENNE_31 == 0).all() for c in range(2))


def test_complete_graph_rank():
    assert rigidity_rank(C.complete_graph(6), 3) == 12


def test_octahedron_and_k5():
    O = C.graph_of(C.octahedron())
    assert is_generically_rigid(O, 3) and is_stress_free(O, 3)
    assert stress_space_dim(C.complete_graph(5), 3) == 1
    assert not is_stress_free(C.complete_graph(5), 3)


def test_lee_reports():
    rep = lee_crosscheck(C.graph_of(C.octahedron()), 3)
    assert rep.agree and rep.rigid_matrix and rep.stress_free_matrix
    rep = lee_crosscheck(C.complete_graph(5), 3)
    assert rep.agree and not rep.stress_free_shift
    empty = SimplicialComplex(2, [(1,), (2,)])
    assert not is_generically_rigid(empty, 1) and is_stress_free(empty, 1)


def test_lee_on_random_graphs():
    rng = rng_for(12)
    for _ in range(8):
        G = random_graph(rng, int(rng.integers(4, 8)))
        for d in (2, 3):
            assert lee_crosscheck(G, d).agree


def test_rejects_higher_dimensional_input():
    with pytest.raises(BadParameters):
        rigidity_rank(C.boundary_simplex(3), 2)


def test_count_for_minimally_rigid():
    rng = rng_for(2)
    for _ in range(10):
        G = random_graph(rng, 7)
        for d in (2, 3):
            if is_generically_rigid(G, d) and is_stress_free(G, d):
                assert len(G.faces(2)) == d * 7 - comb(d + 1, 2)


def test_gluing_rigid_graphs():
    # two copies of K_4 glued along a triangle are 3-rigid (they share 3 vertices)
    G = SimplicialComplex(5, list(combinations((1, 2, 3, 4), 2)) + list(combinations((1, 2, 3, 5), 2)))
    assert is_generically_rigid(G, 3)
    # sharing only two vertices is not enough
    H = SimplicialComplex(6, list(combinations((1, 2, 3, 4), 2)) + list(combinations((1, 2, 5, 6), 2)))
    assert not is_generically_rigid(H, 3)


def test_vertex_splitting_direction():
    # if G/uv is 3-rigid and u, v share at least 2 neighbours, G is 3-rigid
    rng = rng_for(9)
    seen = 0
    for _ in range(5):
        T = random_planar_triangulation(rng, 8)
        G = C.graph_of(T)
        for u, v in G.faces(2):
            common = set(G.link((u,)).vertices) & set(G.link((v,)).vertices)
            if len(common) >= 2 and is_generically_rigid(contract(G, v, u), 3):
                seen += 1
                assert is_generically_rigid(G, 3)
                break
    assert seen


def test_gluck_on_planar_triangulations():
    rng = rng_for(7)
    for _ in range(6):
        T = random_planar_triangulation(rng, int(rng.integers(5, 11)))
        assert is_stress_free(C.graph_of(T), 3)


def test_mader_bound_respected():
    rng = rng_for(31)
    for _ in range(12):
        G = random_graph(rng, int(rng.integers(5, 10)))
        n, m = len(G.vertices), len(G.faces(2))
        for r in (3, 4, 5):
            if has_clique_minor(G, r) is None:
                assert m <= mader_bound(n, r)
