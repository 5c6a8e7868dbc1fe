"""Reduced simplicial homology over F_p and Reisner-type tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import SimplicialComplex, is_shifted
from .errors import NotShifted
from .linalg import default_prime, rank


@dataclass
class ChainComplexFp:
    """Boundary maps d_k : C_k -> C_{k-1}, where C_k is spanned by faces with
    k vertices (so C_0 is the augmentation term spanned by the empty face)."""

    bases: dict
    boundaries: dict
    p: int


def chain_complex(K: SimplicialComplex, p: int | None = None) -> ChainComplexFp:
    p = p or default_prime()
    bases = {k: K.faces(k) for k in range(K.dim + 2)}
    index = {k: {f: i for i, f in enumerate(b)} for k, b in bases.items()}
    bd = {}
    for k in range(1, K.dim + 2):
        M = np.zeros((len(bases[k - 1]), len(bases[k])), dtype=np.int64)
        for c, T in enumerate(bases[k]):
            for pos in range(k):
                M[index[k - 1][T[:pos] + T[pos + 1:]], c] = 1 if pos % 2 == 0 else p - 1
        bd[k] = M
    return ChainComplexFp(bases, bd, p)


def boundary_squares_vanish(C: ChainComplexFp) -> bool:
    return all(not ((C.boundaries[k - 1] @ C.boundaries[k]) % C.p).any() for k in range(2, max(C.boundaries, default=0) + 1))


def _ranks(K: SimplicialComplex, p: int) -> dict:
    C = chain_complex(K, p)
    return {k: rank(M, p) for k, M in C.boundaries.items()}


def reduced_betti(K: SimplicialComplex, i: int, p: int | None = None) -> int:
    """beta~_i over F_p for any i >= -1."""
    p = p or default_prime()
    if i < -1 or i > K.dim:
        return 0
    r = _ranks(K, p)
    k = i + 1
    return len(K.faces(k)) - r.get(k, 0) - r.get(k + 1, 0)


def betti(K: SimplicialComplex, p: int | None = None) -> tuple:
    """(beta~_0, ..., beta~_dim) over F_p.  For {empty} this is (), and
    reduced_betti(K, -1) = 1 carries the only nonzero number."""
    p = p or default_prime()
    r = _ranks(K, p)
    return tuple(len(K.faces(k)) - r.get(k, 0) - r.get(k + 1, 0) for k in range(1, K.dim + 2))


def shifted_betti(Delta: SimplicialComplex) -> tuple:
    """beta_i = #{S in Delta_i : S u {1} not in Delta}, i = 0..dim."""
    if not is_shifted(Delta):
        raise NotShifted("the combinatorial Betti formula needs a shifted complex")
    return tuple(
        sum(1 for S in Delta.faces(k) if 1 not in S and (1,) + S not in Delta)
        for k in range(1, Delta.dim + 2)
    )


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic sum_i (-1)^i f_i, i >= -1."""
    return sum((-1) ** (k - 1) * f for k, f in enumerate(K.f_vector()))


def is_cohen_macaulay(K: SimplicialComplex, p: int | None = None) -> bool:
    p = p or default_prime()
    if not K.is_pure():
        return False
    for T in K.face_set:
        lk = K.link(T)
        for i in range(-1, lk.dim):
            if reduced_betti(lk, i, p):
                return False
    return True


def is_2cm(K: SimplicialComplex, p: int | None = None) -> bool:
    p = p or default_prime()
    if not is_cohen_macaulay(K, p):
        return False
    for v in K.vertices:
        rest = K.delete_vertex(v)
        if rest.dim != K.dim or not is_cohen_macaulay(rest, p):
            return False
    return True
