"""f-, h- and g-vectors and the Kruskal-Katona / Macaulay numerics."""

from __future__ import annotations

from math import comb
from typing import Sequence

from .complex import SimplicialComplex
from .errors import BadParameters


def f_vector(K: SimplicialComplex) -> tuple:
    """(f_{-1}, f_0, ..., f_dim)."""
    return K.f_vector()


def h_from_f(f: Sequence[int]) -> tuple:
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def h_vector(K: SimplicialComplex) -> tuple:
    """(h_0, ..., h_d) with d = dim K + 1."""
    return h_from_f(K.f_vector())


def g_vector(K: SimplicialComplex) -> tuple:
    if K.dim < 0:
        raise BadParameters("g-vector needs dim >= 0")
    h = h_vector(K)
    d = len(h) - 1
    return (1,) + tuple(h[i] - h[i - 1] for i in range(1, d // 2 + 1))


def poly_eval(coeffs: Sequence[int], t: int) -> int:
    return sum(c * t ** i for i, c in enumerate(coeffs))


def cascade(m: int, k: int) -> list:
    """The k-binomial expansion m = C(a_k, k) + C(a_{k-1}, k-1) + ... with
    a_k > a_{k-1} > ... >= j >= 1.  Returns [(a_j, j), ...]."""
    if m < 0 or k < 1:
        raise BadParameters("need m >= 0 and k >= 1")
    out = []
    j = k
    while m > 0 and j >= 1:
        a = j
        while comb(a + 1, j) <= m:
            a += 1
        out.append((a, j))
        m -= comb(a, j)
        j -= 1
    return out


def kk_lower_shadow(m: int, k: int) -> int:
    """Kruskal-Katona function: the least number of k-element sets that can
    be the shadow of m sets with k+1 elements."""
    if m < 0 or k < 0:
        raise BadParameters("need m >= 0 and k >= 0")
    return sum(comb(a, j - 1) for a, j in cascade(m, k + 1))


def macaulay_lower(m: int, k: int) -> int:
    """Macaulay's bound: h_{k+1} = m forces h_k >= macaulay_lower(m, k)."""
    if m < 0 or k < 0:
        raise BadParameters("need m >= 0 and k >= 0")
    return sum(comb(a - 1, j - 1) for a, j in cascade(m, k + 1))


def satisfies_kk(f: Sequence[int]) -> bool:
    """Kruskal-Katona test for (f_{-1}, f_0, ...)."""
    if not f or f[0] != 1 or any(x < 0 for x in f):
        return False
    return all(kk_lower_shadow(f[k + 1], k) <= f[k] for k in range(len(f) - 1))


def is_m_sequence(seq: Sequence[int]) -> bool:
    if not seq or seq[0] != 1 or any(x < 0 for x in seq):
        return False
    return all(macaulay_lower(seq[k + 1], k) <= seq[k] for k in range(len(seq) - 1))
