"""Symmetric algebraic shifting through generic initial monomials of k[K].

In degree r the face ring has the basis {x^b : supp(b) in K}.  Products of
generic linear forms y_i = sum_j a_ij x_j are expanded in that basis and
scanned greedily in the order y_1^r < y_1^{r-1} y_2 < ... (which is the order
of ``combinations_with_replacement``).  The surviving monomials y_{i_1}...y_{i_r}
with r <= i_1 give the faces {i_1 - r + 1, i_2 - r + 2, ..., i_r}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .complex import SimplicialComplex
from .constructions import t_set, ubt_complex
from .errors import BadParameters, ClosureViolation, GenericInstability
from .exterior import ShiftResult, _compressed
from .linalg import EchelonBasis, GenericMatrixSource, ShiftConfig, stable_generic_run

MIN_PRIME = 1000


@dataclass(frozen=True)
class GinResult:
    """Accepted monomials per degree (as sorted index tuples) and the derived faces."""

    GIN: dict
    gin: tuple
    faces: frozenset

    def contains(self, monomial) -> bool:
        m = tuple(sorted(monomial))
        return m in self.GIN.get(len(m), ())


def face_of(m: tuple) -> tuple:
    """S(m) for a squeezed monomial y_{i_1}...y_{i_r}."""
    r = len(m)
    return tuple(i - r + j for j, i in enumerate(m, start=1))


def face_ring_basis(K: SimplicialComplex, degree: int) -> list:
    """Monomials x^b of the given degree with supp(b) in K, as sorted index tuples."""
    out = []
    for k in range(1, degree + 1):
        for F in K.faces(k):
            for extra in combinations_with_replacement(F, degree - k):
                out.append(tuple(sorted(F + extra)))
    return sorted(out)


class _FaceRing:
    def __init__(self, K: SimplicialComplex, top: int):
        self.K = K
        n = K.n
        self.basis = {0: [()]}
        self.index = {0: {(): 0}}
        self.mult = {}
        for r in range(1, top + 1):
            self.basis[r] = face_ring_basis(K, r)
            self.index[r] = {b: i for i, b in enumerate(self.basis[r])}
            maps = []
            for j in range(1, n + 1):
                src, dst = [], []
                for s, b in enumerate(self.basis[r - 1]):
                    t = self.index[r].get(tuple(sorted(b + (j,))))
                    if t is not None:
                        src.append(s)
                        dst.append(t)
                maps.append((np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)))
            self.mult[r] = maps


def _gin(Kc: SimplicialComplex, source: GenericMatrixSource) -> GinResult:
    n, p, A = Kc.n, source.p, source.matrix
    top = Kc.dim + 1
    ring = _FaceRing(Kc, top)
    cache = {(): np.ones(1, dtype=np.int64)}

    def expand(m: tuple) -> np.ndarray:
        hit = cache.get(m)
        if hit is not None:
            return hit
        r = len(m)
        prev = expand(m[:-1])
        row = A[m[-1] - 1]
        out = np.zeros(len(ring.basis[r]), dtype=np.int64)
        for j, (src, dst) in enumerate(ring.mult[r]):
            if row[j] and src.size:
                out[dst] = (out[dst] + row[j] * prev[src]) % p
        cache[m] = out
        return out

    GIN = {}
    for r in range(1, top + 1):
        size = len(ring.basis[r])
        basis = EchelonBasis(size, p)
        accepted = []
        for m in combinations_with_replacement(range(1, n + 1), r):
            if basis.insert(expand(m)):
                accepted.append(m)
                if len(accepted) == size:
                    break
        if len(accepted) != size:
            raise GenericInstability(f"degree {r}: only {len(accepted)} of {size} monomials independent")
        GIN[r] = tuple(accepted)
    gin = tuple(m for r in GIN for m in GIN[r] if m[0] >= r)
    faces = frozenset({()} | {face_of(m) for m in gin})
    check = SimplicialComplex(n, faces)
    if len(check) != len(faces) or check.f_vector() != Kc.f_vector():
        raise ClosureViolation("symmetric shift is not a complex with the input f-vector")
    return GinResult(GIN, gin, faces)


def _check_prime(cfg: ShiftConfig) -> None:
    if cfg.prime < MIN_PRIME:
        raise BadParameters(f"symmetric shifting needs a prime >= {MIN_PRIME} to stand in for characteristic 0")


def gin(K: SimplicialComplex, cfg: ShiftConfig | None = None) -> GinResult:
    cfg = cfg or ShiftConfig()
    _check_prime(cfg)
    Kc = _compressed(K, cfg)
    result, _ = stable_generic_run(lambda src: _gin(Kc, src), Kc.n, cfg)
    return result


def symmetric_shift(K: SimplicialComplex, cfg: ShiftConfig | None = None) -> ShiftResult:
    cfg = cfg or ShiftConfig()
    _check_prime(cfg)
    Kc = _compressed(K, cfg)
    result, rep = stable_generic_run(lambda src: _gin(Kc, src), Kc.n, cfg)
    return ShiftResult(SimplicialComplex(K.n, result.faces), "symmetric", cfg.prime, rep.seeds, rep.stable, rep.attempts)


# Lefschetz certificates


@dataclass(frozen=True)
class Certificate:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _pure_of_dim(K: SimplicialComplex, d: int) -> str:
    if not K.is_pure() or K.dim != d - 1:
        return f"expected a pure {d - 1}-dimensional complex"
    return ""


def hl_monomials(d: int) -> list:
    """y_{d+1}^{d-2k-1} y_{d+2}^{k+1} for 0 <= k <= (d-1)/2, as index tuples."""
    return [(d + 1,) * (d - 2 * k - 1) + (d + 2,) * (k + 1) for k in range((d - 1) // 2 + 1)]


def is_hl_certificate(K: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> Certificate:
    """No y_{d+1}^{d-2k-1} y_{d+2}^{k+1} in GIN(K).

    The reason string also reports whether Delta^s(K) lies in Delta(d,n),
    which is the same condition for CM complexes with symmetric h-vector.
    """
    bad = _pure_of_dim(K, d)
    if bad:
        return Certificate(False, bad)
    G = gin(K, cfg)
    hits = [m for m in hl_monomials(d) if G.contains(m)]
    Kc, _ = K.compress()
    n = Kc.n
    Delta = SimplicialComplex(n, G.faces)
    inside = n < d + 1 or Delta.face_set <= ubt_complex(d, max(n, d + 1)).face_set
    forbidden = [t_set(d, k) for k in range(d // 2 + 1) if t_set(d, k) in Delta]
    note = f"shifted complex inside Delta(d,n): {inside}; T-faces present: {forbidden}"
    if hits:
        return Certificate(False, f"GIN contains {hits}; {note}")
    return Certificate(True, note)


def wl_violations(Delta: SimplicialComplex, d: int) -> list:
    out = []
    for S in Delta.face_set:
        k = len(S)
        if k <= d:
            need = tuple(sorted(set(S) | set(range(1, d - k + 1))))
            if need not in Delta:
                out.append(("1", S))
        if k < d // 2:
            need = tuple(sorted(set(S) | {d - k + 1}))
            if need not in Delta:
                out.append(("2", S))
    return out


def is_wl_certificate(K: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> Certificate:
    bad = _pure_of_dim(K, d)
    if bad:
        return Certificate(False, bad)
    Delta = symmetric_shift(K, cfg).shifted
    viol = wl_violations(Delta, d)
    if viol:
        return Certificate(False, f"conditions fail at {sorted(viol)[:5]}")
    return Certificate(True)


def rigidity_links(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> dict:
    """Rigidity and stress-freeness read off Delta^s(G)."""
    if G.dim > 1:
        raise BadParameters("expected a graph")
    Gc, _ = G.compress()
    n = Gc.n
    Delta = symmetric_shift(Gc, cfg).shifted
    if n <= d:
        rigid = len(Gc.faces(2)) == n * (n - 1) // 2
    else:
        rigid = (d, n) in Delta
    stress_free = (d + 1, d + 2) not in Delta
    return {"rigid": rigid, "stress_free": stress_free}
