"""Exterior algebraic shifting and the interval machinery around it.

With f_i = sum_j a_ij e_j for a generic matrix A, the k-faces of the shifted
complex are the lex-greedy k-subsets R whose wedges f_R restricted to the
faces of K are independent.  The coefficient of e_T in f_R is the minor
A_{R,T}, so one level is a greedy row scan of a compound matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .complex import SimplicialComplex, as_face, is_shifted
from .errors import (BadParameters, ClosureViolation, Disagreement,
                     GenericInstability, NotNearCone, NotShifted, ZeroWeight)
from .linalg import (EchelonBasis, GenericMatrixSource, ShiftConfig, rank,
                     stable_generic_run)


@dataclass(frozen=True)
class ShiftResult:
    shifted: SimplicialComplex
    variant: str
    prime: int
    seeds: tuple
    stable: bool
    attempts: int = 1
    meta: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "n": self.shifted.n,
            "facets": [list(f) for f in self.shifted.facets],
            "f_vector": list(self.shifted.f_vector()),
            "prime": self.prime,
            "seeds": list(self.seeds),
            "stable": self.stable,
            "attempts": self.attempts,
            **self.meta,
        }


class CompoundMinors:
    """Rows f_R restricted to the faces of K, built by Laplace expansion.

    The row for R = R' + {r} (r = max R) is
        v_R[T] = sum_p (-1)^(k-1+p) a[r, T_p] v_{R'}[T - T_p],
    which only needs the faces T - T_p, all of which lie in K.
    """

    def __init__(self, K: SimplicialComplex, A: np.ndarray, p: int):
        self.K, self.A, self.p = K, A, p
        self._faces = {}
        self._sub = {}
        self._memo = {(): np.ones(1, dtype=np.int64)}
        for k in range(1, K.dim + 2):
            level = K.faces(k)
            prev = {f: i for i, f in enumerate(K.faces(k - 1))}
            self._faces[k] = np.array(level, dtype=np.int64).reshape(len(level), k) - 1
            self._sub[k] = [np.array([prev[f[:q] + f[q + 1:]] for f in level], dtype=np.int64) for q in range(k)]

    def faces(self, k: int) -> tuple:
        return self.K.faces(k)

    def row(self, R: tuple) -> np.ndarray:
        hit = self._memo.get(R)
        if hit is not None:
            return hit
        k = len(R)
        p = self.p
        prev = self.row(R[:-1])
        arow = self.A[R[-1] - 1]
        T = self._faces[k]
        acc = np.zeros(T.shape[0], dtype=np.int64)
        for q in range(k):
            term = (arow[T[:, q]] * prev[self._sub[k][q]]) % p
            acc = (acc - term) % p if (k - 1 + q) % 2 else (acc + term) % p
        self._memo[R] = acc
        return acc


def _compressed(K: SimplicialComplex, cfg: ShiftConfig) -> SimplicialComplex:
    Kc, _ = K.compress()
    if Kc.n > cfg.max_n:
        raise BadParameters(f"{Kc.n} vertices exceed the cap max_n={cfg.max_n}")
    return Kc


def _exterior_faces(Kc: SimplicialComplex, source: GenericMatrixSource) -> frozenset:
    n, p = Kc.n, source.p
    tables = CompoundMinors(Kc, source.matrix, p)
    out = {()}
    for k in range(1, Kc.dim + 2):
        target = len(Kc.faces(k))
        basis = EchelonBasis(target, p)
        got = 0
        for R in combinations(range(1, n + 1), k):
            if basis.insert(tables.row(R)):
                out.add(R)
                got += 1
                if got == target:
                    break
        if got < target:
            raise GenericInstability("compound matrix lost rank; degenerate draw")
    check = SimplicialComplex(n, out)
    if len(check) != len(out):
        raise ClosureViolation("greedy faces are not closed under inclusion")
    return frozenset(out)


def exterior_faces_with(K: SimplicialComplex, source: GenericMatrixSource) -> SimplicialComplex:
    """Delta^e_A(K) for the specific matrix of ``source`` (no stability check)."""
    Kc, _ = K.compress()
    return SimplicialComplex(K.n, _exterior_faces(Kc, source))


def exterior_shift(K: SimplicialComplex, cfg: ShiftConfig | None = None) -> ShiftResult:
    cfg = cfg or ShiftConfig()
    Kc = _compressed(K, cfg)
    faces_, rep = stable_generic_run(lambda src: _exterior_faces(Kc, src), Kc.n, cfg)
    return ShiftResult(SimplicialComplex(K.n, faces_), "exterior", cfg.prime, rep.seeds, rep.stable, rep.attempts)


def shift(K: SimplicialComplex, variant: str = "exterior", cfg: ShiftConfig | None = None) -> SimplicialComplex:
    """Convenience: the shifted complex for ``variant`` in {'exterior', 'symmetric'}."""
    if variant in ("exterior", "ext", "e"):
        return exterior_shift(K, cfg).shifted
    if variant in ("symmetric", "sym", "s"):
        from .symmetric import symmetric_shift
        return symmetric_shift(K, cfg).shifted
    raise BadParameters(f"unknown variant {variant!r}")


# intervals


def init(S: tuple, j: int) -> tuple:
    """The j lex-least elements of S; init(S, 0) is the empty face."""
    return tuple(S[:j])


def interval(S, i: int, n: int) -> list:
    """I_S^i(n): sets T of size |S|+i in [n] whose |S| least elements are S."""
    S = as_face(S)
    top = S[-1] if S else 0
    return [S + rest for rest in combinations(range(top + 1, n + 1), i)]


def interval_faces(Delta: SimplicialComplex, S, i: int, n: int | None = None) -> set:
    n = Delta.n if n is None else n
    return {T for T in interval(S, i, n) if T in Delta}


def d_value(Delta: SimplicialComplex, S, n: int | None = None) -> int:
    """D(S) = |I^1_{init_{|S|-1}(S)} n Delta|."""
    if not is_shifted(Delta):
        raise NotShifted("D(S) is defined on shifted complexes")
    S = as_face(S)
    if not S:
        raise BadParameters("D is defined for nonempty S")
    return len(interval_faces(Delta, S[:-1], 1, n))


def last_gap(S) -> int:
    """s_{j+1} - s_j for the two largest elements, with s_0 = 0."""
    S = as_face(S)
    return S[-1] - (S[-2] if len(S) > 1 else 0)


def membership_by_d(Delta: SimplicialComplex, S, n: int | None = None) -> bool:
    return last_gap(S) <= d_value(Delta, S, n)


def interior_sign(T: tuple, S: tuple) -> int:
    """Sign of e_T |_ e_S = (-1)^a(T,S) e_{S-T}, a = #{(s,t): s not in T, t < s}."""
    ts = set(T)
    a = sum(1 for s in S if s not in ts for t in T if t < s)
    return -1 if a % 2 else 1


def _contraction_matrix(K: SimplicialComplex, A: np.ndarray, p: int, R: tuple, q: int) -> np.ndarray:
    """Matrix of f_R |_ on span{e_T : T in K, |T| = q} -> span{e_U : |U| = q-|R|}."""
    from .linalg import minor_det
    cols = K.faces(q)
    s = len(R)
    targets = {}
    entries = []
    for c, T in enumerate(cols):
        for Sp in combinations(T, s):
            U = tuple(x for x in T if x not in Sp)
            val = minor_det(A, R, Sp, p) * interior_sign(Sp, T) % p
            if val:
                entries.append((targets.setdefault(U, len(targets)), c, val))
    M = np.zeros((max(len(targets), 1), len(cols)), dtype=np.int64)
    for r, c, v in entries:
        M[r, c] = v
    return M


def _kernel_count(Kc: SimplicialComplex, S: tuple, i: int, source: GenericMatrixSource) -> int:
    n, p, A = Kc.n, source.p, source.matrix
    q = len(S) + i
    if not Kc.faces(q):
        return 0
    before = [R for R in combinations(range(1, n + 1), len(S)) if R < S]
    blocks = [_contraction_matrix(Kc, A, p, R, q) for R in before]
    stack_lt = np.concatenate(blocks) if blocks else np.zeros((0, len(Kc.faces(q))), dtype=np.int64)
    stack_le = np.concatenate([stack_lt, _contraction_matrix(Kc, A, p, S, q)])
    return rank(stack_le, p) - rank(stack_lt, p)


def kernel_interval_count(K: SimplicialComplex, S, i: int, cfg: ShiftConfig | None = None) -> int:
    """dim of the common kernel of f_R|_ over R <_L S minus that over R <=_L S.

    Equals |I_S^i n Delta^e(K)| for generic A; computed only from ranks.
    """
    cfg = cfg or ShiftConfig()
    S = as_face(S)
    if i < 1:
        raise BadParameters("i must be positive")
    Kc, verts = K.compress()
    if Kc.dim < 0:
        return 0
    if verts != tuple(range(1, len(verts) + 1)):
        raise BadParameters("kernel_interval_count needs vertex labels 1..m")
    value, _ = stable_generic_run(lambda src: _kernel_count(Kc, S, i, src), Kc.n, cfg)
    return value


# hyperconnectivity


def _hyper_rank(G: SimplicialComplex, d: int, source: GenericMatrixSource) -> int:
    n, p = G.n, source.p
    A = source.matrix
    edges = G.faces(2)
    M = np.zeros((d * n, len(edges)), dtype=np.int64)
    for c, (a, b) in enumerate(edges):
        # f_i |_ e_a^e_b = a_ia e_b - a_ib e_a
        for i in range(d):
            M[i * n + (b - 1), c] = A[i, a - 1]
            M[i * n + (a - 1), c] = (-A[i, b - 1]) % p
    return rank(M, p)


def hyperconnectivity_kernel_dim(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> int:
    """dim ker of x -> (f_1|_x, ..., f_d|_x) on the edge space of G."""
    cfg = cfg or ShiftConfig()
    if G.dim > 1:
        raise BadParameters("expected a graph")
    Gc, _ = G.compress()
    size = max(Gc.n, d)
    r, _ = stable_generic_run(lambda src: _hyper_rank(Gc, d, src), size, cfg)
    return len(Gc.faces(2)) - r


def _hyper_pair(G: SimplicialComplex, d: int, cfg: ShiftConfig | None) -> tuple:
    cfg = cfg or ShiftConfig()
    Gc, _ = G.compress()
    n = Gc.n
    Delta = exterior_shift(Gc, cfg).shifted
    kernel = hyperconnectivity_kernel_dim(Gc, d, cfg)
    expected = sum(1 for S in Delta.faces(2) if S[0] > d)
    if kernel != expected:
        raise Disagreement(f"kernel dim {kernel} but {expected} edges of the shifted graph avoid [d]")
    return Gc, Delta, n, kernel


def is_d_acyclic(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> bool:
    Gc, Delta, n, kernel = _hyper_pair(G, d, cfg)
    by_shift = (d + 1, d + 2) not in Delta
    if by_shift != (kernel == 0):
        raise Disagreement("acyclicity oracles disagree")
    return by_shift


def is_d_hyperconnected(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> bool:
    """{d,n} in Delta^e(G); for n <= d this means G is complete."""
    Gc, Delta, n, kernel = _hyper_pair(G, d, cfg)
    if n <= d:
        return len(Gc.faces(2)) == n * (n - 1) // 2
    # {d,n} in Delta iff every edge {i,j} with i <= d is present (shiftedness).
    by_shift = (d, n) in Delta
    edges = len(Gc.faces(2))
    by_count = edges - kernel == d * n - d * (d + 1) // 2
    if by_shift != by_count:
        raise Disagreement("hyperconnectivity oracles disagree")
    return by_shift


# Sarkaria maps and near cones


def position_sign(j: int, S: tuple) -> int:
    """(-1)^sgn(j,S) with sgn(j,S) = #{t in S : t < j}."""
    return -1 if sum(1 for t in S if t < j) % 2 else 1


@dataclass
class ChainMap:
    """Matrices per face size k, acting on span{e_S : S in K, |S| = k}."""

    bases: dict
    matrices: dict
    p: int


def _index(K: SimplicialComplex) -> dict:
    return {k: {f: i for i, f in enumerate(K.faces(k))} for k in range(K.dim + 2)}


def contraction_by(K: SimplicialComplex, weights: dict, p: int) -> ChainMap:
    """g |_ with g = sum_j c_j e_j: e_S -> sum_j c_j (-1)^sgn(j,S) e_{S-j}."""
    idx = _index(K)
    mats = {}
    for k in range(1, K.dim + 2):
        M = np.zeros((len(idx[k - 1]), len(idx[k])), dtype=np.int64)
        for S, c in idx[k].items():
            for j in S:
                w = weights.get(j, 0)
                if w:
                    r = idx[k - 1][tuple(x for x in S if x != j)]
                    M[r, c] = (M[r, c] + position_sign(j, S) * w) % p
        mats[k] = M
    return ChainMap({k: K.faces(k) for k in idx}, mats, p)


def is_near_cone(K: SimplicialComplex, v: int) -> bool:
    if (v,) not in K:
        return False
    for S in K.face_set:
        if v in S:
            continue
        for j in S:
            if tuple(sorted(set(S) - {j} | {v})) not in K:
                return False
    return True


def sarkaria_U(K: SimplicialComplex, v: int = 1, p: int | None = None) -> ChainMap:
    if not is_near_cone(K, v):
        raise NotNearCone(f"not a near cone with respect to {v}")
    p = p or ShiftConfig().prime
    idx = _index(K)
    mats = {}
    for k in range(K.dim + 2):
        M = np.zeros((len(idx[k]), len(idx[k])), dtype=np.int64)
        for S, c in idx[k].items():
            M[c, c] = 1
            if v not in S:
                for i in S:
                    target = tuple(sorted(set(S) - {i} | {v}))
                    M[idx[k][target], c] = (M[idx[k][target], c] - position_sign(i, S)) % p
        mats[k] = M
    return ChainMap({k: K.faces(k) for k in idx}, mats, p)


def sarkaria_D(K: SimplicialComplex, alpha: dict, p: int | None = None) -> ChainMap:
    """D(e_S) = e_S / alpha_S with alpha_S the product of the weights on S."""
    p = p or ShiftConfig().prime
    if any(alpha.get(i, 0) % p == 0 for i in K.vertices):
        raise ZeroWeight("all weights must be nonzero")
    mats = {}
    for k in range(K.dim + 2):
        level = K.faces(k)
        diag = []
        for S in level:
            a = 1
            for i in S:
                a = a * alpha[i] % p
            diag.append(pow(a, p - 2, p))
        mats[k] = np.diag(np.array(diag, dtype=np.int64)) if level else np.zeros((0, 0), dtype=np.int64)
    return ChainMap({k: K.faces(k) for k in range(K.dim + 2)}, mats, p)


def sarkaria_identities(K: SimplicialComplex, alpha: dict, v: int = 1, p: int | None = None) -> bool:
    """Check U o (e_v|_) = (e|_) o U and D o (e|_) = (f|_) o D in every degree."""
    p = p or ShiftConfig().prime
    U = sarkaria_U(K, v, p)
    D = sarkaria_D(K, alpha, p)
    ev = contraction_by(K, {v: 1}, p)
    e = contraction_by(K, {i: 1 for i in K.vertices}, p)
    f = contraction_by(K, {i: alpha[i] for i in K.vertices}, p)
    ok = True
    for k in range(1, K.dim + 2):
        lhs = (U.matrices[k - 1] @ ev.matrices[k]) % p
        rhs = (e.matrices[k] @ U.matrices[k]) % p
        ok &= bool(np.array_equal(lhs, rhs))
        lhs = (D.matrices[k - 1] @ e.matrices[k]) % p
        rhs = (f.matrices[k] @ D.matrices[k]) % p
        ok &= bool(np.array_equal(lhs, rhs))
    return ok


def cone_over_shift(Delta_link: SimplicialComplex, n: int, apex: int = 1, offset: int = 1) -> set:
    """Faces of apex * (Delta_link + offset)."""
    return {(apex,) + tuple(x + offset for x in S) for S in Delta_link.face_set}


def near_cone_decomposition_check(K: SimplicialComplex, v: int, cfg: ShiftConfig | None = None) -> bool:
    """Delta^e(K) = (1 * (Delta^e(lk(v,K)) + 1)) u {S in Delta^e(K) : 1 not in S}."""
    if not is_near_cone(K, v):
        raise NotNearCone(f"not a near cone with respect to {v}")
    return i_near_cone_decomposition_check(K, [v], cfg)


def i_near_cone_decomposition_check(K: SimplicialComplex, vertices, cfg: ShiftConfig | None = None) -> bool:
    """Decomposition for an i-near cone K(0) > K(1) > ... with K(j) = antist(v_j, K(j-1)):
    Delta^e(K) = B u disjoint union over j of j * (Delta^e(lk(v_j, K(j-1))) + j),
    B = {S in Delta^e(K) : S n [i] empty}."""
    Delta = exterior_shift(K, cfg).shifted
    i = len(vertices)
    B = {S for S in Delta.face_set if not set(S) & set(range(1, i + 1))}
    pieces = set()
    current = K
    for j, v in enumerate(vertices, start=1):
        if not is_near_cone(current, v):
            raise NotNearCone(f"step {j}: not a near cone with respect to {v}")
        lk = current.link((v,))
        lk_shift = exterior_shift(lk, cfg).shifted
        piece = cone_over_shift(lk_shift, K.n, apex=j, offset=j)
        if pieces & piece:
            return False
        pieces |= piece
        current = current.antistar((v,))
    return Delta.face_set == (B | pieces)


# structural formulas


def union_membership(T, D_K: int, D_L: int, D_sigma: int) -> bool:
    return last_gap(T) <= D_K + D_L - D_sigma


def simplex_shift(size: int) -> SimplicialComplex:
    return SimplicialComplex(max(size, 0), [range(1, size + 1)])


def max_face_counts(Delta: SimplicialComplex, i: int) -> int:
    """|{S in Delta : S n [i] empty, |S| = dim + 1}|."""
    top = Delta.dim + 1
    return sum(1 for S in Delta.faces(top) if not S or S[0] > i)
