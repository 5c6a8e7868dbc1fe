"""Deleted joins and products, Smith classes over Z_2 and Van Kampen cocycles over Z."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .complex import SimplicialComplex
from .errors import BadParameters, Disagreement, NotAdmissible
from .linalg import rank, solve, solve_integer


def _key(face: tuple) -> tuple:
    return (len(face), face)


def is_representative(S: tuple, T: tuple) -> bool:
    """(S,T) represents its orbit {(S,T),(T,S)} when (|S|, S) < (|T|, T)."""
    return _key(S) < _key(T)


def _disjoint_pairs(K: SimplicialComplex, allow_empty: bool) -> list:
    faces_ = [f for f in K if allow_empty or f]
    out = []
    for S in faces_:
        ss = set(S)
        for T in faces_:
            if not ss.intersection(T):
                out.append((S, T))
    return out


@dataclass
class DeletedJoin:
    """Faces S^1 u T^2 of K_* stored as pairs (S, T), grouped by dimension."""

    base: SimplicialComplex
    faces: dict
    index: dict
    orbits: dict

    def tau(self, face: tuple) -> tuple:
        return (face[1], face[0])

    @property
    def dim(self) -> int:
        return max(self.faces)

    def coboundary(self, q: int) -> np.ndarray:
        """delta : C^q -> C^{q+1} over F_2 (rows: (q+1)-faces)."""
        rows = self.faces.get(q + 1, [])
        cols = self.index.get(q, {})
        M = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for r, (S, T) in enumerate(rows):
            for i in range(len(S)):
                c = cols.get((S[:i] + S[i + 1:], T))
                if c is not None:
                    M[r, c] = 1
            for j in range(len(T)):
                c = cols.get((S, T[:j] + T[j + 1:]))
                if c is not None:
                    M[r, c] = 1
        return M

    def orbit_coboundary(self, q: int) -> np.ndarray:
        """delta on symmetric cochains in orbit coordinates: rows are orbit
        representatives of dimension q+1, columns orbits of dimension q."""
        full = self.coboundary(q)
        reps = self.orbits.get(q + 1, [])
        col_orbit = self._orbit_of(q)
        n_orb = len(self.orbits.get(q, []))
        M = np.zeros((len(reps), n_orb), dtype=np.int64)
        rows_idx = self.index.get(q + 1, {})
        for r, face in enumerate(reps):
            row = full[rows_idx[face]]
            for c in np.nonzero(row)[0]:
                M[r, col_orbit[c]] ^= 1
        return M

    def _orbit_of(self, q: int) -> list:
        reps = {f: i for i, f in enumerate(self.orbits.get(q, []))}
        return [reps[f] if f in reps else reps[self.tau(f)] for f in self.faces.get(q, [])]


def deleted_join(K: SimplicialComplex) -> DeletedJoin:
    faces_ = {}
    for S, T in _disjoint_pairs(K, allow_empty=True):
        faces_.setdefault(len(S) + len(T) - 1, []).append((S, T))
    for q in faces_:
        faces_[q].sort(key=lambda st: (_key(st[0]), _key(st[1])))
    index = {q: {f: i for i, f in enumerate(fs)} for q, fs in faces_.items()}
    orbits = {}
    for q, fs in faces_.items():
        if q < 0:
            continue
        reps = [f for f in fs if is_representative(*f)]
        if 2 * len(reps) != len(fs):
            raise Disagreement("involution is not free off the empty face")
        orbits[q] = reps
    return DeletedJoin(K, faces_, index, orbits)


@dataclass
class SymmetricCochainZ2:
    degree: int
    representatives: list
    values: np.ndarray

    def full(self, J: DeletedJoin) -> np.ndarray:
        pos = {f: i for i, f in enumerate(self.representatives)}
        return np.array([self.values[pos[f] if f in pos else pos[J.tau(f)]] for f in J.faces.get(self.degree, [])],
                        dtype=np.int64)


@dataclass
class SmithResult:
    cochain: SymmetricCochainZ2
    vanishes: bool
    exhausted: bool = False
    iterates: list = field(default_factory=list, repr=False)


def smith_iterates(J: DeletedJoin, m: int) -> list:
    """Full cochains z_0 = 1, z_{i+1} = delta(lift(z_i)), as vectors on the faces of each dimension."""
    z = np.ones(len(J.faces.get(0, [])), dtype=np.int64)
    out = [z]
    for q in range(m):
        faces_q = J.faces.get(q, [])
        lift = np.array([z[i] if is_representative(*f) else 0 for i, f in enumerate(faces_q)], dtype=np.int64)
        z = (J.coboundary(q) @ lift) % 2 if faces_q else np.zeros(len(J.faces.get(q + 1, [])), dtype=np.int64)
        out.append(z)
    return out


def _symmetric_coboundary_solve(J: DeletedJoin, z: np.ndarray, m: int):
    reps = J.orbits.get(m, [])
    idx = J.index.get(m, {})
    target = np.array([z[idx[f]] for f in reps], dtype=np.int64)
    if not target.any():
        return np.zeros(len(J.orbits.get(m - 1, [])), dtype=np.int64)
    if m - 1 < 0 or not J.orbits.get(m - 1):
        return None
    return solve(J.orbit_coboundary(m - 1), target, 2)


def smith_class(K: SimplicialComplex, m: int) -> SmithResult:
    """m-fold Smith connecting map applied to the fundamental 0-cocycle of K_*."""
    if m < 1:
        raise BadParameters("m must be at least 1")
    J = deleted_join(K)
    zs = smith_iterates(J, m)
    z = zs[-1]
    for q, zq in enumerate(zs[1:], start=1):
        if zq.size and J.faces.get(q + 1) and ((J.coboundary(q) @ zq) % 2).any():
            raise Disagreement(f"iterate {q} is not a cocycle")
    reps = J.orbits.get(m, [])
    idx = J.index.get(m, {})
    cochain = SymmetricCochainZ2(m, reps, np.array([z[idx[f]] for f in reps], dtype=np.int64))
    exhausted = m > J.dim
    x = _symmetric_coboundary_solve(J, z, m)
    return SmithResult(cochain, x is not None, exhausted, zs)


# deleted product


@dataclass
class DeletedProductComplex:
    """Cells S x T (S, T nonempty, disjoint) of K_x grouped by dimension."""

    base: SimplicialComplex
    cells: dict
    index: dict
    orbits: dict

    @property
    def dim(self) -> int:
        return max(self.cells, default=-1)

    def boundary(self, j: int) -> np.ndarray:
        """Integer matrix of d : C_j -> C_{j-1}."""
        rows = self.index.get(j - 1, {})
        cols = self.cells.get(j, [])
        M = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for c, (S, T) in enumerate(cols):
            for i in range(len(S)):
                r = rows.get((S[:i] + S[i + 1:], T))
                if r is not None:
                    M[r, c] += (-1) ** i
            sign = (-1) ** (len(S) - 1)
            for i in range(len(T)):
                r = rows.get((S, T[:i] + T[i + 1:]))
                if r is not None:
                    M[r, c] += sign * (-1) ** i
        return M

    def orbit_coboundary(self, j: int, eps: int) -> np.ndarray:
        """delta : C^j -> C^{j+1} on cochains of the chains (1 + eps tau) C,
        in coordinates x(O) = x((1 + eps tau) rep(O))."""
        bd = self.boundary(j + 1)
        cells_lo = self.cells.get(j, [])
        orbit_lo = {f: i for i, f in enumerate(self.orbits.get(j, []))}
        factor = []
        for S, T in cells_lo:
            if (S, T) in orbit_lo:
                factor.append((orbit_lo[(S, T)], 1))
            else:
                # (1 + eps tau)(T' x S') = eps (-1)^(dim S' dim T') (1 + eps tau)(S' x T')
                factor.append((orbit_lo[(T, S)], eps * (-1) ** ((len(S) - 1) * (len(T) - 1))))
        reps = self.orbits.get(j + 1, [])
        idx_hi = self.index.get(j + 1, {})
        M = np.zeros((len(reps), len(orbit_lo)), dtype=object)
        M[:] = 0
        for r, rep in enumerate(reps):
            col = bd[:, idx_hi[rep]]
            for c in np.nonzero(col)[0]:
                o, s = factor[c]
                M[r, o] += int(col[c]) * s
        return M


def deleted_product(K: SimplicialComplex) -> DeletedProductComplex:
    cells = {}
    for S, T in _disjoint_pairs(K, allow_empty=False):
        cells.setdefault(len(S) + len(T) - 2, []).append((S, T))
    for j in cells:
        cells[j].sort(key=lambda st: (_key(st[0]), _key(st[1])))
    index = {j: {c: i for i, c in enumerate(cs)} for j, cs in cells.items()}
    orbits = {j: [c for c in cs if is_representative(*c)] for j, cs in cells.items()}
    return DeletedProductComplex(K, cells, index, orbits)


def _interlaced(A: tuple, B: tuple) -> bool:
    """a_0 < b_0 < a_1 < b_1 < ... (alternating, A first, lengths equal or A one shorter... handled by caller)."""
    merged = sorted([(a, 0) for a in A] + [(b, 1) for b in B])
    return all(tag == i % 2 for i, (_, tag) in enumerate(merged))


def van_kampen_cocycle(K: SimplicialComplex, m: int) -> tuple:
    """o^m in orbit coordinates: (representatives, integer values, eps).

    m = 2k: value 1 on (1 + tau)(S x T) when s_0 < t_0 < ... < s_k < t_k.
    m = 2k+1: value 1 on (1 - tau)(S x T) when t_0 < s_0 < t_1 < ... < s_k < t_{k+1}.
    """
    if m < 1:
        raise BadParameters("m must be at least 1")
    P = deleted_product(K)
    reps = P.orbits.get(m, [])
    vals = []
    for S, T in reps:
        if m % 2 == 0:
            ok = len(S) == len(T) == m // 2 + 1 and _interlaced(S, T)
        else:
            ok = len(S) + 1 == len(T) == m // 2 + 2 and _interlaced(T, S)
        vals.append(1 if ok else 0)
    return reps, vals, (1 if m % 2 == 0 else -1)


def vk_vanishes_Z(K: SimplicialComplex, m: int) -> bool:
    """Is o^m = delta x for an integer cochain x of the same symmetry type?"""
    P = deleted_product(K)
    reps, vals, eps = van_kampen_cocycle(K, m)
    if not any(vals):
        return True
    lower = P.orbits.get(m - 1, [])
    if not lower:
        return False
    M = P.orbit_coboundary(m - 1, eps)
    return solve_integer(M.tolist(), vals) is not None


def vk_is_cocycle(K: SimplicialComplex, m: int) -> bool:
    P = deleted_product(K)
    reps, vals, eps = van_kampen_cocycle(K, m)
    if not P.orbits.get(m + 1):
        return True
    M = P.orbit_coboundary(m, eps)
    return not any(sum(int(M[r, c]) * v for c, v in enumerate(vals)) for r in range(M.shape[0]))


# contraction chain maps


def _perm_sign(seq: list) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


@dataclass
class ContractionMap:
    """Matrices phi_k : C_k(K') -> C_k(K) for faces with k vertices."""

    source: SimplicialComplex
    target: SimplicialComplex
    matrices: dict
    coefficients: str

    def image(self, F: tuple) -> dict:
        k = len(F)
        col = self.source.faces(k).index(F)
        M = self.matrices[k]
        return {self.target.faces(k)[r]: int(M[r, col]) for r in np.nonzero(M[:, col])[0]}


def contraction_chain_map(K: SimplicialComplex, u: int, v: int, coefficients: str = "Z2") -> ContractionMap:
    """The injective chain map C(K') -> C(K) induced by the admissible contraction u -> v.

    F in K maps to itself; otherwise F goes to the (signed) sum of the faces
    (F - w) u {u} that lie in K.  Signs are computed with u placed first and
    v second in the vertex order, then converted back to increasing order.
    """
    from .minors import contract, is_admissible
    if coefficients not in ("Z2", "Z"):
        raise BadParameters("coefficients must be 'Z2' or 'Z'")
    if not is_admissible(K, u, v):
        raise NotAdmissible(f"contracting {u} -> {v} is not admissible")
    Kp = contract(K, u, v)

    def order_key(x: int) -> tuple:
        return (0,) if x == u else (1,) if x == v else (2, x)

    def oriented(face) -> tuple:
        return tuple(sorted(face, key=order_key))

    mats = {}
    for k in range(Kp.dim + 2):
        rows = {f: i for i, f in enumerate(K.faces(k))}
        cols = Kp.faces(k)
        M = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for c, F in enumerate(cols):
            if F in K:
                M[rows[F], c] = 1
                continue
            PF = oriented(F)
            to_pi_F = _perm_sign([PF.index(x) for x in F])
            for pos, w in enumerate(PF):
                G = tuple(sorted(set(F) - {w} | {u}))
                if G not in K:
                    continue
                PG = (u,) + tuple(x for x in PF if x != w)
                to_pi_G = _perm_sign([PG.index(x) for x in G])
                coeff = (-1) ** pos * to_pi_F * to_pi_G
                M[rows[G], c] += coeff
        if coefficients == "Z2":
            M %= 2
        mats[k] = M
    return ContractionMap(Kp, K, mats, coefficients)


def integer_boundary(K: SimplicialComplex, k: int) -> np.ndarray:
    """d : C_k -> C_{k-1} over Z for faces with k and k-1 vertices."""
    rows = {f: i for i, f in enumerate(K.faces(k - 1))}
    cols = K.faces(k)
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, T in enumerate(cols):
        for pos in range(k):
            M[rows[T[:pos] + T[pos + 1:]], c] = (-1) ** pos
    return M


def is_chain_map(phi: ContractionMap) -> bool:
    mod = 2 if phi.coefficients == "Z2" else None
    for k in range(1, max(phi.matrices) + 1):
        lhs = integer_boundary(phi.target, k) @ phi.matrices[k]
        rhs = phi.matrices[k - 1] @ integer_boundary(phi.source, k)
        if mod:
            lhs, rhs = lhs % mod, rhs % mod
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_injective(phi: ContractionMap) -> bool:
    p = 2 if phi.coefficients == "Z2" else 2**31 - 1
    return all(rank(M, p) == M.shape[1] for M in phi.matrices.values() if M.shape[1])


def smith_naturality(K: SimplicialComplex, u: int, v: int, m: int) -> bool:
    """phi^* Sm^m(K) and Sm^m(K') differ by a symmetric coboundary."""
    phi = contraction_chain_map(K, u, v, "Z2")
    Kp = phi.source
    J, Jp = deleted_join(K), deleted_join(Kp)
    z = smith_iterates(J, m)[-1]
    zp = smith_iterates(Jp, m)[-1]
    idx = J.index.get(m, {})
    pulled = np.zeros(len(Jp.faces.get(m, [])), dtype=np.int64)
    for i, (S, T) in enumerate(Jp.faces.get(m, [])):
        total = 0
        for S2, a in phi.image(S).items():
            for T2, b in phi.image(T).items():
                if a * b % 2:
                    total += int(z[idx[(S2, T2)]])
        pulled[i] = total % 2
    diff = (pulled + zp) % 2
    return _symmetric_coboundary_solve(Jp, diff, m) is not None
