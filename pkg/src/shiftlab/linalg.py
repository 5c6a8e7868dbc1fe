"""Exact linear algebra over prime fields (numpy int64) and the integers.

Residues are kept in [0, p) with p < 2**31, so a product of two residues fits
in a signed 64-bit integer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (BadParameters, ClosureViolation, DimensionMismatch,
                     GenericInstability, SizeMismatch)

MERSENNE_31 = 2**31 - 1


def default_prime() -> int:
    raw = os.environ.get("SHIFTLAB_PRIME")
    return int(raw) if raw else MERSENNE_31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p) or p >= 2**31:
        raise BadParameters(f"{p} is not a prime below 2^31")


@dataclass(frozen=True)
class ShiftConfig:
    prime: int = field(default_factory=default_prime)
    seeds: tuple = (1, 2)
    max_retries: int = 3
    max_n: int = 16


def as_modp(M, p: int) -> np.ndarray:
    arr = np.asarray(M, dtype=object) if not isinstance(M, np.ndarray) else M
    return np.array(np.mod(arr, p), dtype=np.int64)


def row_reduce(M: np.ndarray, p: int) -> tuple:
    """Reduced row echelon form mod p; returns (R, pivot columns)."""
    A = as_modp(M, p).copy()
    if A.ndim != 2:
        raise DimensionMismatch("expected a 2-d matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - (col[nzr, None] * A[r]) % p) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M, p: int) -> int:
    A = as_modp(M, p)
    if A.size == 0:
        return 0
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(row_reduce(A, p)[1])


def solve(M, b, p: int):
    """Some x with M x = b mod p, or None."""
    A = as_modp(M, p)
    b = as_modp(b, p).reshape(-1)
    if A.shape[0] != b.shape[0]:
        raise DimensionMismatch("rows of M and length of b differ")
    aug = np.concatenate([A, b[:, None]], axis=1)
    R, piv = row_reduce(aug, p)
    if piv and piv[-1] == A.shape[1]:
        return None
    x = np.zeros(A.shape[1], dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, -1]
    return x


def nullity(M, p: int) -> int:
    A = as_modp(M, p)
    return A.shape[1] - rank(A, p)


class EchelonBasis:
    """Incrementally grown reduced row basis of a subspace of F_p^ncols."""

    def __init__(self, ncols: int, p: int):
        self.p = p
        self.ncols = ncols
        self._rows = np.zeros((8, ncols), dtype=np.int64)
        self._pivots: list = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row) -> np.ndarray:
        p = self.p
        v = as_modp(row, p)
        if v.shape != (self.ncols,):
            raise DimensionMismatch("row length does not match the basis")
        r = self.rank
        if r:
            coeff = v[self._pivots]
            nz = np.nonzero(coeff)[0]
            if nz.size:
                v = (v - ((coeff[nz, None] * self._rows[nz]) % p).sum(axis=0)) % p
        return v

    def insert(self, row) -> bool:
        """Add ``row``; True iff it was independent of the rows so far."""
        p = self.p
        v = self.reduce(row)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * pow(int(v[c]), p - 2, p)) % p
        r = self.rank
        if r:
            col = self._rows[:r, c].copy()
            hit = np.nonzero(col)[0]
            if hit.size:
                self._rows[hit] = (self._rows[hit] - (col[hit, None] * v) % p) % p
        if r == self._rows.shape[0]:
            self._rows = np.concatenate([self._rows, np.zeros_like(self._rows)])
        self._rows[r] = v
        self._pivots.append(c)
        return True


def echelon_insert(state: EchelonBasis, row) -> str:
    return "independent" if state.insert(row) else "dependent"


@dataclass
class GreedyScanReport:
    candidates: list
    accepted: list
    rank: int


def greedy_scan(labels: Sequence, rows: Callable, ncols: int, p: int, stop_at: int | None = None) -> GreedyScanReport:
    """Scan candidate rows in the given order, keeping those that raise the rank."""
    basis = EchelonBasis(ncols, p)
    seen, accepted = [], []
    for lab in labels:
        if stop_at is not None and len(accepted) >= stop_at:
            break
        seen.append(lab)
        if basis.insert(rows(lab)):
            accepted.append(lab)
    return GreedyScanReport(seen, accepted, basis.rank)


def det_modp(M, p: int) -> int:
    A = as_modp(M, p).copy()
    n = A.shape[0]
    if A.shape != (n, n):
        raise SizeMismatch("determinant of a non-square matrix")
    det = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return 0
        k = c + nz[0]
        if k != c:
            A[[c, k]] = A[[k, c]]
            det = -det
        piv = int(A[c, c])
        det = det * piv % p
        inv = pow(piv, p - 2, p)
        below = A[c + 1:, c].copy()
        hit = np.nonzero(below)[0]
        if hit.size:
            factors = (below[hit] * inv) % p
            A[c + 1 + hit] = (A[c + 1 + hit] - (factors[:, None] * A[c]) % p) % p
    return det % p


def minor_det(A, rows: Sequence[int], cols: Sequence[int], p: int) -> int:
    """Determinant of the submatrix on 1-based ``rows`` x ``cols``."""
    if len(rows) != len(cols):
        raise SizeMismatch("minor needs as many rows as columns")
    if not rows:
        return 1
    A = np.asarray(A)
    sub = A[np.ix_([r - 1 for r in rows], [c - 1 for c in cols])]
    return det_modp(sub, p)


class GenericMatrixSource:
    """Seeded random n x n invertible matrix over F_p.

    The same (p, seed, n) always reproduces the same matrix.  Singular draws
    are discarded and redrawn from the same stream.
    """

    def __init__(self, p: int, seed: int, n: int):
        _check_prime(p)
        self.p, self.seed, self.n = p, int(seed), int(n)
        self._A = None

    @property
    def matrix(self) -> np.ndarray:
        if self._A is None:
            rng = np.random.default_rng([self.seed, self.n, self.p])
            while True:
                A = rng.integers(0, self.p, size=(self.n, self.n), dtype=np.int64)
                if self.n == 0 or det_modp(A, self.p) != 0:
                    break
            A.setflags(write=False)
            self._A = A
        return self._A

    def entry(self, i: int, j: int) -> int:
        return int(self.matrix[i - 1, j - 1])


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    seeds: tuple
    attempts: int


def stable_generic_run(computation: Callable, n: int, cfg: ShiftConfig | None = None) -> tuple:
    """Run ``computation(source)`` with two seeded sources and compare.

    Equal answers are accepted.  Otherwise (or when a run signals a degenerate
    draw by raising GenericInstability) fresh seeds are tried, up to
    ``cfg.max_retries`` times.  Returns (value, StabilityReport).
    """
    cfg = cfg or ShiftConfig()
    s1, s2 = cfg.seeds
    for attempt in range(cfg.max_retries + 1):
        seeds = (s1 + 7919 * attempt, s2 + 7919 * attempt)
        try:
            a = computation(GenericMatrixSource(cfg.prime, seeds[0], n))
            b = computation(GenericMatrixSource(cfg.prime, seeds[1], n))
        except (GenericInstability, ClosureViolation):
            continue
        if a == b:
            return a, StabilityReport(True, seeds, attempt + 1)
    raise GenericInstability(f"no agreement after {cfg.max_retries + 1} attempts at p={cfg.prime}")


# integers


def smith_normal_form(M) -> tuple:
    """Smith normal form over Z with Python ints.

    Returns (D, U, V) with U*M*V = D, U and V unimodular, D diagonal with
    d_1 | d_2 | ... .  Matrices are lists of lists.
    """
    D = [[int(x) for x in row] for row in M]
    m = len(D)
    n = len(D[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        if q:
            rd, rs = D[dst], D[src]
            for j in range(n):
                if rs[j]:
                    rd[j] -= q * rs[j]
            ud, us = U[dst], U[src]
            for j in range(m):
                if us[j]:
                    ud[j] -= q * us[j]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        if q:
            for row in D:
                if row[src]:
                    row[dst] -= q * row[src]
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            changed = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, D[i][t] // D[t][t])
                    if D[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, D[t][j] // D[t][t])
                    if D[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def _matvec(M, x):
    return [sum(a * b for a, b in zip(row, x)) for row in M]


def solve_integer(M, b):
    """Some integer x with M x = b, or None."""
    M = [[int(x) for x in row] for row in M]
    b = [int(x) for x in b]
    if len(M) != len(b):
        raise DimensionMismatch("rows of M and length of b differ")
    n = len(M[0]) if M else 0
    if not M:
        return [0] * n
    D, U, V = smith_normal_form(M)
    c = _matvec(U, b)
    y = [0] * n
    for i, ci in enumerate(c):
        d = D[i][i] if i < n else 0
        if d == 0:
            if ci != 0:
                return None
        elif ci % d:
            return None
        else:
            y[i] = ci // d
    return _matvec(V, y)
