"""Generic rigidity of graphs through the rigidity matrix over F_p."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .complex import SimplicialComplex
from .errors import BadParameters, Disagreement
from .linalg import GenericMatrixSource, ShiftConfig, rank, stable_generic_run


def embedding(source: GenericMatrixSource, d: int, n: int) -> np.ndarray:
    """f(v) = column v of the first d rows of the generic matrix (d x n)."""
    return source.matrix[:d, :n]


def rigidity_matrix(edges, f: np.ndarray, p: int) -> np.ndarray:
    """(d n) x |E|; the column of {v<u} holds f(v)-f(u) in v's block and f(u)-f(v) in u's."""
    d, n = f.shape
    M = np.zeros((d * n, len(edges)), dtype=np.int64)
    for c, (v, u) in enumerate(edges):
        diff = (f[:, v - 1] - f[:, u - 1]) % p
        M[(v - 1) * d:v * d, c] = diff
        M[(u - 1) * d:u * d, c] = (-diff) % p
    return M


def _graph(G: SimplicialComplex) -> SimplicialComplex:
    if G.dim > 1:
        raise BadParameters("expected a graph (dimension at most 1)")
    return G


def _ranks(G: SimplicialComplex, d: int, source: GenericMatrixSource) -> tuple:
    n, p = G.n, source.p
    f = embedding(source, d, n)
    own = rank(rigidity_matrix(G.faces(2), f, p), p)
    full = rank(rigidity_matrix(list(combinations(range(1, n + 1), 2)), f, p), p)
    return own, full


def _run(G: SimplicialComplex, d: int, cfg: ShiftConfig | None) -> tuple:
    cfg = cfg or ShiftConfig()
    G, _ = _graph(G).compress()  # unused labels are not vertices
    size = max(G.n, d)
    value, _ = stable_generic_run(lambda src: _ranks(G, d, src), size, cfg)
    return value


def rigidity_rank(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> int:
    return _run(G, d, cfg)[0]


def is_generically_rigid(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> bool:
    own, full = _run(G, d, cfg)
    return own == full


def stress_space_dim(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> int:
    return len(G.faces(2)) - rigidity_rank(G, d, cfg)


def is_stress_free(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None) -> bool:
    return stress_space_dim(G, d, cfg) == 0


@dataclass(frozen=True)
class LeeReport:
    rigid_matrix: bool
    rigid_shift: bool
    stress_free_matrix: bool
    stress_free_shift: bool

    @property
    def agree(self) -> bool:
        return self.rigid_matrix == self.rigid_shift and self.stress_free_matrix == self.stress_free_shift


def lee_crosscheck(G: SimplicialComplex, d: int, cfg: ShiftConfig | None = None, strict: bool = True) -> LeeReport:
    """Compare the rank oracle with membership of {d,n} and {d+1,d+2} in Delta^s(G)."""
    from .symmetric import rigidity_links
    Gc, _ = _graph(G).compress()
    own, full = _run(Gc, d, cfg)
    links = rigidity_links(Gc, d, cfg)
    report = LeeReport(own == full, links["rigid"], own == len(Gc.faces(2)), links["stress_free"])
    if strict and not report.agree:
        raise Disagreement(f"rank and shifting oracles disagree: {report}")
    return report
