"""Named checks of shifting theorems on fixed examples and seeded random families.

Each check returns a :class:`CheckResult`; ``run_check`` is the entry point
used by the command line.  Everything is deterministic given the seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import constructions as C
from .complex import LexOrder, SimplicialComplex, is_shifted, lex_compare_complexes, shifted_span
from .errors import BadParameters
from .exterior import (exterior_shift, i_near_cone_decomposition_check, interval_faces, last_gap,
                       max_face_counts, near_cone_decomposition_check, sarkaria_identities, d_value,
                       simplex_shift)
from .generators import (random_complex, random_graph, random_near_cone, random_planar_triangulation,
                         rng_for)
from .linalg import ShiftConfig
from .minors import contract, has_clique_minor, satisfies_link_condition
from .obstruction import smith_class
from .rigidity import is_stress_free, lee_crosscheck
from .symmetric import is_hl_certificate, symmetric_shift
from .vectors import g_vector, h_vector, is_m_sequence, satisfies_kk

VARIANTS = ("exterior", "symmetric")


@dataclass
class CheckResult:
    name: str
    ok: bool
    seed: int
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.name, "ok": self.ok, "seed": self.seed, **self.details}


def shifted(K: SimplicialComplex, variant: str, cfg: ShiftConfig | None = None) -> SimplicialComplex:
    if variant == "exterior":
        return exterior_shift(K, cfg).shifted
    return symmetric_shift(K, cfg).shifted


def _faces_list(faces) -> list:
    return [list(f) for f in sorted(faces)]


# checks


def check_disjoint_union(seed: int, count: int = 6) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    for t in range(count):
        K = random_complex(rng, int(rng.integers(2, 5)), 3, 3)
        L = random_complex(rng, int(rng.integers(2, 5)), 3, 3)
        for var in VARIANTS:
            lhs = shifted(C.disjoint_union(K, L), var)
            rhs = shifted(C.disjoint_union(shifted(K, var), shifted(L, var)), var)
            if lhs != rhs:
                bad.append({"instance": t, "variant": var})
    return CheckResult("disjoint-union", not bad, seed, {"instances": count, "failures": bad})


def check_cone_commute(seed: int, count: int = 8) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    for t in range(count):
        K = random_complex(rng, int(rng.integers(3, 7)), 4, 4)
        D = exterior_shift(K).shifted
        if exterior_shift(C.cone(K)).shifted != C.cone(D):
            bad.append({"instance": t, "property": "cone"})
        if exterior_shift(D).shifted != D:
            bad.append({"instance": t, "property": "idempotent"})
    return CheckResult("cone-commute", not bad, seed, {"instances": count, "failures": bad})


def stacked_expected(d: int, n: int) -> SimplicialComplex:
    first = (1,) + tuple(range(3, d + 1)) + (n,)
    return shifted_span(n, [first, tuple(range(2, d + 2))])


def random_stacked_sphere(rng: np.random.Generator, d: int, n: int) -> SimplicialComplex:
    K = C.boundary_simplex(d)
    while K.n < n:
        K = C.stellar_subdivision(K, K.facets[int(rng.integers(len(K.facets)))])
    return K


def check_stacked_sphere(seed: int) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    for d in (3, 4):
        for n in range(d + 2, d + 6):
            want = stacked_expected(d, n)
            for var in VARIANTS:
                for label, K in (("fixed", C.stacked_sphere(d, n)), ("random", random_stacked_sphere(rng, d, n))):
                    if shifted(K, var) != want:
                        bad.append({"d": d, "n": n, "variant": var, "gluing": label})
    return CheckResult("stacked-sphere", not bad, seed, {"failures": bad, "gluing_rule": C.STACKED_GLUING_RULE})


def glued_pair(rng: np.random.Generator, s: int, a: int, b: int) -> tuple:
    """K on [a] and L on [s] u {a+1..a+b}, both containing sigma = [s] and meeting in <sigma>."""
    sigma = tuple(range(1, s + 1))
    K = SimplicialComplex(a + b, list(random_complex(rng, a, 3, 3).facets) + [sigma])
    Lraw = random_complex(rng, s + b, 3, 3)
    relabel = {v: (v if v <= s else v - s + a) for v in range(1, s + b + 1)}
    L = SimplicialComplex(a + b, [[relabel[v] for v in f] for f in Lraw.facets] + [sigma])
    return K, L, sigma


def check_clique_sum(seed: int, count: int = 5) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    checked = 0
    for t in range(count):
        s = int(rng.integers(1, 3))
        K, L, sigma = glued_pair(rng, s, s + int(rng.integers(1, 3)), int(rng.integers(1, 3)))
        n = K.n
        for var in VARIANTS:
            DU = shifted(C.union(K, L), var)
            DK, DL, DS = shifted(K, var), shifted(L, var), simplex_shift(len(sigma))
            top = DU.dim + 1
            for k in range(0, top):
                for S in combinations(range(1, n + 1), k):
                    for i in range(1, top - k + 1):
                        lhs = len(interval_faces(DU, S, i, n))
                        rhs = (len(interval_faces(DK, S, i, n)) + len(interval_faces(DL, S, i, n))
                               - len(interval_faces(DS, S, i, n)))
                        checked += 1
                        if lhs != rhs:
                            bad.append({"instance": t, "variant": var, "S": list(S), "i": i})
            for k in range(1, top + 1):
                for T in combinations(range(1, n + 1), k):
                    bound = d_value(DK, T, n) + d_value(DL, T, n) - d_value(DS, T, n)
                    if (T in DU) != (last_gap(T) <= bound):
                        bad.append({"instance": t, "variant": var, "T": list(T)})
        # additive formula at j = dim(K n L) + 2 for overlapping random complexes
        A = random_complex(rng, 5, 3, 3)
        B = random_complex(rng, 5, 3, 3)
        U = C.union(A, B)
        d = C.intersection(A, B).dim
        DU, DA, DB = (exterior_shift(X).shifted for X in (U, A, B))
        j = d + 2
        for k in range(0, DU.dim + 2 - j):
            for S in combinations(range(1, 6), k):
                if len(interval_faces(DU, S, j, 5)) != len(interval_faces(DA, S, j, 5)) + len(interval_faces(DB, S, j, 5)):
                    bad.append({"instance": t, "additive": list(S)})
    return CheckResult("clique-sum", not bad, seed, {"instances": count, "interval_checks": checked, "failures": bad[:10]})


def check_join_max_faces(seed: int, count: int = 6) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    for t in range(count):
        K = random_complex(rng, int(rng.integers(2, 5)), 3, 3)
        L = random_complex(rng, int(rng.integers(2, 4)), 2, 2)
        DJ = exterior_shift(C.join(K, L)).shifted
        DK, DL = exterior_shift(K).shifted, exterior_shift(L).shifted
        for i in range(0, K.n + L.n + 1):
            if max_face_counts(DJ, i) != max_face_counts(DK, i) * max_face_counts(DL, i):
                bad.append({"instance": t, "i": i})
    return CheckResult("join-max-faces", not bad, seed, {"instances": count, "failures": bad})


def two_disjoint_edges() -> SimplicialComplex:
    return SimplicialComplex(4, [(1, 2), (3, 4)])


def check_join_counterexample(seed: int) -> CheckResult:
    B = two_disjoint_edges()
    details = {}
    ok = True
    for var in VARIANTS:
        left = shifted(C.suspension(B), var)
        right = shifted(C.suspension(shifted(B, var)), var)
        only_left = left.face_set - right.face_set
        only_right = right.face_set - left.face_set
        order = lex_compare_complexes(left, right)
        details[var] = {"only_in_shift_of_suspension": _faces_list(only_left),
                        "only_in_shift_of_suspended_shift": _faces_list(only_right),
                        "lex": order.value}
        ok &= only_left == {(1, 2, 6)} and only_right == {(1, 3, 4)} and order is LexOrder.K_FIRST
    return CheckResult("join-counterexample", ok, seed, details)


def check_k33_gap(seed: int) -> CheckResult:
    G = C.complete_bipartite(3, 3)
    ext = (3, 4) in exterior_shift(G).shifted
    sym = (3, 4) in symmetric_shift(G).shifted
    return CheckResult("k33-gap", ext and not sym, seed, {"in_exterior": ext, "in_symmetric": sym})


def check_ubt_cyclic(seed: int) -> CheckResult:
    bad = []
    for d, n in ((2, 6), (3, 7), (4, 8)):
        want = C.ubt_complex(d, n)
        for var in VARIANTS:
            if shifted(C.cyclic_boundary(d, n), var) != want:
                bad.append({"d": d, "n": n, "variant": var})
    return CheckResult("ubt-cyclic", not bad, seed, {"failures": bad})


def check_gluck(seed: int, count: int = 10) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    sizes = []
    for t in range(count):
        n = int(rng.integers(5, 11))
        T = random_planar_triangulation(rng, n)
        G = C.graph_of(T)
        sizes.append(n)
        if not is_stress_free(G, 3) or (4, 5) in symmetric_shift(G).shifted:
            bad.append({"instance": t, "n": n})
    return CheckResult("gluck", not bad, seed, {"instances": count, "sizes": sizes, "failures": bad})


def check_lee_equivalence(seed: int, count: int = 10) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    for t in range(count):
        G = random_graph(rng, int(rng.integers(4, 8)))
        if not G.faces(2):
            continue
        for d in (2, 3):
            rep = lee_crosscheck(G, d, strict=False)
            if not rep.agree:
                bad.append({"instance": t, "d": d})
    return CheckResult("lee-equivalence", not bad, seed, {"instances": count, "failures": bad})


def check_near_cone(seed: int, count: int = 10) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    for t in range(count):
        K = random_near_cone(rng, int(rng.integers(4, 8)))
        if not near_cone_decomposition_check(K, 1):
            bad.append({"instance": t, "kind": "near cone"})
        base = random_near_cone(rng, int(rng.integers(4, 7)))
        K2 = C.cone(base)
        if not i_near_cone_decomposition_check(K2, [1, 2]):
            bad.append({"instance": t, "kind": "2-near cone"})
    return CheckResult("near-cone", not bad, seed, {"instances": count, "failures": bad})


def check_sarkaria(seed: int) -> CheckResult:
    rng = rng_for(seed)
    K = C.cone(C.boundary_simplex(2))
    alpha = {v: int(rng.integers(1, 1000)) for v in range(1, K.n + 1)}
    ok = sarkaria_identities(K, alpha)
    return CheckResult("sarkaria", ok, seed, {"weights": alpha})


def check_minor_mainthm(seed: int, count: int = 20, ranks=(4, 5)) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    triggered = 0
    for t in range(count):
        G = random_graph(rng, int(rng.integers(5, 11)))
        Gc, _ = G.compress()
        for var in VARIANTS:
            D = shifted(Gc, var)
            for r in ranks:
                if (r - 1, r) in D:
                    triggered += 1
                    if has_clique_minor(Gc, r) is None:
                        bad.append({"instance": t, "variant": var, "r": r})
    return CheckResult("minor-mainthm", not bad, seed, {"instances": count, "triggered": triggered, "failures": bad})


def check_smith_hd(seed: int) -> CheckResult:
    results = {}
    ok = True
    for d in (1, 2, 3):
        res = smith_class(C.h_d_skeleton(d), 2 * d - 1)
        results[f"H({d})"] = not res.vanishes
        ok &= not res.vanishes
    k4 = smith_class(C.complete_graph(4), 3)
    results["K4 vanishes"] = k4.vanishes
    ok &= k4.vanishes
    return CheckResult("smith-hd", ok, seed, {"non_vanishing": results})


def h_contraction_holds(K: SimplicialComplex, u: int, v: int) -> bool:
    """h(K,t) = h(K',t) + t h(lk({u,v}),t) coefficientwise."""
    hK = h_vector(K)
    hC = h_vector(contract(K, u, v))
    hL = (0,) + h_vector(K.link(tuple(sorted((u, v)))))
    width = max(len(hK), len(hC), len(hL))
    pad = lambda h: tuple(h) + (0,) * (width - len(h))
    return pad(hK) == tuple(a + b for a, b in zip(pad(hC), pad(hL)))


def connected_sum_holds(K: SimplicialComplex, L: SimplicialComplex, sK, sL) -> bool:
    h = h_vector(C.connected_sum(K, L, sK, sL))
    d = len(h) - 1
    corr = (1,) + (0,) * (d - 1) + (1,)
    return h == tuple(a + b - c for a, b, c in zip(h_vector(K), h_vector(L), corr))


def check_hcontract_identity(seed: int, count: int = 10) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    done = 0
    spheres = [C.octahedron(), C.cyclic_boundary(4, 7), C.boundary_simplex(3)]
    while done < count:
        K = spheres[done] if done < len(spheres) else random_planar_triangulation(rng, int(rng.integers(6, 10)))
        edges = [e for e in K.faces(2) if satisfies_link_condition(K, *e)]
        if edges:
            u, v = edges[int(rng.integers(len(edges)))]
            if not h_contraction_holds(K, v, u):
                bad.append({"kind": "contraction", "edge": [u, v], "f": list(K.f_vector())})
        K2 = random_planar_triangulation(rng, int(rng.integers(5, 9)))
        L2 = random_stacked_sphere(rng, 3, int(rng.integers(4, 8)))
        if not connected_sum_holds(K2, L2, K2.facets[0], L2.facets[-1]):
            bad.append({"kind": "connected sum", "instance": done})
        done += 1
    return CheckResult("hcontract-identity", not bad, seed, {"instances": count, "failures": bad})


def check_kk_macaulay(seed: int, count: int = 15) -> CheckResult:
    rng = rng_for(seed)
    bad = []
    for t in range(count):
        K = random_complex(rng, int(rng.integers(3, 8)), 5, 4)
        D = exterior_shift(K).shifted
        if not satisfies_kk(K.f_vector()) or not is_shifted(D):
            bad.append({"instance": t, "f": list(K.f_vector())})
    for K in (C.cyclic_boundary(4, 8), C.octahedron(), C.stacked_sphere(3, 6),
              random_planar_triangulation(rng, 9)):
        d = K.dim + 1
        if is_hl_certificate(K, d) and not is_m_sequence(g_vector(K)):
            bad.append({"g": list(g_vector(K))})
    return CheckResult("kk-macaulay", not bad, seed, {"instances": count, "failures": bad})


CHECKS = {
    "disjoint-union": check_disjoint_union,
    "cone-commute": check_cone_commute,
    "stacked-sphere": check_stacked_sphere,
    "clique-sum": check_clique_sum,
    "join-max-faces": check_join_max_faces,
    "join-counterexample": check_join_counterexample,
    "k33-gap": check_k33_gap,
    "ubt-cyclic": check_ubt_cyclic,
    "gluck": check_gluck,
    "lee-equivalence": check_lee_equivalence,
    "near-cone": check_near_cone,
    "sarkaria": check_sarkaria,
    "minor-mainthm": check_minor_mainthm,
    "smith-hd": check_smith_hd,
    "hcontract-identity": check_hcontract_identity,
    "kk-macaulay": check_kk_macaulay,
}


def run_check(name: str, seed: int = 0) -> CheckResult:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise BadParameters(f"unknown check {name!r}; known: {', '.join(CHECKS)}") from None
    return fn(seed)
