"""Admissible contractions, minor search and strong edge decomposability."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import networkx as nx

from .complex import SimplicialComplex, as_face
from .errors import BadParameters, BudgetExhausted, Disagreement, NotAdmissible, VertexMissing


def _require_vertices(K: SimplicialComplex, *vs: int) -> None:
    for v in vs:
        if (v,) not in K:
            raise VertexMissing(f"{v} is not a vertex")
    if len(set(vs)) != len(vs):
        raise BadParameters("vertices must be distinct")


def contract(K: SimplicialComplex, u: int, v: int) -> SimplicialComplex:
    """Identify u with v: faces without u stay, u is replaced by v elsewhere."""
    _require_vertices(K, u, v)
    return SimplicialComplex(K.n, [tuple(sorted({v if x == u else x for x in f})) for f in K.facets])


def _link_faces(K: SimplicialComplex, face: tuple) -> set:
    """lk(face) as a set of faces; empty (void) when face is not in K."""
    if face not in K:
        return set()
    fs = set(face)
    return {tuple(x for x in g if x not in fs) for g in K.face_set if fs.issubset(g)}


def _common_link(K: SimplicialComplex, u: int, v: int) -> set:
    return _link_faces(K, (u,)) & _link_faces(K, (v,))


def is_admissible(K: SimplicialComplex, u: int, v: int, local: bool = False) -> bool:
    """(lk u n lk v) restricted to dimension <= dim K - 2 equals lk({u,v}).

    With ``local`` the skeleton bound is min(dim lk u, dim lk v) - 1 instead.
    """
    _require_vertices(K, u, v)
    if local:
        top = min(K.link((u,)).dim, K.link((v,)).dim) - 1
    else:
        top = K.dim - 2
    common = {f for f in _common_link(K, u, v) if len(f) - 1 <= top}
    return common == _link_faces(K, tuple(sorted((u, v))))


def missing_faces_through(K: SimplicialComplex, u: int, v: int) -> list:
    """Missing faces of K that contain both u and v."""
    out = []
    for F in _common_link(K, u, v):
        M = tuple(sorted(F + (u, v)))
        if M in K:
            continue
        if all(tuple(x for x in M if x != w) in K for w in F):
            out.append(M)
    return out


def admissible_by_missing_faces(K: SimplicialComplex, u: int, v: int) -> bool:
    _require_vertices(K, u, v)
    return all(len(M) - 1 > K.dim for M in missing_faces_through(K, u, v))


def satisfies_link_condition(K: SimplicialComplex, u: int, v: int) -> bool:
    _require_vertices(K, u, v)
    return _common_link(K, u, v) == _link_faces(K, tuple(sorted((u, v))))


def delete_faces(K: SimplicialComplex, faces_) -> SimplicialComplex:
    """Remove the listed faces together with every face containing one of them."""
    bad = [set(as_face(f)) for f in faces_]
    return SimplicialComplex(K.n, [g for g in K.face_set if not any(b.issubset(g) for b in bad)])


# canonical forms


def incidence_graph(K: SimplicialComplex) -> nx.Graph:
    G = nx.Graph()
    for v in K.vertices:
        G.add_node(("v", v), kind="v")
    for i, F in enumerate(K.facets):
        if F:
            G.add_node(("f", i), kind=f"f{len(F)}")
            for v in F:
                G.add_edge(("v", v), ("f", i))
    return G


def weak_key(K: SimplicialComplex) -> tuple:
    return (K.f_vector(), nx.weisfeiler_lehman_graph_hash(incidence_graph(K), node_attr="kind"))


def isomorphism(K: SimplicialComplex, L: SimplicialComplex):
    """A vertex bijection K -> L carrying faces to faces, or None."""
    if K.f_vector() != L.f_vector():
        return None
    GK, GL = incidence_graph(K), incidence_graph(L)
    matcher = nx.algorithms.isomorphism.GraphMatcher(GK, GL, node_match=lambda a, b: a["kind"] == b["kind"])
    if not matcher.is_isomorphic():
        return None
    return {a[1]: b[1] for a, b in matcher.mapping.items() if a[0] == "v"}


class _Seen:
    """Grow-only set of complexes up to isomorphism."""

    def __init__(self):
        self._buckets: dict = {}

    def add(self, K: SimplicialComplex) -> bool:
        """Insert; False if an isomorphic complex was already present."""
        bucket = self._buckets.setdefault(weak_key(K), [])
        for other in bucket:
            if isomorphism(K, other) is not None:
                return False
        bucket.append(K)
        return True


# witnesses


@dataclass
class MinorWitness:
    """Replayable steps: {"contract": [u, v]}, {"delete": [faces]}, {"relabel": {old: new}}."""

    steps: list
    start: str
    end: str = ""

    def replay(self, K: SimplicialComplex) -> SimplicialComplex:
        cur = K
        for step in self.steps:
            if "contract" in step:
                u, v = step["contract"]
                if not is_admissible(cur, u, v):
                    raise NotAdmissible(f"step {step} is not admissible")
                cur = contract(cur, u, v)
            elif "delete" in step:
                cur = delete_faces(cur, step["delete"])
            elif "relabel" in step:
                mapping = {int(a): int(b) for a, b in step["relabel"].items()}
                top = max(mapping.values(), default=0)
                cur = SimplicialComplex(top, [[mapping[x] for x in f] for f in cur.facets])
            else:
                raise BadParameters(f"unknown step {step}")
        return cur

    def to_json(self) -> dict:
        steps = []
        for s in self.steps:
            if "relabel" in s:
                steps.append({"relabel": {str(a): b for a, b in s["relabel"].items()}})
            elif "delete" in s:
                steps.append({"delete": [list(f) for f in s["delete"]]})
            else:
                steps.append({"contract": list(s["contract"])})
        return {"steps": steps, "start": self.start, "end": self.end}

    @classmethod
    def from_json(cls, data) -> MinorWitness:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(list(data["steps"]), data.get("start", ""), data.get("end", ""))


def complex_digest(K: SimplicialComplex) -> str:
    return json.dumps([list(f) for f in K.facets], separators=(",", ""))


# minor search for complexes


def _dominates(f: tuple, g: tuple) -> bool:
    return len(f) >= len(g) and all(a >= b for a, b in zip(f, g))


def is_minor(H: SimplicialComplex, K: SimplicialComplex, budget: int = 20000):
    """Depth-first search for deletions and admissible contractions taking K to H.

    Returns a MinorWitness, or None when the search space was exhausted.
    Deletions remove one facet at a time; contractions u -> v with u > v.
    """
    target = H.f_vector()
    start = complex_digest(K)

    def finish(cur: SimplicialComplex, steps: list) -> MinorWitness:
        iso = isomorphism(cur, H)
        steps = steps + [{"relabel": {v: iso[v] for v in cur.vertices}}]
        return MinorWitness(steps, start, complex_digest(H))

    if not _dominates(K.f_vector(), target):
        return None
    if isomorphism(K, H) is not None:
        return finish(K, [])
    seen = _Seen()
    seen.add(K)
    stack = [(K, [])]
    expansions = 0

    def distance(f: tuple) -> int:
        return sum(a - b for a, b in zip(f, target)) + sum(f[len(target):])

    while stack:
        cur, steps = stack.pop()
        expansions += 1
        if expansions > budget:
            raise BudgetExhausted(f"minor search exceeded {budget} expansions")
        children = []
        if len(cur.vertices) > len(H.vertices):
            for v, u in combinations(cur.vertices, 2):
                if is_admissible(cur, u, v):
                    children.append((contract(cur, u, v), {"contract": [u, v]}))
        for F in cur.facets:
            if F:
                children.append((delete_faces(cur, [F]), {"delete": [F]}))
        ranked = []
        for child, step in children:
            f = child.f_vector()
            if not _dominates(f, target):
                continue
            if f == target and isomorphism(child, H) is not None:
                return finish(child, steps + [step])
            if seen.add(child):
                ranked.append((distance(f), child, step))
        ranked.sort(key=lambda t: -t[0])
        for _, child, step in ranked:
            stack.append((child, steps + [step]))
    return None


# clique minors of graphs


def _adjacency(G: SimplicialComplex) -> dict:
    if G.dim > 1:
        raise BadParameters("expected a graph")
    adj = {v: set() for v in G.vertices}
    for a, b in G.faces(2):
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _as_complex(adj: dict, n: int) -> SimplicialComplex:
    return SimplicialComplex(n, [(a, b) for a in adj for b in adj[a] if a < b] + [(a,) for a in adj])


def _contract_adj(adj: dict, u: int, v: int) -> dict:
    new = {x: set(ys) for x, ys in adj.items() if x != u}
    for y in adj[u]:
        if y != v:
            new[y].discard(u)
            new[y].add(v)
            new[v].add(y)
    new[v].discard(u)
    return new


def _delete_adj(adj: dict, v: int) -> dict:
    return {x: ys - {v} for x, ys in adj.items() if x != v}


def _find_clique(adj: dict, r: int):
    G = nx.Graph()
    G.add_nodes_from(adj)
    G.add_edges_from((a, b) for a in adj for b in adj[a])
    for clique in nx.find_cliques(G):
        if len(clique) >= r:
            return sorted(clique)[:r]
    return None


def mader_bound(n: int, r: int) -> int:
    """Graphs with more than this many edges have a K_r minor (r <= 7)."""
    return (r - 2) * n - comb(r - 1, 2)


def _reduce(adj: dict, r: int, steps: list) -> dict:
    """Apply reductions that preserve having a K_r minor."""
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            deg = len(adj[v])
            nbrs = adj[v]
            if deg <= 1 and r >= 3:
                steps.append({"delete": [(v,)]})
                adj = _delete_adj(adj, v)
                changed = True
                break
            if deg == 2 and r >= 4:
                a = min(nbrs)
                steps.append({"contract": [v, a]})
                adj = _contract_adj(adj, v, a)
                changed = True
                break
            if deg + 1 < r and all(b in adj[a] for a, b in combinations(nbrs, 2)):
                steps.append({"delete": [(v,)]})
                adj = _delete_adj(adj, v)
                changed = True
                break
    return adj


def has_clique_minor(G: SimplicialComplex, r: int, budget: int = 200000):
    """Search for a K_r minor; returns a MinorWitness or None (exhaustive answer).

    The search contracts edges one at a time (every minor of a graph is a
    subgraph of some contraction), after reductions that keep the answer:
    dropping vertices of degree <= 1, suppressing degree-2 vertices (r >= 4)
    and dropping simplicial vertices of degree < r-1.
    """
    if not 1 <= r <= 7:
        raise BadParameters("r must be between 1 and 7")
    adj0 = _adjacency(G)
    n = G.n
    start = complex_digest(G)
    H = SimplicialComplex(r, combinations(range(1, r + 1), 2)) if r > 1 else SimplicialComplex(1, [(1,)])
    seen = _Seen()
    counter = [0]

    def witness(adj: dict, steps: list, clique: list) -> MinorWitness:
        keep = set(clique)
        drop = [(x,) for x in adj if x not in keep]
        final = steps + ([{"delete": drop}] if drop else [])
        extra = [(a, b) for a in clique for b in clique if a < b and b not in adj[a]]
        if extra:
            raise Disagreement("clique check returned a non-clique")
        return MinorWitness(final + [{"relabel": {x: i + 1 for i, x in enumerate(clique)}}], start, complex_digest(H))

    def search(adj: dict, steps: list):
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExhausted(f"clique-minor search exceeded {budget} nodes")
        steps = list(steps)
        adj = _reduce(adj, r, steps)
        clique = _find_clique(adj, r)
        if clique:
            return witness(adj, steps, clique)
        m = sum(len(ys) for ys in adj.values()) // 2
        if len(adj) < r or m < comb(r, 2):
            return None
        if not seen.add(_as_complex(adj, n)):
            return None
        edges = sorted(((a, b) for a in adj for b in adj[a] if a < b),
                       key=lambda e: len(adj[e[0]] & adj[e[1]]))
        for a, b in edges:
            found = search(_contract_adj(adj, b, a), steps + [{"contract": [b, a]}])
            if found:
                return found
        return None

    if r == 1:
        if not adj0:
            return None
        v = min(adj0)
        return witness(adj0, [], [v])
    result = search(adj0, [])
    if result is None and r <= 7:
        m = len(G.faces(2))
        if m > mader_bound(len(adj0), r) and len(adj0) >= r - 1:
            raise Disagreement("search found no K_r minor above the Mader bound")
    return result


def hadwiger_number(G: SimplicialComplex, budget: int = 200000) -> int:
    h = 1 if G.vertices else 0
    for r in range(2, 8):
        if has_clique_minor(G, r, budget) is None:
            break
        h = r
    return h


# strong edge decomposability


def is_simplex_boundary(K: SimplicialComplex) -> bool:
    if K.dim < 0:
        return True  # {empty} is the boundary of a 0-simplex
    verts = K.vertices
    return len(K.facets) == len(verts) and all(len(F) == len(verts) - 1 for F in K.facets)


def is_strongly_edge_decomposable(K: SimplicialComplex, budget: int = 20000):
    """Decomposition trace (list of contracted edges with their links) or None."""
    memo: dict = {}
    counter = [0]

    def solve_(L: SimplicialComplex):
        if is_simplex_boundary(L):
            return []
        key = weak_key(L)
        for other, res in memo.get(key, []):
            iso = isomorphism(L, other)
            if iso is not None:
                return None if res is None else [{"iso_of": complex_digest(other)}] + res
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExhausted(f"decomposition search exceeded {budget} nodes")
        result = None
        for u, v in L.faces(2):
            if not satisfies_link_condition(L, u, v):
                continue
            lk = L.link((u, v))
            sub_lk = solve_(lk)
            if sub_lk is None:
                continue
            Lp = contract(L, v, u)
            sub_c = solve_(Lp)
            if sub_c is None:
                continue
            result = [{"edge": [u, v], "link": complex_digest(lk), "link_trace": sub_lk}] + sub_c
            break
        memo.setdefault(key, []).append((L, result))
        return result

    if not K.is_pure():
        raise BadParameters("expected a pure complex")
    return solve_(K)
