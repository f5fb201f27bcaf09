"""Graphical positive-semidefiniteness tests, the principal-subgraph operator,
and the signed complete graphs encoding pure product states.

Rules run in a fixed order and the first conclusive one wins:

1. zero-degree-vertex        a nonisolated vertex of degree zero  -> not PSD
2. all-loops-negative        real graph, every loop negative      -> not PSD
3. loop-free-complex         complex graph without loops          -> PSD
4. diagonal-dominance        Q diagonally dominant, diag >= 0     -> PSD
5. tree-or-cycle-edge-signs  loop-free real tree / cycle (n>=4):
                             sign of the weights decides           -> PSD / not PSD
6. negative-edge-triangle-cover   every negative edge sits inside its own
                             butterfly of stronger positive edges  -> PSD
7. double-butterfly-cover    negative edges pair up into signed-K4 cores,
                             each re-covered as in rule 6          -> PSD

Anything else is unknown; the rules never contradict the eigenvalue oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .graphs import Convention, WeightedGraph, build_graph
from .products import modified_tensor

RULE_ZERO_DEGREE = "zero-degree-vertex"
RULE_NEGATIVE_LOOPS = "all-loops-negative"
RULE_LOOP_FREE_COMPLEX = "loop-free-complex"
RULE_DOMINANCE = "diagonal-dominance"
RULE_TREE_CYCLE = "tree-or-cycle-edge-signs"
RULE_TRIANGLE_COVER = "negative-edge-triangle-cover"
RULE_DOUBLE_BUTTERFLY = "double-butterfly-cover"


@dataclass(frozen=True)
class PsdVerdict:
    verdict: str  # "psd" | "not-psd" | "unknown"
    rule: str | None
    witness: tuple

    @property
    def conclusive(self) -> bool:
        return self.verdict != "unknown"


def _nonisolated_zero_degree(g: WeightedGraph) -> int | None:
    degrees = g.degrees()
    touched = set()
    for u, v in g.edges:
        touched.add(u)
        touched.add(v)
    for v in sorted(touched):
        if degrees[v] == 0.0:
            return v
    return None


def _is_tree_or_long_cycle(g: WeightedGraph) -> bool:
    if not g.is_loop_free() or g.n < 2:
        return False
    m = len(g.edges)
    adjacency = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    if len(seen) != g.n:
        return False
    if m == g.n - 1:
        return True  # tree
    return m == g.n and g.n >= 4 and all(len(adjacency[v]) == 2 for v in range(g.n))


def _butterfly(
    g: WeightedGraph, u: int, v: int, threshold: float, used: set[int]
) -> tuple[int, int] | None:
    """Two fresh vertices joined to both u and v by weights above threshold."""
    candidates = [
        x
        for x in range(g.n)
        if x not in used
        and x not in (u, v)
        and g.weight(u, x).real > threshold
        and g.weight(v, x).real > threshold
    ]
    if len(candidates) < 2:
        return None
    return candidates[0], candidates[1]


def _triangle_cover(g: WeightedGraph) -> list[tuple] | None:
    """Disjoint butterfly around every negative edge, or None."""
    if any(lw <= 0 for lw in g.loops.values()):
        return None
    negatives = [k for k, w in g.edges.items() if w.real < 0]
    if not negatives:
        return None
    used: set[int] = set()
    cover = []
    for u, v in negatives:
        if u in used or v in used:
            return None
        found = _butterfly(g, u, v, abs(g.edges[(u, v)].real), used | {u, v})
        if found is None:
            return None
        x, y = found
        used.update((u, v, x, y))
        cover.append(((u, v), x, y))
    return cover


def _double_butterfly_cover(g: WeightedGraph) -> list[tuple] | None:
    """Pair up negative edges into signed-K4 cores (equal positive cross
    weights a, equal negative weights -b, b > a).  Removing the balanced core
    leaves residual negative weight b - a on the diagonals, so the wing edges
    only need to dominate that residual, which the stated c > b implies."""
    if any(lw <= 0 for lw in g.loops.values()):
        return None
    negatives = [k for k, w in g.edges.items() if w.real < 0]
    if not negatives or len(negatives) % 2 != 0:
        return None
    used: set[int] = set()
    remaining = list(negatives)
    cover = []
    while remaining:
        i, l = remaining.pop(0)
        if i in used or l in used:
            return None
        partner = None
        for idx, (j, k) in enumerate(remaining):
            if {j, k} & {i, l} or j in used or k in used:
                continue
            b = -g.edges[(i, l)].real
            if g.edges[(j, k)].real != -b:
                continue
            cross = [g.weight(i, j).real, g.weight(i, k).real,
                     g.weight(j, l).real, g.weight(k, l).real]
            a = cross[0]
            if a <= 0 or b <= a or any(c != a for c in cross):
                continue
            core_used = used | {i, l, j, k}
            wings = []
            ok = True
            for (p, q) in ((i, l), (j, k)):
                found = _butterfly(
                    g, p, q, b - a, core_used | set(w for pair in wings for w in pair)
                )
                if found is None:
                    ok = False
                    break
                wings.append(found)
            if ok:
                partner = idx
                break
        if partner is None:
            return None
        j, k = remaining.pop(partner)
        used.update((i, l, j, k))
        for x, y in wings:
            used.update((x, y))
        cover.append(((i, l), (j, k), wings[0], wings[1]))
    return cover


def graphical_psd_check(g: WeightedGraph) -> PsdVerdict:
    """First conclusive verdict from the rule chain, else unknown."""
    v = _nonisolated_zero_degree(g)
    if v is not None:
        return PsdVerdict("not-psd", RULE_ZERO_DEGREE, (v,))

    if g.is_real and g.loops and all(lw < 0 for lw in g.loops.values()):
        return PsdVerdict("not-psd", RULE_NEGATIVE_LOOPS, tuple(sorted(g.loops)))

    if not g.is_real and g.is_loop_free():
        return PsdVerdict("psd", RULE_LOOP_FREE_COMPLEX, ())

    q = g.laplacian()
    scale = max(1.0, float(abs(q).max()))
    dominant = True
    for v in range(g.n):
        off = sum(abs(q[v, u]) for u in range(g.n) if u != v)
        if q[v, v].real < off - 1e-12 * scale:
            dominant = False
            break
    if dominant:
        return PsdVerdict("psd", RULE_DOMINANCE, ())

    if g.is_real and _is_tree_or_long_cycle(g):
        for key, w in g.edges.items():
            if w.real < 0:
                return PsdVerdict("not-psd", RULE_TREE_CYCLE, key)
        return PsdVerdict("psd", RULE_TREE_CYCLE, ())

    if g.is_real:
        cover = _triangle_cover(g)
        if cover is not None:
            return PsdVerdict("psd", RULE_TRIANGLE_COVER, tuple(cover))
        cover = _double_butterfly_cover(g)
        if cover is not None:
            return PsdVerdict("psd", RULE_DOUBLE_BUTTERFLY, tuple(cover))

    return PsdVerdict("unknown", None, ())


# -- principal subgraphs -------------------------------------------------------


def principal_subgraph(g: WeightedGraph, v: int) -> WeightedGraph:
    """Delete v and roll its incident edges into loops on the neighbors; the
    Laplacian is Q(g) without row and column v."""
    if not 0 <= v < g.n:
        raise DimensionMismatch(f"vertex {v} out of range")
    if g.n == 1:
        raise DimensionMismatch("a single-vertex graph has no principal subgraph")
    new = lambda i: i if i < v else i - 1
    edges = {}
    loops = {new(u): lw for u, lw in g.loops.items() if u != v}
    for (a, b), w in g.edges.items():
        if v not in (a, b):
            edges[(new(a), new(b))] = w
            continue
        u = b if a == v else a
        rolled = w.real if g.is_real else abs(w)
        total = loops.get(new(u), 0.0) + rolled
        if total == 0.0:
            loops.pop(new(u), None)
        else:
            loops[new(u)] = total
    return WeightedGraph(g.convention, g.n - 1, edges, loops)


def theta(g: WeightedGraph, v: int) -> list[WeightedGraph]:
    """Connected components of the principal subgraph at v, by vertex order."""
    sub = principal_subgraph(g, v)
    adjacency = {u: set() for u in range(sub.n)}
    for a, b in sub.edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    unvisited = set(range(sub.n))
    components = []
    while unvisited:
        start = min(unvisited)
        comp = {start}
        stack = [start]
        while stack:
            for nxt in adjacency[stack.pop()]:
                if nxt not in comp:
                    comp.add(nxt)
                    stack.append(nxt)
        unvisited -= comp
        vertices = sorted(comp)
        index = {u: i for i, u in enumerate(vertices)}
        components.append(
            WeightedGraph(
                sub.convention,
                len(vertices),
                {(index[a], index[b]): w for (a, b), w in sub.edges.items() if a in comp},
                {index[u]: lw for u, lw in sub.loops.items() if u in comp},
            )
        )
    return components


# -- signed complete pure states -----------------------------------------------


def signed_complete_pure(n_exponent: int) -> WeightedGraph:
    """Signed complete graph on 2**n vertices with unit weights, one unit of
    degree per vertex, and 2**(n-1) - 1 negative edges at every vertex; its
    state is the n-fold product of the two-level superposition projector."""
    if n_exponent < 1:
        raise DimensionMismatch("the exponent must be at least 1")
    seed = build_graph(Convention.REAL_SIGNED, 2, [(0, 1, 1.0)])
    g = seed
    for _ in range(n_exponent - 1):
        g = modified_tensor(seed, g)
    return g
