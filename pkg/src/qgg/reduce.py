"""Rank-preserving reductions and structural family recognition.

The reductions mirror three facts about the left row rank: deleting a
pendant vertex together with its neighbor drops the rank by exactly 2,
deleting one of two pendant twins keeps it, and deleting one vertex of
a "multiple" pair (equal neighborhoods, left-proportional gain rows)
keeps it.  All deletion orders are deterministic (lowest index first)
so reduced outputs are reproducible; confluence up to order and rank is
asserted in the test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DisconnectedGraphError
from .graph import (
    GainGraph,
    delete_vertices,
    girth,
    induced_subgraph,
    is_connected,
)
from .quat import Quaternion

__all__ = [
    "TrimResult",
    "trim_pendant_pairs",
    "pendant_twins",
    "remove_pendant_twins",
    "find_multiple_vertices",
    "reduced_graph",
    "reduced_graph_with_trace",
    "two_core",
    "ShapeReport",
    "FAMILY_PRECEDENCE",
    "recognize",
    "witness_is_valid",
    "complete_multipartite_parts",
    "complete_bipartite_parts",
    "BicyclicCore",
    "bicyclic_core",
]


# ---------------------------------------------------------------------------
# Reductions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrimResult:
    graph: GainGraph
    pairs: int
    removed: tuple[tuple[int, int], ...]  # (pendant, neighbor) in original labels


def trim_pendant_pairs(g: GainGraph) -> TrimResult:
    """Repeatedly delete a pendant vertex together with its neighbor.

    Each deleted pair accounts for exactly 2 in the rank ledger:
    rank(input) == rank(output) + 2 * pairs.
    """
    labels = list(range(g.n))
    removed = []
    current = g
    while True:
        pendant = next((v for v in range(current.n) if current.degree(v) == 1), None)
        if pendant is None:
            return TrimResult(current, len(removed), tuple(removed))
        neighbor = current.neighbors(pendant)[0]
        removed.append((labels[pendant], labels[neighbor]))
        keep = [v for v in range(current.n) if v not in (pendant, neighbor)]
        labels = [labels[v] for v in keep]
        current = induced_subgraph(current, keep)


def pendant_twins(g: GainGraph) -> list[tuple[int, int]]:
    """Pairs of degree-1 vertices sharing their neighbor."""
    by_neighbor: dict[int, list[int]] = {}
    for v in range(g.n):
        if g.degree(v) == 1:
            by_neighbor.setdefault(g.neighbors(v)[0], []).append(v)
    out = []
    for leaves in by_neighbor.values():
        for i in range(len(leaves)):
            for j in range(i + 1, len(leaves)):
                out.append((leaves[i], leaves[j]))
    return out


def remove_pendant_twins(g: GainGraph) -> GainGraph:
    """Delete one twin of every pendant-twin pair; the rank never moves."""
    current = g
    while True:
        twins = pendant_twins(current)
        if not twins:
            return current
        victim = min(min(pair) for pair in twins)
        current = delete_vertices(current, [victim])


def _left_ratio(a: Quaternion, b: Quaternion) -> Quaternion:
    """The k with a == k * b, for unit b."""
    return a * b.inverse()


def find_multiple_vertices(g: GainGraph) -> list[tuple[int, int, Quaternion]]:
    """All pairs x < y with N(x) == N(y) != {} and left-proportional rows.

    The proportionality constant k (gain row of x == k times gain row
    of y) is computed from the first common neighbor and verified on
    the rest.  k need not be a unit in general; with unit gains it is.
    """
    out = []
    exact = g.is_exact
    for x in range(g.n):
        nx = g.neighbors(x)
        if not nx:
            continue
        for y in range(x + 1, g.n):
            if g.neighbors(y) != nx:
                continue
            z0 = nx[0]
            k = _left_ratio(g.gain(x, z0), g.gain(y, z0))
            ok = True
            for z in nx[1:]:
                lhs = g.gain(x, z)
                rhs = k * g.gain(y, z)
                if exact:
                    if lhs != rhs:
                        ok = False
                        break
                elif not lhs.approx_eq(rhs):
                    ok = False
                    break
            if ok:
                out.append((x, y, k))
    return out


def reduced_graph(g: GainGraph) -> GainGraph:
    """Delete multiple vertices until none remain; rank is preserved."""
    return reduced_graph_with_trace(g)[0]


def reduced_graph_with_trace(g: GainGraph):
    """Reduced graph plus the deleted vertices in original labels."""
    labels = list(range(g.n))
    removed = []
    current = g
    while True:
        pairs = find_multiple_vertices(current)
        if not pairs:
            return current, tuple(removed)
        victim = min(min(x, y) for x, y, _ in pairs)
        removed.append(labels[victim])
        keep = [v for v in range(current.n) if v != victim]
        labels = [labels[v] for v in keep]
        current = induced_subgraph(current, keep)


def two_core(g: GainGraph):
    """Strip degree-<=1 vertices to a fixpoint; returns (core, kept labels)."""
    labels = list(range(g.n))
    current = g
    while True:
        drop = [v for v in range(current.n) if current.degree(v) <= 1]
        if not drop:
            return current, tuple(labels)
        keep = [v for v in range(current.n) if v not in set(drop)]
        labels = [labels[v] for v in keep]
        current = induced_subgraph(current, keep)


# ---------------------------------------------------------------------------
# Family recognition.
# ---------------------------------------------------------------------------

FAMILY_PRECEDENCE = (
    "Path",
    "Star",
    "Cycle",
    "Complete",
    "CompleteBipartite",
    "CompleteTripartite",
    "CanonicalUnicyclic",
    "Infinity",
    "Theta",
)


@dataclass(frozen=True)
class ShapeReport:
    """One recognized family plus a certifying witness.

    When several families apply (a triangle is also a complete graph),
    the one latest in FAMILY_PRECEDENCE wins; that is the most specific
    classification the rank theorems dispatch on.
    """

    family: str
    params: tuple[int, ...] = ()
    witness: dict = field(default_factory=dict)


def _as_path(g: GainGraph):
    if g.edge_count != g.n - 1:
        return None
    if g.n == 1:
        return ShapeReport("Path", (1,), {"order": (0,)})
    ends = [v for v in range(g.n) if g.degree(v) == 1]
    if len(ends) != 2 or any(g.degree(v) > 2 for v in range(g.n)):
        return None
    order = [min(ends)]
    prev = -1
    while len(order) < g.n:
        nxt = [w for w in g.neighbors(order[-1]) if w != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return ShapeReport("Path", (g.n,), {"order": tuple(order)})


def _as_star(g: GainGraph):
    if g.n < 3 or g.edge_count != g.n - 1:
        return None
    centers = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    if len(centers) != 1:
        return None
    if any(g.degree(v) != 1 for v in range(g.n) if v != centers[0]):
        return None
    return ShapeReport("Star", (g.n,), {"center": centers[0]})


def _as_cycle(g: GainGraph):
    if g.n < 3 or g.edge_count != g.n:
        return None
    if any(g.degree(v) != 2 for v in range(g.n)):
        return None
    w = girth(g)
    if w is None or w.length != g.n:
        return None
    return ShapeReport("Cycle", (g.n,), {"cycle": w.cycle})


def _as_complete(g: GainGraph):
    if g.n >= 2 and g.edge_count == g.n * (g.n - 1) // 2:
        return ShapeReport("Complete", (g.n,), {})
    return None


def complete_multipartite_parts(g: GainGraph) -> tuple[tuple[int, ...], ...] | None:
    """Parts of a complete multipartite graph, or None.

    A graph is complete multipartite exactly when non-adjacency is an
    equivalence relation; the classes are the parts.
    """
    classes: list[tuple[int, ...]] = []
    assigned = [-1] * g.n
    for v in range(g.n):
        if assigned[v] >= 0:
            continue
        cls = tuple(sorted({v} | (set(range(g.n)) - set(g.neighbors(v)) - {v})))
        for u in cls:
            if assigned[u] >= 0:
                return None
            assigned[u] = len(classes)
        classes.append(cls)
    # verify: same class mutually non-adjacent with identical class sets,
    # different classes fully adjacent
    for cls in classes:
        for u in cls:
            expected = set(range(g.n)) - set(cls)
            if set(g.neighbors(u)) != expected:
                return None
    return tuple(sorted(classes, key=lambda c: (len(c), c)))


def complete_bipartite_parts(g: GainGraph):
    """(part_a, part_b) for any complete bipartite graph, including stars."""
    parts = complete_multipartite_parts(g)
    if parts is not None and len(parts) == 2:
        return parts
    return None


def _as_complete_bipartite(g: GainGraph):
    parts = complete_multipartite_parts(g)
    if parts is None or len(parts) != 2:
        return None
    if max(len(p) for p in parts) < 2:
        return None  # that is K2, reported as Complete
    a, b = parts
    return ShapeReport("CompleteBipartite", (len(a), len(b)), {"parts": parts})


def _as_complete_tripartite(g: GainGraph):
    parts = complete_multipartite_parts(g)
    if parts is None or len(parts) != 3:
        return None
    if max(len(p) for p in parts) < 2:
        return None  # that is K3, reported as Complete
    return ShapeReport(
        "CompleteTripartite", tuple(len(p) for p in parts), {"parts": parts}
    )


def canonical_unicyclic_structure(g: GainGraph):
    """(cycle, star map, g, t, k) for a cycle with pendant stars, else None.

    The star map sends a starred cycle vertex to its pendant leaves.
    t counts starred vertices; removing them splits the cycle into t
    arcs, and k counts the arcs of even (possibly zero) order.
    Requires t >= 1: a bare cycle reports as Cycle instead.
    """
    if g.edge_count != g.n or g.n < 4:
        return None
    core, labels = two_core(g)
    if core.n < 3 or any(core.degree(v) != 2 for v in range(core.n)):
        return None
    w = girth(core)
    if w is None or w.length != core.n:
        return None
    cycle = tuple(labels[v] for v in w.cycle)
    on_cycle = set(cycle)
    stars: dict[int, list[int]] = {}
    for v in range(g.n):
        if v in on_cycle:
            continue
        if g.degree(v) != 1:
            return None
        (nbr,) = g.neighbors(v)
        if nbr not in on_cycle:
            return None
        stars.setdefault(nbr, []).append(v)
    if not stars:
        return None
    glen = len(cycle)
    starred_pos = sorted(i for i, v in enumerate(cycle) if v in stars)
    t = len(starred_pos)
    k = 0
    for idx, pos in enumerate(starred_pos):
        nxt = starred_pos[(idx + 1) % t]
        arc = (nxt - pos - 1) % glen if t > 1 else glen - 1
        if t == 1:
            arc = glen - 1
        if arc % 2 == 0:
            k += 1
    return cycle, {v: tuple(sorted(ls)) for v, ls in stars.items()}, glen, t, k


def _as_canonical_unicyclic(g: GainGraph):
    got = canonical_unicyclic_structure(g)
    if got is None:
        return None
    cycle, stars, glen, t, k = got
    return ShapeReport(
        "CanonicalUnicyclic", (glen, t, k), {"cycle": cycle, "stars": stars}
    )


def _chase_chain(g: GainGraph, start: int, first: int):
    """Walk a degree-2 chain from ``start`` through ``first``.

    Returns (endpoint, interior vertices in order).  The endpoint is the
    first vertex that is the start again or has degree != 2.
    """
    interior = []
    prev, cur = start, first
    while cur != start and g.degree(cur) == 2:
        interior.append(cur)
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    return cur, interior


def _as_infinity_or_theta(g: GainGraph):
    if g.edge_count != g.n + 1 or g.n < 4:
        return None
    degs = [g.degree(v) for v in range(g.n)]
    if min(degs) < 2:
        return None
    d3 = [v for v in range(g.n) if degs[v] == 3]
    d4 = [v for v in range(g.n) if degs[v] == 4]
    rest_ok = all(degs[v] == 2 for v in range(g.n) if v not in d3 + d4)
    if not rest_ok:
        return None
    if len(d4) == 1 and not d3:
        x = d4[0]
        chains = [_chase_chain(g, x, w) for w in g.neighbors(x)]
        if any(end != x for end, _ in chains):
            return None
        # each cycle is traversed from both of its directions
        seen = {}
        cycles = []
        for _, interior in chains:
            key = frozenset(interior)
            if key not in seen:
                seen[key] = True
                cycles.append(tuple([x] + interior))
        if len(cycles) != 2:
            return None
        p, q = sorted(len(c) for c in cycles)
        return ShapeReport(
            "Infinity", (p, 1, q), {"cycles": tuple(cycles), "path": (x,)}
        )
    if len(d3) == 2 and not d4:
        u, w = d3
        chains = [_chase_chain(g, u, nb) for nb in g.neighbors(u)]
        to_w = [interior for end, interior in chains if end == w]
        to_u = [interior for end, interior in chains if end == u]
        if len(to_w) == 3:
            p, l, q = sorted(len(i) for i in to_w)
            paths = tuple(tuple(i) for i in sorted(to_w, key=len))
            return ShapeReport(
                "Theta", (p, l, q), {"branch": (u, w), "paths": paths}
            )
        if len(to_w) == 1 and len(to_u) == 2:
            bridge = to_w[0]
            key = frozenset(to_u[0])
            cyc_u = tuple([u] + to_u[0])
            chains_w = [_chase_chain(g, w, nb) for nb in g.neighbors(w)]
            loops_w = [i for end, i in chains_w if end == w]
            if not loops_w:
                return None
            cyc_w = tuple([w] + loops_w[0])
            p, q = sorted((len(cyc_u), len(cyc_w)))
            return ShapeReport(
                "Infinity",
                (p, len(bridge) + 2, q),
                {"cycles": (cyc_u, cyc_w), "path": tuple([u] + bridge + [w])},
            )
    return None


_MATCHERS = {
    "Path": _as_path,
    "Star": _as_star,
    "Cycle": _as_cycle,
    "Complete": _as_complete,
    "CompleteBipartite": _as_complete_bipartite,
    "CompleteTripartite": _as_complete_tripartite,
    "CanonicalUnicyclic": _as_canonical_unicyclic,
    "Infinity": _as_infinity_or_theta,
    "Theta": _as_infinity_or_theta,
}


def recognize(g: GainGraph) -> ShapeReport:
    """Most specific structural family of a connected graph.

    Families are tried in FAMILY_PRECEDENCE order and the last match
    wins, so e.g. a triangle reports Complete(3) and the 5-vertex theta
    graph with unit paths reports Theta(1,1,1) rather than K_{2,3}.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("recognize needs a connected graph")
    best = ShapeReport("Other")
    seen_bicyclic = False
    for family in FAMILY_PRECEDENCE:
        matcher = _MATCHERS[family]
        if matcher is _as_infinity_or_theta:
            if seen_bicyclic:
                continue
            seen_bicyclic = True
        report = matcher(g)
        if report is not None:
            best = report
    return best


def witness_is_valid(g: GainGraph, report: ShapeReport) -> bool:
    """Re-validate a ShapeReport against the graph it claims to describe."""
    fam = report.family
    if fam == "Other":
        return True
    if fam == "Path":
        order = report.witness["order"]
        if len(order) != g.n or set(order) != set(range(g.n)):
            return False
        if g.edge_count != g.n - 1:
            return False
        return all(g.has_edge(a, b) for a, b in zip(order, order[1:]))
    if fam == "Star":
        center = report.witness["center"]
        return g.edge_count == g.n - 1 and g.degree(center) == g.n - 1
    if fam == "Cycle":
        cyc = report.witness["cycle"]
        if len(cyc) != g.n or g.edge_count != g.n:
            return False
        return all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
    if fam == "Complete":
        return g.edge_count == g.n * (g.n - 1) // 2
    if fam in ("CompleteBipartite", "CompleteTripartite"):
        parts = report.witness["parts"]
        if sorted(v for p in parts for v in p) != list(range(g.n)):
            return False
        for p in parts:
            for i, u in enumerate(p):
                for v in p[i + 1 :]:
                    if g.has_edge(u, v):
                        return False
        for ia in range(len(parts)):
            for ib in range(ia + 1, len(parts)):
                for u in parts[ia]:
                    for v in parts[ib]:
                        if not g.has_edge(u, v):
                            return False
        return tuple(sorted(len(p) for p in parts)) == tuple(sorted(report.params))
    if fam == "CanonicalUnicyclic":
        got = canonical_unicyclic_structure(g)
        return got is not None and (got[2], got[3], got[4]) == report.params
    if fam == "Infinity":
        cycles = report.witness["cycles"]
        path = report.witness["path"]
        for cyc in cycles:
            if not all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])):
                return False
        if len(path) >= 2 and not all(
            g.has_edge(a, b) for a, b in zip(path, path[1:])
        ):
            return False
        p, l, q = report.params
        return {len(cycles[0]), len(cycles[1])} == {p, q} and len(path) == max(l, 1)
    if fam == "Theta":
        u, w = report.witness["branch"]
        paths = report.witness["paths"]
        for interior in paths:
            full = [u] + list(interior) + [w]
            if not all(g.has_edge(a, b) for a, b in zip(full, full[1:])):
                return False
        interiors = [set(p) for p in paths]
        for i in range(3):
            for j in range(i + 1, 3):
                if interiors[i] & interiors[j]:
                    return False
        return tuple(sorted(len(p) for p in paths)) == report.params
    return False


# ---------------------------------------------------------------------------
# Bicyclic graphs with trees attached.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BicyclicCore:
    kind: str  # "Infinity" | "Theta"
    plq: tuple[int, int, int]
    core_vertices: tuple[int, ...]  # original labels
    core: GainGraph
    report: ShapeReport


def bicyclic_core(g: GainGraph) -> BicyclicCore | None:
    """The bare infinity/theta skeleton of a connected bicyclic graph.

    Strips pendant trees (iterated leaf removal) and recognizes what is
    left.  None if the graph is not connected bicyclic.
    """
    if g.edge_count != g.n + 1 or not is_connected(g):
        return None
    core, labels = two_core(g)
    report = _as_infinity_or_theta(core)
    if report is None:
        return None
    return BicyclicCore(report.family, tuple(report.params), labels, core, report)
