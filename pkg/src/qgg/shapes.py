"""Catalog of the small named graphs the rank tables quantify over.

Underlying graphs are stored with fixed vertex labels so that the gain
conditions (which talk about specific cycles) are well defined; a
presented graph is matched against a catalog entry by brute-force
isomorphism, and conditions are evaluated through the found map.  The
conditions themselves only involve cycle types and similarity-invariant
scalar identities, so they do not depend on which isomorphism is found.

Also here: constructors for gain cycles of a prescribed type, pendant
star attachments, and the handful of specific gain graphs used as
worked instances in docs and tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import GainGraph, with_random_gains
from .quat import I, J, K, ONE, Quaternion

__all__ = [
    "NamedShape",
    "TABLE1_SHAPES",
    "TABLE2_SHAPES",
    "THETA_133",
    "THETA_333",
    "BRACED_OCTAGON",
    "find_isomorphism",
    "type_target_gain",
    "cycle_graph",
    "path_graph",
    "with_cycle_gain",
    "canonical_unicyclic_graph",
    "star_bridge_graph",
    "attach_cycle",
    "k32_rank2_instance",
    "diamond_reduced_triangle_instance",
    "theta111_rank4_instance",
    "theta133_all_type1",
    "theta333_all_type1",
    "braced_octagon_all_type1",
]


@dataclass(frozen=True)
class NamedShape:
    """A labeled underlying graph plus the cycles its conditions talk about."""

    name: str
    n: int
    edges: tuple[tuple[int, int], ...]
    cycles: dict[str, tuple[int, ...]]

    def degree_sequence(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(sorted(deg))


def _shape(name, n, edges, **cycles):
    return NamedShape(name, n, tuple(tuple(e) for e in edges), dict(cycles))


# Bare bicyclic graphs whose rank can be 2, 3 or 4.  Two cycles sharing a
# vertex are written inf(p,1,q) with p,q the cycle lengths; inf(p,l,q) joins
# them by a path on l vertices; theta(p,l,q) joins two branch vertices by
# three paths with p, l, q interior vertices.
TABLE1_SHAPES = {
    s.name: s
    for s in (
        _shape(
            "inf(3,1,3)",
            5,
            [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)],
            tri_a=(0, 2, 1),
            tri_b=(0, 4, 3),
        ),
        _shape(
            "inf(3,1,4)",
            6,
            [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (2, 5)],
            tri=(0, 1, 2),
            quad=(2, 3, 4, 5),
        ),
        _shape(
            "inf(4,1,4)",
            7,
            [(0, 1), (1, 3), (2, 3), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)],
            quad_a=(0, 1, 3, 2),
            quad_b=(3, 4, 5, 6),
        ),
        _shape(
            "inf(3,2,3)",
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)],
        ),
        _shape(
            "theta(0,1,1)",
            4,
            [(0, 1), (1, 3), (0, 3), (1, 2), (2, 3)],
            tri=(0, 1, 3),
            quad=(0, 1, 2, 3),
        ),
        _shape(
            "theta(0,1,2)",
            5,
            [(0, 1), (1, 4), (0, 4), (1, 2), (2, 3), (3, 4)],
            tri=(0, 1, 4),
            penta=(0, 1, 2, 3, 4),
        ),
        _shape(
            "theta(0,1,3)",
            6,
            [(0, 1), (1, 5), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)],
            tri=(0, 1, 5),
            hexa=(0, 1, 2, 3, 4, 5),
        ),
        _shape(
            "theta(0,2,2)",
            6,
            [(0, 1), (1, 4), (4, 5), (0, 5), (1, 2), (2, 3), (3, 4)],
            quad=(0, 1, 4, 5),
            hexa=(0, 1, 2, 3, 4, 5),
        ),
        _shape(
            "theta(1,1,1)",
            5,
            [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (0, 3)],
            quad_a=(0, 1, 4, 3),
            quad_b=(0, 1, 2, 3),
        ),
        _shape(
            "theta(1,1,2)",
            6,
            [(0, 1), (1, 5), (4, 5), (0, 4), (1, 2), (2, 3), (3, 4)],
            quad=(0, 1, 5, 4),
            penta=(0, 1, 2, 3, 4),
        ),
        _shape(
            "theta(1,1,3)",
            7,
            [(0, 1), (1, 6), (5, 6), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)],
            quad=(0, 1, 6, 5),
            hexa=(0, 1, 2, 3, 4, 5),
        ),
    )
}


# Bicyclic graphs with pendant vertices (but no pendant twins) that can have
# rank 4.  "hub" is a degree-3 vertex of the core, "rim" a degree-2 one;
# "leaf" attaches one pendant vertex, "tail" a pendant path of two.
_DIAMOND_A = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]  # triangle (0,1,2), rim 3
_DIAMOND_B = [(0, 1), (1, 3), (0, 3), (1, 2), (2, 3)]  # theta(0,1,1) labeling
_K23 = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]  # hubs 0,1
_K23_G9 = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (0, 3)]  # theta(1,1,1) labeling

TABLE2_SHAPES = {
    s.name: s
    for s in (
        _shape("diamond+leaf@rim", 5, _DIAMOND_A + [(3, 4)], tri=(0, 1, 2)),
        _shape("diamond+leaf@hub", 5, _DIAMOND_A + [(0, 4)]),
        _shape("diamond+leaf@hubs", 6, _DIAMOND_A + [(0, 4), (1, 5)]),
        _shape(
            "diamond+tail@rim",
            6,
            _DIAMOND_B + [(0, 4), (4, 5)],
            tri=(0, 1, 3),
            quad=(0, 1, 2, 3),
        ),
        _shape(
            "diamond+tail@hub",
            6,
            _DIAMOND_B + [(1, 4), (4, 5)],
            tri=(0, 1, 3),
            quad=(0, 1, 2, 3),
        ),
        _shape(
            "theta(0,1,2)+leaf@tri",
            6,
            [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (3, 4), (4, 5)],
            quad=(0, 1, 2, 3),
        ),
        _shape("k23+leaf@rim", 6, _K23 + [(2, 5)], quad=(0, 3, 1, 4)),
        _shape("k23+leaf@hub", 6, _K23 + [(0, 5)]),
        _shape("k23+leaf@hubs", 7, _K23 + [(0, 5), (1, 6)]),
        _shape(
            "k23+tail@rim",
            7,
            _K23_G9 + [(2, 5), (5, 6)],
            quad_a=(0, 1, 4, 3),
            quad_b=(0, 1, 2, 3),
        ),
        _shape(
            "k23+tail@hub",
            7,
            _K23_G9 + [(1, 5), (5, 6)],
            quad_a=(0, 1, 4, 3),
            quad_b=(0, 1, 2, 3),
        ),
    )
}


# Unicyclic-girth exceptions: the two theta graphs and the braced octagon
# (an 8-cycle with two length-2 braces across antipodal pairs) whose rank
# equals their girth exactly when every cycle has type 1.
THETA_133 = _shape(
    "theta(1,3,3)",
    9,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7), (3, 8), (7, 8)],
)
THETA_333 = _shape(
    "theta(3,3,3)",
    11,
    [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (0, 7),
        (3, 10),
        (9, 10),
        (8, 9),
        (7, 8),
    ],
)
BRACED_OCTAGON = _shape(
    "braced-octagon",
    10,
    [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (0, 7),
        (0, 8),
        (4, 8),
        (2, 9),
        (6, 9),
    ],
)


# ---------------------------------------------------------------------------
# Isomorphism search (brute force with degree pruning; n stays <= 11 here).
# ---------------------------------------------------------------------------


def find_isomorphism(g: GainGraph, shape: NamedShape) -> dict[int, int] | None:
    """A map shape vertex -> graph vertex preserving adjacency, or None."""
    if g.n != shape.n or g.edge_count != len(shape.edges):
        return None
    shape_adj: list[set[int]] = [set() for _ in range(shape.n)]
    for u, v in shape.edges:
        shape_adj[u].add(v)
        shape_adj[v].add(u)
    shape_deg = [len(a) for a in shape_adj]
    if tuple(sorted(shape_deg)) != g.degree_sequence():
        return None
    # assign high-degree, well-connected shape vertices first
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < shape.n:
        best = max(
            (v for v in range(shape.n) if v not in placed),
            key=lambda v: (len(shape_adj[v] & placed), shape_deg[v]),
        )
        order.append(best)
        placed.add(best)
    mapping: dict[int, int] = {}
    used = [False] * g.n

    def backtrack(idx: int) -> bool:
        if idx == len(order):
            return True
        sv = order[idx]
        for gv in range(g.n):
            if used[gv] or g.degree(gv) != shape_deg[sv]:
                continue
            ok = True
            for sn in shape_adj[sv]:
                if sn in mapping and not g.has_edge(gv, mapping[sn]):
                    ok = False
                    break
            if ok:
                for sn in range(shape.n):
                    if sn in mapping and sn not in shape_adj[sv]:
                        if g.has_edge(gv, mapping[sn]):
                            ok = False
                            break
            if not ok:
                continue
            mapping[sv] = gv
            used[gv] = True
            if backtrack(idx + 1):
                return True
            del mapping[sv]
            used[gv] = False
        return False

    return dict(mapping) if backtrack(0) else None


def matches_shape(g: GainGraph, shape: NamedShape) -> bool:
    return find_isomorphism(g, shape) is not None


# ---------------------------------------------------------------------------
# Constructors.
# ---------------------------------------------------------------------------


def type_target_gain(n: int, ctype: int) -> Quaternion:
    """A cycle gain realizing the requested type on a length-n cycle.

    Even n: type 1 uses (-1)**(n/2), type 2 perturbs it by i.  Odd n:
    type 3 uses (-1)**((n-1)/2) (real part nonzero), type 4 multiplies
    that by i (real part zero).
    """
    ctype = int(ctype)
    if n % 2 == 0:
        if ctype == 1:
            return Quaternion((-1) ** (n // 2))
        if ctype == 2:
            return I * ((-1) ** (n // 2))
    else:
        if ctype == 3:
            return Quaternion((-1) ** ((n - 1) // 2))
        if ctype == 4:
            return I * ((-1) ** ((n - 1) // 2))
    raise ValueError(f"type {ctype} is impossible for a cycle of length {n}")


def path_graph(n: int, gains=None) -> GainGraph:
    pairs = [(v, v + 1) for v in range(n - 1)]
    if gains is None:
        return GainGraph(n, pairs)
    return GainGraph(n, [(u, v, g) for (u, v), g in zip(pairs, gains)])


def cycle_graph(n: int, ctype: int | None = None, gain: Quaternion | None = None) -> GainGraph:
    """C_n with gain 1 everywhere except the closing edge (n-1, 0).

    Exactly one of ctype/gain picks the total cycle gain for the
    traversal (0, 1, ..., n-1); omitting both gives the all-ones cycle.
    """
    pairs = [(v, v + 1) for v in range(n - 1)] + [(n - 1, 0)]
    g = GainGraph(n, pairs)
    if ctype is None and gain is None:
        return g
    target = gain if gain is not None else type_target_gain(n, ctype)
    return with_cycle_gain(g, tuple(range(n)), target)


def with_cycle_gain(
    g: GainGraph, cycle, target: Quaternion, edge: tuple[int, int] | None = None
) -> GainGraph:
    """Adjust one designated cycle edge so the traversal gain equals target.

    The designated edge defaults to (cycle[-1], cycle[0]).  All other
    gains stay as they are; the needed oriented gain is solved from
    prefix * gain * suffix == target.
    """
    cyc = tuple(cycle)
    n = len(cyc)
    steps = [(cyc[i], cyc[(i + 1) % n]) for i in range(n)]
    if edge is None:
        edge = steps[-1]
    try:
        pos = steps.index(tuple(edge))
    except ValueError as exc:
        raise ValueError(f"edge {edge} is not traversed by cycle {cyc}") from exc
    prefix = Quaternion(1)
    for a, b in steps[:pos]:
        prefix = prefix * g.gain(a, b)
    suffix = Quaternion(1)
    for a, b in steps[pos + 1 :]:
        suffix = suffix * g.gain(a, b)
    needed = prefix.inverse() * target * suffix.inverse()
    return g.with_gain(edge[0], edge[1], needed)


def canonical_unicyclic_graph(
    glen: int, stars: dict[int, int], rng: random.Random | None = None, gain_set: str = "lipschitz"
) -> GainGraph:
    """A gain cycle of length glen with pendant stars on chosen vertices.

    ``stars`` maps a cycle position (0-based) to its number of leaves.
    Gains are 1, or seeded random from ``gain_set`` when rng is given.
    """
    pairs = [(v, (v + 1) % glen) for v in range(glen)]
    nxt = glen
    for pos in sorted(stars):
        count = stars[pos]
        if count < 1:
            raise ValueError("each star needs at least one leaf")
        for _ in range(count):
            pairs.append((pos, nxt))
            nxt += 1
    if rng is None:
        return GainGraph(nxt, pairs)
    return with_random_gains(nxt, pairs, gain_set, rng)


def star_bridge_graph(glen: int, q: int, ctype: int = 1) -> GainGraph:
    """Cycle of the given type joined by one edge to the center of a star.

    Vertices 0..glen-1 form the cycle, glen is the star center with q
    leaves, and the bridge joins vertex 0 to the center.
    """
    if q < 1:
        raise ValueError("the star needs at least one leaf")
    base = cycle_graph(glen, ctype=ctype)
    pairs = list(base.edge_pairs())
    gains = {e: base.gain(*e) for e in pairs}
    center = glen
    gains[(0, center)] = ONE
    for leaf in range(center + 1, center + 1 + q):
        gains[(center, leaf)] = ONE
    return GainGraph(center + 1 + q, gains)


def attach_cycle(g1: GainGraph, u: int, n: int, ctype: int) -> GainGraph:
    """Identify vertex u of g1 with one vertex of a fresh type-``ctype`` C_n."""
    gains = {e: g1.gain(*e) for e in g1.edge_pairs()}
    ring = [u] + list(range(g1.n, g1.n + n - 1))
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        gains[(a, b) if a < b else (b, a)] = ONE if a < b else ONE
    out = GainGraph(g1.n + n - 1, gains)
    return with_cycle_gain(out, tuple(ring), type_target_gain(n, ctype))


# ---------------------------------------------------------------------------
# Specific worked gain graphs.
# ---------------------------------------------------------------------------


def k32_rank2_instance() -> GainGraph:
    """Complete bipartite on 3+2 vertices whose three quadrilaterals all
    have gain 1; its rank is 2, meeting the girth-minus-2 floor."""
    return GainGraph(
        5,
        [
            (0, 3, I),
            (1, 3, -K),
            (2, 3, J),
            (0, 4, I),
            (1, 4, -K),
            (2, 4, J),
        ],
    )


def diamond_reduced_triangle_instance() -> GainGraph:
    """Two triangles glued on an edge; vertices 0 and 2 carry left-
    proportional rows, so the graph reduces to a type-4 triangle and
    has rank 2 = girth - 1."""
    return GainGraph(
        4,
        [
            (0, 1, I),
            (1, 3, -I),
            (0, 3, J),
            (1, 2, -J),
            (2, 3, -I),
        ],
    )


def theta111_rank4_instance() -> GainGraph:
    """theta(1,1,1) with one type-1 and one type-2 quadrilateral; rank 4."""
    return GainGraph(
        5,
        [
            (0, 1, I),
            (1, 4, J),
            (3, 4, -J),
            (0, 3, -K),
            (1, 2, I),
            (2, 3, K),
        ],
    )


def _unit_gain_shape(shape: NamedShape, overrides: dict[tuple[int, int], Quaternion]) -> GainGraph:
    gains: dict[tuple[int, int], Quaternion] = {}
    for u, v in shape.edges:
        key = (u, v) if u < v else (v, u)
        gains[key] = overrides.get(key, ONE)
    return GainGraph(shape.n, gains)


def theta133_all_type1() -> GainGraph:
    """Every cycle (two hexagons, one octagon) of type 1; rank 6 = girth."""
    return _unit_gain_shape(THETA_133, {(3, 8): Quaternion(-1)})


def theta333_all_type1() -> GainGraph:
    """All three octagons of type 1 under all-ones gains; rank 8 = girth."""
    return _unit_gain_shape(THETA_333, {})


def braced_octagon_all_type1() -> GainGraph:
    """Braced octagon with every cycle of type 1; rank 6 = girth."""
    minus = Quaternion(-1)
    return _unit_gain_shape(
        BRACED_OCTAGON, {(1, 2): minus, (6, 7): minus, (6, 9): minus}
    )
