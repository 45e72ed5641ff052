"""Exhaustive desk-scale verification of the rank laws.

The corpus is every connected labeled graph on up to ``max_n`` vertices
(raw adjacency bitmasks, no isomorphism reduction: the 2^21 masks at
n = 7 filter in seconds and deduplication would add complexity without
adding verification power).  Each underlying graph gets ``samples``
seeded random unit gain assignments from the eight exact units, and
every sample is pushed through the girth bound, the rank-2 / rank =
girth-1 / rank = girth laws, and the girth-4 sufficient cases.

Work is partitioned into fixed mask ranges.  Each graph seeds its own
generator from (seed, n, mask), so reports are bit-identical no matter
how many worker processes run.

Everything here runs in the exact tower: the unit gains are closed
under multiplication, so ranks are integer-exact and cycle types are
decided by equality, never by tolerance.
"""

from __future__ import annotations

import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import theorems
from .errors import Falsification
from .graph import (
    GainGraph,
    _girth_from_adj,
    emit_qgg,
    girth,
    random_switching,
    switch,
    with_random_gains,
)
from .qlinalg import left_row_rank_eliminate, quaternion_int_rank, rank_via_adjoint
from .quat import LIPSCHITZ_UNITS, Quaternion, random_unit_quaternion
from .shapes import (
    TABLE1_SHAPES,
    TABLE2_SHAPES,
    braced_octagon_all_type1,
    canonical_unicyclic_graph,
    cycle_graph,
    theta133_all_type1,
    theta333_all_type1,
    with_cycle_gain,
)

__all__ = ["SurveyReport", "run_survey", "resolve_threads", "SUITES"]

SUITES = ("formulas", "girth-bound", "tables", "classifications")

# Unit quaternion index tables.  Indices: 1, -1, i, -i, j, -j, k, -k.
_UNIT_TUPLES = tuple(
    (int(q.x0), int(q.x1), int(q.x2), int(q.x3)) for q in LIPSCHITZ_UNITS
)
_CONJ = (0, 1, 3, 2, 5, 4, 7, 6)


def _build_mul_table():
    table = []
    for a in LIPSCHITZ_UNITS:
        row = []
        for b in LIPSCHITZ_UNITS:
            prod = a * b
            row.append(LIPSCHITZ_UNITS.index(prod))
        table.append(tuple(row))
    return tuple(table)


_MUL = _build_mul_table()


@dataclass
class SurveyReport:
    max_n: int
    samples: int
    seed: int
    suites: tuple[str, ...]
    gain_set: str
    threads: int
    counts: dict[str, int] = field(default_factory=dict)
    falsifications: list[dict] = field(default_factory=list)
    unmatched_rank4_girth4: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.falsifications

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "samples": self.samples,
            "seed": self.seed,
            "suites": list(self.suites),
            "gain_set": self.gain_set,
            "threads": self.threads,
            "checks": dict(sorted(self.counts.items())),
            "falsification_count": len(self.falsifications),
            "falsifications": self.falsifications,
            "unmatched_rank4_girth4": self.unmatched_rank4_girth4,
            "elapsed_seconds": round(self.elapsed, 3),
            "ok": self.ok,
        }


def resolve_threads(threads: int | None = None) -> int:
    """Worker count: explicit argument, capped by the QGG_THREADS env var."""
    if threads is None:
        threads = min(os.cpu_count() or 1, 8)
    env = os.environ.get("QGG_THREADS")
    if env:
        try:
            threads = min(threads, int(env))
        except ValueError:
            pass
    return max(threads, 1)


# ---------------------------------------------------------------------------
# Underlying-graph analysis (gain independent, computed once per graph).
# ---------------------------------------------------------------------------


class _Underlying:
    __slots__ = (
        "n",
        "edges",
        "adj",
        "deg",
        "girth_len",
        "girth_cycle",
        "is_cycle",
        "parts",
        "quads",
        "eq_pairs",
        "cu",
        "sb_cycle",
        "edge_pos",
    )

    def __init__(self, n, edges, adj):
        self.n = n
        self.edges = edges
        self.adj = adj
        self.deg = tuple(len(a) for a in adj)
        got = _girth_from_adj(adj)
        self.girth_len, self.girth_cycle = got if got else (None, None)
        self.is_cycle = n >= 3 and all(d == 2 for d in self.deg)
        self.parts = _bipartition(n, adj)
        self.quads = _quads(self.parts) if self.parts else ()
        sets = [frozenset(a) for a in adj]
        self.eq_pairs = tuple(
            (x, y)
            for x in range(n)
            for y in range(x + 1, n)
            if sets[x] and sets[x] == sets[y]
        )
        self.cu = _canonical_unicyclic(n, adj, self.deg)
        self.sb_cycle = _star_bridge_cycle(n, adj, self.deg)
        self.edge_pos = {e: i for i, e in enumerate(edges)}


def _bipartition(n, adj):
    """Parts of a complete bipartite graph (either side may be 1), else None."""
    if n < 2:
        return None
    classes = []
    assigned = [-1] * n
    allv = frozenset(range(n))
    for v in range(n):
        if assigned[v] >= 0:
            continue
        cls = tuple(sorted(allv - frozenset(adj[v])))
        if v not in cls:
            return None
        for u in cls:
            if assigned[u] >= 0:
                return None
            assigned[u] = len(classes)
        classes.append(cls)
        if len(classes) > 2:
            return None
    if len(classes) != 2:
        return None
    for cls in classes:
        other = allv - frozenset(cls)
        for u in cls:
            if frozenset(adj[u]) != other:
                return None
    return tuple(classes)


def _quads(parts):
    side_a, side_b = parts
    out = []
    for i in range(len(side_a)):
        for j in range(i + 1, len(side_a)):
            for k in range(len(side_b)):
                for l in range(k + 1, len(side_b)):
                    out.append((side_a[i], side_b[k], side_a[j], side_b[l]))
    return tuple(out)


def _strip_leaves(n, adj):
    live = set(range(n))
    deg = {v: len(adj[v]) for v in live}
    changed = True
    while changed:
        changed = False
        for v in list(live):
            if deg[v] <= 1:
                live.discard(v)
                for w in adj[v]:
                    if w in live:
                        deg[w] -= 1
                changed = True
    return live


def _core_cycle(n, adj, live):
    """Vertex order of the 2-core when it is a single cycle, else None."""
    if len(live) < 3:
        return None
    if any(sum(1 for w in adj[v] if w in live) != 2 for v in live):
        return None
    start = min(live)
    order = [start]
    prev = -1
    while True:
        nxt = [w for w in adj[order[-1]] if w in live and w != prev]
        if not nxt:
            return None
        prev = order[-1]
        if nxt[0] == start:
            break
        order.append(nxt[0])
    if len(order) != len(live):
        return None
    return tuple(order)


def _canonical_unicyclic(n, adj, deg):
    """(girth, t, k, cycle) for a cycle with pendant stars, else None."""
    if sum(deg) != 2 * n:  # unicyclic: m == n
        return None
    live = _strip_leaves(n, adj)
    cycle = _core_cycle(n, adj, live)
    if cycle is None or len(cycle) == n:
        return None
    on_cycle = set(cycle)
    starred = set()
    for v in range(n):
        if v in on_cycle:
            continue
        if deg[v] != 1:
            return None
        (nbr,) = adj[v]
        if nbr not in on_cycle:
            return None
        starred.add(nbr)
    glen = len(cycle)
    pos = sorted(i for i, v in enumerate(cycle) if v in starred)
    t = len(pos)
    k = 0
    for idx in range(t):
        arc = (pos[(idx + 1) % t] - pos[idx] - 1) % glen if t > 1 else glen - 1
        if arc % 2 == 0:
            k += 1
    return glen, t, k, cycle


def _star_bridge_cycle(n, adj, deg):
    """The cycle of a cycle-plus-star-bridge graph, else None."""
    if sum(deg) != 2 * n:
        return None
    live = _strip_leaves(n, adj)
    cycle = _core_cycle(n, adj, live)
    if cycle is None or len(cycle) == n:
        return None
    on_cycle = set(cycle)
    off = [v for v in range(n) if v not in on_cycle]
    centers = [v for v in off if deg[v] >= 2]
    if len(centers) != 1:
        return None
    center = centers[0]
    anchors = [w for w in adj[center] if w in on_cycle]
    leaves = [w for w in adj[center] if w not in on_cycle]
    if len(anchors) != 1 or not leaves:
        return None
    if any(deg[v] != 1 for v in leaves):
        return None
    if set(off) != {center, *leaves}:
        return None
    return cycle


# ---------------------------------------------------------------------------
# Per-sample machinery on unit gain indices.
# ---------------------------------------------------------------------------


def _rank_of(info: _Underlying, gains):
    n = info.n
    rows = [[0] * (4 * n) for _ in range(n)]
    for pos, (u, v) in enumerate(info.edges):
        t0, t1, t2, t3 = _UNIT_TUPLES[gains[pos]]
        c = 4 * v
        row = rows[u]
        row[c] = t0
        row[c + 1] = t1
        row[c + 2] = t2
        row[c + 3] = t3
        c = 4 * u
        row = rows[v]
        row[c] = t0
        row[c + 1] = -t1
        row[c + 2] = -t2
        row[c + 3] = -t3
    return quaternion_int_rank(rows, n)


def _gain_lookup(info: _Underlying, gains):
    pos = info.edge_pos

    def gainof(u, v):
        if u < v:
            return gains[pos[(u, v)]]
        return _CONJ[gains[pos[(v, u)]]]

    return gainof


def _cycle_idx(cycle, gainof):
    acc = 0
    prev = cycle[-1]
    for v in cycle:
        acc = _MUL[acc][gainof(prev, v)]
        prev = v
    return acc


def _is_type1_idx(length, acc):
    if length % 2:
        return False
    target = 0 if (length // 2) % 2 == 0 else 1
    return acc == target


def _reduce_live(info: _Underlying, gainof):
    """Live vertex set after deleting multiple vertices, lowest index first."""
    live = set(range(info.n))
    adj = info.adj
    while True:
        victim = None
        lives = sorted(live)
        nbhd = {v: frozenset(w for w in adj[v] if w in live) for v in lives}
        for i, x in enumerate(lives):
            nx = nbhd[x]
            if not nx:
                continue
            for y in lives[i + 1 :]:
                if nbhd[y] != nx:
                    continue
                z0 = min(nx)
                k = _MUL[gainof(x, z0)][_CONJ[gainof(y, z0)]]
                if all(gainof(x, z) == _MUL[k][gainof(y, z)] for z in nx):
                    victim = x
                    break
            if victim is not None:
                break
        if victim is None:
            return live
        live.discard(victim)


def _graph_from_indices(info: _Underlying, gains) -> GainGraph:
    return GainGraph(
        info.n,
        {
            (u, v): Quaternion(*_UNIT_TUPLES[gains[pos]])
            for pos, (u, v) in enumerate(info.edges)
        },
        check=False,
    )


def _live_subgraph(info: _Underlying, gains, live) -> GainGraph:
    keep = sorted(live)
    index = {v: i for i, v in enumerate(keep)}
    gmap = {}
    for pos, (u, v) in enumerate(info.edges):
        if u in live and v in live:
            gmap[(index[u], index[v])] = Quaternion(*_UNIT_TUPLES[gains[pos]])
    return GainGraph(len(keep), gmap, check=False)


class _Collector:
    __slots__ = ("counts", "falsifications", "unmatched")

    def __init__(self):
        self.counts = {}
        self.falsifications = []
        self.unmatched = 0

    def bump(self, suite):
        self.counts[suite] = self.counts.get(suite, 0) + 1

    def falsify(self, suite, detail, graph_text):
        self.falsifications.append(
            {"suite": suite, "detail": detail, "graph": graph_text}
        )


_RANK4_TABLE1 = theorems._RANK_EQ_GIRTH_TABLE1
_RANK4_TABLE2 = theorems._RANK_EQ_GIRTH_TABLE2


def _check_sample(info: _Underlying, gains, suites, out: _Collector):
    gainof = _gain_lookup(info, gains)
    r = _rank_of(info, gains)
    glen = info.girth_len

    def witness():
        return emit_qgg(_graph_from_indices(info, gains))

    if "girth-bound" in suites and glen is not None:
        out.bump("girth-bound")
        out.bump("law:girth-bound")
        if r < glen - 2:
            out.falsify(
                "girth-bound", f"rank {r} < girth {glen} - 2", witness()
            )
        case_a = info.is_cycle and _is_type1_idx(
            glen, _cycle_idx(info.girth_cycle, gainof)
        )
        case_b = (
            info.parts is not None
            and min(len(p) for p in info.parts) >= 2
            and all(_is_type1_idx(4, _cycle_idx(q, gainof)) for q in info.quads)
        )
        if (r == glen - 2) != (case_a or case_b):
            out.falsify(
                "girth-bound",
                f"equality cases failed: rank {r}, girth {glen}, "
                f"type1-cycle {case_a}, bipartite {case_b}",
                witness(),
            )

    if "classifications" not in suites:
        return r

    out.bump("classifications")
    live = None

    def reduced_live():
        nonlocal live
        if live is None:
            live = _reduce_live(info, gainof) if info.eq_pairs else set(range(info.n))
        return live

    def reduced_triangle_is(type4: bool) -> bool:
        lv = reduced_live()
        if len(lv) != 3:
            return False
        a, b, c = sorted(lv)
        if not (b in info.adj[a] and c in info.adj[a] and c in info.adj[b]):
            return False
        acc = _cycle_idx((a, b, c), gainof)
        return (acc >= 2) if type4 else (acc <= 1)

    # all graphs: the two rank-2 families
    out.bump("law:rank2")
    case_a2 = info.parts is not None and all(
        _is_type1_idx(4, _cycle_idx(q, gainof)) for q in info.quads
    )
    case_b2 = reduced_triangle_is(True)
    if (r == 2) != (case_a2 or case_b2):
        out.falsify(
            "classifications",
            f"rank-2 law failed: rank {r}, complete-bipartite {case_a2}, "
            f"reduced-triangle-type4 {case_b2}",
            witness(),
        )

    if glen is None:
        return r

    whole_idx = _cycle_idx(info.girth_cycle, gainof) if info.is_cycle else None

    # rank = girth - 1: type-4 cycle or reduced type-4 triangle
    out.bump("law:rank=g-1")
    case_cycle_t4 = (
        info.is_cycle and glen % 2 == 1 and whole_idx >= 2
    )
    case_gm1 = case_cycle_t4 or case_b2
    if (r == glen - 1) != case_gm1:
        out.falsify(
            "classifications",
            f"rank = girth-1 law failed: rank {r}, girth {glen}",
            witness(),
        )

    if glen == 3:
        out.bump("law:rank=g@3")
        case_g3 = (info.is_cycle and whole_idx <= 1) or reduced_triangle_is(False)
        if (r == 3) != case_g3:
            out.falsify(
                "classifications",
                f"rank = girth law failed at girth 3: rank {r}",
                witness(),
            )
    elif glen == 4:
        out.bump("law:rank=g@4-sufficient")
        matched = None
        if info.is_cycle:
            if not _is_type1_idx(4, whole_idx):
                matched = "quad-type2"
        elif info.cu is not None and info.cu[0] == 4 and info.cu[2] == 0:
            matched = "quad-with-stars"
        elif (
            info.sb_cycle is not None
            and len(info.sb_cycle) == 4
            and _is_type1_idx(4, _cycle_idx(info.sb_cycle, gainof))
        ):
            matched = "quad-type1-star-bridge"
        else:
            lv = reduced_live()
            nlive = len(lv)
            if nlive >= 4:
                m_live = sum(1 for u, v in info.edges if u in lv and v in lv)
                if m_live == nlive + 1:
                    red = _live_subgraph(info, gains, lv)
                    if all(red.degree(v) >= 2 for v in range(red.n)):
                        name, predicted = theorems._table1_prediction(red)
                        if name in _RANK4_TABLE1 and predicted == 4:
                            matched = "reduced-bicyclic-rank4"
                    else:
                        name, predicted = theorems._table2_prediction(red)
                        if name in _RANK4_TABLE2 and predicted == 4:
                            matched = "reduced-pendant-bicyclic-rank4"
        if matched is not None and r != 4:
            out.falsify(
                "classifications",
                f"sufficient rank-4 case {matched} failed: rank {r}",
                witness(),
            )
        if matched is None and r == 4:
            out.unmatched += 1
    elif glen >= 5:
        out.bump("law:rank=g@5plus")
        if info.is_cycle:
            # type 2 for even length, type 3 for odd; types 1 and 4 fall short
            if glen % 2 == 0:
                matched = not _is_type1_idx(glen, whole_idx)
            else:
                matched = whole_idx <= 1
        else:
            matched = False
        if not matched and info.cu is not None:
            cu_g, _, cu_k, _ = info.cu
            matched = cu_g == glen and glen % 2 == 0 and cu_k == 0
        if not matched and info.sb_cycle is not None and len(info.sb_cycle) == glen:
            matched = _is_type1_idx(glen, _cycle_idx(info.sb_cycle, gainof))
        if not matched and info.n >= 9:
            g_full = _graph_from_indices(info, gains)
            matched = theorems._girth5plus_cases(g_full, glen) is not None
        if (r == glen) != bool(matched):
            out.falsify(
                "classifications",
                f"rank = girth law failed at girth {glen}: rank {r}",
                witness(),
            )
    return r


# ---------------------------------------------------------------------------
# Corpus enumeration.
# ---------------------------------------------------------------------------


def _pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _connected_adj(n, mask, pairs):
    adj = [[] for _ in range(n)]
    m = mask
    idx = 0
    while m:
        if m & 1:
            u, v = pairs[idx]
            adj[u].append(v)
            adj[v].append(u)
        m >>= 1
        idx += 1
    seen = 1
    stack = [0]
    visited = [False] * n
    visited[0] = True
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not visited[w]:
                visited[w] = True
                seen += 1
                stack.append(w)
    if seen != n:
        return None
    return [tuple(a) for a in adj]


def _graph_seed(seed, n, mask):
    return ((seed * 1000003 + n) * 2654435761 + mask) & 0xFFFFFFFFFFFF


def _corpus_unit(args):
    n, lo, hi, samples, seed, suites, _gain_set = args
    pairs = _pairs(n)
    out = _Collector()
    for mask in range(lo, hi):
        adj = _connected_adj(n, mask, pairs)
        if adj is None:
            continue
        edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
        info = _Underlying(n, edges, adj)
        rng = random.Random(_graph_seed(seed, n, mask))
        for _ in range(samples):
            gains = [rng.randrange(8) for _ in edges]
            try:
                _check_sample(info, gains, suites, out)
            except Falsification as exc:
                out.falsify("classifications", exc.detail, exc.witness_text or "")
    return out.counts, out.falsifications, out.unmatched


_CHUNK_BITS = 14


def _corpus_units(max_n, samples, seed, suites, gain_set):
    units = []
    for n in range(1, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        chunk = 1 << _CHUNK_BITS
        for lo in range(0, total, chunk):
            units.append((n, lo, min(lo + chunk, total), samples, seed, suites, gain_set))
    return units


# ---------------------------------------------------------------------------
# Constructed-family suites.
# ---------------------------------------------------------------------------


def _expect(out, suite, condition, detail, graph, law=None):
    out.bump(suite)
    if law:
        out.bump(law)
    if not condition:
        out.falsify(suite, detail, emit_qgg(graph) if graph is not None else "")


def _graph_rank(g):
    return left_row_rank_eliminate(g.adjacency_matrix()).rank


def _run_formulas(samples, seed, out: _Collector):
    rng = random.Random(seed * 7919 + 11)
    # paths: rank n-1 for odd n, n for even n, independent of the gains
    for n in range(1, 13):
        for _ in range(max(samples, 1)):
            g = with_random_gains(n, [(v, v + 1) for v in range(n - 1)], "lipschitz", rng)
            want = theorems.path_rank(n)
            _expect(out, "formulas", _graph_rank(g) == want, f"path rank, n={n}", g,
                    law="law:path-rank")
    # cycles: each admissible type at each length
    for n in range(3, 13):
        types = (1, 2) if n % 2 == 0 else (3, 4)
        for ct in types:
            g = cycle_graph(n, ctype=ct)
            want = theorems.cycle_rank(n, ct)
            _expect(out, "formulas", _graph_rank(g) == want, f"cycle rank, n={n} type {ct}", g,
                    law="law:cycle-rank")
            scrambled = switch(g, random_switching(g, "lipschitz", rng))
            _expect(
                out,
                "formulas",
                _graph_rank(scrambled) == want,
                f"cycle rank after switching, n={n} type {ct}",
                scrambled,
                law="law:cycle-rank",
            )
    # complete graph on 4 vertices: rank 4 for every gain assignment tried
    k4_pairs = _pairs(4)
    for _ in range(500):
        g = with_random_gains(4, k4_pairs, "lipschitz", rng)
        _expect(out, "formulas", _graph_rank(g) == 4, "K4 rank (exact sample)", g,
                law="law:k4-rank")
    for _ in range(500):
        gains = {p: random_unit_quaternion(rng) for p in k4_pairs}
        g = GainGraph(4, gains, check=False)
        a = left_row_rank_eliminate(g.adjacency_matrix(), 1e-9).rank
        b = rank_via_adjoint(g.adjacency_matrix(), 1e-9).rank
        _expect(
            out,
            "formulas",
            a == 4 and b == 4,
            f"K4 rank (float sample): elimination {a}, adjoint {b}",
            None,
            law="law:k4-rank",
        )
    # canonical unicyclic: rank = girth + number of even arcs
    built = 0
    for glen in range(3, 9):
        patterns = [(0,), (0, 1)]
        if glen >= 4:
            patterns.append((0, 2))
        if glen >= 5:
            patterns.append((0, 1, 2))
            patterns.append((0, 2, 4))
        for positions in patterns:
            if max(positions) >= glen:
                continue
            for leaves in (1, 2):
                g = canonical_unicyclic_graph(
                    glen, {p: leaves for p in positions}, rng=rng
                )
                out.bump("formulas")
                out.bump("law:unicyclic-rank")
                try:
                    theorems.canonical_unicyclic_rank(g)
                except Falsification as exc:
                    out.falsify("formulas", exc.detail, exc.witness_text or "")
                built += 1
    assert built >= 50


_ONE = Quaternion(1)
_MINUS = Quaternion(-1)
_I = Quaternion(0, 1)
_J = Quaternion(0, 0, 1)
_MI = Quaternion(0, -1)
_HALF = Fraction(1, 2)
_HALF_PPPP = Quaternion(_HALF, _HALF, _HALF, _HALF)
_HALF_MPPP = Quaternion(-_HALF, _HALF, _HALF, _HALF)

_TABLE1_CASES = [
    ("inf(3,1,3)", {"tri_a": _I, "tri_b": _J}, 4),
    ("inf(3,1,3)", {"tri_a": _MINUS, "tri_b": _ONE}, 4),
    ("inf(3,1,3)", {"tri_a": _ONE, "tri_b": _J}, ">4"),
    ("inf(3,1,4)", {"quad": _ONE, "tri": _MI}, 4),
    ("inf(3,1,4)", {"quad": _ONE, "tri": _MINUS}, ">4"),
    ("inf(3,1,4)", {"quad": _I, "tri": _MI}, ">4"),
    ("inf(4,1,4)", {"quad_a": _ONE, "quad_b": _ONE}, 4),
    ("inf(4,1,4)", {"quad_a": _I, "quad_b": _ONE}, ">4"),
    ("inf(3,2,3)", {}, ">4"),
    ("theta(0,1,1)", {"tri": _MI, "quad": _ONE}, 2),
    ("theta(0,1,1)", {"tri": _MINUS, "quad": _ONE}, 3),
    ("theta(0,1,1)", {"tri": _MI, "quad": _I}, 4),
    ("theta(0,1,1)", {"tri": _MINUS, "quad": _I}, 4),
    ("theta(0,1,2)", {"tri": _I, "penta": _J}, 4),
    ("theta(0,1,2)", {"tri": _MINUS, "penta": _MINUS}, 4),
    ("theta(0,1,2)", {"tri": _MINUS, "penta": _I}, ">4"),
    ("theta(0,1,3)", {"tri": _MI, "hexa": _MINUS}, 4),
    ("theta(0,1,3)", {"tri": _MINUS, "hexa": _MINUS}, ">4"),
    ("theta(0,1,3)", {"tri": _MI, "hexa": _ONE}, ">4"),
    ("theta(0,2,2)", {"quad": _HALF_PPPP, "hexa": _HALF_MPPP}, 4),
    ("theta(0,2,2)", {"quad": _ONE, "hexa": _ONE}, ">4"),
    ("theta(1,1,1)", {"quad_a": _ONE, "quad_b": _ONE}, 2),
    ("theta(1,1,1)", {"quad_a": _I, "quad_b": _ONE}, 4),
    ("theta(1,1,1)", {"quad_a": _I, "quad_b": _J}, 4),
    ("theta(1,1,2)", {"quad": _ONE, "penta": _I}, 4),
    ("theta(1,1,2)", {"quad": _ONE, "penta": _ONE}, ">4"),
    ("theta(1,1,2)", {"quad": _J, "penta": _I}, ">4"),
    ("theta(1,1,3)", {"quad": _ONE, "hexa": _MINUS}, 4),
    ("theta(1,1,3)", {"quad": _ONE, "hexa": _I}, ">4"),
]

_TABLE2_CASES = [
    ("diamond+leaf@rim", {"tri": _MI}, 4),
    ("diamond+leaf@rim", {"tri": _MINUS}, "!=4"),
    ("diamond+leaf@hub", {}, 4),
    ("diamond+leaf@hubs", {}, 4),
    ("diamond+tail@rim", {"tri": _MI, "quad": _ONE}, 4),
    ("diamond+tail@rim", {"tri": _MINUS, "quad": _ONE}, "!=4"),
    ("diamond+tail@rim", {"tri": _MI, "quad": _I}, "!=4"),
    ("diamond+tail@hub", {"tri": _MI, "quad": _ONE}, 4),
    ("diamond+tail@hub", {"tri": _MI, "quad": _J}, "!=4"),
    ("theta(0,1,2)+leaf@tri", {"quad": _ONE}, 4),
    ("theta(0,1,2)+leaf@tri", {"quad": _I}, "!=4"),
    ("k23+leaf@rim", {"quad": _ONE}, 4),
    ("k23+leaf@rim", {"quad": _I}, "!=4"),
    ("k23+leaf@hub", {}, 4),
    ("k23+leaf@hubs", {}, 4),
    ("k23+tail@rim", {"quad_a": _ONE, "quad_b": _ONE}, 4),
    ("k23+tail@rim", {"quad_a": _ONE, "quad_b": _I}, "!=4"),
    ("k23+tail@hub", {"quad_a": _ONE, "quad_b": _ONE}, 4),
    ("k23+tail@hub", {"quad_a": _I, "quad_b": _ONE}, "!=4"),
]


def _free_edge(shape, key):
    """An oriented edge of the condition cycle not shared with the others."""
    cyc = shape.cycles[key]
    steps = [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    taken = set()
    for other_key, other in shape.cycles.items():
        if other_key == key:
            continue
        for i in range(len(other)):
            a, b = other[i], other[(i + 1) % len(other)]
            taken.add((min(a, b), max(a, b)))
    for a, b in reversed(steps):
        if (min(a, b), max(a, b)) not in taken:
            return (a, b)
    raise ValueError(f"no free edge for cycle {key} of {shape.name}")


def _shape_instance(shape, targets) -> GainGraph:
    g = GainGraph(shape.n, list(shape.edges))
    for key, target in targets.items():
        g = with_cycle_gain(g, shape.cycles[key], target, _free_edge(shape, key))
    return g


def _run_tables(seed, out: _Collector):
    rng = random.Random(seed * 104729 + 3)
    for name, targets, expected in _TABLE1_CASES:
        g = _shape_instance(TABLE1_SHAPES[name], targets)
        try:
            got = theorems.table1_predict(g)
            _expect(
                out,
                "tables",
                got == expected,
                f"{name}: predicted {got}, expected {expected}",
                g,
                law="law:table-bicyclic",
            )
        except Falsification as exc:
            out.falsify("tables", exc.detail, exc.witness_text or "")
    # a second bare-bicyclic spot check with non-table parameters
    big = GainGraph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4)])
    try:
        got = theorems.table1_predict(big)
        _expect(out, "tables", got == ">4", f"inf(4,2,4): predicted {got}", big)
    except Falsification as exc:
        out.falsify("tables", exc.detail, exc.witness_text or "")
    for name, targets, expected in _TABLE2_CASES:
        g = _shape_instance(TABLE2_SHAPES[name], targets)
        try:
            got = theorems.table2_predict(g)
            _expect(
                out,
                "tables",
                got == expected,
                f"{name}: predicted {got}, expected {expected}",
                g,
                law="law:table-pendant",
            )
        except Falsification as exc:
            out.falsify("tables", exc.detail, exc.witness_text or "")
    # gain-free rows stay rank 4 under random gains
    for name in ("diamond+leaf@hub", "diamond+leaf@hubs", "k23+leaf@hub", "k23+leaf@hubs"):
        shape = TABLE2_SHAPES[name]
        g = with_random_gains(shape.n, shape.edges, "lipschitz", rng)
        try:
            got = theorems.table2_predict(g)
            _expect(out, "tables", got == 4, f"{name} random gains: predicted {got}", g)
        except Falsification as exc:
            out.falsify("tables", exc.detail, exc.witness_text or "")
    # the three all-cycles-type-1 girth extremes
    for builder, want_girth, want_rank in (
        (theta133_all_type1, 6, 6),
        (theta333_all_type1, 8, 8),
        (braced_octagon_all_type1, 6, 6),
    ):
        g = builder()
        r = _graph_rank(g)
        w = girth(g)
        _expect(
            out,
            "tables",
            w is not None and w.length == want_girth and r == want_rank,
            f"{builder.__name__}: girth {w.length if w else None}, rank {r}",
            g,
            law="law:girth-extremes",
        )


# ---------------------------------------------------------------------------
# Entry point.
# ---------------------------------------------------------------------------


def run_survey(
    max_n: int = 6,
    samples: int = 10,
    seed: int = 1,
    suites=("all",),
    gain_set: str = "lipschitz",
    threads: int | None = None,
) -> SurveyReport:
    """Run the selected verification suites and collect falsifications.

    Identical (seed, configuration) pairs produce identical reports, no
    matter how many worker processes participate.
    """
    chosen = set()
    for s in suites:
        if s == "all":
            chosen.update(SUITES)
        elif s in SUITES:
            chosen.add(s)
        else:
            raise ValueError(f"unknown suite {s!r}")
    if gain_set != "lipschitz" and (chosen & {"girth-bound", "classifications"}):
        raise ValueError(
            "the exhaustive suites decide cycle types exactly and only run "
            "with the lipschitz gain set"
        )
    threads = resolve_threads(threads)
    report = SurveyReport(
        max_n=max_n,
        samples=samples,
        seed=seed,
        suites=tuple(sorted(chosen)),
        gain_set=gain_set,
        threads=threads,
    )
    start = time.perf_counter()
    out = _Collector()
    if "formulas" in chosen:
        _run_formulas(samples, seed, out)
    if "tables" in chosen:
        _run_tables(seed, out)
    corpus_suites = tuple(sorted(chosen & {"girth-bound", "classifications"}))
    if corpus_suites:
        units = _corpus_units(max_n, samples, seed, corpus_suites, gain_set)
        if threads > 1 and len(units) > 1:
            with multiprocessing.Pool(threads) as pool:
                results = pool.map(_corpus_unit, units)
        else:
            results = [_corpus_unit(u) for u in units]
        for counts, falsifications, unmatched in results:
            for key, val in counts.items():
                out.counts[key] = out.counts.get(key, 0) + val
            out.falsifications.extend(falsifications)
            out.unmatched += unmatched
    report.counts = out.counts
    report.falsifications = out.falsifications
    report.unmatched_rank4_girth4 = out.unmatched
    report.elapsed = time.perf_counter() - start
    return report
