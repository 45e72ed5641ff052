"""Gain graphs over the unit quaternions.

A gain graph is a simple underlying graph whose oriented edges carry
unit quaternions, with the reversed orientation carrying the conjugate:
gain(v, u) == conj(gain(u, v)).  Vertices are 0-indexed ints internally
and 1-indexed in the text format.

This module owns the graph structure and everything that is purely
about cycles and gains: girth with a witness cycle, ordered cycle gain
products, the four cycle types, switching, and spanning-tree gain
normalization.  Structure recognition and rank-preserving reductions
live in :mod:`qgg.reduce`; rank itself in :mod:`qgg.qlinalg`.
"""

from __future__ import annotations

import random
import warnings
from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from .errors import (
    AmbiguousTypeError,
    DisconnectedGraphError,
    FormatError,
    NotACycleError,
)
from .qlinalg import QMatrix
from .quat import Quaternion, random_lipschitz_unit, random_unit_quaternion

__all__ = [
    "GainGraph",
    "CycleType",
    "GirthWitness",
    "girth",
    "brute_force_girth",
    "all_simple_cycles",
    "cycle_gain",
    "cycle_type",
    "CycleTypeReport",
    "cycle_type_report",
    "switch",
    "normalize_by_spanning_tree",
    "induced_subgraph",
    "delete_vertices",
    "connected_components",
    "is_connected",
    "is_dominating_set",
    "disjoint_union",
    "parse_qgg",
    "emit_qgg",
    "load_qgg",
    "save_qgg",
    "gain_graph",
    "with_random_gains",
]

FLOAT_TYPE_TOL = 1e-9
FLOAT_AMBIGUOUS_BAND = (1e-9, 1e-6)


class CycleType(IntEnum):
    """The four gain cycle classes.

    With n the cycle length and phi the ordered gain product:
    even n is TYPE1 when phi == (-1)**(n/2) and TYPE2 otherwise; odd n
    is TYPE4 when Re((-1)**((n-1)/2) * phi) == 0 and TYPE3 otherwise.
    """

    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3
    TYPE4 = 4


class GainGraph:
    """Simple graph with unit quaternion gains on oriented edges."""

    __slots__ = ("n", "_gains", "_adj")

    def __init__(self, n: int, gains=None, *, check: bool = True):
        """Build from a vertex count and a mapping {(u, v): gain}.

        The key (u, v) gives the gain for the orientation u -> v; it is
        stored for min(u, v) -> max(u, v), conjugating when needed.
        ``gains`` may also be an iterable of (u, v), (u, v, gain) or
        ((u, v), gain) items, with a missing gain meaning 1.
        """
        stored: dict[tuple[int, int], Quaternion] = {}
        for u, v, g in _iter_gain_items(gains):
            if check:
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"vertex out of range in edge ({u}, {v})")
                if u == v:
                    raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v, g = v, u, g.conj()
            key = (u, v)
            if check and key in stored:
                raise ValueError(f"duplicate edge ({u}, {v})")
            if check:
                if g.is_exact:
                    if g.norm_sq() != 1:
                        raise ValueError(f"non-unit gain {g} on edge ({u}, {v})")
                elif not g.is_unit():
                    raise ValueError(f"non-unit gain {g} on edge ({u}, {v})")
            stored[key] = g
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in stored:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_gains", stored)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    def __setattr__(self, name, value):
        raise AttributeError("GainGraph is immutable")

    # -- queries ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self._gains)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._gains or (v, u) in self._gains

    def gain(self, u: int, v: int) -> Quaternion:
        """Gain of the oriented edge u -> v."""
        if u < v:
            g = self._gains.get((u, v))
            if g is None:
                raise KeyError(f"no edge ({u}, {v})")
            return g
        g = self._gains.get((v, u))
        if g is None:
            raise KeyError(f"no edge ({u}, {v})")
        return g.conj()

    def edges(self):
        """Sorted (u, v, gain) triples with u < v."""
        return [(u, v, self._gains[(u, v)]) for u, v in sorted(self._gains)]

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._gains))

    def underlying_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._gains)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self._adj))

    @property
    def is_exact(self) -> bool:
        return all(g.is_exact for g in self._gains.values())

    def to_float(self) -> "GainGraph":
        return GainGraph(
            self.n, {e: g.to_float() for e, g in self._gains.items()}, check=False
        )

    def with_gain(self, u: int, v: int, g: Quaternion) -> "GainGraph":
        """Copy with the gain of oriented edge u -> v replaced."""
        if not self.has_edge(u, v):
            raise KeyError(f"no edge ({u}, {v})")
        gains = dict(self._gains)
        if u < v:
            gains[(u, v)] = g
        else:
            gains[(v, u)] = g.conj()
        return GainGraph(self.n, gains)

    def adjacency_matrix(self) -> QMatrix:
        """Hermitian n x n matrix with zero diagonal and h[u][v] = gain(u, v)."""
        zero = Quaternion(0)
        grid = [[zero] * self.n for _ in range(self.n)]
        for (u, v), g in self._gains.items():
            grid[u][v] = g
            grid[v][u] = g.conj()
        return QMatrix(grid)

    def __eq__(self, other):
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self.n == other.n and self._gains == other._gains

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._gains.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        return f"GainGraph(n={self.n}, edges={self.edge_count})"


def _iter_gain_items(gains):
    one = Quaternion(1)
    if gains is None:
        return
    if isinstance(gains, dict):
        items = gains.items()
        for (u, v), g in items:
            yield u, v, Quaternion.coerce(g)
        return
    for item in gains:
        if len(item) == 2 and isinstance(item[0], int):
            u, v = item
            yield u, v, one
        elif len(item) == 3:
            u, v, g = item
            yield u, v, Quaternion.coerce(g)
        elif len(item) == 2:
            (u, v), g = item
            yield u, v, Quaternion.coerce(g)
        else:
            raise TypeError(f"bad edge item {item!r}")


def gain_graph(n: int, edges) -> GainGraph:
    """Convenience constructor; edges as (u, v) for gain 1 or (u, v, gain)."""
    return GainGraph(n, edges)


# ---------------------------------------------------------------------------
# Vertex-set operations.
# ---------------------------------------------------------------------------


def induced_subgraph(g: GainGraph, vertices) -> GainGraph:
    """Induced subgraph, relabeled by the sorted vertex list."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    gains = {}
    for u, v, q in g.edges():
        if u in index and v in index:
            gains[(index[u], index[v])] = q
    return GainGraph(len(keep), gains, check=False)


def delete_vertices(g: GainGraph, vertices) -> GainGraph:
    drop = set(vertices)
    for v in drop:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


def connected_components(g: GainGraph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: GainGraph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_dominating_set(g: GainGraph, vertices) -> bool:
    """True iff every vertex outside the set has a neighbor inside it."""
    inside = set(vertices)
    for v in inside:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    for v in range(g.n):
        if v in inside:
            continue
        if not any(w in inside for w in g.neighbors(v)):
            return False
    return True


def disjoint_union(a: GainGraph, b: GainGraph) -> GainGraph:
    gains = {e: q for e, q in a._gains.items()}
    for (u, v), q in b._gains.items():
        gains[(u + a.n, v + a.n)] = q
    return GainGraph(a.n + b.n, gains, check=False)


def bfs_distances(g: GainGraph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# Girth and cycles.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GirthWitness:
    length: int
    cycle: tuple[int, ...]


def _girth_from_adj(adj) -> tuple[int, tuple[int, ...]] | None:
    """Girth and one witness cycle from adjacency lists; None for a forest.

    Per-vertex BFS: for a non-tree edge (u, v) the closed walk through
    the root has length dist[u] + dist[v] + 1, never shorter than the
    girth, and equal to it for a root on a shortest cycle.  At the
    minimum the two root paths only share the root, so gluing them
    yields a simple witness cycle.
    """
    n = len(adj)
    best = None  # (length, root, u, v, dist, parent)
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u and u < w:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best[0]:
                        best = (cand, root, u, w, list(dist), list(parent))
    if best is None:
        return None
    length, root, u, w, dist, parent = best
    path_u = []
    x = u
    while x != root:
        path_u.append(x)
        x = parent[x]
    path_w = []
    x = w
    while x != root:
        path_w.append(x)
        x = parent[x]
    cycle = tuple([root] + path_u[::-1] + path_w)
    assert len(cycle) == length and len(set(cycle)) == length
    return length, cycle


def girth(g: GainGraph) -> GirthWitness | None:
    """Length of a shortest cycle plus one witness; None for a forest."""
    got = _girth_from_adj([g.neighbors(v) for v in range(g.n)])
    if got is None:
        return None
    return GirthWitness(got[0], got[1])


def brute_force_girth(g: GainGraph) -> int | None:
    """Independent oracle: min over edges of (shortest path avoiding it) + 1."""
    best = None
    for u, v, _ in g.edges():
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for w in g.neighbors(x):
                if (x, w) in ((u, v), (v, u)):
                    continue
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        if v in dist:
            cand = dist[v] + 1
            if best is None or cand < best:
                best = cand
    return best


def all_simple_cycles(g: GainGraph, max_length: int | None = None) -> list[tuple[int, ...]]:
    """Every simple cycle once, as a canonical vertex tuple.

    Canonical form: smallest vertex first, and the second vertex smaller
    than the last (fixing the traversal direction).  Exponential in
    general; meant for the small graphs this package works with.
    """
    cycles = []
    n = g.n
    for s in range(n):
        stack = [(s, [s], {s})]
        while stack:
            u, path, onpath = stack.pop()
            for w in g.neighbors(u):
                if w == s and len(path) >= 3:
                    if path[1] < path[-1]:
                        c = tuple(path)
                        if max_length is None or len(c) <= max_length:
                            cycles.append(c)
                elif w > s and w not in onpath:
                    if max_length is not None and len(path) >= max_length:
                        continue
                    stack.append((w, path + [w], onpath | {w}))
    return sorted(cycles, key=lambda c: (len(c), c))


def _check_cycle(g: GainGraph, cycle) -> tuple[int, ...]:
    cyc = tuple(cycle)
    if len(cyc) < 3:
        raise NotACycleError(f"cycle needs at least 3 vertices, got {len(cyc)}")
    if len(set(cyc)) != len(cyc):
        raise NotACycleError(f"repeated vertex in {cyc}")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not (0 <= a < g.n) or not g.has_edge(a, b):
            raise NotACycleError(f"({a}, {b}) is not an edge")
    return cyc


def cycle_gain(g: GainGraph, cycle) -> Quaternion:
    """Ordered product of gains along the traversal, wrapping around."""
    cyc = _check_cycle(g, cycle)
    phi = Quaternion(1)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        phi = phi * g.gain(a, b)
    return phi


@dataclass(frozen=True)
class CycleTypeReport:
    kind: CycleType
    approximate: bool  # True when the decision used float tolerances


def cycle_type_report(g: GainGraph, cycle, *, strict_float: bool = False) -> CycleTypeReport:
    """Cycle type plus a flag marking float-tolerance decisions."""
    kind = cycle_type(g, cycle, strict_float=strict_float)
    approximate = not cycle_gain(g, cycle).is_exact
    return CycleTypeReport(kind, approximate)


def cycle_type(g: GainGraph, cycle, *, strict_float: bool = False) -> CycleType:
    """Classify a cycle per its length parity and gain product.

    Exact gains decide equalities exactly.  Float gains compare within
    FLOAT_TYPE_TOL; with ``strict_float`` a measure near the boundary
    (inside FLOAT_AMBIGUOUS_BAND) raises AmbiguousTypeError instead of
    guessing.
    """
    cyc = _check_cycle(g, cycle)
    n = len(cyc)
    phi = cycle_gain(g, cyc)
    if n % 2 == 0:
        target = Quaternion((-1) ** (n // 2))
        if phi.is_exact:
            return CycleType.TYPE1 if phi == target else CycleType.TYPE2
        dev = (phi - target).modulus()
        if strict_float and FLOAT_AMBIGUOUS_BAND[0] <= dev <= FLOAT_AMBIGUOUS_BAND[1]:
            raise AmbiguousTypeError(f"|phi - (-1)^(n/2)| = {dev:.3e} is ambiguous")
        return CycleType.TYPE1 if dev < FLOAT_TYPE_TOL else CycleType.TYPE2
    sign = (-1) ** ((n - 1) // 2)
    measure = sign * phi.x0
    if phi.is_exact:
        return CycleType.TYPE4 if measure == 0 else CycleType.TYPE3
    dev = abs(float(measure))
    if strict_float and FLOAT_AMBIGUOUS_BAND[0] <= dev <= FLOAT_AMBIGUOUS_BAND[1]:
        raise AmbiguousTypeError(f"|Re((-1)^((n-1)/2) phi)| = {dev:.3e} is ambiguous")
    return CycleType.TYPE4 if dev < FLOAT_TYPE_TOL else CycleType.TYPE3


# ---------------------------------------------------------------------------
# Switching.
# ---------------------------------------------------------------------------


def switch(g: GainGraph, xi) -> GainGraph:
    """Switch by a total vertex function: gain(u,v) -> xi(u)^-1 gain(u,v) xi(v)."""
    if callable(xi):
        table = [Quaternion.coerce(xi(v)) for v in range(g.n)]
    else:
        table = [None] * g.n
        for v, q in xi.items():
            table[v] = Quaternion.coerce(q)
        if any(q is None for q in table):
            missing = [v for v, q in enumerate(table) if q is None]
            raise ValueError(f"switching function not total; missing {missing}")
    for v, q in enumerate(table):
        if q.is_exact:
            if q.norm_sq() != 1:
                raise ValueError(f"switching value at {v} is not a unit")
        elif not q.is_unit():
            raise ValueError(f"switching value at {v} is not a unit")
    gains = {}
    for (u, v), q in g._gains.items():
        gains[(u, v)] = table[u].conj() * q * table[v]
    return GainGraph(g.n, gains, check=False)


def normalize_by_spanning_tree(g: GainGraph, root: int = 0):
    """Switch so every BFS spanning tree edge from ``root`` has gain 1.

    Returns (switched graph, switching function as a list indexed by
    vertex).  xi(v) is the gain of the tree path from v to the root; in
    the result every non-tree edge carries the gain of its fundamental
    cycle up to similarity.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("spanning tree normalization needs a connected graph")
    xi: list[Quaternion | None] = [None] * g.n
    xi[root] = Quaternion(1)
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if xi[w] is None:
                # path w -> root goes through u
                xi[w] = g.gain(w, u) * xi[u]
                queue.append(w)
    return switch(g, {v: q for v, q in enumerate(xi)}), list(xi)


# ---------------------------------------------------------------------------
# Random gains.
# ---------------------------------------------------------------------------


def with_random_gains(n: int, pairs, gain_set: str, rng: random.Random) -> GainGraph:
    """Assign seeded random gains to an underlying edge list.

    gain_set "lipschitz" draws from the eight exact units; "uniform"
    draws float gains uniformly on the unit 3-sphere.
    """
    if gain_set == "lipschitz":
        draw = random_lipschitz_unit
    elif gain_set == "uniform":
        draw = random_unit_quaternion
    else:
        raise ValueError(f"unknown gain set {gain_set!r}")
    gains = {}
    for u, v in sorted(tuple(sorted(p)) for p in pairs):
        gains[(u, v)] = draw(rng)
    return GainGraph(n, gains, check=False)


def random_switching(g: GainGraph, gain_set: str, rng: random.Random) -> dict:
    draw = random_lipschitz_unit if gain_set == "lipschitz" else random_unit_quaternion
    return {v: draw(rng) for v in range(g.n)}


# ---------------------------------------------------------------------------
# Text format (qgg v1).
#
#   #qgg v1
#   n 5
#   e 1 4 0 1 0 0        edge v1--v4, gain for orientation 1->4 is i
#
# '#' starts a comment, vertices are 1-indexed, gains are four rational
# tokens.  A bare "e u v" line (gain omitted) means gain 1 and is
# accepted on input only.
# ---------------------------------------------------------------------------


def _parse_rational(token: str, lineno: int) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"line {lineno}: bad rational token {token!r}") from exc
    return value


def parse_qgg(text: str, *, tower: str = "exact", normalize_nonunit: bool = False) -> GainGraph:
    """Parse the qgg v1 text format.

    ``tower="float"`` converts parsed gains to floats; only then may
    ``normalize_nonunit`` rescale almost-unit gains (with a warning).
    In the exact tower a non-unit gain is a validation error.
    """
    if tower not in ("exact", "float"):
        raise ValueError(f"unknown tower {tower!r}")
    if normalize_nonunit and tower != "float":
        raise ValueError("normalize_nonunit is only available in the float tower")
    n = None
    gains: dict[tuple[int, int], Quaternion] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "n":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate n line")
            if len(fields) != 2 or not fields[1].isdigit():
                raise FormatError(f"line {lineno}: expected 'n <count>'")
            n = int(fields[1])
        elif kind == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before n line")
            if len(fields) not in (3, 7):
                raise FormatError(
                    f"line {lineno}: expected 'e <u> <v> <x0> <x1> <x2> <x3>'"
                )
            try:
                u = int(fields[1])
                v = int(fields[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad vertex id") from exc
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise FormatError(f"line {lineno}: invalid edge ({u}, {v})")
            if len(fields) == 7:
                coeffs = [_parse_rational(t, lineno) for t in fields[3:7]]
            else:
                coeffs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
            q = Quaternion(*coeffs)
            if tower == "float":
                q = q.to_float()
                if not q.is_unit():
                    if normalize_nonunit:
                        warnings.warn(
                            f"line {lineno}: normalizing non-unit gain on ({u}, {v})"
                        )
                        q = q.normalized()
                    else:
                        raise FormatError(f"line {lineno}: non-unit gain on ({u}, {v})")
            elif q.norm_sq() != 1:
                raise FormatError(f"line {lineno}: non-unit gain on ({u}, {v})")
            a, b = u - 1, v - 1
            key = (a, b) if a < b else (b, a)
            if key in gains:
                raise FormatError(f"line {lineno}: duplicate edge ({u}, {v})")
            gains[key] = q if a < b else q.conj()
        else:
            raise FormatError(f"line {lineno}: unknown directive {kind!r}")
    if n is None:
        raise FormatError("missing n line")
    return GainGraph(n, gains, check=False)


def _rational_token(x) -> str:
    if isinstance(x, float):
        x = Fraction(x)  # exact binary value, round-trips bit for bit
    return str(Fraction(x))


def emit_qgg(g: GainGraph) -> str:
    """Serialize in normalized form: edges sorted, orientation min -> max."""
    lines = ["#qgg v1", f"n {g.n}"]
    for u, v, q in g.edges():
        coeffs = " ".join(_rational_token(c) for c in q.coefficients())
        lines.append(f"e {u + 1} {v + 1} {coeffs}")
    return "\n".join(lines) + "\n"


def load_qgg(path, **kwargs) -> GainGraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_qgg(fh.read(), **kwargs)


def save_qgg(g: GainGraph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(emit_qgg(g))
