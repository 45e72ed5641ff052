"""Gain graph structure, girth, cycle types, switching, text format."""

import random

import pytest

from qgg.errors import (
    AmbiguousTypeError,
    DisconnectedGraphError,
    FormatError,
    NotACycleError,
)
from qgg.graph import (
    CycleType,
    GainGraph,
    all_simple_cycles,
    brute_force_girth,
    connected_components,
    cycle_gain,
    cycle_type,
    delete_vertices,
    disjoint_union,
    emit_qgg,
    girth,
    induced_subgraph,
    is_connected,
    is_dominating_set,
    normalize_by_spanning_tree,
    parse_qgg,
    random_switching,
    switch,
    with_random_gains,
)
from qgg.quat import I, J, K, ONE, Quaternion
from qgg.qlinalg import left_row_rank_eliminate
from qgg.shapes import (
    cycle_graph,
    k32_rank2_instance,
    path_graph,
    theta111_rank4_instance,
)


def _rank(g):
    return left_row_rank_eliminate(g.adjacency_matrix()).rank


# -- construction and queries ------------------------------------------------


def test_gain_orientation_is_conjugated():
    g = GainGraph(2, [(0, 1, I)])
    assert g.gain(0, 1) == I
    assert g.gain(1, 0) == -I


def test_construction_validation():
    with pytest.raises(ValueError):
        GainGraph(2, [(0, 0, ONE)])
    with pytest.raises(ValueError):
        GainGraph(2, [(0, 1, ONE), (1, 0, ONE)])
    with pytest.raises(ValueError):
        GainGraph(2, [(0, 1, Quaternion(1, 1))])
    with pytest.raises(ValueError):
        GainGraph(2, [(0, 2, ONE)])


def test_adjacency_matrix_single_edge():
    g = GainGraph(2, [(0, 1, I)])
    a = g.adjacency_matrix()
    assert a[0, 1] == I and a[1, 0] == -I
    assert a.is_hermitian() and a.has_zero_diagonal()


def test_adjacency_matrix_empty_graph():
    a = GainGraph(3).adjacency_matrix()
    assert all(a[i, j].is_zero() for i in range(3) for j in range(3))


def test_adjacency_matrix_worked_bipartite_instance():
    a = k32_rank2_instance().adjacency_matrix()
    assert a.is_hermitian() and a.has_zero_diagonal()
    assert a[0, 3] == I and a[3, 0] == -I
    assert a[1, 3] == -K and a[2, 3] == J
    assert a[1, 4] == -K and a[2, 4] == J


def test_queries():
    g = theta111_rank4_instance()
    assert g.neighbors(0) == (1, 3)
    assert g.degree(1) == 3
    assert g.has_edge(2, 3) and not g.has_edge(0, 2)
    assert is_connected(g)
    assert connected_components(disjoint_union(g, g)) == [tuple(range(5)), tuple(range(5, 10))]


def test_induced_and_delete():
    g = theta111_rank4_instance()
    sub = induced_subgraph(g, [0, 1, 2, 3])
    assert sub.n == 4 and sub.edge_count == 4
    assert delete_vertices(g, [4]) == sub
    with pytest.raises(ValueError):
        induced_subgraph(g, [9])


def test_dominating_set():
    c4 = cycle_graph(4)
    assert not is_dominating_set(c4, [0])
    assert is_dominating_set(c4, [0, 2])
    assert is_dominating_set(c4, range(4))


# -- girth --------------------------------------------------------------------


def test_girth_examples():
    assert girth(cycle_graph(5)).length == 5
    assert girth(k32_rank2_instance()).length == 4
    assert girth(path_graph(6)) is None


def test_girth_witness_is_a_shortest_cycle():
    g = k32_rank2_instance()
    w = girth(g)
    assert len(w.cycle) == w.length == 4
    cycle_gain(g, w.cycle)  # validates the witness as an actual cycle


def test_girth_matches_brute_force_oracle_exhaustively():
    # all connected graphs on up to 6 vertices, then a random sample at 7..8
    for n in range(3, 7):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            g = GainGraph(n, edges)
            if not is_connected(g):
                continue
            w = girth(g)
            oracle = brute_force_girth(g)
            assert (w.length if w else None) == oracle
    rng = random.Random(99)
    for n in (7, 8):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for _ in range(400):
            edges = [p for p in pairs if rng.random() < 0.4]
            g = GainGraph(n, edges)
            w = girth(g)
            assert (w.length if w else None) == brute_force_girth(g)


def test_all_simple_cycles_counts():
    assert len(all_simple_cycles(cycle_graph(6))) == 1
    # complete graph on 4 vertices: 4 triangles + 3 quadrilaterals
    k4 = GainGraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    lengths = sorted(len(c) for c in all_simple_cycles(k4))
    assert lengths == [3, 3, 3, 3, 4, 4, 4]


# -- cycle gains and types ------------------------------------------------------


def test_cycle_gain_worked_instances():
    g = k32_rank2_instance()
    assert cycle_gain(g, (0, 3, 1, 4)) == ONE
    t = theta111_rank4_instance()
    assert cycle_gain(t, (0, 1, 4, 3)) == J
    assert cycle_gain(cycle_graph(5), tuple(range(5))) == ONE


def test_cycle_gain_rejects_non_cycles():
    g = cycle_graph(5)
    with pytest.raises(NotACycleError):
        cycle_gain(g, (0, 1))
    with pytest.raises(NotACycleError):
        cycle_gain(g, (0, 1, 3))
    with pytest.raises(NotACycleError):
        cycle_gain(g, (0, 1, 2, 1))


def test_cycle_types_by_definition():
    c4 = cycle_graph(4)  # all gains 1: product 1 == (-1)^2
    assert cycle_type(c4, tuple(range(4))) == CycleType.TYPE1
    t = theta111_rank4_instance()
    assert cycle_type(t, (0, 1, 4, 3)) == CycleType.TYPE2
    tri = GainGraph(3, [(0, 1, I), (1, 2, -I), (0, 2, J.conj())])
    # triangle gain i * -i * conj(conj(j)) has zero real part after the sign
    phi = cycle_gain(tri, (0, 1, 2))
    assert phi.re == 0
    assert cycle_type(tri, (0, 1, 2)) == CycleType.TYPE4


def test_cycle_type_invariances():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.choice([3, 4, 5, 6])
        g = with_random_gains(
            n, [(v, (v + 1) % n) for v in range(n)], "lipschitz", rng
        )
        cyc = tuple(range(n))
        t = cycle_type(g, cyc)
        for shift in range(1, n):
            rotated = cyc[shift:] + cyc[:shift]
            assert cycle_type(g, rotated) == t
        assert cycle_type(g, cyc[::-1]) == t
        xi = random_switching(g, "lipschitz", rng)
        assert cycle_type(switch(g, xi), cyc) == t


def test_cycle_type_report_flags_float_decisions():
    from qgg.graph import cycle_type_report

    exact = cycle_graph(4, ctype=1)
    rep = cycle_type_report(exact, (0, 1, 2, 3))
    assert rep.kind == CycleType.TYPE1 and rep.approximate is False
    rep = cycle_type_report(exact.to_float(), (0, 1, 2, 3))
    assert rep.kind == CycleType.TYPE1 and rep.approximate is True


def test_float_type_tolerance_and_ambiguity():
    c4 = cycle_graph(4).to_float()
    assert cycle_type(c4, tuple(range(4))) == CycleType.TYPE1
    eps = 5e-8  # inside the ambiguity band after normalization
    wiggle = Quaternion(1.0, eps, 0.0, 0.0).normalized()
    g = c4.with_gain(0, 1, wiggle)
    assert cycle_type(g, tuple(range(4))) == CycleType.TYPE2
    with pytest.raises(AmbiguousTypeError):
        cycle_type(g, tuple(range(4)), strict_float=True)


# -- switching -----------------------------------------------------------------


def test_identity_switching_is_identity():
    g = theta111_rank4_instance()
    assert switch(g, {v: ONE for v in range(g.n)}) == g


def test_switching_preserves_rank():
    rng = random.Random(32)
    for _ in range(8):
        n = rng.randint(3, 7)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = with_random_gains(n, pairs, "lipschitz", rng)
        r = _rank(g)
        for _ in range(10):
            assert _rank(switch(g, random_switching(g, "lipschitz", rng))) == r


def test_switching_requires_units_and_totality():
    g = cycle_graph(3)
    with pytest.raises(ValueError):
        switch(g, {0: ONE, 1: ONE})
    with pytest.raises(ValueError):
        switch(g, {0: Quaternion(2), 1: ONE, 2: ONE})


def test_spanning_tree_normalization():
    # a tree normalizes to all-ones gains
    rng = random.Random(33)
    tree = with_random_gains(6, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5)], "lipschitz", rng)
    normalized, xi = normalize_by_spanning_tree(tree, root=0)
    assert all(g == ONE for _, _, g in normalized.edges())
    assert xi[0] == ONE
    # a cyclic graph keeps its rank and its cycle types
    g = theta111_rank4_instance()
    normalized, _ = normalize_by_spanning_tree(g, root=0)
    assert _rank(normalized) == _rank(g)
    for cyc in all_simple_cycles(g):
        assert cycle_type(normalized, cyc) == cycle_type(g, cyc)
    ones = sum(1 for _, _, q in normalized.edges() if q == ONE)
    assert ones >= g.n - 1  # at least the spanning tree is flattened
    with pytest.raises(DisconnectedGraphError):
        normalize_by_spanning_tree(disjoint_union(cycle_graph(3), cycle_graph(3)))


def test_spanning_tree_normalization_concentrates_bicyclic_gains():
    # a bicyclic graph has exactly two non-tree edges, so at most two
    # gains survive normalization and they carry the fundamental cycle
    # gains up to similarity (the cycle types are unchanged)
    rng = random.Random(36)
    from qgg.shapes import TABLE1_SHAPES

    for name in ("inf(3,1,3)", "inf(3,2,3)", "theta(1,1,2)"):
        shape = TABLE1_SHAPES[name]
        g = with_random_gains(shape.n, shape.edges, "lipschitz", rng)
        normalized, _ = normalize_by_spanning_tree(g, root=0)
        non_unit = [e for e in normalized.edges() if e[2] != ONE]
        assert len(non_unit) <= 2
        for cyc in all_simple_cycles(g):
            assert cycle_type(normalized, cyc) == cycle_type(g, cyc)


# -- text format -----------------------------------------------------------------


def test_round_trip_is_exact():
    rng = random.Random(34)
    for _ in range(20):
        n = rng.randint(2, 8)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = with_random_gains(n, pairs, "lipschitz", rng)
        assert parse_qgg(emit_qgg(g)) == g


def test_parse_header_and_comments():
    text = """#qgg v1
# a comment line
n 3
e 1 2 0 1 0 0   # trailing comment
e 2 3
"""
    g = parse_qgg(text)
    assert g.n == 3 and g.edge_count == 2
    assert g.gain(0, 1) == I
    assert g.gain(1, 2) == ONE


def test_parse_reversed_orientation_conjugates():
    g = parse_qgg("n 2\ne 2 1 0 1 0 0\n")
    assert g.gain(1, 0) == I
    assert g.gain(0, 1) == -I


def test_parse_rational_tokens():
    g = parse_qgg("n 2\ne 1 2 1/2 1/2 1/2 1/2\n")
    q = g.gain(0, 1)
    assert q.norm_sq() == 1


def test_parse_errors():
    with pytest.raises(FormatError):
        parse_qgg("e 1 2 1 0 0 0\n")  # edge before n
    with pytest.raises(FormatError):
        parse_qgg("n 2\nn 2\n")
    with pytest.raises(FormatError):
        parse_qgg("n 2\ne 1 2 1 0 0 0\ne 2 1 1 0 0 0\n")  # duplicate edge
    with pytest.raises(FormatError):
        parse_qgg("n 2\ne 1 2 1 1 0 0\n")  # non-unit gain
    with pytest.raises(FormatError):
        parse_qgg("n 2\ne 1 2 0.5 0 0 0\n")  # decimals are not rational tokens
    with pytest.raises(FormatError):
        parse_qgg("n 2\ne 1 3 1 0 0 0\n")  # vertex out of range
    with pytest.raises(FormatError):
        parse_qgg("n 2\nx 1 2\n")


def test_float_tower_parse_normalization():
    text = "n 2\ne 1 2 1 1 0 0\n"
    with pytest.raises(FormatError):
        parse_qgg(text, tower="float")
    with pytest.warns(UserWarning):
        g = parse_qgg(text, tower="float", normalize_nonunit=True)
    assert abs(g.gain(0, 1).modulus() - 1.0) < 1e-12
    with pytest.raises(ValueError):
        parse_qgg(text, normalize_nonunit=True)  # needs the float tower


def test_float_gain_round_trip_is_bit_exact():
    rng = random.Random(35)
    g = with_random_gains(3, [(0, 1), (1, 2)], "uniform", rng)
    back = parse_qgg(emit_qgg(g), tower="float")
    for (u, v, q), (_, _, p) in zip(g.edges(), back.edges()):
        assert q.coefficients() == p.coefficients()
