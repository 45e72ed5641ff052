"""Closed-form rank laws, verified against computed ranks on instances."""

import random
from fractions import Fraction

import pytest

from qgg.errors import (
    AcyclicGraphError,
    Falsification,
    ParityMismatchError,
    PendantTwinsError,
    WrongFamilyError,
)
from qgg.graph import CycleType, GainGraph, cycle_type, girth, with_random_gains
from qgg.quat import I, J, K, ONE, Quaternion
from qgg.reduce import reduced_graph
from qgg.shapes import (
    TABLE1_SHAPES,
    TABLE2_SHAPES,
    attach_cycle,
    braced_octagon_all_type1,
    canonical_unicyclic_graph,
    cycle_graph,
    diamond_reduced_triangle_instance,
    k32_rank2_instance,
    path_graph,
    star_bridge_graph,
    theta111_rank4_instance,
    theta133_all_type1,
    theta333_all_type1,
    type_target_gain,
    with_cycle_gain,
)
from qgg.theorems import (
    bicyclic_lower_bound,
    canonical_unicyclic_rank,
    classify,
    classify_rank2,
    classify_rank_eq_girth_family,
    cycle_attachment_rank,
    cycle_rank,
    graph_rank,
    k4_rank_check,
    kab_rank2_iff,
    path_rank,
    table1_predict,
    table2_predict,
    verify_girth_bound,
)


# -- scalar formulas -------------------------------------------------------------


def test_path_rank_parity():
    assert path_rank(1) == 0
    assert path_rank(3) == 2
    assert path_rank(6) == 6
    assert [path_rank(n) for n in range(1, 8)] == [0, 2, 2, 4, 4, 6, 6]
    with pytest.raises(ValueError):
        path_rank(0)


def test_cycle_rank_by_type():
    assert cycle_rank(4, CycleType.TYPE1) == 2
    assert cycle_rank(3, CycleType.TYPE4) == 2
    assert cycle_rank(5, CycleType.TYPE3) == 5
    assert cycle_rank(6, CycleType.TYPE2) == 6
    with pytest.raises(ParityMismatchError):
        cycle_rank(4, CycleType.TYPE3)
    with pytest.raises(ParityMismatchError):
        cycle_rank(5, CycleType.TYPE1)


def test_cycle_attachment_formula_values():
    assert cycle_attachment_rank(4, CycleType.TYPE1, r_g1=2) == 4
    assert cycle_attachment_rank(4, CycleType.TYPE2, r_g2=0) == 4
    assert cycle_attachment_rank(5, CycleType.TYPE4, r_g1=2) == 6
    assert cycle_attachment_rank(5, CycleType.TYPE3, r_g1=2, r_g2=0) == (4, 7)
    with pytest.raises(ParityMismatchError):
        cycle_attachment_rank(4, CycleType.TYPE4, r_g1=1)
    with pytest.raises(ValueError):
        cycle_attachment_rank(4, CycleType.TYPE1)


def test_cycle_attachment_on_built_instances():
    # attach each admissible cycle type to an end vertex of a 3-path
    rng = random.Random(50)
    base = with_random_gains(3, [(0, 1), (1, 2)], "lipschitz", rng)
    r_g1 = graph_rank(base)  # 2
    r_g2 = 2  # the 2-path left after removing the attachment vertex
    for n in range(3, 8):
        for ct in (1, 2) if n % 2 == 0 else (3, 4):
            g = attach_cycle(base, 0, n, ct)
            computed = graph_rank(g)
            predicted = cycle_attachment_rank(n, CycleType(ct), r_g1=r_g1, r_g2=r_g2)
            if ct == 3:
                lo, hi = predicted
                assert lo <= computed <= hi, (n, ct, computed, predicted)
            else:
                assert computed == predicted, (n, ct, computed, predicted)


def test_type3_attachment_always_lands_in_the_interval():
    rng = random.Random(51)
    for _ in range(15):
        m = rng.randint(1, 5)
        pairs = [(i, j) for i in range(m) for j in range(i + 1, m) if rng.random() < 0.6]
        base = with_random_gains(m, pairs, "lipschitz", rng)
        u = rng.randrange(m)
        r_g1 = graph_rank(base)
        r_g2 = graph_rank(
            GainGraph(
                m,
                {e: base.gain(*e) for e in base.edge_pairs() if u not in e},
                check=False,
            )
        )
        n = rng.choice([3, 5, 7])
        g = attach_cycle(base, u, n, 3)
        lo, hi = cycle_attachment_rank(n, CycleType.TYPE3, r_g1=r_g1, r_g2=r_g2)
        assert lo <= graph_rank(g) <= hi


# -- complete bipartite rank-2 law -------------------------------------------------


def test_kab_rank2_iff_on_worked_instance():
    assert kab_rank2_iff(k32_rank2_instance()) is True


def test_kab_rank2_iff_all_ones():
    g = GainGraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert kab_rank2_iff(g) is True
    assert graph_rank(g) == 2


def test_kab_rank2_iff_detects_type2_quad():
    g = GainGraph(4, [(0, 2, I), (0, 3), (1, 2), (1, 3)])
    assert kab_rank2_iff(g) is False
    assert graph_rank(g) == 4


def test_kab_rank2_iff_wrong_family():
    with pytest.raises(WrongFamilyError):
        kab_rank2_iff(path_graph(3))  # parts are 1 and 2
    with pytest.raises(WrongFamilyError):
        kab_rank2_iff(cycle_graph(5))


# -- girth bound -------------------------------------------------------------------


def test_girth_bound_on_type1_quadrilateral():
    rep = verify_girth_bound(cycle_graph(4, ctype=1))
    assert rep.relation == "rank = g-2"
    assert rep.matched_case == "g-2:type1-cycle"


def test_girth_bound_on_worked_bipartite():
    rep = verify_girth_bound(k32_rank2_instance())
    assert rep.girth == 4 and rep.rank == 2
    assert rep.matched_case == "g-2:complete-bipartite-all-quads-type1"


def test_girth_bound_all_ones_hexagon():
    # product 1 differs from (-1)**3, so the hexagon has type 2 and full
    # rank 6, which here coincides with the girth
    g = cycle_graph(6)
    assert cycle_type(g, tuple(range(6))) == CycleType.TYPE2
    rep = verify_girth_bound(g)
    assert rep.rank == 6 and rep.relation == "rank = g"
    assert rep.matched_case == "unclassified"
    assert classify(g).matched_case == "g:cycle-type2or3"


def test_girth_bound_requires_a_cycle():
    with pytest.raises(AcyclicGraphError):
        verify_girth_bound(path_graph(4))


def test_girth_bound_random_sweep():
    rng = random.Random(52)
    done = 0
    while done < 60:
        n = rng.randint(3, 7)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = with_random_gains(n, pairs, "lipschitz", rng)
        from qgg.graph import is_connected

        if not is_connected(g) or girth(g) is None:
            continue
        rep = verify_girth_bound(g)  # raises Falsification on any law breach
        assert rep.rank >= rep.girth - 2
        done += 1


# -- rank 2 classification ----------------------------------------------------------


def test_rank2_cases():
    assert classify_rank2(path_graph(3)) == "complete-bipartite"
    assert classify_rank2(diamond_reduced_triangle_instance()) == "reduced-triangle-type4"
    assert classify_rank2(cycle_graph(3, ctype=3)) is None
    assert classify_rank2(k32_rank2_instance()) == "complete-bipartite"


# -- bicyclic tables (spot checks; the survey suite sweeps all rows) ------------------


def test_table1_rejects_wrong_family():
    with pytest.raises(WrongFamilyError):
        table1_predict(cycle_graph(5))
    shape = TABLE1_SHAPES["theta(1,1,1)"]
    with_pendant = GainGraph(shape.n + 1, list(shape.edges) + [(0, shape.n)])
    with pytest.raises(WrongFamilyError):
        table1_predict(with_pendant)


def test_table1_worked_theta_instance():
    assert table1_predict(theta111_rank4_instance()) == 4


def test_table1_out_of_table_parameters():
    g = GainGraph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 3)])
    assert table1_predict(g) == ">4"


def test_table2_preconditions():
    with pytest.raises(WrongFamilyError):
        table2_predict(theta111_rank4_instance())  # no pendants
    shape = TABLE2_SHAPES["k23+leaf@hub"]
    twins = GainGraph(shape.n + 1, list(shape.edges) + [(0, shape.n)])
    with pytest.raises(PendantTwinsError):
        table2_predict(twins)


def test_table2_tail_at_rim_is_a_catalog_shape():
    shape = TABLE1_SHAPES["theta(1,1,1)"]
    g = GainGraph(7, list(shape.edges) + [(0, 5), (5, 6)])
    assert table2_predict(g) == 4  # all-ones quadrilaterals all have type 1
    assert graph_rank(g) == 4


def test_table2_unmatched_shape_predicts_not_four():
    # a three-vertex tail is longer than anything in the catalog
    shape = TABLE1_SHAPES["theta(1,1,1)"]
    g = GainGraph(8, list(shape.edges) + [(0, 5), (5, 6), (6, 7)])
    assert table2_predict(g) == "!=4"
    assert graph_rank(g) == 6


# -- bicyclic lower bounds -----------------------------------------------------------


def _infinity_graph(p, l, q):
    """Two cycles of lengths p and q joined by a path on l vertices."""
    edges = [(i, (i + 1) % p) for i in range(p)]
    if l == 1:
        u = 0
        nxt = p
    else:
        path = [0] + list(range(p, p + l - 2)) + [p + l - 2]
        edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
        u = p + l - 2
        nxt = p + l - 1
    ring2 = [u] + list(range(nxt, nxt + q - 1))
    edges += [(ring2[i], ring2[(i + 1) % q]) for i in range(q)]
    return GainGraph(nxt + q - 1, sorted(set(tuple(sorted(e)) for e in edges)))


def _theta_graph(p, l, q):
    edges = []
    u, w = 0, 1
    nxt = 2
    for count in (p, l, q):
        if count == 0:
            edges.append((u, w))
            continue
        chain = [u] + list(range(nxt, nxt + count)) + [w]
        nxt += count
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return GainGraph(nxt, edges)


def test_bicyclic_lower_bounds():
    rng = random.Random(53)

    def with_pendant(g):
        gains = {e: g.gain(*e) for e in g.edge_pairs()}
        gains[(1, g.n)] = ONE
        return GainGraph(g.n + 1, gains)

    cases = [
        (_infinity_graph(3, 1, 3), 6),  # both cycle lengths odd
        (_infinity_graph(4, 1, 4), 6),  # both even
        (_infinity_graph(3, 2, 4), 6),  # mixed
        (_theta_graph(2, 2, 2), 8),  # least interior count even
        (_theta_graph(1, 2, 2), 6),  # least interior count odd
        (_theta_graph(0, 1, 2), 4),  # l+q odd
        (_theta_graph(0, 2, 2), 6),  # l+q even
    ]
    for base, want in cases:
        g = with_pendant(base)
        assert bicyclic_lower_bound(g) == want
        assert graph_rank(g) >= want
    with pytest.raises(WrongFamilyError):
        bicyclic_lower_bound(_theta_graph(1, 1, 1))  # no pendant vertex


def test_bicyclic_lower_bound_random_gains():
    rng = random.Random(54)
    for plq in ((3, 1, 3), (3, 2, 3), (4, 1, 5)):
        base = _infinity_graph(*plq)
        pairs = list(base.edge_pairs()) + [(0, base.n), (2, base.n + 1)]
        for _ in range(5):
            g = with_random_gains(base.n + 2, pairs, "lipschitz", rng)
            bicyclic_lower_bound(g)  # raises Falsification if breached


# -- canonical unicyclic ---------------------------------------------------------------


def test_canonical_unicyclic_rank_values():
    # two stars two steps apart on a hexagon: both arcs odd, rank 6
    assert canonical_unicyclic_rank(canonical_unicyclic_graph(6, {0: 1, 2: 1})) == 6
    # a pentagon with one star leaves an even arc, rank 6
    assert canonical_unicyclic_rank(canonical_unicyclic_graph(5, {0: 2})) == 6
    # a quadrilateral with one star leaves one odd arc, rank 4
    assert canonical_unicyclic_rank(canonical_unicyclic_graph(4, {0: 1})) == 4
    # antipodal stars on a hexagon leave two even arcs, rank 8
    assert canonical_unicyclic_rank(canonical_unicyclic_graph(6, {0: 1, 3: 1})) == 8
    with pytest.raises(WrongFamilyError):
        canonical_unicyclic_rank(cycle_graph(6))


def test_canonical_unicyclic_rank_is_gain_independent():
    rng = random.Random(55)
    for _ in range(10):
        g = canonical_unicyclic_graph(6, {0: 2, 3: 1}, rng=rng)
        assert canonical_unicyclic_rank(g) == 8


# -- k4 ----------------------------------------------------------------------------


def test_k4_always_full_rank():
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    assert k4_rank_check(GainGraph(4, pairs)) is True
    rng = random.Random(56)
    for _ in range(50):
        assert k4_rank_check(with_random_gains(4, pairs, "lipschitz", rng)) is True
    with pytest.raises(WrongFamilyError):
        k4_rank_check(cycle_graph(4))


# -- rank = girth families -------------------------------------------------------------


def test_rank_eq_girth_family_cases():
    assert (
        classify_rank_eq_girth_family(diamond_reduced_triangle_instance())
        == "g-1:reduced-triangle-type4"
    )
    assert classify_rank_eq_girth_family(cycle_graph(5, ctype=3)) == "g:cycle-type2or3"
    assert classify_rank_eq_girth_family(cycle_graph(5, ctype=4)) == "g-1:type4-cycle"
    assert classify_rank_eq_girth_family(cycle_graph(3, ctype=3)) == "g:type3-triangle"
    assert (
        classify_rank_eq_girth_family(theta333_all_type1()) == "g:theta333-all-type1"
    )
    assert (
        classify_rank_eq_girth_family(theta133_all_type1()) == "g:theta133-all-type1"
    )
    assert (
        classify_rank_eq_girth_family(braced_octagon_all_type1())
        == "g:braced-octagon-all-type1"
    )
    # hexagon with stars two apart: canonical unicyclic, rank 6 = girth
    g = canonical_unicyclic_graph(6, {0: 1, 2: 1})
    assert classify_rank_eq_girth_family(g) == "g:canonical-unicyclic-even-arcs"
    # type-1 hexagon bridged to a star: rank 6 = girth
    g = star_bridge_graph(6, 3, ctype=1)
    assert classify_rank_eq_girth_family(g) == "g:cycle-type1-star-bridge"


def test_rank_eq_girth_family_girth4_sufficient_cases():
    assert classify_rank_eq_girth_family(cycle_graph(4, ctype=2)) == "g:quad-type2"
    g = canonical_unicyclic_graph(4, {0: 2, 2: 1})
    assert classify_rank_eq_girth_family(g) == "g:quad-with-stars"
    g = star_bridge_graph(4, 2, ctype=1)
    assert classify_rank_eq_girth_family(g) == "g:quad-type1-star-bridge"
    # the worked theta(1,1,1) instance has rank 4 = girth but matches no
    # sufficient case: the open side of the girth-4 characterization
    assert classify_rank_eq_girth_family(theta111_rank4_instance()) is None


def test_nontype1_special_thetas_change_rank():
    g = theta133_all_type1()
    g = g.with_gain(0, 1, I)  # perturb one gain: some cycle leaves type 1
    assert graph_rank(g) != 6
    assert classify_rank_eq_girth_family(g) is None


# -- full classify ----------------------------------------------------------------------


def test_classify_float_tower_instances():
    # clean float gains classify just like their exact counterparts
    g = k32_rank2_instance().to_float()
    rep = classify(g)
    assert rep.rank == 2 and rep.matched_case == "g-2:complete-bipartite-all-quads-type1"
    c = cycle_graph(5, ctype=4).to_float()
    assert classify(c).matched_case == "g-1:type4-cycle"


def test_rank_equal_subgraph_forces_domination():
    # whenever the whole graph has the same rank as its induced shortest
    # cycle, the cycle's vertices must dominate the graph
    from qgg.graph import induced_subgraph, is_connected, is_dominating_set

    rng = random.Random(57)
    hits = 0
    trials = 0
    while trials < 300 and hits < 12:
        n = rng.randint(4, 7)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45]
        g = with_random_gains(n, pairs, "lipschitz", rng)
        trials += 1
        if not is_connected(g):
            continue
        w = girth(g)
        if w is None:
            continue
        sub = induced_subgraph(g, w.cycle)
        if graph_rank(sub) == graph_rank(g):
            assert is_dominating_set(g, w.cycle)
            hits += 1
    assert hits >= 5  # the sweep actually exercised the property


def test_classify_worked_instances():
    rep = classify(diamond_reduced_triangle_instance())
    assert (rep.girth, rep.rank, rep.relation) == (3, 2, "rank = g-1")
    assert rep.matched_case == "g-1:reduced-triangle-type4"

    rep = classify(k32_rank2_instance())
    assert (rep.girth, rep.rank, rep.relation) == (4, 2, "rank = g-2")
    assert rep.matched_case == "g-2:complete-bipartite-all-quads-type1"

    rep = classify(cycle_graph(4, ctype=1))
    assert rep.matched_case == "g-2:type1-cycle"

    rep = classify(theta111_rank4_instance())
    assert (rep.girth, rep.rank, rep.relation) == (4, 4, "rank = g")
    assert rep.sufficient_only

    rep = classify(path_graph(3))
    assert rep.relation == "acyclic" and rep.matched_case == "rank2:complete-bipartite"

    rep = classify(path_graph(4))
    assert rep.relation == "acyclic" and rep.matched_case == "unclassified"
