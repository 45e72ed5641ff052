#!/usr/bin/env python3
"""Gain graphs: girth, cycle gains, the four types, switching.

Run:  python3 demos/02_gain_graphs_and_cycle_types.py
"""

import random

from qgg import (
    CycleType,
    cycle_gain,
    cycle_type,
    emit_qgg,
    girth,
    normalize_by_spanning_tree,
    switch,
)
from qgg.graph import random_switching
from qgg.shapes import (
    cycle_graph,
    k32_rank2_instance,
    theta111_rank4_instance,
    type_target_gain,
)
from qgg.theorems import graph_rank

print("=" * 64)
print("A complete bipartite instance whose quadrilaterals all close to 1")
print("=" * 64)
g = k32_rank2_instance()
print(emit_qgg(g))
w = girth(g)
print(f"girth {w.length}, witness cycle {[v + 1 for v in w.cycle]}")
for quad in ((0, 3, 1, 4), (0, 3, 2, 4), (1, 3, 2, 4)):
    phi = cycle_gain(g, quad)
    print(f"  gain around {[v + 1 for v in quad]}: {phi}  type {cycle_type(g, quad).name}")
print(f"rank {graph_rank(g)} meets the girth-minus-2 floor")

print()
print("=" * 64)
print("theta(1,1,1) with one type-1 and one type-2 quadrilateral")
print("=" * 64)
t = theta111_rank4_instance()
for quad in ((0, 1, 2, 3), (0, 1, 4, 3)):
    print(
        f"  gain around {[v + 1 for v in quad]}: {cycle_gain(t, quad)}"
        f"  type {cycle_type(t, quad).name}"
    )
print(f"rank {graph_rank(t)} = girth {girth(t).length}")

print()
print("=" * 64)
print("Prescribing a cycle type by a single designated gain")
print("=" * 64)
for n in (4, 5):
    for ct in (1, 2) if n % 2 == 0 else (3, 4):
        c = cycle_graph(n, ctype=ct)
        print(
            f"  C_{n} aiming for type {ct}: target gain {type_target_gain(n, ct)},"
            f" got {cycle_type(c, tuple(range(n))).name}, rank {graph_rank(c)}"
        )

print()
print("=" * 64)
print("Switching changes gains but neither types nor rank")
print("=" * 64)
rng = random.Random(1)
xi = random_switching(t, "lipschitz", rng)
switched = switch(t, xi)
print(f"  rank before {graph_rank(t)}, after {graph_rank(switched)}")
print(
    "  quadrilateral type before",
    cycle_type(t, (0, 1, 2, 3)).name,
    "after",
    cycle_type(switched, (0, 1, 2, 3)).name,
)

normalized, xi = normalize_by_spanning_tree(t, root=0)
flat = sum(1 for _, _, q in normalized.edges() if q == 1)
print(f"  spanning-tree normalization leaves {flat} unit gains out of {t.edge_count}")
