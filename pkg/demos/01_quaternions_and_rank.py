#!/usr/bin/env python3
"""Quaternion scalars and the two rank routes.

Run:  python3 demos/01_quaternions_and_rank.py
"""

import random
from fractions import Fraction

from qgg import (
    I,
    J,
    K,
    ONE,
    QMatrix,
    Quaternion,
    complex_adjoint,
    left_row_rank_eliminate,
    rank_via_adjoint,
)
from qgg.quat import LIPSCHITZ_UNITS, random_unit_quaternion

print("=" * 64)
print("Quaternion arithmetic")
print("=" * 64)

print(f"i*j = {I * J},  j*i = {J * I}   (noncommutative)")
print(f"j*k = {J * K},  k*i = {K * I}")

q = Quaternion(1, 1, 1, 1)
print(f"q = {q}:  conj {q.conj()},  |q|^2 = {q.norm_sq()},  q^-1 = {q.inverse()}")
assert q * q.inverse() == ONE

half = Fraction(1, 2)
h = Quaternion(half, half, half, half)
print(f"h = {h} is a unit: |h|^2 = {h.norm_sq()}")

print()
print("=" * 64)
print("Left row rank: elimination vs the complex adjoint")
print("=" * 64)

# The second row is a LEFT multiple of the first.  Over the quaternions
# that is what rank deficiency means here; a right multiple would not be.
a = QMatrix([[I, J], [K * I, K * J]])
print("matrix rows: (i, j) and k*(i, j)")
print("  elimination rank:", left_row_rank_eliminate(a).rank)
print("  adjoint rank:    ", rank_via_adjoint(a).rank)

print()
print("adjoint of the 1x1 matrix [j]:")
for row in complex_adjoint(QMatrix([[J]])):
    print("  ", [complex(z) for z in row])

print()
rng = random.Random(0)
agree = 0
for _ in range(50):
    m, n = rng.randint(1, 8), rng.randint(1, 8)
    mat = QMatrix(
        [
            [LIPSCHITZ_UNITS[rng.randrange(8)] if rng.random() < 0.6 else Quaternion(0) for _ in range(n)]
            for _ in range(m)
        ]
    )
    if left_row_rank_eliminate(mat).rank == rank_via_adjoint(mat).rank:
        agree += 1
print(f"both routes agree on {agree}/50 random exact matrices")

print()
print("float tower: uniform unit entries, tolerance 1e-9")
mat = QMatrix([[random_unit_quaternion(rng) for _ in range(5)] for _ in range(5)])
print("  elimination:", left_row_rank_eliminate(mat, 1e-9).rank)
print("  adjoint:    ", rank_via_adjoint(mat, 1e-9).rank)
