"""Quaternion scalars in two towers: exact rational and floating point.

A quaternion is x0 + x1*i + x2*j + x3*k with the usual multiplication
rules i**2 = j**2 = k**2 = -1, i*j = k = -j*i, j*k = i = -k*j,
k*i = j = -i*k.  Coefficients are either all exact (int / Fraction) or
all float; the two towers share one class and one code path.  Exact
coefficients are the default everywhere a decision depends on equality
(cycle types, rank over the rationals); floats exist for sampled
uniform unit gains and are always guarded by explicit tolerances.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

__all__ = [
    "Quaternion",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "LIPSCHITZ_UNITS",
    "mul",
    "conj",
    "re",
    "norm_sq",
    "inverse",
    "random_lipschitz_unit",
    "random_unit_quaternion",
]

_EXACT_TYPES = (int, Fraction)


class Quaternion:
    """Immutable quaternion with coefficients x0, x1, x2, x3 of 1, i, j, k."""

    __slots__ = ("x0", "x1", "x2", "x3")

    def __init__(self, x0=0, x1=0, x2=0, x3=0):
        object.__setattr__(self, "x0", x0)
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)
        object.__setattr__(self, "x3", x3)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    # -- conversions ---------------------------------------------------

    @classmethod
    def coerce(cls, value) -> "Quaternion":
        """Accept a Quaternion or a real scalar (int, Fraction, float)."""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (int, Fraction, float)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a quaternion")

    @property
    def is_exact(self) -> bool:
        return (
            isinstance(self.x0, _EXACT_TYPES)
            and isinstance(self.x1, _EXACT_TYPES)
            and isinstance(self.x2, _EXACT_TYPES)
            and isinstance(self.x3, _EXACT_TYPES)
        )

    def to_float(self) -> "Quaternion":
        return Quaternion(float(self.x0), float(self.x1), float(self.x2), float(self.x3))

    def coefficients(self):
        return (self.x0, self.x1, self.x2, self.x3)

    # -- algebra -------------------------------------------------------

    def __add__(self, other):
        other = Quaternion.coerce(other)
        return Quaternion(
            self.x0 + other.x0, self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = Quaternion.coerce(other)
        return Quaternion(
            self.x0 - other.x0, self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3
        )

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        """Hamilton product.  Noncommutative: keep operand order."""
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, Fraction, float)):
                return Quaternion(
                    self.x0 * other, self.x1 * other, self.x2 * other, self.x3 * other
                )
            return NotImplemented
        a0, a1, a2, a3 = self.x0, self.x1, self.x2, self.x3
        b0, b1, b2, b3 = other.x0, other.x1, other.x2, other.x3
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, other):
        # Real scalars are central, so scalar * q == q * scalar.
        if isinstance(other, (int, Fraction, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        """Division by a real scalar only; use inverse() for quaternions."""
        if isinstance(other, (int, Fraction, float)):
            if isinstance(other, int):
                other = Fraction(other)
            return Quaternion(
                self.x0 / other, self.x1 / other, self.x2 / other, self.x3 / other
            )
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    @property
    def re(self):
        return self.x0

    def norm_sq(self):
        """q * conj(q) as a scalar: x0**2 + x1**2 + x2**2 + x3**2."""
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def modulus(self) -> float:
        return math.sqrt(float(self.norm_sq()))

    def inverse(self) -> "Quaternion":
        ns = self.norm_sq()
        if ns == 0:
            raise ZeroDivisionError("the zero quaternion has no inverse")
        if isinstance(ns, int):
            ns = Fraction(ns)
        return Quaternion(self.x0 / ns, -self.x1 / ns, -self.x2 / ns, -self.x3 / ns)

    def normalized(self) -> "Quaternion":
        m = self.modulus()
        if m == 0.0:
            raise ZeroDivisionError("cannot normalize the zero quaternion")
        return Quaternion(
            float(self.x0) / m, float(self.x1) / m, float(self.x2) / m, float(self.x3) / m
        )

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.x0 == 0 and self.x1 == 0 and self.x2 == 0 and self.x3 == 0

    def is_unit(self, tol: float = 1e-12) -> bool:
        """Unit modulus: exact test in the exact tower, |1 - |q|| < tol in float."""
        if self.is_exact:
            return self.norm_sq() == 1
        return abs(1.0 - self.modulus()) < tol

    def approx_eq(self, other: "Quaternion", tol: float = 1e-9) -> bool:
        d = self - other
        return float(d.norm_sq()) <= tol * tol

    # -- object protocol -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, float)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return (
            self.x0 == other.x0
            and self.x1 == other.x1
            and self.x2 == other.x2
            and self.x3 == other.x3
        )

    def __hash__(self):
        return hash((self.x0, self.x1, self.x2, self.x3))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Quaternion({self.x0!r}, {self.x1!r}, {self.x2!r}, {self.x3!r})"

    def __str__(self):
        parts = []
        for coeff, sym in zip(self.coefficients(), ("", "i", "j", "k")):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else ("+" if parts else "")
            mag = -coeff if coeff < 0 else coeff
            if sym and mag == 1:
                parts.append(f"{sign}{sym}")
            else:
                parts.append(f"{sign}{mag}{sym}")
        return "".join(parts) if parts else "0"


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)

# The eight Lipschitz units cover every gain drawn in small worked instances.
LIPSCHITZ_UNITS = (ONE, -ONE, I, -I, J, -J, K, -K)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    return a * b


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def re(q: Quaternion):
    return q.x0


def norm_sq(q: Quaternion):
    return q.norm_sq()


def inverse(q: Quaternion) -> Quaternion:
    return q.inverse()


def random_lipschitz_unit(rng: random.Random) -> Quaternion:
    return LIPSCHITZ_UNITS[rng.randrange(8)]


def random_unit_quaternion(rng: random.Random) -> Quaternion:
    """Uniform unit quaternion (float tower): four normals, normalized.

    The standard normal 4-vector is rotation invariant, so the normalized
    sample is uniform on the unit 3-sphere.
    """
    while True:
        v = (rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        n = math.sqrt(sum(c * c for c in v))
        if n > 1e-8:
            return Quaternion(v[0] / n, v[1] / n, v[2] / n, v[3] / n)
