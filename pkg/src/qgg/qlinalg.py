"""Dense quaternion matrices and their left row rank.

Rank here always means the maximum number of rows that are linearly
independent under LEFT scalar coefficients.  Two independent routes are
provided:

* ``left_row_rank_eliminate`` does forward elimination where every row
  operation is a left multiplication (scale a row by a nonzero scalar,
  or add a left multiple of one row to another).  Left multiplications
  preserve the left row span over the quaternions, so the number of
  surviving nonzero rows is the left row rank.

* ``rank_via_adjoint`` embeds the matrix as a complex matrix of doubled
  size via A = A1 + A2*j |-> [[A1, A2], [-conj(A2), conj(A1)]] and halves
  the complex rank.  The complex rank of an adjoint is always even; an
  odd value signals a tolerance failure and raises.

In the exact tower both routes run fraction-free over the integers
(rows are scaled by positive rationals, which are central and harmless).
The float tower uses relative thresholds: |entry| > tol * (max row norm)
inside the elimination, and singular values > tol * sigma_max in the
adjoint route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import AdjointParityError, OracleDisagreement
from .quat import Quaternion

__all__ = [
    "QMatrix",
    "RankReport",
    "ComplexRational",
    "left_row_rank_eliminate",
    "complex_adjoint",
    "rank_via_adjoint",
    "rank",
    "rank_both",
    "block_diag",
]

DEFAULT_TOL = 1e-9

# Row entries are re-normalized once their integers pass this size, to keep
# fraction-free growth in check on larger matrices.
_GCD_TRIM_BITS = 512


@dataclass(frozen=True)
class RankReport:
    rank: int
    method: str  # "elimination" | "adjoint" | "both"
    tolerance: float | None = None


class ComplexRational:
    """Exact complex number with Fraction real and imaginary parts.

    Only what the adjoint oracle needs: ring operations, conjugation,
    and comparisons against Python numbers for test convenience.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    def __add__(self, other):
        other = _as_complex_rational(other)
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = _as_complex_rational(other)
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_complex_rational(other)
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self):
        return ComplexRational(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return float(self.re) == other.real and float(self.im) == other.imag
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexRational({self.re}, {self.im})"


def _as_complex_rational(value) -> ComplexRational:
    if isinstance(value, ComplexRational):
        return value
    if isinstance(value, (int, Fraction)):
        return ComplexRational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact complex number")


class QMatrix:
    """Immutable dense quaternion matrix, row major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        grid = tuple(tuple(Quaternion.coerce(e) for e in row) for row in entries)
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if any(len(r) != cols for r in grid):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        z = Quaternion(0)
        return cls([[z] * cols for _ in range(rows)])

    def __getitem__(self, idx) -> Quaternion:
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"QMatrix({self.rows}x{self.cols}: {body})"

    @property
    def is_exact(self) -> bool:
        return all(e.is_exact for row in self.entries for e in row)

    def to_float(self) -> "QMatrix":
        return QMatrix([[e.to_float() for e in row] for row in self.entries])

    def conjugate_transpose(self) -> "QMatrix":
        return QMatrix(
            [[self.entries[i][j].conj() for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_hermitian(self) -> bool:
        """entries[i][j] == conj(entries[j][i]); forces a real diagonal."""
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(i, self.rows):
                if self.entries[i][j] != self.entries[j][i].conj():
                    return False
        return True

    def has_zero_diagonal(self) -> bool:
        return all(self.entries[i][i].is_zero() for i in range(min(self.rows, self.cols)))

    def submatrix(self, keep_rows, keep_cols) -> "QMatrix":
        keep_rows = list(keep_rows)
        keep_cols = list(keep_cols)
        return QMatrix([[self.entries[i][j] for j in keep_cols] for i in keep_rows])

    def delete_row_col(self, index: int) -> "QMatrix":
        keep = [i for i in range(self.rows) if i != index]
        return self.submatrix(keep, keep)


def block_diag(a: QMatrix, b: QMatrix) -> QMatrix:
    z = Quaternion(0)
    out = []
    for i in range(a.rows):
        out.append(list(a.entries[i]) + [z] * b.cols)
    for i in range(b.rows):
        out.append([z] * a.cols + list(b.entries[i]))
    if not out:
        return QMatrix.zeros(0, 0)
    return QMatrix(out)


# ---------------------------------------------------------------------------
# Exact fraction-free elimination cores.  Rows are flat int lists; quaternion
# entries occupy 4 slots, complex entries 2 slots.  The update
#     row_i <- |p|^2 * row_i - (b * conj(p)) * row_p
# zeroes entry b against pivot p while keeping all coefficients integral:
# |p|^2 is a positive central scalar and b*conj(p) a left multiplier, so the
# left row span is untouched.
# ---------------------------------------------------------------------------


def _trim_row(row):
    big = max(abs(v) for v in row)
    if big.bit_length() > _GCD_TRIM_BITS:
        g = 0
        for v in row:
            g = gcd(g, v)
            if g == 1:
                return
        if g > 1:
            for idx in range(len(row)):
                row[idx] //= g


def quaternion_int_rank(rows, ncols: int) -> int:
    """Left row rank of integer quaternion rows (flat lists, 4 ints/entry).

    Mutates ``rows``.  Pivots by maximum |entry|^2.
    """
    nrows = len(rows)
    rank = 0
    for col in range(ncols):
        c = 4 * col
        best = -1
        best_ns = 0
        for r in range(rank, nrows):
            row = rows[r]
            a0 = row[c]
            a1 = row[c + 1]
            a2 = row[c + 2]
            a3 = row[c + 3]
            if a0 or a1 or a2 or a3:
                ns = a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3
                if ns > best_ns:
                    best_ns = ns
                    best = r
        if best < 0:
            continue
        if best != rank:
            rows[rank], rows[best] = rows[best], rows[rank]
        prow = rows[rank]
        p0 = prow[c]
        p1 = prow[c + 1]
        p2 = prow[c + 2]
        p3 = prow[c + 3]
        s = best_ns
        width = 4 * ncols
        for r in range(rank + 1, nrows):
            row = rows[r]
            b0 = row[c]
            b1 = row[c + 1]
            b2 = row[c + 2]
            b3 = row[c + 3]
            if not (b0 or b1 or b2 or b3):
                continue
            m0 = b0 * p0 + b1 * p1 + b2 * p2 + b3 * p3
            m1 = -b0 * p1 + b1 * p0 - b2 * p3 + b3 * p2
            m2 = -b0 * p2 + b1 * p3 + b2 * p0 - b3 * p1
            m3 = -b0 * p3 - b1 * p2 + b2 * p1 + b3 * p0
            for jj in range(c, width, 4):
                q0 = prow[jj]
                q1 = prow[jj + 1]
                q2 = prow[jj + 2]
                q3 = prow[jj + 3]
                row[jj] = s * row[jj] - (m0 * q0 - m1 * q1 - m2 * q2 - m3 * q3)
                row[jj + 1] = s * row[jj + 1] - (m0 * q1 + m1 * q0 + m2 * q3 - m3 * q2)
                row[jj + 2] = s * row[jj + 2] - (m0 * q2 - m1 * q3 + m2 * q0 + m3 * q1)
                row[jj + 3] = s * row[jj + 3] - (m0 * q3 + m1 * q2 - m2 * q1 + m3 * q0)
            _trim_row(row)
        rank += 1
    return rank


def _complex_int_rank(rows, ncols: int) -> int:
    """Rank of integer Gaussian rows (flat lists, 2 ints/entry).  Mutates."""
    nrows = len(rows)
    rank = 0
    for col in range(ncols):
        c = 2 * col
        best = -1
        best_ns = 0
        for r in range(rank, nrows):
            row = rows[r]
            a0 = row[c]
            a1 = row[c + 1]
            if a0 or a1:
                ns = a0 * a0 + a1 * a1
                if ns > best_ns:
                    best_ns = ns
                    best = r
        if best < 0:
            continue
        if best != rank:
            rows[rank], rows[best] = rows[best], rows[rank]
        prow = rows[rank]
        p0 = prow[c]
        p1 = prow[c + 1]
        s = best_ns
        width = 2 * ncols
        for r in range(rank + 1, nrows):
            row = rows[r]
            b0 = row[c]
            b1 = row[c + 1]
            if not (b0 or b1):
                continue
            # m = b * conj(p)
            m0 = b0 * p0 + b1 * p1
            m1 = b1 * p0 - b0 * p1
            for jj in range(c, width, 2):
                q0 = prow[jj]
                q1 = prow[jj + 1]
                row[jj] = s * row[jj] - (m0 * q0 - m1 * q1)
                row[jj + 1] = s * row[jj + 1] - (m0 * q1 + m1 * q0)
            _trim_row(row)
        rank += 1
    return rank


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _int_rows_from_qmatrix(a: QMatrix):
    """Scale each row by the lcm of its denominators; return flat int rows."""
    rows = []
    for row in a.entries:
        denom = 1
        for e in row:
            for x in e.coefficients():
                if isinstance(x, Fraction):
                    denom = _lcm(denom, x.denominator)
        flat = []
        for e in row:
            for x in e.coefficients():
                flat.append(int(x * denom))
        rows.append(flat)
    return rows


# ---------------------------------------------------------------------------
# Float elimination.
# ---------------------------------------------------------------------------


def _float_rank(a: QMatrix, tol: float) -> int:
    nrows, ncols = a.rows, a.cols
    rows = []
    scale_sq = 0.0
    for row in a.entries:
        flat = []
        rs = 0.0
        for e in row:
            for x in e.coefficients():
                fx = float(x)
                flat.append(fx)
                rs += fx * fx
        scale_sq = max(scale_sq, rs)
        rows.append(flat)
    if scale_sq == 0.0:
        return 0
    thresh = tol * tol * scale_sq  # zero test: |entry|^2 > tol^2 * (max row norm)^2
    rank = 0
    for col in range(ncols):
        c = 4 * col
        best = -1
        best_ns = thresh
        for r in range(rank, nrows):
            row = rows[r]
            ns = row[c] ** 2 + row[c + 1] ** 2 + row[c + 2] ** 2 + row[c + 3] ** 2
            if ns > best_ns:
                best_ns = ns
                best = r
        if best < 0:
            continue
        if best != rank:
            rows[rank], rows[best] = rows[best], rows[rank]
        prow = rows[rank]
        p0, p1, p2, p3 = prow[c], prow[c + 1], prow[c + 2], prow[c + 3]
        s = p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3
        width = 4 * ncols
        for r in range(rank + 1, nrows):
            row = rows[r]
            b0, b1, b2, b3 = row[c], row[c + 1], row[c + 2], row[c + 3]
            if b0 * b0 + b1 * b1 + b2 * b2 + b3 * b3 <= thresh:
                continue
            # m = (b * conj(p)) / |p|^2, so the update is row -= m * prow
            m0 = (b0 * p0 + b1 * p1 + b2 * p2 + b3 * p3) / s
            m1 = (-b0 * p1 + b1 * p0 - b2 * p3 + b3 * p2) / s
            m2 = (-b0 * p2 + b1 * p3 + b2 * p0 - b3 * p1) / s
            m3 = (-b0 * p3 - b1 * p2 + b2 * p1 + b3 * p0) / s
            for jj in range(c, width, 4):
                q0, q1, q2, q3 = prow[jj], prow[jj + 1], prow[jj + 2], prow[jj + 3]
                row[jj] -= m0 * q0 - m1 * q1 - m2 * q2 - m3 * q3
                row[jj + 1] -= m0 * q1 + m1 * q0 + m2 * q3 - m3 * q2
                row[jj + 2] -= m0 * q2 - m1 * q3 + m2 * q0 + m3 * q1
                row[jj + 3] -= m0 * q3 + m1 * q2 - m2 * q1 + m3 * q0
            row[c] = row[c + 1] = row[c + 2] = row[c + 3] = 0.0
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


def left_row_rank_eliminate(a: QMatrix, tol: float = DEFAULT_TOL) -> RankReport:
    """Left row rank via left-multiplication forward elimination."""
    if a.rows == 0 or a.cols == 0:
        return RankReport(0, "elimination", None if a.is_exact else tol)
    if a.is_exact:
        rows = _int_rows_from_qmatrix(a)
        return RankReport(quaternion_int_rank(rows, a.cols), "elimination", None)
    return RankReport(_float_rank(a, tol), "elimination", tol)


def complex_adjoint(a: QMatrix):
    """The 2m x 2n complex matrix [[A1, A2], [-conj(A2), conj(A1)]].

    A = A1 + A2*j with A1 = x0 + x1*i and A2 = x2 + x3*i entrywise.
    Exact input yields nested lists of ComplexRational; float input a
    numpy complex128 array.
    """
    m, n = a.rows, a.cols
    if a.is_exact:
        top = []
        bottom = []
        for row in a.entries:
            t1 = []
            t2 = []
            b1 = []
            b2 = []
            for e in row:
                t1.append(ComplexRational(e.x0, e.x1))
                t2.append(ComplexRational(e.x2, e.x3))
                b1.append(ComplexRational(-e.x2, e.x3))
                b2.append(ComplexRational(e.x0, -e.x1))
            top.append(t1 + t2)
            bottom.append(b1 + b2)
        return top + bottom
    out = np.zeros((2 * m, 2 * n), dtype=np.complex128)
    for i, row in enumerate(a.entries):
        for j, e in enumerate(row):
            a1 = complex(float(e.x0), float(e.x1))
            a2 = complex(float(e.x2), float(e.x3))
            out[i, j] = a1
            out[i, n + j] = a2
            out[m + i, j] = -a2.conjugate()
            out[m + i, n + j] = a1.conjugate()
    return out


def rank_via_adjoint(a: QMatrix, tol: float = DEFAULT_TOL) -> RankReport:
    """Quaternion rank as half the complex rank of the adjoint."""
    if a.rows == 0 or a.cols == 0:
        return RankReport(0, "adjoint", None if a.is_exact else tol)
    adj = complex_adjoint(a)
    if a.is_exact:
        rows = []
        for row in adj:
            denom = 1
            for z in row:
                denom = _lcm(denom, z.re.denominator)
                denom = _lcm(denom, z.im.denominator)
            flat = []
            for z in row:
                flat.append(int(z.re * denom))
                flat.append(int(z.im * denom))
            rows.append(flat)
        crank = _complex_int_rank(rows, 2 * a.cols)
        tolerance = None
    else:
        sing = np.linalg.svd(adj, compute_uv=False)
        top = float(sing[0]) if len(sing) else 0.0
        crank = 0 if top == 0.0 else int(np.sum(sing > tol * top))
        tolerance = tol
    if crank % 2 != 0:
        raise AdjointParityError(
            f"complex adjoint rank {crank} is odd; tolerance failure"
        )
    return RankReport(crank // 2, "adjoint", tolerance)


def rank(a: QMatrix, method: str = "elimination", tol: float = DEFAULT_TOL) -> RankReport:
    if method == "elimination":
        return left_row_rank_eliminate(a, tol)
    if method == "adjoint":
        return rank_via_adjoint(a, tol)
    if method == "both":
        elim, adj, agree = rank_both(a, tol)
        if not agree:
            raise OracleDisagreement(
                f"rank methods disagree: elimination={elim.rank} adjoint={adj.rank}"
            )
        return RankReport(elim.rank, "both", elim.tolerance)
    raise ValueError(f"unknown rank method {method!r}")


def rank_both(a: QMatrix, tol: float = DEFAULT_TOL):
    """Run both routes; return (elimination report, adjoint report, agree)."""
    elim = left_row_rank_eliminate(a, tol)
    adj = rank_via_adjoint(a, tol)
    return elim, adj, elim.rank == adj.rank
