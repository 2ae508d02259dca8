"""Exact truncated power series over the rationals, and an exact linear solver.

All coefficients are `fractions.Fraction`; no operation in this module ever
rounds.  Series are stored in the plain convention (coefficient of q^n is
c_n); helpers give the n!-scaled view used by exponential generating
functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(x: Fraction) -> str:
    """Render as 'p/q', or 'p' when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class TruncatedSeries:
    """A power series in q known exactly up to (and including) order N.

    Immutable.  Arithmetic between two series truncates to the smaller
    order; mixing with plain rationals treats them as constants.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    def __setattr__(self, *a):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def monomial(cls, n: int, order: int, coeff=1) -> "TruncatedSeries":
        c = [Fraction(0)] * (order + 1)
        if n <= order:
            c[n] = as_rational(coeff)
        return cls(c)

    @classmethod
    def from_egf(cls, values: Sequence, order: int) -> "TruncatedSeries":
        """Build sum values[n]/n! q^n from the n!-scaled coefficient list."""
        return cls([as_rational(values[n]) / math.factorial(n) for n in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        return self.coeffs[n]

    def egf_coefficient(self, n: int) -> Fraction:
        """n! * c_n, the exponential-convention view."""
        return self.coeffs[n] * math.factorial(n)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])
        c = list(self.coeffs)
        c[0] += as_rational(other)
        return TruncatedSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncatedSeries) else -as_rational(other))

    def __rsub__(self, other):
        return (-self) + as_rational(other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            a = as_rational(other)
            return TruncatedSeries([c * a for c in self.coeffs])
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, ci in enumerate(self.coeffs[: n + 1]):
            if ci == 0:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj != 0:
                    out[i + j] += ci * cj
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def euler_d(self) -> "TruncatedSeries":
        """Apply D = q d/dq: the n-th coefficient becomes n*c_n."""
        return TruncatedSeries([n * c for n, c in enumerate(self.coeffs)])

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ValueError("series with zero constant term has no inverse")
        n = self.order
        inv = [Fraction(1) / self.coeffs[0]] + [Fraction(0)] * n
        for k in range(1, n + 1):
            s = Fraction(0)
            for i in range(1, k + 1):
                if i < len(self.coeffs) and self.coeffs[i] != 0:
                    s += self.coeffs[i] * inv[k - i]
            inv[k] = -s / self.coeffs[0]
        return TruncatedSeries(inv)

    def shift_down(self, m: int) -> "TruncatedSeries":
        """Divide by q^m; the dropped coefficients must all be zero."""
        if any(c != 0 for c in self.coeffs[:m]):
            raise ValueError(f"series is not divisible by q^{m}")
        if m > self.order:
            raise ValueError("shift exceeds known order")
        return TruncatedSeries(self.coeffs[m:])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __repr__(self):
        shown = ", ".join(format_rational(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """Exact exp of a series with zero constant term.

    A nonzero constant term would force a transcendental factor, so it is
    rejected.  Uses the first-order recursion n e_n = sum k a_k e_{n-k}.
    """
    if a.coeffs[0] != 0:
        raise ValueError("series_exp requires a zero constant term")
    n = a.order
    e = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        s = Fraction(0)
        for k in range(1, m + 1):
            if a.coeffs[k] != 0:
                s += k * a.coeffs[k] * e[m - k]
        e[m] = s / m
    return TruncatedSeries(e)


@dataclass(frozen=True)
class LinearSystem:
    """Exact rows x cols rational system; rows >= cols is the normal case."""

    matrix: tuple
    rhs: tuple

    def __init__(self, matrix: Sequence[Sequence], rhs: Sequence):
        rows = tuple(tuple(as_rational(x) for x in row) for row in matrix)
        b = tuple(as_rational(x) for x in rhs)
        if len(rows) != len(b):
            raise ValueError("matrix and rhs row counts differ")
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "rhs", b)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of solve_exact.

    status is one of 'unique', 'inconsistent', 'underdetermined';
    solution is present only for 'unique'.
    """

    status: str
    solution: tuple | None = None

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"

    @property
    def ok(self) -> bool:
        return self.status == "unique"


def solve_exact(system: LinearSystem) -> LinearSolution:
    """Gauss-Jordan elimination over Fraction.

    Pivots on the entry of largest |numerator| in the column, which keeps
    intermediate fractions from ballooning; exactness is unaffected by the
    choice.  Over-determined consistent systems return the unique solution;
    contradictory rows give 'inconsistent'; a consistent system with free
    columns gives 'underdetermined'.
    """
    rows = [list(r) + [v] for r, v in zip(system.matrix, system.rhs)]
    n_rows = len(rows)
    n_cols = len(system.matrix[0]) if n_rows else 0
    piv_rows: list[tuple[int, int]] = []  # (row index, pivot column)
    piv = 0
    for col in range(n_cols):
        best = None
        for i in range(piv, n_rows):
            v = rows[i][col]
            if v != 0 and (best is None or abs(v.numerator) > abs(rows[best][col].numerator)):
                best = i
        if best is None:
            continue
        rows[piv], rows[best] = rows[best], rows[piv]
        pv = rows[piv][col]
        for i in range(n_rows):
            if i != piv and rows[i][col] != 0:
                f = rows[i][col] / pv
                for j in range(col, n_cols + 1):
                    rows[i][j] -= f * rows[piv][j]
        piv_rows.append((piv, col))
        piv += 1
        if piv == n_rows:
            break
    for i in range(piv, n_rows):
        if rows[i][n_cols] != 0:
            return LinearSolution("inconsistent")
    if len(piv_rows) < n_cols:
        return LinearSolution("underdetermined")
    sol = [Fraction(0)] * n_cols
    for i, col in piv_rows:
        sol[col] = rows[i][n_cols] / rows[i][col]
    return LinearSolution("unique", tuple(sol))
