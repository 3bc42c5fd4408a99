"""The Riordan group over exact rationals.

A pair (g, f) with g(0) = 1, f(0) = 0, f'(0) != 0 generates an infinite
lower-triangular array whose column k has generating function g*f^k.
This module provides three independent ways to compute entries (closed
form, vertical recursion, fully nested sum), the group law and inverse,
the fundamental-theorem action, A/Z-sequence extraction and
reconstruction, subgroup predicates, and the Appell/Lagrange semidirect
split.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import Triangle
from .series import Series, SeriesError


class RiordanError(SeriesError):
    """Invalid Riordan pair or out-of-range entry request."""


class RiordanPair:
    """A proper, normalized Riordan pair (g, f)."""

    __slots__ = ("g", "f")

    def __init__(self, g: Series, f: Series):
        if g.coeffs[0] != 1:
            # The Z-sequence formula assumes the g(0) = 1 normalization;
            # rescaling silently would change the array, so reject.
            raise RiordanError("g(0) must be 1")
        if f.order() != 1:
            raise RiordanError("f must have order exactly 1")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "f", f)

    def __setattr__(self, name, value):
        raise AttributeError("RiordanPair is immutable")

    @property
    def prec(self) -> int:
        return min(self.g.prec, self.f.prec)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RiordanPair):
            return NotImplemented
        return self.g == other.g and self.f == other.f

    def __hash__(self) -> int:
        return hash((self.g, self.f))

    def agrees_with(self, other: "RiordanPair") -> bool:
        return self.g.agrees_with(other.g) and self.f.agrees_with(other.f)

    def __repr__(self) -> str:
        return f"RiordanPair(g={self.g!r}, f={self.f!r})"

    @classmethod
    def identity(cls, prec: int) -> "RiordanPair":
        return cls(Series.one(prec), Series.t(prec))

    # -- entries, three independent ways --------------------------------------

    def _check_range(self, n: int, k: int) -> None:
        if not 0 <= k <= n:
            raise RiordanError(f"entry ({n},{k}) outside the triangle")
        if n > self.prec:
            raise RiordanError(f"entry row {n} beyond precision {self.prec}")

    def entry_closed(self, n: int, k: int) -> Fraction:
        """d_{n,k} = [t^n] g*f^k, by repeated multiplication."""
        self._check_range(n, k)
        col = self.g
        for _ in range(k):
            col = col * self.f
        return col[n]

    def entry_vertical(self, n: int, k: int) -> Fraction:
        """d_{n,k} from column k-1 through the coefficients of f.

        Column 0 is read directly from g; columns k >= 1 use
        d_{n,k} = sum_{j=1}^{n-k+1} f_j d_{n-j,k-1}, filled in column
        by column.
        """
        self._check_range(n, k)
        prev = list(self.g.coeffs[: n + 1])
        for col in range(1, k + 1):
            prev = [
                sum(
                    (self.f[j] * prev[m - j] for j in range(1, m - col + 2)),
                    Fraction(0),
                )
                if m >= col
                else Fraction(0)
                for m in range(n + 1)
            ]
        return prev[n]

    def entry_nested(self, n: int, k: int) -> Fraction:
        """The k-fold nested sum over f-indices, by direct recursion.

        Exponential in k; intended as a test oracle at small n only.
        """
        self._check_range(n, k)
        if k == 0:
            return self.g[n]
        return sum(
            (self.f[i] * self.entry_nested(n - i, k - 1) for i in range(1, n - k + 2)),
            Fraction(0),
        )

    def triangle(self, n: int) -> Triangle:
        """The n x n leading principal submatrix, via the vertical recursion."""
        if n < 1:
            raise RiordanError("order must be >= 1")
        if n - 1 > self.prec:
            raise RiordanError(f"order {n} needs precision {n - 1}, have {self.prec}")
        cols: list[list[Fraction]] = [list(self.g.coeffs[:n])]
        for k in range(1, n):
            prev = cols[k - 1]
            col = []
            for m in range(n):
                if m < k:
                    col.append(Fraction(0))
                else:
                    col.append(
                        sum(
                            (self.f[j] * prev[m - j] for j in range(1, m - k + 2)),
                            Fraction(0),
                        )
                    )
            cols.append(col)
        return Triangle([[cols[k][i] for k in range(i + 1)] for i in range(n)])

    def triangle_closed(self, n: int) -> Triangle:
        """Same submatrix built from the column generating functions g*f^k."""
        if n < 1:
            raise RiordanError("order must be >= 1")
        if n - 1 > self.prec:
            raise RiordanError(f"order {n} needs precision {n - 1}, have {self.prec}")
        col = self.g.truncate(n - 1)
        f = self.f.truncate(n - 1)
        cols = [col]
        for _ in range(1, n):
            col = col * f
            cols.append(col)
        return Triangle([[cols[k][i] for k in range(i + 1)] for i in range(n)])

    # -- group structure ------------------------------------------------------

    def __mul__(self, other: "RiordanPair") -> "RiordanPair":
        """(g1, f1)(g2, f2) = (g1 * g2(f1), f2(f1))."""
        return RiordanPair(
            self.g * other.g.compose(self.f), other.f.compose(self.f)
        )

    def inverse(self) -> "RiordanPair":
        """(g, f)^-1 = (1 / g(fbar), fbar)."""
        fbar = self.f.comp_inverse()
        return RiordanPair(self.g.compose(fbar).reciprocal(), fbar)

    def apply(self, h: Series) -> Series:
        """The fundamental-theorem action: (g, f) h = g * h(f)."""
        return self.g * h.compose(self.f)

    # -- A- and Z-sequences ---------------------------------------------------

    def extract_az(self) -> "AZSequences":
        """A(t) = (f/t)(fbar);  Z(t) = (g(fbar) - 1) / (fbar * g(fbar))."""
        fbar = self.f.comp_inverse()
        a = self.f.shift_down().compose(fbar.truncate(fbar.prec - 1))
        gofbar = self.g.compose(fbar)
        num = (gofbar - Series.one(gofbar.prec)).shift_down()
        den = (fbar * gofbar).shift_down()
        z = num * den.reciprocal()
        return AZSequences(a, z)

    def semidirect_split(self) -> tuple["RiordanPair", "RiordanPair"]:
        """(g, f) = (g, t)(1, f): Appell factor times Lagrange factor."""
        p = self.prec
        return (
            RiordanPair(self.g, Series.t(p)),
            RiordanPair(Series.one(p), self.f),
        )

    def subgroups(self, bell_max: int = 8) -> set[str]:
        """Labels of the named subgroups this pair sits in.

        Decided by exact series comparison at the working precision, so a
        label means "holds up to prec", not a proof for the infinite array.
        """
        labels: set[str] = set()
        p = self.prec
        t = Series.t(p)
        one = Series.one(p)
        if self.f.agrees_with(t):
            labels.add("appell")
        if self.g.agrees_with(one):
            labels.add("lagrange")
        gk = self.g
        for k in range(1, bell_max + 1):
            if self.f.agrees_with(gk.shift_up()):
                labels.add(f"{k}-bell")
            gk = gk * self.g
        fprime = self.f.derivative()
        u_inv = self.f.shift_down().reciprocal()
        if self.g.agrees_with(fprime * u_inv):
            labels.add("hitting-time")
        if self.g.agrees_with(fprime):
            labels.add("derivative")
        if all(self.g.coeffs[i] == 0 for i in range(1, p + 1, 2)) and all(
            self.f.coeffs[i] == 0 for i in range(0, p + 1, 2)
        ):
            labels.add("checkerboard")
        return labels


@dataclass(frozen=True)
class AZSequences:
    """The horizontal-recursion weights of a Riordan array."""

    a: Series
    z: Series

    def __post_init__(self):
        if self.a.coeffs[0] == 0:
            raise RiordanError("not a proper A-sequence: a_0 = 0")


def reconstruct_from_az(az: AZSequences, n: int) -> Triangle:
    """Rebuild the triangle row by row from its A- and Z-sequences.

    d_{0,0} = 1; column 0 of each new row comes from the Z-sequence and
    columns k >= 1 from the A-sequence.
    """
    if n < 1:
        raise RiordanError("order must be >= 1")
    a, z = az.a, az.z

    def a_at(j: int) -> Fraction:
        return a[j] if j <= a.prec else Fraction(0)

    def z_at(j: int) -> Fraction:
        return z[j] if j <= z.prec else Fraction(0)

    rows: list[list[Fraction]] = [[Fraction(1)]]
    for r in range(n - 1):
        prev = rows[r]
        row = [sum((z_at(j) * prev[j] for j in range(r + 1)), Fraction(0))]
        for k in range(r + 1):
            row.append(
                sum((a_at(j) * prev[k + j] for j in range(r + 1 - k)), Fraction(0))
            )
        rows.append(row)
    return Triangle(rows)


def a_sequence_by_solve(ra: RiordanPair, length: int, order: int | None = None) -> list[Fraction]:
    """The A-sequence from the linear system d_{n+1,k+1} = sum a_j d_{n,k+j}.

    Independent of the (f/t)(fbar) closed form; used as its oracle.  The
    system from rows of triangle(order) is triangular in the a_j because
    the diagonal entries are nonzero.
    """
    m = order if order is not None else length + 2
    tri = ra.triangle(m)
    a: list[Fraction] = []
    # Take equations along the top diagonal band: the equation at
    # (n+1, k+1) = (j+1, 1) with row n = j introduces a_j with the
    # nonzero pivot d_{j,j}.
    for j in range(length):
        n, k = j + 1, 1
        rhs = tri.entry(n, k)
        s = sum((a[i] * tri.entry(n - 1, k - 1 + i) for i in range(j)), Fraction(0))
        pivot = tri.entry(n - 1, k - 1 + j)
        a.append((rhs - s) / pivot)
    return a
