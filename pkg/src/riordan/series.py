"""Truncated formal power series over the exact rationals.

A series carries a coefficient tuple indexed 0..prec together with the
precision bound prec.  Every coefficient up to prec is trusted; nothing
above prec exists.  Binary operations return the minimum precision of
their operands, and asking for an index above prec is a hard error, so a
"verified identity" can never be an artifact of silent zero-extension.

Coefficients are ``fractions.Fraction`` throughout; there is no floating
point anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction, str]


class SeriesError(Exception):
    """Base class for series-domain errors."""


class NotAUnitError(SeriesError):
    """Reciprocal requested of a series with zero constant term."""


class CompositionError(SeriesError):
    """Composition h(f) requested with f(0) != 0."""


class NoCompositionalInverseError(SeriesError):
    """Compositional inverse requested of a series whose order is not 1."""


class PrecisionError(SeriesError):
    """An operation would need a coefficient beyond the trusted precision."""


def _rat(x: Rat) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Series:
    """An immutable truncated power series: coefficients 0..prec."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rat]):
        object.__setattr__(self, "coeffs", tuple(_rat(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Rat], prec: int) -> "Series":
        """Series from an explicit coefficient list, zero-padded to prec.

        The literal is read as a polynomial, so the padding zeros are
        trusted coefficients, not guesses.
        """
        cs = [_rat(c) for c in coeffs]
        if len(cs) > prec + 1:
            raise PrecisionError(
                f"{len(cs)} coefficients given but precision is {prec}"
            )
        cs.extend([Fraction(0)] * (prec + 1 - len(cs)))
        return cls(cs)

    @classmethod
    def zero(cls, prec: int) -> "Series":
        return cls.from_coeffs([], prec)

    @classmethod
    def one(cls, prec: int) -> "Series":
        return cls.from_coeffs([1], prec)

    @classmethod
    def t(cls, prec: int) -> "Series":
        return cls.from_coeffs([0, 1], prec)

    @classmethod
    def geometric(cls, prec: int, ratio: Rat = 1) -> "Series":
        """1/(1 - ratio*t) = sum_n ratio^n t^n."""
        r = _rat(ratio)
        return cls([r ** n for n in range(prec + 1)])

    # -- basic accessors ------------------------------------------------------

    @property
    def prec(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.prec:
            raise PrecisionError(f"coefficient {n} beyond precision {self.prec}")
        return self.coeffs[n]

    def order(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series.

        None is a distinct marker: a series that is zero up to its precision
        has no order, rather than the misleading value prec + 1.
        """
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def is_zero(self) -> bool:
        return self.order() is None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def agrees_with(self, other: "Series") -> bool:
        """Exact coefficient equality up to the shared precision."""
        p = min(self.prec, other.prec)
        return self.coeffs[: p + 1] == other.coeffs[: p + 1]

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.prec > 7 else ""
        return f"Series([{shown}{tail}]; prec={self.prec})"

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        p = min(self.prec, other.prec)
        return Series(
            [self.coeffs[n] + other.coeffs[n] for n in range(p + 1)]
        )

    def __sub__(self, other: "Series") -> "Series":
        p = min(self.prec, other.prec)
        return Series(
            [self.coeffs[n] - other.coeffs[n] for n in range(p + 1)]
        )

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs])

    def __mul__(self, other: "Series") -> "Series":
        p = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(p + 1):
            out.append(sum((a[j] * b[n - j] for j in range(n + 1)), Fraction(0)))
        return Series(out)

    def scale(self, c: Rat) -> "Series":
        c = _rat(c)
        return Series([c * x for x in self.coeffs])

    def truncate(self, r: int) -> "Series":
        """The r-th truncation: coefficients 0..r, precision r."""
        if not 0 <= r <= self.prec:
            raise PrecisionError(
                f"truncation at {r} outside available precision {self.prec}"
            )
        return Series(self.coeffs[: r + 1])

    def shift_down(self) -> "Series":
        """Divide by t.  Requires a zero constant term; precision drops by 1."""
        if self.coeffs[0] != 0:
            raise SeriesError("cannot divide by t: nonzero constant term")
        if self.prec == 0:
            raise PrecisionError("cannot shift down a precision-0 series")
        return Series(self.coeffs[1:])

    def shift_up(self) -> "Series":
        """Multiply by t; every known coefficient stays known, so prec + 1."""
        return Series((Fraction(0),) + self.coeffs)

    def derivative(self) -> "Series":
        if self.prec == 0:
            raise PrecisionError("cannot differentiate a precision-0 series")
        return Series([n * self.coeffs[n] for n in range(1, self.prec + 1)])

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; requires order 0."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise NotAUnitError("not a unit: constant term is zero")
        inv0 = 1 / a0
        out = [inv0]
        for n in range(1, self.prec + 1):
            s = sum(
                (self.coeffs[j] * out[n - j] for j in range(1, n + 1)),
                Fraction(0),
            )
            out.append(-inv0 * s)
        return Series(out)

    def compose(self, f: "Series") -> "Series":
        """self(f(t)) by Horner evaluation; requires f(0) = 0."""
        if f.coeffs[0] != 0:
            raise CompositionError("composition undefined: f(0) != 0")
        p = min(self.prec, f.prec)
        ft = f if f.prec == p else f.truncate(p)
        acc = Series.from_coeffs([self.coeffs[p]], p)
        for n in range(p - 1, -1, -1):
            acc = acc * ft
            acc = Series((self.coeffs[n] + acc.coeffs[0],) + acc.coeffs[1:])
        return acc

    def comp_inverse(self) -> "Series":
        """Compositional inverse fbar with fbar(f) = f(fbar) = t.

        Solved one coefficient at a time from fbar(f(t)) = t: with the
        powers f^j precomputed, comparing the t^n coefficient gives a
        triangular system because f^j has order j.
        """
        if self.order() != 1:
            raise NoCompositionalInverseError(
                "no compositional inverse: order is not 1"
            )
        p = self.prec
        powers = [None, self]  # powers[j] = f^j, order j
        for j in range(2, p + 1):
            powers.append(powers[-1] * self)
        out = [Fraction(0)] * (p + 1)
        f1 = self.coeffs[1]
        for n in range(1, p + 1):
            s = sum(
                (out[j] * powers[j].coeffs[n] for j in range(1, n)),
                Fraction(0),
            )
            target = Fraction(1) if n == 1 else Fraction(0)
            out[n] = (target - s) / f1 ** n
        return Series(out)
