"""(c)- and (C)-weighted Riordan classes.

A weight sequence c (c_0 = 1, all c_k nonzero) rescales a Riordan array's
entries to (c_n/c_k) d_{n,k}; a weight triangle C rescales them to
(c_{n,n}/c_{n,k}) d_{n,k}.  The (c)-weighted arrays again form a group
under matrix multiplication; the (C)-class does not, so the group law
here rejects C-weighted inputs.  The horizontal recursions reuse the base
array's A/Z-sequences and the vertical recursions reuse the coefficients
of f, in both cases with weight-ratio corrections, which is what turns
the linear Riordan recursions into nonlinear recursions like those of the
rook and Laguerre triangles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .catalog import falling
from .group import RiordanPair
from .matrices import Triangle
from .series import Rat


class WeightError(ValueError):
    """Invalid weight table or mismatched weights."""


class WeightSeq:
    """A weight sequence (c_0, c_1, ...) with c_0 = 1 and no zero entry."""

    __slots__ = ("c",)

    def __init__(self, values: Sequence[Rat]):
        c = tuple(Fraction(v) for v in values)
        if not c or c[0] != 1:
            raise WeightError("weight sequence must start with c_0 = 1")
        if any(v == 0 for v in c):
            raise WeightError("weight sequence entries must be nonzero")
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("WeightSeq is immutable")

    def __len__(self) -> int:
        return len(self.c)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n < len(self.c):
            raise WeightError(f"weight index {n} beyond table of {len(self.c)}")
        return self.c[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightSeq):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def reciprocal(self) -> "WeightSeq":
        return WeightSeq([1 / v for v in self.c])

    @classmethod
    def factorial(cls, n: int) -> "WeightSeq":
        return cls([math.factorial(i) for i in range(n + 1)])

    @classmethod
    def power(cls, base: Rat, n: int) -> "WeightSeq":
        b = Fraction(base)
        if b == 0:
            raise WeightError("power weight base must be nonzero")
        return cls([b ** i for i in range(n + 1)])


class WeightTri:
    """A lower-triangular weight table with c_{n,0} = 1, c_{n,k} != 0."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Rat]]):
        built = []
        for i, row in enumerate(rows):
            r = tuple(Fraction(v) for v in row)
            if len(r) != i + 1:
                raise WeightError(f"weight row {i} must have {i + 1} entries")
            if r[0] != 1:
                raise WeightError(f"weight row {i} must start with 1")
            if any(v == 0 for v in r):
                raise WeightError(f"weight row {i} has a zero entry")
            built.append(r)
        if not built:
            raise WeightError("empty weight triangle")
        object.__setattr__(self, "rows", tuple(built))

    def __setattr__(self, name, value):
        raise AttributeError("WeightTri is immutable")

    def __len__(self) -> int:
        return len(self.rows)

    def at(self, n: int, k: int) -> Fraction:
        if not 0 <= k <= n < len(self.rows):
            raise WeightError(f"weight index ({n},{k}) out of range")
        return self.rows[n][k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightTri):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    @classmethod
    def from_seq(cls, c: WeightSeq) -> "WeightTri":
        return cls([[c[k] for k in range(n + 1)] for n in range(len(c))])

    @classmethod
    def laguerre(cls, n: int) -> "WeightTri":
        """c_{n,k} = (-1)^k / (n)_k, the weight behind the Laguerre triangle."""
        return cls(
            [
                [Fraction((-1) ** k, falling(i, k)) for k in range(i + 1)]
                for i in range(n + 1)
            ]
        )


Weight = Union[WeightSeq, WeightTri]


@dataclass(frozen=True)
class WeightedTriangle:
    """A finite weighted Riordan triangle with its provenance."""

    base: RiordanPair
    weight: Weight
    entries: Triangle

    @property
    def kind(self) -> str:
        return "c" if isinstance(self.weight, WeightSeq) else "C"

    @property
    def n(self) -> int:
        return self.entries.n


def c_transform(ra: RiordanPair, c: WeightSeq, n: int) -> WeightedTriangle:
    """Entries (c_n / c_k) d_{n,k} from the first n rows of (g, f)."""
    if len(c) < n:
        raise WeightError(f"weight sequence too short: {len(c)} < {n}")
    tri = ra.triangle(n)
    rows = [
        [c[i] / c[j] * tri.rows[i][j] for j in range(i + 1)] for i in range(n)
    ]
    return WeightedTriangle(ra, c, Triangle(rows))


def C_transform(ra: RiordanPair, C: WeightTri, n: int) -> WeightedTriangle:
    """Entries (c_{n,n} / c_{n,k}) d_{n,k}."""
    if len(C) < n:
        raise WeightError(f"weight triangle too short: {len(C)} < {n}")
    tri = ra.triangle(n)
    rows = [
        [C.at(i, i) / C.at(i, j) * tri.rows[i][j] for j in range(i + 1)]
        for i in range(n)
    ]
    return WeightedTriangle(ra, C, Triangle(rows))


def c_group_mul(x: WeightedTriangle, y: WeightedTriangle) -> WeightedTriangle:
    """Matrix product in the (c)-group; (C)-weighted inputs are rejected."""
    if x.kind != "c" or y.kind != "c":
        raise WeightError("the (C)-class is not closed under multiplication")
    if x.weight != y.weight:
        raise WeightError("mismatched weight sequences")
    if x.n != y.n:
        raise WeightError("mismatched orders")
    return WeightedTriangle(x.base * y.base, x.weight, x.entries @ y.entries)


# -- horizontal recursions (A/Z with weight ratios) ---------------------------

@lru_cache(maxsize=64)
def _az_of(base: RiordanPair):
    # pairs are immutable and hashable; the recursions call this per entry
    az = base.extract_az()
    a, z = az.a, az.z

    def a_at(j: int) -> Fraction:
        return a[j] if j <= a.prec else Fraction(0)

    def z_at(j: int) -> Fraction:
        return z[j] if j <= z.prec else Fraction(0)

    return a_at, z_at


def horiz_recursion_c(x: WeightedTriangle, n: int, k: int) -> Fraction:
    """Entry (n, k) of a (c)-weighted triangle from row n-1.

    Column 0 uses the Z-sequence, columns k >= 1 the A-sequence, each
    weighted by the appropriate c-ratios.  The A/Z sequences are always
    recomputed from the base pair, never supplied by the caller.
    """
    if x.kind != "c":
        raise WeightError("expected a (c)-weighted triangle")
    if n < 1 or not 0 <= k <= n:
        raise WeightError(f"entry ({n},{k}) not defined by the recursion")
    c: WeightSeq = x.weight
    a_at, z_at = _az_of(x.base)
    prev = x.entries.rows[n - 1]
    if k == 0:
        s = sum((z_at(j) * c[j] * prev[j] for j in range(n)), Fraction(0))
        return c[n] / c[n - 1] * s
    s = sum(
        (a_at(j) * c[k - 1 + j] * prev[k - 1 + j] for j in range(n - k + 1)),
        Fraction(0),
    )
    return c[n] / (c[n - 1] * c[k]) * s


def horiz_recursion_C(x: WeightedTriangle, n: int, k: int) -> Fraction:
    """Entry (n, k) of a (C)-weighted triangle from row n-1."""
    if x.kind != "C":
        raise WeightError("expected a (C)-weighted triangle")
    if n < 1 or not 0 <= k <= n:
        raise WeightError(f"entry ({n},{k}) not defined by the recursion")
    C: WeightTri = x.weight
    a_at, z_at = _az_of(x.base)
    prev = x.entries.rows[n - 1]
    ratio = C.at(n, n) / C.at(n - 1, n - 1)
    if k == 0:
        s = sum((z_at(j) * C.at(n - 1, j) * prev[j] for j in range(n)), Fraction(0))
        return ratio * s
    s = sum(
        (
            a_at(j) * C.at(n - 1, k - 1 + j) * prev[k - 1 + j]
            for j in range(n - k + 1)
        ),
        Fraction(0),
    )
    return ratio / C.at(n, k) * s


# -- vertical recursions (f-coefficients with weight ratios) ------------------

def vert_recursion_c(x: WeightedTriangle, n: int, k: int) -> Fraction:
    """Entry (n, k), k >= 1, of a (c)-weighted triangle from column k-1."""
    if x.kind != "c":
        raise WeightError("expected a (c)-weighted triangle")
    if not 1 <= k <= n:
        raise WeightError(f"vertical recursion needs 1 <= k <= n, got ({n},{k})")
    c: WeightSeq = x.weight
    f = x.base.f
    s = sum(
        (
            f[j] * c[k - 1] / c[n - j] * x.entries.rows[n - j][k - 1]
            for j in range(1, n - k + 2)
        ),
        Fraction(0),
    )
    return c[n] / c[k] * s


def vert_recursion_C(x: WeightedTriangle, n: int, k: int) -> Fraction:
    """Entry (n, k), k >= 1, of a (C)-weighted triangle from column k-1."""
    if x.kind != "C":
        raise WeightError("expected a (C)-weighted triangle")
    if not 1 <= k <= n:
        raise WeightError(f"vertical recursion needs 1 <= k <= n, got ({n},{k})")
    C: WeightTri = x.weight
    f = x.base.f
    s = sum(
        (
            f[j]
            * C.at(n - j, k - 1)
            / C.at(n - j, n - j)
            * x.entries.rows[n - j][k - 1]
            for j in range(1, n - k + 2)
        ),
        Fraction(0),
    )
    return C.at(n, n) / C.at(n, k) * s


# -- generalized rook and Laguerre triangles ----------------------------------

def generalized_rook(ra: RiordanPair, n: int) -> WeightedTriangle:
    """The factorial-weighted triangle (n!/k!) d_{n,k}."""
    return c_transform(ra, WeightSeq.factorial(n), n)


def generalized_laguerre(ra: RiordanPair, n: int) -> WeightedTriangle:
    """The triangle ((-1)^{n-k} / (n-k)!) d_{n,k}."""
    return C_transform(ra, WeightTri.laguerre(n), n)


def rook_laguerre_duality(ra: RiordanPair, n: int) -> bool:
    """Does rhat_{m,m-k} = (-1)^{m-k} m! lhat_{m,k} hold for all m <= n?

    Also checks the equivalent polynomial identity
    rhat_m(x) = m! x^m lhat_m(-1/x) at x in {1, 2, -1/2}.  Both sides
    reduce to weight ratios times d_{m,m-k} and d_{m,k}, so the identity
    holds exactly when the base triangle has row-symmetric entries (the
    classical Pascal case); for asymmetric bases it genuinely fails.
    """
    rook = generalized_rook(ra, n + 1).entries
    lag = generalized_laguerre(ra, n + 1).entries
    for m in range(n + 1):
        for k in range(m + 1):
            lhs = rook.rows[m][m - k]
            rhs = (-1) ** (m - k) * math.factorial(m) * lag.rows[m][k]
            if lhs != rhs:
                return False
    for x in (Fraction(1), Fraction(2), Fraction(-1, 2)):
        for m in range(n + 1):
            lhs = sum(
                (rook.rows[m][k] * x ** (m - k) for k in range(m + 1)), Fraction(0)
            )
            rhs = (
                math.factorial(m)
                * x ** m
                * sum(
                    (lag.rows[m][k] * (-1 / x) ** (m - k) for k in range(m + 1)),
                    Fraction(0),
                )
            )
            if lhs != rhs:
                return False
    return True
