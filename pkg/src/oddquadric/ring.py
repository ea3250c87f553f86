"""Exact model of the basis ring of an odd-dimensional quadric at unit quantum parameter.

The cohomology of the (2n-1)-dimensional quadric has one basis class t_p per
degree p in [0, 2n-1]; t_0 is the unit and t_{2n-1} the point class.  Setting
the quantum parameter to 1 folds the quantum corrections into the classical
products, and the whole ring is then presented by the rule for multiplying by
the degree-one class t_1:

    t_1 * t_0      = t_1
    t_1 * t_p      = t_{p+1}            (1 <= p <= n-2  and  n <= p <= 2n-3)
    t_1 * t_{n-1}  = 2 t_n              (doubling across the middle degree)
    t_1 * t_{2n-2} = t_{2n-1} + t_0     (quantum wrap of the top product)
    t_1 * t_{2n-1} = t_1                (point class wraps to degree one)

Multiplication by any other basis class is a power of the t_1 operator, halved
above the middle degree; see :func:`build_ap`.  All matrices are exact, with
entries in the half-integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from operator import mul

from .poly import as_fraction

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class QuadricContext:
    """Family parameter n plus the derived constants of the (2n-1)-dimensional quadric."""

    n: int

    @property
    def dim(self) -> int:
        """Complex dimension of the quadric, 2n-1."""
        return 2 * self.n - 1

    @property
    def basis_size(self) -> int:
        """Number of basis classes, 2n."""
        return 2 * self.n

    @property
    def q_degree(self) -> int:
        """Degree of the quantum parameter, 2n-1."""
        return 2 * self.n - 1

    def d(self, p: int) -> int:
        """gcd(p, 2n-1); controls eigenvalue multiplicities."""
        return gcd(p, 2 * self.n - 1)


def make_context(n: int) -> QuadricContext:
    """Validated context for the quadric family member with parameter n.

    n = 1 is rejected: the case ranges of the degree-one product rule collapse
    and overlap there, so the presentation above is only meaningful for n >= 2.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"n must be an integer, got {n!r}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return QuadricContext(n)


def check_index(ctx: QuadricContext, p: int) -> None:
    """Reject basis indices outside [0, 2n-1]."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"basis index must be an integer, got {p!r}")
    if not 0 <= p <= ctx.dim:
        raise ValueError(f"basis index {p} outside [0, {ctx.dim}]")


def schubert_dim(ctx: QuadricContext, p: int) -> int:
    """Dimension of the degree-p basis cycle: 2n-1-p (bookkeeping only)."""
    check_index(ctx, p)
    return ctx.dim - p


class Matrix:
    """Immutable square matrix over exact rationals.

    Products clear entries to a common integer denominator first, so the bulk
    of the arithmetic runs on machine ints; results are exact.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(as_fraction(v) for v in row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"Matrix[{body}]"

    def int_form(self) -> tuple[int, list[list[int]]]:
        """Common denominator s and the integer matrix s*self."""
        s = 1
        for row in self.rows:
            for v in row:
                den = v.denominator
                s = s * den // gcd(s, den)
        ints = [[v.numerator * (s // v.denominator) for v in row] for row in self.rows]
        return s, ints

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix) or other.size != self.size:
            return NotImplemented
        return Matrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix) or other.size != self.size:
            return NotImplemented
        return Matrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.size != self.size:
            raise ValueError("size mismatch")
        sa, a = self.int_form()
        sb, b = other.int_form()
        s = sa * sb
        bcols = list(zip(*b))
        return Matrix(
            [[Fraction(sum(map(mul, row, col)), s) for col in bcols] for row in a]
        )

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Matrix.identity(self.size)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix([[c * v for v in row] for row in self.rows])

    def apply(self, vec) -> Vector:
        """Matrix-vector product, exact."""
        if len(vec) != self.size:
            raise ValueError("vector length mismatch")
        return tuple(sum(map(mul, row, vec), Fraction(0)) for row in self.rows)

    def col(self, i: int) -> Vector:
        return tuple(row[i] for row in self.rows)

    def trace(self) -> Fraction:
        return sum((row[i] for i, row in enumerate(self.rows)), Fraction(0))

    def denominators(self) -> set[int]:
        return {v.denominator for row in self.rows for v in row}


class Operator(Matrix):
    """Multiplication-by-t_p matrix, tagged with its context and degree.

    Column i holds the coefficients of t_p * t_i.  Every entry is a half
    integer; that is asserted at construction.
    """

    __slots__ = ("ctx", "p")

    def __init__(self, ctx: QuadricContext, p: int, rows):
        super().__init__(rows)
        self.ctx = ctx
        self.p = p
        assert self.denominators() <= {1, 2}, "operator entries must be half-integers"


def basis_vector(ctx: QuadricContext, p: int) -> Vector:
    """Coordinate vector of the basis class t_p."""
    check_index(ctx, p)
    return tuple(Fraction(1) if i == p else Fraction(0) for i in range(ctx.basis_size))


def chevalley_column(ctx: QuadricContext, p: int) -> Vector:
    """Coefficients of t_1 * t_p at unit quantum parameter.

    The product raises degree by one, doubles when crossing the middle
    (p = n-1), and wraps at the top: t_{2n-2} maps to t_{2n-1} + t_0 and the
    point class maps back to t_1.
    """
    check_index(ctx, p)
    n = ctx.n
    coeffs = [Fraction(0)] * ctx.basis_size
    if p == ctx.dim:
        coeffs[1] = Fraction(1)
    elif p == ctx.dim - 1:
        coeffs[ctx.dim] = Fraction(1)
        coeffs[0] = Fraction(1)
    elif p == n - 1:
        coeffs[n] = Fraction(2)
    else:
        coeffs[p + 1] = Fraction(1)
    return tuple(coeffs)


@lru_cache(maxsize=None)
def build_a1(ctx: QuadricContext) -> Operator:
    """The 2n x 2n matrix of multiplication by the degree-one class."""
    size = ctx.basis_size
    cols = [chevalley_column(ctx, p) for p in range(size)]
    return Operator(ctx, 1, [[cols[i][j] for i in range(size)] for j in range(size)])


@lru_cache(maxsize=None)
def build_ap(ctx: QuadricContext, p: int) -> Operator:
    """The matrix of multiplication by the basis class t_p.

    t_0 acts as the identity; below the middle degree the operator is a plain
    power of the t_1 matrix, from the middle on it is half that power, and the
    point class is half the top power minus the identity.
    """
    check_index(ctx, p)
    n = ctx.n
    if p == 0:
        mat = Matrix.identity(ctx.basis_size)
    else:
        m1 = build_a1(ctx)
        if p <= n - 1:
            mat = m1 ** p
        elif p <= 2 * n - 2:
            mat = (m1 ** p).scale(Fraction(1, 2))
        else:
            mat = (m1 ** (2 * n - 1)).scale(Fraction(1, 2)) - Matrix.identity(ctx.basis_size)
    return Operator(ctx, p, mat.rows)


def star_multiply(ctx: QuadricContext, a, b) -> Vector:
    """Product of two classes written in basis coordinates.

    Bilinear extension of the operator action: (sum_p a_p A_p) applied to b.
    Commutativity and associativity are properties of the ring, exercised by
    the test suite rather than assumed here.
    """
    if len(a) != ctx.basis_size or len(b) != ctx.basis_size:
        raise ValueError(f"class vectors must have length {ctx.basis_size}")
    b = tuple(as_fraction(v) for v in b)
    out = [Fraction(0)] * ctx.basis_size
    for p, coeff in enumerate(a):
        coeff = as_fraction(coeff)
        if not coeff:
            continue
        image = build_ap(ctx, p).apply(b)
        for i, v in enumerate(image):
            out[i] += coeff * v
    return tuple(out)
