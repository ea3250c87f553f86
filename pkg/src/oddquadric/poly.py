"""Dense univariate polynomials over exact rationals.

Coefficients are stored ascending by degree (index = degree) and trailing
zeros are trimmed; the zero polynomial is the single coefficient 0.  Includes
the monic Euclidean gcd and Yun's squarefree decomposition, which back the
repeated-root analysis elsewhere.
"""

from __future__ import annotations

import numbers
from fractions import Fraction


def as_fraction(v) -> Fraction:
    """Exact coercion to Fraction.

    Fixed-width integer scalars (numpy's included) register as Integral and
    would be stored raw inside Fraction, overflowing silently; route them
    through int to keep the arithmetic arbitrary precision.
    """
    if isinstance(v, numbers.Integral) and not isinstance(v, int):
        return Fraction(int(v))
    return Fraction(v)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [as_fraction(c) for c in coeffs]
        if not cs:
            cs = [Fraction(0)]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly([0])
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return self.scale(other)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def scale(self, c) -> "Poly":
        c = as_fraction(c)
        return Poly([c * v for v in self.coeffs])

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial powers are not supported")
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(1, len(rem) - other.degree)
        lead = other.leading
        for i in range(len(rem) - 1, other.degree - 1, -1):
            if not rem[i]:
                continue
            factor = rem[i] / lead
            q[i - other.degree] = factor
            for j, c in enumerate(other.coeffs):
                rem[i - other.degree + j] -= factor * c
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic form")
        return self.scale(1 / self.leading)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:] or [0])

    def __call__(self, x):
        """Horner evaluation; works for Fraction, float and complex arguments."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def zero_root_multiplicity(self) -> int:
        """Multiplicity of the root 0 (index of the lowest nonzero coefficient)."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no root multiplicities")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def strip_zero_roots(self) -> tuple[int, "Poly"]:
        """Split off the power-of-the-variable factor: (k, g) with self = x^k * g."""
        k = self.zero_root_multiplicity()
        return k, Poly(self.coeffs[k:])


#: The indeterminate, for building polynomials by arithmetic.
X = Poly((0, 1))


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divmod(a, b)
    if not r.is_zero:
        raise ValueError("division is not exact")
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over the rationals."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's decomposition f = prod g_i^i with each g_i monic and squarefree.

    Requires a monic nonconstant input.  Factors of multiplicity i come out in
    increasing i, each with positive degree; multiplicities account for the
    whole of f.
    """
    if not f.is_monic:
        raise ValueError("squarefree decomposition requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("squarefree decomposition requires a nonconstant polynomial")
    df = f.derivative()
    a = poly_gcd(f, df)
    b = exact_div(f, a)
    c = exact_div(df, a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = exact_div(b, g)
        c = exact_div(d, g)
        d = c - b.derivative()
        i += 1
    return out
