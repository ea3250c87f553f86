"""Exact polynomial arithmetic, gcd, and squarefree machinery."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddquadric import Poly, X, poly_gcd, squarefree_decomposition
from oddquadric.poly import exact_div

small_polys = st.builds(
    Poly,
    st.lists(st.integers(-6, 6), min_size=1, max_size=6),
)
nonzero_polys = small_polys.filter(lambda f: not f.is_zero)


def test_trailing_zeros_trimmed():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).coeffs == (Fraction(0),)
    assert Poly([]).is_zero


def test_degree_and_leading():
    f = Poly([3, 0, 1])
    assert f.degree == 2
    assert f.leading == 1
    assert f.is_monic


def test_arithmetic_basics():
    f = X**2 - Poly([1])
    g = (X - Poly([1])) * (X + Poly([1]))
    assert f == g
    assert f - g == Poly([0])
    assert (f + g).coeffs == (-2, 0, 2)


def test_scale_and_monic():
    f = Poly([2, 0, 4])
    assert f.monic().coeffs == (Fraction(1, 2), 0, 1)
    assert f.scale(Fraction(1, 2)).coeffs == (1, 0, 2)
    with pytest.raises(ValueError):
        Poly([0]).monic()


def test_divmod_known():
    f = X**3 - Poly([1])
    q, r = divmod(f, X - Poly([1]))
    assert q == X**2 + X + Poly([1])
    assert r.is_zero
    with pytest.raises(ZeroDivisionError):
        divmod(f, Poly([0]))


def test_exact_div_rejects_remainder():
    with pytest.raises(ValueError):
        exact_div(X**2, X + Poly([1]))


def test_evaluate_matches_direct():
    f = Poly([1, -4, 0, 0, 1])
    for x in (0, 1, Fraction(3, 2), -2.0, 1 + 1j):
        assert f(x) == 1 - 4 * x + x**4


def test_derivative():
    f = Poly([5, 3, 0, 2])
    assert f.derivative().coeffs == (3, 0, 6)
    assert Poly([7]).derivative().is_zero


def test_zero_root_multiplicity():
    assert Poly([0, 0, 0, 1]).zero_root_multiplicity() == 3
    assert Poly([2, 1]).zero_root_multiplicity() == 0
    with pytest.raises(ValueError):
        Poly([0]).zero_root_multiplicity()


def test_gcd_known_values():
    f = (X - Poly([1])) ** 2 * (X + Poly([2]))
    g = (X - Poly([1])) * (X + Poly([3]))
    assert poly_gcd(f, g) == X - Poly([1])
    assert poly_gcd(X**3 - Poly([4]), Poly([3]) * X**2).degree == 0
    assert poly_gcd(f, Poly([0])) == f.monic()


def test_squarefree_decomposition_known():
    f = (X - Poly([1])) ** 3 * (X + Poly([1]))
    assert squarefree_decomposition(f) == [(X + Poly([1]), 1), (X - Poly([1]), 3)]

    g = (X**3 - Poly([4])) ** 3
    assert squarefree_decomposition(g) == [(X**3 - Poly([4]), 3)]

    h = X**3 - Poly([4])
    assert squarefree_decomposition(h) == [(h, 1)]


def test_squarefree_decomposition_requires_monic_nonconstant():
    with pytest.raises(ValueError):
        squarefree_decomposition(Poly([1, 2]))
    with pytest.raises(ValueError):
        squarefree_decomposition(Poly([1]))


@settings(max_examples=60, deadline=None)
@given(f=small_polys, g=nonzero_polys)
def test_divmod_identity(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero or r.degree < g.degree


@settings(max_examples=60, deadline=None)
@given(f=small_polys, g=small_polys)
def test_product_rule(f, g):
    lhs = (f * g).derivative()
    rhs = f.derivative() * g + f * g.derivative()
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(f=nonzero_polys, g=nonzero_polys)
def test_gcd_divides_both(f, g):
    d = poly_gcd(f, g)
    assert (f % d).is_zero
    assert (g % d).is_zero


@settings(max_examples=30, deadline=None)
@given(f=nonzero_polys.filter(lambda f: f.degree >= 1))
def test_squarefree_decomposition_reassembles(f):
    m = f.monic()
    product = Poly([1])
    for factor, mult in squarefree_decomposition(m):
        product = product * factor**mult
    assert product == m
