from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ribbontutte.errors import UnmappedVariableError
from ribbontutte.poly import X, Y, IntPoly, LaurentPoly, Var, xg, yg

x, y = IntPoly.var(X), IntPoly.var(Y)
x0, y0 = IntPoly.var(xg(0)), IntPoly.var(yg(0))


def test_ring_basics():
    assert str(x0 * y0 + x0 * y0) == "2*x[0]*y[0]"
    p = x * x0 + 3
    assert p + 0 == p
    assert (x + y) * (x - y) == x**2 - y**2
    assert str((x + y) * (x - y)) == "x^2 - y^2"
    assert str(IntPoly()) == "0"
    assert str(-x + 1) == "-x + 1"


def test_canonical_order():
    p = IntPoly.parse("y^2*x[0]*y[1] + 3*x*y*x[0]*y[0] + x^3*x[1]*y[0]^2")
    assert str(p) == "x^3*x[1]*y[0]^2 + 3*x*y*x[0]*y[0] + y^2*x[0]*y[1]"
    # unsubscripted variables come first, then families by subscript
    assert [str(v) for v in (x * IntPoly.var(xg(-1)) * IntPoly.var(yg(1)) * y).variables()] == ["x", "y", "x[-1/2]", "y[1/2]"]


def test_half_and_negative_subscripts_render():
    assert str(IntPoly.var(xg(1))) == "x[1/2]"
    assert str(IntPoly.var(xg(-2))) == "x[-1]"
    assert IntPoly.parse("x[-3/2]^2") == IntPoly.var(xg(-3)) ** 2


def test_laurent_text():
    p = LaurentPoly.var_power("a", -2) * LaurentPoly.var_power("d", 1) + Fraction(1, 2)
    # exponent vectors compare lexicographically, so a^-1 sorts below 1
    assert str(p) == "1/2 + a^-1*d^1/2"
    assert LaurentPoly.parse(str(p)) == p
    assert LaurentPoly.var("a") ** -2 == LaurentPoly.parse("a^-2")


def test_substitute_example():
    p = x * x0 * y0**2 + x0 * y0
    a, c = LaurentPoly.var("a"), LaurentPoly.var("c")
    img = p.substitute({X: 1, xg(0): c, yg(0): a})
    assert img == c * a**2 + c * a


def test_substitute_identity_and_missing():
    p = x * x0 * y0**2 + x0 * y0
    same = p.substitute(lambda v: LaurentPoly.var(v))
    assert same == p.to_laurent()
    assert str(same) == str(p)
    with pytest.raises(UnmappedVariableError):
        p.substitute({X: 1})


def test_example_polynomial_at_flow_point():
    T = IntPoly.parse("x^3*x[1]*y[0]^2 + 2*x^2*x[1]*y[0] + 3*x*y*x[0]*y[0] + x^2*y*x[0]*y[0]^2 + y^2*x[0]*y[1]")
    point = {"x": 1, "y": -6, "x[0]": 1, "x[1]": 1, "y[0]": -1, "y[1]": Fraction(-1, 2)}
    assert T.evaluate(point) == -7


def test_half_integer_power_needs_a_square():
    p = LaurentPoly.parse("a^1/2")
    assert p.evaluate({"a": 4}) == 2
    with pytest.raises(ValueError):
        p.evaluate({"a": 2})


def test_swap_families():
    p = x * x0 * y0**2
    assert p.swap_families() == y * y0 * x0**2
    assert p.swap_families().swap_families() == p


# -- properties ----------------------------------------------------------------

VARS = [X, Y, xg(-2), xg(0), xg(1), yg(0), yg(2)]
monos = st.dictionaries(st.sampled_from(VARS), st.integers(1, 3), max_size=3)
polys = st.dictionaries(monos.map(lambda d: tuple(d.items())), st.integers(-5, 5), max_size=5).map(IntPoly)
points = st.fixed_dictionaries({str(v): st.fractions(min_value=-3, max_value=3, max_denominator=4) for v in VARS})


@settings(max_examples=200, deadline=None)
@given(polys)
def test_parse_round_trip(p):
    assert IntPoly.parse(str(p)) == p
    assert str(IntPoly.parse(str(p))) == str(p)


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_print_is_injective(p, q):
    assert (str(p) == str(q)) == (p == q)


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == IntPoly()


@settings(max_examples=100, deadline=None)
@given(polys, polys, points)
def test_substitution_is_a_homomorphism(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)
    a = LaurentPoly.var("a")
    sub = {v: a + 1 if v.sub2 is None else Fraction(2) for v in VARS}
    assert (p * q).substitute(sub) == p.substitute(sub) * q.substitute(sub)


@settings(max_examples=100, deadline=None)
@given(polys, st.lists(points, min_size=3, max_size=3))
def test_equal_polys_agree_at_random_points(p, pts):
    q = IntPoly.parse(str(p))
    for pt in pts:
        assert p.evaluate(pt) == q.evaluate(pt)
