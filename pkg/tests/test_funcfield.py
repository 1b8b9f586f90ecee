from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from realcyclic.errors import ParseError, UnsupportedShape
from realcyclic.funcfield import (
    I,
    GaussRational,
    MultiPoly,
    QuadExtElement,
    RatFunc,
    format_coefficient,
    parse_ratfunc,
    poly_from_coeffs,
    quad_pow,
    quad_pow_binomial,
    rf_conj,
    rf_eq,
    rf_is_imaginary,
    rf_is_real,
    rf_is_square,
    squarefree_decomposition,
    t,
)

from oracles import poly_eval

P = parse_ratfunc
small = st.integers(-4, 4)
gauss = st.builds(GaussRational, small, small)
real_polys = st.lists(small, min_size=1, max_size=4).map(poly_from_coeffs)
gauss_polys = st.lists(gauss, min_size=1, max_size=4).map(poly_from_coeffs)
ratfuncs = st.tuples(gauss_polys, gauss_polys.filter(lambda p: not p.is_zero())).map(lambda nd: nd[0] / nd[1])
points = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def value(f, x):
    return f.evaluate([x])


def defined(f, x):
    return not f.den.evaluate([x]) == 0


def test_gauss_arithmetic():
    a = GaussRational(1, 2)
    assert a * a.inverse() == 1
    assert a.conj() == GaussRational(1, -2)
    assert a.norm() == 5
    assert I * I == -1
    assert format_coefficient(GaussRational(Fraction(3, 2), 2)) == "((3/2)+2i)"
    assert format_coefficient(GaussRational(0, Fraction(3, 2))) == "(3/2)i"


def test_conj_examples():
    assert rf_eq(rf_conj(P("t + 1")), P("t + 1"))
    assert rf_eq(rf_conj(P("i*t")), P("-i*t"))
    assert rf_eq(rf_conj(P("(t + i)/(t - i)")), P("(t - i)/(t + i)"))


def test_eq_examples():
    assert rf_eq(P("2t/2"), t())
    assert rf_eq(P("(t^2 - 1)/(t - 1)"), P("t + 1"))
    assert not rf_eq(t(), P("t + 1"))


def test_quad_pow_examples():
    C, D, Phi = P("i*t"), P("i"), P("t^2 + 1")
    assert quad_pow(C, D, Phi, 0) == (RatFunc.const(1), RatFunc.const(0))
    ev, od = quad_pow(C, D, Phi, 1)
    assert rf_eq(ev, C) and rf_eq(od, D)
    ev, od = quad_pow(C, D, Phi, 4)
    assert rf_eq(ev, P("8t^4 + 8t^2 + 1")) and rf_eq(od, P("8t^3 + 4t"))
    assert rf_eq(ev * ev - Phi * od * od, RatFunc.const(1))


def test_real_imaginary_examples():
    assert rf_is_real(P("t^2 + 3"))
    assert rf_is_imaginary(P("i*(t + 1)"))
    f = P("t + i")
    assert not rf_is_real(f) and not rf_is_imaginary(f)


def test_square_examples():
    assert rf_is_square(P("t^2 + 2t + 1"))
    assert not rf_is_square(P("t^2 + 1"))
    assert rf_is_square(RatFunc.const(4))
    assert not rf_is_square(RatFunc.const(-4))
    # over C(t) every constant is a square
    assert rf_is_square(P("i"))
    assert rf_is_square(P("t2^2"))
    with pytest.raises(UnsupportedShape):
        rf_is_square(P("t1 t2"))


def test_parse_format():
    f = P("(2/3)t^2 + (1 - 3i)t - 1/2 + 5i")
    assert rf_eq(P(f.to_text()), f)
    assert P("t^-2") == 1 / (t() * t())
    assert P("2(t+1)") == 2 * t() + 2
    with pytest.raises(ParseError):
        P("t + $")
    with pytest.raises(ParseError):
        P("1/(t - t)")
    with pytest.raises(ZeroDivisionError):
        t() / (t() - t())


def test_json_roundtrip():
    f = P("(t^2 + i)/(3t - 1)")
    assert RatFunc.from_json(f.to_json()) == f


@given(ratfuncs, ratfuncs, ratfuncs, points)
def test_field_ops_pointwise(f, g, h, x):
    assume(defined(f, x) and defined(g, x) and defined(h, x))
    assert value(f + g, x) == value(f, x) + value(g, x)
    assert value(f * g - h, x) == value(f, x) * value(g, x) - value(h, x)
    if not g.is_zero() and value(g, x) != 0:
        q = f / g
        if defined(q, x):
            assert value(q, x) == value(f, x) * value(g, x).inverse()


@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms(f, g, h):
    assert rf_eq(f * (g + h), f * g + f * h)
    assert rf_eq((f + g) + h, f + (g + h))
    assert rf_eq(f - f, RatFunc.const(0))
    if not f.is_zero():
        assert rf_eq(f / f, RatFunc.const(1))


@given(ratfuncs, ratfuncs)
def test_conj_involutive_and_multiplicative(f, g):
    assert rf_eq(rf_conj(rf_conj(f)), f)
    assert rf_eq(rf_conj(f * g), rf_conj(f) * rf_conj(g))
    assert rf_is_real(f * rf_conj(f))


@given(st.lists(small, min_size=1, max_size=5), points)
def test_real_poly_eval_oracle(coeffs, x):
    assert value(poly_from_coeffs(coeffs), x) == poly_eval(coeffs, x)


@given(ratfuncs)
def test_text_roundtrip(f):
    assert rf_eq(P(f.to_text()), f)
    assert RatFunc.from_json(f.to_json()) == f


@given(ratfuncs.filter(lambda f: not f.is_zero()), st.sampled_from([1, -1, 2, 3]))
def test_square_of_anything(f, c):
    g = RatFunc.const(c) * f * f
    if c == 1 and (rf_is_real(f) or not rf_is_real(g)):
        # real g is decided over R(t): (-i)^2 = -1 is not a square there
        assert rf_is_square(g)
    if c == -1 and rf_is_real(f):
        assert not rf_is_square(g)
    if not rf_is_real(g):
        # C(t): constants do not matter
        assert rf_is_square(g) == rf_is_square(f * f)


@given(gauss_polys.filter(lambda p: not p.is_const()), st.integers(1, 3), gauss_polys.filter(lambda p: not p.is_zero()))
def test_squarefree(p, k, q):
    poly = (p**k * q).num
    c, parts = squarefree_decomposition(poly)
    prod = RatFunc.const(c)
    for j, a in enumerate(parts, start=1):
        prod = prod * RatFunc(a) ** j
    assert rf_eq(prod, RatFunc(poly))
    assert len(parts) >= k


@given(ratfuncs, ratfuncs, real_polys.filter(lambda p: not p.is_const()), st.integers(0, 4))
def test_quad_pow_norm(C, D, Phi, N):
    ev, od = quad_pow(C, D, Phi, N)
    norm = C * C - Phi * D * D
    assert rf_eq(ev * ev - Phi * od * od, norm**N)
    assert (ev, od) == quad_pow_binomial(C, D, Phi, N)


def test_quad_ext_ops():
    y = QuadExtElement.y(P("t^2 + 1"))
    assert y * y == QuadExtElement(P("t^2 + 1"), 0, P("t^2 + 1"))
    assert (1 + y).norm() == -t() * t()


def test_multivariate():
    f = P("t1^2 t2 + i t2")
    assert f.nvars == 2
    assert f.evaluate([2, 3]) == GaussRational(12, 3)
    assert MultiPoly.var(2).to_text(2) == "t2"
