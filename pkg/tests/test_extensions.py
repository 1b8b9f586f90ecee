from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from realcyclic.errors import (
    CoprimalityError,
    DegenerateParameter,
    InputError,
    InvariantViolation,
    NotAFieldExtension,
    RealityError,
    WrongParity,
)
from realcyclic.extensions import (
    INDETERMINATE,
    IRREDUCIBLE,
    REDUCIBLE,
    SQUARE_UNVERIFIED,
    SQUARE_VERIFIED,
    UNKNOWN,
    BasicCover,
    FactoredRatFunc,
    build_dihedral_like,
    build_esoteric,
    build_from_json,
    build_standard,
    build_twisted,
    check_power_criterion,
    decompose_to_basic,
    factored_form,
    fibre_product,
    gaussian_root,
    PARAMETERS,
)
from realcyclic.funcfield import GaussRational, RatFunc, parse_ratfunc, poly_from_coeffs, rf_eq, t
from realcyclic.involutions import enumerate_cyclic_involutions

P = parse_ratfunc
F = FactoredRatFunc

small = st.integers(-3, 3)
real_polys = st.lists(small, min_size=1, max_size=3).map(poly_from_coeffs)
gauss_polys = st.lists(st.builds(GaussRational, small, small), min_size=1, max_size=3).map(poly_from_coeffs)


def test_standard_examples():
    assert build_standard(2, "t").criterion.status == IRREDUCIBLE
    with pytest.raises(RealityError):
        build_standard(3, "i*t")
    v = build_standard(4, "t^4").criterion
    assert v.status == REDUCIBLE and v.h == 4
    with pytest.raises(DegenerateParameter):
        build_standard(3, "0")


def test_standard_multivariate_needs_factors():
    assert build_standard(2, "t1 t2").criterion.status == UNKNOWN
    d = build_standard(2, "t1^2 t2^2", F((("t1", 2), ("t2", 2))))
    assert d.criterion.status == REDUCIBLE


def test_dihedral_like_examples():
    d = build_dihedral_like(3, "2", "0")
    assert rf_eq(d.phi, RatFunc.const(1)) and rf_eq(d.F, RatFunc.const(2)) and d.psi.is_zero()
    assert d.degenerate and d.criterion.status == INDETERMINATE

    d = build_dihedral_like(3, "t", "1")
    assert rf_eq(d.phi, P("(t^2 + 1)/4"))
    assert rf_eq(d.F, t() * d.phi) and rf_eq(d.psi, d.phi)
    assert all(d.identities.values())

    d = build_dihedral_like(4, "t", "1")
    assert rf_eq(d.lam, P("8t/(1 - 4t^2)"))
    assert rf_eq(d.phi, 1 + d.lam * t())
    assert rf_eq(d.F, 2 * d.phi) and rf_eq(d.psi, d.lam * d.phi)
    assert d.identities["4phi^n = psi^2 + F^2"]


def test_dihedral_like_rejects():
    with pytest.raises(RealityError):
        build_dihedral_like(3, "i", "t")
    with pytest.raises(DegenerateParameter):
        build_dihedral_like(4, "t", "2t")


def test_twisted_examples():
    d = build_twisted(8, "2t", "2")
    assert rf_eq(d.Phi, P("t^2 + 1")) and rf_eq(d.A, P("2t")) and rf_eq(d.B, RatFunc.const(2))
    assert d.q_exp == 0 and d.phi_not_square == SQUARE_VERIFIED
    with pytest.raises(NotAFieldExtension):
        build_twisted(8, "0", "2")
    d = build_twisted(16, "2t", "2")
    assert d.N == 8 and d.q_exp == 1
    assert rf_eq(d.A, P("(t^2 + 1)*2t")) and rf_eq(d.B, P("2(t^2 + 1)"))
    assert rf_eq(d.A * d.A + d.B * d.B, 4 * P("t^2 + 1") ** 3)
    with pytest.raises(WrongParity):
        build_twisted(12, "t", "1")


def test_twisted_multivariate_unverified():
    assert build_twisted(8, "t1", "t2").phi_not_square == SQUARE_UNVERIFIED
    with pytest.raises(NotAFieldExtension):
        build_twisted(8, "t1", "t2", F((("s", 2),)))


def test_esoteric_example():
    d = build_esoteric(8, "t + i")
    assert rf_eq(d.Phi, P("t^2 + 1"))
    assert rf_eq(d.C, P("i t")) and rf_eq(d.D, P("i"))
    assert rf_eq(d.Ev, P("8t^4 + 8t^2 + 1")) and rf_eq(d.Od, P("8t^3 + 4t"))
    assert rf_eq(d.Ev + 1, P("2(2t^2 + 1)^2"))
    assert rf_eq(d.beta, P("-t(t^2 + 1)/(2t^2 + 1)"))
    assert all(d.identities.values())
    # cross-check by evaluation
    for x in (1, 2, 3):
        assert d.Ev.evaluate([x]) == 8 * x**4 + 8 * x**2 + 1
        assert d.beta.evaluate([x]) == GaussRational(-x * (x * x + 1)) / (2 * x * x + 1)


def test_esoteric_rejects():
    with pytest.raises(DegenerateParameter):
        build_esoteric(8, "t")
    with pytest.raises(NotAFieldExtension):
        build_esoteric(8, "i")
    with pytest.raises(WrongParity):
        build_esoteric(4, "t + i")


def test_power_criterion_examples():
    v = check_power_criterion(F((("s1", 2), ("s2", 4), ("t1", -2))), 2)
    assert v.status == REDUCIBLE and v.h == 2
    for n in (2, 3, 7, 12):
        assert check_power_criterion(F((("s1", 1), ("t1", -1))), n).status == IRREDUCIBLE
    v = check_power_criterion(F((("s1", 3),)), 6)
    assert v.status == REDUCIBLE and v.h == 3
    assert check_power_criterion(F(()), 6).status == INDETERMINATE


def test_power_criterion_gaussian_unit():
    f = F((("s", 2),), GaussRational(3))
    assert check_power_criterion(f, 2, "gaussian").status == IRREDUCIBLE
    assert check_power_criterion(f, 2, "closure").status == REDUCIBLE
    assert check_power_criterion(F((("s", 4),), GaussRational(-4)), 4, "gaussian").h == 4
    with pytest.raises(InputError):
        check_power_criterion(f, 2, "reals")
    with pytest.raises(InputError):
        check_power_criterion(f, 1)


@given(st.lists(st.integers(-12, 12).filter(bool), min_size=1, max_size=4), st.integers(2, 24))
def test_power_criterion_gcd(exps, n):
    f = F(tuple((f"s{k}", e) for k, e in enumerate(exps)))
    v = check_power_criterion(f, n)
    g = 0
    for e in exps:
        g = gcd(g, e)
    admissible = [h for h in range(2, n + 1) if n % h == 0 and g % h == 0]
    assert v.reducible == bool(admissible)
    assert v.h == (max(admissible) if admissible else None)


def test_factored_form_input_checks():
    with pytest.raises(InvariantViolation):
        F((("s", 1), ("s", 2)))
    with pytest.raises(InvariantViolation):
        F((("s", 0),))
    f = F((("s", 2),), GaussRational(1, 1))
    assert F.from_json(f.to_json()) == f


@given(gauss_polys.filter(lambda p: not p.is_const()), st.integers(1, 4), st.integers(2, 8))
def test_factored_form_matches_power(p, k, n):
    f = p**k
    g = factored_form(f)
    # the exponent gcd of p^k is a multiple of k
    assert all(e % k == 0 for e in g.exponents)


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 6))
def test_gaussian_root(x, y, h):
    c = GaussRational(x, y)
    r = gaussian_root(c**h, h)
    assert r is not None and r**h == c**h


def test_fibre_product_examples():
    fp = fibre_product(build_standard(2, "t"), build_standard(3, "t + 1"))
    assert fp.type == "Standard-pair" and fp.n == 6
    assert rf_eq(fp.defining_function, P("t^3 (t + 1)^2"))
    with pytest.raises(CoprimalityError):
        fibre_product(BasicCover(4, 1), BasicCover(6, 1))
    fp = fibre_product(BasicCover(3, 2), BasicCover(4, 1))
    assert (fp.n, fp.m) == (12, 5)
    assert fp.to_json()["case_type"]["type"] == "Mixed"


@given(st.integers(2, 15), st.integers(2, 15), st.data())
def test_fibre_product_crt(n, k, data):
    assume(gcd(n, k) == 1)
    m1 = data.draw(st.sampled_from(enumerate_cyclic_involutions(n)))
    m2 = data.draw(st.sampled_from(enumerate_cyclic_involutions(k)))
    fp = fibre_product(BasicCover(n, m1), BasicCover(k, m2))
    assert fp.m % n == m1 and fp.m % k == m2 and (fp.m * fp.m - 1) % (n * k) == 0


def test_decompose_examples():
    assert [(c.N, c.case) for c in decompose_to_basic(8, 3)] == [(8, "Esoteric")]
    assert [(c.N, c.case) for c in decompose_to_basic(12, 5)] == [(4, "DihedralLike"), (3, "Standard")]
    assert [(c.N, c.case, c.m) for c in decompose_to_basic(24, 17)] == [(8, "DihedralLike", 1), (3, "Standard", 2)]
    assert decompose_to_basic(1, 0) == []
    assert decompose_to_basic(8, 5)[0].parameters == PARAMETERS["Twisted"]


@given(real_polys, real_polys, st.sampled_from([3, 4, 5, 6]))
def test_dihedral_like_random(p, q, n):
    try:
        d = build_dihedral_like(n, p, q)
    except DegenerateParameter:
        return
    assert rf_eq(4 * d.phi**n, d.psi * d.psi + d.F * d.F)
    # f and its conjugate are the two roots of z^2 - F z + phi^n
    assert rf_eq(d.f + d.f.conj(), d.F) and rf_eq(d.f * d.f.conj(), d.phi**n)


@given(real_polys, real_polys, st.sampled_from([8, 16]))
def test_twisted_random(p, q, n):
    try:
        d = build_twisted(n, p, q)
    except (DegenerateParameter, NotAFieldExtension):
        return
    assert rf_eq(d.A * d.A + d.B * d.B, 4 * d.Phi ** (d.N // 2 - 1))


@given(gauss_polys, st.sampled_from([8, 16]))
def test_esoteric_random(theta, n):
    try:
        d = build_esoteric(n, theta)
    except (DegenerateParameter, NotAFieldExtension):
        return
    assert all(d.identities.values())


def test_build_from_json():
    d = build_from_json({"case": "esoteric", "n": 8, "theta": "t + 1i"})
    assert d.case == "Esoteric" and d.m == 3
    d = build_from_json({"case": "dihedral-like", "n": 3, "p": "t", "q": "1"})
    assert d.m == 1
    d = build_from_json({"case": "standard", "n": 4, "f": "t^2", "factored": {"factors": [["s", 2]]}})
    assert d.criterion.h == 2
    with pytest.raises(InputError):
        build_from_json({"case": "bogus", "n": 8})
    with pytest.raises(InputError):
        build_from_json({"case": "standard", "f": "t"})


def test_records_json():
    for d in (
        build_standard(3, "t"),
        build_dihedral_like(3, "t", "1"),
        build_twisted(8, "2t", "2"),
        build_esoteric(8, "t + i"),
    ):
        out = d.to_json()
        assert {"functions", "identities", "actions"} <= set(out)
        assert out["m"] == d.m
