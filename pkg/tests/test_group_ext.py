import pytest
from hypothesis import given
from hypothesis import strategies as st

from realcyclic.abelian import FinAbGroup, GroupHom
from realcyclic.errors import InputError, NotAnInvolution, UnsupportedShape, WrongParity
from realcyclic.group_ext import (
    DIHEDRAL_LIKE,
    ESOTERIC,
    MIXED,
    STANDARD,
    TWISTED,
    SemidirectElement,
    SemidirectGroup,
    basic_case_type,
    dihedral_order_census,
    even_subgroup,
    order_census,
    sd_multiply,
    tau_is_normal,
    verify_presentation,
)
from realcyclic.involutions import enumerate_cyclic_involutions

from oracles import dihedral_census

# element-order census of the n-gon symmetry group, from permutations
DIHEDRAL_CENSUS = {
    3: {1: 1, 2: 3, 3: 2},
    4: {1: 1, 2: 5, 4: 2},
    5: {1: 1, 2: 5, 5: 4},
    6: {1: 1, 2: 7, 3: 2, 6: 2},
    8: {1: 1, 2: 9, 4: 2, 8: 4},
}

cyclic_pairs = st.integers(2, 40).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(enumerate_cyclic_involutions(n))))


@pytest.mark.parametrize("n", sorted(DIHEDRAL_CENSUS))
def test_dihedral_census_frozen(n):
    assert dihedral_census(n) == DIHEDRAL_CENSUS[n]
    assert dihedral_order_census(n) == DIHEDRAL_CENSUS[n]


def test_multiply_examples():
    grp = SemidirectGroup.cyclic(8, 3)
    e = grp.element
    assert sd_multiply(grp, e((2,)), e((5,))) == e((7,))
    tau = grp.tau
    assert sd_multiply(grp, sd_multiply(grp, tau, e((1,))), tau) == e((3,))
    D = SemidirectGroup.cyclic(7, 6)
    assert sd_multiply(D, e((5,), 1), e((2,), 1)) == D.element((3,))


def test_multiply_rejects_foreign_element():
    grp = SemidirectGroup.cyclic(4, 3)
    with pytest.raises(InputError):
        sd_multiply(grp, SemidirectElement((7,)), grp.tau)


def test_presentation_examples():
    r = verify_presentation(SemidirectGroup.cyclic(5, 4))
    assert r.passed and r.dihedral and r.order_census == DIHEDRAL_CENSUS[5]
    assert verify_presentation(SemidirectGroup.cyclic(8, 3)).passed
    G = FinAbGroup.cyclic(4)
    bad = verify_presentation(SemidirectGroup.unchecked(G, GroupHom.scalar(G, 2)))
    assert not bad.passed and not bad.is_automorphism and bad.witnesses


def test_constructor_checks():
    G = FinAbGroup.cyclic(4)
    with pytest.raises(NotAnInvolution):
        SemidirectGroup(G, GroupHom.scalar(G, 2))
    with pytest.raises(NotAnInvolution):
        SemidirectGroup.cyclic(5, 2)


@given(cyclic_pairs)
def test_presentation_cyclic(nm):
    n, m = nm
    grp = SemidirectGroup.cyclic(n, m)
    r = verify_presentation(grp)
    assert r.passed and r.order == 2 * n
    assert sum(r.order_census.values()) == 2 * n
    if m == n - 1 or n <= 2:
        assert r.dihedral


@given(cyclic_pairs)
def test_tau_normal_iff_identity(nm):
    n, m = nm
    assert tau_is_normal(SemidirectGroup.cyclic(n, m)) == (m == 1 % n)


def test_tau_normal_noncyclic():
    G = FinAbGroup((2, 2))
    swap = GroupHom.from_images(G, G, [(0, 1), (1, 0)])
    assert not tau_is_normal(SemidirectGroup(G, swap))
    assert tau_is_normal(SemidirectGroup(G, GroupHom.identity(G)))


@given(cyclic_pairs)
def test_inverse(nm):
    grp = SemidirectGroup.cyclic(*nm)
    for a in grp.elements():
        assert sd_multiply(grp, a, grp.inverse(a)) == grp.identity


def test_order_census_matches_brute():
    grp = SemidirectGroup.cyclic(12, 5)
    elems = grp.elements()
    brute = {}
    for a in elems:
        k, x = 1, a
        while x != grp.identity:
            x = sd_multiply(grp, x, a)
            k += 1
        brute[k] = brute.get(k, 0) + 1
    assert order_census(grp) == dict(sorted(brute.items()))


@pytest.mark.parametrize(
    "n,m,kind",
    [(5, 4, STANDARD), (8, 5, TWISTED), (8, 3, ESOTERIC), (8, 1, DIHEDRAL_LIKE), (2, 1, STANDARD), (1, 0, STANDARD)],
)
def test_basic_kinds(n, m, kind):
    assert basic_case_type(n, m).kind == kind


def test_mixed():
    t = basic_case_type(12, 5)
    assert t.kind == MIXED
    assert [(f.N, f.case) for f in t.factors] == [(4, DIHEDRAL_LIKE), (3, STANDARD)]
    assert str(t) == "Mixed[(4, DihedralLike), (3, Standard)]"
    t = basic_case_type(24, 17)
    assert [(f.N, f.case) for f in t.factors] == [(8, DIHEDRAL_LIKE), (3, STANDARD)]
    t = basic_case_type(40, 11)
    assert [(f.N, f.case) for f in t.factors] == [(5, DIHEDRAL_LIKE), (8, ESOTERIC)]


@given(cyclic_pairs)
def test_case_type_recombines(nm):
    n, m = nm
    t = basic_case_type(n, m)
    assert t.recombine() == m
    if t.kind == MIXED:
        assert all(f.N > 1 for f in t.factors)
        assert len(t.factors) == 2


def test_even_subgroup():
    sub = even_subgroup(SemidirectGroup.cyclic(8, 5))
    assert sub.base.order == 4 and sub.M.matrix == ((1,),)
    sub = even_subgroup(SemidirectGroup.cyclic(8, 3))
    assert sub.M.matrix == ((3,),)
    sub = even_subgroup(SemidirectGroup.cyclic(4, 1))
    assert sub.base.order == 2 and sub.M == GroupHom.identity(sub.base)
    assert tau_is_normal(sub)
    with pytest.raises(WrongParity):
        even_subgroup(SemidirectGroup.cyclic(5, 4))
    G = FinAbGroup((2, 2))
    with pytest.raises(UnsupportedShape):
        even_subgroup(SemidirectGroup(G, GroupHom.identity(G)))


@given(cyclic_pairs.filter(lambda nm: nm[0] % 2 == 0))
def test_even_subgroup_is_subgroup(nm):
    n, m = nm
    grp = SemidirectGroup.cyclic(n, m)
    sub = even_subgroup(grp)
    # 2x -> x identifies the even elements with the smaller base
    for x in range(n // 2):
        lhs = sd_multiply(grp, sd_multiply(grp, grp.tau, grp.element((2 * x,))), grp.tau)
        rhs = sub.M((x,)) if sub.base.rank else ()
        assert lhs.g == ((2 * rhs[0]) % n,) if rhs else lhs.g == (0,)


def test_json():
    a = SemidirectElement((3,), 1)
    assert SemidirectElement.from_json(a.to_json()) == a
    assert SemidirectGroup.cyclic(8, 3).to_json() == {"group": {"invariant_factors": [8]}, "M": {"matrix": [[3]]}}
