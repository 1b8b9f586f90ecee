from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realcyclic.abelian import (
    FinAbGroup,
    GroupHom,
    Subgroup,
    all_groups_up_to,
    element_order,
    groups_of_order,
    hom_kernel_image,
    n_torsion,
    primary_decompose,
)
from realcyclic.errors import InputError, InvariantViolation, SizeLimitExceeded

from oracles import element_order_census

# number of abelian groups of order n, n = 1..32 (partition counts of exponents)
ABELIAN_COUNTS = [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5, 1, 2, 1, 2, 1, 1, 1, 3, 2, 1, 3, 2, 1, 1, 1, 7]

orders = st.lists(st.integers(1, 12), min_size=0, max_size=3).filter(lambda o: _prod(o) <= 400)


def _prod(xs):
    p = 1
    for x in xs:
        p *= x
    return p


def census(G):
    return element_order_census(list(G.elements()), G.add, G.zero)


def test_invariants_checked():
    with pytest.raises(InvariantViolation):
        FinAbGroup((4, 2))
    with pytest.raises(InvariantViolation):
        FinAbGroup((1, 2))


def test_from_orders():
    assert FinAbGroup.from_orders([4, 6]).invariant_factors == (2, 12)
    assert FinAbGroup.from_orders([2, 3]).invariant_factors == (6,)
    assert FinAbGroup.from_orders([1]).invariant_factors == ()


@given(orders)
def test_from_orders_same_census(o):
    G = FinAbGroup.from_orders(o)
    assert G.order == _prod(o)
    # Z/o_1 x ... x Z/o_k, enumerated directly
    elems = list(product(*(range(x) for x in o)))
    add = lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, o))  # noqa: E731
    assert census(G) == element_order_census(elems, add, tuple(0 for _ in o))


def test_primary_decompose():
    assert primary_decompose(FinAbGroup()) == {}
    assert primary_decompose(FinAbGroup((2, 12))) == {2: [2, 4], 3: [3]}
    assert primary_decompose(FinAbGroup((6,))) == {2: [2], 3: [3]}


def test_primary_decompose_census():
    for G in all_groups_up_to(32):
        parts = [q for qs in primary_decompose(G).values() for q in qs]
        assert census(FinAbGroup.from_orders(parts)) == census(G)


def test_hom_kernel_image():
    Z4, Z3 = FinAbGroup.cyclic(4), FinAbGroup.cyclic(3)
    k, im = hom_kernel_image(GroupHom.identity(Z4))
    assert Subgroup.generated(Z4, k).is_trivial() and Subgroup.generated(Z4, im).order == 4
    k, im = hom_kernel_image(GroupHom.scalar(Z4, 2))
    assert Subgroup.generated(Z4, k).elements() == {(0,), (2,)}
    assert Subgroup.generated(Z4, im).elements() == {(0,), (2,)}
    k, im = hom_kernel_image(GroupHom.zero(Z3, Z3))
    assert Subgroup.generated(Z3, k).order == 3 and Subgroup.generated(Z3, im).is_trivial()


def test_element_order():
    assert element_order(FinAbGroup((12,)), (0,)) == 1
    assert element_order(FinAbGroup((12,)), (8,)) == 3
    assert element_order(FinAbGroup((2, 4)), (1, 2)) == 2


def test_n_torsion():
    assert n_torsion(FinAbGroup((4,)), 2) == [(0,), (2,)]
    assert n_torsion(FinAbGroup((3,)), 2) == [(0,)]
    assert len(n_torsion(FinAbGroup((2, 2)), 2)) == 4


@given(orders, st.integers(1, 12))
def test_n_torsion_matches_enumeration(o, n):
    G = FinAbGroup.from_orders(o)
    expected = sorted(x for x in G.elements() if G.scale(n, x) == G.zero)
    assert sorted(n_torsion(G, n)) == expected


def test_group_counts():
    assert [len(groups_of_order(n)) for n in range(1, 33)] == ABELIAN_COUNTS
    assert len(all_groups_up_to(32)) == sum(ABELIAN_COUNTS)


@given(orders, st.data())
def test_kernel_image_orders(o, data):
    G = FinAbGroup.from_orders(o)
    imgs = [
        tuple(data.draw(st.integers(0, 50)) for _ in range(G.rank)) for _ in range(G.rank)
    ]
    # random candidate images; keep only well-defined maps
    try:
        h = GroupHom.from_images(G, G, imgs)
    except InputError:
        return
    assert h.kernel().order * h.image().order == G.order
    assert h.kernel().elements() == {x for x in G.elements() if h(x) == G.zero}
    assert h.image().elements() == {h(x) for x in G.elements()}


@given(orders, st.data())
def test_subgroup_lattice(o, data):
    G = FinAbGroup.from_orders(o)
    elems = list(G.elements())
    a = data.draw(st.lists(st.sampled_from(elems), max_size=2))
    b = data.draw(st.lists(st.sampled_from(elems), max_size=2))
    A, B = Subgroup.generated(G, a), Subgroup.generated(G, b)
    assert (A + B).order * A.intersect(B).order == A.order * B.order
    assert A.intersect(B).elements() == A.elements() & B.elements()
    H, _ = A.structure()
    assert H.order == A.order


def test_hom_algebra():
    G = FinAbGroup((2, 4))
    M = GroupHom.from_images(G, G, [(1, 0), (1, 3)])
    assert M @ M == GroupHom.identity(G)
    assert (M + GroupHom.identity(G))((0, 1)) == (1, 0)
    assert GroupHom.from_json(M.to_json(), G) == M


def test_json_roundtrip():
    G = FinAbGroup((2, 6))
    assert FinAbGroup.from_json(G.to_json()) == G


def test_enumeration_limit():
    with pytest.raises(SizeLimitExceeded):
        list(FinAbGroup((2**21,)).elements())
