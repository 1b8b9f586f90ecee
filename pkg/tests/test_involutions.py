import pytest
from hypothesis import given
from hypothesis import strategies as st

from realcyclic.abelian import FinAbGroup, GroupHom, Subgroup, all_groups_up_to
from realcyclic.errors import IncompatibleEigenspaceData, InputError, NotAnInvolution, WrongParity
from realcyclic.involutions import (
    analyze_involution,
    classify_cyclic_involution,
    crt,
    enumerate_compatible_involutions,
    enumerate_cyclic_involutions,
    split_odd_primary,
)

from oracles import brute_force_involutions, eigen_sets

# involutive endomorphisms per group, counted by brute force over all matrices
INVOLUTION_COUNTS = {
    (2,): 1, (3,): 2, (4,): 2, (2, 2): 4, (5,): 2, (6,): 2, (7,): 2, (8,): 4, (2, 4): 6,
    (2, 2, 2): 22, (9,): 2, (3, 3): 14, (10,): 2, (12,): 4, (2, 6): 8, (4, 4): 28,
    (2, 2, 4): 44, (2, 2, 2, 2): 316, (3, 6): 14, (3, 3, 3): 236, (5, 5): 32,
    (2, 4, 4): 160, (2, 2, 2, 4): 576,
}


def hom(d, cols):
    G = FinAbGroup(d)
    return G, GroupHom.from_images(G, G, cols)


@pytest.mark.parametrize("d,count", sorted(INVOLUTION_COUNTS.items()))
def test_oracle_counts_frozen(d, count):
    assert len(brute_force_involutions(d)) == count


@pytest.mark.parametrize(
    "n,m,n1,n2,k,case,N1,N2",
    [
        (12, 5, 4, 3, 0, 4, 4, 3),
        (8, 3, 1, 1, 3, 5, 1, 8),
        (15, 4, 3, 5, 0, 4, 3, 5),
        (9, 1, 9, 1, 0, 4, 9, 1),
        (40, 11, 5, 1, 3, 5, 5, 8),
        (40, 29, 1, 5, 3, 6, 5, 8),
        (40, 21, 5, 1, 3, 6, 1, 40),
    ],
)
def test_classify_examples(n, m, n1, n2, k, case, N1, N2):
    c = classify_cyclic_involution(n, m)
    assert (c.n1, c.n2, c.k, c.case, c.N1, c.N2) == (n1, n2, k, case, N1, N2)
    assert c.recombine() == m and c.recombine_coarse() == m


def test_classify_sign():
    assert classify_cyclic_involution(8, 3).sign2adic == -1
    assert classify_cyclic_involution(8, 5).sign2adic == 1
    assert classify_cyclic_involution(12, 5).to_json()["coarse"]["type"] == "split(1,-1)"


def test_classify_rejects_non_involution():
    with pytest.raises(NotAnInvolution):
        classify_cyclic_involution(12, 4)


@given(st.integers(1, 400), st.data())
def test_classify_invariants(n, data):
    m = data.draw(st.sampled_from(enumerate_cyclic_involutions(n)))
    c = classify_cyclic_involution(n, m)
    assert c.n1 * c.n2 * 2**c.k == n
    assert c.k == 0 or c.k >= 3
    assert (m - 1) % c.n1 == 0 and (m + 1) % c.n2 == 0
    if c.k:
        q = 2**c.k
        assert (m - c.sign2adic - q // 2) % q == 0
    assert c.N1 * c.N2 == n and c.recombine() == m % n


def test_enumerate_cyclic():
    assert enumerate_cyclic_involutions(2) == [1]
    assert enumerate_cyclic_involutions(8) == [1, 3, 5, 7]
    assert enumerate_cyclic_involutions(12) == [1, 5, 7, 11]


@given(st.integers(1, 500))
def test_enumerate_cyclic_brute(n):
    assert enumerate_cyclic_involutions(n) == [m for m in range(n) if (m * m - 1) % n == 0]


def test_crt():
    assert crt([(1, 4), (2, 3)]) == (5, 12)


def test_analyze_examples():
    G, M = hom((4,), [(1,)])
    a = analyze_involution(G, M)
    assert a.Gplus.order == 4 and a.Gminus.elements() == {(0,), (2,)}
    assert a.U.elements() == {(0,), (2,)} and a.W.order == 4 and a.V.order == 1

    G, M = hom((4, 4), [(0, 1), (1, 0)])
    a = analyze_involution(G, M)
    assert a.Gplus == Subgroup.generated(G, [(1, 1)]) and a.Gminus == Subgroup.generated(G, [(1, 3)])
    assert a.U.elements() == {(0, 0), (2, 2)}
    assert a.W.order == 8 and a.V.invariant_factors == (2,)

    G, M = hom((3,), [(2,)])
    a = analyze_involution(G, M)
    assert a.Gplus.is_trivial() and a.Gminus.order == 3 and a.U.is_trivial() and a.V.order == 1


def test_analyze_rejects():
    G, M = hom((4,), [(2,)])
    with pytest.raises(NotAnInvolution):
        analyze_involution(G, M)


def test_split_odd_primary():
    G, M = hom((9,), [(1,)])
    plus, minus = split_odd_primary(G, M)
    assert plus.order == 9 and minus.is_trivial()
    G, M = hom((3, 3), [(0, 1), (1, 0)])
    plus, minus = split_odd_primary(G, M)
    assert plus == Subgroup.generated(G, [(1, 1)]) and minus == Subgroup.generated(G, [(1, 2)])
    G, M = hom((5,), [(4,)])
    plus, minus = split_odd_primary(G, M)
    assert plus.is_trivial() and minus.order == 5
    with pytest.raises(WrongParity):
        split_odd_primary(*hom((4,), [(1,)]))


def test_compatible_examples():
    G = FinAbGroup((2, 2))
    maps = enumerate_compatible_involutions(G, [(1, 0)], [(1, 0)])
    assert len(maps) == 1 and maps[0]((1, 0)) == (1, 0) and maps[0]((0, 1)) == (1, 1)
    G = FinAbGroup((4,))
    maps = enumerate_compatible_involutions(G, [(1,)], [(2,)])
    assert [h.matrix for h in maps] == [((1,),)]
    G = FinAbGroup((3,))
    maps = enumerate_compatible_involutions(G, [], [(1,)])
    assert [h.matrix for h in maps] == [((2,),)]


def test_compatible_rejects_bad_data():
    G = FinAbGroup((4,))
    with pytest.raises(IncompatibleEigenspaceData) as exc:
        enumerate_compatible_involutions(G, [(1,)], [(1,)])
    assert exc.value.condition == "two_torsion"
    # conditions hold but no automorphism of Z/4 has these eigenspaces
    assert enumerate_compatible_involutions(G, [(2,)], [(2,)]) == []
    with pytest.raises(IncompatibleEigenspaceData):
        enumerate_compatible_involutions(FinAbGroup((8,)), [(1,)], [(4,)], W=[(2,)])
    with pytest.raises(IncompatibleEigenspaceData) as exc:
        enumerate_compatible_involutions(FinAbGroup((4,)), [], [])
    assert exc.value.condition == "quotient_exponent"


@pytest.mark.parametrize("G", [G for G in all_groups_up_to(16) if G.order > 1], ids=str)
def test_compatible_matches_brute_force(G):
    d = G.invariant_factors
    by_eigen = {}
    for cols in brute_force_involutions(d):
        by_eigen.setdefault(eigen_sets(d, cols), set()).add(cols)
    for (plus, minus), expected in by_eigen.items():
        found = enumerate_compatible_involutions(G, list(plus), list(minus))
        got = {tuple(tuple(row[j] for row in h.matrix) for j in range(G.rank)) for h in found}
        assert got == expected


def test_input_validation():
    with pytest.raises(InputError):
        enumerate_cyclic_involutions(0)
