"""Involutive automorphisms of finite abelian groups.

Cyclic case: every ``m`` with ``m^2 = 1 mod n`` splits by CRT into a part where
``m = 1``, a part where ``m = -1`` and possibly a 2-primary part of order
``2^k >= 8`` where ``m = +-1 + 2^(k-1)``.

General case: for ``M`` with ``M^2 = 1`` on ``G`` we compute the eigenspaces
``G+ = Ker(M - 1)``, ``G- = Ker(M + 1)``, ``U = G+ & G-``, ``W = G+ + G-``,
``V = G/W`` and ``F = M - 1``, and conversely rebuild every ``M`` with prescribed
eigenspaces as ``1 + F + phi`` with ``phi`` ranging over ``Hom(V, U)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from . import intmat
from .abelian import (
    Element,
    FinAbGroup,
    GroupHom,
    Subgroup,
    _factorize,
    check_enumerable,
)
from .errors import (
    IncompatibleEigenspaceData,
    InputError,
    NotAnInvolution,
    TheoremViolation,
    WrongParity,
)

#: invariants of ``analyze_involution`` are re-checked by enumeration up to this order
VERIFY_LIMIT = 2**16


def _check_cyclic_involution(n: int, m: int) -> int:
    if n < 1:
        raise InputError(f"modulus must be >= 1, got {n}")
    m %= n
    if (m * m - 1) % n:
        raise NotAnInvolution(f"{m}^2 is not 1 mod {n}")
    return m


def crt(residues: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """Combine ``(r_i, n_i)`` with pairwise coprime moduli into ``(r, prod n_i)``."""
    r, n = 0, 1
    for ri, ni in residues:
        if ni == 1:
            continue
        sol = intmat.solve_integer([[n, -ni]], [ri - r], 2)
        if sol is None:
            raise InputError(f"moduli {n} and {ni} are not coprime")
        r = (r + n * sol[0]) % (n * ni)
        n *= ni
    return r, n


@dataclass(frozen=True)
class CyclicInvolutionClass:
    """Decomposition ``n = n1 * n2 * 2^k`` of an involution ``m`` of ``Z/n``.

    ``m = 1 mod n1``, ``m = -1 mod n2`` and, when ``k >= 3``,
    ``m = sign2adic + 2^(k-1) mod 2^k``. The coarse split ``n = N1 * N2`` has
    ``m = residues`` in ``Z/N1 x Z/N2`` and falls in one of three shapes:
    case 4 ``(1, -1)``, case 5 ``(1, -1 + N2/2)``, case 6 ``(-1, 1 + N2/2)``.
    """

    n: int
    m: int
    n1: int
    n2: int
    k: int
    sign2adic: Optional[int]
    case: int
    N1: int
    N2: int
    residues: tuple[int, int]
    label: str

    def recombine(self) -> int:
        parts = [(1 % self.n1, self.n1), (-1 % self.n2, self.n2)]
        if self.k:
            q = 2**self.k
            parts.append(((self.sign2adic + q // 2) % q, q))
        r, n = crt(parts)
        assert n == self.n
        return r

    def recombine_coarse(self) -> int:
        return crt([(self.residues[0] % self.N1, self.N1), (self.residues[1] % self.N2, self.N2)])[0]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "n1": self.n1,
            "n2": self.n2,
            "k": self.k,
            "sign2adic": self.sign2adic,
            "coarse": {
                "case": self.case,
                "N1": self.N1,
                "N2": self.N2,
                "residues": [self.residues[0] % self.N1, self.residues[1] % self.N2],
                "type": self.label,
            },
        }


def classify_cyclic_involution(n: int, m: int) -> CyclicInvolutionClass:
    m = _check_cyclic_involution(n, m)
    n1 = n2 = 1
    k = 0
    sign: Optional[int] = None
    for p, e in _factorize(n).items():
        q = p**e
        r = m % q
        if r == 1 % q:
            n1 *= q
        elif r == -1 % q:
            n2 *= q
        else:
            # only 2-power moduli >= 8 admit other square roots of 1
            assert p == 2 and e >= 3, (n, m)
            k = e
            sign = 1 if r == 1 + q // 2 else -1
            assert r == (sign + q // 2) % q
    if k == 0:
        case, N1, N2, res = 4, n1, n2, (1, -1)
        if N2 == 1:
            label = "pure+1"
        elif N1 == 1:
            label = "pure-1"
        else:
            label = "split(1,-1)"
    elif sign == -1:
        N1, N2 = n1, n2 * 2**k
        case, res = 5, (1, -1 + N2 // 2)
        label = "esoteric" if N1 == 1 else "split(1,-1+N2/2)"
    else:
        N1, N2 = n2, n1 * 2**k
        case, res = 6, (-1, 1 + N2 // 2)
        label = "twisted" if N1 == 1 else "split(-1,1+N2/2)"
    return CyclicInvolutionClass(n, m, n1, n2, k, sign, case, N1, N2, res, label)


def enumerate_cyclic_involutions(n: int) -> list[int]:
    """Sorted residues ``m`` with ``m^2 = 1 mod n``, assembled prime power by prime power."""
    if n < 1:
        raise InputError(f"modulus must be >= 1, got {n}")
    local = []
    for p, e in _factorize(n).items():
        q = p**e
        roots = {1 % q, -1 % q}
        if p == 2 and e >= 3:
            roots |= {1 + q // 2, q // 2 - 1}
        local.append([(r, q) for r in sorted(roots)])
    return sorted(crt(choice)[0] for choice in itertools.product(*local)) if local else [0]


# ---------------------------------------------------------------------------
# general abelian groups


def quotient(G: FinAbGroup, W: Subgroup) -> tuple[FinAbGroup, GroupHom, list[Element]]:
    """``G/W`` with its projection and lifts of its generators."""
    rows = G.relation_rows() + [list(g) for g in W.generators]
    Q, P, B = FinAbGroup.from_relations(rows, G.rank)
    proj = GroupHom(G, Q, tuple(tuple(r) for r in P))
    return Q, proj, [G.element(b) for b in B]


def _as_subgroup(G: FinAbGroup, S: Union[Subgroup, Sequence[Sequence[int]]]) -> Subgroup:
    if isinstance(S, Subgroup):
        if S.ambient != G:
            raise InputError("subgroup lives in a different group")
        return S
    return Subgroup.generated(G, S)


def _require_involution(G: FinAbGroup, M: GroupHom) -> None:
    if M.source != G or M.target != G:
        raise InputError("M must be an endomorphism of G")
    if M @ M != GroupHom.identity(G):
        raise NotAnInvolution("M o M is not the identity")


@dataclass(frozen=True)
class InvolutionAnalysis:
    G: FinAbGroup
    M: GroupHom
    Gplus: Subgroup
    Gminus: Subgroup
    U: Subgroup
    W: Subgroup
    V: FinAbGroup
    projection: GroupHom
    F: GroupHom
    compatible_count: int

    def to_json(self) -> dict:
        def sub(S: Subgroup) -> dict:
            H, _ = S.structure()
            return {"generators": S.to_json(), "order": S.order, "type": list(H.invariant_factors)}

        return {
            "group": self.G.to_json(),
            "M": self.M.to_json(),
            "Gplus": sub(self.Gplus),
            "Gminus": sub(self.Gminus),
            "U": sub(self.U),
            "W": sub(self.W),
            "V": self.V.to_json(),
            "F": self.F.to_json(),
            "compatible_count": self.compatible_count,
        }


def eigenspaces(M: GroupHom) -> tuple[Subgroup, Subgroup]:
    one = GroupHom.identity(M.source)
    return (M - one).kernel(), (M + one).kernel()


def analyze_involution(G: FinAbGroup, M: GroupHom) -> InvolutionAnalysis:
    _require_involution(G, M)
    Gplus, Gminus = eigenspaces(M)
    U = Gplus.intersect(Gminus)
    W = Gplus + Gminus
    V, proj, _ = quotient(G, W)
    F = M - GroupHom.identity(G)
    count = len(enumerate_compatible_involutions(G, Gplus, Gminus))
    result = InvolutionAnalysis(G, M, Gplus, Gminus, U, W, V, proj, F, count)
    if G.order <= VERIFY_LIMIT:
        _verify_analysis(result)
    return result


def _verify_analysis(a: InvolutionAnalysis) -> None:
    G = a.G
    elems = list(G.elements())
    Mx = {x: a.M(x) for x in elems}
    Fx = {x: a.F(x) for x in elems}
    plus = {x for x in elems if Mx[x] == x}
    minus = {x for x in elems if Mx[x] == G.neg(x)}
    if plus != a.Gplus.elements() or minus != a.Gminus.elements():
        raise TheoremViolation("eigenspaces disagree with enumeration")
    U = plus & minus
    two_torsion = {x for x in elems if G.scale(2, x) == G.zero}
    if U != a.U.elements() or U != plus & two_torsion or U != minus & two_torsion:
        raise TheoremViolation("U is not the 2-torsion of both eigenspaces")
    W = {G.add(x, y) for x in plus for y in minus}
    if W != a.W.elements() or len(W) * len(U) != len(plus) * len(minus):
        raise TheoremViolation("W is not (G+ + G-) of the expected order")
    if a.V.exponent > 2 or a.V.order * len(W) != G.order:
        raise TheoremViolation("G/W is not an elementary 2-group")
    if any(Fx[x] not in W for x in elems):
        raise TheoremViolation("M does not induce the identity on G/W")
    if any(Fx[x] not in minus for x in elems):
        raise TheoremViolation("M - 1 does not land in G-")
    if any(Fx[x] != G.zero for x in plus) or any(Fx[x] != G.scale(-2, x) for x in minus):
        raise TheoremViolation("F is not 0 on G+ and -2 on G-")


def _extend_F(G: FinAbGroup, Gplus: Subgroup, Gminus: Subgroup) -> GroupHom:
    """Some ``F: G -> G-`` with ``F = 0`` on G+ and ``F = -2`` on G-."""
    Hm, hbasis = Gminus.structure()
    r = G.rank
    d = G.invariant_factors
    targets = [(list(g), G.zero) for g in Gplus.generators]
    targets += [(list(g), G.scale(-2, g)) for g in Gminus.generators]
    target_coords = [(w, Gminus.coordinates(t)) for w, t in targets]
    columns = [G.zero] * r
    for l, o in enumerate(Hm.invariant_factors):
        A = [[d[j] if jj == j else 0 for jj in range(r)] for j in range(r)]
        b = [0] * r
        for w, tc in target_coords:
            A.append(w)
            b.append(tc[l])
        y = intmat.solve_congruences(A, b, [o] * len(A), r)
        if y is None:
            raise TheoremViolation("no extension of F from W to G")
        columns = [G.add(columns[j], G.scale(y[j], hbasis[l])) for j in range(r)]
    return GroupHom.from_images(G, G, columns)


def check_eigenspace_data(
    G: FinAbGroup, Gplus: Subgroup, Gminus: Subgroup, W: Optional[Subgroup] = None
) -> tuple[Subgroup, Subgroup]:
    """Check that prescribed eigenspaces can come from an involution; returns ``(U, W)``.

    The failing condition is named in the error: ``sum`` (a supplied ``W`` is
    not ``G+ + G-``), ``two_torsion`` (``G+ & G-`` is not the 2-torsion of
    both) or ``quotient_exponent`` (``G/W`` is not killed by 2).
    """
    total = Gplus + Gminus
    if W is not None and W != total:
        raise IncompatibleEigenspaceData("sum", "W is not G+ + G-")
    U = Gplus.intersect(Gminus)
    if U != Gplus.torsion(2) or U != Gminus.torsion(2):
        raise IncompatibleEigenspaceData("two_torsion", "G+ & G- differs from the 2-torsion of G+ or of G-")
    for j in range(G.rank):
        e = tuple(2 if i == j else 0 for i in range(G.rank))
        if e not in total:
            raise IncompatibleEigenspaceData("quotient_exponent", "G/W is not killed by 2")
    return U, total


def enumerate_compatible_involutions(
    G: FinAbGroup,
    Gplus: Union[Subgroup, Sequence[Sequence[int]]],
    Gminus: Union[Subgroup, Sequence[Sequence[int]]],
    W: Optional[Union[Subgroup, Sequence[Sequence[int]]]] = None,
) -> list[GroupHom]:
    """All ``M`` with ``M^2 = 1``, ``Ker(M-1) = G+`` and ``Ker(M+1) = G-`` exactly.

    Candidates are ``M = 1 + F + phi`` for one extension ``F`` of the map fixed
    on ``W`` and every ``phi`` in ``Hom(G/W, U)``; those with the exact kernels
    are kept. Sorted by matrix.
    """
    Gplus = _as_subgroup(G, Gplus)
    Gminus = _as_subgroup(G, Gminus)
    Wsub = None if W is None else _as_subgroup(G, W)
    return list(_compatible(G, Gplus, Gminus, Wsub))


@lru_cache(maxsize=4096)
def _compatible(G: FinAbGroup, Gplus: Subgroup, Gminus: Subgroup, W: Optional[Subgroup]) -> tuple[GroupHom, ...]:
    U, Wsub = check_eigenspace_data(G, Gplus, Gminus, W)
    F = _extend_F(G, Gplus, Gminus)
    V, proj, _ = quotient(G, Wsub)
    _, ubasis = U.structure()
    check_enumerable(2 ** (V.rank * len(ubasis)))
    one = GroupHom.identity(G)
    two = GroupHom.scalar(G, 2)
    found = []
    for bits in itertools.product((0, 1), repeat=V.rank * len(ubasis)):
        # phi(v_k) = sum_l bits[l, k] u_l, pulled back along G -> V
        phi_v = [G.zero] * V.rank
        for k in range(V.rank):
            for l, u in enumerate(ubasis):
                if bits[l * V.rank + k]:
                    phi_v[k] = G.add(phi_v[k], u)
        cols = []
        for j in range(G.rank):
            c = G.zero
            for k in range(V.rank):
                c = G.add(c, G.scale(proj.matrix[k][j], phi_v[k]))
            cols.append(c)
        Fp = F + GroupHom.from_images(G, G, cols)
        if Fp.kernel() == Gplus and (Fp + two).kernel() == Gminus:
            found.append(one + Fp)
    return tuple(sorted(found, key=lambda h: h.matrix))


def split_odd_primary(Gp: FinAbGroup, Mp: GroupHom) -> tuple[Subgroup, Subgroup]:
    """Eigenspace splitting of an involution on a group of odd order."""
    if Gp.order % 2 == 0:
        raise WrongParity(f"{Gp} has even order")
    _require_involution(Gp, Mp)
    half = pow(2, -1, Gp.exponent) if Gp.exponent > 1 else 0
    one = GroupHom.identity(Gp)
    plus = GroupHom.scalar(Gp, half) @ (one + Mp)
    minus = GroupHom.scalar(Gp, half) @ (one - Mp)
    Gplus, Gminus = plus.image(), minus.image()
    if not Gplus.intersect(Gminus).is_trivial() or Gplus.order * Gminus.order != Gp.order:
        raise TheoremViolation("odd-order eigenspaces do not split G")
    if (Gplus, Gminus) != eigenspaces(Mp):
        raise TheoremViolation("projection images differ from the eigenspaces")
    return Gplus, Gminus
