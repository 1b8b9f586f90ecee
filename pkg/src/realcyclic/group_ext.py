"""The semidirect product ``G' = G x| Z/2`` attached to an involution ``M`` of ``G``.

Elements are pairs ``(g, eps)`` standing for ``g * tau^eps``; the product is
``(g, e) (h, d) = (g + M^e h, e + d mod 2)``, so ``tau g tau = M(g)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

import numpy as np

from .abelian import Element, FinAbGroup, GroupHom, check_enumerable, element_order
from .errors import InputError, NotAnInvolution, UnsupportedShape, WrongParity
from .involutions import _check_cyclic_involution, classify_cyclic_involution, crt

#: exhaustive presentation checks are limited to bases of at most this order
PRESENTATION_LIMIT = 2**12
#: full associativity is checked on all triples up to this order of G'
ASSOCIATIVITY_LIMIT = 64

STANDARD = "Standard"
DIHEDRAL_LIKE = "DihedralLike"
TWISTED = "Twisted"
ESOTERIC = "Esoteric"
MIXED = "Mixed"


@dataclass(frozen=True)
class SemidirectElement:
    g: Element
    eps: int = 0

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(int(a) for a in self.g))
        if self.eps not in (0, 1):
            raise InputError(f"eps must be 0 or 1, got {self.eps}")

    def to_json(self) -> dict:
        return {"g": list(self.g), "eps": self.eps}

    @classmethod
    def from_json(cls, obj: dict) -> "SemidirectElement":
        return cls(tuple(obj["g"]), int(obj["eps"]))


@dataclass(frozen=True)
class SemidirectGroup:
    """``base x| <tau>`` with ``tau g tau = M(g)``.

    The constructor insists that ``M`` is an involutive automorphism; use
    :meth:`unchecked` to build a candidate that :func:`verify_presentation`
    is meant to reject.
    """

    base: FinAbGroup
    M: GroupHom
    checked: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.M.source != self.base or self.M.target != self.base:
            raise InputError("M must be an endomorphism of the base group")
        if self.checked:
            if (self.M @ self.M) != GroupHom.identity(self.base):
                raise NotAnInvolution("M^2 is not the identity")
            if not self.M.is_injective():
                raise NotAnInvolution("M is not an automorphism")

    @classmethod
    def unchecked(cls, base: FinAbGroup, M: GroupHom) -> "SemidirectGroup":
        return cls(base, M, checked=False)

    @classmethod
    def cyclic(cls, n: int, m: int) -> "SemidirectGroup":
        G = FinAbGroup.cyclic(n)
        return cls(G, GroupHom.scalar(G, m))

    @property
    def order(self) -> int:
        return 2 * self.base.order

    @property
    def tau(self) -> SemidirectElement:
        return SemidirectElement(self.base.zero, 1)

    @property
    def identity(self) -> SemidirectElement:
        return SemidirectElement(self.base.zero, 0)

    def element(self, g, eps: int = 0) -> SemidirectElement:
        return SemidirectElement(self.base.element(g), eps)

    def elements(self) -> list[SemidirectElement]:
        check_enumerable(self.order)
        return [SemidirectElement(g, e) for e in (0, 1) for g in self.base.elements()]

    def inverse(self, a: SemidirectElement) -> SemidirectElement:
        # (g, 0)^-1 = (-g, 0); (g, 1)^-1 = (-M g, 1)
        g = self.M(a.g) if a.eps else a.g
        return SemidirectElement(self.base.neg(g), a.eps)

    def to_json(self) -> dict:
        return {"group": self.base.to_json(), "M": self.M.to_json()}


def _check_member(grp: SemidirectGroup, a: SemidirectElement) -> None:
    G = grp.base
    if len(a.g) != G.rank or any(not 0 <= x < d for x, d in zip(a.g, G.invariant_factors)):
        raise InputError(f"{a.g} is not an element of {G}")


def sd_multiply(grp: SemidirectGroup, a: SemidirectElement, b: SemidirectElement) -> SemidirectElement:
    _check_member(grp, a)
    _check_member(grp, b)
    h = grp.M(b.g) if a.eps else b.g
    return SemidirectElement(grp.base.add(a.g, h), (a.eps + b.eps) % 2)


def _mul(grp: SemidirectGroup, a: SemidirectElement, b: SemidirectElement) -> SemidirectElement:
    # unvalidated product for the enumeration loops
    h = grp.M(b.g) if a.eps else b.g
    return SemidirectElement(grp.base.add(a.g, h), a.eps ^ b.eps)


def _element_order(grp: SemidirectGroup, a: SemidirectElement) -> int:
    if a.eps == 0:
        return element_order(grp.base, a.g)
    # (g, 1)^2 = (g + M g, 0)
    return 2 * element_order(grp.base, grp.base.add(a.g, grp.M(a.g)))


def order_census(grp: SemidirectGroup) -> dict[int, int]:
    """Number of elements of each order in ``G'``."""
    return dict(sorted(Counter(_element_order(grp, a) for a in grp.elements()).items()))


def dihedral_order_census(n: int) -> dict[int, int]:
    """Element orders of the dihedral group of order ``2n``."""
    census = Counter({1: 0})
    for k in range(n):
        census[n // gcd(n, k)] += 1
    census[2] += n
    return dict(sorted((k, v) for k, v in census.items() if v))


@dataclass
class PresentationReport:
    passed: bool
    order: int
    is_automorphism: bool
    is_involution: bool
    tau_squared: bool
    conjugation: bool
    associative: Optional[bool]
    order_census: dict[int, int]
    dihedral: Optional[bool]
    failures: list[str]
    witnesses: list[dict]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "order": self.order,
            "is_automorphism": self.is_automorphism,
            "is_involution": self.is_involution,
            "tau_squared": self.tau_squared,
            "conjugation": self.conjugation,
            "associative": self.associative,
            "order_census": {str(k): v for k, v in self.order_census.items()},
            "dihedral": self.dihedral,
            "failures": self.failures,
            "witnesses": self.witnesses,
        }


def verify_presentation(grp: SemidirectGroup) -> PresentationReport:
    """Exhaustively check the defining relations of ``G'``.

    Checks that ``M`` is an involutive automorphism, ``tau^2 = 1``,
    ``tau g tau = M(g)`` for every ``g`` and that ``G'`` has ``2|G|`` distinct
    elements. Associativity is checked on all triples when ``|G'| <= 64``.
    """
    G, M = grp.base, grp.M
    check_enumerable(G.order, PRESENTATION_LIMIT)
    failures: list[str] = []
    witnesses: list[dict] = []

    kernel = M.kernel()
    is_auto = kernel.is_trivial()
    if not is_auto:
        failures.append("M is not an automorphism")
        witnesses.append({"kernel_element": list(kernel.generators[0])})
    bad = next((g for g in G.elements() if M(M(g)) != g), None)
    is_inv = bad is None
    if not is_inv:
        failures.append("M^2 is not the identity")
        witnesses.append({"g": list(bad), "M^2(g)": list(M(M(bad)))})

    tau = grp.tau
    tau_sq = _mul(grp, tau, tau) == grp.identity
    if not tau_sq:
        failures.append("tau^2 != 1")
    conj_ok = True
    for g in G.elements():
        lhs = _mul(grp, _mul(grp, tau, SemidirectElement(g, 0)), tau)
        if lhs != SemidirectElement(M(g), 0):
            conj_ok = False
            failures.append("tau g tau != M(g)")
            witnesses.append({"g": list(g), "tau_g_tau": lhs.to_json()})
            break

    elems = grp.elements()
    if len(set(elems)) != 2 * G.order:
        failures.append("|G'| != 2|G|")

    associative = None
    if grp.order <= ASSOCIATIVITY_LIMIT:
        # multiplication table on indices; (ab)c = a(bc) for all triples at once
        index = {a: k for k, a in enumerate(elems)}
        T = np.array([[index[_mul(grp, a, b)] for b in elems] for a in elems])
        bad = np.argwhere(T[T, :] != T[:, T])
        associative = not len(bad)
        if not associative:
            a, b, c = (elems[int(k)] for k in bad[0])
            failures.append("multiplication is not associative")
            witnesses.append({"a": a.to_json(), "b": b.to_json(), "c": c.to_json()})

    census: dict[int, int] = {}
    dihedral = None
    if is_auto and is_inv:
        census = order_census(grp)
        if G.is_cyclic():
            dihedral = census == dihedral_order_census(G.order)
    passed = not failures
    return PresentationReport(
        passed, len(set(elems)), is_auto, is_inv, tau_sq, conj_ok, associative, census, dihedral, failures, witnesses
    )


def tau_is_normal(grp: SemidirectGroup) -> bool:
    """Whether ``<tau>`` is normal in ``G'``, by computing the conjugacy class of ``tau``."""
    tau = grp.tau
    cls = {_mul(grp, _mul(grp, a, tau), grp.inverse(a)) for a in grp.elements()}
    return cls == {tau}


# ---------------------------------------------------------------------------
# basic cases


@dataclass(frozen=True)
class BasicFactor:
    N: int
    case: str
    m: int

    def to_json(self) -> dict:
        return {"N": self.N, "case": self.case, "m": self.m}


@dataclass(frozen=True)
class BasicCaseType:
    """One of the four basic cases, or ``Mixed`` with its coprime basic factors."""

    kind: str
    n: int
    m: int
    factors: tuple[BasicFactor, ...] = ()

    def recombine(self) -> int:
        if self.kind != MIXED:
            return self.m
        return crt([(f.m, f.N) for f in self.factors])[0]

    def to_json(self) -> dict:
        out = {"n": self.n, "m": self.m, "type": self.kind}
        if self.kind == MIXED:
            out["factors"] = [f.to_json() for f in self.factors]
        return out

    def __str__(self) -> str:
        if self.kind != MIXED:
            return self.kind
        return "Mixed[" + ", ".join(f"({f.N}, {f.case})" for f in self.factors) + "]"


def _basic_kind(n: int, m: int) -> Optional[str]:
    if m == -1 % n:
        return STANDARD
    if m == 1 % n:
        return DIHEDRAL_LIKE
    if n % 8 == 0 and m == 1 + n // 2:
        return TWISTED
    if n % 8 == 0 and m == n // 2 - 1:
        return ESOTERIC
    return None


def basic_case_type(n: int, m: int) -> BasicCaseType:
    m = _check_cyclic_involution(n, m)
    kind = _basic_kind(n, m)
    if kind is not None:
        return BasicCaseType(kind, n, m)
    c = classify_cyclic_involution(n, m)
    factors = []
    for N, r in ((c.N1, c.residues[0]), (c.N2, c.residues[1])):
        if N > 1:
            factors.append(BasicFactor(N, _basic_kind(N, r % N), r % N))
    return BasicCaseType(MIXED, n, m, tuple(factors))


def even_subgroup(grp: SemidirectGroup) -> SemidirectGroup:
    """The index-2 subgroup generated by ``g^2`` and ``tau`` for a cyclic base ``Z/n``.

    ``2Z/nZ`` is identified with ``Z/(n/2)`` via ``2x -> x``; the induced
    involution is ``m mod n/2``.
    """
    G = grp.base
    if not G.is_cyclic():
        raise UnsupportedShape(f"even subgroup needs a cyclic base, got {G}")
    n = G.order
    if n % 2:
        raise WrongParity(f"Z/{n} has odd order, there is no even subgroup")
    m = grp.M.matrix[0][0]
    return SemidirectGroup.cyclic(n // 2, m % (n // 2) if n > 2 else 0)
