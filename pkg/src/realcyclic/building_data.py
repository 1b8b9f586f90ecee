"""Class-level building data of cyclic and abelian covers.

A cyclic cover of degree ``n`` is described by branch divisors ``D_1..D_{n-1}``
and a class ``L`` with ``n L = sum i D_i``. Divisor classes live in a
user-supplied model ``Z^r + Z/o_1 + ... + Z/o_s`` of the Picard group, with an
involution ``tau`` induced by the real structure.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .abelian import Element, FinAbGroup, GroupHom, check_enumerable, element_order, torsion_elements
from .errors import InputError, InvariantViolation, NotAnInvolution, TheoremViolation
from .involutions import _check_cyclic_involution

Class = tuple[int, ...]


# ---------------------------------------------------------------------------
# Picard model


@dataclass(frozen=True)
class PicModel:
    free_rank: int = 0
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_orders", tuple(int(o) for o in self.torsion_orders))
        if self.free_rank < 0:
            raise InvariantViolation("free rank must be >= 0")
        if any(o < 2 for o in self.torsion_orders):
            raise InvariantViolation(f"torsion orders must be >= 2, got {self.torsion_orders}")

    @property
    def rank(self) -> int:
        """Number of coordinates."""
        return self.free_rank + len(self.torsion_orders)

    @property
    def zero(self) -> Class:
        return (0,) * self.rank

    def reduce(self, x: Sequence[int]) -> Class:
        r = self.free_rank
        return tuple(x[:r]) + tuple(a % o for a, o in zip(x[r:], self.torsion_orders))

    def element(self, coords: Iterable[int]) -> Class:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise InputError(f"class {list(coords)} needs {self.rank} coordinates")
        return self.reduce(coords)

    def add(self, x: Class, y: Class) -> Class:
        return self.reduce([a + b for a, b in zip(x, y)])

    def sub(self, x: Class, y: Class) -> Class:
        return self.reduce([a - b for a, b in zip(x, y)])

    def neg(self, x: Class) -> Class:
        return self.reduce([-a for a in x])

    def scale(self, k: int, x: Class) -> Class:
        return self.reduce([k * a for a in x])

    def combine(self, terms: Iterable[tuple[int, Class]]) -> Class:
        """``sum k * x`` over ``(k, x)`` pairs."""
        acc = [0] * self.rank
        for k, x in terms:
            if k:
                for idx, a in enumerate(x):
                    acc[idx] += k * a
        return self.reduce(acc)

    def order(self, x: Class) -> Optional[int]:
        """Order of ``x``; None when it is infinite."""
        r = self.free_rank
        if any(x[:r]):
            return None
        out = 1
        for a, o in zip(x[r:], self.torsion_orders):
            out = lcm(out, o // gcd(o, a))
        return out

    def n_torsion(self, n: int) -> list[Class]:
        """All ``x`` with ``n x = 0``, lexicographically ordered."""
        return [(0,) * self.free_rank + t for t in torsion_elements(self.torsion_orders, n)]

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion_orders)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PicModel":
        return cls(int(obj.get("free_rank", 0)), tuple(obj.get("torsion", ())))


@dataclass(frozen=True)
class TauAction:
    """An involution of a :class:`PicModel` given by an integer matrix on coordinates."""

    model: PicModel
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        R, r = self.model.rank, self.model.free_rank
        rows = [list(row) for row in self.matrix]
        if len(rows) != R or any(len(row) != R for row in rows):
            raise InvariantViolation(f"tau must be a {R} x {R} matrix")
        orders = self.model.torsion_orders
        for i in range(r, R):
            rows[i] = [a % orders[i - r] for a in rows[i]]
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in rows))
        for j in range(r, R):
            oj = orders[j - r]
            if any(rows[i][j] for i in range(r)):
                raise InvariantViolation(f"tau sends torsion generator {j} to a class with free part")
            if any(oj * rows[i][j] % orders[i - r] for i in range(r, R)):
                raise InvariantViolation(f"tau is not well defined on torsion generator {j}")
        for j in range(R):
            e = tuple(int(i == j) for i in range(R))
            if self(self(e)) != self.model.reduce(e):
                raise NotAnInvolution("tau^2 is not the identity")

    @classmethod
    def identity(cls, model: PicModel) -> "TauAction":
        R = model.rank
        return cls(model, tuple(tuple(int(i == j) for j in range(R)) for i in range(R)))

    @classmethod
    def negation(cls, model: PicModel) -> "TauAction":
        R = model.rank
        return cls(model, tuple(tuple(-int(i == j) for j in range(R)) for i in range(R)))

    def __call__(self, x: Class) -> Class:
        return self.model.reduce([sum(a * b for a, b in zip(row, x)) for row in self.matrix])

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


@dataclass(frozen=True)
class Divisor:
    present: bool
    cls: Class

    def to_json(self) -> dict:
        return {"present": self.present, "class": list(self.cls)}


@dataclass(frozen=True)
class CyclicBuildingData:
    n: int
    m: int
    model: PicModel
    D: tuple[Divisor, ...]  # D[i - 1] is the divisor with monodromy index i
    L: Class
    tau: TauAction

    def __post_init__(self):
        if self.n < 2:
            raise InputError(f"n must be >= 2, got {self.n}")
        object.__setattr__(self, "m", _check_cyclic_involution(self.n, self.m))
        if self.tau.model != self.model:
            raise InputError("tau acts on a different model")
        if len(self.D) != self.n - 1:
            raise InvariantViolation(f"expected {self.n - 1} divisors, got {len(self.D)}")
        D = tuple(Divisor(d.present, self.model.element(d.cls)) for d in self.D)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "L", self.model.element(self.L))
        for i, d in enumerate(D, 1):
            if not d.present and any(d.cls):
                raise InvariantViolation(f"D_{i} is absent but has a nonzero class")
        lhs = self.model.scale(self.n, self.L)
        rhs = self.model.combine((i, d.cls) for i, d in enumerate(D, 1))
        if lhs != rhs:
            raise InvariantViolation(f"n L = {list(lhs)} differs from sum i D_i = {list(rhs)}")

    def divisor(self, i: int) -> Divisor:
        i %= self.n
        return Divisor(False, self.model.zero) if i == 0 else self.D[i - 1]

    @property
    def present(self) -> list[int]:
        return [i for i, d in enumerate(self.D, 1) if d.present]

    @classmethod
    def build(
        cls,
        n: int,
        m: int,
        model: PicModel,
        D: Mapping[int, Sequence[int]],
        L: Sequence[int],
        tau: Optional[TauAction] = None,
    ) -> "CyclicBuildingData":
        """Convenience constructor: every index in ``D`` is present, the rest absent."""
        divs = tuple(
            Divisor(True, tuple(D[i])) if i in D else Divisor(False, model.zero) for i in range(1, n)
        )
        return cls(n, m, model, divs, tuple(L), tau or TauAction.identity(model))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "pic": self.model.to_json(),
            "L": list(self.L),
            "D": {str(i): d.to_json() for i, d in enumerate(self.D, 1) if d.present},
            "tau": self.tau.to_json(),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "CyclicBuildingData":
        try:
            n, m = int(obj["n"]), int(obj["m"])
            model = PicModel.from_json(obj["pic"])
            L = tuple(obj["L"])
            rawD = obj.get("D", {})
            tau_m = obj.get("tau")
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed building data: {exc}") from exc
        tau = TauAction.identity(model) if tau_m is None else TauAction(model, tuple(tuple(r) for r in tau_m))
        divs = [Divisor(False, model.zero)] * (n - 1)
        for key, val in rawD.items():
            i = int(key)
            if not 1 <= i <= n - 1:
                raise InputError(f"divisor index {i} outside 1..{n - 1}")
            if isinstance(val, Mapping):
                present = bool(val.get("present", True))
                c = tuple(val.get("class", model.zero))
            else:
                present, c = True, tuple(val)
            divs[i - 1] = Divisor(present, c)
        return cls(n, m, model, tuple(divs), L, tau)


# ---------------------------------------------------------------------------
# epsilon calculus


def epsilon(n: int, i: int, j: int, h: int) -> int:
    """Carry bit ``([j i] + [h i] - [(j + h) i]) / n``."""
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    return ((j * i) % n + (h * i) % n - ((j + h) * i) % n) // n


@lru_cache(maxsize=None)
def epsilon_table(n: int) -> np.ndarray:
    """``E[i, j, h] = epsilon(n, i, j, h)`` for all residues."""
    r = np.arange(n)
    prod = (r[:, None] * r[None, :]) % n  # [i j]
    total = (r[:, None] + r[None, :]) % n  # j + h
    E = (prod[:, :, None] + prod[:, None, :] - prod[:, total]) // n
    return E.astype(np.int8)


def lchi_all(bd: CyclicBuildingData) -> list[Class]:
    """``L_0, ..., L_{n-1}`` by ``L_{j+1} = L_j + L - sum_i eps^i_{j,1} D_i``.

    Each ``L_j`` is checked against ``n L_j = sum_i [j i] D_i``.
    """
    n, P = bd.n, bd.model
    out = [P.zero]
    for j in range(n - 1):
        corr = P.combine((epsilon(n, i, j, 1), bd.D[i - 1].cls) for i in range(1, n))
        out.append(P.sub(P.add(out[-1], bd.L), corr))
    for j, Lj in enumerate(out):
        target = P.combine(((j * i) % n, bd.D[i - 1].cls) for i in range(1, n))
        if P.scale(n, Lj) != target:
            raise TheoremViolation(f"n L_{j} = {list(P.scale(n, Lj))} but sum [j i] D_i = {list(target)}")
    return out


@dataclass
class ConnectednessReport:
    h: int
    L_prime: Class
    order_of_L_prime: Optional[int]
    verdict: bool
    degenerate: bool

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "L_prime": list(self.L_prime),
            "order_of_L_prime": self.order_of_L_prime,
            "verdict": self.verdict,
            "degenerate": self.degenerate,
        }


def verify_connectedness(bd: CyclicBuildingData) -> ConnectednessReport:
    """``h = gcd(n, present indices)`` and ``L' = (n/h) L - sum (i/h) D_i`` must have order ``h``.

    With no divisor present ``h = n`` and ``L' = L``.
    """
    n, P = bd.n, bd.model
    h = n
    for i in bd.present:
        h = gcd(h, i)
    Lp = P.sub(P.scale(n // h, bd.L), P.combine((i // h, bd.D[i - 1].cls) for i in bd.present))
    order = P.order(Lp)
    degenerate = not bd.present and not any(bd.L)
    return ConnectednessReport(h, Lp, order, order == h, degenerate)


@dataclass
class RealityReport:
    divisor_reality: bool
    failing_indices: list[int]
    connectedness: ConnectednessReport
    mu: int
    eta: Class
    eta_is_n_torsion: bool
    lambda_solutions: list[Class]
    verdict: bool

    def to_json(self) -> dict:
        return {
            "divisor_reality": {"verdict": self.divisor_reality, "failing_indices": self.failing_indices},
            "connectedness": self.connectedness.to_json(),
            "mu": self.mu,
            "eta": list(self.eta),
            "eta_is_n_torsion": self.eta_is_n_torsion,
            "lambda_solutions": [list(x) for x in self.lambda_solutions],
            "verdict": self.verdict,
        }


def verify_real_building_data(bd: CyclicBuildingData) -> RealityReport:
    """Check the reality conditions on class level.

    Divisor reality asks ``tau(D_i) = D_{[-m i]}`` with matching presence. The
    obstruction ``eta = tau(L_1) - L_mu`` (``mu = [-m]``) is ``n``-torsion
    whenever divisor reality holds; it has to be of the form
    ``tau(lambda) - mu lambda``, and ``lambda`` is searched among the
    ``n``-torsion classes.
    """
    n, m, P, tau = bd.n, bd.m, bd.model, bd.tau
    failing = []
    for i in range(1, n):
        j = (-m * i) % n
        di, dj = bd.D[i - 1], bd.D[j - 1]
        if di.present != dj.present or tau(di.cls) != dj.cls:
            failing.append(i)
    reality = not failing
    conn = verify_connectedness(bd)
    mu = (-m) % n
    Ls = lchi_all(bd)
    eta = P.sub(tau(Ls[1]), Ls[mu])
    torsion = P.scale(n, eta) == P.zero
    if reality and not torsion:
        raise TheoremViolation(f"eta = {list(eta)} is not {n}-torsion although divisor reality holds")
    solutions: list[Class] = []
    if torsion:
        tors = P.n_torsion(n) if P.torsion_orders else [P.zero]
        check_enumerable(len(tors))
        solutions = [lam for lam in tors if P.sub(tau(lam), P.scale(mu, lam)) == eta]
    verdict = reality and conn.verdict and (not any(eta) or bool(solutions))
    return RealityReport(reality, failing, conn, mu, eta, torsion, solutions, verdict)


@dataclass
class EpsilonIdentityReport:
    n: int
    m: int
    tau_triples: int
    cocycle_quadruples: int
    passed: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "tau_triples": self.tau_triples,
            "cocycle_quadruples": self.cocycle_quadruples,
            "passed": self.passed,
        }


@lru_cache(maxsize=None)
def _cocycle_counterexample(n: int) -> Optional[tuple[int, int, int, int]]:
    # eps^i_{j,h} + eps^i_{j+h,k} = eps^i_{h,k} + eps^i_{j,h+k}; m does not enter
    E = epsilon_table(n).astype(np.int16)
    r = np.arange(n)
    s = (r[:, None] + r[None, :]) % n
    for i in range(n):
        Ei = E[i]
        lhs = Ei[:, :, None] + Ei[s][:, :, :]  # [j,h] + [j+h, k]
        rhs = Ei[None, :, :] + Ei[:, s].reshape(n, n, n)  # [h,k] + [j, h+k]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            j, h, k = (int(v) for v in bad[0])
            return i, j, h, k
    return None


def epsilon_identities(n: int, m: int) -> EpsilonIdentityReport:
    """Exhaustive check of tau-equivariance and the cocycle identity of the carry bits.

    tau-equivariance: ``eps^i_{[-m j],[-m h]} = eps^{[-m i]}_{j,h}`` for all
    ``i, j, h``. Cocycle: ``eps^i_{j,h} + eps^i_{j+h,k} = eps^i_{h,k} + eps^i_{j,h+k}``
    for all ``i, j, h, k``. Both are theorems, so a counterexample raises.
    """
    m = _check_cyclic_involution(n, m)
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    E = epsilon_table(n)
    pi = (-m * np.arange(n)) % n
    lhs = E[:, pi][:, :, pi]
    rhs = E[pi]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j, h = (int(v) for v in bad[0])
        raise TheoremViolation(f"tau-equivariance fails at n={n}, m={m}, (i, j, h)=({i}, {j}, {h})")
    cex = _cocycle_counterexample(n)
    if cex is not None:
        raise TheoremViolation(f"cocycle identity fails at n={n}, (i, j, h, k)={cex}")
    return EpsilonIdentityReport(n, m, n**3, n**4, True)


# ---------------------------------------------------------------------------
# abelian groups


def character_value(G: FinAbGroup, chi: Element, g: Element) -> int:
    """``chi(g)`` as a residue mod ``ord(g)``.

    Characters are identified with elements of ``G`` via the invariant-factor
    basis: ``chi(g) = sum chi_i g_i / d_i`` in ``Q/Z``, scaled by ``ord(g)``.
    """
    ng = element_order(G, g)
    return sum(c * (x * ng // d) for c, x, d in zip(chi, g, G.invariant_factors)) % ng


def epsilon_abelian(G: FinAbGroup, g: Element, chi: Element, xi: Element) -> int:
    g, chi, xi = G.element(g), G.element(chi), G.element(xi)
    if g == G.zero:
        raise InputError("epsilon is undefined for the zero group element (no branch divisor)")
    ng = element_order(G, g)
    a = character_value(G, chi, g)
    b = character_value(G, xi, g)
    c = character_value(G, G.add(chi, xi), g)
    return (a + b - c) // ng


def dual_action(G: FinAbGroup, M: GroupHom, chi: Element) -> Element:
    """``chi o M`` in the same identification of characters with elements."""
    d = G.invariant_factors
    return tuple(
        sum(chi[i] * M.matrix[i][j] * d[j] // d[i] for i in range(G.rank)) % d[j] for j in range(G.rank)
    )


@dataclass
class AbelianDataReport:
    cocycle: bool
    cocycle_failures: list[dict]
    divisor_reality: bool
    failing_elements: list[list[int]]
    discrepancies: list[dict]
    discrepancies_torsion: bool
    verdict: bool

    def to_json(self) -> dict:
        return {
            "cocycle": {"verdict": self.cocycle, "failures": self.cocycle_failures},
            "divisor_reality": {"verdict": self.divisor_reality, "failing_elements": self.failing_elements},
            "character_reality": {"all_torsion": self.discrepancies_torsion, "discrepancies": self.discrepancies},
            "verdict": self.verdict,
        }


def abelian_building_data_verify(
    G: FinAbGroup,
    M: GroupHom,
    D: Mapping[Element, Divisor],
    Lfamily: Mapping[Element, Class],
    tau: TauAction,
) -> AbelianDataReport:
    """Check ``L_{chi+xi} = L_chi + L_xi - sum_g eps^g_{chi,xi} D_g`` and the reality conditions.

    Reality: ``tau(D_g) = D_{-M g}`` and, with ``chi' = -chi o M``, the class
    ``tau(L_chi) - L_chi'`` must be killed by the exponent of ``G``; each such
    discrepancy is reported.
    """
    P = tau.model
    if M.source != G or M.target != G:
        raise InputError("M must be an endomorphism of G")
    if M @ M != GroupHom.identity(G):
        raise NotAnInvolution("M^2 is not the identity")
    check_enumerable(G.order**2)
    elems = list(G.elements())
    nonzero = [g for g in elems if g != G.zero]
    Dmap = {}
    for g in nonzero:
        d = D.get(g, Divisor(False, P.zero))
        d = Divisor(d.present, P.element(d.cls))
        if not d.present and any(d.cls):
            raise InvariantViolation(f"D_{list(g)} is absent but has a nonzero class")
        Dmap[g] = d
    extra = set(D) - set(nonzero)
    if extra:
        raise InputError(f"divisors indexed by non-elements or zero: {sorted(extra)}")
    L = {}
    for chi in elems:
        if chi not in Lfamily:
            if chi == G.zero:
                L[chi] = P.zero
                continue
            raise InputError(f"missing L for character {list(chi)}")
        L[chi] = P.element(Lfamily[chi])
    if any(L[G.zero]):
        raise InputError("L_0 must be zero")

    eps = {(g, chi, xi): epsilon_abelian(G, g, chi, xi) for g in nonzero for chi in elems for xi in elems}
    failures = []
    for chi, xi in itertools.product(elems, repeat=2):
        rhs = P.sub(
            P.add(L[chi], L[xi]),
            P.combine((eps[g, chi, xi], Dmap[g].cls) for g in nonzero),
        )
        if L[G.add(chi, xi)] != rhs:
            failures.append({"chi": list(chi), "xi": list(xi), "expected": list(rhs), "got": list(L[G.add(chi, xi)])})

    failing = []
    for g in nonzero:
        j = G.neg(M(g))
        if Dmap[g].present != Dmap[j].present or tau(Dmap[g].cls) != Dmap[j].cls:
            failing.append(list(g))

    e = G.exponent
    discrepancies = []
    all_torsion = True
    for chi in elems:
        chi2 = G.neg(dual_action(G, M, chi))
        delta = P.sub(tau(L[chi]), L[chi2])
        tors = P.scale(e, delta) == P.zero
        all_torsion &= tors
        discrepancies.append({"chi": list(chi), "chi_prime": list(chi2), "delta": list(delta), "torsion": tors})
    verdict = not failures and not failing and all_torsion
    return AbelianDataReport(not failures, failures, not failing, failing, discrepancies, all_torsion, verdict)


def abelian_data_from_json(obj: Mapping) -> tuple:
    """Parse ``{"group", "M", "pic", "tau", "D": [...], "L": [...]}``."""
    try:
        G = FinAbGroup.from_json(obj["group"])
        M = GroupHom.from_json(obj["M"], G)
        model = PicModel.from_json(obj["pic"])
        tau_m = obj.get("tau")
        tau = TauAction.identity(model) if tau_m is None else TauAction(model, tuple(tuple(r) for r in tau_m))
        D = {}
        for item in obj.get("D", []):
            g = G.element(item["g"])
            D[g] = Divisor(bool(item.get("present", True)), tuple(item.get("class", model.zero)))
        L = {G.element(item["chi"]): tuple(item["class"]) for item in obj.get("L", [])}
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed abelian building data: {exc}") from exc
    return G, M, D, L, tau


# ---------------------------------------------------------------------------
# random instances


def random_involution(model: PicModel, rng: random.Random) -> TauAction:
    """A random involution: free part by sign flips and swaps, torsion part by unit square roots of 1."""
    r, R = model.free_rank, model.rank
    Mx = [[0] * R for _ in range(R)]
    free = list(range(r))
    rng.shuffle(free)
    while free:
        a = free.pop()
        if free and rng.random() < 0.4:
            b = free.pop()
            Mx[a][b] = Mx[b][a] = 1
        else:
            Mx[a][a] = rng.choice((1, -1))
    for k, o in enumerate(model.torsion_orders):
        roots = [u for u in range(o) if (u * u) % o == 1 % o]
        Mx[r + k][r + k] = rng.choice(roots)
    return TauAction(model, tuple(tuple(row) for row in Mx))


def random_building_data(
    rng: random.Random,
    n: int,
    m: int,
    model: PicModel,
    tau: Optional[TauAction] = None,
    real: bool = True,
    bound: int = 3,
) -> CyclicBuildingData:
    """Random data satisfying ``n L = sum i D_i``.

    ``D_i = n a_i`` and ``L = sum i a_i + t`` with ``t`` an ``n``-torsion class.
    With ``real`` set, the ``a_i`` are chosen so that ``tau(D_i) = D_{[-m i]}``.
    """
    tau = tau or random_involution(model, rng)

    def rand_class() -> Class:
        return model.reduce(
            [rng.randint(-bound, bound) for _ in range(model.free_rank)]
            + [rng.randrange(o) for o in model.torsion_orders]
        )

    a: dict[int, Class] = {}
    present: dict[int, bool] = {}
    for i in range(1, n):
        if i in a:
            continue
        j = (-m * i) % n
        on = rng.random() < 0.6
        if not real:
            a[i], present[i] = rand_class(), on
            continue
        if i == j:
            b = rand_class()
            a[i] = model.add(b, tau(b))
        else:
            a[i] = rand_class()
            a[j] = tau(a[i])
        present[i] = present[j] = on
    divs = tuple(
        Divisor(True, model.scale(n, a[i])) if present[i] else Divisor(False, model.zero) for i in range(1, n)
    )
    tors = model.n_torsion(n) if model.torsion_orders else [model.zero]
    t = rng.choice(tors)
    L = model.add(model.combine((i, a[i]) for i in range(1, n) if present[i]), t)
    return CyclicBuildingData(n, m, model, divs, L, tau)
