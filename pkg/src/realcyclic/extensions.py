"""The four basic real cyclic extension types, the power criterion and fibre products.

Every builder takes free real parameters, computes the defining functions and
re-checks the identities they must satisfy exactly before returning. Galois
and conjugation actions on generators are kept as text labels: the roots of
unity involved are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Any, Optional, Union

from .errors import (
    CoprimalityError,
    DegenerateParameter,
    InputError,
    InvariantViolation,
    NotAFieldExtension,
    RealityError,
    TheoremViolation,
    WrongParity,
)
from .funcfield import (
    GaussRational,
    QuadExtElement,
    RatFunc,
    _used_vars,
    format_coefficient,
    parse_ratfunc,
    quad_pow,
    rf_conj,
    rf_eq,
    rf_is_imaginary,
    rf_is_real,
    rf_is_square,
    squarefree_decomposition,
)
from .group_ext import DIHEDRAL_LIKE, ESOTERIC, MIXED, STANDARD, TWISTED, basic_case_type
from .involutions import _check_cyclic_involution, crt

FuncLike = Union[RatFunc, str, int, Fraction, GaussRational]

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
INDETERMINATE = "indeterminate"
UNKNOWN = "unknown"

SQUARE_VERIFIED = "verified-not-square"
SQUARE_UNVERIFIED = "unverified"


def _rf(x: FuncLike) -> RatFunc:
    return RatFunc.coerce(x)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# power criterion


@dataclass(frozen=True)
class FactoredRatFunc:
    """``unit * prod s^e`` over formal, pairwise distinct primes ``s``."""

    factors: tuple[tuple[str, int], ...]
    unit: Optional[GaussRational] = None

    def __post_init__(self):
        facs = tuple((str(s), int(e)) for s, e in self.factors)
        object.__setattr__(self, "factors", facs)
        labels = [s for s, _ in facs]
        if len(set(labels)) != len(labels):
            raise InvariantViolation(f"prime labels must be distinct, got {labels}")
        if any(e == 0 for _, e in facs):
            raise InvariantViolation("exponents must be nonzero")
        if self.unit is not None:
            u = GaussRational.coerce(self.unit)
            if not u:
                raise InvariantViolation("unit must be nonzero")
            object.__setattr__(self, "unit", u)

    @property
    def exponents(self) -> list[int]:
        return [e for _, e in self.factors]

    def to_json(self) -> dict:
        out: dict[str, Any] = {"factors": [[s, e] for s, e in self.factors]}
        if self.unit is not None:
            out["unit"] = format_coefficient(self.unit)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FactoredRatFunc":
        unit = obj.get("unit")
        if unit is not None:
            u = _rf(str(unit))
            if not u.is_const():
                raise InputError(f"unit must be a constant, got {unit!r}")
            unit = u.num.constant_term() / u.den.constant_term()
        return cls(tuple((s, e) for s, e in obj.get("factors", [])), unit)


@dataclass(frozen=True)
class PowerVerdict:
    status: str
    h: Optional[int]
    n: int
    exponent_gcd: int
    note: str = ""

    @property
    def reducible(self) -> Optional[bool]:
        if self.status == REDUCIBLE:
            return True
        if self.status == IRREDUCIBLE:
            return False
        return None

    def to_json(self) -> dict:
        return {"status": self.status, "h": self.h, "n": self.n, "exponent_gcd": self.exponent_gcd, "note": self.note}

    def __str__(self):
        return f"{self.status}({self.h})" if self.status == REDUCIBLE else self.status


def _int_root(N: int, h: int) -> Optional[int]:
    if N < 0:
        return None
    r = round(N ** (1.0 / h)) if N < 2**1000 else int(N ** (1.0 / h))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**h == N:
            return c
    # fall back to bisection for huge inputs
    lo, hi = 0, 1 << (N.bit_length() // h + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**h < N:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**h == N else None


def gaussian_root(c, h: int) -> Optional[GaussRational]:
    """Some ``a`` in ``Q(i)`` with ``a^h = c``, or None.

    Clearing the denominator ``d`` of ``c``, ``(a d)^h = c d^h`` is a Gaussian
    integer, so ``a d`` is one too; its norm is pinned by ``N(a d)^h``.
    """
    c = GaussRational.coerce(c)
    if h < 1:
        raise ValueError("h must be >= 1")
    if not c:
        return GaussRational(0)
    d = c.re.denominator * c.im.denominator // gcd(c.re.denominator, c.im.denominator)
    x, y = int(c.re * d**h), int(c.im * d**h)
    R = _int_root(x * x + y * y, h)
    if R is None:
        return None
    target = GaussRational(x, y)
    for u in range(isqrt(R) + 1):
        v = isqrt(R - u * u)
        if u * u + v * v != R:
            continue
        for a in {(u, v), (-u, v), (u, -v), (-u, -v)}:
            cand = GaussRational(*a)
            if cand**h == target:
                return cand / d
    return None


def check_power_criterion(f: FactoredRatFunc, n: int, coefficient_field: str = "closure") -> PowerVerdict:
    """Decide whether ``z^n - f`` is reducible from the prime factorization of ``f``.

    ``z^n - f`` is reducible iff ``f = a^h`` for some ``h >= 2`` dividing ``n``.
    Over a factorial base this forces ``h | gcd(exponents)``. The constant
    factor is handled according to ``coefficient_field``:

    * ``"closure"``: constants have all roots (complex coefficients); a
      constant ``f`` is reported as indeterminate.
    * ``"gaussian"``: coefficients in ``Q(i)``; the unit (default 1) must also
      be an ``h``-th power in ``Q(i)``.

    The reported ``h`` is the largest admissible one.
    """
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    g = 0
    for e in f.exponents:
        g = gcd(g, e)
    candidates = [h for h in _divisors(n) if h >= 2 and g % h == 0]
    if coefficient_field == "closure":
        if not f.factors:
            return PowerVerdict(INDETERMINATE, None, n, g, "constant f: roots of constants exist in the coefficient closure")
    elif coefficient_field == "gaussian":
        unit = f.unit if f.unit is not None else GaussRational(1)
        candidates = [h for h in candidates if gaussian_root(unit, h) is not None]
    else:
        raise InputError(f"unknown coefficient field {coefficient_field!r}")
    if candidates:
        return PowerVerdict(REDUCIBLE, max(candidates), n, g)
    return PowerVerdict(IRREDUCIBLE, None, n, g)


def factored_form(f: RatFunc) -> FactoredRatFunc:
    """Square-free factored form of a univariate ``f``.

    The parts ``a_k`` of the square-free decomposition are products of
    distinct primes of multiplicity ``k``, so as far as exponent gcds go they
    can stand in for the primes themselves.
    """
    if len(_used_vars(f)) > 1:
        raise InputError("factored form is only computed for a single variable")
    if f.is_zero():
        raise DegenerateParameter("f = 0")
    c_num, num = squarefree_decomposition(f.num)
    c_den, den = squarefree_decomposition(f.den)
    facs = [(f"s{k}", k) for k, a in enumerate(num, 1) if not a.is_const()]
    facs += [(f"r{k}", -k) for k, a in enumerate(den, 1) if not a.is_const()]
    return FactoredRatFunc(tuple(facs), c_num / c_den)


def _auto_criterion(f: RatFunc, n: int, f_factored: Optional[FactoredRatFunc]) -> PowerVerdict:
    if f_factored is not None:
        return check_power_criterion(f_factored, n)
    if len(_used_vars(f)) <= 1:
        return check_power_criterion(factored_form(f), n)
    return PowerVerdict(UNKNOWN, None, n, 0, "multivariate f without a factored form")


def _square_status(Phi: RatFunc, Phi_factored: Optional[FactoredRatFunc] = None) -> str:
    """``verified-not-square`` or ``unverified``; raises if ``Phi`` is a square."""
    if Phi_factored is not None:
        odd = any(e % 2 for e in Phi_factored.exponents)
        negative = Phi_factored.unit is not None and Phi_factored.unit.is_real() and Phi_factored.unit.re < 0
        if not odd and not negative:
            raise NotAFieldExtension("Phi is a square (all exponents even)")
        return SQUARE_VERIFIED
    if len(_used_vars(Phi)) <= 1:
        if rf_is_square(Phi):
            raise NotAFieldExtension(f"Phi = {Phi} is a square")
        return SQUARE_VERIFIED
    return SQUARE_UNVERIFIED


# ---------------------------------------------------------------------------
# records


def _texts(**funcs: RatFunc) -> dict[str, str]:
    return {k: v.to_text() for k, v in funcs.items()}


@dataclass
class StandardData:
    n: int
    f: RatFunc
    criterion: PowerVerdict
    actions: dict[str, str] = field(default_factory=lambda: {"g(z)": "zeta*z", "tau(z)": "z"})

    case = STANDARD

    @property
    def m(self) -> int:
        return -1 % self.n

    @property
    def reducible(self) -> Optional[bool]:
        return self.criterion.reducible

    @property
    def identities(self) -> dict[str, bool]:
        return {"f_real": True}

    def to_json(self) -> dict:
        return {
            "case": "standard",
            "n": self.n,
            "m": self.m,
            "relation": "z^n = f",
            "functions": _texts(f=self.f),
            "identities": self.identities,
            "criterion": self.criterion.to_json(),
            "reducible": self.reducible,
            "actions": self.actions,
        }


@dataclass
class DihedralLikeData:
    n: int
    p: RatFunc
    q: RatFunc
    phi: RatFunc
    F: RatFunc
    psi: RatFunc
    lam: Optional[RatFunc]
    identities: dict[str, bool]
    degenerate: bool
    criterion: PowerVerdict
    actions: dict[str, str] = field(
        default_factory=lambda: {"g(z)": "zeta*z", "g(w)": "zeta^-1*w", "tau(z)": "w", "tau(w)": "z"}
    )

    case = DIHEDRAL_LIKE

    @property
    def m(self) -> int:
        return 1 % self.n

    @property
    def f(self) -> RatFunc:
        """``f = (F + i psi) / 2``, with ``z^n = f``."""
        return (self.F + self.psi * GaussRational(0, 1)) * Fraction(1, 2)

    def to_json(self) -> dict:
        funcs = _texts(p=self.p, q=self.q, phi=self.phi, F=self.F, psi=self.psi, f=self.f)
        if self.lam is not None:
            funcs["lambda"] = self.lam.to_text()
        return {
            "case": "dihedral_like",
            "n": self.n,
            "m": self.m,
            "relation": "z*w = phi, z^n + w^n = F",
            "functions": funcs,
            "identities": self.identities,
            "degenerate": self.degenerate,
            "criterion": self.criterion.to_json(),
            "actions": self.actions,
        }


@dataclass
class TwistedData:
    n: int
    N: int
    q_exp: int
    p: RatFunc
    q: RatFunc
    Phi: RatFunc
    A: RatFunc
    B: RatFunc
    identities: dict[str, bool]
    phi_not_square: str
    actions: dict[str, str] = field(
        default_factory=lambda: {
            "phi^2": "Phi",
            "F": "A*phi",
            "psi": "B*phi",
            "g(z)": "zeta*z",
            "g(w)": "-zeta^-1*w",
            "tau(z)": "w",
        }
    )

    case = TWISTED

    @property
    def m(self) -> int:
        return 1 + self.N

    def to_json(self) -> dict:
        return {
            "case": "twisted",
            "n": self.n,
            "N": self.N,
            "m": self.m,
            "q_exp": self.q_exp,
            "relation": "z*w = phi, z^N + w^N = F, phi^2 = Phi",
            "functions": _texts(p=self.p, q=self.q, Phi=self.Phi, A=self.A, B=self.B),
            "identities": self.identities,
            "phi_not_square": self.phi_not_square,
            "actions": self.actions,
        }


@dataclass
class EsotericData:
    n: int
    N: int
    theta: RatFunc
    Phi: RatFunc
    C: RatFunc
    D: RatFunc
    Ev: RatFunc
    Od: RatFunc
    beta: RatFunc
    Psi: RatFunc
    identities: dict[str, bool]
    phi_not_square: str
    actions: dict[str, str] = field(
        default_factory=lambda: {
            "y^2": "Phi",
            "W^N": "f",
            "u": "W*(C + y*D)",
            "g(W)": "zeta*u",
            "g(u)": "zeta*W",
            "g(y)": "-y",
            "tau(W)": "W",
            "tau(u)": "-u",
            "tau(y)": "y",
        }
    )

    case = ESOTERIC

    @property
    def m(self) -> int:
        return self.N - 1

    @property
    def f(self) -> QuadExtElement:
        return QuadExtElement(self.beta, Fraction(1, 2), self.Phi)

    def to_json(self) -> dict:
        return {
            "case": "esoteric",
            "n": self.n,
            "N": self.N,
            "m": self.m,
            "relation": "W^N = f = y/2 + beta, y^2 = Phi",
            "functions": _texts(
                theta=self.theta, Phi=self.Phi, C=self.C, D=self.D, Ev=self.Ev, Od=self.Od, beta=self.beta, Psi=self.Psi
            ),
            "f": {"a": self.beta.to_text(), "b": "(1/2)"},
            "identities": self.identities,
            "phi_not_square": self.phi_not_square,
            "actions": self.actions,
        }


ExtensionData = Union[StandardData, DihedralLikeData, TwistedData, EsotericData]


def _require(identities: dict[str, bool], what: str) -> None:
    failed = [k for k, ok in identities.items() if not ok]
    if failed:
        raise TheoremViolation(f"{what}: identities {failed} fail")


# ---------------------------------------------------------------------------
# builders


def build_standard(n: int, f: FuncLike, f_factored: Optional[FactoredRatFunc] = None) -> StandardData:
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    f = _rf(f)
    if f.is_zero():
        raise DegenerateParameter("f = 0 does not define an extension")
    if not rf_is_real(f):
        raise RealityError(f"f = {f} is not real")
    if n == 1:
        return StandardData(n, f, PowerVerdict(IRREDUCIBLE, None, n, 0, "degree 1"))
    return StandardData(n, f, _auto_criterion(f, n, f_factored))


def build_dihedral_like(n: int, p: FuncLike, q: FuncLike) -> DihedralLikeData:
    """``F, phi, psi`` with ``4 phi^n = psi^2 + F^2`` from two real functions.

    Odd ``n = 2m+1``: ``phi = (p^2+q^2)/4``, ``F = phi^m p``, ``psi = phi^m q``.
    Even ``n = 2m+2``: ``lam = 8p/(q^2 - 4p^2)``, ``phi = 1 + lam p``,
    ``F = 2 phi^m``, ``psi = lam q phi^m``.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    p, q = _rf(p), _rf(q)
    for name, v in (("p", p), ("q", q)):
        if not rf_is_real(v):
            raise RealityError(f"{name} = {v} is not real")
    lam = None
    if n % 2:
        m = (n - 1) // 2
        phi = (p * p + q * q) * Fraction(1, 4)
        if phi.is_zero():
            raise DegenerateParameter("p^2 + q^2 = 0")
        F, psi = phi**m * p, phi**m * q
    else:
        m = (n - 2) // 2
        den = q * q - 4 * p * p
        if den.is_zero():
            raise DegenerateParameter("q^2 - 4p^2 = 0, lambda has a zero denominator")
        lam = 8 * p / den
        phi = 1 + lam * p
        if phi.is_zero():
            raise DegenerateParameter("phi = 1 + lambda*p vanishes")
        F, psi = 2 * phi**m, lam * q * phi**m
    identities = {"4phi^n = psi^2 + F^2": rf_eq(4 * phi**n, psi * psi + F * F)}
    data = DihedralLikeData(n, p, q, phi, F, psi, lam, identities, psi.is_zero(), PowerVerdict(UNKNOWN, None, n, 0))
    f = data.f
    identities["quadratic"] = rf_eq(f * f - F * f + phi**n, RatFunc.const(0))
    identities["phi_real"] = rf_is_real(phi)
    identities["F_real"] = rf_is_real(F)
    identities["psi_real"] = rf_is_real(psi)
    _require(identities, "dihedral-like construction")
    if n >= 2:
        data.criterion = _auto_criterion(f, n, None)
    return data


def build_twisted(
    n: int, p: FuncLike, q: FuncLike, Phi_factored: Optional[FactoredRatFunc] = None
) -> TwistedData:
    """``A, B, Phi`` with ``A^2 + B^2 = 4 Phi^(N/2 - 1)``, ``N = n/2``.

    ``Phi = (p^2+q^2)/4``, ``A = Phi^e p``, ``B = Phi^e q`` where ``N/2 - 1 = 2e + 1``.
    """
    if n % 8:
        raise WrongParity(f"the twisted case needs 8 | n, got n = {n}")
    N = n // 2
    if (N // 2 - 1) % 2 != 1:
        raise TheoremViolation(f"N/2 - 1 = {N // 2 - 1} should be odd")
    e = (N // 2 - 2) // 2
    p, q = _rf(p), _rf(q)
    for name, v in (("p", p), ("q", q)):
        if not rf_is_real(v):
            raise RealityError(f"{name} = {v} is not real")
    Phi = (p * p + q * q) * Fraction(1, 4)
    if Phi.is_zero():
        raise DegenerateParameter("p^2 + q^2 = 0")
    status = _square_status(Phi, Phi_factored)
    A, B = Phi**e * p, Phi**e * q
    identities = {
        "A^2 + B^2 = 4Phi^(N/2-1)": rf_eq(A * A + B * B, 4 * Phi ** (N // 2 - 1)),
        "Phi_real": rf_is_real(Phi),
        "A_real": rf_is_real(A),
        "B_real": rf_is_real(B),
    }
    _require(identities, "twisted construction")
    return TwistedData(n, N, e, p, q, Phi, A, B, identities, status)


def build_esoteric(n: int, theta: FuncLike, Phi_factored: Optional[FactoredRatFunc] = None) -> EsotericData:
    """Everything in the esoteric case from one non-real ``theta``.

    ``Phi = theta tau(theta)``, ``D = -2/(theta - tau theta)``,
    ``C = -(tau theta + theta)/(theta - tau theta)``, ``(Ev, Od) = (C + yD)^N``,
    ``beta = -Phi Od / (2 (Ev + 1))`` and ``f = y/2 + beta``.
    """
    if n % 8:
        raise WrongParity(f"the esoteric case needs 8 | n, got n = {n}")
    N = n // 2
    theta = _rf(theta)
    ctheta = rf_conj(theta)
    diff = theta - ctheta
    if diff.is_zero():
        raise DegenerateParameter(f"theta = {theta} is real")
    Phi = theta * ctheta
    status = _square_status(Phi, Phi_factored)
    D = -2 / diff
    C = -(ctheta + theta) / diff
    Ev, Od = quad_pow(C, D, Phi, N)
    ev1 = Ev + 1
    if ev1.is_zero():
        raise DegenerateParameter("Ev = -1, beta has a pole")
    half = Fraction(1, 2)
    beta = -(Phi * Od * half) / ev1
    Psi = Phi * Fraction(1, 4) - beta * beta
    y = QuadExtElement.y(Phi)
    lhs = y * half - beta
    rhs = (y * half + beta) * QuadExtElement(Ev, Od, Phi)
    identities = {
        "C_imaginary": rf_is_imaginary(C),
        "D_imaginary": rf_is_imaginary(D),
        "C^2 - Phi D^2 = 1": rf_eq(C * C - Phi * D * D, RatFunc.const(1)),
        "Ev^2 - Phi Od^2 = 1": rf_eq(Ev * Ev - Phi * Od * Od, RatFunc.const(1)),
        "-beta = Phi Od / (2(Ev + 1))": rf_eq(-beta, half * Phi * Od / ev1),
        "beta^2 (1 + Ev) = Phi (Ev - 1) / 4": rf_eq(beta * beta * (1 + Ev), Phi * Fraction(1, 4) * (Ev - 1)),
        "y/2 - beta = (y/2 + beta)(C + yD)^N": lhs == rhs,
        "Phi_real": rf_is_real(Phi),
        "beta_real": rf_is_real(beta),
        "Psi_real": rf_is_real(Psi),
    }
    _require(identities, "esoteric construction")
    return EsotericData(n, N, theta, Phi, C, D, Ev, Od, beta, Psi, identities, status)


# ---------------------------------------------------------------------------
# fibre products and decomposition


@dataclass(frozen=True)
class BasicCover:
    """A degree-``n`` real cyclic cover known only through its involution ``m``."""

    n: int
    m: int

    @property
    def case(self) -> str:
        t = basic_case_type(self.n, self.m)
        return t.kind


def _degree_and_m(e) -> tuple[int, int, str]:
    if isinstance(e, BasicCover):
        return e.n, e.m % e.n, e.case
    return e.n, e.m % e.n, e.case


@dataclass
class FibreProductData:
    n: int
    m: int
    type: str
    first: Any
    second: Any
    defining_function: Optional[RatFunc] = None
    generator: Optional[str] = None

    def to_json(self) -> dict:
        def part(e):
            if hasattr(e, "to_json"):
                return e.to_json()
            return {"n": e.n, "m": e.m % e.n, "case": e.case}

        out = {
            "n": self.n,
            "m": self.m,
            "type": self.type,
            "case_type": basic_case_type(self.n, self.m).to_json(),
            "first": part(self.first),
            "second": part(self.second),
        }
        if self.defining_function is not None:
            out["defining_function"] = self.defining_function.to_text()
            out["generator"] = self.generator
            out["relation"] = f"({self.generator})^{self.n} = f^m*phi^n"
        return out


def fibre_product(e1, e2) -> FibreProductData:
    """Compositum of two real cyclic extensions of coprime degrees.

    For two standard covers ``z^n = f`` and ``x^m = phi`` the result is
    standard again, generated by ``z x`` with ``(z x)^(nm) = f^m phi^n``.
    Otherwise the involution of the product is the CRT combination.
    """
    n, m1, c1 = _degree_and_m(e1)
    k, m2, c2 = _degree_and_m(e2)
    if gcd(n, k) != 1:
        raise CoprimalityError(f"degrees {n} and {k} are not coprime")
    m, nk = crt([(m1, n), (m2, k)])
    if isinstance(e1, StandardData) and isinstance(e2, StandardData):
        f = e1.f**k * e2.f**n
        return FibreProductData(nk, m, "Standard-pair", e1, e2, f, "z*x")
    return FibreProductData(nk, m, f"{c1}x{c2}", e1, e2)


@dataclass(frozen=True)
class BasicComponent:
    N: int
    case: str
    m: int
    parameters: str

    def to_json(self) -> dict:
        return {"N": self.N, "case": self.case, "m": self.m, "parameters": self.parameters}


PARAMETERS = {
    STANDARD: "one real function f (z^N = f)",
    DIHEDRAL_LIKE: "two real functions p, q",
    TWISTED: "two real functions p, q with (p^2 + q^2)/4 not a square",
    ESOTERIC: "one non-real function theta whose norm theta*tau(theta) is not a square",
}


def decompose_to_basic(n: int, m: int) -> list[BasicComponent]:
    """The (at most two) coprime basic factors of the cyclic cover ``(n, m)``."""
    m = _check_cyclic_involution(n, m)
    if n == 1:
        return []
    t = basic_case_type(n, m)
    if t.kind != MIXED:
        return [BasicComponent(n, t.kind, m, PARAMETERS[t.kind])]
    return [BasicComponent(f.N, f.case, f.m, PARAMETERS[f.case]) for f in t.factors]


# ---------------------------------------------------------------------------
# JSON front door


def _func_arg(obj: dict, key: str) -> RatFunc:
    if key not in obj:
        raise InputError(f"missing field {key!r}")
    v = obj[key]
    if isinstance(v, dict):
        return RatFunc.from_json(v)
    return parse_ratfunc(str(v))


def build_from_json(obj: dict) -> ExtensionData:
    """Dispatch ``{"case": ..., "n": ..., <parameters>}`` to the right builder."""
    case = str(obj.get("case", "")).lower().replace("-", "_")
    if "n" not in obj:
        raise InputError("missing field 'n'")
    n = int(obj["n"])
    factored = obj.get("factored")
    factored = FactoredRatFunc.from_json(factored) if factored is not None else None
    if case == "standard":
        return build_standard(n, _func_arg(obj, "f"), factored)
    if case in ("dihedral_like", "dihedrallike"):
        return build_dihedral_like(n, _func_arg(obj, "p"), _func_arg(obj, "q"))
    if case == "twisted":
        return build_twisted(n, _func_arg(obj, "p"), _func_arg(obj, "q"), factored)
    if case == "esoteric":
        return build_esoteric(n, _func_arg(obj, "theta"), factored)
    raise InputError(f"unknown case {obj.get('case')!r}; expected standard, dihedral_like, twisted or esoteric")
