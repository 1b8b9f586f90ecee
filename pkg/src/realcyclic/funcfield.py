"""Exact arithmetic in ``K = Q(i)(t1, ..., tk)`` and in ``K[y]/(y^2 - Phi)``.

The real structure ``tau`` conjugates coefficients and fixes the variables.
Polynomials are sparse dicts from exponent tuples (trailing zeros stripped) to
nonzero Gaussian rationals. Rational functions whose numerator and denominator
involve at most the single variable ``t1`` are kept reduced by a polynomial
gcd; multivariate ones are not, and equality always goes through
cross-multiplication.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Optional, Sequence, Union

from .errors import ParseError, UnsupportedShape

Rational = Union[int, Fraction]
Monomial = tuple[int, ...]


class GaussRational:
    """``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating-point complex numbers are not exact")
        return cls(x)

    def __add__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        o = GaussRational.coerce(other)
        if not o.im:
            return GaussRational(self.re * o.re, self.im * o.re)
        if not self.im:
            return GaussRational(self.re * o.re, self.re * o.im)
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        out, base = GaussRational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        return format_coefficient(self)


I = GaussRational(0, 1)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"({q})"


def format_coefficient(c: GaussRational) -> str:
    if not c.im:
        return str(c.re) if c.re.denominator == 1 else f"({c.re})"
    if not c.re:
        return f"-{_fmt_rational(-c.im)}i" if c.im < 0 else f"{_fmt_rational(c.im)}i"
    sign = "-" if c.im < 0 else "+"
    return f"({_fmt_rational(c.re)}{sign}{_fmt_rational(abs(c.im))}i)"


# ---------------------------------------------------------------------------
# polynomials


def _strip(e: Sequence[int]) -> Monomial:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _grlex_key(e: Monomial, k: int) -> tuple:
    return (sum(e), tuple(e) + (0,) * (k - len(e)))


class MultiPoly:
    """Sparse polynomial over ``Q(i)``; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = GaussRational.coerce(c)
            if c:
                e = _strip(e)
                clean[e] = clean[e] + c if e in clean else c
                if not clean[e]:
                    del clean[e]
        self.terms: dict[Monomial, GaussRational] = clean

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def var(cls, k: int = 1, power: int = 1) -> "MultiPoly":
        """The monomial ``t_k^power`` (variables are 1-based)."""
        if k < 1:
            raise ValueError("variables are numbered from 1")
        return cls({(0,) * (k - 1) + (power,): 1})

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(e == () for e in self.terms)

    def constant_term(self) -> GaussRational:
        return self.terms.get((), GaussRational(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, GaussRational]]:
        """Terms in decreasing graded-lexicographic order."""
        k = self.nvars
        return sorted(self.terms.items(), key=lambda it: _grlex_key(it[0], k), reverse=True)

    def leading(self) -> tuple[Monomial, GaussRational]:
        k = self.nvars
        e = max(self.terms, key=lambda e: _grlex_key(e, k))
        return e, self.terms[e]

    def __add__(self, other) -> "MultiPoly":
        other = _as_poly(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "MultiPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = _as_poly(other)
        if len(other.terms) < len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = _mono_mul(e1, e2)
                if e in out:
                    out[e] = out[e] + c1 * c2
                else:
                    out[e] = c1 * c2
        return MultiPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = GaussRational.coerce(c)
        if not c:
            return MultiPoly()
        return MultiPoly._raw({e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = MultiPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def conj(self) -> "MultiPoly":
        return MultiPoly._raw({e: c.conj() for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = _as_poly(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, point: Sequence) -> GaussRational:
        point = [GaussRational.coerce(x) for x in point]
        if len(point) < self.nvars:
            raise ValueError(f"need {self.nvars} coordinates, got {len(point)}")
        acc = GaussRational(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            acc = acc + v
        return acc

    def to_text(self, nvars: Optional[int] = None) -> str:
        return format_poly(self, self.nvars if nvars is None else nvars)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"


def _as_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction, GaussRational)):
        return MultiPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def _var_name(k: int, nvars: int) -> str:
    return "t" if nvars <= 1 else f"t{k}"


def format_poly(p: MultiPoly, nvars: int) -> str:
    if p.is_zero():
        return "0"
    out = []
    for idx, (e, c) in enumerate(p.sorted_terms()):
        mono = "*".join(
            _var_name(k + 1, nvars) + (f"^{x}" if x > 1 else "") for k, x in enumerate(e) if x
        )
        negative = (not c.im and c.re < 0) or (not c.re and c.im < 0)
        mag = -c if negative else c
        if mono:
            body = mono if mag == 1 else f"{format_coefficient(mag)}*{mono}"
        else:
            body = format_coefficient(mag)
        if idx == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


# -- univariate helpers on dense coefficient lists (low degree first) --------


def _is_univariate(p: MultiPoly) -> bool:
    return p.nvars <= 1


def _dense(p: MultiPoly) -> list[GaussRational]:
    if p.nvars > 1:
        raise UnsupportedShape("expected a polynomial in t1 only")
    d = p.degree()
    out = [GaussRational(0)] * (d + 1)
    for e, c in p.terms.items():
        out[e[0] if e else 0] = c
    return out


def _sparse(coeffs: Sequence[GaussRational]) -> MultiPoly:
    return MultiPoly._raw({((k,) if k else ()): c for k, c in enumerate(coeffs) if c})


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _divmod_dense(a: list, b: list) -> tuple[list, list]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = b[-1].inverse()
    q = [GaussRational(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] * inv
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] = a[i + shift] - f * c
        a.pop()
        _trim(a)
    return q, a


def _monic(a: list) -> list:
    inv = a[-1].inverse()
    return [c * inv for c in a]


# Gaussian integers as (re, im) int pairs, for the gcd below


def _zi_mul(a: tuple, b: tuple) -> tuple:
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _zi_divround(a: tuple, b: tuple) -> tuple:
    n = b[0] * b[0] + b[1] * b[1]
    x, y = _zi_mul(a, (b[0], -b[1]))
    return (2 * x + n) // (2 * n), (2 * y + n) // (2 * n)


def _zi_divexact(a: tuple, b: tuple) -> tuple:
    n = b[0] * b[0] + b[1] * b[1]
    x, y = _zi_mul(a, (b[0], -b[1]))
    return x // n, y // n


def _zi_gcd(a: tuple, b: tuple) -> tuple:
    while b != (0, 0):
        q = _zi_divround(a, b)
        qb = _zi_mul(q, b)
        a, b = b, (a[0] - qb[0], a[1] - qb[1])
    return a


def _to_zi(a: list) -> list:
    den = 1
    for c in a:
        den = lcm(den, c.re.denominator, c.im.denominator)
    return [(int(c.re * den), int(c.im * den)) for c in a]


def _primitive(a: list) -> list:
    g = (0, 0)
    for c in a:
        g = _zi_gcd(c, g)
        if g[0] * g[0] + g[1] * g[1] == 1:
            return a
    return [_zi_divexact(c, g) for c in a]


def _prem(a: list, b: list) -> list:
    # lc(b)^(deg a - deg b + 1) * a mod b, without leaving Z[i]
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b):
        la, shift = a[-1], len(a) - len(b)
        a = [_zi_mul(c, lb) for c in a]
        for k, c in enumerate(b):
            x = _zi_mul(la, c)
            y = a[k + shift]
            a[k + shift] = (y[0] - x[0], y[1] - x[1])
        a.pop()
        while a and a[-1] == (0, 0):
            a.pop()
    return a


def _gcd_dense(a: list, b: list) -> list:
    """Monic gcd by the primitive remainder sequence over ``Z[i]``."""
    a, b = _trim(list(a)), _trim(list(b))
    if not b or not a:
        g = a or b
        return _monic(g) if g else g
    if len(a) < len(b):
        a, b = b, a
    x, y = _primitive(_to_zi(a)), _primitive(_to_zi(b))
    while y:
        x, y = y, _prem(x, y)
        if y:
            y = _primitive(y)
    return _monic([GaussRational(re, im) for re, im in x])


def _derivative_dense(a: list) -> list:
    return _trim([c * k for k, c in enumerate(a)][1:])


def squarefree_decomposition(p: MultiPoly) -> tuple[GaussRational, list[MultiPoly]]:
    """Yun's algorithm: ``p = c * a_1 * a_2^2 * a_3^3 ...`` with monic square-free ``a_i``.

    Returns ``(c, [a_1, a_2, ...])``. Univariate input only.
    """
    a = _trim(_dense(p))
    if not a:
        raise ValueError("square-free decomposition of zero")
    c = a[-1]
    a = _monic(a)
    if len(a) == 1:
        return c, []
    factors = []
    da = _derivative_dense(a)
    g = _gcd_dense(a, da)
    b, _ = _divmod_dense(a, g)
    cc, _ = _divmod_dense(da, g)
    d = _trim([x - y for x, y in _zip_pad(cc, _derivative_dense(b))])
    while len(b) > 1:
        ai = _gcd_dense(b, d) if d else _monic(b)
        factors.append(_sparse(ai))
        b, _ = _divmod_dense(b, ai)
        cc, _ = _divmod_dense(d, ai) if d else ([], [])
        d = _trim([x - y for x, y in _zip_pad(cc, _derivative_dense(b))])
    while factors and factors[-1].is_const():
        factors.pop()
    return c, factors


def _zip_pad(a: list, b: list):
    z = GaussRational(0)
    for k in range(max(len(a), len(b))):
        yield (a[k] if k < len(a) else z), (b[k] if k < len(b) else z)


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """``num / den`` over ``Q(i)``. Equality is semantic (cross-multiplication)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, reduce: bool = True):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            num, den = _normalize(num, den)
        self.num: MultiPoly = num
        self.den: MultiPoly = den

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(MultiPoly.const(c))

    @classmethod
    def var(cls, k: int = 1) -> "RatFunc":
        return cls(MultiPoly.var(k))

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, str):
            return parse_ratfunc(x)
        return cls(_as_poly(x))

    @property
    def nvars(self) -> int:
        return max(self.num.nvars, self.den.nvars)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def __add__(self, other) -> "RatFunc":
        o = RatFunc.coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if _both_univariate(self, o):
            # Henrici: only gcd(num, g) can cancel, with g = gcd(den1, den2)
            g = _gcd_poly(self.den, o.den)
            d1, d2 = _exact_div(self.den, g), _exact_div(o.den, g)
            num = self.num * d2 + o.num * d1
            g2 = _gcd_poly(num, g)
            return RatFunc._lc_one(_exact_div(num, g2), d1 * _exact_div(o.den, g2))
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other) -> "RatFunc":
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        o = RatFunc.coerce(other)
        if _both_univariate(self, o):
            # inputs are reduced, so cross-cancelling is enough
            g1, g2 = _gcd_poly(self.num, o.den), _gcd_poly(o.num, self.den)
            return RatFunc._lc_one(
                _exact_div(self.num, g1) * _exact_div(o.num, g2), _exact_div(self.den, g2) * _exact_div(o.den, g1)
            )
        return RatFunc(self.num * o.num, self.den * o.den)

    @classmethod
    def _lc_one(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        if num.is_zero():
            return cls(num, MultiPoly.const(1), reduce=False)
        _, lc = den.leading()
        if lc != 1:
            inv = lc.inverse()
            num, den = num.scale(inv), den.scale(inv)
        return cls(num, den, reduce=False)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** -k
        return RatFunc(self.num**k, self.den**k, reduce=False)

    def conj(self) -> "RatFunc":
        return RatFunc(self.num.conj(), self.den.conj(), reduce=False)

    def __eq__(self, other):
        try:
            o = RatFunc.coerce(other)
        except (TypeError, ParseError):
            return NotImplemented
        return rf_eq(self, o)

    __hash__ = None  # equality is semantic, not structural

    def evaluate(self, point: Sequence) -> GaussRational:
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError("point is a pole")
        return self.num.evaluate(point) / d

    def to_text(self) -> str:
        k = self.nvars
        if self.den == MultiPoly.const(1):
            return self.num.to_text(k)
        num = self.num.to_text(k)
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = self.den.to_text(k)
        if len(self.den.terms) > 1 or not _is_simple(self.den):
            den = f"({den})"
        return f"{num}/{den}"

    def to_json(self) -> dict:
        k = self.nvars
        return {"num": self.num.to_text(k), "den": self.den.to_text(k)}

    @classmethod
    def from_json(cls, obj) -> "RatFunc":
        if isinstance(obj, str):
            return parse_ratfunc(obj)
        return parse_ratfunc(obj["num"]) / parse_ratfunc(obj.get("den", "1"))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RatFunc({self.to_text()!r})"


def _is_simple(p: MultiPoly) -> bool:
    # a single monomial with coefficient 1, printable without parentheses
    return len(p.terms) == 1 and next(iter(p.terms.values())) == 1


def _both_univariate(f: "RatFunc", g: "RatFunc") -> bool:
    return all(_is_univariate(p) for p in (f.num, f.den, g.num, g.den))


def _gcd_poly(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.is_const() and not a.is_zero() or b.is_const() and not b.is_zero():
        return MultiPoly.const(1)
    return _sparse(_gcd_dense(_dense(a), _dense(b)))


def _exact_div(a: MultiPoly, g: MultiPoly) -> MultiPoly:
    if g.is_const():
        return a if g == MultiPoly.const(1) else a.scale(g.leading()[1].inverse())
    return _sparse(_divmod_dense(_dense(a), _dense(g))[0])


def _normalize(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    if num.is_zero():
        return num, MultiPoly.const(1)
    if _is_univariate(num) and _is_univariate(den) and not den.is_const():
        g = _gcd_dense(_dense(num), _dense(den))
        if len(g) > 1:
            num = _sparse(_divmod_dense(_dense(num), g)[0])
            den = _sparse(_divmod_dense(_dense(den), g)[0])
    _, lc = den.leading()
    if lc != 1:
        inv = lc.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def rf_conj(f: RatFunc) -> RatFunc:
    """``tau(f)``: conjugate every coefficient, keep the variables."""
    return f.conj()


def rf_eq(f: RatFunc, g: RatFunc) -> bool:
    return f.num * g.den == g.num * f.den


def rf_is_real(f: RatFunc) -> bool:
    return rf_eq(rf_conj(f), f)


def rf_is_imaginary(f: RatFunc) -> bool:
    return rf_eq(rf_conj(f), -f)


def _used_vars(f: RatFunc) -> set[int]:
    return {k for p in (f.num, f.den) for e in p.terms for k, x in enumerate(e) if x}


def rf_is_square(f: RatFunc) -> bool:
    """Whether ``f`` is a square in ``R(t)`` (real ``f``) or ``C(t)`` (otherwise).

    Numerator and denominator are split by square-free decomposition; ``f`` is a
    square iff every odd-multiplicity part is constant and, for real ``f``, the
    ratio of leading coefficients is positive.
    """
    used = _used_vars(f)
    if len(used) > 1:
        raise UnsupportedShape("square test is only decided for a single variable; pass a factored form")
    if f.is_zero():
        return True
    if used and used != {0}:
        # a single variable other than t1: rename it
        k = next(iter(used))
        f = RatFunc(_rename_to_t1(f.num, k), _rename_to_t1(f.den, k))
    c_num, fac_num = squarefree_decomposition(f.num)
    c_den, fac_den = squarefree_decomposition(f.den)
    if any(not a.is_const() for a in fac_num[0::2] + fac_den[0::2]):
        return False
    c = c_num / c_den
    if rf_is_real(f):
        return c.re > 0
    return True


def _rename_to_t1(p: MultiPoly, k: int) -> MultiPoly:
    return MultiPoly({((e[k],) if len(e) > k else ()): c for e, c in p.terms.items()})


# ---------------------------------------------------------------------------
# quadratic extension


class QuadExtElement:
    """``a + b*y`` in ``K[y]/(y^2 - Phi)``."""

    __slots__ = ("a", "b", "phi")

    def __init__(self, a, b, phi):
        self.a = RatFunc.coerce(a)
        self.b = RatFunc.coerce(b)
        self.phi = RatFunc.coerce(phi)

    @classmethod
    def y(cls, phi) -> "QuadExtElement":
        return cls(0, 1, phi)

    def _lift(self, other) -> "QuadExtElement":
        if isinstance(other, QuadExtElement):
            if not rf_eq(self.phi, other.phi):
                raise ValueError("elements of different quadratic extensions")
            return other
        return QuadExtElement(other, 0, self.phi)

    def __add__(self, other):
        o = self._lift(other)
        return QuadExtElement(self.a + o.a, self.b + o.b, self.phi)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(-self.a, -self.b, self.phi)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return QuadExtElement(self.a * o.a + self.phi * self.b * o.b, self.a * o.b + self.b * o.a, self.phi)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out, base = QuadExtElement(1, 0, self.phi), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def norm(self) -> RatFunc:
        return self.a * self.a - self.phi * self.b * self.b

    def __eq__(self, other):
        if not isinstance(other, QuadExtElement):
            other = self._lift(other)
        return rf_eq(self.phi, other.phi) and rf_eq(self.a, other.a) and rf_eq(self.b, other.b)

    __hash__ = None

    def to_json(self) -> dict:
        return {"a": self.a.to_text(), "b": self.b.to_text(), "phi": self.phi.to_text()}

    def __str__(self):
        return f"({self.a}) + ({self.b})*y"


def quad_pow(C, D, Phi, N: int) -> tuple[RatFunc, RatFunc]:
    """``(C + yD)^N = Ev + Od*y`` with ``y^2 = Phi``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    p = QuadExtElement(C, D, Phi) ** N
    return p.a, p.b


def quad_pow_binomial(C, D, Phi, N: int) -> tuple[RatFunc, RatFunc]:
    """Closed binomial form of :func:`quad_pow`; slower, kept as a cross-check."""
    C, D, Phi = RatFunc.coerce(C), RatFunc.coerce(D), RatFunc.coerce(Phi)
    ev, od = RatFunc.const(0), RatFunc.const(0)
    for j in range(N // 2 + 1):
        ev = ev + RatFunc.const(comb(N, 2 * j)) * C ** (N - 2 * j) * D ** (2 * j) * Phi**j
    for j in range((N - 1) // 2 + 1):
        od = od + RatFunc.const(comb(N, 2 * j + 1)) * C ** (N - 2 * j - 1) * D ** (2 * j + 1) * Phi**j
    return ev, od


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(\d+)|(t\d*)|(i)|([-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r} at position {pos} in {text!r}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'} in {self.text!r}, got {tok!r}")
        self.pos += 1
        return tok

    def parse(self) -> RatFunc:
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return v

    def expr(self) -> RatFunc:
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def _starts_atom(self) -> bool:
        tok = self.peek()
        return tok is not None and (tok == "(" or tok == "i" or tok[0].isdigit() or tok[0] == "t")

    def term(self) -> RatFunc:
        v = self.unary()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                rhs = self.unary()
                if tok == "/":
                    if rhs.is_zero():
                        raise ParseError(f"division by zero in {self.text!r}")
                    v = v / rhs
                else:
                    v = v * rhs
            elif self._starts_atom():
                v = v * self.power()  # implicit product, as in "2i" or "3t"
            else:
                return v

    def unary(self) -> RatFunc:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            k = int(tok)
            if neg:
                if base.is_zero():
                    raise ParseError(f"negative power of zero in {self.text!r}")
                k = -k
            return base**k
        return base

    def atom(self) -> RatFunc:
        tok = self.take()
        if tok == "(":
            v = self.expr()
            self.take(")")
            return v
        if tok == "i":
            return RatFunc.const(I)
        if tok.isdigit():
            return RatFunc.const(int(tok))
        if tok[0] == "t":
            k = int(tok[1:]) if len(tok) > 1 else 1
            if k < 1:
                raise ParseError(f"variables are t1, t2, ...; got {tok!r}")
            return RatFunc.var(k)
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")


def parse_ratfunc(text: str) -> RatFunc:
    """Parse ``"((3/2)+2i)*t1^2*t2 - 1"``-style text; ``t`` is an alias of ``t1``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    return _Parser(text).parse()


def format_ratfunc(f: RatFunc) -> str:
    return f.to_text()


def t(k: int = 1) -> RatFunc:
    return RatFunc.var(k)


def const(c) -> RatFunc:
    return RatFunc.const(c)


def poly_from_coeffs(coeffs: Iterable, k: int = 1) -> RatFunc:
    """``sum c_j t_k^j`` from a low-degree-first coefficient list."""
    return RatFunc(MultiPoly({(0,) * (k - 1) + (j,): c for j, c in enumerate(coeffs)}))
