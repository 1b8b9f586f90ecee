"""Finite abelian groups in invariant-factor form, homomorphisms, subgroups.

A group is ``Z/d_1 x ... x Z/d_r`` with ``d_1 | d_2 | ... | d_r``; elements are
coordinate tuples with ``0 <= x_i < d_i``. A homomorphism is an integer matrix
acting on coordinate columns. A subgroup is stored through the Hermite normal
form of its preimage lattice in ``Z^r``, which makes subgroup equality a tuple
comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Optional, Sequence

from . import intmat
from .errors import InputError, InvariantViolation, SizeLimitExceeded

Element = tuple[int, ...]

#: enumeration-backed operations refuse groups larger than this
ENUMERATION_LIMIT = 2**20


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def check_enumerable(size: int, limit: int = ENUMERATION_LIMIT) -> None:
    if size > limit:
        raise SizeLimitExceeded(f"refusing to enumerate {size} elements (limit {limit})")


@dataclass(frozen=True)
class FinAbGroup:
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        d = tuple(int(x) for x in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", d)
        if any(x < 2 for x in d):
            raise InvariantViolation(f"invariant factors must be >= 2, got {d}")
        if any(d[i + 1] % d[i] for i in range(len(d) - 1)):
            raise InvariantViolation(f"invariant factors must form a divisibility chain, got {d}")

    @classmethod
    def cyclic(cls, n: int) -> "FinAbGroup":
        return cls((n,) if n > 1 else ())

    @classmethod
    def from_relations(cls, relations: Sequence[Sequence[int]], ngens: int) -> tuple["FinAbGroup", "intmat.Matrix", "intmat.Matrix"]:
        """Normalize the presentation <x_1..x_k | rows of ``relations``>.

        Returns ``(G, P, B)``: ``P`` (rank(G) x k) sends generator coordinates to
        invariant-factor coordinates, and row ``i`` of ``B`` expresses the i-th
        invariant-factor generator as a combination of the x_j.
        """
        if not relations:
            relations = []
        S, _, V, Vinv = intmat.smith_normal_form_full(relations, ngens)
        diag = [S[i][i] if i < len(S) else 0 for i in range(ngens)]
        if any(s == 0 for s in diag):
            raise InputError("presentation defines an infinite group")
        keep = [i for i, s in enumerate(diag) if s != 1]
        G = cls(tuple(diag[i] for i in keep))
        P = [[V[j][i] % diag[i] for j in range(ngens)] for i in keep]
        B = [Vinv[i] for i in keep]
        return G, P, B

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "FinAbGroup":
        """The group Z/o_1 x ... x Z/o_k in normal form."""
        rel = [[o if i == j else 0 for j in range(len(orders))] for i, o in enumerate(orders)]
        return cls.from_relations(rel, len(orders))[0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def is_cyclic(self) -> bool:
        return self.rank <= 1

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    def element(self, coords: Iterable[int]) -> Element:
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise InputError(f"element {coords} has wrong length for {self}")
        return tuple(c % d for c, d in zip(coords, self.invariant_factors))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x: Element) -> Element:
        return tuple(-a % d for a, d in zip(x, self.invariant_factors))

    def scale(self, k: int, x: Element) -> Element:
        return tuple(k * a % d for a, d in zip(x, self.invariant_factors))

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic order."""
        check_enumerable(self.order)
        return itertools.product(*(range(d) for d in self.invariant_factors))

    def relation_rows(self) -> intmat.Matrix:
        d = self.invariant_factors
        return [[d[i] if i == j else 0 for j in range(self.rank)] for i in range(self.rank)]

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, obj: dict) -> "FinAbGroup":
        return cls(tuple(obj["invariant_factors"]))

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def element_order(G: FinAbGroup, x: Element) -> int:
    """Least k >= 1 with k*x = 0."""
    return reduce(lcm, (d // gcd(d, a) for a, d in zip(x, G.invariant_factors)), 1)


def primary_decompose(G: FinAbGroup) -> dict[int, list[int]]:
    """Prime-power cyclic orders, keyed by prime (ascending), exponents ascending."""
    parts: dict[int, list[int]] = {}
    for d in G.invariant_factors:
        for p, e in _factorize(d).items():
            parts.setdefault(p, []).append(p**e)
    return {p: sorted(parts[p]) for p in sorted(parts)}


def torsion_elements(moduli: Sequence[int], n: int) -> list[Element]:
    """All x in Z/m_1 x ... x Z/m_k with n*x = 0, lexicographically."""
    steps = [m // gcd(m, n) for m in moduli]
    check_enumerable(prod(gcd(m, n) for m in moduli))
    return list(itertools.product(*(range(0, m, s) for m, s in zip(moduli, steps))))


def n_torsion(G: FinAbGroup, n: int) -> list[Element]:
    if n < 1:
        raise InputError("n must be >= 1")
    return torsion_elements(G.invariant_factors, n)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism ``source -> target`` given by a (target.rank x source.rank) matrix.

    Entries of row i are stored reduced mod the i-th target invariant factor.
    """

    source: FinAbGroup
    target: FinAbGroup
    matrix: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        rows, cols = self.target.rank, self.source.rank
        M = [list(r) for r in self.matrix]
        if rows == 0:
            M = []
        if len(M) != rows or any(len(r) != cols for r in M):
            raise InvariantViolation(f"matrix shape must be {rows} x {cols}")
        dt = self.target.invariant_factors
        M = tuple(tuple(int(a) % dt[i] for a in M[i]) for i in range(rows))
        object.__setattr__(self, "matrix", M)
        for j, dj in enumerate(self.source.invariant_factors):
            if any(dj * M[i][j] % dt[i] for i in range(rows)):
                raise InvariantViolation(
                    f"column {j} is not killed by the source order {dj}; map is not well defined"
                )

    @classmethod
    def identity(cls, G: FinAbGroup) -> "GroupHom":
        return cls.scalar(G, 1)

    @classmethod
    def scalar(cls, G: FinAbGroup, k: int) -> "GroupHom":
        return cls(G, G, tuple(tuple(k if i == j else 0 for j in range(G.rank)) for i in range(G.rank)))

    @classmethod
    def zero(cls, source: FinAbGroup, target: FinAbGroup) -> "GroupHom":
        return cls(source, target, tuple((0,) * source.rank for _ in range(target.rank)))

    @classmethod
    def from_images(cls, source: FinAbGroup, target: FinAbGroup, images: Sequence[Element]) -> "GroupHom":
        """The map sending the j-th generator of ``source`` to ``images[j]``."""
        return cls(source, target, tuple(tuple(img[i] for img in images) for i in range(target.rank)))

    def __call__(self, x: Element) -> Element:
        if len(x) != self.source.rank:
            raise InputError(f"element {tuple(x)} has wrong length for {self.source}")
        return tuple(sum(a * b for a, b in zip(row, x)) % d for row, d in zip(self.matrix, self.target.invariant_factors))

    def column(self, j: int) -> Element:
        return tuple(row[j] for row in self.matrix)

    def __matmul__(self, other: "GroupHom") -> "GroupHom":
        """Composition ``self o other``."""
        if other.target != self.source:
            raise InputError("composition of incompatible maps")
        return GroupHom.from_images(other.source, self.target, [self(other.column(j)) for j in range(other.source.rank)])

    def __add__(self, other: "GroupHom") -> "GroupHom":
        self._same_shape(other)
        return GroupHom(self.source, self.target, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def __sub__(self, other: "GroupHom") -> "GroupHom":
        self._same_shape(other)
        return GroupHom(self.source, self.target, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def __neg__(self) -> "GroupHom":
        return GroupHom(self.source, self.target, tuple(tuple(-a for a in r) for r in self.matrix))

    def _same_shape(self, other: "GroupHom") -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise InputError("maps have different source/target")

    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def kernel(self) -> "Subgroup":
        # x with A x in D_target Z^t: project the integer kernel of [A | D_t]
        r, t = self.source.rank, self.target.rank
        aug = [list(self.matrix[i]) + [self.target.invariant_factors[i] if k == i else 0 for k in range(t)] for i in range(t)]
        gens = [v[:r] for v in intmat.integer_kernel(aug, r + t)] if t else intmat.identity(r)
        return Subgroup.generated(self.source, gens)

    def image(self) -> "Subgroup":
        return Subgroup.generated(self.target, [self.column(j) for j in range(self.source.rank)])

    def is_injective(self) -> bool:
        return self.kernel().is_trivial()

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.matrix]}

    @classmethod
    def from_json(cls, obj: dict, source: FinAbGroup, target: Optional[FinAbGroup] = None) -> "GroupHom":
        return cls(source, target or source, tuple(tuple(r) for r in obj["matrix"]))


def hom_kernel_image(h: GroupHom) -> tuple[list[Element], list[Element]]:
    """Generating sets of the kernel (in the source) and image (in the target)."""
    return h.kernel().generators, h.image().generators


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``ambient``; ``basis`` is the HNF of its preimage lattice."""

    ambient: FinAbGroup
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def generated(cls, G: FinAbGroup, gens: Iterable[Sequence[int]]) -> "Subgroup":
        rows = [list(g) for g in gens] + G.relation_rows()
        for g in rows:
            if len(g) != G.rank:
                raise InputError(f"generator {tuple(g)} has wrong length for {G}")
        H = intmat.hermite_rows(rows, G.rank)
        return cls(G, tuple(tuple(r) for r in H))

    @classmethod
    def whole(cls, G: FinAbGroup) -> "Subgroup":
        return cls.generated(G, intmat.identity(G.rank))

    @classmethod
    def trivial(cls, G: FinAbGroup) -> "Subgroup":
        return cls.generated(G, [])

    @classmethod
    def torsion_of(cls, G: FinAbGroup, n: int) -> "Subgroup":
        d = G.invariant_factors
        return cls.generated(G, [[d[i] // gcd(d[i], n) if i == j else 0 for j in range(G.rank)] for i in range(G.rank)])

    @cached_property
    def generators(self) -> list[Element]:
        """Canonical generating set: the echelon rows that are nonzero in G."""
        out = []
        for row in self.basis:
            g = self.ambient.element(row)
            if any(g):
                out.append(g)
        return out

    @property
    def order(self) -> int:
        return self.ambient.order // prod(self.basis[i][i] for i in range(self.ambient.rank))

    def is_trivial(self) -> bool:
        return self.order == 1

    def __contains__(self, x: Sequence[int]) -> bool:
        v = list(x)
        for i, row in enumerate(self.basis):
            p = row[i]
            if v[i] % p:
                return False
            q = v[i] // p
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def elements(self) -> set[Element]:
        check_enumerable(self.order)
        G = self.ambient
        S = {G.zero}
        for g in self.generators:
            k = element_order(G, g)
            multiples = [G.scale(j, g) for j in range(k)]
            S = {G.add(s, m) for s in S for m in multiples}
        return S

    def sorted_elements(self) -> list[Element]:
        return sorted(self.elements())

    def __add__(self, other: "Subgroup") -> "Subgroup":
        return Subgroup.generated(self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subgroup") -> "Subgroup":
        r = self.ambient.rank
        A, B = self.basis, other.basis
        # a.A = b.B  <=>  [A^T | -B^T] (a, b) = 0
        system = [[A[k][j] for k in range(r)] + [-B[k][j] for k in range(r)] for j in range(r)]
        kern = intmat.integer_kernel(system, 2 * r)
        gens = [[sum(v[k] * A[k][j] for k in range(r)) for j in range(r)] for v in kern]
        return Subgroup.generated(self.ambient, gens)

    def torsion(self, n: int) -> "Subgroup":
        return self.intersect(Subgroup.torsion_of(self.ambient, n))

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return all(g in other for g in self.basis)

    def structure(self) -> tuple[FinAbGroup, list[Element]]:
        """Isomorphism type and the images in G of its invariant-factor generators."""
        G = self.ambient
        gens = self.generators
        s = len(gens)
        if s == 0:
            return FinAbGroup(()), []
        cols = [list(g) for g in gens]
        aug = [[cols[k][i] for k in range(s)] + [G.invariant_factors[i] if j == i else 0 for j in range(G.rank)] for i in range(G.rank)]
        rels = [v[:s] for v in intmat.integer_kernel(aug, s + G.rank)]
        H, _, B = FinAbGroup.from_relations(rels, s)
        basis = [G.element(sum(b[k] * gens[k][i] for k in range(s)) for i in range(G.rank)) for b in B]
        return H, basis

    def coordinates(self, x: Element) -> Element:
        """Coordinates of ``x`` in the invariant-factor basis from ``structure()``."""
        H, basis = self.structure()
        if x not in self:
            raise InputError(f"{x} is not in the subgroup")
        A = [[b[i] for b in basis] for i in range(self.ambient.rank)]
        sol = intmat.solve_congruences(A, list(x), list(self.ambient.invariant_factors), len(basis))
        assert sol is not None
        return H.element(sol)

    def to_json(self) -> list[list[int]]:
        return [list(g) for g in self.generators]

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">" if self.generators else "<0>"


def groups_of_order(n: int) -> list[FinAbGroup]:
    """Every isomorphism type of abelian group of order ``n``."""

    def chains(rest: int, base: int) -> Iterator[tuple[int, ...]]:
        # chains d_1 | ... | d_r with product ``rest`` and base | d_1
        if rest == 1:
            yield ()
            return
        for d in range(max(base, 2), rest + 1, base):
            if rest % d == 0:
                for tail in chains(rest // d, d):
                    yield (d,) + tail

    return [FinAbGroup(c) for c in sorted(chains(n, 1), key=lambda c: (len(c), c))]


def all_groups_up_to(N: int) -> list[FinAbGroup]:
    return [G for n in range(1, N + 1) for G in groups_of_order(n)]
