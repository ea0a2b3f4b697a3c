"""Orders on small groups: Z^n by rational weights, the Klein bottle group, and affine germs.

Weight orders compare dot products with a sequence of rational weight
vectors lexicographically and break remaining ties coordinate by coordinate.
Every such order is a bi-order of Z^n.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InfeasibleConstraints, IsolatedOrder, ZeroConstraint
from .order_core import Cmp, OrderOracle, Sign, cmp_from_sign
from .serialize import rational_from_json, rational_to_json


def _cmp(a, b) -> Cmp:
    return Cmp((a > b) - (a < b))


def dot(w: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(w, v)), Fraction(0))


@dataclass(frozen=True)
class WeightOrder:
    dimension: int
    weights: tuple = ()
    tiebreak: tuple | None = None

    def __post_init__(self):
        ws = tuple(tuple(Fraction(c) for c in w) for w in self.weights)
        if any(len(w) != self.dimension for w in ws):
            raise DimensionMismatch("weight vector length differs from the dimension")
        tb = tuple(range(self.dimension)) if self.tiebreak is None else tuple(self.tiebreak)
        if sorted(tb) != list(range(self.dimension)):
            raise ValueError("tie-break must be a permutation of coordinate indices")
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "tiebreak", tb)

    @classmethod
    def lex(cls, n: int) -> "WeightOrder":
        return cls(n)

    def functionals(self) -> list:
        """The full list of linear forms compared in turn (weights, then tie-break axes)."""
        basis = [tuple(Fraction(int(i == t)) for i in range(self.dimension)) for t in self.tiebreak]
        return [w for w in self.weights if any(w)] + basis

    def to_json(self):
        return {
            "dimension": self.dimension,
            "weights": [[rational_to_json(c) for c in w] for w in self.weights],
            "tiebreak": list(self.tiebreak),
        }

    @classmethod
    def from_json(cls, obj) -> "WeightOrder":
        return cls(
            int(obj["dimension"]),
            tuple(tuple(rational_from_json(c) for c in w) for w in obj.get("weights", [])),
            tuple(obj["tiebreak"]) if obj.get("tiebreak") is not None else None,
        )


def zn_compare(u: Sequence[int], v: Sequence[int], order: WeightOrder) -> Cmp:
    if len(u) != order.dimension or len(v) != order.dimension:
        raise DimensionMismatch(f"expected vectors of length {order.dimension}")
    for w in order.weights:
        c = _cmp(dot(w, u), dot(w, v))
        if c:
            return c
    for t in order.tiebreak:
        c = _cmp(u[t], v[t])
        if c:
            return c
    return Cmp.EQUAL


def zn_sign(v: Sequence[int], order: WeightOrder) -> Sign:
    return Sign(int(zn_compare(v, [0] * len(v), order)))


def zn_oracle(order: WeightOrder) -> OrderOracle:
    n = order.dimension
    return OrderOracle(
        name=f"weights-Z{n}",
        compare=lambda u, v: zn_compare(u, v, order),
        multiply=lambda u, v: tuple(a + b for a, b in zip(u, v)),
        invert=lambda u: tuple(-a for a in u),
        identity=(0,) * n,
    )


def _box(n: int, radius: int):
    return itertools.product(range(-radius, radius + 1), repeat=n)


def sikora_perturb(order: WeightOrder, constraints: Iterable[Sequence[int]]):
    """A different order of Z^n keeping every constraint vector positive.

    The old order is lexicographic in its list of linear forms L_1, L_2, ....
    The new one puts v = L_1 + e L_2 + e^2 L_3 + ... first and then falls
    back to the old order, with e rational, halved from 2 until no constraint
    has a negative pairing with v.  Since v is not parallel to L_1 for
    n >= 2, some lattice vector changes sign; the first one in a growing box
    is returned as witness, normalised to be positive in the old order.
    """
    cons = [tuple(int(a) for a in c) for c in constraints]
    n = order.dimension
    for c in cons:
        if len(c) != n:
            raise DimensionMismatch("constraint length differs from the dimension")
        if not any(c):
            raise ZeroConstraint("the zero vector cannot be positive")
        if zn_sign(c, order) != Sign.POSITIVE:
            raise InfeasibleConstraints(f"{c} is not positive in the given order")
    if n < 2:
        raise IsolatedOrder("both orders of Z are isolated")

    forms = order.functionals()
    lead = forms[0]
    eps = Fraction(2)
    while True:
        v = tuple(sum(eps ** k * f[i] for k, f in enumerate(forms)) for i in range(n))
        parallel = all(v[i] * lead[j] == v[j] * lead[i] for i in range(n) for j in range(n))
        if not parallel and all(dot(v, c) >= 0 for c in cons):
            break
        eps /= 2
    new = WeightOrder(n, (v,) + order.weights, order.tiebreak)

    radius = 1
    while True:
        for x in _box(n, radius):
            if zn_sign(x, order) == Sign.POSITIVE and zn_sign(x, new) == Sign.NEGATIVE:
                return new, x
        radius += 1


def random_constraints(rng: random.Random, order: WeightOrder, count: int, bound: int = 5) -> list:
    """Nonzero vectors with entries in [-bound, bound], flipped to be positive in ``order``."""
    out = []
    while len(out) < count:
        v = tuple(rng.randint(-bound, bound) for _ in range(order.dimension))
        if any(v):
            out.append(v if zn_sign(v, order) == Sign.POSITIVE else tuple(-a for a in v))
    return out


# --- Klein bottle group <x, y | y^-1 x y = x^-1>, normal form x^m y^n ---------

@dataclass(frozen=True)
class KleinElement:
    m: int
    n: int

    def __mul__(self, other: "KleinElement") -> "KleinElement":
        return klein_mul(self, other)

    def to_json(self):
        return [self.m, self.n]


def klein_mul(a: KleinElement, b: KleinElement) -> KleinElement:
    return KleinElement(a.m + (-1) ** (a.n % 2) * b.m, a.n + b.n)


def klein_inv(a: KleinElement) -> KleinElement:
    return KleinElement(-((-1) ** (a.n % 2)) * a.m, -a.n)


def klein_sign(a: KleinElement) -> Sign:
    if a.n:
        return Sign(1 if a.n > 0 else -1)
    return Sign((a.m > 0) - (a.m < 0))


def klein_compare(a: KleinElement, b: KleinElement) -> Cmp:
    return cmp_from_sign(klein_sign(klein_mul(klein_inv(a), b)))


KLEIN_X = KleinElement(1, 0)
KLEIN_Y = KleinElement(0, 1)
KLEIN_ONE = KleinElement(0, 0)


def klein_oracle() -> OrderOracle:
    return OrderOracle("klein", klein_compare, klein_mul, klein_inv, KLEIN_ONE)


def klein_box(bound: int) -> list:
    return [KleinElement(m, n) for m in range(-bound, bound + 1) for n in range(-bound, bound + 1)]


# --- germs: matrices [[1, s], [0, r]] with r > 0 ------------------------------

@dataclass(frozen=True)
class GermElement:
    s: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "r", Fraction(self.r))
        if self.r <= 0:
            raise ValueError("r must be positive")

    def __mul__(self, other: "GermElement") -> "GermElement":
        return germ_mul(self, other)

    def to_json(self):
        return {"s": rational_to_json(self.s), "r": rational_to_json(self.r)}


GERM_ONE = GermElement(0, 1)


def germ_mul(a: GermElement, b: GermElement) -> GermElement:
    return GermElement(b.s + a.s * b.r, a.r * b.r)


def germ_inv(a: GermElement) -> GermElement:
    return GermElement(-a.s / a.r, 1 / a.r)


def germ_sign(a: GermElement) -> Sign:
    if a.r != 1:
        return Sign.POSITIVE if a.r > 1 else Sign.NEGATIVE
    return Sign((a.s > 0) - (a.s < 0))


def germ_compare(a: GermElement, b: GermElement) -> Cmp:
    return cmp_from_sign(germ_sign(germ_mul(germ_inv(a), b)))


def germ_oracle() -> OrderOracle:
    return OrderOracle("germ", germ_compare, germ_mul, germ_inv, GERM_ONE)


def random_germ(rng: random.Random, bound: int = 6) -> GermElement:
    """s a rational with |numerator|, denominator <= bound; r a positive rational, r = 1 a third of the time."""
    s = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    r = Fraction(1) if rng.random() < 1 / 3 else Fraction(rng.randint(1, bound), rng.randint(1, bound))
    return GermElement(s, r)
