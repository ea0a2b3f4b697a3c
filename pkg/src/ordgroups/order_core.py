"""Orders as comparison oracles, and a property harness shared by all of them.

Every concrete order in the package (Dehornoy, Magnus, Klein bottle, germs,
Z^n weight orders, Chehata, test-point) is adapted to :class:`OrderOracle`
so the checks below apply uniformly.  Checks never raise on a violation;
they collect witnesses into a :class:`Report`.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Callable, Iterator, Sequence

from .serialize import encode


class Cmp(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def label(self) -> str:
        return {-1: "Less", 0: "Equal", 1: "Greater"}[int(self)]

    def __neg__(self) -> "Cmp":
        return Cmp(-int(self))


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @property
    def label(self) -> str:
        return {-1: "Negative", 0: "Zero", 1: "Positive"}[int(self)]

    def __neg__(self) -> "Sign":
        return Sign(-int(self))


def cmp_from_sign(s: int) -> Cmp:
    """Comparison of ``u`` with ``v`` given the sign of ``u^-1 v``."""
    return Cmp(-int(s))


@dataclass(frozen=True)
class OrderOracle:
    name: str
    compare: Callable[[Any, Any], Cmp]
    multiply: Callable[[Any, Any], Any]
    invert: Callable[[Any], Any]
    identity: Any

    def sign(self, g) -> Sign:
        return Sign(int(self.compare(g, self.identity)))

    def sort(self, elements: Sequence) -> list:
        return sorted(elements, key=functools.cmp_to_key(lambda a, b: int(self.compare(a, b))))


@dataclass(frozen=True)
class SampleSet:
    elements: tuple
    seed: int = 0

    def __post_init__(self):
        if len(self.elements) == 0:
            raise ValueError("a sample set must be non-empty")

    @classmethod
    def generate(cls, draw: Callable[[random.Random], Any], size: int, seed: int) -> "SampleSet":
        rng = random.Random(seed)
        return cls(tuple(draw(rng) for _ in range(size)), seed)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple

    def to_json(self):
        return {"kind": self.kind, "witness": encode(list(self.witness))}


@dataclass
class Report:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def to_json(self):
        return {"checked": self.checked, "violations": [v.to_json() for v in self.violations]}


def triples(samples: SampleSet, exhaustive: bool = False) -> Iterator[tuple]:
    """Deterministic triples drawn from a sample.

    Exhaustive mode yields every ordered triple; otherwise one triple per
    element, partners chosen by a generator seeded from ``samples.seed``.
    """
    e = samples.elements
    if exhaustive:
        yield from itertools.product(e, repeat=3)
        return
    rng = random.Random(samples.seed ^ 0x5EED)
    n = len(e)
    for i in range(n):
        yield e[i], e[rng.randrange(n)], e[rng.randrange(n)]


def verify_left_invariance(oracle: OrderOracle, samples: SampleSet, exhaustive: bool = False) -> Report:
    report = Report()
    mul, cmp = oracle.multiply, oracle.compare
    for f, g, h in triples(samples, exhaustive):
        report.checked += 1
        if cmp(mul(f, g), mul(f, h)) != cmp(g, h):
            report.violations.append(Violation("left", (f, g, h)))
    return report


def verify_bi_invariance(oracle: OrderOracle, samples: SampleSet, exhaustive: bool = False) -> Report:
    """Left and right invariance; right failures are reported as kind ``"right"``."""
    report = Report()
    mul, cmp = oracle.multiply, oracle.compare
    for f, g, h in triples(samples, exhaustive):
        report.checked += 1
        c = cmp(g, h)
        if cmp(mul(f, g), mul(f, h)) != c:
            report.violations.append(Violation("left", (f, g, h)))
        if cmp(mul(g, f), mul(h, f)) != c:
            report.violations.append(Violation("right", (f, g, h)))
    return report


def verify_total_order(oracle: OrderOracle, samples: SampleSet, exhaustive: bool = False) -> Report:
    """Irreflexivity, antisymmetry, transitivity and cone trichotomy/closure."""
    report = Report()
    cmp = oracle.compare
    for g in samples:
        report.checked += 1
        if cmp(g, g) != Cmp.EQUAL:
            report.violations.append(Violation("reflexive", (g,)))
        s, s_inv = oracle.sign(g), oracle.sign(oracle.invert(g))
        if s_inv != -s:
            report.violations.append(Violation("trichotomy", (g,)))
    for f, g, h in triples(samples, exhaustive):
        report.checked += 1
        a, b = cmp(f, g), cmp(g, f)
        if a != -b:
            report.violations.append(Violation("antisymmetry", (f, g)))
        c, d = cmp(g, h), cmp(f, h)
        if a == c and a != Cmp.EQUAL and d != a:
            report.violations.append(Violation("transitivity", (f, g, h)))
        if (a == Cmp.EQUAL and d != c) or (c == Cmp.EQUAL and d != a):
            report.violations.append(Violation("transitivity", (f, g, h)))
        if oracle.sign(f) == Sign.POSITIVE and oracle.sign(g) == Sign.POSITIVE:
            if oracle.sign(oracle.multiply(f, g)) != Sign.POSITIVE:
                report.violations.append(Violation("closure", (f, g)))
    return report


@dataclass(frozen=True)
class ConradianResult:
    passed: bool
    witness: tuple | None = None
    checked: int = 0

    def to_json(self):
        if self.passed:
            return {"result": "Pass", "checked": self.checked}
        return {"result": "Counterexample", "witness": encode(list(self.witness)), "checked": self.checked}


def conradian_check(oracle: OrderOracle, samples: SampleSet | Sequence, exhaustive: bool = True) -> ConradianResult:
    """Test ``g < h g^2`` over pairs of positive elements; stop at the first failure.

    Exhaustive mode walks all ordered pairs of positives in sample order
    (first failure in that order is returned); otherwise each positive is
    paired with one seeded partner.
    """
    elements = tuple(samples)
    positives = [g for g in elements if oracle.sign(g) == Sign.POSITIVE]
    if exhaustive:
        pairs = itertools.product(positives, repeat=2)
    else:
        rng = random.Random(getattr(samples, "seed", 0) ^ 0xC0DE)
        pairs = ((g, positives[rng.randrange(len(positives))]) for g in positives)
    checked = 0
    mul = oracle.multiply
    for g, h in pairs:
        checked += 1
        if oracle.compare(g, mul(h, mul(g, g))) != Cmp.LESS:
            return ConradianResult(False, (g, h), checked)
    return ConradianResult(True, None, checked)


def rank_embedding_monotone(oracle: OrderOracle, ball: SampleSet | Sequence, multipliers: SampleSet | Sequence) -> Report:
    """Rank a finite ball by the order and check that left translations are monotone on ranks.

    Duplicates (under the oracle's equality) are collapsed before ranking.
    Products falling outside the ball are located by binary search with the
    oracle and skipped when absent.
    """
    ordered = []
    for g in oracle.sort(tuple(ball)):
        if not ordered or oracle.compare(ordered[-1], g) != Cmp.EQUAL:
            ordered.append(g)

    def locate(x):
        lo, hi = 0, len(ordered)
        while lo < hi:
            mid = (lo + hi) // 2
            c = oracle.compare(ordered[mid], x)
            if c == Cmp.EQUAL:
                return mid
            if c == Cmp.LESS:
                lo = mid + 1
            else:
                hi = mid
        return None

    report = Report()
    for m in multipliers:
        prev = None
        for rank, x in enumerate(ordered):
            image = locate(oracle.multiply(m, x))
            if image is None:
                continue
            report.checked += 1
            if prev is not None and image <= prev[1]:
                report.violations.append(Violation("monotone", (m, ordered[prev[0]], x)))
            prev = (rank, image)
    return report
