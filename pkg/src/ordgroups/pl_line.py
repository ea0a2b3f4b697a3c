"""Rational piecewise-linear homeomorphisms of [0, 1] fixing both endpoints.

A map is stored as its normalised breakpoint list: (0, 0) first, (1, 1)
last, both coordinates strictly increasing, and no breakpoint between two
segments of equal slope.  Normal form makes structural equality the group
equality.

Two orders are provided: Chehata's bi-order (sign of the first departure
from the diagonal) and the test-point left order, which compares values at
the rationals of (0, 1) in Calkin-Wilf order.
"""
from __future__ import annotations

import bisect
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import BadEndpoints, NotMonotone, OutOfDomain, ProbeCapExceeded
from .order_core import Cmp, OrderOracle, Sign, cmp_from_sign
from .serialize import rational_from_json, rational_to_json

ZERO, ONE = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class PLMap:
    breakpoints: tuple

    @property
    def xs(self) -> tuple:
        return tuple(p[0] for p in self.breakpoints)

    @property
    def ys(self) -> tuple:
        return tuple(p[1] for p in self.breakpoints)

    def slopes(self) -> list:
        bp = self.breakpoints
        return [(bp[i + 1][1] - bp[i][1]) / (bp[i + 1][0] - bp[i][0]) for i in range(len(bp) - 1)]

    def is_identity(self) -> bool:
        return len(self.breakpoints) == 2

    def __call__(self, x) -> Fraction:
        return pl_eval(self, x)

    def __matmul__(self, other: "PLMap") -> "PLMap":
        return pl_compose(self, other)

    def to_json(self):
        return {"breakpoints": [[rational_to_json(x), rational_to_json(y)] for x, y in self.breakpoints]}

    @classmethod
    def from_json(cls, obj) -> "PLMap":
        return pl_make([(rational_from_json(x), rational_from_json(y)) for x, y in obj["breakpoints"]])


IDENTITY = PLMap(((ZERO, ZERO), (ONE, ONE)))


def _normalise(points: list) -> tuple:
    out = [points[0]]
    for p in points[1:]:
        if len(out) >= 2:
            (x0, y0), (x1, y1) = out[-2], out[-1]
            if (y1 - y0) * (p[0] - x1) == (p[1] - y1) * (x1 - x0):
                out[-1] = p
                continue
        out.append(p)
    return tuple(out)


def pl_make(points: Iterable) -> PLMap:
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if len(pts) < 2 or pts[0] != (ZERO, ZERO) or pts[-1] != (ONE, ONE):
        raise BadEndpoints("breakpoints must start at (0, 0) and end at (1, 1)")
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if not (x0 < x1 and y0 < y1):
            raise NotMonotone("breakpoint coordinates must increase strictly")
    return PLMap(_normalise(pts))


def _interp(xs, ys, x):
    i = bisect.bisect_right(xs, x) - 1
    if i >= len(xs) - 1:
        return ys[-1]
    return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i])


def pl_eval(f: PLMap, x) -> Fraction:
    x = Fraction(x)
    if not ZERO <= x <= ONE:
        raise OutOfDomain(f"{x} is outside [0, 1]")
    return _interp(f.xs, f.ys, x)


def pl_invert(f: PLMap) -> PLMap:
    return PLMap(tuple((y, x) for x, y in f.breakpoints))


def pl_compose(f: PLMap, g: PLMap) -> PLMap:
    """x -> f(g(x)); breakpoints are those of g plus g-preimages of those of f."""
    gi = pl_invert(g)
    xs = sorted(set(g.xs) | {_interp(gi.xs, gi.ys, x) for x in f.xs})
    return PLMap(_normalise([(x, _interp(f.xs, f.ys, _interp(g.xs, g.ys, x))) for x in xs]))


def chehata_sign(f: PLMap) -> Sign:
    """Sign of the first departure of the graph from the diagonal."""
    if f.is_identity():
        return Sign.ZERO
    slopes = f.slopes()
    # in normal form a leading unit-slope segment is followed by a different slope
    s = slopes[1] if slopes[0] == 1 else slopes[0]
    return Sign.POSITIVE if s > 1 else Sign.NEGATIVE


def departure_point(f: PLMap) -> Fraction | None:
    """Largest x with f(t) = t on [0, x]; None for the identity."""
    if f.is_identity():
        return None
    return f.xs[1] if f.slopes()[0] == 1 else ZERO


def chehata_compare(f: PLMap, g: PLMap) -> Cmp:
    return cmp_from_sign(chehata_sign(pl_compose(pl_invert(f), g)))


def calkin_wilf() -> Iterator[Fraction]:
    """Rationals of (0, 1) in Calkin-Wilf order: 1/2, 1/3, 2/3, 1/4, 3/5, ..."""
    q = ONE
    while True:
        q = 1 / (2 * (q.numerator // q.denominator) - q + 1)
        if q < 1:
            yield q


DEFAULT_PROBE_CAP = 100_000


def testpoint_compare(f: PLMap, g: PLMap, enumeration=calkin_wilf, probe_cap: int = DEFAULT_PROBE_CAP) -> Cmp:
    """Compare f(x_i) with g(x_i) at the first enumerated point where they differ."""
    if probe_cap < 1:
        raise ValueError("probe_cap must be positive")
    if f == g:
        return Cmp.EQUAL
    for k, x in enumerate(enumeration()):
        if k >= probe_cap:
            break
        a, b = pl_eval(f, x), pl_eval(g, x)
        if a != b:
            return Cmp.LESS if a < b else Cmp.GREATER
    raise ProbeCapExceeded(f"distinct maps agree on the first {probe_cap} test points")


def chehata_oracle() -> OrderOracle:
    return OrderOracle("chehata", chehata_compare, pl_compose, pl_invert, IDENTITY)


def testpoint_oracle(probe_cap: int = DEFAULT_PROBE_CAP) -> OrderOracle:
    return OrderOracle(
        "testpoint",
        lambda f, g: testpoint_compare(f, g, probe_cap=probe_cap),
        pl_compose,
        pl_invert,
        IDENTITY,
    )


def _rational(rng: random.Random, max_den: int) -> Fraction:
    d = rng.randint(2, max_den)
    return Fraction(rng.randint(1, d - 1), d)


def random_pl(rng: random.Random, segments: int = 2, max_den: int = 8) -> PLMap:
    """Random map with ``segments`` pieces (fewer after normalisation); breakpoints have denominators <= max_den."""
    k = segments - 1
    xs, ys = set(), set()
    while len(xs) < k:
        xs.add(_rational(rng, max_den))
    while len(ys) < k:
        ys.add(_rational(rng, max_den))
    pts = [(ZERO, ZERO)] + list(zip(sorted(xs), sorted(ys))) + [(ONE, ONE)]
    return pl_make(pts)


def find_testpoint_right_violation(samples, limit: int | None = None):
    """First (f, g, h) in sample order with f < g but f.h and g.h ordered differently, or None."""
    count = 0
    for f in samples:
        for g in samples:
            c = testpoint_compare(f, g)
            if c == Cmp.EQUAL:
                continue
            for h in samples:
                count += 1
                if limit is not None and count > limit:
                    return None
                if testpoint_compare(pl_compose(f, h), pl_compose(g, h)) != c:
                    return f, g, h
    return None
