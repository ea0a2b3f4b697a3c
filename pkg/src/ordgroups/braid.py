"""Braid words in Artin generators, handle reduction and the Dehornoy order.

A braid on ``n`` strands is a tuple of nonzero integers: ``k > 0`` stands
for sigma_k and ``k < 0`` for its inverse, with ``1 <= |k| <= n - 1``.

Equality and comparison go through handle reduction only.  A sigma_i-handle
is a subword ``sigma_i^e v sigma_i^-e`` whose interior ``v`` uses only
generators of index greater than ``i``.  Reducing it drops the two ends and
replaces each ``sigma_{i+1}^d`` in ``v`` by ``sigma_{i+1}^-e sigma_i^d
sigma_{i+1}^e``.  We always reduce the handle with the leftmost right end;
that handle contains no other handle, so it is permitted in Dehornoy's
sense and the process terminates.  A reduced word is empty, or its lowest
generator occurs with a single sign, which gives the Dehornoy cone.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import BadStrandCount, IndexOutOfBand, MalformedWord, StepCapExceeded, StrandMismatch
from .order_core import Cmp, OrderOracle, Sign, cmp_from_sign

DEFAULT_STEP_CAP = 10**6


def free_reduce(letters: Iterable[int]) -> tuple:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BadStrandCount(f"need at least 2 strands, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise IndexOutOfBand(f"generator {x} not available in B_{self.strands}")

    def _check(self, other: "BraidWord"):
        if other.strands != self.strands:
            raise StrandMismatch(f"B_{self.strands} vs B_{other.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def reduced(self) -> "BraidWord":
        return BraidWord(self.strands, free_reduce(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def to_json(self):
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, obj) -> "BraidWord":
        return cls(int(obj["strands"]), tuple(obj["letters"]))


def sigma(n: int, *letters: int) -> BraidWord:
    return BraidWord(n, letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    letters = []
    for tok in text.split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise MalformedWord(f"not a signed integer: {tok!r}") from None
    if any(x == 0 for x in letters):
        raise MalformedWord("0 is not a generator")
    return BraidWord(strands, tuple(letters))


@dataclass(frozen=True)
class Permutation:
    """``images[i-1]`` is the end position of the strand starting at ``i``."""

    images: tuple

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def then(self, other: "Permutation") -> "Permutation":
        """Follow ``self`` and then ``other`` (left-to-right composite)."""
        return Permutation(tuple(other.images[p - 1] for p in self.images))

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.images, 1))

    def cycles(self) -> list:
        seen, out = set(), []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc, p = [], start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = self.images[p - 1]
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + "".join(map(str, c)) + ")" for c in cyc) or "()"

    def to_json(self):
        return list(self.images)


def permutation(b: BraidWord) -> Permutation:
    pos = list(range(1, b.strands + 1))  # pos[s-1]: where strand s currently sits
    where = list(range(b.strands + 1))   # where[p]: strand at position p
    for x in b.letters:
        i = abs(x)
        s, t = where[i], where[i + 1]
        where[i], where[i + 1] = t, s
        pos[s - 1], pos[t - 1] = i + 1, i
    return Permutation(tuple(pos))


class Kind(Enum):
    TRIVIAL = "Trivial"
    POSITIVE = "Positive"
    NEGATIVE = "Negative"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    index: int | None = None

    @property
    def sign(self) -> Sign:
        return {Kind.TRIVIAL: Sign.ZERO, Kind.POSITIVE: Sign.POSITIVE, Kind.NEGATIVE: Sign.NEGATIVE}[self.kind]

    def __str__(self):
        return self.kind.value if self.index is None else f"{self.kind.value}({self.index})"

    def to_json(self):
        return {"kind": self.kind.value, "index": self.index}


@dataclass(frozen=True)
class ReductionResult:
    word: BraidWord
    classification: Classification
    steps: int

    def to_json(self):
        return {"word": self.word.to_json(), "classification": self.classification.to_json(), "steps": self.steps}


def _first_handle(w: Sequence[int]):
    # stack: positions with strictly increasing |letter|, each the latest of its height
    stack: list[int] = []
    for k, x in enumerate(w):
        i = abs(x)
        while stack and abs(w[stack[-1]]) > i:
            stack.pop()
        if stack and abs(w[stack[-1]]) == i:
            if w[stack[-1]] == -x:
                return stack[-1], k
            stack.pop()
        stack.append(k)
    return None


def _reduce_handle(w: tuple, j: int, k: int) -> tuple:
    e = 1 if w[j] > 0 else -1
    i = abs(w[j])
    mid: list[int] = []
    for y in w[j + 1:k]:
        if abs(y) == i + 1:
            mid += (-e * (i + 1), (1 if y > 0 else -1) * i, e * (i + 1))
        else:
            mid.append(y)
    return free_reduce(w[:j] + tuple(mid) + w[k + 1:])


def classify_reduced(letters: Sequence[int]) -> Classification:
    """Classify a handle-free word by its lowest generator."""
    if not letters:
        return Classification(Kind.TRIVIAL)
    m = min(abs(x) for x in letters)
    signs = {x > 0 for x in letters if abs(x) == m}
    if len(signs) != 1:
        raise ValueError("word still contains a handle")
    return Classification(Kind.POSITIVE if signs.pop() else Kind.NEGATIVE, m)


def handle_reduce(b: BraidWord, step_cap: int = DEFAULT_STEP_CAP) -> ReductionResult:
    if step_cap <= 0:
        raise ValueError("step_cap must be positive")
    w = free_reduce(b.letters)
    steps = 0
    while True:
        h = _first_handle(w)
        if h is None:
            break
        if steps >= step_cap:
            raise StepCapExceeded(f"handle reduction exceeded {step_cap} steps")
        w = _reduce_handle(w, *h)
        steps += 1
    out = BraidWord(b.strands, w)
    if permutation(out) != permutation(b):
        raise AssertionError("handle reduction changed the permutation")
    return ReductionResult(out, classify_reduced(w), steps)


def classify(b: BraidWord, step_cap: int = DEFAULT_STEP_CAP) -> Classification:
    return handle_reduce(b, step_cap).classification


def braids_equal(u: BraidWord, v: BraidWord, step_cap: int = DEFAULT_STEP_CAP) -> bool:
    u._check(v)
    if permutation(u) != permutation(v):
        return False
    return classify(u * v.inverse(), step_cap).kind is Kind.TRIVIAL


def dehornoy_compare(u: BraidWord, v: BraidWord, step_cap: int = DEFAULT_STEP_CAP) -> Cmp:
    u._check(v)
    return cmp_from_sign(classify(u.inverse() * v, step_cap).sign)


def delta(n: int) -> BraidWord:
    """Half twist (s1 s2 ... s_{n-1})(s1 ... s_{n-2}) ... (s1 s2)(s1)."""
    if n < 2:
        raise BadStrandCount(f"need at least 2 strands, got {n}")
    letters = [k for top in range(n - 1, 0, -1) for k in range(1, top + 1)]
    return BraidWord(n, tuple(letters))


def is_pure(b: BraidWord) -> bool:
    return permutation(b).is_identity()


def closure_components(b: BraidWord) -> int:
    return len(permutation(b).cycles())


class MNVerdict(Enum):
    PRIME_NONTRIVIAL_KNOT = "PrimeNontrivialKnot"
    INCONCLUSIVE = "Inconclusive"
    NOT_A_KNOT = "NotAKnot"

    @property
    def label(self):
        return self.value


def mn_prime_test(b: BraidWord, step_cap: int = DEFAULT_STEP_CAP) -> MNVerdict:
    """Malyutin-Netsvetaev criterion: a knot closure with b > D^4 or b < D^-4 is prime and nontrivial."""
    if closure_components(b) != 1:
        return MNVerdict.NOT_A_KNOT
    d4 = delta(b.strands) ** 4
    if dehornoy_compare(d4, b, step_cap) == Cmp.LESS:
        return MNVerdict.PRIME_NONTRIVIAL_KNOT
    if dehornoy_compare(b, d4.inverse(), step_cap) == Cmp.LESS:
        return MNVerdict.PRIME_NONTRIVIAL_KNOT
    return MNVerdict.INCONCLUSIVE


def conjugate_compare(g: BraidWord, u: BraidWord, v: BraidWord, step_cap: int = DEFAULT_STEP_CAP) -> Cmp:
    """Compare under the conjugate order: u <_g v iff g u g^-1 < g v g^-1."""
    gi = g.inverse()
    return dehornoy_compare(g * u * gi, g * v * gi, step_cap)


def dehornoy_oracle(n: int, step_cap: int = DEFAULT_STEP_CAP) -> OrderOracle:
    return OrderOracle(
        name=f"dehornoy-B{n}",
        compare=lambda u, v: dehornoy_compare(u, v, step_cap),
        multiply=lambda u, v: (u * v).reduced(),
        invert=lambda u: u.inverse(),
        identity=BraidWord(n),
    )


def conjugate_oracle(g: BraidWord, step_cap: int = DEFAULT_STEP_CAP) -> OrderOracle:
    return OrderOracle(
        name=f"dehornoy-conjugate-B{g.strands}",
        compare=lambda u, v: conjugate_compare(g, u, v, step_cap),
        multiply=lambda u, v: (u * v).reduced(),
        invert=lambda u: u.inverse(),
        identity=BraidWord(g.strands),
    )


def random_braid(rng: random.Random, strands: int, max_len: int) -> BraidWord:
    """Uniform length in [0, max_len], uniform signed letters, then freely reduced."""
    length = rng.randint(0, max_len)
    gens = [s * k for k in range(1, strands) for s in (1, -1)]
    return BraidWord(strands, free_reduce(rng.choice(gens) for _ in range(length)))


def ball(strands: int, max_len: int) -> list:
    """All freely reduced words of length <= max_len, by length then lexicographically."""
    gens = sorted(k for i in range(1, strands) for k in (i, -i))
    out = [BraidWord(strands)]
    layer = [()]
    for _ in range(max_len):
        nxt = [w + (x,) for w in layer for x in gens if not w or w[-1] != -x]
        out.extend(BraidWord(strands, w) for w in nxt)
        layer = nxt
    return out


def find_conjugate_disagreement(strands: int = 3, max_len: int = 4, step_cap: int = DEFAULT_STEP_CAP):
    """First (g, u, v) in ball order with the conjugate order <_g disagreeing with < on (u, v)."""
    words = ball(strands, max_len)
    for g in words[1:]:
        for u, v in itertools.combinations(words, 2):
            if conjugate_compare(g, u, v, step_cap) != dehornoy_compare(u, v, step_cap):
                return g, u, v
    return None


# --- Burau matrices, used only as hash keys for B_3 bookkeeping ---------------
# Laurent polynomials in t are tuples of (exponent, coefficient), sorted.

def _padd(*polys) -> tuple:
    acc: dict[int, int] = {}
    for p in polys:
        for e, c in p:
            acc[e] = acc.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


def _pmul_term(p, exp: int, coef: int) -> tuple:
    return tuple((e + exp, c * coef) for e, c in p)


def burau_key(b: BraidWord) -> tuple:
    """Unreduced Burau matrix as a hashable tuple of columns.

    Faithful for three strands; for more strands equal keys still require
    confirmation with :func:`braids_equal`.
    """
    n = b.strands
    one = ((0, 1),)
    cols = [tuple(one if r == c else () for r in range(n)) for c in range(n)]
    for x in b.letters:
        cols = _burau_step(cols, x)
    return tuple(cols)


def _burau_step(cols: list, x: int) -> list:
    a, c = abs(x) - 1, abs(x)
    ca, cb = cols[a], cols[c]
    cols = list(cols)
    if x > 0:
        cols[a] = tuple(_padd(p, _pmul_term(p, 1, -1), q) for p, q in zip(ca, cb))
        cols[c] = tuple(_pmul_term(p, 1, 1) for p in ca)
    else:
        cols[a] = tuple(_pmul_term(q, -1, 1) for q in cb)
        cols[c] = tuple(_padd(p, q, _pmul_term(q, -1, -1)) for p, q in zip(ca, cb))
    return cols


# --- the Dubrovina-Dubrovin cone of B_3 ---------------------------------------

DD_GENERATORS = {"a": (1, 2), "b": (-2,)}  # a = s1 s2, b = s2^-1


@dataclass
class DDConeTable:
    """Products of at most ``max_factors`` Dubrovina-Dubrovin generators, keyed by Burau matrix."""

    max_factors: int
    entries: dict

    @classmethod
    def build(cls, max_factors: int) -> "DDConeTable":
        entries: dict = {}
        layer = [("", burau_key(BraidWord(3)))]
        for _ in range(max_factors):
            nxt = []
            for name, key in layer:
                for g in "ab":
                    cols = list(key)
                    for x in DD_GENERATORS[g]:
                        cols = _burau_step(cols, x)
                    k = tuple(cols)
                    nxt.append((name + g, k))
                    entries.setdefault(k, name + g)
            layer = nxt
        return cls(max_factors, entries)

    @staticmethod
    def expand(factors: str) -> BraidWord:
        return BraidWord(3, tuple(x for g in factors for x in DD_GENERATORS[g]))

    def lookup(self, b: BraidWord):
        """Factor string of a certified product equal to ``b``, or None."""
        factors = self.entries.get(burau_key(b))
        if factors is not None and braids_equal(self.expand(factors), b):
            return factors
        return None


@dataclass(frozen=True)
class DDVerdict:
    element: BraidWord
    positive: str | None
    negative: str | None

    @property
    def certified(self) -> bool:
        return (self.positive is None) != (self.negative is None)

    @property
    def both(self) -> bool:
        return self.positive is not None and self.negative is not None


def dd_cone_check(b: BraidWord, table: DDConeTable) -> DDVerdict:
    """Search for ``b`` and ``b^-1`` among bounded semigroup products of s1 s2 and s2^-1."""
    if b.strands != 3:
        raise StrandMismatch("the Dubrovina-Dubrovin cone lives in B_3")
    return DDVerdict(b, table.lookup(b), table.lookup(b.inverse()))
