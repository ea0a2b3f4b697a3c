"""Free groups, the Magnus expansion and the bi-order it induces.

x_i maps to 1 + X_i in noncommuting power series truncated at a total
degree cap.  A nonidentity word is positive when the first nonzero
coefficient of (expansion - 1) is positive, monomials ordered by degree and
then lexicographically (X_1 < X_2 < ...).  The least degree of a nonzero
term of (expansion - 1) is the lower central series depth of the word.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import CapTooSmall, DegreeCeilingExceeded, IdentityWord, InputError, MalformedWord
from .order_core import Cmp, OrderOracle, Sign, cmp_from_sign

DEGREE_CEILING = 64


def free_reduce(letters: Iterable[int]) -> tuple:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple = ()

    def __post_init__(self):
        if self.rank < 1:
            raise InputError("rank must be at least 1")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise MalformedWord(f"letter {x} outside rank {self.rank}")
        object.__setattr__(self, "letters", free_reduce(letters))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if other.rank != self.rank:
            raise InputError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(k))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __str__(self):
        return " ".join(map(str, self.letters))

    def to_json(self):
        return {"rank": self.rank, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, obj) -> "FreeWord":
        return cls(int(obj["rank"]), tuple(obj["letters"]))


def word(rank: int, *letters: int) -> FreeWord:
    return FreeWord(rank, letters)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


@dataclass(frozen=True)
class MagnusSeries:
    rank: int
    cap: int
    terms: dict  # monomial (tuple of variable indices) -> nonzero int

    def __eq__(self, other):
        return isinstance(other, MagnusSeries) and (self.rank, self.cap, self.terms) == (other.rank, other.cap, other.terms)

    def __hash__(self):
        return hash((self.rank, self.cap, tuple(sorted(self.terms.items()))))

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def leading_term(self):
        """First nonconstant term in monomial order, or None if the series is 1 + O(cap+1)."""
        for mono, coef in self.sorted_terms():
            if mono:
                return mono, coef
        return None

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        cap = min(self.cap, other.cap)
        out: dict = {}
        for m1, c1 in self.terms.items():
            room = cap - len(m1)
            if room < 0:
                continue
            for m2, c2 in other.terms.items():
                if len(m2) <= room:
                    m = m1 + m2
                    out[m] = out.get(m, 0) + c1 * c2
        return MagnusSeries(self.rank, cap, {m: c for m, c in out.items() if c})

    def to_json(self):
        return {"cap": self.cap, "terms": [{"mono": list(m), "coef": c} for m, c in self.sorted_terms()]}


def _times_letter(terms: dict, x: int, cap: int) -> dict:
    # x_i -> 1 + X_i ; x_i^-1 -> 1 - X_i + X_i^2 - ...
    i = abs(x)
    out: dict = {}
    for mono, c in terms.items():
        top = cap - len(mono) if x < 0 else min(1, cap - len(mono))
        for k in range(top + 1):
            m = mono + (i,) * k
            out[m] = out.get(m, 0) + (c if x > 0 or k % 2 == 0 else -c)
    return {m: c for m, c in out.items() if c}


def magnus_expand(w: FreeWord, cap: int) -> MagnusSeries:
    if cap < 1:
        raise CapTooSmall("cap must be at least 1")
    terms = {(): 1}
    for x in w.letters:
        terms = _times_letter(terms, x, cap)
    return MagnusSeries(w.rank, cap, terms)


def _caps(ceiling: int):
    cap = 2
    while cap < ceiling:
        yield cap
        cap *= 2
    yield ceiling


def _first_nonzero(w: FreeWord, ceiling: int):
    for cap in _caps(ceiling):
        lead = magnus_expand(w, cap).leading_term()
        if lead is not None:
            return lead
    raise DegreeCeilingExceeded(f"no nonzero term up to degree {ceiling} for a nonempty word")


def magnus_sign(w: FreeWord, ceiling: int = DEGREE_CEILING) -> Sign:
    if not w:
        return Sign.ZERO
    _, coef = _first_nonzero(w, ceiling)
    return Sign.POSITIVE if coef > 0 else Sign.NEGATIVE


def magnus_compare(u: FreeWord, v: FreeWord, ceiling: int = DEGREE_CEILING) -> Cmp:
    if u.rank != v.rank:
        raise InputError("rank mismatch")
    return cmp_from_sign(magnus_sign(u.inverse() * v, ceiling))


def lcs_degree(w: FreeWord, ceiling: int = DEGREE_CEILING) -> int:
    if not w:
        raise IdentityWord("the identity lies in every term of the lower central series")
    mono, _ = _first_nonzero(w, ceiling)
    return len(mono)


def magnus_oracle(rank: int, ceiling: int = DEGREE_CEILING) -> OrderOracle:
    return OrderOracle(
        name=f"magnus-F{rank}",
        compare=lambda u, v: magnus_compare(u, v, ceiling),
        multiply=lambda u, v: u * v,
        invert=lambda u: u.inverse(),
        identity=FreeWord(rank),
    )


def random_free_word(rng: random.Random, rank: int, max_len: int) -> FreeWord:
    length = rng.randint(0, max_len)
    gens = [s * k for k in range(1, rank + 1) for s in (1, -1)]
    return FreeWord(rank, tuple(rng.choice(gens) for _ in range(length)))
