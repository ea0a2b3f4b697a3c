"""Bounded positive-cone consistency search and case analyses for left orders.

A left order has a positive cone P closed under multiplication.  A case
hypothesis (a SignSeed) names words assumed positive, plus equalities.
Every product of assumed-positive words must then be positive, so a
product that rewrites to the empty word refutes the case.  The search
walks products by number of factors, in lexicographic order of factor
indices, discarding products that are nontrivial in the abelianization or
in small permutation quotients before attempting a rewrite chain.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import asdict, dataclass, field
from typing import Sequence

from ..errors import InconsistentSeed
from .abelian import AbelianImage
from .certificate import Certificate, quotient_payload
from .quotient import QuotientFilter, search_quotient
from .rewrite import Chain, RewriteBounds, RuleSet, prove_trivial
from .words import Presentation, concat, inverse


@dataclass(frozen=True)
class SignSeed:
    """Case hypothesis: ``positives`` are words assumed > 1; ``equalities`` are (lhs, rhs) pairs."""

    positives: tuple
    equalities: tuple = ()
    label: str = ""

    @classmethod
    def parse(cls, p: Presentation, facts: Sequence[str], label: str | None = None) -> "SignSeed":
        """Read facts such as ``a>1``, ``b<1``, ``a>b>1`` or ``b=a``.

        ``u < v`` contributes the positive word u^-1 v; ``u = v`` an equality.
        """
        positives, equalities = [], []
        for fact in facts:
            parts = re.split(r"\s*([<>=])\s*", fact.strip())
            terms, ops = [p.parse_word(t) for t in parts[0::2]], parts[1::2]
            if not ops:
                raise InconsistentSeed(f"no comparison in {fact!r}")
            for left, op, right in zip(terms, ops, terms[1:]):
                if op == "<":
                    positives.append(concat(inverse(left), right))
                elif op == ">":
                    positives.append(concat(inverse(right), left))
                else:
                    equalities.append((left, right))
        return cls(tuple(positives), tuple(equalities), label if label is not None else ", ".join(facts))

    def to_json(self):
        return {
            "label": self.label,
            "positives": [list(w) for w in self.positives],
            "equalities": [[list(a), list(b)] for a, b in self.equalities],
        }

    def normalised(self, p: Presentation):
        """Derived presentation and substituted positives; rejects seeds that are inconsistent on their face."""
        derived, sub = p.with_equalities(self.equalities)
        pos = [sub(w) for w in self.positives]
        for w in pos:
            if not w:
                raise InconsistentSeed(f"seed {self.label!r} asserts the identity is positive")
        seen = set(pos)
        for w in pos:
            if inverse(w) in seen:
                raise InconsistentSeed(f"seed {self.label!r} asserts a word and its inverse are both positive")
        return derived, pos


@dataclass(frozen=True)
class ConeBounds:
    max_factors: int = 10
    max_product_len: int = 40
    rewrite: RewriteBounds = RewriteBounds(max_len=16, max_steps=8, max_nodes=100)
    filter_degree: int = 4
    quotient_degree: int = 7

    def to_json(self):
        return asdict(self)


@dataclass
class ConeResult:
    status: str  # "Contradiction" or "NoContradictionWithinBounds"
    seed: SignSeed
    certificate: Certificate | None
    products_checked: int
    bounds: ConeBounds

    @property
    def contradiction(self) -> bool:
        return self.status == "Contradiction"

    def to_json(self):
        return {
            "status": self.status,
            "seed": self.seed.to_json(),
            "certificate": self.certificate.to_json() if self.certificate else None,
            "products_checked": self.products_checked,
            "bounds": self.bounds.to_json(),
        }


def cone_consistency_search(p: Presentation, seed: SignSeed, bounds: ConeBounds = ConeBounds()) -> ConeResult:
    derived, pos = seed.normalised(p)
    abelian = AbelianImage(derived)
    quotients = QuotientFilter(derived, bounds.filter_degree)
    rules = RuleSet(derived)
    seen: set = set()
    checked = 0
    for n in range(1, bounds.max_factors + 1):
        for combo in itertools.product(range(len(pos)), repeat=n):
            w = concat(*(pos[i] for i in combo))
            if w in seen or len(w) > bounds.max_product_len:
                continue
            seen.add(w)
            if not abelian.is_trivial(w) or not quotients.may_be_trivial(w):
                continue
            checked += 1
            chain = Chain((w,), ()) if not w else prove_trivial(w, derived, bounds.rewrite, rules)
            if chain is not None:
                cert = Certificate(
                    "ConeContradiction",
                    {
                        "case": seed.label,
                        "positives": [list(x) for x in seed.positives],
                        "equalities": [[list(a), list(b)] for a, b in seed.equalities],
                        "product": list(combo),
                        "chain": chain.to_json(),
                    },
                )
                return ConeResult("Contradiction", seed, cert, checked, bounds)
    return ConeResult("NoContradictionWithinBounds", seed, None, checked, bounds)


# --- case analyses --------------------------------------------------------------

@dataclass(frozen=True)
class CaseSchema:
    """Cases that jointly exhaust the orderings of some atoms, given the premises.

    Each premise (u, v) must be certified u != v by a quotient witness.
    """

    name: str
    cases: tuple
    premises: tuple = ()


def default_schema(p: Presentation) -> CaseSchema:
    """One generator: a>1 or a<1.  Two or more: a>1 and the five positions of b.

    a>1 is no loss of generality because reversing a left order is a left
    order; it presupposes a != 1, which is the premise.
    """
    if p.ngens == 0:
        raise ValueError("presentation has no generators")
    a = p.generators[0]
    if p.ngens == 1:
        cases = (SignSeed.parse(p, [f"{a}>1"]), SignSeed.parse(p, [f"{a}<1"]))
        return CaseSchema(f"{a} vs 1, given {a} != 1", cases, (((1,), ()),))
    b = p.generators[1]
    facts = [
        [f"{a}>1", f"{b}<1"],
        [f"{a}>{b}>1"],
        [f"{b}>{a}>1"],
        [f"{a}>1", f"{b}={a}"],
        [f"{a}>1", f"{b}=1"],
    ]
    cases = tuple(SignSeed.parse(p, f) for f in facts)
    name = f"{a}>1 (by reversal, given {a} != 1) x {{{b}<1, 1<{b}<{a}, {b}>{a}>1, {b}={a}, {b}=1}}"
    return CaseSchema(name, cases, (((1,), ()),))


@dataclass
class CaseAnalysisResult:
    status: str  # "NotLeftOrderableRelativeToSchema" or "Unknown"
    schema: str
    cases: list
    premises: list = field(default_factory=list)
    bounds: ConeBounds = ConeBounds()

    @property
    def certificates(self) -> list:
        return [c for c in self.premises if c is not None] + [r.certificate for r in self.cases if r.certificate]

    def to_json(self):
        return {
            "status": self.status,
            "schema": self.schema,
            "premises": [c.to_json() if c else None for c in self.premises],
            "cases": [r.to_json() for r in self.cases],
            "bounds": self.bounds.to_json(),
        }


def nonLO_case_analysis(p: Presentation, schema: CaseSchema | None = None, bounds: ConeBounds = ConeBounds()) -> CaseAnalysisResult:
    schema = schema or default_schema(p)
    premises = []
    for u, v in schema.premises:
        found = search_quotient(p, u, v, bounds.quotient_degree)
        premises.append(Certificate("QuotientWitness", quotient_payload(found[0], found[1], u, v, "distinct")) if found else None)
    results = [cone_consistency_search(p, seed, bounds) for seed in schema.cases]
    ok = all(c is not None for c in premises) and all(r.contradiction for r in results)
    status = "NotLeftOrderableRelativeToSchema" if ok else "Unknown"
    return CaseAnalysisResult(status, schema.name, results, premises, bounds)
