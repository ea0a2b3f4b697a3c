"""Obstructions to bi-orderability found by bounded search.

Rules, tried in order:

* UniqueRoots: u != v but u^k = v^k.  Bi-ordered groups have unique roots.
* PowerCommutes: g commutes with h^n but not with h.  In a bi-ordered
  group, commuting with a nonzero power of h forces commuting with h.
* ConjugationInversion: w^-1 x w = x^-1 with x != 1.  Conjugation preserves
  positivity in a bi-order, inversion reverses it.
* Indicability: a nontrivial finitely generated group with finite
  abelianization does not surject onto Z, so it is not locally indicable,
  hence not bi-orderable.

Equalities come with rewrite chains; inequalities with permutation quotients.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .abelian import AbelianImage, abelianization_with_form, relator_matrix
from .certificate import Certificate, quotient_payload, verify_certificate
from .quotient import QuotientFilter, search_quotient
from .rewrite import RewriteBounds, RuleSet, prove_trivial
from .words import Presentation, all_words, commutator, concat, inverse, power

RULES = ("UniqueRoots", "PowerCommutes", "ConjugationInversion", "Indicability")


@dataclass(frozen=True)
class RefuteBounds:
    word_len: int = 2
    max_power: int = 4
    rewrite: RewriteBounds = RewriteBounds(max_len=16, max_steps=10, max_nodes=30)
    degree_cap: int = 7
    filter_degree: int = 7

    def to_json(self):
        return asdict(self)


@dataclass
class RefutationResult:
    status: str  # "Refuted" or "Unknown"
    rule: str | None
    certificate: Certificate | None
    bounds: RefuteBounds

    def to_json(self):
        return {
            "status": self.status,
            "rule": self.rule,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "bounds": self.bounds.to_json(),
        }


def finite_quotient_witness(p: Presentation, targets, degree_cap: int, mode: str = "distinct") -> Certificate | None:
    u, v = targets
    found = search_quotient(p, tuple(u), tuple(v), degree_cap, mode)
    if found is None:
        return None
    return Certificate("QuotientWitness", quotient_payload(found[0], found[1], u, v, mode))


@dataclass
class IndicabilityResult:
    status: str  # "NotIndicable" or "Indicable"
    certificate: Certificate

    def to_json(self):
        return {"status": self.status, "certificate": self.certificate.to_json()}


def indicability_obstruction(p: Presentation, nontriviality: Certificate | None = None) -> IndicabilityResult:
    """NotIndicable iff H_1 is finite.

    With nonzero torsion, or a QuotientWitness separating some word from 1,
    the conclusion is upgraded to "not_biorderable".
    """
    ab, form = abelianization_with_form(p)
    payload = {
        "matrix": relator_matrix(p),
        "D": form.D,
        "U": form.U,
        "V": form.V,
        "rank": ab.rank,
        "torsion": list(ab.torsion),
        "homomorphism": None,
        "nontrivial": None,
    }
    if ab.rank > 0:
        # a column of V beyond the nonzero diagonal is a surjection onto Z
        j = p.ngens - ab.rank
        payload["homomorphism"] = [form.V[i][j] for i in range(p.ngens)]
        payload["conclusion"] = "indicable"
        return IndicabilityResult("Indicable", Certificate("Indicability", payload))
    payload["conclusion"] = "not_indicable"
    if ab.torsion:
        payload["conclusion"] = "not_biorderable"
    elif nontriviality is not None and nontriviality.kind == "QuotientWitness":
        target = nontriviality.payload.get("targets", [[], []])
        if target[0] and not target[1] and verify_certificate(nontriviality, p):
            payload["nontrivial"] = nontriviality.payload
            payload["conclusion"] = "not_biorderable"
    return IndicabilityResult("NotIndicable", Certificate("Indicability", payload))


class _Prover:
    def __init__(self, p: Presentation, bounds: RefuteBounds):
        self.p = p
        self.bounds = bounds
        self.rules = RuleSet(p)
        self.abelian = AbelianImage(p)
        self.quotients = QuotientFilter(p, bounds.filter_degree)

    def chain(self, w):
        if not self.abelian.is_trivial(w) or not self.quotients.may_be_trivial(w):
            return None
        return prove_trivial(w, self.p, self.bounds.rewrite, self.rules)

    def witness(self, u, v, mode):
        return finite_quotient_witness(self.p, (u, v), self.bounds.degree_cap, mode)


def _unique_roots(pr: _Prover, words):
    for i, u in enumerate(words):
        for v in words[i + 1:]:
            for k in range(2, pr.bounds.max_power + 1):
                w = concat(power(u, k), power(v, -k))
                chain = pr.chain(w) if w else None
                if chain is None:
                    continue
                qw = pr.witness(u, v, "distinct")
                if qw is not None:
                    return {"u": list(u), "v": list(v), "k": k, "chain": chain.to_json(), "distinct": qw.payload}
    return None


def _power_commutes(pr: _Prover, words):
    for g in words:
        for h in words:
            if g == h:
                continue
            for n in range(1, pr.bounds.max_power + 1):
                w = commutator(g, power(h, n))
                chain = pr.chain(w) if w else None
                if chain is None:
                    continue
                qw = pr.witness(g, h, "noncommuting")
                if qw is not None:
                    return {"g": list(g), "h": list(h), "n": n, "chain": chain.to_json(), "noncommuting": qw.payload}
    return None


def _conjugation_inversion(pr: _Prover, words):
    for x in words:
        for w in words:
            word = concat(inverse(w), x, w, x)
            chain = pr.chain(word) if word else None
            if chain is None:
                continue
            qw = pr.witness(x, (), "distinct")
            if qw is not None:
                return {"x": list(x), "w": list(w), "chain": chain.to_json(), "nontrivial": qw.payload}
    return None


def _indicability(pr: _Prover, words):
    for g in words:
        if len(g) != 1 or g[0] < 0:
            continue
        qw = pr.witness(g, (), "distinct")
        if qw is not None:
            result = indicability_obstruction(pr.p, qw)
            if result.certificate.payload["conclusion"] == "not_biorderable":
                return result.certificate.payload
            return None
    result = indicability_obstruction(pr.p)
    if result.certificate.payload["conclusion"] == "not_biorderable":
        return result.certificate.payload
    return None


_SEARCHES = {
    "UniqueRoots": _unique_roots,
    "PowerCommutes": _power_commutes,
    "ConjugationInversion": _conjugation_inversion,
    "Indicability": _indicability,
}


def biorder_refute(p: Presentation, bounds: RefuteBounds = RefuteBounds(), rules=RULES) -> RefutationResult:
    """First rule in ``rules`` (default order above) that yields a certificate."""
    unknown = [r for r in rules if r not in _SEARCHES]
    if unknown:
        raise ValueError(f"unknown rules {unknown}; choose from {RULES}")
    pr = _Prover(p, bounds)
    words = all_words(p.ngens, bounds.word_len)
    for rule in rules:
        if rule == "Indicability" and abelianization_with_form(p)[0].rank > 0:
            continue
        payload = _SEARCHES[rule](pr, words)
        if payload is not None:
            return RefutationResult("Refuted", rule, Certificate(rule, payload), bounds)
    return RefutationResult("Unknown", None, None, bounds)

