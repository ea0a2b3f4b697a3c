"""Certificates and their replay.

A certificate is plain JSON data.  Verification replays it against a
presentation without any search: rewrite chains are stepped through,
permutation images are checked against every relator, and Smith forms are
checked by matrix multiplication and determinants.

Structurally broken payloads (missing fields, wrong types) raise
MalformedCertificate; well-formed payloads that fail to replay give False.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..errors import MalformedCertificate
from .abelian import SmithForm, _invariants, check_smith_form, relator_matrix
from .quotient import check_quotient
from .rewrite import Chain, verify_chain
from .words import Presentation, commutator, concat, inverse, power

FORMAT_VERSION = 1
KINDS = ("UniqueRoots", "PowerCommutes", "ConjugationInversion", "ConeContradiction", "Indicability", "QuotientWitness")


@dataclass(frozen=True)
class Certificate:
    kind: str
    payload: dict

    def to_json(self):
        return {"format_version": FORMAT_VERSION, "kind": self.kind, "payload": self.payload}

    @classmethod
    def from_json(cls, obj) -> "Certificate":
        if not isinstance(obj, dict) or obj.get("format_version") != FORMAT_VERSION:
            raise MalformedCertificate("missing or unsupported format_version")
        if obj.get("kind") not in KINDS or not isinstance(obj.get("payload"), dict):
            raise MalformedCertificate("unknown certificate kind or missing payload")
        return cls(obj["kind"], obj["payload"])


# --- payload builders -------------------------------------------------------

def quotient_payload(degree: int, images, u, v, mode: str) -> dict:
    return {"degree": degree, "images": [list(i) for i in images], "targets": [list(u), list(v)], "mode": mode}


# --- replay -------------------------------------------------------------------

def _word(obj) -> tuple:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise MalformedCertificate(f"expected a word (list of ints), got {obj!r}")
    return tuple(obj)


def _int(obj) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise MalformedCertificate(f"expected an integer, got {obj!r}")
    return obj


def _in_range(w, p: Presentation) -> bool:
    return all(x != 0 and abs(x) <= p.ngens for x in w)


def _chain(obj, p: Presentation, start) -> bool:
    chain = Chain.from_json(obj)
    if not all(_in_range(w, p) for w in chain.words):
        return False
    return verify_chain(chain, p, start=start, end=())


def _quotient(obj, p: Presentation, u, v, mode: str) -> bool:
    if not isinstance(obj, dict):
        raise MalformedCertificate("quotient witness must be an object")
    tu, tv = (_word(t) for t in obj["targets"])
    if (tu, tv) != (tuple(u), tuple(v)) or obj["mode"] != mode:
        return False
    if not (_in_range(tu, p) and _in_range(tv, p)):
        return False
    images = obj["images"]
    if not images or not isinstance(images[0], list) or _int(obj["degree"]) != len(images[0]):
        return False
    return check_quotient(p, images, tu, tv, mode)


def _verify_quotient(pl, p):
    u, v = (_word(t) for t in pl["targets"])
    return _quotient(pl, p, u, v, pl["mode"])


def _verify_unique_roots(pl, p):
    u, v, k = _word(pl["u"]), _word(pl["v"]), _int(pl["k"])
    if k < 1 or not (_in_range(u, p) and _in_range(v, p)):
        return False
    start = concat(power(u, k), power(v, -k))
    return _chain(pl["chain"], p, start) and _quotient(pl["distinct"], p, u, v, "distinct")


def _verify_power_commutes(pl, p):
    g, h, n = _word(pl["g"]), _word(pl["h"]), _int(pl["n"])
    if n < 1 or not (_in_range(g, p) and _in_range(h, p)):
        return False
    start = commutator(g, power(h, n))
    return _chain(pl["chain"], p, start) and _quotient(pl["noncommuting"], p, g, h, "noncommuting")


def _verify_conjugation_inversion(pl, p):
    x, w = _word(pl["x"]), _word(pl["w"])
    if not (_in_range(x, p) and _in_range(w, p)):
        return False
    start = concat(inverse(w), x, w, x)
    return _chain(pl["chain"], p, start) and _quotient(pl["nontrivial"], p, x, (), "distinct")


def _verify_cone(pl, p):
    positives = [_word(w) for w in pl["positives"]]
    equalities = []
    for pair in pl["equalities"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise MalformedCertificate("equalities must be pairs of words")
        equalities.append((_word(pair[0]), _word(pair[1])))
    product = [_int(i) for i in pl["product"]]
    words = positives + [w for pair in equalities for w in pair]
    if not product or not all(_in_range(w, p) for w in words):
        return False
    if any(i < 0 or i >= len(positives) for i in product):
        return False
    derived, sub = p.with_equalities(equalities)
    start = concat(*(sub(positives[i]) for i in product))
    return _chain(pl["chain"], derived, start)


def _verify_indicability(pl, p):
    matrix = relator_matrix(p)
    if pl["matrix"] != matrix:
        return False
    form = SmithForm(pl["D"], pl["U"], pl["V"])
    for m in (form.D, form.U, form.V):
        if not isinstance(m, list) or not all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in m):
            raise MalformedCertificate("matrices must be lists of integer rows")
    if not check_smith_form(matrix, form):
        return False
    inv = _invariants(form, p.ngens)
    if (inv.rank, list(inv.torsion)) != (_int(pl["rank"]), list(pl["torsion"])):
        return False
    conclusion = pl["conclusion"]
    if conclusion == "indicable":
        phi = [_int(x) for x in pl["homomorphism"]]
        if len(phi) != p.ngens or gcd(*phi) != 1:
            return False
        return all(sum(c * f for c, f in zip(row, phi)) == 0 for row in matrix)
    if inv.rank != 0:
        return False
    if conclusion == "not_indicable":
        return True
    if conclusion == "not_biorderable":
        if inv.torsion:
            return True
        witness = pl.get("nontrivial")
        if witness is None:
            return False
        target = _word(witness["targets"][0])
        return _quotient(witness, p, target, (), "distinct") and bool(target)
    return False


_VERIFIERS = {
    "QuotientWitness": _verify_quotient,
    "UniqueRoots": _verify_unique_roots,
    "PowerCommutes": _verify_power_commutes,
    "ConjugationInversion": _verify_conjugation_inversion,
    "ConeContradiction": _verify_cone,
    "Indicability": _verify_indicability,
}


def verify_certificate(c, p: Presentation) -> bool:
    if not isinstance(c, Certificate):
        c = Certificate.from_json(c)
    if c.kind not in _VERIFIERS:
        raise MalformedCertificate(f"unknown kind {c.kind!r}")
    try:
        return bool(_VERIFIERS[c.kind](c.payload, p))
    except MalformedCertificate:
        raise
    except (KeyError, TypeError, IndexError, AttributeError, ValueError) as exc:
        raise MalformedCertificate(f"cannot read {c.kind} payload: {exc!r}") from exc
