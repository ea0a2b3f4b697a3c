"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line in the terminal summary."""
import random
import time
from fractions import Fraction as F

from conftest import ACCEPTANCE_LINES
from ordgroups.braid import (
    DDConeTable,
    Kind,
    MNVerdict,
    ball,
    braids_equal,
    burau_key,
    classify,
    dd_cone_check,
    dehornoy_oracle,
    delta,
    mn_prime_test,
    permutation,
    random_braid,
    sigma,
)
from ordgroups.free_magnus import commutator, lcs_degree, magnus_expand, magnus_oracle, random_free_word, word
from ordgroups.lattice_ext import (
    KLEIN_X,
    KLEIN_Y,
    WeightOrder,
    germ_oracle,
    klein_box,
    klein_compare,
    klein_oracle,
    random_constraints,
    random_germ,
    sikora_perturb,
    zn_sign,
)
from ordgroups.order_core import Cmp, SampleSet, Sign, conradian_check, verify_bi_invariance, verify_left_invariance, verify_total_order
from ordgroups.pl_line import (
    IDENTITY,
    chehata_oracle,
    chehata_sign,
    pl_compose,
    pl_invert,
    pl_make,
    random_pl,
)
from ordgroups.pl_line import testpoint_oracle as tp_oracle
from ordgroups.presentation import (
    abelianization,
    biorder_refute,
    finite_quotient_witness,
    indicability_obstruction,
    nonLO_case_analysis,
    verify_certificate,
)


class Criterion:
    def __init__(self, number: int, title: str, limit: float | None = None):
        self.number, self.title, self.limit = number, title, limit
        self.checks = []

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def check(self, ok: bool, label: str):
        self.checks.append((bool(ok), label))

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        failed = [label for ok, label in self.checks if not ok]
        if exc_type is not None:
            failed.append(f"raised {exc_type.__name__}: {exc}")
        if self.limit is not None and elapsed > self.limit:
            failed.append(f"took {elapsed:.1f}s, limit {self.limit:.0f}s")
        status = "FAIL" if failed else "PASS"
        detail = "; ".join(failed) if failed else f"{len(self.checks)} checks"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {self.number}: {self.title} ({elapsed:.2f}s) {detail}")
        if exc_type is None:
            assert not failed, failed
        return False


def test_criterion_01_braid_relations():
    with Criterion(1, "braid relations and permutations", 1) as c:
        c.check(braids_equal(sigma(3, 1, 2, 1), sigma(3, 2, 1, 2)), "s1s2s1 = s2s1s2")
        c.check(braids_equal(sigma(4, 1, 3), sigma(4, 3, 1)), "s1s3 = s3s1")
        c.check(braids_equal(sigma(3, 1, 2) ** 3, sigma(3, 2, 1) ** 3), "(s1s2)^3 = (s2s1)^3")
        p, q = permutation(sigma(3, 1, 2)), permutation(sigma(3, 2, 1))
        c.check(p != q, "permutations differ")
        c.check((p.cycle_notation(), q.cycle_notation()) == ("(132)", "(123)"), "cycles (132), (123)")


def test_criterion_02_centrality():
    with Criterion(2, "half twist squared is central", 10) as c:
        for n in range(2, 6):
            d2 = delta(n) ** 2
            for i in range(1, n):
                c.check(braids_equal(d2 * sigma(n, i), sigma(n, i) * d2), f"n={n} i={i}")


def test_criterion_03_dehornoy_laws():
    with Criterion(3, "Dehornoy order laws on B_4", 60) as c:
        oracle = dehornoy_oracle(4)
        samples = SampleSet.generate(lambda r: random_braid(r, 4, 12), 1000, 3)
        c.check(verify_total_order(oracle, samples).ok, "total order")
        c.check(verify_left_invariance(oracle, samples).ok, "left invariance")
        nontrivial = [b for b in samples if classify(b).kind != Kind.TRIVIAL][:500]
        c.check(len(nontrivial) == 500, "500 nontrivial words")
        for b in nontrivial:
            k, ki = classify(b), classify(b.inverse())
            c.check({k.kind, ki.kind} == {Kind.POSITIVE, Kind.NEGATIVE} and k.index == ki.index, f"trichotomy {b}")


def test_criterion_04_dubrovina_dubrovin_cone():
    with Criterion(4, "Dubrovina-Dubrovin cone on the B_3 ball of length 6", 300) as c:
        table = DDConeTable.build(12)
        seen = set()
        for b in ball(3, 6):
            key = burau_key(b)
            if key in seen or classify(b).kind == Kind.TRIVIAL:
                continue
            seen.add(key)
            v = dd_cone_check(b, table)
            c.check(v.certified and not v.both, f"element {b}")
        c.check(len(seen) > 500, "ball has the expected size")


def test_criterion_05_mn_criterion():
    with Criterion(5, "Malyutin-Netsvetaev criterion", 1) as c:
        c.check(mn_prime_test(sigma(2, *[1] * 9)) == MNVerdict.PRIME_NONTRIVIAL_KNOT, "s1^9")
        c.check(mn_prime_test(sigma(2, 1)) == MNVerdict.INCONCLUSIVE, "s1")
        c.check(mn_prime_test(sigma(3, 1, 1)) == MNVerdict.NOT_A_KNOT, "s1^2 in B_3")


def test_criterion_06_magnus():
    with Criterion(6, "Magnus expansion and order", 30) as c:
        x, y = word(2, 1), word(2, 2)
        for cap in range(2, 7):
            c.check(magnus_expand(x * x.inverse(), cap).is_one(), f"x x^-1 at cap {cap}")
        c.check(magnus_expand(commutator(x, y), 2).terms == {(): 1, (1, 2): 1, (2, 1): -1}, "[x,y] at cap 2")
        samples = SampleSet.generate(lambda r: random_free_word(r, 2, 8), 1000, 6)
        c.check(verify_bi_invariance(magnus_oracle(2), samples).ok, "bi-invariance on 1000 samples")
        c.check([lcs_degree(x), lcs_degree(commutator(x, y)), lcs_degree(commutator(commutator(x, y), y))] == [1, 2, 3], "lcs degrees")


def test_criterion_07_conradian():
    with Criterion(7, "Conradian property", 300) as c:
        samples = SampleSet.generate(lambda r: random_free_word(r, 2, 8), 500, 7)
        c.check(conradian_check(magnus_oracle(2), samples, exhaustive=False).passed, "Magnus passes")
        result = conradian_check(dehornoy_oracle(3), ball(3, 6), exhaustive=True)
        c.check(not result.passed, "Dehornoy fails")
        c.check(result.witness and tuple(w.letters for w in result.witness) == ((1,), (-2, 1)), "recorded pair (s1, S2 s1)")


def test_criterion_08_abelianizations(weeks, brieskorn, trefoil):
    with Criterion(8, "abelianizations and indicability", 120) as c:
        c.check(abelianization(weeks).to_json() == {"rank": 0, "torsion": [5, 5]}, "Weeks Z/5 + Z/5")
        c.check(abelianization(brieskorn).is_trivial, "Sigma(2,3,7) perfect")
        c.check(abelianization(trefoil).to_json() == {"rank": 1, "torsion": []}, "trefoil Z")
        w = indicability_obstruction(weeks).certificate
        c.check(w.payload["conclusion"] == "not_biorderable" and verify_certificate(w, weeks), "Weeks not bi-orderable")
        qw = finite_quotient_witness(brieskorn, ((1,), ()), 7)
        c.check(qw is not None and verify_certificate(qw, brieskorn), "Sigma(2,3,7) nontrivial")
        s = indicability_obstruction(brieskorn, qw).certificate
        c.check(s.payload["conclusion"] == "not_biorderable" and verify_certificate(s, brieskorn), "Sigma(2,3,7) not bi-orderable")


def test_criterion_09_weeks_not_left_orderable(weeks):
    with Criterion(9, "Weeks group, default schema", 300) as c:
        result = nonLO_case_analysis(weeks)
        c.check(result.status == "NotLeftOrderableRelativeToSchema", "status")
        c.check(all(r.contradiction for r in result.cases), "every case contradicted")
        c.check(all(verify_certificate(cert, weeks) for cert in result.certificates), "certificates replay")
        c.check(result.to_json()["bounds"]["max_factors"] == 10, "bounds recorded")


def test_criterion_10_biorder_refutations(b3, klein, trefoil):
    with Criterion(10, "bi-order refutations", 30) as c:
        for p, rules, expected in [
            (b3, None, "UniqueRoots"),
            (klein, ("ConjugationInversion",), "ConjugationInversion"),
            (trefoil, None, "PowerCommutes"),
        ]:
            r = biorder_refute(p, rules=rules) if rules else biorder_refute(p)
            c.check(r.rule == expected and verify_certificate(r.certificate, p), f"{p.name} via {expected}")


def test_criterion_11_pl():
    with Criterion(11, "PL homeomorphisms", 60) as c:
        maps = SampleSet.generate(lambda r: random_pl(r, r.randint(1, 4)), 500, 11)
        c.check(all(pl_compose(f, pl_invert(f)) == IDENTITY and pl_invert(pl_invert(f)) == f for f in maps), "round trips")
        samples = SampleSet.generate(random_pl, 1000, 12)
        c.check(verify_bi_invariance(chehata_oracle(), samples).ok, "Chehata bi-invariance")
        c.check(verify_left_invariance(tp_oracle(), samples).ok, "test-point left invariance")
        f = pl_make([(0, 0), (F(1, 2), F(1, 4)), (1, 1)])
        c.check(chehata_sign(IDENTITY) == Sign.ZERO, "identity")
        c.check(chehata_sign(f) == Sign.NEGATIVE and chehata_sign(pl_invert(f)) == Sign.POSITIVE, "slope examples")


def test_criterion_12_small_groups():
    with Criterion(12, "Klein, germ and Z^n orders", 30) as c:
        box = SampleSet(tuple(klein_box(4)), 0)
        c.check(verify_left_invariance(klein_oracle(), box, exhaustive=True).ok, "Klein left invariance, |m|,|n| <= 4")
        x2 = KLEIN_X * KLEIN_X
        c.check(klein_compare(KLEIN_X, x2) == Cmp.LESS and klein_compare(KLEIN_X * KLEIN_Y, x2 * KLEIN_Y) == Cmp.GREATER, "(x, x^2, y)")
        germs = SampleSet.generate(random_germ, 200, 12)
        c.check(verify_bi_invariance(germ_oracle(), germs).ok, "germ bi-invariance")
        rng = random.Random(12)
        for i in range(50):
            n = rng.randint(2, 4)
            order = WeightOrder(n, tiebreak=tuple(rng.sample(range(n), n)))
            cons = random_constraints(rng, order, rng.randint(1, 4))
            new, w = sikora_perturb(order, cons)
            ok = all(zn_sign(v, new) == Sign.POSITIVE for v in cons)
            ok = ok and zn_sign(w, order) == Sign.POSITIVE and zn_sign(w, new) == Sign.NEGATIVE
            c.check(ok, f"perturbation {i}")


def test_criterion_13_cli_golden():
    from test_cli import CASES, GOLDEN, invoke

    with Criterion(13, "CLI golden files", 120) as c:
        for name, argv in sorted(CASES.items()):
            code, out, _ = invoke(argv)
            c.check(code == 0 and out == (GOLDEN / f"{name}.json").read_text(), name)
        c.check(invoke(["pres", "abelianize", "weeks.pres"])[1] == '{"rank":0,"torsion":[5,5]}\n', "weeks abelianize")
