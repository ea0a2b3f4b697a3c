"""Command-line interface: every operation prints one JSON document on stdout.

Exit status is 0 when a result was computed (including Inconclusive or
Unknown verdicts), 2 for bad input and 3 when a resource bound was hit.
Words whose first letter is negative must follow ``--`` so they are not
read as options, e.g. ``ordgroups braid reduce --strands 3 -- "-2 1"``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import braid, free_magnus, lattice_ext, pl_line
from .errors import InputError, MalformedCertificate, MalformedWord, ResourceBoundExceeded
from .order_core import SampleSet, conradian_check, verify_bi_invariance, verify_left_invariance, verify_total_order
from .presentation import (
    RULES,
    Certificate,
    Presentation,
    RefuteBounds,
    abelianization,
    biorder_refute,
    finite_quotient_witness,
    load_presentation,
    nonLO_case_analysis,
    verify_certificate,
)
from .serialize import dumps


class UsageError(InputError):
    pass


def _read(text: str) -> str:
    """``-`` reads standard input; anything else is the payload itself."""
    return sys.stdin.read() if text == "-" else text


def _ints(text: str) -> tuple:
    try:
        return tuple(int(t) for t in _read(text).replace(",", " ").split())
    except ValueError:
        raise MalformedWord(f"expected signed integers, got {text!r}") from None


def _fractions(text: str) -> tuple:
    try:
        return tuple(Fraction(t) for t in _read(text).replace(",", " ").split())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected rationals, got {text!r}") from None


def _braid(args, text):
    return braid.parse_braid(_read(text), args.strands)


def _free(args, text):
    return free_magnus.FreeWord(args.rank, _ints(text))


def _pl(text: str) -> pl_line.PLMap:
    """Breakpoints as ``x,y`` pairs separated by spaces or semicolons, or the JSON form."""
    raw = _read(text).strip()
    if raw.startswith("{"):
        return pl_line.PLMap.from_json(json.loads(raw))
    pts = []
    for chunk in raw.replace(";", " ").split():
        xy = chunk.split(",")
        if len(xy) != 2:
            raise InputError(f"breakpoint must be x,y: {chunk!r}")
        try:
            pts.append((Fraction(xy[0]), Fraction(xy[1])))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad rational in {chunk!r}") from None
    return pl_line.pl_make(pts)


def _weight_order(args, dimension: int) -> lattice_ext.WeightOrder:
    weights = tuple(_fractions(w) for w in args.weights.split(";")) if args.weights else ()
    tiebreak = _ints(args.tiebreak) if args.tiebreak else None
    return lattice_ext.WeightOrder(dimension, weights, tiebreak)


# --- handlers ---------------------------------------------------------------------

def braid_reduce(args):
    return braid.handle_reduce(_braid(args, args.word), args.step_cap)


def braid_compare(args):
    return {"result": braid.dehornoy_compare(_braid(args, args.u), _braid(args, args.v), args.step_cap)}


def braid_equal(args):
    return {"result": braid.braids_equal(_braid(args, args.u), _braid(args, args.v), args.step_cap)}


def braid_conjugate_compare(args):
    g = _braid(args, args.by)
    return {"result": braid.conjugate_compare(g, _braid(args, args.u), _braid(args, args.v), args.step_cap)}


def braid_delta(args):
    return braid.delta(args.strands)


def braid_permutation(args):
    perm = braid.permutation(_braid(args, args.word))
    return {
        "images": perm,
        "cycles": perm.cycle_notation(),
        "pure": perm.is_identity(),
        "components": len(perm.cycles()),
    }


def braid_mn_test(args):
    return {"result": braid.mn_prime_test(_braid(args, args.word), args.step_cap)}


def free_expand(args):
    return free_magnus.magnus_expand(_free(args, args.word), args.cap)


def free_compare(args):
    return {"result": free_magnus.magnus_compare(_free(args, args.u), _free(args, args.v), args.ceiling)}


def free_sign(args):
    return {"result": free_magnus.magnus_sign(_free(args, args.word), args.ceiling)}


def free_lcs_degree(args):
    return {"degree": free_magnus.lcs_degree(_free(args, args.word), args.ceiling)}


def zn_compare(args):
    u, v = _ints(args.u), _ints(args.v)
    return {"result": lattice_ext.zn_compare(u, v, _weight_order(args, len(u)))}


def zn_perturb(args):
    constraints = [_ints(c) for c in args.constraints.split(";")] if args.constraints else []
    if args.dimension is None and not constraints:
        raise UsageError("give --dimension or at least one constraint")
    n = args.dimension if args.dimension is not None else len(constraints[0])
    order, witness = lattice_ext.sikora_perturb(_weight_order(args, n), constraints)
    return {"order": order, "witness": list(witness)}


def _klein(text):
    vals = _ints(text)
    if len(vals) != 2:
        raise InputError(f"Klein element must be 'm n', got {text!r}")
    return lattice_ext.KleinElement(*vals)


def klein_compare(args):
    return {"result": lattice_ext.klein_compare(_klein(args.u), _klein(args.v))}


def _germ(text):
    vals = _fractions(text)
    if len(vals) != 2 or vals[1] <= 0:
        raise InputError(f"germ must be 's r' with r > 0, got {text!r}")
    return lattice_ext.GermElement(*vals)


def germ_compare(args):
    return {"result": lattice_ext.germ_compare(_germ(args.u), _germ(args.v))}


def pl_compose(args):
    return pl_line.pl_compose(_pl(args.f), _pl(args.g))


def pl_invert(args):
    return pl_line.pl_invert(_pl(args.f))


def pl_compare(args):
    return {"result": pl_line.chehata_compare(_pl(args.f), _pl(args.g))}


def pl_testpoint_compare(args):
    return {"result": pl_line.testpoint_compare(_pl(args.f), _pl(args.g), probe_cap=args.probe_cap)}


def _presentation(args):
    if args.presentation == "-":
        return Presentation.parse(sys.stdin.read())
    return load_presentation(args.presentation)


def pres_abelianize(args):
    return abelianization(_presentation(args))


def pres_refute_biorder(args):
    p = _presentation(args)
    rules = tuple(args.rules.split(",")) if args.rules else RULES
    bad = [r for r in rules if r not in RULES]
    if bad:
        raise UsageError(f"unknown rules {bad}; choose from {list(RULES)}")
    bounds = RefuteBounds(word_len=args.word_len, max_power=args.max_power, degree_cap=args.degree_cap)
    return biorder_refute(p, bounds, rules)


def pres_check_lo(args):
    return nonLO_case_analysis(_presentation(args))


def pres_quotient_witness(args):
    p = _presentation(args)
    cert = finite_quotient_witness(p, (p.parse_word(args.u), p.parse_word(args.v)), args.degree_cap, args.mode)
    if cert is None:
        return {"result": "NotFound", "degree_cap": args.degree_cap}
    return {"result": "Found", "certificate": cert}


def _certificates(obj) -> list:
    """Certificates inside a bare certificate, a refutation result or a case analysis."""
    if isinstance(obj, dict) and "format_version" in obj:
        return [obj]
    if isinstance(obj, dict) and "certificate" in obj and obj["certificate"] is not None:
        return [obj["certificate"]]
    if isinstance(obj, dict) and "cases" in obj:
        certs = [c for c in obj.get("premises", []) if c is not None]
        certs += [case["certificate"] for case in obj["cases"] if case.get("certificate")]
        return certs
    raise MalformedCertificate("no certificate found in input")


def pres_verify(args):
    p = _presentation(args)
    raw = sys.stdin.read() if args.certificate == "-" else open(args.certificate).read()
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedCertificate(f"certificate is not JSON: {exc}") from None
    certs = _certificates(obj)
    results = [verify_certificate(Certificate.from_json(c), p) for c in certs]
    return {"result": bool(results) and all(results), "checked": len(results)}


# --- harness ------------------------------------------------------------------------

def _harness_orders():
    return {
        "dehornoy-b3": (braid.dehornoy_oracle(3), lambda r: braid.random_braid(r, 3, 8), False),
        "dehornoy-b4": (braid.dehornoy_oracle(4), lambda r: braid.random_braid(r, 4, 12), False),
        "magnus-f2": (free_magnus.magnus_oracle(2), lambda r: free_magnus.random_free_word(r, 2, 8), True),
        "chehata": (pl_line.chehata_oracle(), pl_line.random_pl, True),
        "testpoint": (pl_line.testpoint_oracle(), pl_line.random_pl, False),
        "klein": (lattice_ext.klein_oracle(), lambda r: lattice_ext.KleinElement(r.randint(-4, 4), r.randint(-4, 4)), False),
        "germ": (lattice_ext.germ_oracle(), lattice_ext.random_germ, True),
        "zn-lex2": (
            lattice_ext.zn_oracle(lattice_ext.WeightOrder.lex(2)),
            lambda r: (r.randint(-5, 5), r.randint(-5, 5)),
            True,
        ),
    }


def harness_run(args):
    orders = _harness_orders()
    if args.order not in orders:
        raise UsageError(f"unknown order {args.order!r}; choose from {sorted(orders)}")
    oracle, draw, bi = orders[args.order]
    samples = SampleSet.generate(draw, args.samples, args.seed)
    out = {
        "order": args.order,
        "seed": args.seed,
        "samples": args.samples,
        "total": verify_total_order(oracle, samples),
        "left_invariance": verify_left_invariance(oracle, samples),
        "bi_invariance": verify_bi_invariance(oracle, samples),
        "expected_bi_order": bi,
    }
    if args.conradian:
        out["conradian"] = conradian_check(oracle, samples, exhaustive=False)
    return out


# --- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")

    parser = argparse.ArgumentParser(prog="ordgroups", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    # braid
    g = groups.add_parser("braid", help="braid groups and the Dehornoy order").add_subparsers(dest="cmd", required=True)
    for name, handler, args, help_text in [
        ("reduce", braid_reduce, ["word"], "handle-reduce a word and classify it"),
        ("compare", braid_compare, ["u", "v"], "Dehornoy comparison of two words"),
        ("equal", braid_equal, ["u", "v"], "decide equality of two braids"),
        ("conjugate-compare", braid_conjugate_compare, ["u", "v"], "compare under the order conjugated by --by"),
        ("delta", braid_delta, [], "the half twist"),
        ("permutation", braid_permutation, ["word"], "permutation and closure components"),
        ("mn-test", braid_mn_test, ["word"], "prime-knot criterion for the closure"),
    ]:
        p = leaf(g, name, handler, help_text)
        p.add_argument("--strands", type=int, required=True)
        p.add_argument("--step-cap", type=int, default=braid.DEFAULT_STEP_CAP)
        for a in args:
            p.add_argument(a, help="signed generator indices, e.g. '1 -2 1'; '-' reads stdin")
        if name == "conjugate-compare":
            p.add_argument("--by", required=True, help="conjugating braid word")

    # free
    g = groups.add_parser("free", help="free groups and the Magnus order").add_subparsers(dest="cmd", required=True)
    for name, handler, args, help_text in [
        ("expand", free_expand, ["word"], "truncated Magnus expansion"),
        ("compare", free_compare, ["u", "v"], "Magnus order comparison"),
        ("sign", free_sign, ["word"], "sign in the Magnus order"),
        ("lcs-degree", free_lcs_degree, ["word"], "lower central series degree"),
    ]:
        p = leaf(g, name, handler, help_text)
        p.add_argument("--rank", type=int, required=True)
        if name == "expand":
            p.add_argument("--cap", type=int, required=True)
        else:
            p.add_argument("--ceiling", type=int, default=free_magnus.DEGREE_CEILING)
        for a in args:
            p.add_argument(a, help="signed generator indices")

    # zn
    g = groups.add_parser("zn", help="weight orders on Z^n").add_subparsers(dest="cmd", required=True)
    for name, handler, help_text in [
        ("compare", zn_compare, "compare two integer vectors"),
        ("perturb", zn_perturb, "a different order keeping the constraints positive"),
    ]:
        p = leaf(g, name, handler, help_text)
        p.add_argument("--weights", help="weight vectors separated by ';', entries may be rationals")
        p.add_argument("--tiebreak", help="coordinate order for ties, e.g. '1 0'")
        if name == "compare":
            p.add_argument("u")
            p.add_argument("v")
        else:
            p.add_argument("--constraints", help="vectors that must stay positive, separated by ';'")
            p.add_argument("--dimension", type=int)

    g = groups.add_parser("klein", help="the Klein bottle group").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "compare", klein_compare, "compare x^m y^n elements given as 'm n'")
    p.add_argument("u")
    p.add_argument("v")

    g = groups.add_parser("germ", help="affine germs s + r t").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "compare", germ_compare, "compare germs given as 's r'")
    p.add_argument("u")
    p.add_argument("v")

    # pl
    g = groups.add_parser("pl", help="PL homeomorphisms of [0, 1]").add_subparsers(dest="cmd", required=True)
    for name, handler, args, help_text in [
        ("compose", pl_compose, ["f", "g"], "the map x -> f(g(x))"),
        ("invert", pl_invert, ["f"], "inverse map"),
        ("compare", pl_compare, ["f", "g"], "Chehata comparison"),
        ("testpoint-compare", pl_testpoint_compare, ["f", "g"], "comparison at enumerated rational points"),
    ]:
        p = leaf(g, name, handler, help_text)
        for a in args:
            p.add_argument(a, help="breakpoints 'x,y x,y ...' including 0,0 and 1,1")
        if name == "testpoint-compare":
            p.add_argument("--probe-cap", type=int, default=pl_line.DEFAULT_PROBE_CAP)

    # pres
    g = groups.add_parser("pres", help="finite presentations").add_subparsers(dest="cmd", required=True)
    for name, handler, help_text in [
        ("abelianize", pres_abelianize, "rank and torsion of the abelianization"),
        ("refute-biorder", pres_refute_biorder, "search for a certificate that no bi-order exists"),
        ("check-lo", pres_check_lo, "case analysis against left orders"),
        ("quotient-witness", pres_quotient_witness, "permutation quotient separating two words"),
        ("verify", pres_verify, "replay certificates without searching"),
    ]:
        p = leaf(g, name, handler, help_text)
        p.add_argument("presentation", help=".pres file, a bundled name such as weeks.pres, or '-'")
        if name == "refute-biorder":
            p.add_argument("--rules", help=f"comma-separated subset of {','.join(RULES)}")
            p.add_argument("--word-len", type=int, default=RefuteBounds.word_len)
            p.add_argument("--max-power", type=int, default=RefuteBounds.max_power)
            p.add_argument("--degree-cap", type=int, default=RefuteBounds.degree_cap)
        if name == "quotient-witness":
            p.add_argument("u")
            p.add_argument("v")
            p.add_argument("--degree-cap", type=int, required=True)
            p.add_argument("--mode", choices=["distinct", "noncommuting"], default="distinct")
        if name == "verify":
            p.add_argument("certificate", help="JSON file holding a certificate or a result containing them; '-' for stdin")

    # harness
    g = groups.add_parser("harness", help="order-property suites").add_subparsers(dest="cmd", required=True)
    p = leaf(g, "run", harness_run, "check order laws on seeded samples")
    p.add_argument("--order", required=True, help=", ".join(sorted(_harness_orders())))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--conradian", action="store_true")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.handler(args)
    except ResourceBoundExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return 3
    except (ValueError, OSError) as exc:
        # InputError is a ValueError; plain ValueErrors here come from malformed arguments
        print(f"error: {exc}", file=stderr)
        return 2
    print(dumps(result, pretty=args.pretty), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
