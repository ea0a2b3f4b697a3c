import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ordgroups.errors import CapTooSmall, DegreeCeilingExceeded, IdentityWord, MalformedWord
from ordgroups.free_magnus import (
    FreeWord,
    commutator,
    lcs_degree,
    magnus_compare,
    magnus_expand,
    magnus_oracle,
    magnus_sign,
    random_free_word,
    word,
)
from ordgroups.order_core import Cmp, SampleSet, Sign, conradian_check, verify_bi_invariance, verify_total_order

X = sympy.symbols("X1:4", commutative=False)


def sympy_expansion(w: FreeWord, cap: int) -> dict:
    """Independent oracle: expand the product in noncommuting sympy symbols and truncate."""
    expr = sympy.Integer(1)
    for x in w.letters:
        v = X[abs(x) - 1]
        factor = 1 + v if x > 0 else sum((-v) ** k for k in range(cap + 1))
        expr = sympy.expand(expr * factor)
    out = {}
    for term in sympy.Add.make_args(expr):
        coef, rest = term.as_coeff_Mul()
        mono = []
        for f in sympy.Mul.make_args(rest):
            if f == 1:
                continue
            base, exp = f.as_base_exp()
            mono.extend([X.index(base) + 1] * int(exp))
        if len(mono) <= cap:
            out[tuple(mono)] = out.get(tuple(mono), 0) + int(coef)
    return {m: c for m, c in out.items() if c}


def test_free_word_reduces_and_validates():
    assert word(2, 1, -1, 2).letters == (2,)
    with pytest.raises(MalformedWord):
        word(2, 3)
    assert FreeWord.from_json(word(2, 1, 2).to_json()) == word(2, 1, 2)


def test_inverse_cancels():
    for cap in range(1, 7):
        assert magnus_expand(word(2, 1) * word(2, -1), cap).is_one()


def test_commutator_at_cap_two():
    s = magnus_expand(commutator(word(2, 1), word(2, 2)), 2)
    assert s.terms == {(): 1, (1, 2): 1, (2, 1): -1}


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=6), st.integers(1, 4))
def test_expansion_matches_sympy(letters, cap):
    w = FreeWord(2, tuple(letters))
    assert magnus_expand(w, cap).terms == sympy_expansion(w, cap)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8), st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8))
def test_expansion_is_multiplicative(a, b):
    u, v = FreeWord(2, tuple(a)), FreeWord(2, tuple(b))
    assert magnus_expand(u * v, 5) == magnus_expand(u, 5) * magnus_expand(v, 5)


def test_signs():
    assert magnus_sign(word(2, 1)) == Sign.POSITIVE
    assert magnus_sign(word(2, -1, 2)) == Sign.NEGATIVE
    assert magnus_sign(commutator(word(2, 1), word(2, 2))) == Sign.POSITIVE
    assert magnus_sign(FreeWord(2)) == Sign.ZERO
    assert magnus_compare(word(2, 2), word(2, 1)) == Cmp.LESS


def test_lcs_degrees():
    x, y = word(2, 1), word(2, 2)
    assert lcs_degree(x) == 1
    assert lcs_degree(commutator(x, y)) == 2
    assert lcs_degree(commutator(commutator(x, y), y)) == 3
    with pytest.raises(IdentityWord):
        lcs_degree(FreeWord(2))


def test_cap_errors():
    with pytest.raises(CapTooSmall):
        magnus_expand(word(2, 1), 0)
    deep = word(2, 1)
    for _ in range(3):
        deep = commutator(deep, word(2, 2))
    with pytest.raises(DegreeCeilingExceeded):
        magnus_sign(deep, ceiling=3)


def test_serialisation_is_sorted():
    s = magnus_expand(word(2, 2, 1), 2).to_json()
    assert s == {"cap": 2, "terms": [{"mono": [], "coef": 1}, {"mono": [1], "coef": 1}, {"mono": [2], "coef": 1}, {"mono": [2, 1], "coef": 1}]}


def test_bi_order_laws_f2():
    oracle = magnus_oracle(2)
    samples = SampleSet.generate(lambda r: random_free_word(r, 2, 8), 300, 4)
    assert verify_total_order(oracle, samples).ok
    assert verify_bi_invariance(oracle, samples).ok


def test_conjugation_preserves_sign():
    rng = random.Random(8)
    for _ in range(100):
        g, h = random_free_word(rng, 3, 6), random_free_word(rng, 3, 6)
        assert magnus_sign(h * g * h.inverse()) == magnus_sign(g)


def test_magnus_passes_conradian_sample():
    samples = SampleSet.generate(lambda r: random_free_word(r, 2, 6), 200, 9)
    assert conradian_check(magnus_oracle(2), samples, exhaustive=False).passed
