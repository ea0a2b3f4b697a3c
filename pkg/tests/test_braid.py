import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ordgroups.braid import (
    BraidWord,
    DDConeTable,
    Kind,
    MNVerdict,
    ball,
    braids_equal,
    classify,
    closure_components,
    conjugate_compare,
    dd_cone_check,
    dehornoy_compare,
    dehornoy_oracle,
    delta,
    find_conjugate_disagreement,
    handle_reduce,
    is_pure,
    mn_prime_test,
    parse_braid,
    permutation,
    random_braid,
    sigma,
)
from ordgroups.errors import BadStrandCount, IndexOutOfBand, MalformedWord, StepCapExceeded, StrandMismatch
from ordgroups.order_core import Cmp, SampleSet, conradian_check, verify_left_invariance, verify_total_order

T = sympy.Symbol("t")


def burau(b: BraidWord):
    """Unreduced Burau matrix over Z[t, t^-1]; faithful on B_3."""
    n = b.strands
    m = sympy.eye(n)
    for x in b.letters:
        i = abs(x) - 1
        g = sympy.eye(n)
        block = [[1 - T, T], [1, 0]] if x > 0 else [[0, 1], [1 / T, 1 - 1 / T]]
        for r in range(2):
            for c in range(2):
                g[i + r, i + c] = block[r][c]
        m = m * g
    return m.applyfunc(sympy.cancel)


def letters(strands, max_len=8):
    gens = [s * k for k in range(1, strands) for s in (1, -1)]
    return st.lists(st.sampled_from(gens), max_size=max_len).map(lambda xs: BraidWord(strands, tuple(xs)))


def test_word_validation():
    with pytest.raises(BadStrandCount):
        BraidWord(1)
    with pytest.raises(IndexOutOfBand):
        sigma(3, 3)
    with pytest.raises(IndexOutOfBand):
        sigma(3, 0)
    with pytest.raises(MalformedWord):
        parse_braid("1 a", 3)
    with pytest.raises(StrandMismatch):
        sigma(3, 1) * sigma(4, 1)


def test_parse_and_str_round_trip():
    b = parse_braid("1 -2  2 1", 3)
    assert b.letters == (1, -2, 2, 1)
    assert str(b) == "1 -2 2 1"
    assert BraidWord.from_json(b.to_json()) == b


def test_permutation_of_s1s2_and_s2s1():
    assert permutation(sigma(3, 1, 2)).cycle_notation() == "(132)"
    assert permutation(sigma(3, 2, 1)).cycle_notation() == "(123)"


def test_permutation_is_a_homomorphism():
    rng = random.Random(3)
    for _ in range(50):
        u, v = random_braid(rng, 5, 8), random_braid(rng, 5, 8)
        assert permutation(u * v) == permutation(u).then(permutation(v))


def test_handle_reduce_example():
    r = handle_reduce(sigma(3, 1, 2, -1))
    assert r.word.letters == (-2, 1, 2)
    assert r.classification.kind == Kind.POSITIVE and r.classification.index == 1


def test_braid_relation_reduces_to_trivial():
    r = handle_reduce(sigma(3, 1, 2, 1, -2, -1, -2))
    assert r.classification.kind == Kind.TRIVIAL
    assert r.word.letters == ()


def test_step_cap():
    with pytest.raises(StepCapExceeded):
        handle_reduce(sigma(3, 1, 2, -1, -2, 1, 2, -1, -2), step_cap=1)
    with pytest.raises(ValueError):
        handle_reduce(sigma(3, 1), step_cap=0)


def test_reduction_preserves_the_braid_b3():
    # the Burau representation is faithful on B_3, so it is an independent oracle
    rng = random.Random(11)
    for _ in range(25):
        b = random_braid(rng, 3, 8)
        assert burau(handle_reduce(b).word) == burau(b)


@settings(max_examples=40, deadline=None)
@given(letters(3, 6), letters(3, 6))
def test_equality_matches_burau_on_b3(u, v):
    assert braids_equal(u, v) == (burau(u) == burau(v))


@settings(max_examples=30, deadline=None)
@given(letters(4, 6))
def test_reduced_word_has_same_burau_b4(b):
    assert burau(handle_reduce(b).word) == burau(b)


def test_cube_identity_and_distinct_generators():
    assert braids_equal(sigma(3, 1, 2) ** 3, sigma(3, 2, 1) ** 3)
    assert not braids_equal(sigma(3, 1, 2), sigma(3, 2, 1))


@settings(max_examples=60, deadline=None)
@given(letters(4, 10), st.integers(1, 3))
def test_sigma_positive_words_are_positive(b, extra):
    # words where the lowest generator occurs only positively, and does occur, are > 1
    i = min((abs(x) for x in b.letters), default=1)
    w = tuple(abs(x) if abs(x) == i else x for x in b.letters) + (i,) * extra
    c = classify(BraidWord(4, w))
    assert c.kind == Kind.POSITIVE and c.index == i


@settings(max_examples=60, deadline=None)
@given(letters(4, 10))
def test_classification_of_inverse_is_opposite(b):
    c, ci = classify(b), classify(b.inverse())
    assert c.sign == -ci.sign
    assert c.index == ci.index


def test_generator_order():
    assert dehornoy_compare(sigma(3, 2), sigma(3, 1)) == Cmp.LESS
    assert dehornoy_compare(sigma(3, 1, 2), sigma(3, 2, 1)) == Cmp.LESS
    assert dehornoy_compare(sigma(3), sigma(3, -2)) == Cmp.GREATER


def test_delta_squared_central():
    for n in range(2, 6):
        d2 = delta(n) ** 2
        for i in range(1, n):
            s = sigma(n, i)
            assert braids_equal(d2 * s, s * d2)


def test_delta_words():
    assert delta(3).letters == (1, 2, 1)
    assert delta(4).letters == (1, 2, 3, 1, 2, 1)
    assert is_pure(delta(4) ** 2) and not is_pure(delta(4))


def test_closure_components():
    assert closure_components(sigma(3, 1, 2)) == 1
    assert closure_components(sigma(3, 1, 1)) == 3
    assert closure_components(sigma(4, 1, 3)) == 2


def test_mn_criterion():
    assert mn_prime_test(sigma(2, *[1] * 9)) == MNVerdict.PRIME_NONTRIVIAL_KNOT
    assert mn_prime_test(sigma(2, 1)) == MNVerdict.INCONCLUSIVE
    assert mn_prime_test(sigma(3, 1, 1)) == MNVerdict.NOT_A_KNOT
    assert mn_prime_test(sigma(2, *[-1] * 9)) == MNVerdict.PRIME_NONTRIVIAL_KNOT


def test_order_laws_b3():
    oracle = dehornoy_oracle(3)
    samples = SampleSet.generate(lambda r: random_braid(r, 3, 8), 200, 1)
    assert verify_total_order(oracle, samples).ok
    assert verify_left_invariance(oracle, samples).ok


def test_dehornoy_is_not_conradian_recorded_pair():
    # found by exhaustive search over the ball of length <= 6, frozen here
    oracle = dehornoy_oracle(3)
    result = conradian_check(oracle, ball(3, 6), exhaustive=True)
    assert not result.passed
    g, h = result.witness
    assert (g.letters, h.letters) == ((1,), (-2, 1))
    assert dehornoy_compare(g, h * g * g) == Cmp.GREATER


def test_conjugate_order_differs_recorded_witness():
    g, u, v = find_conjugate_disagreement(3, 4)
    assert (g.letters, u.letters, v.letters) == ((-1,), (), (-2, 1))
    assert conjugate_compare(g, u, v) != dehornoy_compare(u, v)


def test_ball_order():
    words = ball(3, 1)
    assert [w.letters for w in words] == [(), (-2,), (-1,), (1,), (2,)]
    assert len(ball(3, 3)) == 1 + 4 + 12 + 36


def test_dd_cone_small():
    table = DDConeTable.build(8)
    v = dd_cone_check(sigma(3, 1), table)
    assert v.certified and not v.both
    assert dd_cone_check(sigma(3, 1, 2), table).positive
    assert dd_cone_check(sigma(3, 2), table).negative
