import random
from math import gcd

import pytest
import sympy
from sympy.combinatorics import Permutation
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from sympy.polys.domains import ZZ

from ordgroups.presentation import Presentation, abelianization, check_smith_form, homomorphisms, search_quotient, smith_normal_form, word_image
from ordgroups.presentation.abelian import AbelianImage, determinant
from ordgroups.presentation.quotient import QuotientFilter, satisfies_relators


def random_matrix(rng):
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)
    return [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]


def test_smith_form_random_matrices():
    rng = random.Random(2024)
    for _ in range(100):
        a = random_matrix(rng)
        form = smith_normal_form(a)
        assert check_smith_form(a, form)
        ours = [d for d in form.diagonal() if d]
        theirs = [abs(d) for d in sympy_snf(sympy.Matrix(a), domain=ZZ).diagonal() if d]
        assert ours == theirs


def test_smith_form_two_by_two_gcd_oracle():
    rng = random.Random(5)
    for _ in range(100):
        a = [[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)]
        d1, d2 = smith_normal_form(a).diagonal()
        g = gcd(*[x for row in a for x in row])
        assert d1 == g
        assert d1 * d2 == abs(determinant(a))


def test_determinant_matches_sympy():
    rng = random.Random(6)
    for _ in range(50):
        n = rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert determinant(a) == sympy.Matrix(a).det()


def test_checker_rejects_tampered_form():
    a = [[2, 4], [6, 8]]
    form = smith_normal_form(a)
    bad = type(form)([[form.D[0][0], 0], [0, form.D[1][1] + 1]], form.U, form.V)
    assert not check_smith_form(a, bad)


def test_abelianizations(weeks, brieskorn, trefoil, b3):
    assert abelianization(weeks).to_json() == {"rank": 0, "torsion": [5, 5]}
    assert abelianization(brieskorn).is_trivial
    assert abelianization(trefoil).to_json() == {"rank": 1, "torsion": []}
    assert abelianization(b3).to_json() == {"rank": 1, "torsion": []}
    assert abelianization(Presentation(("a", "b"), ())).rank == 2


def test_abelian_image(weeks):
    image = AbelianImage(weeks)
    assert image.is_trivial((1,) * 5)
    assert not image.is_trivial((1,) * 4)
    assert image.is_trivial(weeks.relators[1])


def test_trefoil_witness_checked_with_sympy(trefoil):
    degree, images = search_quotient(trefoil, (1, 2), (2, 1), 3)
    assert degree == 3
    a, b = (Permutation(list(i)) for i in images)
    assert (a ** 2).is_Identity and (b ** 3).is_Identity
    assert a.order() == 2 and b.order() == 3
    # sympy composes left to right as well: (a*b)(i) = b(a(i))
    assert list((a * b).array_form) == list(word_image((1, 2), images))
    assert a * b != b * a


def test_b3_witness(b3):
    degree, images = search_quotient(b3, (1, 2), (2, 1), 3)
    assert degree == 3
    assert word_image((1, 2), images) != word_image((2, 1), images)


def test_abelian_group_has_no_noncommuting_witness():
    z2 = Presentation.from_relations(("a", "b"), ["abAB = 1"])
    assert search_quotient(z2, (1,), (2,), 5, mode="noncommuting") is None
    with pytest.raises(ValueError):
        search_quotient(z2, (1,), (2,), 1)


def test_homomorphisms_satisfy_relators(trefoil, klein):
    for p in (trefoil, klein):
        homs = list(homomorphisms(p, 4))
        assert homs
        for images in homs:
            assert satisfies_relators(p, images)


def test_quotient_filter(weeks):
    f = QuotientFilter(weeks, 5)
    assert f.may_be_trivial(())
    assert f.may_be_trivial(weeks.relators[0])
    assert not f.may_be_trivial((1,))
