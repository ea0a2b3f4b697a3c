"""
Orders on Z^n, the Klein bottle group and affine germs
======================================================
"""
from fractions import Fraction

from ordgroups.lattice_ext import (
    KLEIN_X,
    KLEIN_Y,
    GermElement,
    WeightOrder,
    germ_compare,
    klein_compare,
    sikora_perturb,
)

# Z^2 under lex has neighbours: keep (1, 0) positive but flip something else
order, witness = sikora_perturb(WeightOrder.lex(2), [(1, 0)])
print("new leading weight:", tuple(str(c) for c in order.weights[0]), "flips", witness)

# the Klein bottle group is left-ordered but not bi-ordered:
# x < x^2, yet multiplying both on the right by y reverses them
x2 = KLEIN_X * KLEIN_X
print("x vs x^2:", klein_compare(KLEIN_X, x2).label)
print("xy vs x^2 y:", klein_compare(KLEIN_X * KLEIN_Y, x2 * KLEIN_Y).label)

# germs t -> s + r t, ordered by r first and then by s
g = GermElement(Fraction(-3), Fraction(3, 2))
h = GermElement(Fraction(5), Fraction(1))
print("(-3 + 3t/2) vs (5 + t):", germ_compare(g, h).label)
