"""
Piecewise-linear homeomorphisms of the interval
===============================================

Maps are exact: breakpoints are Fractions.  Chehata's order looks at the
first place a map leaves the diagonal.  The test-point order compares
values at rationals listed in Calkin-Wilf order and is only left-invariant.
"""
from fractions import Fraction as F

from ordgroups.order_core import SampleSet
from ordgroups.pl_line import (
    chehata_sign,
    find_testpoint_right_violation,
    pl_compose,
    pl_invert,
    pl_make,
    random_pl,
    testpoint_compare,
)

f = pl_make([(0, 0), (F(1, 2), F(1, 4)), (1, 1)])
print("f =", [(str(x), str(y)) for x, y in f.breakpoints])
print("f^-1 =", [(str(x), str(y)) for x, y in pl_invert(f).breakpoints])
print("f o f^-1 is the identity:", pl_compose(f, pl_invert(f)).is_identity())
print("Chehata signs of f, f^-1:", chehata_sign(f).label, chehata_sign(pl_invert(f)).label)

samples = list(SampleSet.generate(random_pl, 30, seed=5))
f, g, h = find_testpoint_right_violation(samples)
print("test-point order: f < g is", testpoint_compare(f, g).label,
      "but f h vs g h is", testpoint_compare(pl_compose(f, h), pl_compose(g, h)).label)
