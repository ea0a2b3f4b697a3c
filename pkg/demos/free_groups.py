"""
Ordering free groups with the Magnus expansion
==============================================

x_i maps to 1 + X_i in noncommuting power series.  A word is positive when
the first nonzero coefficient of its expansion, in degree then
lexicographic order, is positive.  This is a bi-order.
"""
from ordgroups.free_magnus import commutator, lcs_degree, magnus_expand, magnus_oracle, magnus_sign, random_free_word, word
from ordgroups.order_core import SampleSet, verify_bi_invariance

x, y = word(2, 1), word(2, 2)
c = commutator(x, y)
print("expansion of [x, y] up to degree 3:")
for mono, coef in sorted(magnus_expand(c, 3).terms.items(), key=lambda t: (len(t[0]), t[0])):
    print("   ", coef, "".join("XY"[i - 1] for i in mono) or "1")

print("sign of [x, y]:", magnus_sign(c).label)
print("lower central series degrees:", lcs_degree(x), lcs_degree(c), lcs_degree(commutator(c, y)))

samples = SampleSet.generate(lambda rng: random_free_word(rng, 2, 8), 300, seed=1)
report = verify_bi_invariance(magnus_oracle(2), samples)
print(f"bi-invariance on {report.checked} triples: {len(report.violations)} violations")
