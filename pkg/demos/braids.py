"""
Braids and the Dehornoy order
=============================

Braid words are lists of signed generator indices: 2 means sigma_2 and -1
means sigma_1 inverse.  Handle reduction decides whether a word is trivial
and, if not, which sign it has in the Dehornoy order.
"""
from ordgroups.braid import (
    DDConeTable,
    braids_equal,
    dd_cone_check,
    dehornoy_compare,
    delta,
    handle_reduce,
    mn_prime_test,
    permutation,
    sigma,
)

# the braid relation and the cube identity
print("s1 s2 s1 == s2 s1 s2:", braids_equal(sigma(3, 1, 2, 1), sigma(3, 2, 1, 2)))
print("(s1 s2)^3 == (s2 s1)^3:", braids_equal(sigma(3, 1, 2) ** 3, sigma(3, 2, 1) ** 3))

# yet s1 s2 and s2 s1 differ: their permutations already do
for w in (sigma(3, 1, 2), sigma(3, 2, 1)):
    print(w, "->", permutation(w).cycle_notation())

# reduction of a word with a handle s1 ... s1^-1
r = handle_reduce(sigma(3, 1, 2, -1))
print("reduced:", r.word, r.classification)

# distinct cube roots of the same element cannot coexist with a bi-order,
# but the Dehornoy order is only left-invariant, and it ranks them
print("s1 s2 vs s2 s1:", dehornoy_compare(sigma(3, 1, 2), sigma(3, 2, 1)).label)

# the square of the half twist commutes with every generator
d2 = delta(4) ** 2
print("Delta_4^2 central:", all(braids_equal(d2 * sigma(4, i), sigma(4, i) * d2) for i in (1, 2, 3)))

# the Dubrovina-Dubrovin cone: products of s1 s2 and s2^-1
table = DDConeTable.build(12)
v = dd_cone_check(sigma(3, 2, 2, -1), table)
print("s2 s2 s1^-1 in the cone as", v.positive, "| inverse as", v.negative)

# a prime-knot criterion for closures of 2-braids
print("closure of s1^9:", mn_prime_test(sigma(2, *[1] * 9)).value)
