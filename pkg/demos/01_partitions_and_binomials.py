"""
Partitions, z_mu and the cell-choosing binomial
================================================

A partition mu also names a Ferrers diagram. <mu/k> counts the ways to pick k
cells from it with at least one cell in every row.
"""

from fractions import Fraction

from waring import Partition, lassalle_binom, lassalle_binom_genfun, partitions_of, z_of

# The 5 partitions of 4, largest first
for mu in partitions_of(4):
    print(f"{str(mu):>10}  length {mu.length}  z = {z_of(mu)}")

# 1/z_mu summed over mu |- n is always 1
print(sum(Fraction(1, z_of(mu)) for mu in partitions_of(6)))

# A single row gives back the ordinary binomial coefficients
print([lassalle_binom((5,), k) for k in range(6)])

# Every row of [3,1] has to be hit, so k runs from 2 up to 4
mu = Partition((3, 1))
print([lassalle_binom(mu, k) for k in range(5)])

# The same numbers read off prod_i ((1+q)^i - 1)^{m_i}
print(lassalle_binom_genfun(mu, mu.weight))
