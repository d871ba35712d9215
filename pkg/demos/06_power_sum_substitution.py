"""
Substituting power sums and the q-factorization
================================================

Set x_i = p_i(Y). The left side becomes a polynomial in z, u and the letters
y_1..y_M, and it matches a sum weighted by <mu/r>. The cell-choosing
binomial also factors a two-parameter product, checked here slot by slot.
"""

from waring import lassalle_binom_genfun, thm6_sides, verify

left, right = thm6_sides(2, 1, 2, 2)
print(left.to_string(["y1", "y2"]))
assert left == right

# When r > n both sides vanish
l, r = thm6_sides(1, 2, 2, 2)
print("r > n:", l.is_zero(), r.is_zero())

# The generating function behind the weights
print(lassalle_binom_genfun((2, 2, 1), 5))

print(verify("app_factorization", {"n_max": 3, "r_max": 2, "M": 2, "u_order": 2}).to_text())
