"""
Replacing each letter x by x/(1 - t x)
=======================================

Every letter turns into a geometric series in t. Power sums pick up
binomial weights, and the e and h families take closed forms in the other
bases.
"""

from waring import shifted_power_series, thm1_rhs, thm2_rhs, transformed_basis_series, verify

# p_2(X/(1-tX)) = sum_j t^{j-2} (j-1) p_j(X)
s = shifted_power_series(2, 3, 3)
print(s.to_string())
assert s == transformed_basis_series("p", 2, 3, 3)

# p_2 on the transformed alphabet, written in the e basis: one slice per t-degree
for d, expr in enumerate(thm1_rhs("e", 2, 2)):
    print(f"t^{d}:", {str(k): str(v) for k, v in expr.terms.items()})

# h_2 on the transformed alphabet, in power sums
for d, expr in enumerate(thm2_rhs("h", 2, 2)):
    print(f"t^{d}:", {str(k): str(v) for k, v in expr.terms.items()})

# The exact check, in 6 variables through t^4
print(verify("thm1_e", {"k": 2, "t_order": 4, "N": 6}).to_text())
print(verify("thm2_h", {"k": 3, "t_order": 4, "N": 6}).to_text())
