"""
F(t, u) = (1+u)^z prod_r (1 + u/(1+u) * t x_r/(1 - t x_r))
===========================================================

z is a formal symbol, so coefficients are polynomials in z. The product
can be expanded in three ways: monomial functions, or power sums with
either of two coefficient families.
"""

from waring import F_direct, F_expansion, expand

N = 4
F = F_direct(N, 3, 3)

# The t^0 u^2 coefficient is binom(z, 2)
print(F.coefficient(0, 2).to_string())

# u^i t^j through the three expansions, each compared with the product
i, j = 2, 2
for variant in ("monome", "puissance1", "puissance2"):
    expr = F_expansion(variant, i, j)
    same = expand(expr, N) == F.coefficient(j, i)
    print(variant, expr.basis, len(expr.terms), "terms, matches product:", same)

# Coefficients in z, for example the p_{2,1} term
for mu, c in F_expansion("puissance1", 2, 1).terms.items():
    print(f"p{mu}: {c}")
