"""
Generalized Pochhammer ratios as series in 1/y
===============================================

(x)_lambda takes a cell (i, j) to (x + j - 1 - (i - 1)/alpha). Shifting the
argument by -x and taking the ratio gives a product over the Ferrers
alphabet, and that product expands as a power series in w = 1/y.
"""

from fractions import Fraction

from waring import (
    evaluate_w_series,
    ferrers_alphabet,
    pochhammer_lambda,
    thm5_closed_form,
    thm5_sides,
    thm5_truncation_bound,
)

lam, alpha = (2, 1), Fraction(2)
print("alphabet:", [str(v) for v in ferrers_alphabet(lam, alpha).values])
print("(5)_lambda =", pochhammer_lambda(Fraction(5), lam, alpha))

left, right = thm5_sides(lam, alpha, 4)
print(left.to_string(["x"], t_name="w"))
assert left == right

# Evaluate at x = 1, y = 3 and compare with the exact rational value
exact = thm5_closed_form(lam, alpha, 1, 3)
for W in (2, 4, 8, 16):
    series, _ = thm5_sides(lam, alpha, W)
    approx = evaluate_w_series(series, 1, Fraction(1, 3))
    bound = thm5_truncation_bound(lam, alpha, 1, 3, W)
    print(f"w^{W:<2}  error {float(abs(approx - exact)):.2e}  bound {float(bound):.2e}")
