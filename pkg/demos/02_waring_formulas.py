"""
Classical basis changes and the oracle
=======================================

Symbolic expansions live in the p, e, h, m bases. The oracle substitutes
N concrete variables and compares exact polynomials.
"""

from waring import complete_in_power, expand, power_in_elementary, power_in_homogeneous, power_poly


def show(expr):
    print(", ".join(f"{c}*{expr.basis}{mu}" for mu, c in expr.terms.items()))


# p_4 in the elementary basis; coefficients are signed n(l-1)!/prod m_i!
show(power_in_elementary(4))

# the h-basis version only differs by a sign
show(power_in_homogeneous(4))

# h_3 in power sums, the familiar 1/z_mu weights
show(complete_in_power(3))

# Check against 6 concrete variables
N = 6
for n in range(1, N + 1):
    assert expand(power_in_elementary(n), N) == power_poly(n, N)
print("power sums agree with both expansions for n <= 6")

# Only 2 variables would make e_{111}, e_{21}, e_3 linearly dependent,
# so expand() refuses to run.
try:
    expand(power_in_elementary(3), 2)
except ValueError as exc:
    print("refused:", exc)
