from fractions import Fraction

import pytest

from waring.arith import MultiPoly, binom_int
from waring.partitions import partitions_of
from waring.symfunc import (
    SymExpr,
    complete_in_power,
    complete_poly,
    elementary_in_power,
    elementary_poly,
    expand,
    monomial_poly,
    power_in_elementary,
    power_in_homogeneous,
    power_poly,
    shifted_power_series,
    transformed_basis_series,
    transformed_monomial_series,
)


def xs(N):
    return [MultiPoly.variable(i, N) for i in range(N)]


def exact_rank(rows):
    rows = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = Fraction(rows[r][col]) / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def test_power_poly_examples():
    x = xs(3)
    assert power_poly(1, 2) == xs(2)[0] + xs(2)[1]
    assert power_poly(2, 3) == x[0] ** 2 + x[1] ** 2 + x[2] ** 2
    assert power_poly(3, 1) == xs(1)[0] ** 3


def test_elementary_complete_monomial_examples():
    x = xs(3)
    assert elementary_poly(2, 3) == x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    assert elementary_poly(4, 3).is_zero()
    y = xs(2)
    assert complete_poly(2, 2) == y[0] ** 2 + y[0] * y[1] + y[1] ** 2
    assert monomial_poly((2, 1), 2) == y[0] ** 2 * y[1] + y[0] * y[1] ** 2
    with pytest.raises(ValueError):
        monomial_poly((1, 1, 1), 2)


def test_expand_examples():
    newton = SymExpr.atom("p", (2,))
    e_side = SymExpr("e", {(1, 1): 1, (2,): -2})
    assert expand(newton, 3) == expand(e_side, 3)
    assert expand(SymExpr.atom("h", (1,)), 4) == expand(SymExpr.atom("p", (1,)), 4)
    assert expand(SymExpr.atom("m", (1, 1)), 4) == expand(SymExpr.atom("e", (2,)), 4)


def test_expand_rejects_too_few_variables():
    with pytest.raises(ValueError):
        expand(SymExpr.atom("e", (2, 1)), 2)


def test_transition_examples():
    assert complete_in_power(2) == SymExpr("p", {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert elementary_in_power(2) == SymExpr("p", {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})
    assert complete_in_power(1) == SymExpr.atom("p", (1,))
    assert power_in_elementary(2) == SymExpr("e", {(1, 1): 1, (2,): -2})
    assert power_in_elementary(3) == SymExpr("e", {(1, 1, 1): 1, (2, 1): -3, (3,): 3})
    assert power_in_elementary(1) == SymExpr.atom("e", (1,))


def test_transitions_pass_the_oracle():
    N = 6
    for n in range(1, 7):
        assert expand(complete_in_power(n), N) == complete_poly(n, N)
        assert expand(elementary_in_power(n), N) == elementary_poly(n, N)
        assert expand(power_in_elementary(n), N) == power_poly(n, N)
        assert expand(power_in_homogeneous(n), N) == power_poly(n, N)


def test_elementary_basis_is_faithful():
    for d in range(1, 7):
        N = d
        polys = [expand(SymExpr.atom("e", lam), N) for lam in partitions_of(d)]
        monos = sorted({e for p in polys for e in p.terms})
        rows = [[p.coefficient(e).constant() for e in monos] for p in polys]
        assert exact_rank(rows) == len(polys)


def test_too_few_variables_collapse_the_basis():
    # why expand() insists on N >= degree: e_{111}, e_{21}, e_3 are dependent in 2 variables
    from waring.symfunc import basis_poly
    polys = [basis_poly("e", lam, 2) for lam in partitions_of(3)]
    monos = sorted({e for p in polys for e in p.terms})
    rows = [[p.coefficient(e).constant() for e in monos] for p in polys]
    assert exact_rank(rows) < 3


def test_transformed_p1_examples():
    x = xs(2)
    s = transformed_basis_series("p", 1, 2, 2)
    assert s.coefficient(0) == x[0] + x[1]
    assert s.coefficient(1) == x[0] ** 2 + x[1] ** 2
    assert s.coefficient(2) == x[0] ** 3 + x[1] ** 3


def test_transformed_e_with_too_few_letters_is_zero():
    assert transformed_basis_series("e", 4, 3, 3).is_zero()


def test_transformed_degree_one_agree():
    a = transformed_basis_series("p", 1, 4, 4)
    assert a == transformed_basis_series("h", 1, 4, 4) == transformed_basis_series("e", 1, 4, 4)
    assert a == transformed_monomial_series((1,), 4, 4)


def test_transformed_t0_slice_is_classical():
    for k in range(1, 6):
        assert transformed_basis_series("h", k, 6, 1).coefficient(0) == complete_poly(k, 6)
        assert transformed_basis_series("e", k, 6, 1).coefficient(0) == elementary_poly(k, 6)


def test_transformed_monomial_m11_is_e2():
    assert transformed_monomial_series((1, 1), 4, 3) == transformed_basis_series("e", 2, 4, 3)


def test_shifted_power_series_examples():
    s1 = shifted_power_series(1, 3, 4)
    for d in range(5):
        assert s1.coefficient(d) == power_poly(d + 1, 3)
    s2 = shifted_power_series(2, 3, 2)
    assert s2.coefficient(1) == power_poly(3, 3).scale(2)
    assert s2.coefficient(2) == power_poly(4, 3).scale(binom_int(3, 1))


def test_shifted_power_series_matches_transformed_letters():
    for k in range(1, 5):
        assert shifted_power_series(k, 6, 6) == transformed_basis_series("p", k, 6, 6)


def test_symexpr_basics():
    a = SymExpr("e", {(2,): 1, (1, 1): 3})
    assert (a - a).is_zero()
    assert a.degree() == 2
    assert a.homogeneous_part(2) == a
    assert a.coefficient((1, 1)) == 3
    with pytest.raises(ValueError):
        a + SymExpr.atom("p", (2,))
    with pytest.raises(ValueError):
        SymExpr("s", {})
