"""Acceptance sweeps: every check is exact, each runs under its own time limit."""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

from waring.dsl import parse, to_text
from waring.identities import (
    evaluate_w_series,
    thm5_closed_form,
    thm5_sides,
    thm5_truncation_bound,
    t0_slices_match_classical,
    verify,
)
from waring.partitions import lassalle_binom, lassalle_binom_brute, lassalle_binom_genfun, partitions_of
from waring.symfunc import expand, power_in_elementary, power_in_homogeneous, power_poly

from test_cli import GOLDEN, GOLDEN_CASES
from test_dsl import ROUND_TRIP_CORPUS


def _all_verified(ident, param_list):
    bad = [p for p in param_list if not verify(ident, p).verified]
    assert not bad, f"{ident} failed for {bad}"
    return len(param_list)


def test_waring_baseline(criterion):
    with criterion("Waring baseline, n <= 6, N = 6", 1) as c:
        for n in range(1, 7):
            assert expand(power_in_elementary(n), 6) == power_poly(n, 6)
            assert expand(power_in_homogeneous(n), 6) == power_poly(n, 6)
        c.detail = "12 expansions"


def test_transformed_power_expansions(criterion):
    with criterion("p_k on X/(1-tX) in e and h bases, k <= 4, N = t_order = 6", 30) as c:
        count = 0
        for ident in ("thm1_e", "thm1_h"):
            count += _all_verified(ident, [{"k": k, "t_order": 6, "N": 6} for k in range(1, 5)])
        c.detail = f"{count} instances"


def test_transformed_h_e_in_power_sums(criterion):
    with criterion("h_k and e_k on X/(1-tX) in p basis, k <= 4, N = t_order = 6", 30) as c:
        count = 0
        for ident in ("thm2_h", "thm2_e"):
            count += _all_verified(ident, [{"k": k, "t_order": 6, "N": 6} for k in range(1, 5)])
        c.detail = f"{count} instances"


def test_F_expansions(criterion):
    with criterion("three expansions of F(t,u) vs direct product, i + j <= 6, N = 6", 60) as c:
        grid = [{"i": i, "j": j, "N": 6} for i in range(7) for j in range(7 - i)]
        count = sum(_all_verified(ident, grid) for ident in ("thm3_m", "thm3_p1", "thm3_p2"))
        c.detail = f"{count} instances"


def test_binomial_sum_in_z(criterion):
    with criterion("z-polynomial identity over mu |- j, 1 <= i, j <= 5", 5) as c:
        params = [{"i": i, "j": j, "mu": mu} for i in range(1, 6) for j in range(1, 6) for mu in partitions_of(j)]
        assert sum(1 for p in params if p["j"] == 5) == 5 * 7
        c.detail = f"{_all_verified('cor4', params)} instances"


def test_monomial_expansion(criterion):
    with criterion("m_j-type expansion, 1 <= k <= j <= 6, N = 6", 10) as c:
        params = [{"k": k, "j": j, "N": 6} for j in range(1, 7) for k in range(1, j + 1)]
        c.detail = f"{_all_verified('cor5', params)} instances"


def test_pochhammer_ratio(criterion):
    alphas = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3, 2))
    with criterion("Pochhammer ratio series through w^6, |lambda| <= 4, four alphas", 30) as c:
        shapes = [lam for n in range(5) for lam in partitions_of(n)]
        count = _all_verified("thm5", [{"lam": lam, "alpha": a, "w_order": 6} for lam in shapes for a in alphas])
        spot, divergent = 0, 0
        for lam in shapes:
            for a in alphas:
                try:
                    bound = thm5_truncation_bound(lam, a, 1, 3, 6)
                except ValueError:
                    divergent += 1
                    continue
                left, _ = thm5_sides(lam, a, 6)
                err = abs(evaluate_w_series(left, 1, Fraction(1, 3)) - thm5_closed_form(lam, a, 1, 3))
                assert err <= bound, (lam, a, err, bound)
                spot += 1
        assert spot + divergent == len(shapes) * len(alphas) and spot >= 40
        c.detail = f"{count} series, {spot} spot checks at (1,3), {divergent} outside convergence"


def test_power_sum_substitution(criterion):
    with criterion("z,u,y polynomial identity, 1 <= n, r <= 3, M = 3, u_order = 4", 60) as c:
        params = [{"n": n, "r": r, "M": 3, "u_order": 4} for n in range(1, 4) for r in range(1, 4)]
        c.detail = f"{_all_verified('thm6', params)} instances incl. r > n"


def test_appendix(criterion):
    with criterion("<mu/r> dual algorithm |mu| <= 8, factorization through t^3 q^2 u^2, M = 2", 60) as c:
        shapes = [mu for n in range(9) for mu in partitions_of(n)]
        for mu in shapes:
            gen = lassalle_binom_genfun(mu, mu.weight)
            assert gen == [lassalle_binom(mu, r) for r in range(mu.weight + 1)]
            if mu.weight <= 6:
                assert gen == [lassalle_binom_brute(mu, r) for r in range(mu.weight + 1)]
        assert verify("app_factorization", {"n_max": 3, "r_max": 2, "M": 2, "u_order": 2}).verified
        c.detail = f"{len(shapes)} partitions"


def test_t0_degeneration(criterion):
    with criterion("t = 0 slices reduce to classical expansions, k <= 5", 5):
        for k in range(1, 6):
            assert t0_slices_match_classical(k), k


def test_parser_and_golden(criterion):
    with criterion("parser round-trip and byte-stable golden reports", 30) as c:
        for text in ROUND_TRIP_CORPUS:
            tree = parse(text)
            assert parse(to_text(tree)) == tree
        for name, argv in GOLDEN_CASES.items():
            expected = (GOLDEN / name).read_bytes()
            for _ in range(2):
                out = subprocess.run([sys.executable, "-m", "waring", *argv], capture_output=True, check=True).stdout
                assert out == expected, name
            assert json.loads(expected)["status"] == "verified"
        c.detail = f"{len(ROUND_TRIP_CORPUS)} expressions, {len(GOLDEN_CASES)} golden files"
