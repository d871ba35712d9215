from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from waring.arith import BiSeries, series_mul
from waring.dsl import (
    Add,
    Atom,
    DSLSyntaxError,
    Mul,
    Neg,
    Num,
    Pow,
    Sub,
    degree,
    evaluate,
    parse,
    to_text,
)
from waring.partitions import Partition
from waring.symfunc import power_poly


def atom(basis, *parts, transformed=False):
    return Atom(basis, Partition(parts), transformed)


def test_parse_examples():
    assert parse("p[2](X)") == atom("p", 2)
    assert parse("e[1,1](X) - 2*e[2](X)") == Sub(atom("e", 1, 1), Mul(Num(Fraction(2)), atom("e", 2)))
    assert parse("p[3](X/(1-t*X))") == atom("p", 3, transformed=True)


def test_parse_precedence():
    assert parse("1 + 2*p[1](X)^2") == Add(Num(1), Mul(Num(2), Pow(atom("p", 1), 2)))
    assert parse("-p[1](X)^2") == Neg(Pow(atom("p", 1), 2))
    assert parse("p[1](X) - h[1](X) - e[1](X)") == Sub(Sub(atom("p", 1), atom("h", 1)), atom("e", 1))
    assert parse("3/4") == Num(Fraction(3, 4))
    assert parse(" p [ 2 , 1 ] ( X / ( 1 - t * X ) ) ") == atom("p", 2, 1, transformed=True)


@pytest.mark.parametrize("text,line,col,fragment", [
    ("q[2](X)", 1, 1, "unknown basis letter"),
    ("p[1,2](X)", 1, 2, "malformed partition"),
    ("p[0](X)", 1, 2, "malformed partition"),
    ("p[2](Y)", 1, 6, "expected"),
    ("p[2](X) +", 1, 10, "end of input"),
    ("p[2](X)\n  + ?", 2, 5, "unexpected character"),
    ("1/0", 1, 3, "zero denominator"),
    ("p[2](X/(1-u*X))", 1, 11, "expected"),
    ("(p[1](X)", 1, 9, "expected ')'"),
    ("p[1](X) p[1](X)", 1, 9, "unexpected"),
])
def test_parse_errors_carry_position(text, line, col, fragment):
    with pytest.raises(DSLSyntaxError) as info:
        parse(text)
    err = info.value
    assert (err.line, err.column) == (line, col)
    assert fragment in str(err)


ROUND_TRIP_CORPUS = [
    "p[2](X)",
    "p[2,1](X)",
    "e[1,1](X) - 2*e[2](X)",
    "p[3](X/(1-t*X))",
    "m[2,1](X/(1-t*X))",
    "h[3](X) - h[2,1](X)",
    "1/2*p[1,1](X) + 1/2*p[2](X)",
    "-p[1](X)",
    "--p[1](X)",
    "-(p[1](X) + p[2](X))",
    "(p[1](X) + p[2](X))^2",
    "p[1](X)^2^3",
    "(p[1](X)^2)^3",
    "-p[1](X)^2",
    "(-p[1](X))^2",
    "p[1](X) - (h[1](X) - e[1](X))",
    "(p[1](X) - h[1](X)) - e[1](X)",
    "p[1](X)*(h[1](X)*e[1](X))",
    "(p[1](X)*h[1](X))*e[1](X)",
    "p[1](X)*(h[1](X) + e[1](X))",
    "(p[1](X) + h[1](X))*e[1](X)",
    "p[1](X)*-e[1](X)",
    "2*-3",
    "0",
    "7/3",
    "(1)",
    "((((p[4](X)))))",
    "e[2](X/(1-t*X)) - e[1,1](X/(1-t*X)) + p[2](X/(1-t*X))",
    "m[1,1](X) - e[2](X)",
    "h[1](X/(1-t*X)) - p[1](X/(1-t*X))",
    "3*h[2,2,1](X) - 1/5*e[3,1,1](X) + m[5](X)",
    "(2/3)^4*p[1](X)",
    "p[1](X) + -p[1](X)",
    "1 - 2 + 3 - 4",
    "1 - (2 + 3) - 4",
]


@pytest.mark.parametrize("text", ROUND_TRIP_CORPUS)
def test_round_trip(text):
    tree = parse(text)
    printed = to_text(tree)
    assert parse(printed) == tree
    assert to_text(parse(printed)) == printed


def test_round_trip_corpus_size():
    assert len(ROUND_TRIP_CORPUS) >= 30


def test_printer_drops_redundant_parentheses():
    assert to_text(parse("((p[1](X)))*(2)")) == "p[1](X)*2"
    assert to_text(parse("p[1](X) - (h[1](X) - e[1](X))")) == "p[1](X) - (h[1](X) - e[1](X))"


def test_degree():
    assert degree(parse("p[2,1](X)*e[3](X) - 1")) == 6
    assert degree(parse("(h[2](X) + 1)^3")) == 6


@pytest.mark.parametrize("text", [
    "p[2](X) - e[1,1](X) + 2*e[2](X)",
    "h[1](X/(1-t*X)) - p[1](X/(1-t*X))",
    "m[1,1](X) - e[2](X)",
    "p[2](X) + p[1,1](X) - 2*h[2](X)",
    "m[1,1](X/(1-t*X)) - e[2](X/(1-t*X))",
])
def test_eval_zero_examples(text):
    assert evaluate(parse(text), 6, 5).is_zero()


def test_eval_transformed_power_is_shifted():
    s = evaluate(parse("p[1](X/(1-t*X))"), 3, 3)
    for d in range(4):
        assert s.coefficient(d) == power_poly(d + 1, 3)


def test_eval_needs_enough_variables():
    with pytest.raises(ValueError):
        evaluate(parse("e[3](X)"), 2)
    with pytest.raises(ValueError):
        evaluate(parse("1"), 0)


# random small expressions for the homomorphism property
atoms = st.builds(
    lambda b, lam, tr: Atom(b, Partition(lam), tr),
    st.sampled_from("pehm"),
    st.sampled_from([(1,), (2,), (1, 1)]),
    st.booleans(),
)
# the grammar has no negative literals; negation is a Neg node
nums = st.fractions(min_value=0, max_value=3, max_denominator=3).map(Num)
leaves = st.one_of(atoms, nums)
small_exprs = st.recursive(
    leaves,
    lambda kids: st.one_of(st.builds(Add, kids, kids), st.builds(Mul, kids, kids), st.builds(Neg, kids)),
    max_leaves=3,
)

N, T = 4, 2


def _fits(*nodes):
    return sum(degree(n) for n in nodes) <= N


@settings(max_examples=60, deadline=None)
@given(small_exprs, small_exprs)
def test_eval_is_a_homomorphism(a, b):
    if not _fits(a, b):
        return
    ea, eb = evaluate(a, N, T), evaluate(b, N, T)
    assert evaluate(Add(a, b), N, T) == ea + eb
    assert evaluate(Sub(a, b), N, T) == ea - eb
    assert evaluate(Mul(a, b), N, T) == series_mul(ea, eb)
    assert evaluate(Neg(a), N, T) == -ea


@settings(max_examples=60, deadline=None)
@given(small_exprs)
def test_printer_round_trips_random_trees(tree):
    assert parse(to_text(tree)) == tree


def test_eval_literal():
    assert evaluate(Num(Fraction(2, 3)), 1, 2) == BiSeries.constant(2, 0, 1, Fraction(2, 3))
