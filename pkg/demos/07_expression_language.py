"""
The expression language and the command line
=============================================

Expressions are parsed, printed back, evaluated in N variables and compared.
The `waring` command is a thin shell over the same calls.
"""

from waring import cli
from waring.dsl import evaluate, parse, to_text

tree = parse("p[2](X) - (e[1,1](X) - 2*e[2](X))")
print(tree)
print(to_text(tree))
print("zero:", evaluate(tree, 4).is_zero())

# Transformed atoms evaluate as t-series
print(evaluate(parse("h[1](X/(1-t*X))^2"), 2, 2).to_string())

# Errors carry a position
try:
    parse("p[2](X) + q[1](X)")
except ValueError as exc:
    print(exc)

# Same as `waring check ...` and `waring binom ...` in a shell
cli.main(["check", "m[1,1](X) == e[2](X)", "--vars", "4"])
cli.main(["binom", "--mu", "3,1"])
