"""Symmetric-function expressions in the m, e, h, p bases.

A :class:`SymExpr` is an abstract linear combination of basis elements
indexed by partitions.  :func:`expand` is the brute-force oracle: it
substitutes N concrete variables and multiplies everything out, so identities
between expressions reduce to exact :class:`MultiPoly` equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial, prod

from .arith import BiSeries, MultiPoly, ZPoly, binom_int, sign
from .partitions import Partition, partitions_of, z_of

__all__ = [
    "BASES",
    "SymExpr",
    "power_poly",
    "elementary_poly",
    "complete_poly",
    "monomial_poly",
    "basis_poly",
    "power_product_poly",
    "expand",
    "complete_in_power",
    "elementary_in_power",
    "power_in_elementary",
    "power_in_homogeneous",
    "waring_coefficient",
    "transformed_letters",
    "transformed_basis_series",
    "transformed_monomial_series",
    "shifted_power_series",
]

BASES = ("m", "e", "h", "p")


class SymExpr:
    """Sparse linear combination of one basis, with ZPoly coefficients."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for mu, c in (terms or {}).items():
            mu = Partition(mu)
            if not isinstance(c, ZPoly):
                c = ZPoly.const(c)
            if not c.is_zero():
                clean[mu] = clean[mu] + c if mu in clean else c
        self.terms = {mu: c for mu, c in clean.items() if not c.is_zero()}

    @classmethod
    def atom(cls, basis: str, mu, coeff=1) -> "SymExpr":
        return cls(basis, {Partition(mu): coeff})

    def degree(self) -> int:
        return max((mu.weight for mu in self.terms), default=0)

    def homogeneous_part(self, d: int) -> "SymExpr":
        return SymExpr(self.basis, {mu: c for mu, c in self.terms.items() if mu.weight == d})

    def coefficient(self, mu) -> ZPoly:
        return self.terms.get(Partition(mu), ZPoly.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.basis != other.basis:
            raise ValueError(f"cannot combine {self.basis}-basis with {other.basis}-basis directly; expand first")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out[mu] + c if mu in out else c
        return SymExpr(self.basis, out)

    def __neg__(self):
        return SymExpr(self.basis, {mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymExpr":
        return SymExpr(self.basis, {mu: v * c for mu, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].weight, tuple(-p for p in kv[0])))
        pieces = []
        for mu, c in items:
            atom = f"{self.basis}{mu}"
            pieces.append(atom if c == 1 else f"({c})*{atom}")
        return " + ".join(pieces)

    __repr__ = __str__


# -- concrete polynomials in N variables -----------------------------------

def _from_exponents(exps_iter, nvars):
    terms = {}
    for e in exps_iter:
        terms[e] = terms.get(e, 0) + 1
    return MultiPoly(nvars, {e: c for e, c in terms.items()})


@lru_cache(maxsize=None)
def power_poly(n: int, N: int) -> MultiPoly:
    """p_n(x_1..x_N) = sum of n-th powers."""
    if n < 1 or N < 1:
        raise ValueError("power_poly needs n >= 1 and N >= 1")
    exps = []
    for r in range(N):
        e = [0] * N
        e[r] = n
        exps.append(tuple(e))
    return _from_exponents(exps, N)


@lru_cache(maxsize=None)
def elementary_poly(n: int, N: int) -> MultiPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    exps = []
    for subset in combinations(range(N), n):
        e = [0] * N
        for r in subset:
            e[r] = 1
        exps.append(tuple(e))
    return _from_exponents(exps, N)


@lru_cache(maxsize=None)
def complete_poly(n: int, N: int) -> MultiPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    exps = []
    for multiset in combinations_with_replacement(range(N), n):
        e = [0] * N
        for r in multiset:
            e[r] += 1
        exps.append(tuple(e))
    return _from_exponents(exps, N)


@lru_cache(maxsize=None)
def monomial_poly(mu, N: int) -> MultiPoly:
    """m_mu: sum over distinct rearrangements of mu padded with zeros."""
    mu = Partition(mu)
    if mu.length > N:
        raise ValueError(f"m{mu} needs at least {mu.length} variables, got {N}")
    pattern = tuple(mu) + (0,) * (N - mu.length)
    return MultiPoly(N, {e: 1 for e in set(permutations(pattern))})


@lru_cache(maxsize=None)
def power_product_poly(mu, N: int) -> MultiPoly:
    """p_mu = prod p_{mu_r} in N variables, with no faithfulness check."""
    mu = Partition(mu)
    if not mu:
        return MultiPoly.constant(N, 1)
    return power_poly(mu[0], N) * power_product_poly(Partition(mu[1:]), N)


@lru_cache(maxsize=None)
def basis_poly(basis: str, mu, N: int) -> MultiPoly:
    mu = Partition(mu)
    if basis == "m":
        if mu.length > N:
            return MultiPoly.zero(N)
        return monomial_poly(mu, N)
    if basis == "p":
        return power_product_poly(mu, N)
    if basis not in ("e", "h"):
        raise ValueError(f"unknown basis {basis!r}")
    if not mu:
        return MultiPoly.constant(N, 1)
    single = elementary_poly if basis == "e" else complete_poly
    # peel the largest part so that shared tails hit the cache
    return single(mu[0], N) * basis_poly(basis, Partition(mu[1:]), N)


def expand(expr: SymExpr, N: int) -> MultiPoly:
    """Oracle expansion of ``expr`` into N concrete variables.

    Rejects N below the degree of ``expr``: below that bound distinct
    symmetric functions can collapse to the same polynomial.
    """
    if N < max(expr.degree(), 1):
        raise ValueError(f"{N} variables cannot faithfully represent degree {expr.degree()}")
    return MultiPoly.linear_combination(N, [(c, basis_poly(expr.basis, mu, N)) for mu, c in expr.terms.items()])


# -- classical transition formulas -----------------------------------------

def complete_in_power(n: int) -> SymExpr:
    """h_n = sum_{mu |- n} p_mu / z_mu."""
    return SymExpr("p", {mu: Fraction(1, z_of(mu)) for mu in partitions_of(n)})


def elementary_in_power(n: int) -> SymExpr:
    """e_n = sum_{mu |- n} (-1)^{n - l(mu)} p_mu / z_mu."""
    return SymExpr("p", {mu: Fraction(sign(n - len(mu)), z_of(mu)) for mu in partitions_of(n)})


def waring_coefficient(lam) -> Fraction:
    """|lam| (l-1)! / prod m_i!, the unsigned coefficient of e_lam (or h_lam) in p_n."""
    lam = Partition(lam)
    n, l = lam.weight, lam.length
    return Fraction(n * factorial(l - 1), prod(factorial(m) for m in lam.multiplicities().values()))


def power_in_elementary(n: int) -> SymExpr:
    if n < 1:
        raise ValueError("n must be positive")
    return SymExpr("e", {lam: sign(n - len(lam)) * waring_coefficient(lam) for lam in partitions_of(n)})


def power_in_homogeneous(n: int) -> SymExpr:
    if n < 1:
        raise ValueError("n must be positive")
    return SymExpr("h", {lam: sign(len(lam) - 1) * waring_coefficient(lam) for lam in partitions_of(n)})


# -- the transformed alphabet x_r / (1 - t x_r) ------------------------------

@lru_cache(maxsize=None)
def transformed_letters(N: int, t_order: int) -> tuple:
    """The letters x_r/(1 - t x_r) = sum_{m>=1} t^{m-1} x_r^m, truncated."""
    letters = []
    for r in range(N):
        coeffs = {}
        for m in range(1, t_order + 2):
            e = [0] * N
            e[r] = m
            coeffs[(m - 1, 0)] = MultiPoly(N, {tuple(e): 1})
        letters.append(BiSeries(t_order, 0, N, coeffs))
    return tuple(letters)


def _letter_product(letters, indices, t_order, N):
    out = BiSeries.one(t_order, 0, N)
    for r in indices:
        out = out * letters[r]
    return out


def transformed_basis_series(basis: str, k: int, N: int, t_order: int) -> BiSeries:
    """p_k, h_k or e_k evaluated on the N letters x_r/(1 - t x_r).

    Computed straight from the definitions (powers, k-multisets, k-subsets of
    letters), never through a generating function.
    """
    if k < 1:
        raise ValueError("k must be positive")
    letters = transformed_letters(N, t_order)
    out = BiSeries.zero(t_order, 0, N)
    if basis == "p":
        for r in range(N):
            out = out + letters[r] ** k
    elif basis == "h":
        for idx in combinations_with_replacement(range(N), k):
            out = out + _letter_product(letters, idx, t_order, N)
    elif basis == "e":
        for idx in combinations(range(N), k):
            out = out + _letter_product(letters, idx, t_order, N)
    else:
        raise ValueError(f"transformed_basis_series supports p, h, e, not {basis!r}")
    return out


def transformed_monomial_series(mu, N: int, t_order: int) -> BiSeries:
    """m_mu on the transformed letters: orbit sum of letter monomials."""
    mu = Partition(mu)
    letters = transformed_letters(N, t_order)
    out = BiSeries.zero(t_order, 0, N)
    if mu.length > N:
        return out
    pattern = tuple(mu) + (0,) * (N - mu.length)
    for exps in set(permutations(pattern)):
        term = BiSeries.one(t_order, 0, N)
        for r, a in enumerate(exps):
            if a:
                term = term * letters[r] ** a
        out = out + term
    return out


def shifted_power_series(k: int, N: int, t_order: int) -> BiSeries:
    """sum_{j=k}^{k+t_order} t^{j-k} C(j-1, k-1) p_j(x_1..x_N)."""
    if k < 1:
        raise ValueError("k must be positive")
    coeffs = {}
    for j in range(k, k + t_order + 1):
        coeffs[(j - k, 0)] = power_poly(j, N).scale(binom_int(j - 1, k - 1))
    return BiSeries(t_order, 0, N, coeffs)
