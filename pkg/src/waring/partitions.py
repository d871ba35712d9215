"""Integer partitions and the statistics attached to them.

Also home to the generalized binomial <mu/k> (choose k cells of the Ferrers
diagram with at least one in each row), Ferrers alphabets and the
generalized Pochhammer symbol (x)_lambda.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .arith import ZPoly, rising_factorial

__all__ = [
    "Partition",
    "FerrersAlphabet",
    "partitions_of",
    "partition_count",
    "z_of",
    "lassalle_binom",
    "lassalle_binom_genfun",
    "lassalle_binom_brute",
    "ferrers_alphabet",
    "pochhammer_lambda",
]

# beyond this k, lassalle_binom switches to the product generating function
COMPOSITION_CUTOFF = 12


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        if isinstance(parts, int):
            parts = (parts,)
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse ``"2,1"`` or ``"[2,1]"``; the empty string is the empty partition."""
        text = text.strip().strip("[]()").strip()
        if not text:
            return cls(())
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition: {text!r}") from None
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """m_i for every part value i that occurs."""
        return dict(Counter(self))

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def cells(self):
        """Cells (i, j) of the Ferrers diagram, 1-based, row by row."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(str(p) for p in self) + "]"


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence; independent of the enumerator."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def z_of(mu) -> int:
    """z_mu = prod_i i^{m_i} m_i!."""
    return prod(i ** m * factorial(m) for i, m in Counter(mu).items())


@lru_cache(maxsize=None)
def _composition_sum(parts: tuple, k: int) -> int:
    # sum over k_1+...+k_l = k, k_r >= 1, of prod C(parts[r], k_r)
    if not parts:
        return 1 if k == 0 else 0
    head, tail = parts[0], parts[1:]
    rest_min = len(tail)
    rest_max = sum(tail)
    total = 0
    for kr in range(1, head + 1):
        left = k - kr
        if left < rest_min:
            break
        if left > rest_max:
            continue
        total += comb(head, kr) * _composition_sum(tail, left)
    return total


def lassalle_binom(mu, k: int) -> int:
    """Number of ways to pick ``k`` cells of ``mu`` with at least one per row."""
    mu = Partition(mu)
    if k < mu.length or k > mu.weight:
        return 1 if (k == 0 and mu.length == 0) else 0
    if k <= COMPOSITION_CUTOFF:
        return _composition_sum(tuple(mu), k)
    return lassalle_binom_genfun(mu, mu.weight)[k]


def lassalle_binom_genfun(mu, q_order: int) -> list[int]:
    """Coefficients (index = power of q) of prod_i ((1+q)^i - 1)^{m_i}.

    The list has length ``q_order + 1``; ``q_order`` must be at least |mu| so
    that nothing is truncated.
    """
    mu = Partition(mu)
    if q_order < mu.weight:
        raise ValueError(f"q_order {q_order} is below |mu| = {mu.weight}")
    poly = [1]
    for part in mu:
        factor = [comb(part, s) for s in range(part + 1)]
        factor[0] = 0
        new = [0] * (len(poly) + part)
        for a, x in enumerate(poly):
            if x:
                for b, y in enumerate(factor):
                    new[a + b] += x * y
        poly = new
    poly += [0] * (q_order + 1 - len(poly))
    return poly


def lassalle_binom_brute(mu, k: int) -> int:
    """Direct count over k-subsets of cells; exponential, for testing."""
    from itertools import combinations

    mu = Partition(mu)
    cells = list(mu.cells())
    rows = set(range(1, mu.length + 1))
    return sum(1 for pick in combinations(cells, k) if {i for i, _ in pick} == rows)


@dataclass(frozen=True)
class FerrersAlphabet:
    """Multiset of cell values j-1-(i-1)/alpha over the cells of ``shape``."""

    values: tuple
    alpha: Fraction
    shape: Partition

    def power_sum(self, n: int) -> Fraction:
        return sum((v ** n for v in self.values), Fraction(0))

    def power_product(self, mu) -> Fraction:
        """p_mu evaluated on the alphabet (1 for the empty partition)."""
        out = Fraction(1)
        for part in mu:
            out *= self.power_sum(part)
        return out

    def __len__(self):
        return len(self.values)


def ferrers_alphabet(lam, alpha) -> FerrersAlphabet:
    lam = Partition(lam)
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    values = tuple(Fraction(j - 1) - Fraction(i - 1) / alpha for i, j in lam.cells())
    return FerrersAlphabet(values, alpha, lam)


def pochhammer_lambda(x, lam, alpha):
    """(x)_lambda = prod over cells (i, j) of (x + j - 1 - (i-1)/alpha).

    ``x`` may be an exact scalar or a :class:`ZPoly`; one-row shapes reduce to
    the rising factorial.
    """
    lam = Partition(lam)
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if lam.length == 1:
        return rising_factorial(x, lam[0])
    out = ZPoly.one() if isinstance(x, ZPoly) else Fraction(1)
    for c in ferrers_alphabet(lam, alpha).values:
        out = out * (x + c)
    return out
