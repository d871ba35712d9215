"""Exact scalar, polynomial and truncated-series arithmetic.

Everything here is exact: scalars are :class:`fractions.Fraction`, the formal
parameter ``z`` lives in :class:`ZPoly`, concrete symmetric functions in
:class:`MultiPoly` and bivariate truncated series in ``t``, ``u`` in
:class:`BiSeries`.  Values are immutable once built.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "ZPoly",
    "MultiPoly",
    "BiSeries",
    "sign",
    "binom_int",
    "binom_z",
    "rising_factorial",
    "series_mul",
    "series_geom_inverse",
    "grlex_key",
    "format_monomial",
]


def sign(n: int) -> int:
    """(-1)**n as an int, for any integer n."""
    return -1 if n % 2 else 1


def binom_int(n: int, k: int) -> Fraction:
    """Ordinary binomial C(n, k); ``n`` may be negative, zero for ``k < 0``."""
    if k < 0:
        return Fraction(0)
    num = 1
    for s in range(k):
        num *= n - s
    den = 1
    for s in range(2, k + 1):
        den *= s
    return Fraction(num, den)


def rising_factorial(x, n: int):
    """x (x+1) ... (x+n-1); works for Fraction, int or ZPoly ``x``."""
    if n < 0:
        raise ValueError("rising_factorial needs n >= 0")
    out = Fraction(1) if not isinstance(x, ZPoly) else ZPoly.one()
    for s in range(n):
        out = out * (x + s)
    return out


class ZPoly:
    """Dense univariate polynomial in the formal indeterminate ``z``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, coeffs):
        # coeffs: list of Fraction, possibly with trailing zeros
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def const(cls, c) -> "ZPoly":
        return cls._raw([Fraction(c)])

    @classmethod
    def one(cls) -> "ZPoly":
        return cls._raw([Fraction(1)])

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls._raw([])

    @classmethod
    def z(cls) -> "ZPoly":
        return cls._raw([Fraction(0), Fraction(1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, ZPoly):
            return other
        if isinstance(other, (int, _RationalABC)):
            return ZPoly._raw([Fraction(other)])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ZPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                return ZPoly._raw([])
            return ZPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, ZPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly._raw([])
        if len(b) == 1:
            return ZPoly._raw([c * b[0] for c in a])
        if len(a) == 1:
            return ZPoly._raw([a[0] * c for c in b])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ZPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ZPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, value):
        """Evaluate at an exact scalar by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ZPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                zpart = "z" if d == 1 else f"z^{d}"
                body = zpart if a == 1 else f"{a}*{zpart}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def binom_z(shift: int, k: int) -> ZPoly:
    """binom(z + shift, k) as a polynomial in z (zero for k < 0)."""
    if k < 0:
        return ZPoly.zero()
    out = ZPoly.one()
    for s in range(k):
        out = out * ZPoly._raw([Fraction(shift - s), Fraction(1)])
    fact = 1
    for s in range(2, k + 1):
        fact *= s
    return out * Fraction(1, fact)


def grlex_key(exps):
    """Graded-lex sort key: lower total degree first, then x_1 heaviest first."""
    return (sum(exps), tuple(-e for e in exps))


def format_monomial(exps, names=None) -> str:
    if names is None:
        names = [f"x{i + 1}" for i in range(len(exps))]
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def _as_zpoly(c) -> ZPoly:
    if isinstance(c, ZPoly):
        return c
    return ZPoly.const(c)


def _scalar_terms(terms):
    """``terms`` with z-free coefficients as ints (or Fractions); None if any depends on z."""
    out = {}
    integral = True
    for e, c in terms.items():
        if len(c.coeffs) != 1:
            return None
        v = c.coeffs[0]
        integral = integral and v.denominator == 1
        out[e] = v
    if integral:
        return {e: v.numerator for e, v in out.items()}
    return out


class MultiPoly:
    """Sparse polynomial in x_1..x_N with :class:`ZPoly` coefficients.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero ZPoly.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has wrong length for {nvars} variables")
                c = _as_zpoly(c)
                if not c.is_zero():
                    clean[exps] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultiPoly":
        c = _as_zpoly(c)
        return cls._raw(nvars, {} if c.is_zero() else {(0,) * nvars: c})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPoly":
        """The variable x_{index+1} (``index`` is 0-based)."""
        exps = [0] * nvars
        exps[index] = 1
        return cls._raw(nvars, {tuple(exps): ZPoly.one()})

    @classmethod
    def monomial(cls, exps, c=1) -> "MultiPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @classmethod
    def linear_combination(cls, nvars: int, pairs) -> "MultiPoly":
        """sum of coeff * poly over ``(coeff, poly)`` pairs."""
        pairs = [(_as_zpoly(c), p) for c, p in pairs]
        if all(c.is_const() for c, _ in pairs) and all(
            _scalar_terms(p.terms) is not None for _, p in pairs
        ):
            acc = {}
            for c, p in pairs:
                k = c.constant()
                if not k:
                    continue
                for e, v in p.terms.items():
                    acc[e] = acc.get(e, 0) + k * v.coeffs[0]
            return cls._raw(nvars, {e: ZPoly._raw([Fraction(v)]) for e, v in acc.items() if v})
        out = cls.zero(nvars)
        for c, p in pairs:
            out = out + p.scale(c)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = _as_zpoly(c)
        if c.is_zero():
            return MultiPoly.zero(self.nvars)
        out = {}
        for e, d in self.terms.items():
            p = d * c
            if not p.is_zero():
                out[e] = p
        return MultiPoly._raw(self.nvars, out)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (ZPoly, int, _RationalABC)):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        sa, sb = _scalar_terms(a), _scalar_terms(b)
        if sa is not None and sb is not None:
            acc = {}
            for eb, cb in sb.items():
                for ea, ca in sa.items():
                    e = tuple([x + y for x, y in zip(ea, eb)])
                    acc[e] = acc.get(e, 0) + ca * cb
            return MultiPoly._raw(
                self.nvars, {e: ZPoly._raw([Fraction(c)]) for e, c in acc.items() if c}
            )
        out = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                p = ca * cb
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MultiPoly.constant(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, _RationalABC, ZPoly)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def coefficient(self, exps) -> ZPoly:
        return self.terms.get(tuple(exps), ZPoly.zero())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))

    def evaluate(self, values):
        """Substitute exact scalars for x_1..x_N; the result is a ZPoly."""
        out = ZPoly.zero()
        for e, c in self.terms.items():
            m = Fraction(1)
            for v, k in zip(values, e):
                m *= Fraction(v) ** k
            out = out + c * m
        return out

    def filter_degree(self, index: int, max_degree: int) -> "MultiPoly":
        """Drop terms whose exponent of variable ``index`` exceeds ``max_degree``."""
        return MultiPoly._raw(
            self.nvars, {e: c for e, c in self.terms.items() if e[index] <= max_degree}
        )

    def to_string(self, names=None) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = format_monomial(e, names)
            if mono == "1":
                pieces.append(f"({c})")
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"({c})*{mono}")
        return " + ".join(pieces)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_string()})"


class BiSeries:
    """Truncated power series in ``t`` and ``u`` with MultiPoly coefficients.

    Truncation is inclusive: ``t_order = d`` keeps the t^d coefficient.
    Terms beyond either order are never stored.
    """

    __slots__ = ("t_order", "u_order", "nvars", "coeffs")

    def __init__(self, t_order: int, u_order: int, nvars: int, coeffs=None):
        if t_order < 0 or u_order < 0:
            raise ValueError("truncation orders must be nonnegative")
        self.t_order = t_order
        self.u_order = u_order
        self.nvars = nvars
        clean = {}
        if coeffs:
            for (dt, du), c in coeffs.items():
                if dt > t_order or du > u_order:
                    continue
                if not isinstance(c, MultiPoly):
                    c = MultiPoly.constant(nvars, c)
                elif c.nvars != nvars:
                    raise ValueError("coefficient has wrong variable count")
                if not c.is_zero():
                    clean[(dt, du)] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, t_order, u_order, nvars, coeffs):
        obj = object.__new__(cls)
        obj.t_order = t_order
        obj.u_order = u_order
        obj.nvars = nvars
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, t_order, u_order, nvars) -> "BiSeries":
        return cls._raw(t_order, u_order, nvars, {})

    @classmethod
    def one(cls, t_order, u_order, nvars) -> "BiSeries":
        return cls.constant(t_order, u_order, nvars, 1)

    @classmethod
    def constant(cls, t_order, u_order, nvars, c) -> "BiSeries":
        if not isinstance(c, MultiPoly):
            c = MultiPoly.constant(nvars, c)
        return cls(t_order, u_order, nvars, {(0, 0): c})

    @classmethod
    def term(cls, t_order, u_order, dt, du, c, nvars=None) -> "BiSeries":
        """The single term c * t^dt * u^du (dropped if beyond the orders)."""
        if not isinstance(c, MultiPoly):
            c = MultiPoly.constant(nvars, c)
        return cls(t_order, u_order, c.nvars, {(dt, du): c})

    def same_shape(self, other) -> bool:
        return (self.t_order, self.u_order, self.nvars) == (other.t_order, other.u_order, other.nvars)

    def _check(self, other):
        if not isinstance(other, BiSeries):
            raise TypeError("expected a BiSeries")
        if not self.same_shape(other):
            raise ValueError(
                "series shape mismatch: "
                f"(t{self.t_order}, u{self.u_order}, N{self.nvars}) vs "
                f"(t{other.t_order}, u{other.u_order}, N{other.nvars})"
            )

    def coefficient(self, dt: int, du: int = 0) -> MultiPoly:
        if dt > self.t_order or du > self.u_order:
            raise IndexError(f"t^{dt} u^{du} lies beyond the truncation orders")
        return self.coeffs.get((dt, du), MultiPoly.zero(self.nvars))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, BiSeries):
            other = BiSeries.constant(self.t_order, self.u_order, self.nvars, other)
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            if k in out:
                s = out[k] + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = c
        return BiSeries._raw(self.t_order, self.u_order, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries._raw(self.t_order, self.u_order, self.nvars, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, BiSeries):
            other = BiSeries.constant(self.t_order, self.u_order, self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "BiSeries":
        out = {}
        for k, v in self.coeffs.items():
            w = v * c
            if not w.is_zero():
                out[k] = w
        return BiSeries._raw(self.t_order, self.u_order, self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, BiSeries):
            return series_mul(self, other)
        if isinstance(other, (MultiPoly, ZPoly, int, _RationalABC)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = BiSeries.one(self.t_order, self.u_order, self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.same_shape(other) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.t_order, self.u_order, self.nvars, frozenset(self.coeffs.items())))

    def shift_t(self, k: int) -> "BiSeries":
        """Multiply by t^k.  Negative ``k`` divides and requires the low slices to vanish."""
        if k < 0:
            bad = [key for key in self.coeffs if key[0] < -k]
            if bad:
                raise ValueError(f"division by t^{-k} leaves negative powers of t at {sorted(bad)[0]}")
        out = {}
        for (dt, du), c in self.coeffs.items():
            if dt + k <= self.t_order:
                out[(dt + k, du)] = c
        return BiSeries._raw(self.t_order, self.u_order, self.nvars, out)

    def truncate(self, t_order: int, u_order: int) -> "BiSeries":
        """Lower the truncation orders (never raises them)."""
        if t_order > self.t_order or u_order > self.u_order:
            raise ValueError("truncate cannot extend the orders")
        return BiSeries._raw(
            t_order, u_order, self.nvars,
            {k: c for k, c in self.coeffs.items() if k[0] <= t_order and k[1] <= u_order},
        )

    def map_coefficients(self, fn) -> "BiSeries":
        out = {}
        nvars = self.nvars
        for k, c in self.coeffs.items():
            c2 = fn(c)
            nvars = c2.nvars
            if not c2.is_zero():
                out[k] = c2
        return BiSeries._raw(self.t_order, self.u_order, nvars, out)

    def sorted_items(self):
        return sorted(self.coeffs.items())

    def to_string(self, names=None, t_name="t", u_name="u") -> str:
        if not self.coeffs:
            return "0"
        lines = []
        for (dt, du), c in self.sorted_items():
            slot = format_monomial((dt, du), (t_name, u_name))
            lines.append(f"[{slot}] {c.to_string(names)}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"BiSeries(t{self.t_order}, u{self.u_order}, N{self.nvars}, {len(self.coeffs)} slots)"


def series_mul(a: BiSeries, b: BiSeries) -> BiSeries:
    """Cauchy product truncated to the (shared) orders of ``a`` and ``b``."""
    a._check(b)
    T, U = a.t_order, a.u_order
    out = {}
    for (at, au), ca in a.coeffs.items():
        for (bt, bu), cb in b.coeffs.items():
            dt, du = at + bt, au + bu
            if dt > T or du > U:
                continue
            p = ca * cb
            key = (dt, du)
            out[key] = out[key] + p if key in out else p
    return BiSeries._raw(T, U, a.nvars, {k: c for k, c in out.items() if not c.is_zero()})


def series_geom_inverse(a: BiSeries) -> BiSeries:
    """Multiplicative inverse of a series whose constant term is exactly 1."""
    if a.coeffs.get((0, 0)) != MultiPoly.constant(a.nvars, 1):
        raise ValueError("series_geom_inverse needs constant term 1")
    T, U = a.t_order, a.u_order
    rest = [(k, c) for k, c in a.coeffs.items() if k != (0, 0)]
    inv = {(0, 0): MultiPoly.constant(a.nvars, 1)}
    # lexicographic order on (dt, du) visits every proper divisor slot first
    for dt in range(T + 1):
        for du in range(U + 1):
            if (dt, du) == (0, 0):
                continue
            acc = MultiPoly.zero(a.nvars)
            for (kt, ku), c in rest:
                if kt <= dt and ku <= du:
                    prev = inv.get((dt - kt, du - ku))
                    if prev is not None:
                        acc = acc + c * prev
            if not acc.is_zero():
                inv[(dt, du)] = -acc
    return BiSeries._raw(T, U, a.nvars, inv)
