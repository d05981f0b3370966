"""Exact formal power series for genera, Bernoulli numbers and formal group laws.

Everything here works over ``Fraction``; a series carries its truncation
order and results never claim more precision than their inputs had.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

Number = int | Fraction


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class PowerSeries:
    """``Σ_{i<=order} coeffs[i] t^i`` known modulo ``t^(order+1)``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], order: int | None = None) -> PowerSeries:
        cs = list(coeffs)
        if order is not None:
            cs = (cs + [0] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def from_function(cls, fn: Callable[[int], Number], order: int) -> PowerSeries:
        return cls(tuple(fn(i) for i in range(order + 1)))

    @classmethod
    def variable(cls, order: int) -> PowerSeries:
        return cls.from_coeffs([0, 1], order)

    @classmethod
    def constant(cls, c: Number, order: int) -> PowerSeries:
        return cls.from_coeffs([c], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if i > self.order:
            raise SeriesError(f"coefficient {i} is beyond the truncation order {self.order}")
        return self.coeffs[i] if i >= 0 else Fraction(0)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend a series known to order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def _common(self, other: PowerSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: PowerSeries | Number) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            other = PowerSeries.constant(other, self.order)
        n = self._common(other)
        return PowerSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: PowerSeries | Number) -> PowerSeries:
        return self + (-other)

    def __rsub__(self, other: Number) -> PowerSeries:
        return (-self) + other

    def __mul__(self, other: PowerSeries | Number) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries(tuple(c * a for a in self.coeffs))
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                ai = a[i]
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return PowerSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            return self.inverse() ** (-k)
        out = PowerSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> PowerSeries:
        """Multiplicative inverse; needs an invertible constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise SeriesError("constant term is zero, series is not invertible")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / a[0]
        for n in range(1, self.order + 1):
            s = sum((a[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
            out[n] = -s / a[0]
        return PowerSeries(tuple(out))

    def __truediv__(self, other: PowerSeries | Number) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        return self * (Fraction(1) / Fraction(other))

    def shift_down(self) -> PowerSeries:
        """``f(t)/t`` for ``f(0) = 0``; the order drops by one."""
        if self.coeffs[0] != 0:
            raise SeriesError("series has a constant term, cannot divide by t")
        if self.order == 0:
            raise SeriesError("nothing left after dividing by t")
        return PowerSeries(self.coeffs[1:])

    def shift_up(self) -> PowerSeries:
        """``t·f(t)``; the order grows by one."""
        return PowerSeries((Fraction(0),) + self.coeffs)

    def compose(self, inner: PowerSeries) -> PowerSeries:
        """``self(inner(t))`` for ``inner(0) = 0`` (Horner)."""
        if inner.coeffs[0] != 0:
            raise SeriesError("inner series must have zero constant term")
        n = self._common(inner)
        out = PowerSeries.constant(self.coeffs[n], n)
        inner = inner.truncate(n)
        for c in reversed(self.coeffs[:n]):
            out = out * inner + c
        return out

    def __call__(self, inner: PowerSeries) -> PowerSeries:
        return self.compose(inner)

    def derivative(self) -> PowerSeries:
        if self.order == 0:
            raise SeriesError("derivative of an order-0 series is unknown")
        return PowerSeries(tuple(i * self.coeffs[i] for i in range(1, self.order + 1)))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self) -> str:
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(terms) or "0") + f" + O(t^{self.order + 1})"


# ---------------------------------------------------------------------------
# genera


@dataclass(frozen=True)
class GenusValues:
    """Normalised values ``a_n`` of a genus on complex projective spaces, ``a_0 = 1``."""

    values: Mapping[int, Fraction]
    label: str = ""

    def a(self, n: int) -> Fraction:
        if n == 0:
            return Fraction(1)
        return Fraction(self.values.get(n, 0))

    @classmethod
    def from_function(cls, fn: Callable[[int], Number], upto: int, label: str = "") -> GenusValues:
        return cls({n: Fraction(fn(n)) for n in range(1, upto + 1)}, label)


def trivial_genus(upto: int = 64) -> GenusValues:
    """All ``a_n = 0`` for ``n >= 1``; ``upto`` is accepted for a uniform signature."""
    return GenusValues({}, "trivial")


def las_genus(upto: int = 64) -> GenusValues:
    """``a_{2m} = 2^{-2m}``, odd values zero."""
    return GenusValues.from_function(lambda n: Fraction(1, 2**n) if n % 2 == 0 else 0, upto, "las")


def signature_genus(upto: int = 64) -> GenusValues:
    """``a_{2m} = 1``, odd values zero."""
    return GenusValues.from_function(lambda n: 1 if n % 2 == 0 else 0, upto, "signature")


GENERA = {"trivial": trivial_genus, "las": las_genus, "signature": signature_genus}


def log_from_genus(g: GenusValues, order: int) -> PowerSeries:
    """``Σ_n a_n t^(n+1)/(n+1)`` to the given order."""
    return PowerSeries.from_function(lambda i: g.a(i - 1) / i if i >= 1 else 0, order)


def series_reverse(f: PowerSeries) -> PowerSeries:
    """Compositional inverse by Lagrange inversion: ``g_n = [t^(n-1)] (t/f)^n / n``."""
    if f.coeffs[0] != 0:
        raise SeriesError("series to reverse must have zero constant term")
    if f.order < 1 or f.coeffs[1] == 0:
        raise SeriesError("series to reverse needs an invertible linear coefficient")
    n_max = f.order
    h = f.shift_down().inverse()  # t / f, known to order n_max - 1
    out = [Fraction(0)] * (n_max + 1)
    power = PowerSeries.constant(1, h.order)
    for n in range(1, n_max + 1):
        power = power * h
        out[n] = power[n - 1] / n
    return PowerSeries(tuple(out))


def characteristic_series(g: GenusValues, order: int) -> PowerSeries:
    """``t / exp(t)`` where ``exp`` inverts the logarithm of the genus."""
    exp = series_reverse(log_from_genus(g, order + 1))
    return exp.shift_down().inverse()


# ---------------------------------------------------------------------------
# Bernoulli numbers and the 2-adic obstruction


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    table = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum((comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
        table.append(-s / (m + 1))
    return tuple(table)


def bernoulli(k: int) -> Fraction:
    """``B_k`` with ``B_1 = -1/2``, from ``Σ_{j<=n} C(n+1, j) B_j = 0``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _bernoulli_table(k)[k]


def b_term(k: int) -> Fraction:
    """``b_k = 2^(k+1) (2^(k-1) - 1) / (2k) · B_k``."""
    return Fraction(2 ** (k + 1) * (2 ** (k - 1) - 1), 2 * k) * bernoulli(k)


@dataclass(frozen=True)
class BSequence:
    values: Mapping[int, Fraction]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


def ahr_b_sequence(kmax: int) -> BSequence:
    """``b_k`` for ``k = 2..kmax``; odd entries are checked to vanish."""
    vals = {k: b_term(k) for k in range(2, kmax + 1)}
    for k, v in vals.items():
        if k % 2 and v != 0:
            raise AssertionError(f"b_{k} = {v} should vanish")
    return BSequence(vals)


def v2(q: Number) -> int | None:
    """2-adic valuation of a rational; ``None`` for zero."""
    q = Fraction(q)
    if q == 0:
        return None

    def val(n: int) -> int:
        n = abs(n)
        return (n & -n).bit_length() - 1

    return val(q.numerator) - val(q.denominator)


@dataclass(frozen=True)
class ObstructionRow:
    k: int
    term: Fraction
    valuation: int | None

    @property
    def nonzero(self) -> bool:
        return self.term != 0


@dataclass(frozen=True)
class ObstructionReport:
    c: int
    rows: tuple[ObstructionRow, ...]

    @property
    def all_nonzero(self) -> bool:
        return all(r.nonzero for r in self.rows)

    @property
    def strictly_increasing(self) -> bool:
        vals = [r.valuation for r in self.rows]
        return all(a is not None and b is not None and b > a for a, b in zip(vals, vals[1:]))

    @property
    def obstructed(self) -> bool:
        """Terms tend to zero 2-adically while never being zero."""
        return self.all_nonzero and self.strictly_increasing

    def conclusion(self) -> str:
        if self.obstructed:
            return (
                f"obstructed: all terms nonzero, valuations strictly increasing up to "
                f"{self.rows[-1].valuation} at k = {self.rows[-1].k}"
            )
        return "no obstruction detected in the computed range"


def two_adic_obstruction(c: int, kmax: int) -> ObstructionReport:
    """Valuations of ``(1 - 2^(2k-1)) (1 - c^(2k)) b_{2k}`` for ``k = 1..kmax``."""
    if c % 2 == 0:
        raise ValueError("c must be odd")
    if abs(c) <= 1:
        raise ValueError("|c| must exceed 1")
    rows = []
    for k in range(1, kmax + 1):
        term = (1 - 2 ** (2 * k - 1)) * (1 - c ** (2 * k)) * b_term(2 * k)
        rows.append(ObstructionRow(k, term, v2(term)))
    return ObstructionReport(c, tuple(rows))


@dataclass(frozen=True)
class CongruenceRow:
    k: int
    value: Fraction

    @property
    def residue(self) -> Fraction:
        return self.value - (self.value.numerator // self.value.denominator)

    @property
    def integral(self) -> bool:
        return self.value.denominator == 1


def congruence_check(kmax: int, b: Mapping[int, Number] | None = None) -> list[CongruenceRow]:
    """Report ``b_{2k} + B_{2k}/(2k)`` for ``k = 1..kmax`` (nothing is asserted)."""
    rows = []
    for k in range(1, kmax + 1):
        bk = Fraction(b[2 * k]) if b is not None else b_term(2 * k)
        rows.append(CongruenceRow(k, bk + bernoulli(2 * k) / (2 * k)))
    return rows


# ---------------------------------------------------------------------------
# formal group laws


@dataclass(frozen=True)
class BivariateSeries:
    """``Σ c_(i,j) x^i y^j`` over ``i + j <= order``; zero terms are dropped."""

    terms: Mapping[tuple[int, int], Fraction]
    order: int

    @classmethod
    def make(cls, terms: Mapping[tuple[int, int], Number], order: int) -> BivariateSeries:
        clean = {k: Fraction(v) for k, v in terms.items() if v and k[0] + k[1] <= order}
        return cls(clean, order)

    @classmethod
    def in_x(cls, f: PowerSeries, order: int) -> BivariateSeries:
        return cls.make({(i, 0): f[i] for i in range(min(order, f.order) + 1)}, order)

    @classmethod
    def in_y(cls, f: PowerSeries, order: int) -> BivariateSeries:
        return cls.make({(0, i): f[i] for i in range(min(order, f.order) + 1)}, order)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivariateSeries.make(out, min(self.order, other.order))

    def __mul__(self, other: BivariateSeries | Number) -> BivariateSeries:
        if not isinstance(other, BivariateSeries):
            return BivariateSeries.make({k: v * other for k, v in self.terms.items()}, self.order)
        n = min(self.order, other.order)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), a in self.terms.items():
            for (p, q), b in other.terms.items():
                if i + j + p + q <= n:
                    key = (i + p, j + q)
                    out[key] = out.get(key, 0) + a * b
        return BivariateSeries.make(out, n)

    __rmul__ = __mul__

    def plus_constant(self, c: Number) -> BivariateSeries:
        out = dict(self.terms)
        out[(0, 0)] = out.get((0, 0), 0) + c
        return BivariateSeries.make(out, self.order)

    def substitute_into(self, f: PowerSeries) -> BivariateSeries:
        """``f(self)`` for ``self`` without constant term (Horner)."""
        if self.coefficient(0, 0):
            raise SeriesError("inner series must have zero constant term")
        n = min(self.order, f.order)
        acc = BivariateSeries.make({(0, 0): f[n]}, n)
        for i in range(n - 1, -1, -1):
            acc = (acc * self).plus_constant(f[i])
        return acc


def fgl_multiplicative(a: int, order: int = 32) -> BivariateSeries:
    """``F_a(x, y) = x + y + a x y``."""
    return BivariateSeries.make({(1, 0): 1, (0, 1): 1, (1, 1): a}, order)


def apply_fgl(a: int, f: PowerSeries, order: int) -> BivariateSeries:
    """``F_a(f(x), f(y))``."""
    fx, fy = BivariateSeries.in_x(f, order), BivariateSeries.in_y(f, order)
    return fx + fy + (fx * fy) * a


@dataclass(frozen=True)
class FGLIsomorphism:
    series: PowerSeries
    source: int
    target: int
    verified: bool

    @property
    def integral(self) -> bool:
        return self.series.is_integral()


def fgl_isomorphism(k: int, order: int = 32, a: int = 2) -> FGLIsomorphism:
    """``f`` with ``f(0) = 0``, ``f'(0) = 1`` and ``f(F_a(x, y)) = F_{2^k}(f(x), f(y))``.

    Degree ``n`` is solved from the ``x y^(n-1)`` coefficient, where the new
    coefficient ``c_n`` enters the left side as ``n c_n`` and not at all on
    the right.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    b = 2**k
    source = fgl_multiplicative(a, order)
    coeffs = [Fraction(0), Fraction(1)]
    for n in range(2, order + 1):
        f = PowerSeries.from_coeffs(coeffs + [0], n)
        lhs = source.substitute_into(f).coefficient(1, n - 1)
        rhs = apply_fgl(b, f, n).coefficient(1, n - 1)
        coeffs.append((rhs - lhs) / n)
    f = PowerSeries(tuple(coeffs))
    left = source.substitute_into(f)
    right = apply_fgl(b, f, order)
    return FGLIsomorphism(f, a, b, left.terms == right.terms)
