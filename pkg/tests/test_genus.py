import time
from fractions import Fraction
from math import comb, factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from kltheory.genus import (
    BivariateSeries,
    PowerSeries,
    SeriesError,
    ahr_b_sequence,
    bernoulli,
    characteristic_series,
    congruence_check,
    fgl_isomorphism,
    fgl_multiplicative,
    las_genus,
    log_from_genus,
    series_reverse,
    signature_genus,
    trivial_genus,
    two_adic_obstruction,
    v2,
)

N = 20


def sympy_series(expr, order):
    t = sympy.Symbol("t")
    s = sympy.series(expr(t), t, 0, order + 1).removeO()
    return [Fraction(int(c.p), int(c.q)) for c in (sympy.Rational(s.coeff(t, i)) for i in range(order + 1))]


def sympy_bernoulli(k):
    b = sympy.bernoulli(k)
    return Fraction(int(b.p), int(b.q))


# --- power series arithmetic ------------------------------------------------

def test_truncation_tracked():
    a = PowerSeries.from_coeffs([1, 2, 3, 4])
    b = PowerSeries.from_coeffs([1, 1, 1, 1, 1, 1])
    assert (a + b).order == 3 and (a * b).order == 3
    with pytest.raises(SeriesError):
        a[4]
    with pytest.raises(SeriesError):
        a.truncate(5)


def test_inverse_and_division():
    one_minus_t = PowerSeries.from_coeffs([1, -1], 6)
    geo = one_minus_t.inverse()
    assert geo.coeffs == tuple(Fraction(1) for _ in range(7))
    with pytest.raises(SeriesError):
        PowerSeries.variable(5).inverse()


def test_compose_requires_no_constant():
    f = PowerSeries.from_coeffs([0, 1, 1], 4)
    with pytest.raises(SeriesError):
        f.compose(PowerSeries.from_coeffs([1, 1], 4))


def test_reverse_identity():
    t = PowerSeries.variable(10)
    assert series_reverse(t) == t


def test_reverse_t_plus_t_squared():
    f = PowerSeries.from_coeffs([0, 1, 1], 12)
    g = series_reverse(f)
    assert f.compose(g) == PowerSeries.variable(12)


def test_reverse_zero_linear_term():
    with pytest.raises(SeriesError):
        series_reverse(PowerSeries.from_coeffs([0, 0, 1], 5))


unit_linear_series = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=3, max_size=10
).map(lambda cs: PowerSeries.from_coeffs([0, 1] + cs))


@settings(max_examples=60, deadline=None)
@given(unit_linear_series)
def test_reverse_two_sided(f):
    g = series_reverse(f)
    t = PowerSeries.variable(f.order)
    assert f.compose(g) == t
    assert g.compose(f) == t


# --- genera -----------------------------------------------------------------

def test_bernoulli_small():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0


def test_bernoulli_matches_sympy():
    for k in range(2, 41, 2):
        assert bernoulli(k) == sympy_bernoulli(k)
    for k in range(3, 41, 2):
        assert bernoulli(k) == 0


def test_log_trivial():
    assert log_from_genus(trivial_genus(), N) == PowerSeries.variable(N)


def test_log_las_is_twice_artanh_half():
    want = [Fraction(0)] + [
        Fraction(2, (2 ** (i)) * i) if i % 2 else Fraction(0) for i in range(1, N + 1)
    ]
    assert list(log_from_genus(las_genus(), N).coeffs) == want
    assert list(log_from_genus(las_genus(), N).coeffs) == sympy_series(lambda t: 2 * sympy.atanh(t / 2), N)


def test_log_signature_is_artanh():
    assert list(log_from_genus(signature_genus(), N).coeffs) == sympy_series(sympy.atanh, N)


def test_exp_las_is_twice_tanh_half():
    exp = series_reverse(log_from_genus(las_genus(), N))
    assert list(exp.coeffs) == sympy_series(lambda t: 2 * sympy.tanh(t / 2), N)


def test_characteristic_trivial():
    assert characteristic_series(trivial_genus(), N) == PowerSeries.constant(1, N)


def _u_over_tanh(scale, order):
    """Coefficients of (t/scale)/tanh(t/scale) from the Bernoulli expansion (sympy Bernoulli numbers)."""
    out = []
    for i in range(order + 1):
        if i % 2:
            out.append(Fraction(0))
        else:
            out.append(Fraction(2**i) * sympy_bernoulli(i) / factorial(i) / Fraction(scale) ** i)
    return out


def test_characteristic_las():
    k = characteristic_series(las_genus(), N)
    assert list(k.coeffs) == _u_over_tanh(2, N)
    assert k[2] == Fraction(1, 12) and k[4] == Fraction(-1, 720)


def test_characteristic_signature():
    assert list(characteristic_series(signature_genus(), N).coeffs) == _u_over_tanh(1, N)


def test_everything_exact():
    for c in characteristic_series(las_genus(), N).coeffs:
        assert type(c) is Fraction


# --- b-sequence and the 2-adic obstruction ----------------------------------

def test_b_sequence_values():
    b = ahr_b_sequence(12)
    assert b[2] == Fraction(1, 3)
    assert b[3] == 0
    assert b[4] == Fraction(-14, 15)
    assert all(b[k] == 0 for k in range(3, 13, 2))


def _v2_int(n):
    n = abs(n)
    return (n & -n).bit_length() - 1


def test_v2():
    assert v2(Fraction(8, 3)) == 3
    assert v2(Fraction(3, 8)) == -3
    assert v2(0) is None


def test_obstruction_c3():
    rep = two_adic_obstruction(3, 30)
    vals = [r.valuation for r in rep.rows]
    assert all(r.nonzero for r in rep.rows)
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] > 60
    assert rep.obstructed and rep.conclusion().startswith("obstructed")


def test_obstruction_first_term():
    row = two_adic_obstruction(3, 1).rows[0]
    assert row.term == Fraction(8, 3)
    assert row.valuation == 3


@pytest.mark.parametrize("c", [3, 5, 7, -3, 9, 15, 17])
def test_obstruction_matches_lte(c):
    rep = two_adic_obstruction(c, 20)
    for r in rep.rows:
        assert r.valuation == _v2_int(c * c - 1) + 2 * r.k - 2


def test_obstruction_sign_of_c_irrelevant():
    a = two_adic_obstruction(3, 10)
    b = two_adic_obstruction(-3, 10)
    assert [r.valuation for r in a.rows] == [r.valuation for r in b.rows]


@pytest.mark.parametrize("c", [2, 0, -4, 1, -1])
def test_obstruction_bad_c(c):
    with pytest.raises(ValueError):
        two_adic_obstruction(c, 3)


def test_congruence_reports():
    rows = congruence_check(2)
    assert rows[0].value == Fraction(5, 12) and not rows[0].integral
    assert rows[1].value == Fraction(-113, 120)


def test_congruence_with_zero_sequence():
    rows = congruence_check(4, b={2 * k: 0 for k in range(1, 5)})
    for r in rows:
        assert r.value == sympy_bernoulli(2 * r.k) / (2 * r.k)
        assert 0 <= r.residue < 1


# --- formal group laws ------------------------------------------------------

def test_fgl_multiplicative_terms():
    assert fgl_multiplicative(0).terms == {(1, 0): 1, (0, 1): 1}
    assert fgl_multiplicative(2).coefficient(1, 1) == 2
    assert fgl_multiplicative(16).coefficient(1, 1) == 16


def test_fgl_k1_identity():
    assert fgl_isomorphism(1, 16).series == PowerSeries.variable(16)


def closed_form(k, order):
    m = 2 ** (k - 1)
    return [Fraction(comb(m, i) * 2**i, 2**k) if i >= 1 else Fraction(0) for i in range(order + 1)]


def test_fgl_k2():
    res = fgl_isomorphism(2, 20)
    assert list(res.series.coeffs) == [0, 1, 1] + [0] * 18
    assert res.integral and res.verified


def test_fgl_k2_to_k6():
    start = time.perf_counter()
    for k in range(2, 7):
        res = fgl_isomorphism(k, 32)
        assert res.integral and res.verified
        assert list(res.series.coeffs) == closed_form(k, 32)
    assert time.perf_counter() - start < 5


def test_fgl_bad_k():
    with pytest.raises(ValueError):
        fgl_isomorphism(0)


def test_bivariate_substitution():
    f = PowerSeries.from_coeffs([0, 1, 1], 6)
    x_plus_y = BivariateSeries.make({(1, 0): 1, (0, 1): 1}, 6)
    out = x_plus_y.substitute_into(f)
    assert out.coefficient(1, 1) == 2 and out.coefficient(2, 0) == 1 and out.coefficient(1, 0) == 1
