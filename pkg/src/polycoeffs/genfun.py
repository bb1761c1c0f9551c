"""Column and diagonal generating functions of the coefficient triangle.

The k-th column of the triangle is generated by
P_k(x) / (1 - x)^(k+1) on the non-negative rows and by a mirrored companion
on the negative rows, where P_k is an integer polynomial.  Diagonals of the
form <a + b*k, k> are generated by a Carlitz-style construction driven by the
solution of y = x * p_m(y)^b.  Every series built here is checked against
direct coefficient computation before it is returned.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import coeff
from .errors import MismatchError
from .series import IntPolynomial, TruncatedSeries, solve_carlitz_y


def _require_degree(m: int) -> None:
    if m < 1:
        raise ValueError("m must be at least 1")


def _shift_kernel(m: int) -> IntPolynomial:
    # x (1 - x)^m, the lag term of the column-polynomial recurrence
    return IntPolynomial([0, 1]) * IntPolynomial([1, -1]) ** m


def _pk_list(m: int, kmax: int) -> list[IntPolynomial]:
    """P_0 .. P_kmax by the recurrence P_k = P_{k-1} - x(1-x)^m P_{k-m-1}."""
    ps = [IntPolynomial([1])]
    if kmax >= 1:
        ps.append(IntPolynomial([0, 1]))
    kernel = _shift_kernel(m)
    zero = IntPolynomial()
    for j in range(2, kmax + 1):
        lag = ps[j - m - 1] if j - m - 1 >= 0 else zero
        ps.append(ps[j - 1] - kernel * lag)
    return ps[: kmax + 1]


def pk_by_recurrence(m: int, k: int) -> IntPolynomial:
    """The k-th column polynomial from its three-term recurrence.

    Seeds are P_0 = 1, P_1 = x and P_k = 0 for k < 0; in particular
    P_k = x for 1 <= k <= m.
    """
    _require_degree(m)
    if k < 0:
        return IntPolynomial()
    return _pk_list(m, k)[k]


def _coeff_allowing_degenerate(n: int, k: int, m: int) -> int:
    # degree 0 means the base polynomial is the constant 1
    if m == 0:
        return 1 if k == 0 else 0
    return coeff(n, k, m)


def pk_by_explicit(m: int, k: int) -> IntPolynomial:
    """The k-th column polynomial from its closed sum,
    sum_i <i, k-i>_{m-1} x^i (1-x)^(k-i) with i running from ceil(k/m) to k."""
    _require_degree(m)
    if k < 0:
        raise ValueError("k must be non-negative")
    one_minus_x = IntPolynomial([1, -1])
    total = IntPolynomial()
    for i in range(-(-k // m), k + 1):
        c = _coeff_allowing_degenerate(i, k - i, m - 1)
        if c:
            total = total + (one_minus_x ** (k - i) * c).shifted(i)
    return total


def pk_gf_check(m: int, order_y: int) -> bool:
    """Verify the bivariate generating identity of the column polynomials.

    In cleared form: (1 - y + x(1-x)^m y^(m+1)) * sum_k P_k(x) y^k must equal
    1 + (x - 1) y, coefficient by coefficient in y up to ``order_y``.  The
    P_k are taken from the explicit sum so the check is independent of the
    recurrence.
    """
    _require_degree(m)
    if order_y < 0:
        raise ValueError("order_y must be non-negative")
    ps = [pk_by_explicit(m, j) for j in range(order_y + 1)]
    kernel = _shift_kernel(m)
    zero = IntPolynomial()
    for j in range(order_y + 1):
        lhs = ps[j]
        if j >= 1:
            lhs = lhs - ps[j - 1]
        if j - m - 1 >= 0:
            lhs = lhs + kernel * ps[j - m - 1]
        if j == 0:
            expected = IntPolynomial([1])
        elif j == 1:
            expected = IntPolynomial([-1, 1])
        else:
            expected = zero
        if lhs != expected:
            return False
    return True


@dataclass(frozen=True)
class ColumnGF:
    """One column generating function: coefficient of x^n is <n,k> for the
    "+" sign and <-n,k> (n >= 1) for the "-" sign."""

    k: int
    m: int
    sign: str
    series: TruncatedSeries


def column_gf(k: int, m: int, sign: str, order: int) -> ColumnGF:
    """Build the column series from its closed form and cross-check it.

    "+" gives P_k(x) / (1-x)^(k+1); "-" gives
    (-1)^k x (1-x)^-(k+1) * rev(P_k) where rev(P_k) = x^k P_k(1/x) is the
    coefficient reversal (an honest polynomial).  Disagreement with directly
    computed coefficients raises ``MismatchError``.
    """
    _require_degree(m)
    if k < 0:
        raise ValueError("k must be non-negative")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if order < 0:
        raise ValueError("order must be non-negative")
    pk = pk_by_recurrence(m, k)
    inv_geom = TruncatedSeries([1, -1], order) ** (-(k + 1))
    if sign == "+":
        series = inv_geom * pk.to_series(order)
        expected = [coeff(n, k, m) for n in range(order + 1)]
    else:
        rev = pk.reversal(k + 1)
        series = inv_geom * rev.to_series(order) * TruncatedSeries([0, 1], order)
        if k & 1:
            series = -series
        expected = [0] + [coeff(-n, k, m) for n in range(1, order + 1)]
    for n, want in enumerate(expected):
        if series[n] != want:
            raise MismatchError(
                f"column GF (k={k}, m={m}, sign={sign}) disagrees at x^{n}: "
                f"series gives {series[n]}, direct computation gives {want}"
            )
    return ColumnGF(k, m, sign, series)


def pk2_closed_form_check(k_max: int) -> bool:
    """Check the m = 2 closed form of the column polynomials.

    ((x+s)^(k+1) - (x-s)^(k+1)) / (2^(k+1) s) with s^2 = x(4-3x) is expanded
    binomially; only even powers of s survive, so the result is an exact
    integer polynomial once divided by 2^k.  Compared against the recurrence
    for every k up to ``k_max``.
    """
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    s_squared = IntPolynomial([0, 4, -3])
    for k in range(k_max + 1):
        total = IntPolynomial()
        for i in range(0, (k + 1) // 2 + 1):
            j = 2 * i + 1
            if j > k + 1:
                break
            term = (s_squared ** i * math.comb(k + 1, j)).shifted(k - 2 * i)
            total = total + term
        if total.divexact(2 ** k) != pk_by_recurrence(2, k):
            return False
    return True


@dataclass(frozen=True)
class FNumberSeq:
    """Integers f_n = 2^n P_n(1/2), satisfying f_n = 2 f_{n-1} - f_{n-m-1}."""

    m: int
    values: tuple[int, ...]


def f_numbers(m: int, count: int) -> FNumberSeq:
    """The first ``count`` values f_0, f_1, ... for the given degree.

    Each value is computed exactly as 2^n P_n(1/2) (integrality is checked),
    then the recurrence f_n = 2 f_{n-1} - f_{n-m-1} (terms with negative
    index read as 0) is asserted for n >= 2.  For m = 2 these are the
    Fibonacci numbers shifted by one.
    """
    _require_degree(m)
    if count < 1:
        raise ValueError("count must be at least 1")
    half = Fraction(1, 2)
    ps = _pk_list(m, count - 1)
    values: list[int] = []
    for n in range(count):
        v = (2 ** n) * ps[n](half)
        if v.denominator != 1:
            raise MismatchError(f"2^{n} P_{n}(1/2) is not an integer for m={m}")
        values.append(int(v))
    for n in range(2, count):
        lag = values[n - m - 1] if n - m - 1 >= 0 else 0
        if values[n] != 2 * values[n - 1] - lag:
            raise MismatchError(f"f-number recurrence fails at n={n} for m={m}")
    return FNumberSeq(m, tuple(values))


def carlitz_gf(a: int, b: int, m: int, order: int) -> TruncatedSeries:
    """The diagonal generating series sum_k <a + b*k, k>_m x^k.

    Built as p_m(y)^(a+1) / (p_m(y) - b y p_m'(y)) with y(x) solving
    y = x p_m(y)^b; every coefficient up to ``order`` is verified against
    direct computation before the series is returned.
    """
    _require_degree(m)
    if order < 0:
        raise ValueError("order must be non-negative")
    y = solve_carlitz_y(m, b, order)
    pm = TruncatedSeries([1] * (m + 1), order)
    pm_prime = TruncatedSeries(list(range(1, m + 1)), order)
    py = pm.compose(y)
    denominator = py - (y * pm_prime.compose(y)) * b
    series = (py ** (a + 1)) * denominator.inverse()
    for j in range(order + 1):
        want = coeff(a + b * j, j, m)
        if series[j] != want:
            raise MismatchError(
                f"diagonal GF (a={a}, b={b}, m={m}) disagrees at x^{j}: "
                f"series gives {series[j]}, direct computation gives {want}"
            )
    return series


def euler_gf_check(order: int) -> bool:
    """Check S(x)^2 (1+x)(1-3x) = 1 for the central coefficients <k,k>_2.

    Squaring the known closed form 1/sqrt((1+x)(1-3x)) keeps the whole
    verification inside exact integer series arithmetic.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    s = TruncatedSeries([coeff(k, k, 2) for k in range(order + 1)])
    product = s * s * TruncatedSeries([1, -2, -3], order)
    return product == TruncatedSeries([1], order)
