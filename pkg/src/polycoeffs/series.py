"""Exact truncated power series and dense integer polynomials.

Coefficients are arbitrary-precision: plain ``int`` wherever the arithmetic
stays integral, ``fractions.Fraction`` otherwise.  Both interoperate freely,
and a value is integer-valued exactly when its denominator is 1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import NonzeroInnerConstant, ZeroConstantTerm

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """A formal power series known exactly up to an inclusive truncation order.

    Instances are immutable and all operations are pure, so values can be
    shared between threads freely.  Arithmetic truncates to the minimum order
    of its operands and never silently extends precision: reading a
    coefficient beyond the truncation order raises ``IndexError``.
    """

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = list(coeffs)
        if order is None:
            if not cs:
                raise ValueError("an empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(cs) < order + 1:
            cs.extend([0] * (order + 1 - len(cs)))
        self.coeffs: tuple[Scalar, ...] = tuple(cs[: order + 1])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    @property
    def is_integer_valued(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a series beyond its known order")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(
                [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)]
            )
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return TruncatedSeries(cs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(max(0, k - other.order), min(k, self.order) + 1):
                acc += a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the truncation order.

        Solved coefficient by coefficient from the Cauchy product; when the
        constant term is 1 every inverse coefficient stays in the same ring
        as the input (no denominators appear).
        """
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroConstantTerm("series with zero constant term is not invertible")
        if c0 == 1:
            inv0: Scalar = 1
        elif c0 == -1:
            inv0 = -1
        else:
            inv0 = Fraction(1, 1) / c0
        a = self.coeffs
        out: list[Scalar] = [1 * inv0]
        for k in range(1, self.order + 1):
            acc = 0
            for i in range(1, k + 1):
                acc += a[i] * out[k - i]
            out.append(-acc * inv0)
        return TruncatedSeries(out)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries([1], self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative; the order drops by one."""
        if self.order == 0:
            return TruncatedSeries([0])
        return TruncatedSeries(
            [i * self.coeffs[i] for i in range(1, self.order + 1)]
        )

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (which must vanish at 0) into this series.

        Evaluated by Horner's rule over the series ring, truncated to the
        inner series' order.
        """
        if inner.coeffs[0] != 0:
            raise NonzeroInnerConstant(
                "composition needs an inner series with zero constant term"
            )
        result = TruncatedSeries([0], inner.order)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result


def from_poly(coeffs: Iterable[Scalar], order: int) -> TruncatedSeries:
    """Embed a polynomial as a series, zero-padded or truncated to ``order``."""
    return TruncatedSeries(coeffs, order)


def solve_carlitz_y(m: int, b: int, order: int) -> TruncatedSeries:
    """The unique series y(x) with y(0) = 0 and y = x * p_m(y)^b.

    Fixed-point iteration starting from y = 0 gains at least one correct
    coefficient per pass, so at most ``order + 1`` passes are needed; the
    loop exits early once the iterate stops changing.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if order < 0:
        raise ValueError("order must be non-negative")
    pm = TruncatedSeries([1] * (m + 1), order)
    x = TruncatedSeries([0, 1], order)
    y = TruncatedSeries([0], order)
    for _ in range(order + 1):
        y_next = x * (pm.compose(y) ** b)
        if y_next == y:
            break
        y = y_next
    return y


class IntPolynomial:
    """Dense polynomial with exact integer coefficients.

    Trailing zero coefficients are trimmed, so the highest-index coefficient
    is nonzero unless the polynomial is zero (stored as the empty tuple,
    degree -1).
    """

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def padded(self, length: int) -> tuple[int, ...]:
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("polynomial powers must be non-negative")
        result = IntPolynomial([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shifted(self, j: int) -> "IntPolynomial":
        """Multiply by x^j."""
        if not self.coeffs:
            return IntPolynomial()
        return IntPolynomial((0,) * j + self.coeffs)

    def reversal(self, length: int | None = None) -> "IntPolynomial":
        """x^(length-1) * p(1/x), the coefficient-reversed polynomial."""
        n = len(self.coeffs) if length is None else length
        if n < len(self.coeffs):
            raise ValueError("reversal length shorter than the polynomial")
        return IntPolynomial(reversed(self.padded(n)))

    def divexact(self, d: int) -> "IntPolynomial":
        """Divide every coefficient by ``d``; all divisions must be exact."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ValueError(f"coefficient {c} is not divisible by {d}")
            out.append(q)
        return IntPolynomial(out)

    def __call__(self, x: Scalar) -> Scalar:
        result: Scalar = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def to_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, order)
