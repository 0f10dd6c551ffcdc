"""Exact univariate arithmetic in t: dense integer polynomials, truncated
power series, q-Pochhammer products and Gaussian binomial coefficients.

All coefficients are Python ints, so results stay exact at any size.
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import lru_cache

DEFAULT_ORDER = 50


def _render_terms(coeffs) -> str:
    """Render a coefficient list in ascending powers of t, e.g. ``1 + 2t^2``."""
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts) if parts else "0"


class QPolynomial:
    """Polynomial in t with integer coefficients, stored densely.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        """The polynomial coeff * t^exponent."""
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return cls((0,) * exponent + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        """Coefficient of t^exponent (0 beyond the stored degree)."""
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, m: int) -> "QPolynomial":
        """Multiply by t^m."""
        if m < 0:
            raise ValueError("shift must be non-negative")
        if not self.coeffs:
            return self
        return QPolynomial((0,) * m + self.coeffs)

    def __divmod__(self, other: "QPolynomial"):
        """Long division over the integers.

        Every elimination step must divide exactly; a non-dividing leading
        coefficient raises ArithmeticError since callers rely on exactness.
        """
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        quo = [0] * max(len(rem) - len(div) + 1, 0)
        while len(rem) >= len(div):
            q, r = divmod(rem[-1], lead)
            if r != 0:
                raise ArithmeticError(
                    f"inexact polynomial division: {rem[-1]} not divisible by {lead}"
                )
            pos = len(rem) - len(div)
            quo[pos] = q
            for i, d in enumerate(div):
                rem[pos + i] -= q * d
            while rem and rem[-1] == 0:
                rem.pop()
        return QPolynomial(quo), QPolynomial(rem)

    def __repr__(self):
        return f"QPolynomial({self.coeffs!r})"

    def __str__(self):
        return _render_terms(self.coeffs)


class TruncSeries:
    """Formal power series in t truncated at a fixed order.

    Tracks the coefficients of t^0 .. t^order exactly. Arithmetic requires
    both operands to share the same order; the result keeps that order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = tuple(coeffs)
        if len(cs) > order + 1:
            raise ValueError(f"got {len(cs)} coefficients for order {order}")
        self.order = order
        self.coeffs = cs + (0,) * (order + 1 - len(cs))

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls(order, (1,))

    @classmethod
    def from_poly(cls, p: QPolynomial, order: int) -> "TruncSeries":
        """Coefficients of p up to t^order, zero-padded or truncated."""
        return cls(order, p.coeffs[: order + 1])

    def coefficient(self, exponent: int) -> int:
        if not 0 <= exponent <= self.order:
            raise IndexError(f"exponent {exponent} outside truncation order {self.order}")
        return self.coeffs[exponent]

    def _check_order(self, other: "TruncSeries"):
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} != {other.order}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, tuple(-c for c in self.coeffs))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_order(other)
        return TruncSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_order(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncSeries(n, out)

    def shift(self, m: int) -> "TruncSeries":
        """Multiply by t^m, truncating at the same order."""
        if m < 0:
            raise ValueError("shift must be non-negative")
        if m > self.order:
            return TruncSeries.zero(self.order)
        return TruncSeries(self.order, (0,) * m + self.coeffs[: self.order + 1 - m])

    def to_json(self) -> dict:
        """JSON object form with decimal-string coefficients."""
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self):
        return f"TruncSeries(order={self.order}, coeffs={self.coeffs!r})"

    def __str__(self):
        return _render_terms(self.coeffs)


def series_from_poly(p: QPolynomial, order: int) -> TruncSeries:
    """Truncate (or zero-pad) a polynomial to a series of the given order."""
    return TruncSeries.from_poly(p, order)


def inv_one_minus_tpow(i: int, order: int) -> TruncSeries:
    """The series 1/(1 - t^i): coefficient 1 at every multiple of i."""
    if i <= 0:
        raise ValueError("exponent i must be positive")
    coeffs = [0] * (order + 1)
    for e in range(0, order + 1, i):
        coeffs[e] = 1
    return TruncSeries(order, coeffs)


def qpochhammer(m: int, n: int) -> QPolynomial:
    """The product (1 - t^m)(1 - t^{m+1}) ... (1 - t^{m+n-1}).

    qpochhammer(1, n) is the usual finite Pochhammer factor of degree
    n(n+1)/2 used to build Gaussian binomials.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    result = QPolynomial.one()
    for j in range(n):
        result = result * (QPolynomial.one() - QPolynomial.monomial(m + j))
    return result


@lru_cache(maxsize=None)
def _gauss_pascal(a: int, b: int) -> QPolynomial:
    # Callers guarantee 0 <= b <= a.
    if b == 0 or b == a:
        return QPolynomial.one()
    return _gauss_pascal(a - 1, b - 1) + _gauss_pascal(a - 1, b).shift(b)


def gauss_binomial(a: int, b: int) -> QPolynomial:
    """Gaussian binomial coefficient of a over b as a polynomial in t.

    The coefficient of t^m counts partitions of m inside a b x (a-b) box.
    Total by convention: out-of-range arguments (a < 0, b < 0, b > a)
    give the zero polynomial, while b = 0 with a >= 0 gives 1.
    """
    if a < 0 or b < 0 or b > a:
        return QPolynomial.zero()
    return _gauss_pascal(a, b)


def gauss_binomial_by_quotient(a: int, b: int) -> QPolynomial:
    """Gaussian binomial via the Pochhammer quotient, as a cross-check.

    Computes qpochhammer(1,a) / (qpochhammer(1,b) * qpochhammer(1,a-b))
    by exact division; a nonzero remainder means the library is internally
    inconsistent and raises ArithmeticError. Same out-of-range conventions
    as gauss_binomial.
    """
    if a < 0 or b < 0 or b > a:
        return QPolynomial.zero()
    num = qpochhammer(1, a)
    den = qpochhammer(1, b) * qpochhammer(1, a - b)
    quo, rem = divmod(num, den)
    if not rem.is_zero():
        raise ArithmeticError(
            f"gauss_binomial_by_quotient({a}, {b}): nonzero remainder {rem}"
        )
    return quo
