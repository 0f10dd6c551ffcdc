"""Closed forms for the hook-partition counting problem and exact verifiers.

The generating function counting partitions inside a (k,l)-hook, i.e. the
Hilbert series of the span of hook Schur polynomials graded by degree, is
computed three ways: a closed-form numerator over a finite product, an
unrolled recurrence, and brute-force enumeration. The verifiers compare
the routes pairwise and also confirm the classical t-binomial identities
the closed form rests on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import hook_count_series
from .qseries import (
    DEFAULT_ORDER,
    QPolynomial,
    TruncSeries,
    gauss_binomial,
    gauss_binomial_by_quotient,
    inv_one_minus_tpow,
)


@dataclass(frozen=True)
class HookParams:
    """Hook parameters: k wide rows, columns of width at most l, and the
    truncation order used for series-valued results."""

    k: int
    l: int
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("hook parameters must be non-negative")
        if self.order < 0:
            raise ValueError("order must be non-negative")


@dataclass(frozen=True)
class Mismatch:
    """First differing coefficient in a failed comparison."""

    exponent: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check."""

    identity: str
    params: dict
    passed: bool
    first_mismatch: Mismatch | None = None

    def to_json(self) -> dict:
        fm = self.first_mismatch
        return {
            "identity": self.identity,
            "params": self.params,
            "pass": self.passed,
            "first_mismatch": None
            if fm is None
            else {"exponent": fm.exponent, "lhs": str(fm.lhs), "rhs": str(fm.rhs)},
        }


def _compare(identity: str, params: dict, lhs, rhs) -> VerificationReport:
    """Report equality of two polynomials or two equal-order series."""
    if lhs == rhs:
        return VerificationReport(identity, params, True)
    if isinstance(lhs, TruncSeries):
        top = lhs.order
    else:
        top = max(lhs.degree, rhs.degree)
    for e in range(top + 1):
        a = lhs.coefficient(e)
        b = rhs.coefficient(e)
        if a != b:
            return VerificationReport(identity, params, False, Mismatch(e, a, b))
    raise AssertionError("unequal values with no differing coefficient")


def bounded_rows_gf(k: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Generating function for partitions with at most k rows:
    the product of 1/(1 - t^i) for i = 1..k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    result = TruncSeries.one(order)
    for i in range(1, k + 1):
        result = result * inv_one_minus_tpow(i, order)
    return result


def hook_gf_recurrence(k: int, l: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Hook-partition generating function via the add-a-column recurrence.

    Splits the partitions in the (k,j)-hook by whether the diagram
    contains the cell (k+1, j): those that do not lie in the (k,j-1)-hook,
    those that do contribute t^{j(k+1)} times two bounded-rows factors.
    """
    params = HookParams(k, l, order)
    series = bounded_rows_gf(params.k, order)
    rows_k = series
    for j in range(1, params.l + 1):
        series = series + (rows_k * bounded_rows_gf(j, order)).shift(j * (k + 1))
    return series


def hilbert_numerator_recurrence(k: int, l: int) -> QPolynomial:
    """Numerator polynomial of the hook generating function over the
    (k+l)-row product, built by iterating its defining recurrence."""
    HookParams(k, l)
    result = QPolynomial.one()
    for j in range(1, l + 1):
        step = QPolynomial.one() - QPolynomial.monomial(k + j)
        result = step * result + gauss_binomial(k + j, j).shift(j * (k + 1))
    return result


def hilbert_numerator_closed(k: int, l: int) -> QPolynomial:
    """Closed form of the numerator polynomial as a double binomial sum."""
    HookParams(k, l)
    total = QPolynomial.one()
    for i in range(1, l + 1):
        outer = gauss_binomial(k, i)
        if outer.is_zero():
            continue
        inner = QPolynomial.zero()
        for j in range(0, l - i + 1):
            inner = inner + gauss_binomial(i + j - 1, j).shift(j * (k - i + 1))
        total = total + (outer * inner).shift(i * (k + l + 1))
    return total


def hilbert_series(k: int, l: int, order: int = DEFAULT_ORDER) -> TruncSeries:
    """The hook-partition counting series: closed-form numerator times the
    generating function for partitions with at most k+l rows."""
    params = HookParams(k, l, order)
    numerator = TruncSeries.from_poly(hilbert_numerator_closed(k, l), order)
    return numerator * bounded_rows_gf(params.k + params.l, order)


def _difference_lhs(k: int, l: int) -> QPolynomial:
    # N(k,l) - N(k,l-1) + t^{k+l} N(k,l-1), with N the numerator polynomial.
    prev = hilbert_numerator_recurrence(k, l - 1)
    return hilbert_numerator_recurrence(k, l) - prev + prev.shift(k + l)


def _difference_target(k: int, l: int) -> QPolynomial:
    return gauss_binomial(k + l, l).shift(l * (k + 1))


def _intermediate_expansion(k: int, l: int) -> QPolynomial:
    """Term-by-term expansion of the numerator difference: the leading
    monomial plus five summand groups, out-of-range binomials vanishing."""
    total = QPolynomial.monomial(l * (k + 1))
    for i in range(1, l - 1):
        block = gauss_binomial(k, i)
        if block.is_zero():
            continue
        inner1 = QPolynomial.zero()
        for j in range(0, l - i - 1):
            inner1 = inner1 + gauss_binomial(i + j, j).shift((j + 1) * (k - i))
        inner2 = QPolynomial.zero()
        for j in range(0, l - 2 - i + 1):
            diff = gauss_binomial(i + j - 1, j).shift(j) - gauss_binomial(i + j, j)
            inner2 = inner2 + diff.shift(j * (k - i))
        tail = gauss_binomial(l - 2, l - 1 - i).shift((l - i - 1) * (k - i + 1))
        total = total + (block * (inner1 + inner2 + tail)).shift((i + 1) * (k + l))
    for i in range(1, l + 1):
        term = gauss_binomial(k, i) * gauss_binomial(l - 1, l - i)
        total = total + term.shift(l * (k + 1) + i * i)
    last = gauss_binomial(k, l - 1) * gauss_binomial(l - 2, 0)
    return total + last.shift(l * (k + l))


def verify_tbinomial_identities(max_k: int) -> list[VerificationReport]:
    """Check the two t-binomial identities exhaustively up to max_k.

    The first relates consecutive lower indices through cyclotomic-style
    factors; the second is the t-Pascal rule. Binomials are evaluated via
    the Pochhammer quotient so the checks are independent of the Pascal
    route used by gauss_binomial itself.
    """
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    reports = []
    for k in range(1, max_k + 1):
        for i in range(1, k + 1):
            lhs = (QPolynomial.one() - QPolynomial.monomial(i)) * (
                gauss_binomial_by_quotient(k, i)
            )
            rhs = (QPolynomial.one() - QPolynomial.monomial(k - i + 1)) * (
                gauss_binomial_by_quotient(k, i - 1)
            )
            reports.append(_compare("tbinomial.eq1", {"k": k, "i": i}, lhs, rhs))
    for a in range(1, max_k + 1):
        for b in range(1, a + 1):
            lhs = gauss_binomial_by_quotient(a, b)
            rhs = gauss_binomial_by_quotient(a - 1, b - 1) + (
                gauss_binomial_by_quotient(a - 1, b).shift(b)
            )
            reports.append(_compare("tbinomial.eq2", {"a": a, "b": b}, lhs, rhs))
    return reports


def verify_qvandermonde(k: int, l: int) -> VerificationReport:
    """Check the q-Vandermonde collapse: t^{l(k+1)} times the diagonal
    binomial sum with t^{i^2} weights equals t^{l(k+1)} times the full
    (k+l choose l) binomial."""
    HookParams(k, l)
    lhs = QPolynomial.zero()
    for i in range(0, l + 1):
        term = gauss_binomial(k, i) * gauss_binomial(l, i)
        lhs = lhs + term.shift(i * i)
    lhs = lhs.shift(l * (k + 1))
    rhs = gauss_binomial(k + l, l).shift(l * (k + 1))
    return _compare("vandermonde", {"k": k, "l": l}, lhs, rhs)


def verify_closed_form(k: int, l: int) -> VerificationReport:
    """Check that the closed-form numerator equals the recurrence numerator."""
    HookParams(k, l)
    return _compare(
        "lemma.closed_vs_recurrence",
        {"k": k, "l": l},
        hilbert_numerator_closed(k, l),
        hilbert_numerator_recurrence(k, l),
    )


def verify_intermediate_expansion(k: int, l: int) -> list[VerificationReport]:
    """Three-way check of the numerator difference relation.

    Compares (a) the independently computed difference against its binomial
    target, and (b)/(c) the term-by-term intermediate expansion against
    both. The expansion reads binomials indexed down to l-2, so l >= 2 is
    required. A mismatch in (b)/(c) is reported as data, never raised.
    """
    if l < 2:
        raise ValueError(
            f"intermediate expansion requires l >= 2 (it references an l-2 index), got l={l}"
        )
    HookParams(k, l)
    params = {"k": k, "l": l}
    lhs = _difference_lhs(k, l)
    target = _difference_target(k, l)
    display = _intermediate_expansion(k, l)
    return [
        _compare("intermediate.lhs_vs_target", params, lhs, target),
        _compare("intermediate.display_vs_lhs", params, display, lhs),
        _compare("intermediate.display_vs_target", params, display, target),
    ]


def verify_hilbert_series(
    k: int, l: int, order: int = DEFAULT_ORDER
) -> list[VerificationReport]:
    """Four-way check of the hook counting series at one parameter pair.

    Closed form vs brute-force enumeration, closed form vs recurrence,
    recurrence vs brute force, and the k/l symmetry of the closed form.
    """
    params = {"k": k, "l": l, "order": order}
    closed = hilbert_series(k, l, order)
    recurrence = hook_gf_recurrence(k, l, order)
    brute = hook_count_series(k, l, order)
    swapped = hilbert_series(l, k, order)
    return [
        _compare("theorem.series_vs_bruteforce", params, closed, brute),
        _compare("theorem.series_vs_recurrence", params, closed, recurrence),
        _compare("theorem.recurrence_vs_bruteforce", params, recurrence, brute),
        _compare("theorem.symmetry", params, closed, swapped),
    ]
