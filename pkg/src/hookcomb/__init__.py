"""Exact hook-partition combinatorics: counting series, q-binomials,
hook Schur polynomials, and identity verification."""

from .hilbert import (
    HookParams,
    Mismatch,
    VerificationReport,
    bounded_rows_gf,
    hilbert_numerator_closed,
    hilbert_numerator_recurrence,
    hilbert_series,
    hook_gf_recurrence,
    verify_closed_form,
    verify_hilbert_series,
    verify_intermediate_expansion,
    verify_qvandermonde,
    verify_tbinomial_identities,
)
from .partitions import (
    Partition,
    SkewShape,
    count_bounded_rows_series,
    count_boxed_series,
    enumerate_hook,
    enumerate_partitions,
    hook_count_series,
)
from .qseries import (
    DEFAULT_ORDER,
    QPolynomial,
    TruncSeries,
    gauss_binomial,
    gauss_binomial_by_quotient,
    inv_one_minus_tpow,
    qpochhammer,
    series_from_poly,
)
from .symfun import (
    MultiPoly,
    hook_schur,
    is_symmetric_in_block,
    schur_poly,
    skew_schur_poly,
)

__version__ = "0.1.0"
