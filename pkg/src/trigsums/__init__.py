"""Exact closed forms for finite trigonometric power sums.

Generalized cosecant numbers c_{rho,k}, the symmetric functions s(v,n), the
secant (Gardner-Fisher) and cosecant (Dowker) power sums, cotangent-cosecant and
tangent-secant variants, and a high-precision numeric oracle.
"""

from .cosecant import cosecant_number, gcn_by_interpolation, gcn_even_recurrence, gcn_polynomial
from .exact import PiScaled, Rational, bernoulli_number, zeta_even, zeta_even_ratio
from .oracle import check_exact_vs_numeric, raw_trig_sum
from .partitions import enumerate_partitions, partition_count
from .poly import RationalPolynomial
from .report import VerificationReport
from .series import gcn_by_series
from .sums import (
    UnsupportedSumError,
    cc_polynomial,
    cc_sum,
    dowker,
    dowker_table_polynomial,
    gardner_fisher,
    gf_table_polynomial,
    ts_sum,
)
from .symfun import sym, sym_table

__version__ = "0.1.0"

__all__ = [
    "PiScaled",
    "Rational",
    "RationalPolynomial",
    "UnsupportedSumError",
    "VerificationReport",
    "bernoulli_number",
    "cc_polynomial",
    "cc_sum",
    "check_exact_vs_numeric",
    "cosecant_number",
    "dowker",
    "dowker_table_polynomial",
    "enumerate_partitions",
    "gardner_fisher",
    "gcn_by_interpolation",
    "gcn_by_series",
    "gcn_even_recurrence",
    "gcn_polynomial",
    "gf_table_polynomial",
    "partition_count",
    "raw_trig_sum",
    "sym",
    "sym_table",
    "ts_sum",
    "zeta_even",
    "zeta_even_ratio",
]
