"""Prime and semiprime identification from entanglement-entropy dynamics.

The heavy lifting lives in the C++ extension ``entprime._core``: log-domain
arithmetic, modified-Bessel and binomial-sum kernels, the oscillator and
spin engines, spectral extraction, and the classifiers.
"""

from ._core import (  # noqa: F401
    LogReal,
    OscEngine,
    SpinEngine,
    SpinRegion,
    TimeSeries,
    __version__,
    bessel_i_log,
    choose_sample_count,
    classify_osc,
    classify_spin,
    divisors,
    extract_dc,
    extract_mode,
    g_poly_log,
    is_prime,
    lambda_bar_set,
    log_binomial,
    log_factorial,
    osc_table_csv,
    osc_table_json,
    prime_count,
    reduced_divisors,
    region_of,
    rel_diff,
    run_selftest,
    sample_period,
    sieve_classify,
    sieve_pi,
    spin_table_csv,
    spin_table_json,
)

__all__ = [
    "LogReal",
    "OscEngine",
    "SpinEngine",
    "SpinRegion",
    "TimeSeries",
    "__version__",
    "bessel_i_log",
    "choose_sample_count",
    "classify_osc",
    "classify_spin",
    "divisors",
    "extract_dc",
    "extract_mode",
    "g_poly_log",
    "is_prime",
    "lambda_bar_set",
    "log_binomial",
    "log_factorial",
    "osc_table_csv",
    "osc_table_json",
    "prime_count",
    "reduced_divisors",
    "region_of",
    "rel_diff",
    "run_selftest",
    "sample_period",
    "sieve_classify",
    "sieve_pi",
    "spin_table_csv",
    "spin_table_json",
]
