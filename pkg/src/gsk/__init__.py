"""Verification kit for Gaussian-integer exponential sums and transforms.

Subpackages:
    zi_core            exact Z[i] arithmetic, factorization, residue systems
    char_sums          additive characters, Kloosterman and Ramanujan-type sums
    smooth_weights     smooth bump / plateau / annular test functions
    fourier_poisson    Fourier transforms on C and Poisson summation over Z[i]
    large_sieve        analytic large-sieve inequalities over Z[i]
    spectral_transform Bessel-kernel transform of radial test functions
    aggregates         aggregate sums of Kloosterman sums
    cli                verification suites, parameter scans, reports
"""

from .zi_core import GaussianInt, gcd, moebius, factorize

__all__ = ["GaussianInt", "gcd", "moebius", "factorize"]
__version__ = "0.1.0"
