"""Exact higher-order derivative combinators (Leibniz and Faa di Bruno).

Derivative sequences are lists [f(x), f'(x), ..., f^(n)(x)].  These
combinators let composite weight functions expose closed-form derivatives
down to the base bump, with finite differences relegated to cross-checks.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def leibniz(f_derivs: list[complex], g_derivs: list[complex]) -> list[complex]:
    """Derivative sequence of a product from the sequences of its factors."""
    n = min(len(f_derivs), len(g_derivs)) - 1
    return [
        sum(comb(j, k) * f_derivs[k] * g_derivs[j - k] for k in range(j + 1))
        for j in range(n + 1)
    ]


@lru_cache(maxsize=None)
def _bell_indices(n: int, k: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Expansion data for the partial Bell polynomial B_{n,k}.

    Returns terms (coefficient, (i_1, ..., i_m)) meaning
    coefficient * x_{i_1} * ... * x_{i_m}; built from the recursion
    B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i, k-1}.
    """
    if n == 0 and k == 0:
        return ((1, ()),)
    if n == 0 or k == 0:
        return ()
    out: list[tuple[int, tuple[int, ...]]] = []
    for i in range(1, n - k + 2):
        c = comb(n - 1, i - 1)
        for sub_c, sub_idx in _bell_indices(n - i, k - 1):
            out.append((c * sub_c, tuple(sorted(sub_idx + (i,)))))
    # merge identical monomials
    merged: dict[tuple[int, ...], int] = {}
    for c, idx in out:
        merged[idx] = merged.get(idx, 0) + c
    return tuple((c, idx) for idx, c in sorted(merged.items()))


def compose(f_derivs_at_g: list[complex], g_derivs: list[complex]) -> list[complex]:
    """Derivative sequence of f(g(x)).

    f_derivs_at_g[k] = f^(k)(g(x)); g_derivs[k] = g^(k)(x).
    """
    n = min(len(f_derivs_at_g), len(g_derivs)) - 1
    out: list[complex] = [f_derivs_at_g[0]]
    for m in range(1, n + 1):
        total = 0j
        for k in range(1, m + 1):
            bell = 0j
            for c, idx in _bell_indices(m, k):
                term = complex(c)
                for i in idx:
                    term *= g_derivs[i]
                bell += term
            total += f_derivs_at_g[k] * bell
        out.append(total)
    return out


def log_derivs(x: float, n: int, base_log: float = 1.0) -> list[complex]:
    """Derivative sequence of t -> log(t)/base_log at x > 0."""
    import math

    out: list[complex] = [math.log(x) / base_log]
    for k in range(1, n + 1):
        out.append(((-1) ** (k - 1)) * math.factorial(k - 1) / (x**k * base_log))
    return out


def power_series_derivs(x: float, exponent: complex, n: int) -> list[complex]:
    """Derivative sequence of t -> t**exponent at x > 0 (principal branch)."""
    import cmath
    import math

    base = cmath.exp(exponent * math.log(x))
    out = [base]
    c = complex(1.0)
    for k in range(1, n + 1):
        c *= exponent - (k - 1)
        out.append(c * base / x**k)
    return out


def central_diff(fn, x: float, j: int, h: float) -> complex:
    """Order-j central finite difference with step h (cross-check only)."""
    total = 0j
    for k in range(j + 1):
        total += ((-1) ** k) * comb(j, k) * complex(fn(x + (j / 2 - k) * h))
    return total / h**j
