"""Additive characters and exponential sums over Z[i].

The additive character is e(Re(z)) with e(x) = exp(2*pi*i*x).  All phases
arising from quotients a/w of Gaussian integers are carried as exact
rationals (numerator Re(a*conj(w)) over |w|^2) until a single complex
exponential per distinct phase; this keeps structurally-zero sums at
rounding-error size instead of letting quadrature drift accumulate.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .zi_core import (
    ZERO,
    GaussianInt,
    as_gaussian,
    canonical_associate,
    divisors,
    gcd,
    inv_mod,
    moebius,
    reduced_residues_mod,
    residues_mod,
)

TWO_PI = 2.0 * cmath.pi


@dataclass(frozen=True)
class CharacterValue:
    """A unit-modulus character value together with its exact phase in [0, 1)."""

    value: complex
    exact_phase: Fraction


@dataclass(frozen=True)
class KloostermanResult:
    value: complex
    modulus: GaussianInt
    term_count: int


def phase_fraction(a: GaussianInt, w: GaussianInt) -> Fraction:
    """Re(a/w) as an exact rational, reduced mod 1 to [0, 1)."""
    n = w.norm()
    if n == 0:
        raise ValueError("w must be non-zero")
    return Fraction(a.re * w.re + a.im * w.im, n) % 1


def e_phase(q: Fraction | float) -> complex:
    """exp(2*pi*i*q)."""
    return cmath.exp(TWO_PI * 1j * float(q))


def e_re(z) -> CharacterValue:
    """The character e(Re(z)).

    Accepts a complex number (or anything complex()-coercible), a Fraction,
    or a pair (a, w) of Gaussian integers denoting the exact quotient a/w.
    Binary floats are exact rationals, so the phase is always exact.
    """
    if isinstance(z, tuple) and len(z) == 2 and isinstance(z[0], GaussianInt):
        q = phase_fraction(z[0], z[1])
    elif isinstance(z, Fraction):
        q = z % 1
    elif isinstance(z, GaussianInt):
        q = Fraction(z.re) % 1
    else:
        q = Fraction(complex(z).real) % 1
    return CharacterValue(value=e_phase(q), exact_phase=q)


# ---------------------------------------------------------------------------
# residue/inverse tables, memoized per canonical modulus
# ---------------------------------------------------------------------------


@lru_cache(maxsize=2048)
def _reduced_with_inverses(w: GaussianInt) -> tuple[tuple[GaussianInt, GaussianInt], ...]:
    """Pairs (d, d*) with d*d* == 1 mod wO, for the canonical modulus w."""
    return tuple((d, inv_mod(d, w) if not w.is_unit() else ZERO) for d in reduced_residues_mod(w))


def _phase_table_sum(phases: dict[Fraction, int]) -> complex:
    total = 0j
    for q, mult in phases.items():
        total += mult * e_phase(q)
    return total


# ---------------------------------------------------------------------------
# Kloosterman sums
# ---------------------------------------------------------------------------


@lru_cache(maxsize=65536)
def _kloosterman_canonical(u: GaussianInt, v: GaussianInt, w: GaussianInt) -> tuple[complex, int]:
    n = w.norm()
    pairs = _reduced_with_inverses(w)
    wc = w.conj()
    phases: dict[int, int] = {}
    for d, dstar in pairs:
        a = u * dstar + v * d
        # Re(a/w) = Re(a*conj(w)) / |w|^2, kept as an integer numerator mod n
        num = (a.re * wc.re - a.im * wc.im) % n
        phases[num] = phases.get(num, 0) + 1
    total = 0j
    for num, mult in phases.items():
        total += mult * e_phase(Fraction(num, n))
    return total, len(pairs)


def kloosterman(u: GaussianInt, v: GaussianInt, w: GaussianInt) -> KloostermanResult:
    """The simple Kloosterman sum S(u, v; w) over Z[i].

    Sum of e(Re((u*d* + v*d)/w)) over reduced residues d mod wO, with d*
    the inverse of d.  The value depends on w only through the ideal wO,
    it is real, and |S| <= |w|^2.
    """
    u, v, w = as_gaussian(u), as_gaussian(v), as_gaussian(w)
    if w.is_zero():
        raise ValueError("Kloosterman modulus must be non-zero")
    wc = w.canonical()
    value, count = _kloosterman_canonical(u % wc, v % wc, wc)
    return KloostermanResult(value=value, modulus=w, term_count=count)


def kloosterman_cusp(
    omega: GaussianInt,
    omega_p: GaussianInt,
    p: GaussianInt,
    s: GaussianInt,
    r: GaussianInt,
) -> KloostermanResult:
    """The cusp-pair Kloosterman sum S(r* omega, omega'; p s).

    Here r* is any inverse of r mod psO; the value does not depend on the
    representative chosen.  Requires p, r, s non-zero with (p, r) ~ 1 and
    (r, s) ~ 1, so that r is invertible mod ps.
    """
    omega, omega_p = as_gaussian(omega), as_gaussian(omega_p)
    p, s, r = as_gaussian(p), as_gaussian(s), as_gaussian(r)
    if p.is_zero() or s.is_zero() or r.is_zero():
        raise ValueError("p, s, r must be non-zero")
    if not gcd(p, r).is_unit():
        raise ValueError("(p, r) must be coprime")
    if not gcd(r, s).is_unit():
        raise ValueError("(r, s) must be coprime")
    ps = p * s
    rstar = inv_mod(r, ps) if not ps.is_unit() else ZERO
    return kloosterman(rstar * omega, omega_p, ps)


def char_orthogonality(m: GaussianInt, a: GaussianInt, b: GaussianInt) -> complex:
    """Sum over n mod mO of e(Re((a-b)n/m)): |m|^2 if a == b mod mO, else 0."""
    m, a, b = as_gaussian(m), as_gaussian(a), as_gaussian(b)
    if m.is_zero():
        raise ValueError("modulus must be non-zero")
    d = a - b
    phases: dict[Fraction, int] = {}
    for n in residues_mod(m):
        q = phase_fraction(d * n, m)
        phases[q] = phases.get(q, 0) + 1
    return _phase_table_sum(phases)


# ---------------------------------------------------------------------------
# Ramanujan-type sums
# ---------------------------------------------------------------------------


def ramanujan_c(q: GaussianInt, b: GaussianInt, h: GaussianInt, k: GaussianInt) -> complex:
    """Brute-force c_q(b, h; k): sum of e(Re(a k / q)) over reduced residues a
    mod qO with a*b == h mod qO."""
    q, b, h, k = as_gaussian(q), as_gaussian(b), as_gaussian(h), as_gaussian(k)
    if q.is_zero():
        raise ValueError("modulus must be non-zero")
    phases: dict[Fraction, int] = {}
    for a, _ in _reduced_with_inverses(q.canonical()):
        if not ((a * b - h) % q).is_zero():
            continue
        qf = phase_fraction(a * k, q)
        phases[qf] = phases.get(qf, 0) + 1
    return _phase_table_sum(phases)


def ramanujan_c_closed(q: GaussianInt, b: GaussianInt, h: GaussianInt, k: GaussianInt) -> complex:
    """Closed form for c_q(b, h; k).

    Zero unless (b, q) ~ (h, q).  Otherwise, with c the canonical associate
    of (b, q), a quarter-weighted sum over the divisors t of (c, k)
    (associates included) of mu(c/t) |t|^2 e(Re((h/c)(k/t)(b/t)*/(q/c))),
    where (b/t)* inverts b/t mod (q/c)O; divisors t for which that inverse
    does not exist contribute nothing and are skipped.
    """
    q, b, h, k = as_gaussian(q), as_gaussian(b), as_gaussian(h), as_gaussian(k)
    if q.is_zero():
        raise ValueError("modulus must be non-zero")
    gb = q.canonical() if b.is_zero() else gcd(b, q)
    gh = q.canonical() if h.is_zero() else gcd(h, q)
    if gb != gh:
        return 0j
    c = gb
    q_over_c = q.exact_div(c)
    h_over_c = h.exact_div(c)
    ck = c if k.is_zero() else gcd(c, k)
    total = 0j
    for t in divisors(ck):
        b_over_t = b.exact_div(t)
        if not (q_over_c.is_unit() or gcd(b_over_t, q_over_c).is_unit()):
            continue
        inv = inv_mod(b_over_t, q_over_c)
        numer = h_over_c * k.exact_div(t) * inv
        term = moebius(c.exact_div(t)) * t.norm() * e_phase(phase_fraction(numer, q_over_c))
        total += term
    return total / 4.0


def ramanujan_c_special(q: GaussianInt, k: GaussianInt) -> complex:
    """c_q(0, 0; k) = S(k, 0; q) via the explicit Moebius-product evaluation:
    mu(q/(q,k)) |(q,k)|^2 prod over prime ideals containing (q,k) but not
    q/(q,k) of (1 - 1/|pi|^2)."""
    from .zi_core import factorize

    q, k = as_gaussian(q), as_gaussian(k)
    if q.is_zero():
        raise ValueError("modulus must be non-zero")
    g = q.canonical() if k.is_zero() else gcd(q, k)
    cofactor = q.exact_div(g)
    val = Fraction(moebius(cofactor) * g.norm())
    if val != 0:
        for p, _ in factorize(g).primes:
            if not p.divides(cofactor):
                val *= Fraction(p.norm() - 1, p.norm())
    return complex(val)


def delta_symbol(omega: GaussianInt, omega_p: GaussianInt) -> int:
    """Unit-orbit coincidence count: 4 if both zero, 2 if omega' = +-omega != 0,
    else 0.  (Sum over units u of [u*omega == omega'/u].)"""
    omega, omega_p = as_gaussian(omega), as_gaussian(omega_p)
    if omega.is_zero() and omega_p.is_zero():
        return 4
    if omega_p == omega or omega_p == -omega:
        return 0 if omega.is_zero() else 2
    return 0


def kloosterman_cache_clear() -> None:
    """Drop the memoized residue and Kloosterman tables."""
    _kloosterman_canonical.cache_clear()
    _reduced_with_inverses.cache_clear()
