"""Exact arithmetic in the ring of Gaussian integers Z[i].

Everything downstream (character sums, sieve points, aggregate sums) is
built on the primitives here: norms, canonical associates, the Euclidean
algorithm, factorization into Gaussian primes, residue systems modulo an
element, the Moebius function of the ring, and two counting functions
(primes in a dyadic norm window, and the index of a Hecke congruence
subgroup).  All operations are pure and use unbounded Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True)
class GaussianInt:
    """An element re + im*i of Z[i], with exact integer components."""

    re: int
    im: int

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        other = as_gaussian(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        other = as_gaussian(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        other = as_gaussian(other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        """|z|^2 = re^2 + im^2, a non-negative rational integer."""
        return self.re * self.re + self.im * self.im

    # -- Euclidean structure -----------------------------------------------

    def divmod_nearest(self, w: "GaussianInt") -> tuple["GaussianInt", "GaussianInt"]:
        """Quotient and remainder with |remainder|^2 <= |w|^2 / 2.

        The quotient is the nearest-integer rounding (half-up per
        component, which is translation invariant) of self/w computed
        exactly from self * conj(w) / |w|^2.
        """
        if w.is_zero():
            raise ZeroDivisionError("division by zero Gaussian integer")
        n = w.norm()
        t = self * w.conj()
        q = GaussianInt(_round_half_up(t.re, n), _round_half_up(t.im, n))
        return q, self - q * w

    def __floordiv__(self, w: "GaussianInt") -> "GaussianInt":
        return self.divmod_nearest(w)[0]

    def __mod__(self, w: "GaussianInt") -> "GaussianInt":
        return self.divmod_nearest(w)[1]

    def divides(self, other: "GaussianInt") -> bool:
        return (other % self).is_zero()

    def exact_div(self, w: "GaussianInt") -> "GaussianInt":
        q, r = self.divmod_nearest(w)
        if not r.is_zero():
            raise ValueError(f"{w} does not divide {self}")
        return q

    # -- predicates and normal forms ----------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def mul_i(self) -> "GaussianInt":
        return GaussianInt(-self.im, self.re)

    def canonical(self) -> "GaussianInt":
        """The unique associate with re > 0 and im >= 0 (0 maps to 0)."""
        if self.is_zero():
            return self
        z = self
        for _ in range(4):
            if z.re > 0 and z.im >= 0:
                return z
            z = z.mul_i()
        raise AssertionError("unreachable: one rotation must be canonical")

    def unit_to_canonical(self) -> "GaussianInt":
        """The unit u with u * self == self.canonical()."""
        if self.is_zero():
            return GaussianInt(1, 0)
        z, u = self, GaussianInt(1, 0)
        for _ in range(4):
            if z.re > 0 and z.im >= 0:
                return u
            z, u = z.mul_i(), u.mul_i()
        raise AssertionError("unreachable")

    def is_canonical(self) -> bool:
        return self.is_zero() or (self.re > 0 and self.im >= 0)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)

UNITS = (ONE, I, GaussianInt(-1, 0), GaussianInt(0, -1))


def as_gaussian(x) -> GaussianInt:
    """Coerce an int, pair, or GaussianInt to GaussianInt."""
    if isinstance(x, GaussianInt):
        return x
    if isinstance(x, int):
        return GaussianInt(x, 0)
    if isinstance(x, tuple) and len(x) == 2:
        return GaussianInt(int(x[0]), int(x[1]))
    raise TypeError(f"cannot interpret {x!r} as a Gaussian integer")


def _round_half_up(a: int, b: int) -> int:
    """Nearest integer to a/b (b > 0), ties toward +infinity.

    Translation invariance round((a + n*b)/b) = round(a/b) + n is what
    makes the remainder of divmod_nearest a residue-class invariant.
    """
    return (2 * a + b) // (2 * b)


def norm(z: GaussianInt) -> int:
    return as_gaussian(z).norm()


def canonical_associate(z: GaussianInt) -> GaussianInt:
    return as_gaussian(z).canonical()


def associates(z: GaussianInt) -> list[GaussianInt]:
    return [u * z for u in UNITS]


# ---------------------------------------------------------------------------
# gcd / Bezout / inverses
# ---------------------------------------------------------------------------


def gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Canonical-associate greatest common divisor via the Euclidean algorithm."""
    a, b = as_gaussian(a), as_gaussian(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.canonical()


def coprime(a: GaussianInt, b: GaussianInt) -> bool:
    return gcd(a, b).is_unit()


def xgcd(a: GaussianInt, b: GaussianInt) -> tuple[GaussianInt, GaussianInt, GaussianInt]:
    """(g, x, y) with a*x + b*y = g and g the canonical gcd."""
    a, b = as_gaussian(a), as_gaussian(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    x0, x1 = ONE, ZERO
    y0, y1 = ZERO, ONE
    while not r1.is_zero():
        q, r = r0.divmod_nearest(r1)
        r0, r1 = r1, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    u = r0.unit_to_canonical()
    return r0.canonical(), u * x0, u * y0


def bezout(r: GaussianInt, s: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """(u, t) with r*u - s*t = 1, for coprime non-zero r, s."""
    r, s = as_gaussian(r), as_gaussian(s)
    if r.is_zero() or s.is_zero():
        raise ValueError("bezout requires non-zero arguments")
    g, x, y = xgcd(r, s)
    if not g.is_unit():
        raise ValueError(f"bezout requires coprime arguments, gcd ~ {g}")
    ginv = _unit_inverse(g)
    u, t = ginv * x, -(ginv * y)
    assert (r * u - s * t) == ONE
    return u, t


def _unit_inverse(u: GaussianInt) -> GaussianInt:
    if not u.is_unit():
        raise ValueError(f"{u} is not a unit")
    return u.conj()  # for units, conj == inverse


def inv_mod(d: GaussianInt, w: GaussianInt) -> GaussianInt:
    """d* with d*d* == 1 mod wO.  For unit w every element inverts; returns 0."""
    d, w = as_gaussian(d), as_gaussian(w)
    if w.is_zero():
        raise ValueError("modulus must be non-zero")
    if w.is_unit():
        return ZERO
    g, x, _ = xgcd(d, w)
    if not g.is_unit():
        raise ValueError(f"{d} is not invertible mod {w}: gcd ~ {g}")
    return (_unit_inverse(g) * x) % w


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """unit * prod(p^e) over pairwise non-associate canonical Gaussian primes."""

    unit: GaussianInt
    primes: tuple[tuple[GaussianInt, int], ...]

    def value(self) -> GaussianInt:
        z = self.unit
        for p, e in self.primes:
            for _ in range(e):
                z = z * p
        return z

    def omega(self) -> int:
        """Number of distinct prime ideals dividing the element."""
        return len(self.primes)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.primes)


def _rational_factor(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization of a positive rational integer."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def _sqrt_minus_one_mod(p: int) -> int:
    """A square root of -1 mod p, for a rational prime p = 1 mod 4."""
    # For p = 1 mod 4, g^((p-1)/4) works for any quadratic non-residue g.
    for g in range(2, p):
        if pow(g, (p - 1) // 2, p) == p - 1:
            return pow(g, (p - 1) // 4, p)
    raise ValueError(f"{p} is not 1 mod 4")


@lru_cache(maxsize=None)
def _gaussian_prime_above(p: int) -> GaussianInt:
    """A canonical Gaussian prime dividing the rational prime p (p != 3 mod 4)."""
    if p == 2:
        return GaussianInt(1, 1)
    a = _sqrt_minus_one_mod(p)
    return gcd(GaussianInt(p, 0), GaussianInt(a, 1))


def factorize(n: GaussianInt) -> Factorization:
    """Deterministic factorization into canonical Gaussian primes.

    Works through the factorization of the integer norm; intended for the
    desk scale |n|^2 <= ~10^6 covered by trial division.
    """
    n = as_gaussian(n)
    if n.is_zero():
        raise ValueError("cannot factorize 0")
    primes: list[tuple[GaussianInt, int]] = []
    rest = n
    for p, _ in _rational_factor(n.norm()):
        if p % 4 == 3:
            # inert: p itself is a Gaussian prime
            pi = GaussianInt(p, 0)
            e = 0
            while pi.divides(rest):
                rest = rest.exact_div(pi)
                e += 1
            if e:
                primes.append((pi, e))
        else:
            # split (p = 1 mod 4) or ramified (p = 2)
            pi = _gaussian_prime_above(p)
            for cand in (pi, pi.conj().canonical()):
                e = 0
                while cand.divides(rest):
                    rest = rest.exact_div(cand)
                    e += 1
                if e:
                    primes.append((cand, e))
                if p == 2:
                    break  # 1+i and its conjugate are associates
    assert rest.is_unit(), f"factorization of {n} left non-unit {rest}"
    primes.sort(key=lambda pe: (pe[0].norm(), pe[0].re, pe[0].im))
    return Factorization(unit=rest, primes=tuple(primes))


def is_gaussian_prime(z: GaussianInt) -> bool:
    z = as_gaussian(z)
    if z.is_zero() or z.is_unit():
        return False
    f = factorize(z)
    return len(f.primes) == 1 and f.primes[0][1] == 1


def moebius(n: GaussianInt) -> int:
    """Moebius function of Z[i]: 0 on non-squarefree, else (-1)^omega(n)."""
    n = as_gaussian(n)
    if n.is_zero():
        raise ValueError("moebius(0) is undefined")
    f = factorize(n)
    if not f.is_squarefree():
        return 0
    return -1 if f.omega() % 2 else 1


def divisors(n: GaussianInt, up_to_units: bool = False) -> list[GaussianInt]:
    """All divisors of n.

    By default includes every associate (four per divisor class), which is
    the convention against which the quarter-weighted Moebius identity
    sums.  With up_to_units=True, one canonical representative per class.
    """
    n = as_gaussian(n)
    if n.is_zero():
        raise ValueError("divisors(0) is undefined")
    f = factorize(n)
    reps = [ONE]
    for p, e in f.primes:
        reps = [r * _pow(p, j) for r in reps for j in range(e + 1)]
    reps = [r.canonical() for r in reps]
    reps.sort(key=lambda z: (z.norm(), z.re, z.im))
    if up_to_units:
        return reps
    return [u * r for r in reps for u in UNITS]


def _pow(z: GaussianInt, e: int) -> GaussianInt:
    out = ONE
    for _ in range(e):
        out = out * z
    return out


# ---------------------------------------------------------------------------
# residue systems
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _residues_canonical(w: GaussianInt) -> tuple[GaussianInt, ...]:
    n = w.norm()
    m = abs(w.re) + abs(w.im)
    seen: dict[GaussianInt, None] = {}
    for x in range(-m, m + 1):
        for y in range(-m, m + 1):
            r = GaussianInt(x, y) % w
            if r not in seen:
                seen[r] = None
                if len(seen) == n:
                    return tuple(seen)
    raise AssertionError(f"found {len(seen)} residues mod {w}, expected {n}")


def residues_mod(w: GaussianInt) -> list[GaussianInt]:
    """A complete residue system mod wO; exactly |w|^2 elements."""
    w = as_gaussian(w)
    if w.is_zero():
        raise ValueError("modulus must be non-zero")
    return list(_residues_canonical(w.canonical()))


def reduced_residues_mod(w: GaussianInt) -> list[GaussianInt]:
    """Residues coprime to w (the unit group of O/wO)."""
    w = as_gaussian(w)
    if w.is_zero():
        raise ValueError("modulus must be non-zero")
    return [r for r in residues_mod(w) if gcd(r, w).is_unit()]


def euler_phi(w: GaussianInt) -> int:
    """|(O/wO)*| = |w|^2 * prod over prime ideals dividing w of (1 - 1/|pi|^2)."""
    w = as_gaussian(w)
    if w.is_zero():
        raise ValueError("modulus must be non-zero")
    val = Fraction(w.norm())
    for p, _ in factorize(w).primes:
        val *= Fraction(p.norm() - 1, p.norm())
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# lattice enumeration
# ---------------------------------------------------------------------------


def annulus_points(
    lo: float, hi: float, include_lo: bool = False, include_hi: bool = True
) -> Iterator[GaussianInt]:
    """Gaussian integers n with lo < |n|^2 <= hi (boundary flags adjustable)."""
    if hi < 0:
        return
    m = math.isqrt(int(hi))
    for x in range(-m, m + 1):
        for y in range(-m, m + 1):
            n2 = x * x + y * y
            if n2 == 0:
                continue
            ok_lo = (n2 >= lo) if include_lo else (n2 > lo)
            ok_hi = (n2 <= hi) if include_hi else (n2 < hi)
            if ok_lo and ok_hi:
                yield GaussianInt(x, y)


def disc_points(hi: float, include_hi: bool = True) -> Iterator[GaussianInt]:
    """Non-zero Gaussian integers with 0 < |n|^2 <= hi."""
    yield from annulus_points(0.0, hi, include_lo=False, include_hi=include_hi)


def canonical_by_norm(max_norm: int) -> list[GaussianInt]:
    """All canonical (re > 0, im >= 0) non-zero elements with norm <= max_norm."""
    out = [z for z in disc_points(max_norm) if z.is_canonical()]
    out.sort(key=lambda z: (z.norm(), z.re, z.im))
    return out


# ---------------------------------------------------------------------------
# counting functions
# ---------------------------------------------------------------------------


def gaussian_prime_count(x: float) -> int:
    """Number of Gaussian primes (all associates) with x >= |pi|^2 > x/2."""
    if x <= 0:
        raise ValueError("x must be positive")
    count = 0
    for m in range(2, int(x) + 1):
        if not (x >= m > x / 2):
            continue
        if m == 2:
            count += 4  # associates of 1+i
        elif _is_rational_prime(m) and m % 4 == 1:
            count += 8  # two non-associate primes above m, four associates each
        else:
            r = math.isqrt(m)
            if r * r == m and _is_rational_prime(r) and r % 4 == 3:
                count += 4  # associates of the inert prime r
    return count


def _is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def index_gamma0(r: GaussianInt) -> int:
    """Index of the level-r Hecke congruence subgroup in SL(2, Z[i]).

    |r|^2 * prod over distinct prime ideals containing r of (1 + 1/|pi|^2),
    with one factor per prime ideal; exact rational arithmetic.
    """
    r = as_gaussian(r)
    if r.is_zero():
        raise ValueError("level must be non-zero")
    val = Fraction(r.norm())
    for p, _ in factorize(r).primes:
        val *= Fraction(p.norm() + 1, p.norm())
    assert val.denominator == 1
    return int(val)


def projective_line_count(r: GaussianInt) -> int:
    """Brute-force |P^1(O/rO)|: pairs (c, d) with (c, d, r) ~ 1, modulo scaling
    by units of O/rO.  Oracle for index_gamma0 at small norms."""
    r = as_gaussian(r)
    if r.is_zero():
        raise ValueError("level must be non-zero")
    if r.is_unit():
        return 1
    res = residues_mod(r)
    pairs = 0
    for c in res:
        for d in res:
            if c.is_zero() and d.is_zero():
                continue
            if gcd(gcd(c, d), r).is_unit():
                pairs += 1
    phi = euler_phi(r)
    assert pairs % phi == 0
    return pairs // phi


# ---------------------------------------------------------------------------
# finitely supported coefficient vectors
# ---------------------------------------------------------------------------


class CoefficientVector:
    """A finitely supported map from non-zero Gaussian integers to C."""

    def __init__(self, data: dict[GaussianInt, complex] | Iterable[tuple[GaussianInt, complex]] = ()):
        items = data.items() if isinstance(data, dict) else data
        self._data: dict[GaussianInt, complex] = {}
        for n, c in items:
            n = as_gaussian(n)
            if n.is_zero():
                raise ValueError("coefficient index 0 is not allowed")
            if c != 0:
                self._data[n] = complex(c)

    def __getitem__(self, n: GaussianInt) -> complex:
        return self._data.get(as_gaussian(n), 0j)

    def __iter__(self) -> Iterator[tuple[GaussianInt, complex]]:
        return iter(sorted(self._data.items(), key=lambda kv: (kv[0].norm(), kv[0].re, kv[0].im)))

    def __len__(self) -> int:
        return len(self._data)

    def support(self) -> list[GaussianInt]:
        return [n for n, _ in self]

    def norm2_sq(self) -> float:
        """Squared l2 norm sum |c_n|^2."""
        return sum(abs(c) ** 2 for c in self._data.values())

    def max_index_norm(self) -> int:
        return max((n.norm() for n in self._data), default=0)
