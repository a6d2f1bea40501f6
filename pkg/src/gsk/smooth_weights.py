"""Smooth compactly supported test and weight functions.

Four families, all ultimately built from the standard bump
Phi(t) = exp(-1/(1-t^2)) on (-1, 1):

  * bump_phi            -- the bump itself, with exact derivatives;
  * plateau_omega(eta)  -- a [0,1]-valued window on (0, oo), identically 1
                           on [2^-eta, 2^eta], supported in [2^-eta-2, 2^eta+2];
  * annular_weight(Z)   -- a radial weight vanishing off Z/2 < |z|^2 < Z and
                           exceeding 1/4 on the middle of that annulus;
  * radial_window(X)    -- F(z) = Phi0(X |z|^2) with Phi0 a fixed bump
                           supported on [1/2, 2], equal to 1 on [3/4, 3/2];
  * twisted_radial      -- r |-> Omega(X r^2) r^(2it).

Derivatives are exact (chain/product rule down to the bump); central
finite differences serve only as cross-checks in the test-suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from scipy.integrate import quad

from . import _calculus as calc

LOG2 = math.log(2.0)
LOG_SQRT2 = 0.5 * LOG2


# ---------------------------------------------------------------------------
# the base bump and its exact derivatives
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _bump_poly(j: int) -> list[int]:
    """Coefficients A_j with Phi^(j)(t) = A_j(t)/(1-t^2)^(2j) * Phi(t).

    Recurrence: A_{j+1} = A_j' u^2 + (4 j t u - 2 t) A_j, with u = 1 - t^2.
    """
    if j == 0:
        return [1]
    a = _bump_poly(j - 1)
    da = [i * c for i, c in enumerate(a)][1:] or [0]
    # u^2 = 1 - 2 t^2 + t^4
    u2 = [1, 0, -2, 0, 1]
    term1 = _poly_mul(da, u2)
    # 4 (j-1) t u - 2 t = (4j - 6) t - 4 (j-1) t^3
    lin = [0, 4 * (j - 1) - 2, 0, -4 * (j - 1)]
    term2 = _poly_mul(a, lin)
    return _poly_add(term1, term2)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for k, cb in enumerate(b):
            out[i + k] += ca * cb
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_eval(p: list[int], t: float) -> float:
    out = 0.0
    for c in reversed(p):
        out = out * t + c
    return out


def bump_phi(t: float, j: int = 0) -> float:
    """The standard bump exp(-1/(1-t^2)) on (-1, 1), or its j-th derivative."""
    if abs(t) >= 1.0:
        return 0.0
    u = 1.0 - t * t
    base = math.exp(-1.0 / u)
    if j == 0:
        return base
    return _poly_eval(_bump_poly(j), t) / u ** (2 * j) * base


def bump_phi_derivs(t: float, n: int) -> list[complex]:
    """Derivative sequence [Phi(t), ..., Phi^(n)(t)]."""
    if abs(t) >= 1.0:
        return [0.0] * (n + 1)
    u = 1.0 - t * t
    base = math.exp(-1.0 / u)
    return [complex(_poly_eval(_bump_poly(j), t) / u ** (2 * j) * base) for j in range(n + 1)]


@lru_cache(maxsize=1)
def bump_mass() -> float:
    """Integral of the bump over (-1, 1)."""
    val, _ = quad(bump_phi, -1.0, 1.0, epsabs=1e-14, epsrel=1e-13)
    return val


def smooth_step(x: float, j: int = 0) -> float:
    """S(x) = (1/mass) * integral of the bump up to x: 0 for x <= -1, 1 for x >= 1."""
    if j == 0:
        if x <= -1.0:
            return 0.0
        if x >= 1.0:
            return 1.0
        val, _ = quad(bump_phi, -1.0, x, epsabs=1e-14, epsrel=1e-13)
        return val / bump_mass()
    return bump_phi(x, j - 1) / bump_mass()


# ---------------------------------------------------------------------------
# radial weights
# ---------------------------------------------------------------------------


@dataclass
class RadialWeight:
    """A smooth compactly supported function of a radial variable.

    eval/deriv are zero outside [r_lo, r_hi]; deriv(0, r) == eval(r).
    `derivs_fn(r, n)` returns the exact derivative sequence up to order n.
    """

    r_lo: float
    r_hi: float
    derivs_fn: Callable[[float, int], list[complex]]
    label: str = ""

    def eval(self, r: float) -> complex:
        if not (self.r_lo <= r <= self.r_hi):
            return 0j
        return self.derivs_fn(r, 0)[0]

    def deriv(self, j: int, r: float) -> complex:
        if not (self.r_lo <= r <= self.r_hi):
            return 0j
        return self.derivs_fn(r, j)[j]

    def derivs(self, r: float, n: int) -> list[complex]:
        if not (self.r_lo <= r <= self.r_hi):
            return [0j] * (n + 1)
        return self.derivs_fn(r, n)

    def __call__(self, r: float) -> complex:
        return self.eval(r)

    @property
    def support_interval(self) -> tuple[float, float]:
        return (self.r_lo, self.r_hi)

    def derivative_view(self, j: int) -> "RadialWeight":
        """The j-th derivative as a weight on the same support."""
        return RadialWeight(
            self.r_lo,
            self.r_hi,
            lambda r, n, _j=j: self.derivs_fn(r, n + _j)[_j:],
            label=f"{self.label}^({j})",
        )

    def central_diff(self, j: int, r: float, h: float | None = None) -> complex:
        """Finite-difference cross-check of deriv(j, r)."""
        if h is None:
            h = max(1e-3 * (self.r_hi - self.r_lo), 1e-6)
        return calc.central_diff(self.eval, r, j, h)


@dataclass
class SmoothProfile:
    """A smooth function on (0, oo) with derivative access (no support clip)."""

    derivs_fn: Callable[[float, int], list[complex]]
    support: tuple[float, float]
    label: str = ""

    def eval(self, x: float) -> complex:
        return self.derivs_fn(x, 0)[0]

    def deriv(self, j: int, x: float) -> complex:
        return self.derivs_fn(x, j)[j]

    def derivs(self, x: float, n: int) -> list[complex]:
        return self.derivs_fn(x, n)

    def __call__(self, x: float) -> complex:
        return self.eval(x)


# ---------------------------------------------------------------------------
# plateau window
# ---------------------------------------------------------------------------


def plateau_omega(eta: float) -> SmoothProfile:
    """A [0,1]-valued window on (0, oo), == 1 on [2^-eta, 2^eta] and
    supported in [2^-eta-2, 2^eta+2].

    Built as Omega(u) = Psi(log2 u) with
    Psi(y) = (X(1))^-1 (X(y+eta+1) - X(y-eta-1)) and X the bump's
    antiderivative.
    """
    if eta <= 0:
        raise ValueError("eta must be positive")

    def psi_derivs(y: float, n: int) -> list[complex]:
        up = smooth_step(y + eta + 1.0)
        down = smooth_step(y - eta - 1.0)
        out: list[complex] = [complex(up - down)]
        if n >= 1:
            m = bump_mass()
            a = bump_phi_derivs(y + eta + 1.0, n - 1)
            b = bump_phi_derivs(y - eta - 1.0, n - 1)
            out += [(a[k] - b[k]) / m for k in range(n)]
        return out

    def omega_derivs(u: float, n: int) -> list[complex]:
        if u <= 0:
            raise ValueError("argument must be positive")
        g = calc.log_derivs(u, n, base_log=LOG2)
        y = g[0].real
        return calc.compose(psi_derivs(y, n), g)

    return SmoothProfile(
        derivs_fn=omega_derivs,
        support=(2.0 ** (-eta - 2), 2.0 ** (eta + 2)),
        label=f"plateau(eta={eta})",
    )


# ---------------------------------------------------------------------------
# annular weight
# ---------------------------------------------------------------------------


def annular_weight(Z: float) -> RadialWeight:
    """omega(Z; z) = Phi(1 + log(|z|^2 / Z)/log sqrt(2)) as a radial weight.

    Vanishes unless Z/2 < |z|^2 < Z; exceeds 1/4 for
    2^(-3/4) Z <= |z|^2 <= 2^(-1/4) Z; range inside [0, 1/e].
    """
    if Z <= 0:
        raise ValueError("Z must be positive")

    def derivs(r: float, n: int) -> list[complex]:
        # inner map g(r) = 1 + (2 log r - log Z)/log sqrt(2)
        g0 = 1.0 + (2.0 * math.log(r) - math.log(Z)) / LOG_SQRT2
        g = [complex(g0)]
        for k in range(1, n + 1):
            g.append(2.0 * ((-1) ** (k - 1)) * math.factorial(k - 1) / (r**k * LOG_SQRT2))
        return calc.compose(bump_phi_derivs(g0, n), g)

    return RadialWeight(
        r_lo=math.sqrt(Z / 2.0),
        r_hi=math.sqrt(Z),
        derivs_fn=derivs,
        label=f"annular(Z={Z})",
    )


def annular_weight_complex(Z: float) -> Callable[[complex], float]:
    """The same annular weight as a function of a complex argument."""
    w = annular_weight(Z)

    def f(z: complex) -> float:
        return w.eval(abs(z)).real

    return f


# ---------------------------------------------------------------------------
# fixed window bump for the scaled radial family
# ---------------------------------------------------------------------------

_Y_LO = -1.0
_Y_PLATEAU_LO = math.log2(0.75)
_Y_PLATEAU_HI = math.log2(1.5)
_Y_HI = 1.0


def _window_phi0_derivs(u: float, n: int) -> list[complex]:
    """Phi0(u): smooth on (0, oo), supp [1/2, 2], == 1 on [3/4, 3/2], range [0,1].

    Product of two smooth steps in y = log2 u: an up-ramp over
    [-1, log2(3/4)] and a down-ramp over [log2(3/2), 1].
    """
    g = calc.log_derivs(u, n, base_log=LOG2)
    y = g[0].real
    m_up = 2.0 / (_Y_PLATEAU_LO - _Y_LO)
    m_dn = 2.0 / (_Y_HI - _Y_PLATEAU_HI)
    c_up = 0.5 * (_Y_LO + _Y_PLATEAU_LO)
    c_dn = 0.5 * (_Y_PLATEAU_HI + _Y_HI)

    def step_derivs(x: float, slope: float) -> list[complex]:
        seq = [complex(smooth_step(x))]
        if n >= 1:
            mass = bump_mass()
            base = bump_phi_derivs(x, n - 1)
            seq += [base[k] * slope ** (k + 1) / mass for k in range(n)]
        return seq

    up = step_derivs(m_up * (y - c_up), m_up)
    down = step_derivs(-m_dn * (y - c_dn), -m_dn)
    psi = calc.leibniz(up, down)
    return calc.compose(psi, g)


def window_phi0(u: float, j: int = 0) -> float:
    """The fixed bump Phi0 on [1/2, 2] (== 1 on [3/4, 3/2]), or a derivative."""
    if u <= 0.5 or u >= 2.0:
        return 0.0
    return _window_phi0_derivs(u, j)[j].real


def radial_window(X: float) -> RadialWeight:
    """The scaled test window F(z) = Phi0(X |z|^2), as its radial profile.

    Smooth, even as a function on C*, compactly supported with
    X |z|^2 in [1/2, 2]; identically 1 where X |z|^2 in [3/4, 3/2].
    """
    if X < 2:
        raise ValueError("X must be >= 2")

    def derivs(r: float, n: int) -> list[complex]:
        u = X * r * r
        if u <= 0.5 or u >= 2.0:
            return [0j] * (n + 1)
        g: list[complex] = [complex(u), complex(2.0 * X * r), complex(2.0 * X)]
        g += [0j] * max(0, n - 2)
        return calc.compose(_window_phi0_derivs(u, n), g[: n + 1])

    return RadialWeight(
        r_lo=math.sqrt(0.5 / X),
        r_hi=math.sqrt(2.0 / X),
        derivs_fn=derivs,
        label=f"radial_window(X={X})",
    )


def radial_window_complex(X: float) -> Callable[[complex], float]:
    w = radial_window(X)

    def f(z: complex) -> float:
        return w.eval(abs(z)).real

    return f


# ---------------------------------------------------------------------------
# twisted radial functions
# ---------------------------------------------------------------------------


def twisted_radial(profile: SmoothProfile, X: float, t: float) -> RadialWeight:
    """phi(r) = Omega(X r^2) * r^(2 i t) for a smooth profile Omega.

    If supp Omega lies in [1/B, B] the result is supported in
    [B^-1/2 X^-1/2, B^1/2 X^-1/2], and its j-th derivative is
    O((1+|t|)^j r^-j) with a constant depending only on the profile.
    """
    if X <= 0:
        raise ValueError("X must be positive")
    lo, hi = profile.support
    if lo <= 0 or hi <= lo:
        raise ValueError("profile must have support [1/B, B] with B > 1")

    def derivs(r: float, n: int) -> list[complex]:
        u = X * r * r
        g: list[complex] = [complex(u), complex(2.0 * X * r), complex(2.0 * X)]
        g += [0j] * max(0, n - 2)
        outer = calc.compose(profile.derivs(u, n), g[: n + 1])
        twist = calc.power_series_derivs(r, 2j * t, n)
        return calc.leibniz(outer, twist)

    return RadialWeight(
        r_lo=math.sqrt(lo / X),
        r_hi=math.sqrt(hi / X),
        derivs_fn=derivs,
        label=f"twisted(X={X}, t={t})",
    )
