"""Bohr-type coefficient functionals for series on the unit ball.

Each functional returns a ``FunctionalValue`` carrying the value computed
from the stored coefficients together with a sound upper bound on the
truncation contribution (zero for exact polynomials).  ``upper`` is the
conservative number used when checking an inequality below a radius.

Two families appear: functionals for self-maps of the unit ball, whose
coefficients satisfy |a_k| <= 1 - |a_0|^2, and functionals for maps into
the half-space Re w < 1 with real head a_0 in [0, 1), whose coefficients
satisfy |a_k| <= 2 (1 - a_0).
"""

import math
from dataclasses import dataclass

import numpy as np

from .series import evaluate

__all__ = [
    "BohrParams",
    "FunctionalValue",
    "tail_sum",
    "bohr_sum",
    "quadratic_sum",
    "energy_sum",
    "bohr_sum_with_deviation",
    "deviation_envelope",
    "bohr_sum_with_quadratic",
    "bohr_sum_with_energy_poly",
    "halfspace_sum_with_quadratic",
    "halfspace_sum_with_energy",
    "halfspace_distance",
    "real_head",
    "coefficient_margins",
    "coefficient_bounds_ok",
    "power_ratio",
    "energy_poly_value",
]

MAX_ENERGY_WEIGHT_RATIO = 8.0 / 9.0


@dataclass(frozen=True)
class BohrParams:
    """Scalar knobs shared by the functionals and radii.

    m: head exponent; lam, q: deviation weight and exponent on the unit
    ball; j: deviation exponent on the half-space; d: energy-polynomial
    weights (d_1, d_2, ...); beta: energy weight on the half-space.
    """

    m: float = 1.0
    lam: float = 0.0
    q: float = 1.0
    j: float = 1.0
    d: tuple = ()
    beta: float = 0.0

    def to_dict(self):
        return {
            "m": self.m,
            "lam": self.lam,
            "q": self.q,
            "j": self.j,
            "d": list(self.d),
            "beta": self.beta,
        }

    @classmethod
    def from_dict(cls, doc):
        return cls(
            m=float(doc.get("m", 1.0)),
            lam=float(doc.get("lam", 0.0)),
            q=float(doc.get("q", 1.0)),
            j=float(doc.get("j", 1.0)),
            d=tuple(float(v) for v in doc.get("d", [])),
            beta=float(doc.get("beta", 0.0)),
        )


@dataclass(frozen=True)
class FunctionalValue:
    """A functional value plus a bound on what truncation may add."""

    value: float
    tail: float

    @property
    def upper(self):
        return self.value + self.tail

    def __float__(self):
        return self.value


def _check_radius(r):
    if not 0.0 <= r < 1.0:
        raise ValueError("functionals are defined for 0 <= r < 1")
    return float(r)


def _check_exponent(m, top):
    if not 0.0 < m <= top:
        raise ValueError("head exponent must lie in (0, %g]" % top)
    return float(m)


def _powers(r, n):
    return r ** np.arange(n, dtype=np.float64)


def tail_sum(f, r):
    """sum_{k>=1} r^k |a_k|, the coefficient sum without the head."""
    r = _check_radius(r)
    mags = f.abs_coeffs()
    value = float(np.dot(_powers(r, mags.shape[0])[1:], mags[1:]))
    return FunctionalValue(value, f.tail_majorant(r))


def bohr_sum(f, r, m=1.0):
    """|a_0|^m + sum_{k>=1} r^k |a_k| with a powered head term."""
    m = _check_exponent(m, 2.0)
    body = tail_sum(f, r)
    head = float(np.linalg.norm(f.coeffs[0]))
    return FunctionalValue(head**m + body.value, body.tail)


def quadratic_sum(f, r):
    """sum_{k>=1} r^{2k} |a_k|^2."""
    r = _check_radius(r)
    mags = f.abs_coeffs()
    value = float(np.dot(_powers(r * r, mags.shape[0])[1:], mags[1:] ** 2))
    if f.tail_coef == 0.0:
        tail = 0.0
    else:
        rho = r * r
        tail = f.tail_coef**2 * rho ** (f.order + 1) / (1.0 - rho)
    return FunctionalValue(value, tail)


def energy_sum(f, r):
    """sum_{k>=1} k r^{2k} |a_k|^2, the derivative-weighted quadratic sum."""
    r = _check_radius(r)
    mags = f.abs_coeffs()
    n = mags.shape[0]
    weights = np.arange(n, dtype=np.float64)
    value = float(np.dot(weights[1:] * _powers(r * r, n)[1:], mags[1:] ** 2))
    if f.tail_coef == 0.0:
        tail = 0.0
    else:
        rho = r * r
        top = f.order + 1
        tail = (
            f.tail_coef**2
            * rho**top
            * (top - (top - 1) * rho)
            / (1.0 - rho) ** 2
        )
    return FunctionalValue(value, tail)


def bohr_sum_with_deviation(f, x, m=1.0, lam=0.0, q=1.0):
    """Bohr sum at r = |x| plus a powered pointwise deviation |f(x) - a_0|.

    The deviation is evaluated at the specific point x, so this functional
    depends on the point and not only on its modulus.
    """
    m = _check_exponent(m, 2.0)
    if lam < 0.0:
        raise ValueError("deviation weight must be nonnegative")
    if q < 1.0:
        raise ValueError("deviation exponent must be at least 1")
    r = x.norm()
    base = bohr_sum(f, r, m)
    head = f.coefficient(0)
    dev = (evaluate(f, x) - head).norm()
    err = f.tail_majorant(r)
    value = base.value + lam * dev**q
    tail = base.tail + lam * ((dev + err) ** q - dev**q)
    return FunctionalValue(value, tail)


def deviation_envelope(f, r, m=1.0, lam=0.0, q=1.0):
    """Sup over |x| = r of the deviation functional, via the coefficient bound.

    |f(x) - a_0| <= sum_{k>=1} r^k |a_k| by norm multiplicativity; for series
    with real coefficients times a fixed unit the bound is attained on the
    positive real axis, so this envelope is the exact sup there.
    """
    m = _check_exponent(m, 2.0)
    if lam < 0.0:
        raise ValueError("deviation weight must be nonnegative")
    if q < 1.0:
        raise ValueError("deviation exponent must be at least 1")
    base = bohr_sum(f, r, m)
    body = tail_sum(f, r)
    value = base.value + lam * body.value**q
    tail = base.tail + lam * (body.upper**q - body.value**q)
    return FunctionalValue(value, tail)


def bohr_sum_with_quadratic(f, r, m=1.0):
    """Bohr sum plus the quadratic sum weighted by 1/(1+|a_0|) + r/(1-r)."""
    m = _check_exponent(m, 1.0)
    base = bohr_sum(f, r, m)
    quad = quadratic_sum(f, r)
    head = float(np.linalg.norm(f.coeffs[0]))
    weight = 1.0 / (1.0 + head) + r / (1.0 - r)
    return FunctionalValue(
        base.value + weight * quad.value, base.tail + weight * quad.tail
    )


def energy_poly_value(d, s):
    """sum_i d[i-1] s^i for nonnegative weights d (a polynomial with no
    constant term, monotone in s)."""
    total = 0.0
    power = 1.0
    for weight in d:
        if weight < 0.0:
            raise ValueError("energy polynomial weights must be nonnegative")
        power *= s
        total += weight * power
    return total


def bohr_sum_with_energy_poly(f, r, m=1.0, d=()):
    """Bohr sum plus a nonnegative polynomial in the energy sum."""
    m = _check_exponent(m, 1.0)
    base = bohr_sum(f, r, m)
    energy = energy_sum(f, r)
    value = base.value + energy_poly_value(d, energy.value)
    tail = base.tail + (
        energy_poly_value(d, energy.upper) - energy_poly_value(d, energy.value)
    )
    return FunctionalValue(value, tail)


def real_head(f, tol=1e-10):
    """The head coefficient as a real number; raises when it is not real."""
    head = f.coeffs[0]
    dust = float(np.linalg.norm(head[1:]))
    if dust > tol:
        raise ValueError(
            "half-space functionals require a real head coefficient"
        )
    return float(head[0])


def _halfspace_head(f):
    a0 = real_head(f)
    if not -1e-10 <= a0 < 1.0:
        raise ValueError(
            "half-space functionals require a head coefficient in [0, 1)"
        )
    return min(max(a0, 0.0), 1.0)


def halfspace_sum_with_quadratic(f, r):
    """Full coefficient sum plus the weighted quadratic sum, half-space form.

    Defined for series with real head a_0 in [0, 1); the quadratic weight is
    1/(1 + a_0) + r/(1 - r).
    """
    a0 = _halfspace_head(f)
    base = bohr_sum(f, r, 1.0)
    quad = quadratic_sum(f, r)
    weight = 1.0 / (1.0 + a0) + r / (1.0 - r)
    return FunctionalValue(
        base.value + weight * quad.value, base.tail + weight * quad.tail
    )


def halfspace_sum_with_energy(f, r, beta=0.0):
    """Half-space quadratic functional plus beta times the energy sum.

    The functional is well defined for any beta in [0, 1]; the inequality
    below the energy radius additionally needs beta <= 8/9, which the
    verification registry enforces.
    """
    if not 0.0 <= beta <= 1.0 + 1e-12:
        raise ValueError("energy weight beta must lie in [0, 1]")
    base = halfspace_sum_with_quadratic(f, r)
    energy = energy_sum(f, r)
    return FunctionalValue(
        base.value + beta * energy.value, base.tail + beta * energy.tail
    )


def halfspace_distance(f):
    """Distance 1 - Re a_0 from the image of 0 to the half-space boundary."""
    head_re = float(f.coeffs[0][0])
    if head_re > 1.0:
        raise ValueError("hypothesis violated: f(0) outside the half-space")
    return 1.0 - head_re


def coefficient_margins(f, mode):
    """Margins of the coefficient bounds, nonnegative when the bound holds.

    mode "unit-ball": (1 - |a_0|^2) - |a_k|;
    mode "halfspace": 2 (1 - Re a_0) - |a_k|;   both for k >= 1.
    """
    mags = f.abs_coeffs()
    if mode == "unit-ball":
        cap = 1.0 - mags[0] ** 2
    elif mode == "halfspace":
        cap = 2.0 * (1.0 - float(f.coeffs[0][0]))
    else:
        raise ValueError("mode must be 'unit-ball' or 'halfspace'")
    return cap - mags[1:]


def coefficient_bounds_ok(f, mode, tol=1e-12):
    """Whether every tail coefficient obeys the bound; returns (ok, worst)."""
    margins = coefficient_margins(f, mode)
    worst = float(margins.min()) if margins.size else math.inf
    if f.tail_coef > 0.0:
        mags = f.abs_coeffs()
        if mode == "unit-ball":
            cap = 1.0 - mags[0] ** 2
        else:
            cap = 2.0 * (1.0 - float(f.coeffs[0][0]))
        worst = min(worst, cap - f.tail_coef)
    return worst >= -tol, worst


def power_ratio(t, m):
    """(1 - t^m) / (1 - t) with the limit value m at t = 1."""
    t = np.asarray(t, dtype=np.float64)
    near = np.abs(1.0 - t) < 1e-14
    safe = np.where(near, 0.5, t)
    out = (1.0 - safe**m) / (1.0 - safe)
    out = np.where(near, float(m), out)
    if out.ndim == 0:
        return float(out)
    return out
