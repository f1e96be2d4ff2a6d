"""Radii of validity for the coefficient-functional inequalities.

Closed-form radii are returned directly; root-characterized radii are
located by bisection to a 1e-13 bracket followed by two Newton steps, and
every result carries the defining-equation residual and the final bracket.

All root equations are phrased in the variable s = r / (1 - r), which maps
(0, 1) monotonically onto (0, inf) and makes the brackets elementary.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "RadiusResult",
    "bohr_radius",
    "deviation_radius",
    "halfspace_deviation_radius",
    "halfspace_quadratic_radius",
    "halfspace_energy_radius",
    "distance_tail_radius",
    "energy_cap",
    "l_condition_weight",
    "energy_budget",
    "weights_admissible",
    "sharpness_poly",
]


@dataclass(frozen=True)
class RadiusResult:
    """A radius value plus how it was obtained."""

    value: float
    method: str
    residual: float
    bracket: tuple

    def to_dict(self):
        return {
            "value": self.value,
            "method": self.method,
            "residual": self.residual,
            "bracket": list(self.bracket),
        }

    @classmethod
    def from_dict(cls, doc):
        return cls(
            value=float(doc["value"]),
            method=str(doc["method"]),
            residual=float(doc["residual"]),
            bracket=tuple(float(v) for v in doc["bracket"]),
        )


def _closed_form(value):
    return RadiusResult(value=value, method="closed-form", residual=0.0,
                        bracket=(value, value))


def _bisect_then_newton(h, dh, lo, hi, bisect_tol=1e-13, newton_steps=2):
    """Locate the root of h inside [lo, hi]; h(lo) and h(hi) must differ in sign."""
    flo = h(lo)
    fhi = h(hi)
    if flo == 0.0:
        return lo, (lo, lo)
    if fhi == 0.0:
        return hi, (hi, hi)
    if (flo > 0.0) == (fhi > 0.0):
        raise ValueError("root bracket does not straddle a sign change")
    while hi - lo > bisect_tol:
        mid = 0.5 * (lo + hi)
        fmid = h(mid)
        if fmid == 0.0:
            lo = hi = mid
            break
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    for _ in range(newton_steps):
        slope = dh(root)
        if slope == 0.0:
            break
        step = h(root) / slope
        moved = root - step
        if lo - 1e-9 <= moved <= hi + 1e-9:
            root = moved
    return root, (lo, hi)


def _check_m(m, top=2.0):
    if not 0.0 < m <= top:
        raise ValueError("head exponent must lie in (0, %g]" % top)
    return float(m)


def bohr_radius(m):
    """Radius m / (2 + m) for the powered-head coefficient sum, m in (0, 2]."""
    m = _check_m(m)
    return _closed_form(m / (2.0 + m))


def _deviation_root(m, lam, q):
    """Radius from the root of s + lam s^q = m/2, expressed in r."""
    target = m / 2.0

    def h(s):
        return s + lam * s**q - target

    def dh(s):
        return 1.0 + lam * q * s ** (q - 1.0)

    s_root, (s_lo, s_hi) = _bisect_then_newton(h, dh, 0.0, target)
    value = s_root / (1.0 + s_root)
    return RadiusResult(
        value=value,
        method="bracketed-root",
        residual=abs(h(s_root)),
        bracket=(s_lo / (1.0 + s_lo), s_hi / (1.0 + s_hi)),
    )


def deviation_radius(m, lam=0.0, q=1.0):
    """Radius for the unit-ball sum with a powered deviation term.

    Solves s + lam s^q = m/2 in s = r/(1-r); lam = 0 reduces to the
    closed form m / (2 + m).
    """
    m = _check_m(m)
    if lam < 0.0:
        raise ValueError("deviation weight must be nonnegative")
    if q < 1.0:
        raise ValueError("deviation exponent must be at least 1")
    if lam == 0.0:
        return bohr_radius(m)
    return _deviation_root(m, lam, q)


def halfspace_deviation_radius(m, lam=0.0, j=1.0):
    """Radius for the half-space sum with a powered deviation term.

    Same root equation with the weight doubled per unit of exponent:
    s + 2^{j-1} lam s^j = m/2.
    """
    m = _check_m(m, top=1.0)
    if lam < 0.0:
        raise ValueError("deviation weight must be nonnegative")
    if j < 1.0:
        raise ValueError("deviation exponent must be at least 1")
    if lam == 0.0:
        return bohr_radius(m)
    return _deviation_root(m, (2.0 ** (j - 1.0)) * lam, j)


def halfspace_quadratic_radius():
    """Radius for the half-space sum with quadratic refinement.

    The positive root below 1 of 3 r^3 - 5 r^2 - 3 r + 1 = 0.
    """

    def h(r):
        return ((3.0 * r - 5.0) * r - 3.0) * r + 1.0

    def dh(r):
        return (9.0 * r - 10.0) * r - 3.0

    root, bracket = _bisect_then_newton(h, dh, 0.2, 0.3)
    return RadiusResult(
        value=root,
        method="bracketed-root",
        residual=abs(h(root)),
        bracket=bracket,
    )


def halfspace_energy_radius(a0):
    """Radius 1 / (5 - 2 a_0) for the energy-refined half-space sum."""
    if not 0.0 <= a0 < 1.0:
        raise ValueError("head coefficient must lie in [0, 1)")
    return _closed_form(1.0 / (5.0 - 2.0 * a0))


def distance_tail_radius():
    """Radius 1/3 for bounding the coefficient tail sum by the distance
    from the image of 0 to the half-space boundary."""
    return _closed_form(1.0 / 3.0)


def energy_cap(m):
    """Upper bound m (2 + m) / (4 (m + 1)) on the energy sum below the radius.

    Equals R/(1 - R^2) at R = m/(2+m).
    """
    m = _check_m(m)
    return m * (2.0 + m) / (4.0 * (m + 1.0))


@lru_cache(maxsize=None)
def l_condition_weight(k):
    """max over [0, 1] of x (1+x)^2 (1-x^2)^{2k-2}, for integer k >= 2.

    The log-derivative 1/x + 2/(1+x) - (4k-4) x/(1-x^2) falls strictly from
    +inf to -inf on (0, 1), so the maximizer is the unique interior root.
    """
    if int(k) != k or k < 2:
        raise ValueError("weight index must be an integer >= 2")
    k = int(k)
    c = 4.0 * k - 4.0

    def slope(x):
        return 1.0 / x + 2.0 / (1.0 + x) - c * x / (1.0 - x * x)

    def dslope(x):
        return (
            -1.0 / x**2
            - 2.0 / (1.0 + x) ** 2
            - c * (1.0 + x * x) / (1.0 - x * x) ** 2
        )

    x_star, _ = _bisect_then_newton(slope, dslope, 1e-12, 1.0 - 1e-12)
    return x_star * (1.0 + x_star) ** 2 * (1.0 - x_star * x_star) ** (2 * k - 2)


def energy_budget(d, m):
    """Weighted budget consumed by energy-polynomial weights d at exponent m.

    8 d_1 M^2 + sum_{k>=2} 2 (2k - 1) c_k d_k M^{2k}, with M the energy cap
    and c_k the interior-maximum weights.
    """
    m = _check_m(m, top=1.0)
    d = tuple(float(v) for v in d)
    if any(v < 0.0 for v in d):
        raise ValueError("energy polynomial weights must be nonnegative")
    if not d:
        return 0.0
    cap = energy_cap(m)
    total = 8.0 * d[0] * cap**2
    for k in range(2, len(d) + 1):
        total += 2.0 * (2.0 * k - 1.0) * l_condition_weight(k) * d[k - 1] * cap ** (2 * k)
    return total


def weights_admissible(d, m):
    """Check the budget condition; returns (ok, budget value)."""
    budget = energy_budget(d, m)
    return budget <= m, budget


def sharpness_poly(t, beta):
    """Quintic controlling the sign of the energy-refined sharpness excess.

    P(t) + beta Q(t) with
    P(t) = -4 t^5 + 32 t^4 - 82 t^3 + 58 t^2 + 38 t - 42,
    Q(t) = -4 t^4 + 20 t^3 - 21 t^2 - 20 t + 25,
    evaluated by Horner's scheme; nonpositive on [0, 1] for beta <= 8/9,
    with a double root at t = 1.
    """
    t = np.asarray(t, dtype=np.float64)
    p = ((((-4.0 * t + 32.0) * t - 82.0) * t + 58.0) * t + 38.0) * t - 42.0
    q = (((-4.0 * t + 20.0) * t - 21.0) * t - 20.0) * t + 25.0
    out = p + beta * q
    if out.ndim == 0:
        return float(out)
    return out
