"""Registry of the verifiable inequalities and their vectorized checks.

Each registry entry ties together: the corpus family the inequality applies
to, the radius of validity as a function of the parameters, a parameter
validator, and a vectorized envelope that upper-bounds the functional over
a whole r-grid from one table of per-entry ingredients.

The envelope folds in both the truncation tails and, for the pointwise
deviation functionals, the sharp coefficient majorant of |f(x) - a_0|
(sum_{k>=1} r^k |a_k|), which is what the underlying proofs bound, so a
nonpositive envelope excess certifies the inequality conservatively.
Envelopes are normalized so that the claimed bound is always 1.
"""

from dataclasses import dataclass

import numpy as np

from .functionals import BohrParams, energy_poly_value
from .radii import (
    RadiusResult,
    bohr_radius,
    deviation_radius,
    distance_tail_radius,
    halfspace_deviation_radius,
    halfspace_energy_radius,
    halfspace_quadratic_radius,
    weights_admissible,
)

__all__ = [
    "Ingredients",
    "TheoremInfo",
    "REGISTRY",
    "WeightsInadmissibleError",
    "compute_ingredients",
    "theorem_radius",
]

TOKENS = ("thm14", "bs12", "thm15", "bs13", "th15", "thm17", "theom17", "thmF")


class WeightsInadmissibleError(ValueError):
    """Raised when the energy-polynomial weights exceed the budget."""

    def __init__(self, budget, m):
        self.budget = budget
        self.m = m
        super().__init__(
            "energy weights inadmissible: weighted sum %.17g exceeds %.17g"
            % (budget, m)
        )


@dataclass(frozen=True)
class Ingredients:
    """Per-entry quantities over an r-grid, truncation tails included."""

    r: np.ndarray
    head_abs: float
    head_re: float
    lin: np.ndarray
    quad: np.ndarray
    energy: np.ndarray


def compute_ingredients(series, r):
    """Grid-vectorized upper coefficient sums for one series.

    Returns the linear sum sum_{k>=1} r^k |a_k|, the quadratic sum
    sum r^{2k} |a_k|^2 and the energy sum sum k r^{2k} |a_k|^2, each
    increased by its truncation tail bound.
    """
    r = np.asarray(r, dtype=np.float64)
    mags = series.abs_coeffs()
    n = mags.shape[0]
    powers = r[:, None] ** np.arange(n)[None, :]
    lin = powers[:, 1:] @ mags[1:]
    sq = powers * powers
    quad = sq[:, 1:] @ (mags[1:] ** 2)
    energy = sq[:, 1:] @ (np.arange(1, n) * mags[1:] ** 2)
    t = series.tail_coef
    if t > 0.0:
        rho = r * r
        geo = np.where(r < 1.0, r ** n / np.maximum(1.0 - r, 1e-300), np.inf)
        lin = lin + t * geo
        qgeo = rho**n / np.maximum(1.0 - rho, 1e-300)
        quad = quad + t * t * qgeo
        energy = energy + t * t * qgeo * (n - (n - 1) * rho) / np.maximum(
            1.0 - rho, 1e-300
        )
    return Ingredients(
        r=r,
        head_abs=float(mags[0]),
        head_re=float(series.coeffs[0][0]),
        lin=lin,
        quad=quad,
        energy=energy,
    )


def _check_range(value, lo, hi, name, lo_open=True):
    ok_lo = value > lo if lo_open else value >= lo
    if not (ok_lo and value <= hi):
        raise ValueError(
            "%s must lie in %s%g, %g]" % (name, "(" if lo_open else "[", lo, hi)
        )


def _validate_thm14(p):
    _check_range(p.m, 0.0, 2.0, "m")


def _validate_bs12(p):
    _check_range(p.m, 0.0, 2.0, "m")
    if p.lam < 0.0:
        raise ValueError("lambda must be nonnegative")
    if p.lam > 0.0 and p.q < 1.0:
        raise ValueError("q must be at least 1")


def _validate_thm15(p):
    _check_range(p.m, 0.0, 1.0, "m")


def _validate_bs13(p):
    _check_range(p.m, 0.0, 1.0, "m")
    ok, budget = weights_admissible(p.d, p.m)
    if not ok:
        raise WeightsInadmissibleError(budget, p.m)


def _validate_th15(p):
    _check_range(p.m, 0.0, 1.0, "m")
    if p.lam < 0.0:
        raise ValueError("lambda must be nonnegative")
    if p.lam > 0.0 and p.j < 1.0:
        raise ValueError("j must be at least 1")


def _validate_thm17(p):
    pass


def _validate_theom17(p):
    _check_range(p.beta, 0.0, 8.0 / 9.0 + 1e-12, "beta", lo_open=False)


def _validate_thmF(p):
    pass


def _quad_weight(head, r):
    return 1.0 / (1.0 + head) + r / (1.0 - r)


def _env_thm14(ing, p):
    return ing.head_abs**p.m + ing.lin


def _env_bs12(ing, p):
    return ing.head_abs**p.m + ing.lin + p.lam * ing.lin**p.q


def _env_thm15(ing, p):
    return ing.head_abs**p.m + ing.lin + _quad_weight(ing.head_abs, ing.r) * ing.quad


def _env_bs13(ing, p):
    powered = np.array([energy_poly_value(p.d, s) for s in ing.energy])
    return ing.head_abs**p.m + ing.lin + powered


def _env_th15(ing, p):
    return ing.head_abs**p.m + ing.lin + p.lam * ing.lin**p.j


def _env_thm17(ing, p):
    return ing.head_re + ing.lin + _quad_weight(ing.head_re, ing.r) * ing.quad


def _env_theom17(ing, p):
    return _env_thm17(ing, p) + p.beta * ing.energy


def _env_thmF(ing, p):
    return ing.lin / (1.0 - ing.head_re)


@dataclass(frozen=True)
class TheoremInfo:
    token: str
    corpus_kind: str
    description: str
    validate: callable
    radius: callable
    envelope: callable
    per_entry_radius: bool = False
    probe_default_a: float = 0.999
    probe_head_map: callable = lambda a: a


REGISTRY = {
    "thm14": TheoremInfo(
        token="thm14",
        corpus_kind="unit-ball",
        description="powered-head coefficient sum on the unit ball",
        validate=_validate_thm14,
        radius=lambda p, a0=None: bohr_radius(p.m),
        envelope=_env_thm14,
    ),
    "bs12": TheoremInfo(
        token="bs12",
        corpus_kind="unit-ball",
        description="coefficient sum with powered pointwise deviation",
        validate=_validate_bs12,
        radius=lambda p, a0=None: deviation_radius(p.m, p.lam, p.q),
        envelope=_env_bs12,
    ),
    "thm15": TheoremInfo(
        token="thm15",
        corpus_kind="unit-ball",
        description="coefficient sum with weighted quadratic refinement",
        validate=_validate_thm15,
        radius=lambda p, a0=None: bohr_radius(p.m),
        envelope=_env_thm15,
    ),
    "bs13": TheoremInfo(
        token="bs13",
        corpus_kind="unit-ball",
        description="coefficient sum with an energy-polynomial refinement",
        validate=_validate_bs13,
        radius=lambda p, a0=None: bohr_radius(p.m),
        envelope=_env_bs13,
    ),
    "th15": TheoremInfo(
        token="th15",
        corpus_kind="halfspace",
        description="half-space coefficient sum with powered deviation",
        validate=_validate_th15,
        radius=lambda p, a0=None: halfspace_deviation_radius(p.m, p.lam, p.j),
        envelope=_env_th15,
    ),
    "thm17": TheoremInfo(
        token="thm17",
        corpus_kind="halfspace",
        description="half-space sum with weighted quadratic refinement",
        validate=_validate_thm17,
        radius=lambda p, a0=None: halfspace_quadratic_radius(),
        envelope=_env_thm17,
        probe_head_map=lambda a: 1.0 - a,
    ),
    "theom17": TheoremInfo(
        token="theom17",
        corpus_kind="halfspace",
        description="half-space sum with quadratic and energy refinements",
        validate=_validate_theom17,
        radius=lambda p, a0=None: halfspace_energy_radius(
            0.0 if a0 is None else a0
        ),
        envelope=_env_theom17,
        per_entry_radius=True,
        probe_default_a=0.999999,
    ),
    "thmF": TheoremInfo(
        token="thmF",
        corpus_kind="halfspace",
        description="coefficient tail sum against the boundary distance",
        validate=_validate_thmF,
        radius=lambda p, a0=None: distance_tail_radius(),
        envelope=_env_thmF,
    ),
}


def theorem_radius(token, params=None, a0=None):
    """Radius of validity for one registry token; validates parameters."""
    info = REGISTRY[token]
    params = params or BohrParams()
    info.validate(params)
    result = info.radius(params, a0)
    assert isinstance(result, RadiusResult)
    return result
