"""Test-function corpora and sharpness probes.

Two families are generated:

* unit-ball entries: series whose coefficients obey the self-map bound
  |a_k| <= 1 - |a_0|^2 (Moebius transforms times a unit octonion, products
  of Moebius factors, rescaled random polynomials, constants);
* half-space entries: series with real head a_0 in [0, 1) and coefficients
  obeying |a_k| <= 2 (1 - a_0) (boundary-measure mixtures whose values have
  real part below 1, including the extremal single-atom case).

Every entry carries provenance (kind, seed, parameters) and a certificate
label, and corpora serialize to JSON losslessly.  ``sharpness_probe``
evaluates the matching extremal family just beyond a radius and returns the
functional value normalized by its claimed bound, so any return above 1
witnesses failure beyond the radius.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import functionals as fn
from .octonion import ONE, Octonion
from .series import DEFAULT_ORDER, SliceSeries, slice_product, slice_reciprocal, sup_norm_estimate
from .theorems import REGISTRY

__all__ = [
    "CorpusEntry",
    "make_disk_extremal",
    "make_disk_extremal_via_ops",
    "make_halfspace_extremal",
    "random_unit_ball_function",
    "random_halfspace_function",
    "build_corpus",
    "certify_unit_ball",
    "certify_halfspace",
    "corpus_to_json",
    "corpus_from_json",
    "save_corpus",
    "load_corpus",
    "sharpness_probe",
]


@dataclass(frozen=True)
class CorpusEntry:
    """A test series plus its membership certificate and provenance."""

    series: SliceSeries
    certificate: str
    provenance: dict


def _check_unit(u):
    if abs(u.norm() - 1.0) > 1e-12:
        raise ValueError("u must be a unit octonion")
    return u


def _check_head(a):
    if not 0.0 <= a < 1.0:
        raise ValueError("family parameter a must lie in [0, 1)")
    return float(a)


def make_disk_extremal(a, u=ONE, order=DEFAULT_ORDER):
    """The unit-ball extremal family: the real Moebius self-map times a unit.

    Coefficients are a u at k = 0 and -(1 - a^2) a^{k-1} u for k >= 1.  The
    constant unit factor keeps the values norm-equal to the real Moebius
    map's, so the family stays inside the closed unit ball while realizing
    equality in the self-map coefficient bound at k = 1 and driving the
    coefficient sums arbitrarily close to their suprema as a -> 1.
    """
    a = _check_head(a)
    u = _check_unit(u)
    arr = np.zeros((order + 1, 8))
    arr[0] = a * u.coords
    decay = -(1.0 - a * a) * a ** np.arange(order, dtype=np.float64)
    arr[1:] = decay[:, None] * u.coords[None, :]
    return SliceSeries(arr, tail_coef=(1.0 - a * a) * a**order)


def make_disk_extremal_via_ops(a, u=ONE, order=DEFAULT_ORDER):
    """Same family built through the series operations.

    Composes (a - (1 - a^2) x (1 - x a)^{-1}) * u with the reciprocal and
    the products taken in the slice-product sense; agreement with the
    direct construction validates the product and reciprocal
    implementations.
    """
    a = _check_head(a)
    u = _check_unit(u)
    x = SliceSeries.identity()
    geometric = slice_reciprocal(SliceSeries.from_real([1.0, -a]), order)
    shifted = slice_product(x, geometric, out_order=order)
    moebius = SliceSeries.from_real([a]) - (1.0 - a * a) * shifted
    unit_factor = SliceSeries(u.coords[None, :])
    series = slice_product(moebius, unit_factor, out_order=order)
    return series.with_tail((1.0 - a * a) * a**order)


def make_halfspace_extremal(a, u=ONE, order=DEFAULT_ORDER):
    """The half-space extremal family: head a, constant tail -2 (1 - a) u.

    For u = 1 its values have real part strictly below 1; the coefficient
    bound |a_k| <= 2 (1 - a_0) holds with equality for every k >= 1.
    """
    a = _check_head(a)
    u = _check_unit(u)
    arr = np.zeros((order + 1, 8))
    arr[0, 0] = a
    arr[1:] = -2.0 * (1.0 - a) * u.coords[None, :]
    return SliceSeries(arr, tail_coef=2.0 * (1.0 - a))


def _random_unit8(rng):
    while True:
        v = rng.standard_normal(8)
        scale = np.linalg.norm(v)
        if scale > 1e-8:
            return Octonion(v / scale)


def _right_multiply(series, u):
    from ._kernels import ACTIVE as _K

    rows = series.coeffs
    urows = np.repeat(u.coords[None, :], rows.shape[0], axis=0)
    return SliceSeries(_K.mul_batch(rows, urows), series.tail_coef)


def random_unit_ball_function(seed, order=DEFAULT_ORDER):
    """Draw one certified unit-ball corpus entry from a 64-bit seed."""
    rng = np.random.default_rng(seed)
    kind = int(rng.integers(0, 4))
    if kind == 0:
        a = float(rng.uniform(0.1, 0.95))
        u = _random_unit8(rng)
        series = _right_multiply(make_disk_extremal(a, ONE, order), u)
        prov = {"kind": "moebius-unit", "seed": int(seed), "a": a}
    elif kind == 1:
        a1 = float(rng.uniform(0.1, 0.9))
        a2 = float(rng.uniform(0.1, 0.9))
        u = _random_unit8(rng)
        f1 = _moebius(a1, order)
        f2 = _moebius(a2, order)
        series = _right_multiply(slice_product(f1, f2, out_order=order), u)
        rho = max(a1, a2)
        series = series.with_tail((order + 2.0) * rho ** (order - 1))
        prov = {"kind": "moebius-product", "seed": int(seed), "a1": a1, "a2": a2}
    elif kind == 2:
        degree = int(rng.integers(4, 25))
        raw = rng.standard_normal((degree + 1, 8))
        raw *= 0.7 ** np.arange(degree + 1)[:, None]
        series = SliceSeries(raw)
        top = sup_norm_estimate(series, 0.99, n_units=8, n_angles=32,
                                seed=int(seed) % (2**31))
        series = series * (0.95 / max(top, 1e-6))
        while not fn.coefficient_bounds_ok(series, "unit-ball", tol=1e-9)[0]:
            series = series * 0.93
        prov = {"kind": "scaled-poly", "seed": int(seed), "degree": degree}
    else:
        direction = _random_unit8(rng)
        radius = float(rng.uniform(0.05, 0.9))
        series = SliceSeries((radius * direction.coords)[None, :])
        prov = {"kind": "constant", "seed": int(seed), "norm": radius}
    return CorpusEntry(series=series, certificate="unit-ball", provenance=prov)


def _moebius(a, order):
    """Real-coefficient Moebius self-map with head a (the u = 1 extremal)."""
    return make_disk_extremal(a, ONE, order).with_tail(0.0)


def random_halfspace_function(seed, count=None, order=DEFAULT_ORDER):
    """Draw one certified half-space corpus entry from a 64-bit seed.

    Entries are mixtures f = 1 - (1 - a) g with g a convex combination of
    ``count`` boundary atoms (1 + x t)(1 - x t)^{-1}, t in [-1, 1]; the atom
    t = 1 recovers the extremal family.
    """
    rng = np.random.default_rng(seed)
    if count is None:
        count = int(rng.integers(1, 5))
    if count < 1:
        raise ValueError("count must be at least 1")
    a = float(rng.uniform(0.0, 0.98))
    pure = bool(rng.integers(0, 2))
    if pure:
        atoms = np.ones(1)
        weights = np.ones(1)
        count = 1
    else:
        atoms = rng.uniform(-1.0, 1.0, size=count)
        weights = rng.uniform(0.05, 1.0, size=count)
        weights = weights / weights.sum()
    arr = np.zeros((order + 1, 8))
    arr[0, 0] = a
    powers = atoms[None, :] ** np.arange(1, order + 1)[:, None]
    arr[1:, 0] = -2.0 * (1.0 - a) * (powers @ weights)
    tail = 2.0 * (1.0 - a) * float(
        (np.abs(atoms) ** (order + 1)) @ weights
    )
    series = SliceSeries(arr, tail_coef=tail)
    prov = {
        "kind": "boundary-mixture",
        "seed": int(seed),
        "a": a,
        "atoms": [float(t) for t in atoms],
        "weights": [float(w) for w in weights],
    }
    return CorpusEntry(series=series, certificate="halfspace", provenance=prov)


def entry_seed(master_seed, index):
    """Counter-based per-entry seed derived from one 64-bit master seed."""
    return (int(master_seed) * 1_000_003 + int(index)) % (2**63)


def build_corpus(kind, size, seed, order=DEFAULT_ORDER):
    """Generate a corpus of ``size`` entries of the given kind."""
    if size < 1:
        raise ValueError("corpus size must be at least 1")
    entries = []
    for index in range(size):
        child = entry_seed(seed, index)
        if kind == "unit-ball":
            entry = random_unit_ball_function(child, order)
        elif kind == "halfspace":
            entry = random_halfspace_function(child, order=order)
        else:
            raise ValueError("kind must be 'unit-ball' or 'halfspace'")
        prov = dict(entry.provenance)
        prov["index"] = index
        entries.append(CorpusEntry(entry.series, entry.certificate, prov))
    return entries


def certify_unit_ball(series, tol=1e-9):
    """Certify the self-map coefficient bound plus a sampled sup check.

    The sampled values come from the truncated series, so the comparison
    allows the tail majorant at the sampling radius: a truncation of a
    genuine ball self-map can exceed 1 by at most that much.
    """
    ok_bound, worst = fn.coefficient_bounds_ok(series, "unit-ball", tol)
    sample_r = 0.995
    top = sup_norm_estimate(series, sample_r, n_units=9, n_angles=24)
    allow = 1.0 + tol + series.tail_majorant(sample_r)
    details = {"worst_margin": worst, "sampled_sup": top}
    return ok_bound and top <= allow, details


def certify_halfspace(series, tol=1e-9):
    """Certify real head in [0, 1), the coefficient bound, and sampled Re < 1.

    The real-part samples come from the truncated series; discarding the
    tail of a genuine half-space member can push them above 1 by at most
    the tail majorant at the sampling radius, so that slack is allowed.
    """
    head = series.coeffs[0]
    real_ok = float(np.linalg.norm(head[1:])) <= tol and 0.0 <= head[0] < 1.0
    ok_bound, worst = fn.coefficient_bounds_ok(series, "halfspace", tol)
    from .series import evaluate_on_slice
    from .octonion import I as UNIT_I, J as UNIT_J

    sample_r = 0.95
    theta = np.linspace(0.0, 2.0 * np.pi, 32, endpoint=False)
    top = -np.inf
    for unit in (UNIT_I, UNIT_J):
        vals = evaluate_on_slice(
            series, sample_r * np.cos(theta), sample_r * np.sin(theta), unit
        )
        top = max(top, float(vals[:, 0].max()))
    allow = 1.0 + tol + series.tail_majorant(sample_r)
    details = {"worst_margin": worst, "sampled_re_max": top}
    return real_ok and ok_bound and top < allow, details


def corpus_to_json(entries, kind=None, seed=None):
    """Serialize a corpus to a JSON-ready document (lossless floats)."""
    doc = {"schema": 1, "entries": []}
    if kind is not None:
        doc["kind"] = kind
    if seed is not None:
        doc["seed"] = int(seed)
    for entry in entries:
        doc["entries"].append(
            {
                "certificate": entry.certificate,
                "provenance": entry.provenance,
                "tail_coef": entry.series.tail_coef,
                "coefficients": [list(map(float, row)) for row in entry.series.coeffs],
            }
        )
    return doc


def corpus_from_json(doc):
    """Rebuild corpus entries from a document made by corpus_to_json."""
    if doc.get("schema") != 1:
        raise ValueError("unsupported corpus schema")
    entries = []
    for raw in doc["entries"]:
        series = SliceSeries(
            np.asarray(raw["coefficients"], dtype=np.float64),
            tail_coef=float(raw["tail_coef"]),
        )
        entries.append(
            CorpusEntry(
                series=series,
                certificate=str(raw["certificate"]),
                provenance=dict(raw["provenance"]),
            )
        )
    return entries


def save_corpus(path, entries, kind=None, seed=None):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(corpus_to_json(entries, kind, seed), handle,
                  sort_keys=True, indent=2)
        handle.write("\n")


def load_corpus(path):
    with open(path, "r", encoding="utf-8") as handle:
        return corpus_from_json(json.load(handle))


def sharpness_probe(theorem_id, r, a=None, u=ONE, params=None, order=DEFAULT_ORDER):
    """Evaluate the extremal family for a theorem just beyond its radius.

    Returns the functional value divided by its claimed bound; a return
    above 1 witnesses that the inequality fails at r.  Raises when r does
    not exceed the radius of validity for the given parameters.
    """
    if theorem_id not in REGISTRY:
        raise ValueError("unknown theorem id %r" % theorem_id)
    info = REGISTRY[theorem_id]
    params = params or fn.BohrParams()
    if a is None:
        a = info.probe_default_a
    head = info.probe_head_map(float(a))
    head = _check_head(head)
    # The probe may exercise parameters outside a theorem's hypotheses (that
    # is the point of showing failure beyond the radius), so the radius is
    # taken without the verification-side parameter validation.
    radius = info.radius(params, head).value
    if r <= radius:
        raise ValueError("probe misuse: r inside the verified region")
    if not r < 1.0:
        raise ValueError("probe requires r < 1")
    if info.corpus_kind == "unit-ball":
        series = make_disk_extremal(head, u, order)
    else:
        series = make_halfspace_extremal(head, u, order)
    if theorem_id == "thm14":
        return fn.bohr_sum(series, r, params.m).value
    if theorem_id == "bs12":
        point = Octonion.from_real(r)
        return fn.bohr_sum_with_deviation(
            series, point, params.m, params.lam, params.q
        ).value
    if theorem_id == "thm15":
        return fn.bohr_sum_with_quadratic(series, r, params.m).value
    if theorem_id == "bs13":
        return fn.bohr_sum_with_energy_poly(series, r, params.m, params.d).value
    if theorem_id == "th15":
        point = Octonion.from_real(r)
        return fn.bohr_sum_with_deviation(
            series, point, params.m, params.lam, params.j
        ).value
    if theorem_id == "thm17":
        return fn.halfspace_sum_with_quadratic(series, r).value
    if theorem_id == "theom17":
        return fn.halfspace_sum_with_energy(series, r, params.beta).value
    if theorem_id == "thmF":
        return fn.tail_sum(series, r).value / fn.halfspace_distance(series)
    raise AssertionError("unreachable")
