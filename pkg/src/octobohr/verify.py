"""Run a functional inequality over a corpus below its radius of validity.

The engine evaluates the theorem's conservative envelope (coefficient sums
plus truncation tails, normalized so the claimed bound is 1) on every
corpus entry over an r-grid from 0 up to the radius, and records any value
exceeding 1 + tolerance as a violation.  Margin is 1 minus the largest
value seen, so the report is violation-free exactly when margin >= -tol.
"""

import time
from datetime import datetime, timezone

import numpy as np

from ._kernels import active_backend_name
from .corpus import build_corpus
from .functionals import BohrParams
from .radii import halfspace_energy_radius
from .report import VerificationReport
from .theorems import REGISTRY, compute_ingredients

__all__ = ["run_verification", "sweep_values"]


def run_verification(
    theorem,
    params=None,
    corpus_entries=None,
    corpus_size=100,
    corpus_seed=7,
    grid_points=64,
    tol=1e-9,
    order=300,
    corpus_source=None,
):
    """Verify one inequality over a corpus; returns a VerificationReport."""
    start = time.perf_counter()
    if theorem not in REGISTRY:
        raise ValueError("unknown theorem id %r" % theorem)
    info = REGISTRY[theorem]
    params = params or BohrParams()
    info.validate(params)
    if grid_points < 2:
        raise ValueError("grid must have at least 2 points")
    if corpus_entries is None:
        corpus_entries = build_corpus(
            info.corpus_kind, corpus_size, corpus_seed, order
        )
        corpus_doc = {
            "kind": info.corpus_kind,
            "size": corpus_size,
            "seed": corpus_seed,
            "order": order,
            "source": "generated",
        }
    else:
        corpus_entries = list(corpus_entries)
        corpus_doc = {
            "kind": info.corpus_kind,
            "size": len(corpus_entries),
            "seed": None,
            "order": order,
            "source": corpus_source or "supplied",
        }

    radius = info.radius(params, None)
    if info.per_entry_radius:
        fractions = np.linspace(0.0, 1.0, grid_points)
        grid_doc = {
            "points": grid_points,
            "mode": "fractions-of-entry-radius",
            "values": [float(v) for v in fractions],
        }
    else:
        r_values = np.linspace(0.0, radius.value, grid_points)
        grid_doc = {
            "points": grid_points,
            "mode": "absolute",
            "values": [float(v) for v in r_values],
        }

    max_value = -np.inf
    violations = []
    for entry in corpus_entries:
        if entry.certificate != info.corpus_kind:
            raise ValueError(
                "corpus entry certificate %r does not match theorem family %r"
                % (entry.certificate, info.corpus_kind)
            )
        if info.per_entry_radius:
            head = float(entry.series.coeffs[0][0])
            r = fractions * halfspace_energy_radius(head).value
        else:
            r = r_values
        ing = compute_ingredients(entry.series, r)
        values = info.envelope(ing, params)
        top = float(values.max())
        max_value = max(max_value, top)
        over = np.nonzero(values > 1.0 + tol)[0]
        for idx in over:
            violations.append(
                {
                    "provenance": dict(entry.provenance),
                    "r": float(r[idx]),
                    "value": float(values[idx]),
                }
            )

    return VerificationReport(
        theorem=theorem,
        description=info.description,
        params=params.to_dict(),
        radius=radius,
        grid=grid_doc,
        corpus=corpus_doc,
        tolerance=tol,
        backend=active_backend_name(),
        max_value=max_value,
        margin=1.0 - max_value,
        violations=violations,
        runtime_s=time.perf_counter() - start,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )


def sweep_values(theorem, params, entries, r_values):
    """Max of the theorem's envelope over the entries at each r; the grid
    may extend beyond the radius (every r must stay below 1)."""
    info = REGISTRY[theorem]
    r_values = np.asarray(r_values, dtype=np.float64)
    if r_values.size == 0 or r_values.min() < 0.0 or r_values.max() >= 1.0:
        raise ValueError("sweep grid must lie inside [0, 1)")
    best = np.full(r_values.shape, -np.inf)
    for entry in entries:
        ing = compute_ingredients(entry.series, r_values)
        np.maximum(best, info.envelope(ing, params), out=best)
    return best
