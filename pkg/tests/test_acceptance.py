"""Acceptance checks: one test per shipping criterion, one summary line each.

Each test prints ``criterion N: PASS/FAIL (label)`` so a plain test run
doubles as the acceptance checklist.  Thresholds follow the library's
documented tolerances; nothing here is tuned to make a failing property
look green.
"""

import math
import os
import subprocess
import sys
from contextlib import contextmanager

import numpy as np
import pytest

from _helpers import companion_sample_points, reciprocal_residual
from octobohr._kernels import ACTIVE
from octobohr.corpus import (
    make_disk_extremal,
    make_disk_extremal_via_ops,
    make_halfspace_extremal,
    sharpness_probe,
)
from octobohr.functionals import BohrParams, coefficient_bounds_ok, power_ratio
from octobohr.octonion import I, J, K, L, ONE, Octonion, associator, random_imaginary_unit
from octobohr.radii import (
    bohr_radius,
    deviation_radius,
    distance_tail_radius,
    halfspace_deviation_radius,
    halfspace_energy_radius,
    halfspace_quadratic_radius,
    sharpness_poly,
)
from octobohr.series import normal
from octobohr.theorems import REGISTRY
from octobohr.verify import run_verification


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print("criterion %d: FAIL (%s)" % (number, label))
        raise
    print("criterion %d: PASS (%s)" % (number, label))


def test_criterion_1_closed_form_radii():
    with criterion(1, "closed-form radii are exact"):
        assert bohr_radius(1.0).value == 1.0 / 3.0
        assert bohr_radius(2.0).value == 0.5
        assert bohr_radius(0.5).value == 0.2
        for m in (0.1, 0.7, 1.3, 2.0):
            assert bohr_radius(m).value == m / (2.0 + m)
        assert deviation_radius(1.0, 1.0, 2.0).value == pytest.approx(
            2.0 - math.sqrt(3.0), abs=1e-12
        )
        assert halfspace_deviation_radius(1.0, 1.0, 2.0).value == pytest.approx(
            math.sqrt(5.0) - 2.0, abs=1e-12
        )
        assert halfspace_energy_radius(0.0).value == 0.2
        assert halfspace_energy_radius(0.5).value == 0.25
        assert distance_tail_radius().value == 1.0 / 3.0


def test_criterion_2_quadratic_refinement_radius_root():
    with criterion(2, "half-space quadratic radius solves its cubic"):
        result = halfspace_quadratic_radius()
        r = result.value
        assert r == pytest.approx(0.24683, abs=5e-6)
        assert abs(3.0 * r**3 - 5.0 * r**2 - 3.0 * r + 1.0) <= 1e-12
        assert result.residual <= 1e-12


CASE_MATRIX = (
    ("thm14", BohrParams(m=0.25)),
    ("thm14", BohrParams(m=0.5)),
    ("thm14", BohrParams(m=1.0)),
    ("thm14", BohrParams(m=1.5)),
    ("thm14", BohrParams(m=2.0)),
    ("bs12", BohrParams(m=0.5)),
    ("bs12", BohrParams(m=1.0)),
    ("bs12", BohrParams(m=2.0)),
    ("bs12", BohrParams(m=1.0, lam=0.5, q=1.0)),
    ("bs12", BohrParams(m=1.0, lam=1.0, q=2.0)),
    ("bs12", BohrParams(m=0.5, lam=1.0, q=2.0)),
    ("bs12", BohrParams(m=2.0, lam=1.0, q=1.5)),
    ("thm15", BohrParams(m=0.25)),
    ("thm15", BohrParams(m=0.5)),
    ("thm15", BohrParams(m=1.0)),
    ("bs13", BohrParams(m=1.0, d=(0.8,))),
    ("bs13", BohrParams(m=1.0, d=(0.5, 0.3))),
    ("bs13", BohrParams(m=0.5, d=(0.2,))),
    ("th15", BohrParams(m=1.0)),
    ("th15", BohrParams(m=1.0, lam=1.0, j=2.0)),
    ("th15", BohrParams(m=0.5, lam=1.0, j=1.0)),
    ("thm17", BohrParams()),
    ("theom17", BohrParams(beta=8.0 / 9.0)),
    ("thmF", BohrParams()),
)


def test_criterion_3_inequalities_hold_below_their_radii(unit_corpus, half_corpus):
    with criterion(3, "all inequalities verified on 100-entry corpora"):
        for token, params in CASE_MATRIX:
            entries = (
                unit_corpus
                if REGISTRY[token].corpus_kind == "unit-ball"
                else half_corpus
            )
            report = run_verification(
                token,
                params,
                corpus_entries=entries,
                grid_points=64,
                tol=1e-9,
            )
            assert report.violations == [], (token, params, report.margin)
            assert report.margin >= -1e-9


PROBE_MATRIX = (
    ("thm14", BohrParams(m=1.0), 0.999),
    ("bs12", BohrParams(m=1.0), 0.999),
    ("thm15", BohrParams(m=1.0), 0.999),
    ("bs13", BohrParams(m=1.0, d=(0.8,)), 0.999),
    ("th15", BohrParams(m=1.0), 0.999),
    ("thm17", BohrParams(), 0.999),
    ("theom17", BohrParams(beta=0.9), 0.999999),
    ("thmF", BohrParams(), 0.999),
)


def test_criterion_4_sharpness_probes_exceed_one_beyond_the_radius():
    with criterion(4, "extremal probes exceed 1 just past each radius"):
        for token, params, a in PROBE_MATRIX:
            info = REGISTRY[token]
            head = info.probe_head_map(a)
            r = info.radius(params, head).value + 0.01
            value = sharpness_probe(token, r, a=a, params=params)
            assert value > 1.0, (token, value)


def test_criterion_5_sharpness_polynomial_identities():
    with criterion(5, "energy sharpness polynomial behaves as claimed"):
        for beta in np.linspace(0.0, 1.0, 11):
            assert sharpness_poly(1.0, beta) == 0.0
            assert sharpness_poly(0.0, beta) == -42.0 + 25.0 * beta
        h = 1e-6
        for beta in (0.0, 0.5, 8.0 / 9.0, 0.9):
            slope = (sharpness_poly(1.0, beta) - sharpness_poly(1.0 - h, beta)) / h
            assert slope == pytest.approx(16.0 - 18.0 * beta, abs=1e-4)
        grid = np.linspace(0.0, 1.0, 10001)
        values = np.array([sharpness_poly(t, 8.0 / 9.0) for t in grid])
        assert values.max() <= 1e-12
        assert sharpness_poly(0.999999, 0.9) > 0.0


def test_criterion_6_octonion_algebra_laws():
    with criterion(6, "octonion product is normed, alternative, nonassociative"):
        assert I * J == K
        assert L * L == Octonion.from_real(-1.0)
        assert associator(I, J, L).norm() > 1.0

        rng = np.random.default_rng(2024)
        xs = rng.standard_normal((10000, 8))
        ys = rng.standard_normal((10000, 8))
        prods = ACTIVE.mul_batch(xs, ys)
        nx = np.linalg.norm(xs, axis=1)
        ny = np.linalg.norm(ys, axis=1)
        gap = np.abs(np.linalg.norm(prods, axis=1) - nx * ny)
        assert gap.max() <= 1e-12 * (1.0 + (nx * ny).max())

        for _ in range(300):
            x = Octonion(rng.standard_normal(8))
            y = Octonion(rng.standard_normal(8))
            scale = 1e-12 * (1.0 + x.norm() ** 2 * y.norm())
            assert (x * (x * y) - (x * x) * y).norm() <= scale
            assert ((y * x) * x - y * (x * x)).norm() <= scale


def test_criterion_7_series_calculus_on_corpus_entries(unit_corpus):
    with criterion(7, "product, normal, reciprocal, companion identities"):
        for entry in unit_corpus[:20]:
            f = entry.series.truncated(120)
            n = normal(f)
            dust = np.abs(n.coeffs[:, 1:]).max()
            assert dust <= 1e-12 * (1.0 + float((f.abs_coeffs() ** 2).sum()))

        checked = 0
        for entry in unit_corpus:
            if entry.series.abs_coeffs()[0] < 0.1:
                continue
            assert reciprocal_residual(entry.series) <= 1e-9
            checked += 1
            if checked == 10:
                break
        assert checked == 10

        rng = np.random.default_rng(77)
        for a in (0.2, 0.5, 0.9):
            for u in (ONE, I, random_imaginary_unit(rng)):
                direct = make_disk_extremal(a, u, order=120)
                via = make_disk_extremal_via_ops(a, u, order=120)
                gap = np.linalg.norm(direct.coeffs - via.coeffs, axis=1).max()
                assert gap <= 1e-10

        from octobohr.series import companion_identity_residual

        tested = 0
        for entry in unit_corpus:
            mags = entry.series.abs_coeffs()
            if entry.provenance["kind"] == "constant":
                continue
            if mags[0] < 0.25 or mags[1] < 0.05:
                continue
            for x in companion_sample_points(entry.series, rng, 20):
                assert companion_identity_residual(entry.series, x, 24) <= 1e-9
            tested += 1
            if tested == 10:
                break
        assert tested == 10


def test_criterion_8_coefficient_bounds_hold_with_equality_cases(
    unit_corpus, half_corpus
):
    with criterion(8, "self-map coefficient bounds across both corpora"):
        for entry in unit_corpus:
            ok, worst = coefficient_bounds_ok(entry.series, "unit-ball")
            assert ok, entry.provenance
            assert worst >= -1e-12
        for entry in half_corpus:
            ok, worst = coefficient_bounds_ok(entry.series, "halfspace")
            assert ok, entry.provenance

        a = 0.4
        f = make_disk_extremal(a, order=60)
        cap = 1.0 - a * a
        assert abs(f.abs_coeffs()[1] - cap) <= 1e-15
        g = make_halfspace_extremal(a, order=60)
        assert np.abs(g.abs_coeffs()[1:] - 2.0 * (1.0 - a)).max() <= 1e-15


def test_criterion_9_power_ratio_lower_bounds():
    with criterion(9, "head-power ratio lower bounds on (0, 1]"):
        t = np.linspace(1e-6, 1.0, 100)
        for m in np.linspace(0.02, 2.0, 100):
            assert power_ratio(t, m).min() >= m / 2.0 - 1e-12
        for m in np.linspace(0.01, 1.0, 100):
            assert power_ratio(t, m).min() >= m - 1e-12


def test_criterion_10_cli_rejects_inadmissible_weights():
    with criterion(10, "CLI reports inadmissible energy weights, exit 3"):
        env = dict(os.environ)
        env["OCTOBOHR_BACKEND"] = "numpy"
        proc = subprocess.run(
            [
                sys.executable, "-m", "octobohr", "verify",
                "--theorem", "bs13", "--d", "1.0",
                "--corpus", "4", "--grid", "8", "--order", "40",
            ],
            capture_output=True,
            text=True,
            env=env,
            timeout=300,
        )
        assert proc.returncode == 3
        assert "1.125" in proc.stderr
