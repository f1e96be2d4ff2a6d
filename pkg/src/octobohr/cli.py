"""Command line interface.

Subcommands:

* ``radius``: print the radius of validity for a theorem token.
* ``verify``: check the inequality over a generated (or loaded) corpus on
  an r-grid up to the radius and write a JSON report.
* ``sharpness``: evaluate the extremal-family probe just beyond the radius;
  values above 1 witness failure there.
* ``sweep``: write a CSV of the corpus maximum of the functional over an
  r-grid extending beyond the radius, for plotting.

Exit codes: 0 success; 1 verification found violations or a probe failed to
exceed its bound; 2 invalid parameters (including a probe radius inside the
verified region); 3 inadmissible energy-polynomial weights; 4 I/O failure.
"""

import argparse
import json
import sys

import numpy as np

from .corpus import (
    CorpusEntry,
    build_corpus,
    load_corpus,
    make_disk_extremal,
    make_halfspace_extremal,
    sharpness_probe,
)
from .functionals import BohrParams
from .octonion import ONE
from .theorems import REGISTRY, TOKENS, WeightsInadmissibleError, theorem_radius
from .verify import run_verification, sweep_values

__all__ = ["main", "build_parser"]


def _parse_d(text):
    text = (text or "").strip()
    if not text:
        return ()
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ValueError("--d expects a comma-separated list of numbers")


def _params_from(args):
    return BohrParams(
        m=args.m,
        lam=args.lam,
        q=args.q,
        j=args.j,
        d=_parse_d(args.d),
        beta=args.beta,
    )


def _add_common(sub):
    sub.add_argument("--theorem", required=True, choices=TOKENS,
                     help="which inequality to work with")
    sub.add_argument("--m", type=float, default=1.0,
                     help="head exponent (default 1)")
    sub.add_argument("--lambda", dest="lam", type=float, default=0.0,
                     help="deviation weight (default 0)")
    sub.add_argument("--q", type=float, default=1.0,
                     help="deviation exponent, unit-ball side (default 1)")
    sub.add_argument("--j", type=float, default=1.0,
                     help="deviation exponent, half-space side (default 1)")
    sub.add_argument("--d", type=str, default="",
                     help="energy-polynomial weights, comma separated")
    sub.add_argument("--beta", type=float, default=0.0,
                     help="energy weight, half-space side (default 0)")
    sub.add_argument("--a0", type=float, default=None,
                     help="head parameter (per-head radius, probe and sweep"
                          " families)")
    sub.add_argument("--tol", type=float, default=1e-9,
                     help="violation tolerance (default 1e-9)")
    sub.add_argument("--out", type=str, default=None,
                     help="write the JSON report / CSV here")


def _add_corpus_flags(sub):
    sub.add_argument("--corpus", type=int, default=100,
                     help="number of generated corpus entries (default 100)")
    sub.add_argument("--corpus-file", type=str, default=None,
                     help="load the corpus from this JSON file instead")
    sub.add_argument("--seed", type=int, default=7,
                     help="master corpus seed (default 7)")
    sub.add_argument("--grid", type=int, default=64,
                     help="number of r-grid points (default 64)")
    sub.add_argument("--order", type=int, default=300,
                     help="series truncation order (default 300)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="octobohr",
        description="Bohr-type coefficient inequalities for octonion slice "
                    "power series: radii, corpus verification, sharpness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_radius = sub.add_parser("radius", help="print a radius of validity")
    _add_common(p_radius)
    p_radius.set_defaults(func=_cmd_radius)

    p_verify = sub.add_parser("verify", help="verify an inequality on a corpus")
    _add_common(p_verify)
    _add_corpus_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_sharp = sub.add_parser("sharpness", help="probe beyond the radius")
    _add_common(p_sharp)
    p_sharp.add_argument("--r", type=float, default=None,
                         help="probe point (default radius + 0.01)")
    p_sharp.add_argument("--order", type=int, default=300,
                         help="series truncation order (default 300)")
    p_sharp.set_defaults(func=_cmd_sharpness)

    p_sweep = sub.add_parser("sweep", help="CSV of the functional over r")
    _add_common(p_sweep)
    _add_corpus_flags(p_sweep)
    p_sweep.add_argument("--r-max", type=float, default=None,
                         help="top of the sweep range (default 1.5x radius)")
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def _cmd_radius(args):
    params = _params_from(args)
    result = theorem_radius(args.theorem, params, a0=args.a0)
    print(
        "theorem %s: radius %.17g (%s, residual %.3g)"
        % (args.theorem, result.value, result.method, result.residual)
    )
    if args.out:
        doc = {
            "schema": 1,
            "theorem": args.theorem,
            "params": params.to_dict(),
            "a0": args.a0,
            "radius": result.to_dict(),
        }
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(doc, handle, sort_keys=True, indent=2)
            handle.write("\n")
    return 0


def _cmd_verify(args):
    params = _params_from(args)
    entries = None
    source = None
    if args.corpus_file:
        entries = load_corpus(args.corpus_file)
        source = args.corpus_file
    report = run_verification(
        args.theorem,
        params,
        corpus_entries=entries,
        corpus_size=args.corpus,
        corpus_seed=args.seed,
        grid_points=args.grid,
        tol=args.tol,
        order=args.order,
        corpus_source=source,
    )
    print(
        "theorem %s: radius %.12g, corpus %d, grid %d, max %.12g, "
        "margin %.3g, violations %d"
        % (
            args.theorem,
            report.radius.value,
            report.corpus["size"],
            report.grid["points"],
            report.max_value,
            report.margin,
            len(report.violations),
        )
    )
    for violation in report.violations[:10]:
        print(
            "  violation at r=%.12g value %.12g (%s)"
            % (violation["r"], violation["value"], violation["provenance"])
        )
    if args.out:
        report.save(args.out)
    return 0 if not report.violations else 1


def _cmd_sharpness(args):
    params = _params_from(args)
    info = REGISTRY[args.theorem]
    a = args.a0 if args.a0 is not None else info.probe_default_a
    head = info.probe_head_map(float(a))
    radius = info.radius(params, head).value
    r = args.r if args.r is not None else radius + 0.01
    value = sharpness_probe(args.theorem, r, a=a, params=params,
                            order=args.order)
    exceeds = value > 1.0
    print(
        "probe %s at r=%.12g (radius %.12g, a=%g): value %.12g %s 1"
        % (args.theorem, r, radius, a, value, ">" if exceeds else "<=")
    )
    if args.out:
        doc = {
            "schema": 1,
            "theorem": args.theorem,
            "params": params.to_dict(),
            "a": a,
            "r": r,
            "radius": radius,
            "value": value,
            "exceeds_bound": exceeds,
        }
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(doc, handle, sort_keys=True, indent=2)
            handle.write("\n")
    return 0 if exceeds else 1


def _cmd_sweep(args):
    params = _params_from(args)
    info = REGISTRY[args.theorem]
    info.validate(params)
    a = args.a0 if args.a0 is not None else info.probe_default_a
    head = info.probe_head_map(float(a))
    radius = info.radius(params, head).value
    r_max = args.r_max if args.r_max is not None else min(0.95, 1.5 * radius)
    r_values = np.linspace(0.0, r_max, args.grid)
    if args.corpus_file:
        entries = load_corpus(args.corpus_file)
    else:
        entries = build_corpus(info.corpus_kind, args.corpus, args.seed,
                               args.order)
    if info.corpus_kind == "unit-ball":
        extremal = make_disk_extremal(head, ONE, args.order)
    else:
        extremal = make_halfspace_extremal(head, ONE, args.order)
    entries = list(entries) + [
        CorpusEntry(extremal, info.corpus_kind,
                    {"kind": "extremal", "a": head})
    ]
    values = sweep_values(args.theorem, params, entries, r_values)
    lines = ["r,max_functional,radius_marker"]
    for r, value in zip(r_values, values):
        lines.append("%.17g,%.17g,%d" % (r, value, 1 if r <= radius else 0))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WeightsInadmissibleError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except json.JSONDecodeError as exc:
        print("error: malformed JSON input (%s)" % exc, file=sys.stderr)
        return 4
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (OSError, KeyError) as exc:
        print("error: I/O failure (%s)" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
