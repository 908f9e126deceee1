"""Command line interface.

Tables go to stdout, diagnostics to stderr. On failure a single line
``error: <code>: <message>`` is written to stderr and the exit status is 1
(2 for usage errors).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import __version__
from .errors import DomainError, UniqRecallError
from .evolution import core_invariance_report
from .families import (
    FAMILY_NAMES,
    FrequencyPowerLaw,
    LayerPowerLaw,
    ZipfRank,
    family_from_name,
    materialize,
    recall_closed_form,
    tail_mass,
)
from .fit import fit_exponent
from .io import ingest
from .recall import unique_recall_asymptotic, unique_recall_exact
from .spectra import FrequencySpectrum, eta_from_alpha, rho_from_alpha
from .tables import emit_table, header, rows
from .urn import simulate


def _open(path):
    if path in (None, "-"):
        return contextlib.nullcontext(sys.stdin)
    return open(path, encoding="utf-8")


def _load(args):
    with _open(args.infile) as fh:
        return ingest(fh, args.fmt)


def _spectrum_source(args):
    """Spectrum from --in, --family/--param/--k-max, or --uniform."""
    if getattr(args, "family", None):
        if args.param is None:
            raise DomainError("--family needs --param")
        fam = family_from_name(args.family, args.param)
        print(f"# tail mass folded into k_max={args.k_max}: {tail_mass(fam, args.k_max):.6g}", file=sys.stderr)
        return materialize(fam, args.k_max), f"{args.family}:{args.param:g}:k_max={args.k_max}"
    if getattr(args, "uniform", None):
        return FrequencySpectrum.uniform(args.uniform), f"uniform:{args.uniform}"
    data = _load(args)
    return data.spectrum, args.infile or "-"


def _effective_draw(r, a):
    b = int(round(r * a))
    print(f"# b = round({r:g} * {a}) = {b}; effective r = {b / a:.6g}", file=sys.stderr)
    return b


def _write(lines):
    sys.stdout.writelines(lines)


def cmd_convert(args):
    data = _load(args)
    spec = data.spectrum
    a_u = args.a_u or data.a_u
    if args.to == "alpha":
        alpha = spec.dense()
        _write([header(["k", "alpha"], a_u=a_u, a=data.a)] + rows(range(1, alpha.size + 1), alpha))
    elif args.to == "eta":
        eta = eta_from_alpha(spec).layers
        _write([header(["k", "eta"], a_u=a_u, a=data.a)] + rows(range(1, eta.size + 1), eta))
    elif args.to == "rho":
        profile = rho_from_alpha(spec, a_u)
        ranks = profile.ranks
        _write([header(["rank", "rho"], a_u=profile.a_u, a=profile.a)] + rows(range(1, ranks.size + 1), ranks))
    else:
        profile = rho_from_alpha(spec, a_u)
        hist = {}
        for k in profile.ranks.tolist():
            hist[k] = hist.get(k, 0) + 1
        ks = sorted(hist)
        _write([header(["k", "count"], a_u=profile.a_u, a=profile.a)] + rows(ks, [hist[k] for k in ks]))


def cmd_recall(args):
    if args.family:
        if args.param is None:
            raise DomainError("--family needs --param")
        est = recall_closed_form(family_from_name(args.family, args.param), args.r)
        record = {"r": args.r, "unique_recall": est.value, "kind": "closed-form",
                  "family": args.family, "param": args.param}
        cols = ["r", "unique_recall"]
        vals = [args.r, est.value]
    elif args.exact:
        data = _load(args)
        b = _effective_draw(args.r, data.a)
        est = unique_recall_exact(data.profile(), b)
        record = {"r": b / data.a, "b": b, "unique_recall": est.value,
                  "b_u_expected": est.b_u_expected, "kind": "exact"}
        cols = ["r", "b", "unique_recall", "b_u_expected"]
        vals = [b / data.a, b, est.value, est.b_u_expected]
    else:
        data = _load(args)
        est = unique_recall_asymptotic(data.spectrum, args.r)
        record = {"r": args.r, "unique_recall": est.value, "kind": "asymptotic",
                  "a_u_times_recall": data.a_u * est.value}
        cols = ["r", "unique_recall"]
        vals = [args.r, est.value]
    if args.json:
        print(json.dumps(record))
    else:
        _write([header(cols, kind=record["kind"])] + rows(*[[v] for v in vals]))


def cmd_evolve(args):
    spec, source = _spectrum_source(args)
    _write(emit_table("evolution", spec, r=args.r, source=source))


def cmd_krecall(args):
    spec, source = _spectrum_source(args)
    _write(emit_table("krecall", spec, r=args.r, gamma=args.gamma, k_limit=args.k_limit, source=source))
    if args.gamma is not None and 0 < args.r < 1:
        report = core_invariance_report(spec, args.r, args.gamma, args.band_tol)
        band = "none" if report.band is None else f"[{report.band[0]}, {report.band[1]}]"
        print(f"# core band (ratio within 1 +- {args.band_tol:g}): {band}", file=sys.stderr)


def cmd_simulate(args):
    data = _load(args)
    b = _effective_draw(args.r, data.a)
    stats = simulate(data.profile(), b, args.trials, args.seed, workers=args.workers)
    if args.json:
        print(json.dumps({
            "trials": stats.trials, "master_seed": stats.master_seed, "b": b,
            "r": b / data.a, "mean_r_u": stats.mean_r_u, **stats.percentiles,
            "predicted_r_u": unique_recall_asymptotic(data.spectrum, b / data.a).value,
            "mean_omega": stats.mean_omega.tolist(),
        }))
        return
    if args.layers:
        k = range(1, stats.mean_omega.size + 1)
        _write([header(["k", "mean_delta", "mean_omega"], trials=args.trials, seed=args.seed, b=b)]
               + rows(k, stats.mean_delta[1:], stats.mean_omega))
        return
    names = ["mean_r_u", "p5", "p50", "p95", "halfwidth90", "predicted_r_u"]
    values = [stats.mean_r_u, *stats.percentiles.values(), stats.halfwidth90,
              unique_recall_asymptotic(data.spectrum, b / data.a).value]
    _write([header(["stat", "value"], trials=args.trials, seed=args.seed, b=b)] + rows(names, values))


def cmd_fit(args):
    data = _load(args)
    target = data.spectrum if args.on == "alpha" else eta_from_alpha(data.spectrum)
    res = fit_exponent(target, (args.k_lo, args.k_hi))
    names = [res.label, "residual", "quality", "points"]
    values = [res.exponent, res.residual, res.quality, res.points]
    for key in ("gamma", "beta", "delta"):
        if key != res.label and key in res.equivalents:
            names.append(key)
            values.append(res.equivalents[key])
    _write([header(["name", "value"], k_lo=args.k_lo, k_hi=args.k_hi, on=args.on)] + rows(names, values))


def cmd_rule_of_thumb(args):
    fams = [("zipf", ZipfRank(1.0)), ("alpha", FrequencyPowerLaw(2.0)), ("eta", LayerPowerLaw(1.0))]
    names, params, values = [], [], []
    for name, fam in fams:
        names.append(name)
        params.append(f"{fam.label}={fam.param:g}")
        values.append(recall_closed_form(fam, args.r).value)
    _write([header(["family", "param", "unique_recall"], r=args.r)] + rows(names, params, values))


def cmd_plot_data(args):
    spec, source = _spectrum_source(args)
    grid = None
    if args.r_grid:
        grid = [float(x) for x in args.r_grid.split(",")]
    _write(emit_table(args.kind, spec, r=args.r, r_grid=grid, gamma=args.gamma,
                      k_limit=args.k_limit, source=source))


def _add_input(p):
    p.add_argument("--in", dest="infile", default=None,
                   help="input file (default: standard input)")
    p.add_argument("--from", dest="fmt", choices=["histogram", "raw"], default="histogram",
                   help="input layout (default: histogram)")


def _add_family_source(p):
    p.add_argument("--family", choices=sorted(FAMILY_NAMES))
    p.add_argument("--param", type=float)
    p.add_argument("--k-max", type=int, default=10**4)
    p.add_argument("--uniform", type=int, metavar="RHO", help="uniform redundancy RHO")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uniqrecall", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert counts to alpha, eta, rho or histogram")
    _add_input(p)
    p.add_argument("--to", choices=["alpha", "eta", "rho", "histogram"], required=True)
    p.add_argument("--a-u", type=int, help="rebuild rho for this many distinct items")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("recall", help="expected unique recall")
    _add_input(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--exact", action="store_true", help="finite-urn expectation")
    p.add_argument("--family", choices=sorted(FAMILY_NAMES))
    p.add_argument("--param", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recall)

    p = sub.add_parser("evolve", help="expected sample spectrum (delta, omega)")
    _add_input(p)
    _add_family_source(p)
    p.add_argument("--r", type=float, required=True)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("krecall", help="k-recall curve")
    _add_input(p)
    _add_family_source(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--gamma", type=float)
    p.add_argument("--band-tol", type=float, default=0.1)
    p.add_argument("--k-limit", type=int)
    p.set_defaults(func=cmd_krecall)

    p = sub.add_parser("simulate", help="Monte Carlo urn sampling")
    _add_input(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--layers", action="store_true", help="emit per-layer means")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("fit", help="least-squares power-law exponent")
    _add_input(p)
    p.add_argument("--k-lo", type=int, required=True)
    p.add_argument("--k-hi", type=int, required=True)
    p.add_argument("--on", choices=["eta", "alpha"], default="eta")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("rule-of-thumb", help="unique recall of the three Zipf-equivalent families")
    p.add_argument("--r", type=float, default=0.2)
    p.set_defaults(func=cmd_rule_of_thumb)

    p = sub.add_parser("plot-data", help="tables behind recall, k-recall, log-log and evolution plots")
    p.add_argument("--kind", choices=["recall-curve", "krecall", "loglog", "evolution"], required=True)
    _add_input(p)
    _add_family_source(p)
    p.add_argument("--r", type=float)
    p.add_argument("--r-grid", help="comma-separated recall values")
    p.add_argument("--gamma", type=float)
    p.add_argument("--k-limit", type=int)
    p.set_defaults(func=cmd_plot_data)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except UniqRecallError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
