"""Command-line harness: acceptance run, figure data and tables.

Exit codes: 0 success, 1 acceptance failure, 2 usage error.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import acceptance, dominance, optimize
from .encode import EncodingParams, encoded_momentum, tophat_momentum
from .errors import DomainError, RootNotFoundError
from .position import WaveSpec, modulation_term, orthogonal_position_wave, position_wave
from .strings import StringClass, canonical, classify, enumerate_balanced

SWEEP_COLUMNS = ["delta_bar", "sigma_bar", "delta_AB", "delta_SB", "pr_min"]
FIG2_SIGMAS = (0.4, 0.6, 0.8, 1.0)
FIG3_SIGMAS = (1.67, 2.11, 2.5, 3.0)
# figures are always produced at N = 8, P = 1


def _fmt(v):
    return repr(float(v))


def _write_csv(path, header, rows):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return path


def _emit(text, out):
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args):
    results = acceptance.run_all(tolerance_scale=args.tolerance_scale)
    width = max(len(r.name) for r in results)
    print(f"{'criterion':<{width}}  {'pass':<4}  claim | computed | tolerance")
    for r in results:
        print(f"{r.name:<{width}}  {'yes' if r.passed else 'NO':<4}  {r.claim} | {r.computed} | {r.tolerance}")
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"\n{len(failed)} criterion(s) failed:")
        for r in failed:
            print(f"  {r.name}: {r.detail or r.computed}")
        return 1
    return 0


def _fig2(outdir, args):
    written = []
    strings = enumerate_balanced(8)
    xs = np.linspace(0.0, 4.0, 201)
    for sigma in FIG2_SIGMAS:
        params = EncodingParams(8, 1.0, sigma)
        rows = []
        for z in strings:
            cls = classify(z)
            bold = int(cls in (StringClass.SYM_BALANCED, StringClass.ANTISYM_BALANCED))
            mags = np.abs(modulation_term(WaveSpec(z, params), xs))
            rows.extend((x, str(z), cls.short, m, bold) for x, m in zip(xs, mags))
        written.append(_write_csv(outdir / f"fig2_sigma{sigma:g}.csv",
                                  ["x", "z", "class", "abs_M", "bold"], rows))
    return written


def _fig3(outdir, args):
    written = []
    xs = np.linspace(-6.0, 6.0, 601)
    verticals = []
    opt = optimize.find_optimum()
    for sigma in FIG3_SIGMAS:
        params = EncodingParams(8, 1.0, sigma)
        cols = {}
        for cls in (StringClass.ANTISYM_BALANCED, StringClass.SYM_BALANCED, StringClass.CONSTANT):
            cols[cls.short] = np.abs(position_wave(WaveSpec(canonical(cls, 8)[0], params), xs)) ** 2
        rows = zip(xs, cols["AB"], cols["SB"], cols["C"])
        written.append(_write_csv(outdir / f"fig3_sigma{sigma:g}.csv",
                                  ["x", "density_AB", "density_SB", "density_C"], rows))
        d_ab = optimize.stationary_delta(sigma, "AB")
        d_sb = optimize.stationary_delta(sigma, "SB")
        optimal = int(abs(sigma - round(opt.sigma_bar, 2)) < 1e-9)
        verticals.append((sigma, d_ab, d_sb, optimal))
    written.append(_write_csv(outdir / "fig3_verticals.csv",
                              ["sigma_bar", "delta_AB_stationary", "delta_SB_stationary", "optimal"],
                              verticals))
    return written


def _fig4(outdir, args):
    opt = optimize.find_optimum()
    P = 1.0
    params = EncodingParams(8, P, opt.sigma_bar)
    z = canonical(StringClass.CONSTANT, 8)[0]
    ps = np.linspace(-1.5, 1.5, 601)
    mom = zip(ps, encoded_momentum(z, ps, params), tophat_momentum(z, ps, P))
    xs = np.linspace(-6.0, 6.0, 601)
    pos = zip(xs, np.abs(position_wave(WaveSpec(z, params), xs)) ** 2,
              np.abs(orthogonal_position_wave(z, xs, P)) ** 2)
    windows = [("delta_orthogonal", math.pi / (2 * P)), ("delta_sharp", opt.delta_bar / P)]
    return [
        _write_csv(outdir / "fig4a_momentum.csv", ["p", "gaussian", "orthogonal"], mom),
        _write_csv(outdir / "fig4b_position.csv", ["x", "density_gaussian", "density_orthogonal"], pos),
        _write_csv(outdir / "fig4_windows.csv", ["name", "delta"], windows),
    ]


def cmd_figures(args):
    outdir = Path(args.out or "figures")
    makers = {"fig2": _fig2, "fig3": _fig3, "fig4": _fig4}
    try:
        written = makers[args.which](outdir, args)
    except OSError as exc:
        print(f"error writing figure data under {outdir}: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


def cmd_optimize(args):
    rep = optimize.find_optimum()
    if args.format == "json":
        d = asdict(rep)
        d["warnings"] = list(rep.warnings)
        _emit(json.dumps(d, indent=2, sort_keys=True) + "\n", args.out)
    else:
        text = (f"delta_bar   {rep.delta_bar:.6f}\n"
                f"sigma_bar   {rep.sigma_bar:.6f}\n"
                f"pr_success  {rep.pr_success:.6f}\n"
                f"resid_stationarity  {rep.resid_stationarity:.3e}\n"
                f"resid_equalize      {rep.resid_equalize:.3e}\n")
        for note in rep.warnings:
            text += f"warning: {note}\n"
        _emit(text, args.out)
    return 0


def _parse_values(text, flag):
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise DomainError(f"{flag} expects comma-separated numbers, got {text!r}")
    if not vals:
        raise DomainError(f"{flag} is empty")
    return vals


def cmd_sweep(args):
    deltas = _parse_values(args.delta or "1.5,2.0,2.5", "--delta")
    sigmas = _parse_values(args.sigma or "1.67,2.11", "--sigma")
    grid = [(d * args.p, s * args.p) for s in sigmas for d in deltas]
    rows = optimize.sweep(grid)
    if args.format == "json":
        _emit(json.dumps([asdict(r) for r in rows], indent=2) + "\n", args.out)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SWEEP_COLUMNS)
        for r in rows:
            w.writerow([_fmt(getattr(r, c)) for c in SWEEP_COLUMNS])
        _emit(buf.getvalue(), args.out)
    return 0


def cmd_dominance(args):
    sigma = args.sigma if args.sigma is not None else 0.4
    rep = dominance.verify_dominance(EncodingParams(args.n, args.p, float(sigma)), args.x_max, args.points)
    if args.format == "json":
        _emit(rep.to_json(indent=2) + "\n", args.out)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "argmax_class"])
        for x, c in zip(rep.x_grid, rep.argmax_class):
            w.writerow([_fmt(x), c.value])
        _emit(buf.getvalue(), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="cvdj", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=8, help="number of bits (default 8)")
    common.add_argument("--p", type=float, default=1.0, help="encoding half-width P (default 1)")
    common.add_argument("--out", help="output file (or directory for figures)")
    common.add_argument("--format", choices=["csv", "json"], default="csv")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    # harness self-test: scales every tolerance
    p.add_argument("--tolerance-scale", type=float, default=1.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figures", parents=[common], help="write figure data as CSV")
    p.add_argument("which", choices=["fig2", "fig3", "fig4"])
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("optimize", parents=[common], help="find the optimal window and width")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("sweep", parents=[common], help="separations on a (delta_bar, sigma_bar) grid")
    p.add_argument("--delta", help="comma-separated delta_bar values")
    p.add_argument("--sigma", help="comma-separated sigma_bar values")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("dominance", parents=[common], help="brute-force dominance scan")
    p.add_argument("--sigma", type=float, help="Gaussian width (default 0.4)")
    p.add_argument("--x-max", type=float, default=4.0)
    p.add_argument("--points", type=int, default=201)
    p.set_defaults(func=cmd_dominance)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print(f"cvdj: error: {exc}", file=sys.stderr)
        return 2
    except RootNotFoundError as exc:
        print(f"cvdj: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
