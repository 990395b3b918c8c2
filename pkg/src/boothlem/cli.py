"""Command line front end.

Commands: coeffs, verify, radius, norm, plot-domain, refute-cho, all-checks.
Reports are JSON or CSV with stable field order so identical configurations
produce byte-identical output; figures go to SVG/PNG files next to the
delimited output.  Exit status: 0 when every verdict holds (for refute-cho:
when a discrepancy IS found), 1 on a failed verdict, 2 on bad configuration.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import __version__
from . import bounds as B
from . import members as M
from . import norm as N
from . import radius as R
from . import verification as V
from .domain import AlphaParam, boundary_curve
from .schwarz import sample

TOLERANCES = {"sharp_bound": 1e-9, "norm": 1e-4, "radius_root": 1e-12,
              "cho_gap": 1e-6}


def _report(payload: dict, args) -> dict:
    return {
        "tool": "boothlem",
        "version": __version__,
        "config": {k: v for k, v in sorted(vars(args).items())
                   if k not in ("func", "output") and v is not None},
        "tolerances": TOLERANCES,
        **payload,
    }


def _emit_json(payload, args):
    text = json.dumps(payload, indent=2, sort_keys=False, default=_jsonable)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _jsonable(obj):
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)}")


def _emit_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def _figure_path(output: str, fmt: str) -> str:
    stem, _ = os.path.splitext(output)
    return stem + ("." + fmt if fmt in ("svg", "png") else ".svg")


def _worker_cap() -> int:
    # all computation here is deterministic and single-threaded; the env var
    # is honored as an upper bound for any future pooling
    try:
        return max(1, int(os.environ.get("BOOTH_GFT_THREADS", "1")))
    except ValueError:
        return 1


# -- subcommands -----------------------------------------------------------

def cmd_coeffs(args) -> int:
    alpha = args.alpha
    order = args.order
    named = {
        "f1": lambda: M.extremal_fn(1, alpha, order),
        "f2": lambda: M.extremal_fn(2, alpha, order),
        "f3": lambda: M.extremal_fn(3, alpha, order),
        "g1": lambda: M.bk_extremal(1, alpha, order),
        "g2": lambda: M.bk_extremal(3, alpha, order),
    }
    if args.function in named:
        member = named[args.function]()
    elif args.function == "sample":
        omega = sample(args.seed, order=order)
        ctor = M.from_schwarz_bk if args.cls == "bk" else M.from_schwarz_bs
        member = ctor(omega, alpha, order)
    else:
        print(f"unknown function {args.function!r}", file=sys.stderr)
        return 2
    n_log = min(order - 2, 16)
    gammas = (B.log_coeffs(member, n_log) if member.class_tag == "bs"
              else np.full(n_log, np.nan, dtype=complex))
    rows = []
    for n in range(2, order + 1):
        a = member.taylor(n)
        g = gammas[n - 2] if n - 2 < len(gammas) else float("nan")
        rows.append((n, repr(a.real), repr(a.imag),
                     repr(complex(g).real), repr(complex(g).imag)))
    if args.format == "csv":
        out = args.output or f"coeffs_{args.function}.csv"
        _emit_csv(out, ["n", "re_a_n", "im_a_n", "re_gamma_nm1", "im_gamma_nm1"], rows)
        print(f"wrote {out}", file=sys.stderr)
    else:
        payload = _report({
            "function": args.function,
            "taylor": {str(n): member.taylor(n) for n in range(2, order + 1)},
            "log_coefficients": {str(n + 1): complex(g)
                                 for n, g in enumerate(gammas)},
        }, args)
        _emit_json(payload, args)
    return 0


def cmd_verify(args) -> int:
    if args.what != "bounds":
        print(f"unknown verification target {args.what!r}", file=sys.stderr)
        return 2
    checks = [V.taylor_check(args.cls, args.seed, args.samples,
                             alphas=(args.alpha,))]
    if args.cls == "bs":
        checks.append(V.log_coeff_check(args.seed, args.samples,
                                        alphas=(args.alpha,)))
    payload = _report({"checks": checks}, args)
    _emit_json(payload, args)
    ok = all(c["holds"] for c in checks)
    print(("all bounds hold" if ok else "BOUND VIOLATION"), file=sys.stderr)
    return 0 if ok else 1


def cmd_radius(args) -> int:
    from .plots import plot_radius_sweep, save_figure

    if args.sweep:
        rows = []
        a = 0.0
        while a <= 1.0 + 1e-12:
            alpha = round(a, 12)
            if args.cls == "bs":
                res = R.radius_bs(alpha)
                rows.append({"alpha": alpha, "radius": res.radius,
                             "r_prime": res.r_prime,
                             "r_doubleprime": res.r_doubleprime,
                             "residual_l": res.residual_l,
                             "residual_m": res.residual_m})
            else:
                r = R.radius_bk(alpha)
                rows.append({"alpha": alpha, "radius": r,
                             "residual_m": abs(R.m_alpha(alpha, r))})
            a += args.step
        out = args.output or f"radius_{args.cls}_sweep.csv"
        header = list(rows[0].keys())
        _emit_csv(out, header, [[repr(r[k]) if isinstance(r[k], float) else r[k]
                                 for k in header] for r in rows])
        fig_path = _figure_path(out, args.format)
        save_figure(plot_radius_sweep(rows, args.cls), fig_path)
        print(f"wrote {out} and {fig_path}", file=sys.stderr)
        return 0

    if args.cls == "bs":
        res = R.radius_bs(args.alpha)
        payload = _report({
            "class": "bs", "radius": res.radius, "r_prime": res.r_prime,
            "r_doubleprime": res.r_doubleprime,
            "residuals": {"l": res.residual_l, "m": res.residual_m},
            "bracket": list(res.bracket),
        }, args)
    else:
        r = R.radius_bk(args.alpha)
        payload = _report({
            "class": "bk", "radius": r,
            "residuals": {"m": abs(R.m_alpha(args.alpha, r))},
        }, args)
    _emit_json(payload, args)
    return 0


def cmd_norm(args) -> int:
    alpha = args.alpha
    if args.function == "identity":
        est = N.norm_estimate(N.p_identity)
    elif args.function == "f1":
        est = N.norm_estimate(N.p_f1(alpha))
    elif args.function == "g1":
        est = N.norm_estimate(N.p_g1(alpha))
    elif args.function == "g2":
        member = M.bk_extremal(3, alpha, args.order)
        est = N.norm_estimate(N.pre_schwarzian_series(member), max_radius=0.9)
    elif args.function == "sample":
        omega = sample(args.seed, order=args.order)
        member = M.from_schwarz_bk(omega, alpha, args.order)
        est = N.norm_estimate(N.pre_schwarzian_series(member), max_radius=0.9)
    else:
        print(f"unknown function {args.function!r}", file=sys.stderr)
        return 2
    payload = _report({"function": args.function, "estimate": est.to_dict()}, args)
    _emit_json(payload, args)
    return 0


def cmd_plot_domain(args) -> int:
    from .plots import plot_domain_figure, save_figure

    AlphaParam(args.alpha)  # validate
    out = args.output or f"domain_alpha{args.alpha:g}.csv"
    w = boundary_curve(args.alpha, 720)
    _emit_csv(out, ["theta_index", "re_w", "im_w"],
              [(i, repr(float(x.real)), repr(float(x.imag)))
               for i, x in enumerate(w)])
    fig_path = _figure_path(out, args.format)
    save_figure(plot_domain_figure([args.alpha]), fig_path)
    print(f"wrote {out} and {fig_path}", file=sys.stderr)
    return 0


def cmd_refute_cho(args) -> int:
    from .plots import plot_cho_comparison, save_figure

    result = R.refute_cho()
    out = args.output or "refute_cho.csv"
    header = ["alpha", "cho_root", "conjectured_radius", "r_prime",
              "r_doubleprime", "radius", "gap", "oracle_confirms"]
    _emit_csv(out, header,
              [[repr(r[k]) if isinstance(r.get(k), float) else r.get(k, "")
                for k in header] for r in result["rows"]])
    fig_path = _figure_path(out, args.format)
    save_figure(plot_cho_comparison(result["rows"]), fig_path)
    msg = ("conjecture refuted at alpha in "
           f"{result['confirmed_alphas']}" if result["refuted"]
           else "no discrepancy found")
    print(msg, file=sys.stderr)
    print(f"wrote {out} and {fig_path}", file=sys.stderr)
    return 0 if result["refuted"] else 1


def cmd_all_checks(args) -> int:
    checks = V.run_all_checks(args.seed, args.samples)
    payload = _report({"checks": checks,
                       "workers": _worker_cap(),
                       "all_hold": all(c["holds"] for c in checks)}, args)
    _emit_json(payload, args)
    for c in checks:
        print(f"{'PASS' if c['holds'] else 'FAIL'}  {c['name']}", file=sys.stderr)
    return 0 if payload["all_hold"] else 1


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="boothlem",
        description="Numerical verification of coefficient bounds, convexity "
                    "radii and pre-Schwarzian norms for the Booth-lemniscate "
                    "classes BS(alpha) and BK(alpha).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, alpha=True):
        if alpha:
            sp.add_argument("--alpha", type=float, default=0.5)
        sp.add_argument("--seed", type=int, default=2024)
        sp.add_argument("--samples", type=int, default=10_000)
        sp.add_argument("--order", type=int, default=32,
                        help="series truncation order (8..128)")
        sp.add_argument("--format", choices=("json", "csv", "svg", "png"),
                        default="json")
        sp.add_argument("--output", type=str, default=None)

    sp = sub.add_parser("coeffs", help="Taylor and logarithmic coefficients")
    sp.add_argument("--function", default="f1",
                    choices=("f1", "f2", "f3", "g1", "g2", "sample"))
    sp.add_argument("--class", dest="cls", choices=("bs", "bk"), default="bs")
    common(sp)
    sp.set_defaults(func=cmd_coeffs)

    sp = sub.add_parser("verify", help="falsification sweeps of sharp bounds")
    sp.add_argument("what", choices=("bounds",))
    sp.add_argument("--class", dest="cls", choices=("bs", "bk"), default="bs")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("radius", help="radius of convexity")
    sp.add_argument("--class", dest="cls", choices=("bs", "bk"), default="bs")
    sp.add_argument("--sweep", action="store_true")
    sp.add_argument("--step", type=float, default=0.05)
    common(sp)
    sp.set_defaults(func=cmd_radius)

    sp = sub.add_parser("norm", help="pre-Schwarzian norm estimate")
    sp.add_argument("--function", default="g1",
                    choices=("identity", "f1", "g1", "g2", "sample"))
    common(sp)
    sp.set_defaults(func=cmd_norm)

    sp = sub.add_parser("plot-domain", help="lemniscate boundary CSV + figure")
    common(sp)
    sp.set_defaults(func=cmd_plot_domain)

    sp = sub.add_parser("refute-cho",
                        help="compare conjectured vs proven radius; exit 0 "
                             "iff a discrepancy is found")
    common(sp, alpha=False)
    sp.set_defaults(func=cmd_refute_cho)

    sp = sub.add_parser("all-checks", help="the full verification battery")
    common(sp, alpha=False)
    sp.set_defaults(func=cmd_all_checks)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "alpha") and not 0.0 <= args.alpha <= 1.0:
        print("alpha must lie in [0, 1]", file=sys.stderr)
        return 2
    if not 8 <= args.order <= 128:
        print("order must lie in [8, 128]", file=sys.stderr)
        return 2
    if args.samples < 1:
        print("samples must be >= 1", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
