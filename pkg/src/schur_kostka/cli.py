"""Command line front end.

Rationals are written ``p/q`` or as integers, comma separated.  Lists that
start with a minus sign must use the ``=`` form: ``--delta=-4,-2,5``.

Exit status: 0 success, 1 a check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from .core_weights import (
    algebra,
    format_rational,
    fractions,
    partition,
    weight,
    weight_pair_to_xi,
    weight_to_partition,
)

OUT_ENV = "SCHUR_KOSTKA_OUT"


class UsageError(ValueError):
    pass


def _rationals(text: str) -> tuple[Fraction, ...]:
    try:
        return fractions(t for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise argparse.ArgumentTypeError(f"cannot read {text!r} as rationals: {e}")


def _ints(text: str) -> tuple[int, ...]:
    vals = _rationals(text)
    if any(v.denominator != 1 for v in vals):
        raise argparse.ArgumentTypeError(f"{text!r} must be integers")
    return tuple(int(v) for v in vals)


def _fmt(x, approx: bool) -> str:
    if isinstance(x, Fraction):
        return f"{float(x):.10g}" if approx else format_rational(x)
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(_fmt(v, approx) for v in x) + ")"
    return str(x)


def _jsonable(x, approx=False):
    if isinstance(x, Fraction):
        return float(x) if approx else format_rational(x)
    if isinstance(x, dict):
        return {k: _jsonable(v, approx) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v, approx) for v in x]
    return x


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.json:
        print(json.dumps(_jsonable(payload, args.approx), indent=2))
    else:
        print(text if text is not None else "\n".join(f"{k}: {_fmt(v, args.approx)}" for k, v in payload.items()))


def _out_path(args, name: str) -> Path:
    base = Path(getattr(args, "out", None) or os.environ.get(OUT_ENV, "."))
    base.mkdir(parents=True, exist_ok=True)
    return base / name


def _weight(args, attr: str, alg=None):
    vals = getattr(args, attr, None)
    if vals is None:
        raise UsageError(f"--{attr} is required")
    return weight(alg or args.algebra, vals)


# ---------------------------------------------------------------------------
# subcommands


def cmd_mult(args) -> int:
    from .kostant import mult_kostant
    from .polytopes import gt_count, ssyt_count

    lam, d = _weight(args, "lambda_"), _weight(args, "delta")
    if args.route == "kostant":
        m = mult_kostant(lam, d)
    else:
        if not lam.algebra.is_a_type:
            raise UsageError("the gt and ssyt routes need an A-type algebra")
        alpha = weight_to_partition(lam).parts
        xi = weight_pair_to_xi(lam, d).parts
        if any(x.denominator != 1 for x in xi):
            m = 0
        else:
            m = (gt_count if args.route == "gt" else ssyt_count)(alpha, xi)
    _emit(args, {"lambda": str(lam), "delta": str(d), "route": args.route, "mult": m}, str(m))
    return 0


def cmd_lr(args) -> int:
    from .kostant import lr_klimyk, lr_steinberg

    lam, mu, nu = _weight(args, "lambda_"), _weight(args, "mu"), _weight(args, "nu")
    c = (lr_steinberg if args.route == "steinberg" else lr_klimyk)(lam, mu, nu)
    _emit(args, {"lambda": str(lam), "mu": str(mu), "nu": str(nu), "C": c}, str(c))
    return 0


def _alpha_xi(args):
    """(algebra tag, alpha coordinates, xi coordinates) from --alpha/--lambda and --xi/--delta."""
    alg = algebra(args.algebra)
    if args.alpha is not None:
        alpha = args.alpha
    elif args.lambda_ is not None:
        lam = weight(alg, args.lambda_)
        alpha = lam.orthogonal() if alg.tag == "B2" else weight_to_partition(lam).parts
    else:
        raise UsageError("give --alpha or --lambda")
    if args.xi is not None:
        xi = args.xi
    elif args.delta is not None:
        d = weight(alg, args.delta)
        if alg.tag == "B2":
            xi = d.orthogonal()
        else:
            if len(alpha) != alg.n:
                raise UsageError(f"{alg} needs {alg.n} Young components")
            lam = partition(alpha, alg).to_weight()
            shift = alpha[-1]
            xi = tuple(x + shift for x in weight_pair_to_xi(lam, d).parts)
    else:
        raise UsageError("give --xi or --delta")
    return alg.tag, tuple(alpha), tuple(xi)


def cmd_volume(args) -> int:
    from .volumes import pdf, vol_b2, vol_su

    tag, alpha, xi = _alpha_xi(args)
    v = vol_b2(alpha, xi) if tag == "B2" else vol_su(alpha, xi)
    payload = {"algebra": tag, "alpha": list(alpha), "xi": list(xi), "I": v}
    if args.pdf:
        payload["pdf"] = pdf(alpha, xi, tag)
    _emit(args, payload, _fmt(v, args.approx) if not args.pdf else None)
    return 0


def _cell_labeller(tag, alpha):
    """Maps a point to a small integer id of its cell (sign vector over the singular lines)."""
    from .volumes.b2 import b2_lines

    ids: dict = {}
    if tag == "B2":
        lines = b2_lines(alpha)

        def key(p):
            return tuple((ln.value(p) > 0) - (ln.value(p) < 0) for ln in lines)
    else:
        a = alpha

        def key(p):
            return tuple((x > aj) - (x < aj) for x in p for aj in a)

    def label(p):
        return ids.setdefault(key(p), len(ids))

    return label


def cmd_pdf_grid(args) -> int:
    from .volumes import pdf_grid, vol_b2, vol_su3

    tag = algebra(args.algebra).tag
    if tag not in ("A2", "B2"):
        raise UsageError("pdf-grid supports A2 and B2")
    alpha = args.alpha
    label = _cell_labeller(tag, alpha)
    path = _out_path(args, args.csv or f"pdf_{tag}.csv")
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        cols = ["xi1", "xi2"] + (["xi3"] if tag == "A2" else []) + ["I", "pdf", "cell"]
        wr.writerow(cols)
        for x, p in pdf_grid(alpha, tag, args.bins):
            v = vol_b2(alpha, x) if tag == "B2" else (vol_su3(alpha, x) if p else Fraction(0))
            wr.writerow([_fmt(t, args.approx) for t in x] + [_fmt(v, args.approx), _fmt(p, args.approx), label(x) if p else -1])
    print(path)
    return 0


def cmd_cells(args) -> int:
    from .volumes import cells_crosssection

    tag = algebra(args.algebra).tag
    plane = None
    if tag == "A3":
        if args.slice is None:
            raise UsageError("su(4) sections need --slice k,value")
        k, val = args.slice
        plane = (int(k), val)
    arr = cells_crosssection(tag, args.alpha, plane)
    summ = arr.summary()
    if args.csv:
        path = _out_path(args, args.csv)
        with open(path, "w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(["u", "v", "xi", "I", "cell"])
            for cid, (p, x, v) in enumerate(arr.samples()):
                wr.writerow([_fmt(p[0], args.approx), _fmt(p[1], args.approx), " ".join(_fmt(t, args.approx) for t in x), _fmt(v, args.approx), cid])
        summ["csv"] = str(path)
    _emit(args, summ, f"V={arr.V} E={arr.E} F={arr.F}")
    return 0


def _parse_wall(text: str):
    from .volumes import WallSpec

    try:
        kind, _, rest = text.partition(":")
        side = 1
        if rest.endswith("-"):
            side, rest = -1, rest[:-1]
        return WallSpec(kind, tuple(int(t) for t in rest.split(",")), side)
    except ValueError as e:
        raise UsageError(f"bad wall {text!r}: {e}")


def cmd_smoothness(args) -> int:
    from .volumes import wall_smoothness_probe
    from .volumes.walls import generic_wall_point

    tag = algebra(args.algebra).tag
    wall = _parse_wall(args.wall)
    if args.point is not None:
        base = args.point
    elif tag == "A3":
        base = generic_wall_point(args.alpha, wall, random.Random(args.seed))
        if base is None:
            raise UsageError(f"{wall.label()} does not cut the interior of the permutahedron")
    else:
        raise UsageError("--point is required for this algebra")
    res = wall_smoothness_probe(tag, args.alpha, wall, base, h=args.step)
    payload = {"wall": wall.label(), "point": list(base), **res.to_json()}
    _emit(args, payload)
    return 0


def cmd_sc(args) -> int:
    from .asymptotics import sc_bound_check_a3, sc_threshold

    lam, d = _weight(args, "lambda_"), _weight(args, "delta")
    rep = sc_threshold(lam, d, args.s_max, workers=args.threads)
    payload = rep.to_json()
    if lam.algebra.tag == "A3" and args.bound:
        payload["bound_check"] = sc_bound_check_a3(lam, d).to_json()
    _emit(args, payload)
    return 0 if rep.ok else 1


def cmd_stretch(args) -> int:
    from .asymptotics import stretch_report

    rep = stretch_report(_weight(args, "lambda_"), _weight(args, "delta"), args.p_max, workers=args.threads)
    _emit(args, rep.to_json())
    return 0 if rep.fit is not None else 1


def cmd_horn_j(args) -> int:
    from .asymptotics import horn_j_via_stretch

    res = horn_j_via_stretch(_weight(args, "lambda_"), _weight(args, "mu"), _weight(args, "nu"), args.p_max, workers=args.threads)
    _emit(args, res.to_json(), _fmt(res.value, args.approx))
    return 0


def cmd_conjecture1(args) -> int:
    from .asymptotics import conjecture1_check, conjecture1_scan

    if args.delta is not None:
        d1, d2 = args.delta
        recs = [conjecture1_check(args.lambda1, d1, d2)]
    else:
        recs = [r for l1 in range(0, args.lambda1 + 1) for r in conjecture1_scan(l1)]
    bad = [r for r in recs if not r.skipped and not r.matches]
    if args.json:
        print(json.dumps({"records": [r.to_json() for r in recs], "failures": len(bad)}, indent=2))
    else:
        for r in recs:
            print(f"lambda1={r.lam1} delta={r.delta} A3={r.a3_mult} B2={r.b2_mult} square={r.is_square} match={r.matches}")
        print(f"{len(recs)} cases, {len(bad)} failures")
    return 1 if bad else 0


def cmd_conjecture2(args) -> int:
    from .asymptotics import conjecture2_check
    from .kostant import weight_system

    if args.lambda_ is not None and args.delta is not None:
        recs = [conjecture2_check(weight("B2", args.lambda_), weight("B2", args.delta), args.p_max)]
    else:
        rng = random.Random(args.seed)
        recs = []
        while len(recs) < args.samples:
            l1 = rng.randint(0, args.max_sum)
            l2 = rng.randint(0, args.max_sum - l1)
            if l1 + l2 == 0:
                continue
            lam = weight("B2", (l1, l2))
            ws = sorted((w for w in weight_system(lam) if w.is_dominant), key=lambda w: w.dynkin)
            rec = conjecture2_check(lam, rng.choice(ws), args.p_max)
            if rec.verdict != "not_applicable":
                recs.append(rec)
    tally: dict = {}
    for r in recs:
        tally[r.verdict] = tally.get(r.verdict, 0) + 1
    if args.json:
        print(json.dumps({"records": [r.to_json() for r in recs], "tally": tally}, indent=2))
    else:
        for r in recs:
            print(f"{r.lam} {r.delta} class={r.parity_class} k1%2={r.kappa1_parity} period={r.fit_period} 2I_int={r.twice_volume_integral} -> {r.verdict}")
        print(tally)
    return 1 if tally.get("violation") else 0


def cmd_sample(args) -> int:
    from .schur_mc import OrbitSpec, compare_histogram_pdf, sample_diagonals, write_histogram_csv, write_summary_json

    spec = OrbitSpec(args.group, args.alpha)
    h = sample_diagonals(spec, args.n_samples, seed=args.seed, bins=args.bins, threads=args.threads)
    rep = None if spec.group == "SU4" else compare_histogram_pdf(h)
    stem = f"hist_{spec.group}_{args.seed}"
    csv_path = _out_path(args, stem + ".csv")
    write_histogram_csv(h, csv_path, None if rep is None else rep.expected)
    json_path = _out_path(args, stem + ".json")
    write_summary_json(h, json_path, rep)
    payload = {"csv": str(csv_path), "summary": str(json_path), "N": h.N, "outside_support": h.outside_support}
    if rep is not None:
        payload.update({k: v for k, v in rep.to_json().items() if k in ("interior_bins", "beyond_5sigma", "fraction_beyond", "chi2", "dof", "passed")})
    _emit(args, payload)
    return 0 if rep is None or rep.passed else 1


def _parse_tableau(text: str) -> list[tuple[int, ...]]:
    rows = []
    for r in text.split("/"):
        r = r.strip()
        rows.append(tuple(int(t) for t in (r.split(",") if "," in r else r)))
    return rows


def cmd_forest(args) -> int:
    from .pictographs import forest_census, forest_readout, tableau_forest

    if args.tableau:
        rows = _parse_tableau(args.tableau)
        f = tableau_forest(rows, args.n)
        alpha, xi = forest_readout(f)
        payload = {"forest": f.to_json(), "alpha": list(alpha), "xi": list(xi), "conserved": f.is_conserved()}
        if args.svg:
            path = _out_path(args, args.svg)
            path.write_text(f.to_svg())
            payload["svg"] = str(path)
        _emit(args, payload, None if args.json else f"alpha={alpha} xi={xi}\n{f.dumps()}")
        return 0
    if args.alpha is None or args.xi is None:
        raise UsageError("give --tableau, or --alpha and --xi")
    cen = forest_census(tuple(int(a) for a in args.alpha), tuple(int(x) for x in args.xi))
    _emit(args, {"forests": cen.count, "tableaux": cen.tableaux, "injective": cen.injective}, str(cen.count))
    return 0 if cen.injective else 1


def cmd_golden(args) -> int:
    from .golden import run_all

    skip = set(args.skip or ())
    res = run_all(skip, echo=None if args.json else print)
    failed = [r for r in res if not r.passed]
    if args.json:
        print(json.dumps([r.__dict__ for r in res], indent=2))
    else:
        print(f"{len(res) - len(failed)}/{len(res)} checks passed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schur-kostka", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--approx", action="store_true", help="print rationals as floats")
    common.add_argument("--threads", type=int, default=None, help="worker threads (default: logical cores)")
    common.add_argument("--out", default=None, help=f"output directory (default ${OUT_ENV} or .)")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    def alg(sp, default=None):
        sp.add_argument("--algebra", default=default, required=default is None, help="A1, A2, A3 or B2")

    sp = add("mult", cmd_mult, "weight multiplicity mult_lambda(delta)")
    alg(sp)
    sp.add_argument("--lambda", dest="lambda_", type=_rationals, required=True)
    sp.add_argument("--delta", type=_rationals, required=True)
    sp.add_argument("--route", choices=("kostant", "gt", "ssyt"), default="kostant")

    sp = add("lr", cmd_lr, "tensor product multiplicity C_{lambda mu}^nu")
    alg(sp)
    for name in ("lambda", "mu", "nu"):
        sp.add_argument(f"--{name}", dest=name + ("_" if name == "lambda" else ""), type=_rationals, required=True)
    sp.add_argument("--route", choices=("steinberg", "klimyk"), default="steinberg")

    sp = add("volume", cmd_volume, "volume function I(alpha; xi)")
    alg(sp)
    sp.add_argument("--alpha", type=_rationals, help="Young components (B2: orthogonal coordinates)")
    sp.add_argument("--lambda", dest="lambda_", type=_rationals, help="Dynkin labels instead of --alpha")
    sp.add_argument("--xi", type=_rationals)
    sp.add_argument("--delta", type=_rationals, help="Dynkin labels instead of --xi")
    sp.add_argument("--pdf", action="store_true", help="also print the density")

    sp = add("pdf-grid", cmd_pdf_grid, "CSV grid of I and the pdf (A2, B2)")
    alg(sp)
    sp.add_argument("--alpha", type=_rationals, required=True)
    sp.add_argument("--bins", type=int, default=60)
    sp.add_argument("--csv", default=None, help="file name inside the output directory")

    sp = add("cells", cmd_cells, "cells of polynomiality in a planar section")
    alg(sp)
    sp.add_argument("--alpha", type=_rationals, required=True)
    sp.add_argument("--slice", type=_rationals, default=None, help="k,value fixing xi_k (su(4))")
    sp.add_argument("--csv", default=None)

    sp = add("smoothness", cmd_smoothness, "derivative jumps across a wall")
    alg(sp)
    sp.add_argument("--alpha", type=_rationals, required=True)
    sp.add_argument("--wall", required=True, help="single:i,j | pair:i,j,k,l | b2_line:m (append '-' to reverse)")
    sp.add_argument("--point", type=_rationals, default=None)
    sp.add_argument("--step", type=Fraction, default=Fraction(1, 100))
    sp.add_argument("--seed", type=int, default=0)

    sp = add("sc", cmd_sc, "stabilization threshold of C_{lambda, s rho}^{s rho + delta}")
    alg(sp)
    sp.add_argument("--lambda", dest="lambda_", type=_rationals, required=True)
    sp.add_argument("--delta", type=_rationals, required=True)
    sp.add_argument("--s-max", type=int, default=None)
    sp.add_argument("--bound", action="store_true", help="also run the A3 bound check")

    sp = add("stretch", cmd_stretch, "stretching (quasi-)polynomial of mult_{p lambda}(p delta)")
    alg(sp)
    sp.add_argument("--lambda", dest="lambda_", type=_rationals, required=True)
    sp.add_argument("--delta", type=_rationals, required=True)
    sp.add_argument("--p-max", type=int, default=10)

    sp = add("horn-j", cmd_horn_j, "Horn volume J from stretched LR coefficients")
    alg(sp)
    for name in ("lambda", "mu", "nu"):
        sp.add_argument(f"--{name}", dest=name + ("_" if name == "lambda" else ""), type=_rationals, required=True)
    sp.add_argument("--p-max", type=int, default=None)

    sp = add("conjecture1", cmd_conjecture1, "A3 {l,1,l} versus B2 {l,1} multiplicities")
    sp.add_argument("--lambda1", type=int, required=True, help="single value with --delta, else scan 0..lambda1")
    sp.add_argument("--delta", type=_ints, default=None, help="d1,d2")

    sp = add("conjecture2", cmd_conjecture2, "B2 stretching period classification")
    sp.add_argument("--lambda", dest="lambda_", type=_ints, default=None)
    sp.add_argument("--delta", type=_ints, default=None)
    sp.add_argument("--p-max", type=int, default=12)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--max-sum", type=int, default=12)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("sample", cmd_sample, "Monte Carlo histogram of diagonal projections")
    sp.add_argument("--group", required=True, help="SU2, SU3, SU4 or SO5")
    sp.add_argument("--alpha", type=_rationals, required=True)
    sp.add_argument("--n-samples", type=int, default=10**6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bins", type=int, default=80)

    sp = add("forest", cmd_forest, "liana forests of tableaux")
    sp.add_argument("--tableau", default=None, help="rows separated by '/', e.g. 112/23")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--alpha", type=_rationals, default=None)
    sp.add_argument("--xi", type=_rationals, default=None)
    sp.add_argument("--svg", default=None, help="write an SVG drawing to this file")

    sp = add("paper-check", cmd_golden, "run every golden check")
    sp.add_argument("--skip", type=_ints, default=None, help="criterion numbers to skip")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cmd", None) == "forest" and args.tableau and args.n is None:
        parser.error("--n is required with --tableau")
    try:
        return args.fn(args)
    except (UsageError, ValueError, TypeError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
