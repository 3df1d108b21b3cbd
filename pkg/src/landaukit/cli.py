"""Command-line front end for the coefficient tables and the verification sweeps."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from math import factorial

from . import verify
from .coefficients import beta_det, default_table
from .landau import landau_exact
from .numerics import PrecisionPolicy, format_decimal, format_radius
from .series import rho_series_table

CHECKS = ("thm1", "thm2", "thm3", "lemma22", "lemma23", "rho-sandwich", "classical", "granath")
FORMATS = ("rational-text", "csv", "json")


def _rational_json(q: Fraction) -> dict:
    return {"numerator": str(q.numerator), "denominator": str(q.denominator)}


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _policy(args) -> PrecisionPolicy:
    start = args.prec
    if start is None:
        start = int(os.environ.get("LANDAUKIT_PREC", PrecisionPolicy.start_bits))
    cap = max(args.prec_max, start)
    return PrecisionPolicy(start_bits=start, max_bits=cap)


# ---------------------------------------------------------------------------


def cmd_coeffs(args) -> int:
    if args.count < 1:
        raise _Usage("--count must be at least 1")
    betas = default_table.betas(args.count)
    idx = range(2, 2 * args.count + 1, 2)
    dec = args.decimal
    if args.format == "json":
        items = []
        for i, b in zip(idx, betas):
            item = {"index": i, **_rational_json(b)}
            if dec is not None:
                item["decimal"] = format_decimal(b, dec)
            items.append(item)
        text = _json_text(items)
    elif args.format == "csv":
        header = ["index", "numerator", "denominator"] + (["decimal"] if dec is not None else [])
        rows = [[i, b.numerator, b.denominator] + ([format_decimal(b, dec)] if dec is not None else [])
                for i, b in zip(idx, betas)]
        text = _csv_text(header, rows)
    else:
        lines = [str(b) + (f" {format_decimal(b, dec)}" if dec is not None else "") for b in betas]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_landau(args) -> int:
    if args.n < 0:
        raise _Usage("n must be nonnegative")
    g = landau_exact(args.n)
    if args.format == "json":
        obj = {"n": args.n, **_rational_json(g)}
        if args.decimal is not None:
            obj["decimal"] = format_decimal(g, args.decimal, strip=True)
        text = _json_text(obj)
    elif args.format == "csv":
        header = ["n", "numerator", "denominator"] + (["decimal"] if args.decimal is not None else [])
        row = [args.n, g.numerator, g.denominator]
        if args.decimal is not None:
            row.append(format_decimal(g, args.decimal, strip=True))
        text = _csv_text(header, [row])
    elif args.decimal is not None:
        text = format_decimal(g, args.decimal, strip=True) + "\n"
    else:
        text = f"{g}\n"
    _emit(text, args.out)
    return 0


# per-check defaults for flags left unset
_DEFAULTS = {
    "thm1": {"n_max": 1000, "l_max": 20},
    "thm2": {"n_max": 1000, "l_max": 20},
    "thm3": {"n_max": 1000, "m_max": 10, "k_max": 10},
    "lemma22": {"k_max": 50},
    "lemma23": {"l_max": 20},
    "rho-sandwich": {"k_max": 50},
    "classical": {"n_max": 1000},
    "granath": {"m_max": 12, "n_max": 500},
}


def _run_check(args, policy: PrecisionPolicy) -> verify.VerificationReport:
    name = args.check
    opt = dict(_DEFAULTS[name])
    for key in ("n_max", "l_max", "k_max", "m_max"):
        if getattr(args, key) is not None:
            opt[key] = getattr(args, key)
    if name == "thm1":
        return verify.check_thm1(opt["n_max"], opt["l_max"], policy)
    if name == "thm2":
        return verify.check_thm2(opt["n_max"], opt["l_max"], policy)
    if name == "thm3":
        return verify.check_thm3(opt["n_max"], opt["m_max"], opt["k_max"], policy)
    if name == "lemma22":
        return verify.check_lemma22(opt["k_max"], policy)
    if name == "lemma23":
        return verify.check_lemma23(opt["l_max"], args.s_span)
    if name == "rho-sandwich":
        return verify.check_rho_sandwich(args.k_min, opt["k_max"], policy)
    if name == "classical":
        return verify.check_classical(opt["n_max"], policy)
    return verify.check_granath(opt["m_max"], opt["n_max"], policy)


def _report_text(report: verify.VerificationReport) -> str:
    s = report.summary
    lines = []
    if report.conjecture:
        lines.append("CONJECTURE (report only; a fail is a finding, not an error)")
    lines.append(f"check {report.check_name}: pass={s['pass']} fail={s['fail']} "
                 f"unknown={s['unknown']} total={s['total']}")
    if report.table:
        lines.append("k\tratio\tbound")
        bound = format_decimal(verify.lemma22_bound(128).mid, 2)
        lines.extend(f"{row['k']}\t{row['ratio']}\t{bound}" for row in report.table)
    for r in report.results:
        point = ",".join(str(x) for x in r.point)
        lines.append(f"{point}\t{r.status.value}\t{r.precision_used}\t{r.witness}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    policy = _policy(args)
    report = _run_check(args, policy)
    if args.format == "json":
        text = _json_text(report.to_dict())
    elif args.format == "csv":
        rows = [[" ".join(str(x) for x in r.point), r.status.value, r.precision_used, r.witness]
                for r in report.results]
        text = _csv_text(["point", "status", "precision", "witness"], rows)
    else:
        text = _report_text(report)
    _emit(text, args.out)
    if report.conjecture:
        return 0
    return 0 if report.ok else 1


def cmd_plotdata(args) -> int:
    if args.l < 1:
        raise _Usage("--l must be at least 1")
    rows = verify.figure1_data(args.l, args.n_max, _policy(args))
    digits = args.decimal if args.decimal is not None else 20
    out = [[r.n, format_decimal(r.N, 2, strip=True), format_decimal(r.ratio.mid, digits),
            format_radius(r.ratio.rad)] for r in rows]
    _emit(_csv_text(["n", "N", "ratio_mid", "ratio_rad"], out), args.out)
    return 0


def cmd_oracles(args) -> int:
    if args.k_max < 1:
        raise _Usage("--k-max must be at least 1")
    from_series = rho_series_table(args.k_max)
    rows, mismatch = [], None
    for k in range(1, args.k_max + 1):
        rec = default_table.beta(2 * k)
        det = beta_det(2 * k)
        sign = 1 if k % 2 else -1
        ser = sign * from_series[k] * factorial(2 * k - 1)
        agree_det, agree_ser = det == rec, ser == rec
        if mismatch is None and not (agree_det and agree_ser):
            mismatch = k
        rows.append((k, rec, agree_det, agree_ser))
    if args.format == "json":
        text = _json_text([{"k": k, "index": 2 * k, **_rational_json(b), "determinant": d, "series": s}
                           for k, b, d, s in rows])
    elif args.format == "csv":
        text = _csv_text(["k", "beta", "recurrence", "determinant", "series"],
                         [[k, str(b), "ok", "ok" if d else "MISMATCH", "ok" if s else "MISMATCH"]
                          for k, b, d, s in rows])
    else:
        lines = ["k\tbeta_2k (recurrence)\tdeterminant\tseries"]
        lines += [f"{k}\t{b}\t{'agree' if d else 'MISMATCH'}\t{'agree' if s else 'MISMATCH'}"
                  for k, b, d, s in rows]
        lines.append("all three agree" if mismatch is None else f"first mismatch at k={mismatch}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if mismatch is not None:
        print(f"oracle disagreement at k={mismatch}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="landaukit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=FORMATS):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--decimal", type=int, default=None, metavar="DIGITS")

    def precision(p):
        p.add_argument("--prec", type=int, default=None,
                       help="starting precision in bits (default: $LANDAUKIT_PREC or 128)")
        p.add_argument("--prec-max", type=int, default=8192)

    p = sub.add_parser("coeffs", help="exact beta_2, beta_4, ...")
    p.add_argument("--count", type=int, default=7)
    common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("landau", help="the Landau constant G_n")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_landau)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("check", choices=CHECKS)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--l-max", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--k-min", type=int, default=10)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--s-span", type=int, default=100)
    precision(p)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plotdata", help="CSV of eps_l(N) / (beta_2l / N^2l)")
    p.add_argument("--l", type=int, default=2)
    p.add_argument("--n-max", type=int, default=30)
    precision(p)
    p.add_argument("--out", default=None)
    p.add_argument("--decimal", type=int, default=None, metavar="DIGITS")
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("oracles", help="compare recurrence, determinant and series routes")
    p.add_argument("--k-max", type=int, default=25)
    common(p)
    p.set_defaults(func=cmd_oracles)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"landaukit: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"landaukit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
