"""
Command line front end: ``curve``, ``omega``, ``counts`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .coeff_ring import ConfigurationError, WeightConfig, WeightSeries
from .curve import MODELS, CurveError, build_curve
from .extract import InsufficientTruncationError, counts, require_horizon
from .tr_engine import DEFAULT_SIGN, TopologicalRecursion, UnstableTopologyError
from .verify import SUITES, VerifyBounds, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_WEIGHT = re.compile(r"^t(\d+)(?:=([-+]?\d+(?:/\d+)?))?$")


class UsageError(Exception):
    pass


def parse_weights(specs: Sequence[str]) -> Tuple[Tuple[int, ...], Dict[int, Fraction]]:
    """``["t4", "t6=1/2"]`` (or comma-joined) -> ``((4, 6), {4: 1, 6: 1/2})``."""
    scales: Dict[int, Fraction] = {}
    for spec in specs:
        for item in filter(None, (s.strip() for s in spec.split(","))):
            m = _WEIGHT.match(item)
            if not m:
                raise UsageError("cannot parse weight %r (expected t<2k> or t<2k>=<rational>)" % item)
            w = int(m.group(1))
            if w < 2 or w % 2:
                raise UsageError("weight t%d is not allowed: face degrees must be even and >= 2" % w)
            if w in scales:
                raise UsageError("weight t%d given twice" % w)
            scales[w] = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if not scales[w]:
                raise UsageError("weight t%d has zero scaling; leave it out instead" % w)
    return tuple(sorted(scales)), scales


def rescale(series: WeightSeries, scales: Dict[int, Fraction]) -> WeightSeries:
    """Substitute ``t_w -> s_w t_w``."""
    if all(s == 1 for s in scales.values()):
        return series
    factors = [scales[w] for w in series.config.weights]
    out = {}
    for e, c in series.items():
        for f, k in zip(factors, e):
            c *= f ** k
        out[e] = c
    return WeightSeries(series.config, out)


def _series_json(s: WeightSeries) -> List[Dict]:
    items = sorted(s.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return [{"coefficient": str(c), "exponents": list(e)} for e, c in items]


def _wrap(cs: str) -> str:
    return "(%s)" % cs if (" " in cs or "/" in cs) else cs


def _laurent_text(terms: Dict[int, str]) -> str:
    """Laurent polynomial in ``z``, positive powers first, then ``1/z^k``, then the constant."""
    order = sorted(k for k in terms if k > 0) + sorted((k for k in terms if k < 0), reverse=True)
    order += [0] if 0 in terms else []
    parts = []
    for k in order:
        c = terms[k]
        if k == 0:
            parts.append(c)
            continue
        mono = ("z" if k == 1 else "z^%d" % k) if k > 0 else ("1/z" if k == -1 else "1/z^%d" % -k)
        if c == "1":
            parts.append(mono)
        elif c == "-1":
            parts.append("-" + mono)
        elif k > 0:
            parts.append("%s*%s" % (_wrap(c), mono))
        else:
            parts.append("%s/%s" % (_wrap(c), mono[2:]))
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# -- commands ---------------------------------------------------------------

def _config(args) -> Tuple[WeightConfig, Dict[int, Fraction]]:
    weights, scales = parse_weights(args.weights or [])
    if args.trunc < 0:
        raise UsageError("--trunc must be >= 0")
    return WeightConfig(weights, args.trunc), scales


def cmd_curve(args) -> Tuple[int, str]:
    cfg, scales = _config(args)
    curve = build_curve(args.model, cfg)
    r = lambda s: rescale(s, scales)
    gsq = r(curve.gamma_sq)
    u = [r(c) for c in curve.u_hat]
    a, b = (r(c) for c in curve.branch_points)
    flat = gsq == 1
    if curve.gamma_power == 0:
        x_terms = {1: gsq, 0: gsq * 2, -1: gsq}
        y_num = [WeightSeries.zero(cfg)] + u
    else:
        x_terms = {1: WeightSeries.one(cfg), -1: WeightSeries.one(cfg)}
        y_num = None
    if args.format == "json":
        doc = {
            "model": curve.model,
            "weights": ["t%d" % w for w in cfg.weights],
            "scales": {"t%d" % w: str(scales[w]) for w in cfg.weights},
            "trunc": cfg.order,
            "gamma_sq": _series_json(gsq),
            "u_over_gamma": [_series_json(c) for c in u],
            "x": {"gamma_power": curve.gamma_power,
                  "laurent": {str(k): _series_json(v) for k, v in sorted(x_terms.items())}},
            "branch_points": [_series_json(a), _series_json(b)],
        }
        if y_num is not None:
            doc["y"] = {"numerator": [_series_json(c) for c in y_num], "denominator": "1+z"}
        else:
            doc["y"] = {"gamma_power": 1,
                        "laurent": {str(2 * k + 1): _series_json(c) for k, c in enumerate(u)}}
        return EXIT_OK, json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = ["model: %s" % curve.model,
             "weights: %s" % (", ".join("t%d=%s" % (w, scales[w]) for w in cfg.weights) or "none"),
             "truncation: %d" % cfg.order,
             "gamma^2 = %s" % gsq]
    for k, c in enumerate(u):
        lines.append("u_%d / gamma = %s" % (2 * k + 1, c))
    x_txt = _laurent_text({k: str(v) for k, v in x_terms.items()})
    if curve.gamma_power:
        y_txt = _laurent_text({2 * k + 1: str(c) for k, c in enumerate(u) if c})
        lines.append("x = gamma*(%s)" % x_txt)
        lines.append("y = gamma*(%s)" % y_txt)
        lines.append("branch points: x(+1) = gamma*(%s), x(-1) = gamma*(%s)" % (a, b))
    else:
        x_txt = "z + 1/z + 2" if flat else "gamma^2*(z + 1/z + 2)"
        num = _laurent_text({i: str(c) for i, c in enumerate(y_num) if c})
        lines.append("x = %s" % x_txt)
        lines.append("y = %s/(1+z)" % _wrap(num))
        lines.append("branch points: x(+1) = %s, x(-1) = %s" % (a, b))
    return EXIT_OK, "\n".join(lines) + "\n"


def _omega_terms_json(form, scales):
    out = []
    for key in sorted(form.terms):
        out.append({"poles": [[b, k] for b, k in key], "series": _series_json(rescale(form.terms[key], scales))})
    return out


def cmd_omega(args) -> Tuple[int, str]:
    cfg, scales = _config(args)
    if 2 * args.g - 2 + args.n <= 0 or args.g < 0 or args.n < 1:
        raise UsageError(
            "omega_{%d,%d} is unstable: the disk and cylinder have no recursion output; "
            "use 'counts --g 0' with one or two lengths (counts_disk / counts_cylinder)" % (args.g, args.n))
    tr = TopologicalRecursion(build_curve(args.model, cfg))
    form = tr.omega(args.g, args.n).map(lambda c: rescale(c, scales))
    if args.format == "json":
        doc = {"model": args.model, "g": args.g, "n": args.n,
               "weights": ["t%d" % w for w in cfg.weights], "trunc": cfg.order,
               "sign": tr.sign, "terms": _omega_terms_json(form, {})}
        return EXIT_OK, json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["poles"] + ["t^" + ",".join(map(str, e)) for e in cfg.exponents()])
        for key in sorted(form.terms):
            c = form.terms[key]
            w.writerow([" ".join("%+d:%d" % d for d in key)] + [str(c[e]) for e in cfg.exponents()])
        return EXIT_OK, buf.getvalue()
    return EXIT_OK, str(form) + "\n"


def _lengths(specs: Sequence[str]) -> List[int]:
    out = []
    for spec in specs:
        for item in filter(None, spec.split(",")):
            try:
                v = int(item)
            except ValueError:
                raise UsageError("boundary length %r is not an integer" % item)
            if v < 2 or v % 2:
                raise UsageError("boundary lengths must be even and >= 2, got %d" % v)
            out.append(v // 2)
    if not out:
        raise UsageError("--lengths needs at least one boundary length")
    return out


def _exp_label(cfg: WeightConfig, e) -> str:
    parts = []
    for w, k in zip(cfg.weights, e):
        if k:
            parts.append("t%d" % w if k == 1 else "t%d^%d" % (w, k))
    return "*".join(parts) or "1"


def cmd_counts(args) -> Tuple[int, str]:
    cfg, scales = _config(args)
    ls = _lengths(args.lengths)
    models = [m for spec in args.model.split(",") for m in [spec.strip()] if m]
    for m in models:
        if m not in MODELS:
            raise UsageError("unknown model %r" % m)
    tables = []
    engines = {}
    for m in models:
        for g in args.g_list:
            if g < 0:
                raise UsageError("genus must be >= 0")
            require_horizon("ordinary" if m == "ordinary" else "bipartite", g, ls, cfg)
            if m not in engines:
                engines[m] = TopologicalRecursion(build_curve(m, cfg))
            t = counts(engines[m], g, ls)
            tables.append((t, rescale(t.value, scales)))
    for t, v in tables:
        for e, c in v.items():
            if c.denominator != 1:
                raise ArithmeticError("non-integral count %s at %r in %s g=%d" % (c, e, t.model, t.genus))
    if args.format == "json":
        docs = []
        for t, v in tables:
            doc = t.to_json()
            doc["scales"] = {"t%d" % w: str(scales[w]) for w in cfg.weights}
            doc["series"] = [{"coefficient": str(c), "exponents": list(e)}
                             for e, c in sorted(v.items(), key=lambda kv: (sum(kv[0]), kv[0]))]
            docs.append(doc)
        body = docs[0] if len(docs) == 1 else docs
        return EXIT_OK, json.dumps(body, sort_keys=True, indent=2) + "\n"
    if args.format == "csv":
        # rows are monomials, columns are the requested tables
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["monomial"] + ["%s g=%d" % (t.model, t.genus) for t, _ in tables])
        for e in sorted(cfg.exponents(), key=lambda e: (sum(e), e)):
            w.writerow([_exp_label(cfg, e)] + [str(v[e]) for _, v in tables])
        return EXIT_OK, buf.getvalue()
    lines = []
    for t, v in tables:
        items = sorted(v.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        body = " + ".join(("%s" % c if not any(e) else
                           ("%s*%s" % (c, _exp_label(cfg, e)) if c != 1 else _exp_label(cfg, e)))
                          for e, c in items).replace("+ -", "- ") or "0"
        lines.append("%s g=%d lengths=%s: %s" % (t.model, t.genus, ",".join(map(str, t.lengths)), body))
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_verify(args) -> Tuple[int, str]:
    weights, scales = parse_weights(args.weights or ["t4"])
    if any(s != 1 for s in scales.values()):
        raise UsageError("verify works with formal weights only")
    suites = list(SUITES) if args.suite == "all" else [s for s in args.suite.split(",") if s]
    for s in suites:
        if s not in SUITES:
            raise UsageError("unknown suite %r (expected all or a comma list of %s)" % (s, ", ".join(SUITES)))
    sign = -DEFAULT_SIGN if args.inject_kernel_sign_fault else DEFAULT_SIGN
    bounds = VerifyBounds(max_g=args.max_g, max_n=args.max_n, trunc=args.trunc, weights=weights, sign=sign)
    report = run(suites, bounds)
    code = EXIT_OK if report["ok"] else EXIT_FAIL
    if args.format == "json":
        return code, json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines = []
    for suite, rep in report["suites"].items():
        for name, row in rep.items():
            extra = {k: v for k, v in row.items() if k != "ok" and v != ""}
            tail = "" if row["ok"] or not extra else "  " + json.dumps(extra, sort_keys=True)
            lines.append("%s  %-8s %s%s" % ("PASS" if row["ok"] else "FAIL", suite, name, tail))
    lines.append("%d passed, %d failed" % (report["passed"], report["failed"]))
    return code, "\n".join(lines) + "\n"


# -- parser -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trmaps", description="Exact topological recursion for map enumeration.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, trunc_default=0):
        sp.add_argument("--weights", nargs="*", default=[],
                        help="face weights, e.g. t4 t6=1/2 (comma lists also accepted)")
        sp.add_argument("--trunc", type=int, default=trunc_default, help="total degree truncation N")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    sp = sub.add_parser("curve", help="spectral curve data")
    sp.add_argument("--model", choices=MODELS, default="bipartite")
    common(sp)
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("omega", help="a stable omega_{g,n} in partial fractions")
    sp.add_argument("--model", choices=MODELS, default="bipartite")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_omega)

    sp = sub.add_parser("counts", help="map count tables")
    sp.add_argument("--model", default="bipartite", help="model or comma list of models")
    sp.add_argument("--g", dest="g_list", type=int, nargs="+", required=True, help="one or more genera")
    sp.add_argument("--lengths", nargs="+", required=True, help="boundary lengths 2l_1 ... 2l_n")
    common(sp)
    sp.set_defaults(func=cmd_counts)

    sp = sub.add_parser("verify", help="run the verification suites")
    sp.add_argument("--suite", default="all", help="all, or a comma list of %s" % ", ".join(SUITES))
    sp.add_argument("--max-g", type=int, default=2)
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--inject-kernel-sign-fault", action="store_true",
                    help="testing aid: negate the recursion kernel")
    common(sp, trunc_default=5)
    sp.set_defaults(func=cmd_verify, weights=None)
    return p


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify" and args.format == "csv":
            raise UsageError("verify supports text and json output")
        code, text = args.func(args)
    except UsageError as exc:
        print("trmaps: error: %s" % exc, file=stderr)
        return EXIT_USAGE
    except (ConfigurationError, CurveError, UnstableTopologyError, InsufficientTruncationError) as exc:
        print("trmaps: error: %s" % exc, file=stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
