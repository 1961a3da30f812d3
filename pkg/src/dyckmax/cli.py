"""Command-line interface: ``dyckmax <command> [flags]``.

Every command builds an :class:`OutputRecord` and prints it as JSON (the full
record) or CSV (rows only).  Exact counts are emitted as decimal strings.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from . import asymptotics as asy
from . import deviations as dev
from . import exact_counts as ec
from . import sampler as smp
from . import spectral as sp
from .verify import run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
SCHEMA_VERSION = "1"


def encode_cell(value: Any) -> Any:
    """JSON-ready cell: finite floats stay numbers, non-finite become strings."""
    if isinstance(value, float) and not math.isfinite(value):
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def csv_cell(value: Any) -> str:
    value = encode_cell(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class OutputRecord:
    command: str
    params: Dict[str, Any]
    rows: List[Dict[str, Any]]
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "params": {k: encode_cell(v) for k, v in self.params.items()},
            "rows": [{k: encode_cell(v) for k, v in r.items()} for r in self.rows],
            "metadata": {"tool_version": __version__,
                         **{k: encode_cell(v) for k, v in self.metadata.items()}},
        }
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"

    def columns(self) -> List[str]:
        cols: List[str] = []
        for r in self.rows:
            cols.extend(k for k in r if k not in cols)
        return cols

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = self.columns()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in self.rows:
            w.writerow([csv_cell(r.get(c)) for c in cols])
        return buf.getvalue()


def _approx(v: int) -> str:
    return f"{v:.6e}" if v < 10 ** 300 else _big_sci(v)


def _big_sci(v: int) -> str:
    digits = str(v)
    return f"{digits[0]}.{digits[1:7]}e+{len(digits) - 1:02d}"


def _floats(text: str) -> List[float]:
    return [float(t) for t in text.split(",") if t.strip()]


def _ints(text: str) -> List[int]:
    return [int(t) for t in text.split(",") if t.strip()]


# -- commands ----------------------------------------------------------------

def cmd_count(args) -> OutputRecord:
    N = args.N
    n = args.n if args.n is not None else N + 1
    if N < 0 or n < 1:
        raise ValueError("need N >= 0 and n >= 1")
    methods = ["dp", "matrix", "spectral"] if args.method == "all" else [args.method]
    rows = []
    exact = {}
    for meth in methods:
        row: Dict[str, Any] = {"method": meth, "N": N, "n": n}
        if meth == "dp":
            exact[meth] = ec.count_bounded(N, n)
        elif meth == "matrix":
            exact[meth] = ec.count_bounded_matrix(N, n)
        if meth in exact:
            row["count"] = str(exact[meth])
            if args.approx:
                row["approx"] = _approx(exact[meth])
        else:
            try:
                row["value"] = sp.spectral_count(N, n)
            except sp.FloatRangeError:
                row["value"] = None
            row["log_value"] = sp.log_spectral_count(N, n)
        rows.append(row)
    meta: Dict[str, Any] = {}
    if args.method == "all":
        ref = exact["dp"]
        spec_val = rows[2].get("value")
        meta["exact_methods_agree"] = exact["dp"] == exact["matrix"]
        if spec_val is not None:
            rel = abs(spec_val - ref) / ref if ref else abs(spec_val)
            meta["spectral_rel_error"] = rel
    return OutputRecord("count", {"N": N, "n": n, "method": args.method}, rows, meta)


def cmd_dist(args) -> OutputRecord:
    N = args.N
    pmf = ec.max_height_pmf(N)
    total = ec.catalan(N)
    rows = []
    acc = 0
    for h, c in pmf.items():
        acc += c
        rows.append({"height": h, "count": str(c), "cdf_count": str(acc),
                     "denominator": str(total), "pmf": c / total, "cdf": acc / total})
    return OutputRecord("dist", {"N": N}, rows,
                        {"total_equals_catalan": acc == total})


def cmd_limit(args) -> OutputRecord:
    spec = asy.SeriesSpec(abs_tol=args.tol)
    rows = []
    if args.t:
        for t in _floats(args.t):
            ft = asy.f_of_t(t, spec)
            x = 1.0 / math.sqrt(2.0 * t)
            k = asy.k_of_x(x, spec)
            rows.append({"t": t, "x": x, "f": ft.value, "K": k.value,
                         "abs_diff": abs(ft.value - k.raw), "f_terms": ft.terms_used,
                         "K_terms": k.terms_used, "f_tail": ft.tail_bound,
                         "K_tail": k.tail_bound})
    else:
        grid = _floats(args.x) if args.x else [k / 10 for k in range(3, 31)]
        for x in grid:
            f = asy.f_of_x(x, spec)
            k = asy.k_of_x(x, spec)
            row = {"x": x, "f": f.value, "K": k.value, "abs_diff": abs(f.value - k.raw),
                   "f_terms": f.terms_used, "K_terms": k.terms_used,
                   "f_tail": f.tail_bound, "K_tail": k.tail_bound}
            if args.exact_N:
                n = asy.scaled_height_cap(args.exact_N, x)
                row["exact_n"] = n
                row["exact"] = asy.exact_scaled_cdf(args.exact_N, x, n)
            rows.append(row)
    params = {"x": args.x, "t": args.t, "exact_N": args.exact_N}
    return OutputRecord("limit", params, rows, {"tol": args.tol})


def _row(d: dev.RateDiagnostic) -> Dict[str, Any]:
    row = d.as_row()
    for key in ("lower_count", "exact_count", "upper_count"):
        if key in row:
            row[key] = str(row[key])
    return row


def cmd_deviation(args) -> OutputRecord:
    Ns = _ints(args.N)
    rows = []
    if args.regime == "moderate":
        ns = _ints(args.n) if args.n else []
        if not ns:
            raise ValueError("--n is required for the moderate regime")
        for n in ns:
            for N in Ns:
                row = _row(dev.md_rate_prelimit(N, n))
                row["fixed_n_limit"] = dev.md_fixed_n_limit(n)
                row["two_term_log"] = dev.md_asymptotic_log(N, n)
                row["log_ratio"] = sp.log_spectral_ratio(N, n)
                rows.append(row)
    elif args.regime == "gaussian":
        ns = _ints(args.n) if args.n else []
        if not ns or not args.x:
            raise ValueError("--n and --x are required for the gaussian regime")
        if len(ns) != len(Ns):
            raise ValueError("--N and --n lists must have the same length (paired)")
        for n, N in zip(ns, Ns):
            for x in _floats(args.x):
                rows.append(_row(dev.ld_gaussian_prelimit(N, n, x)))
            if n <= N:
                rows.append(_row(dev.gaussian_remark_prelimit(N, n)))
    else:
        if not args.x:
            raise ValueError("--x is required for the cramer regime")
        for N in Ns:
            for x in _floats(args.x):
                d = dev.cramer_prelimit(N, x)
                row = _row(d)
                row["degenerate"] = d.limit == -math.inf
                rows.append(row)
    params = {"regime": args.regime, "N": args.N, "n": args.n, "x": args.x}
    return OutputRecord("deviation", params, rows,
                        {"event": "max > m (strict), m = round half away from zero"})


def cmd_sample(args) -> OutputRecord:
    if args.draws < 1:
        raise ValueError("--draws must be >= 1")
    if not 0 <= args.seed < 2 ** 64:
        raise ValueError("--seed must be an unsigned 64-bit integer")
    table = smp.build_sampler(args.N)
    freqs = smp.empirical_max_distribution(table, args.draws, args.seed)
    pmf = ec.max_height_pmf(args.N)
    total = ec.catalan(args.N)
    rows = [{"height": h, "empirical": freqs[h], "exact": pmf[h] / total}
            for h in range(1, args.N + 1)]
    ks = smp.ks_distance(freqs, pmf, total)
    return OutputRecord("sample", {"N": args.N, "draws": args.draws}, rows,
                        {"seed": args.seed, "ks_distance": ks})


def cmd_verify(args) -> OutputRecord:
    checks = run_suite(args.suite)
    rec = OutputRecord("verify", {"suite": args.suite}, [c.as_row() for c in checks],
                       {"all_passed": all(c.passed for c in checks)})
    return rec


COMMANDS = {
    "count": cmd_count, "dist": cmd_dist, "limit": cmd_limit,
    "deviation": cmd_deviation, "sample": cmd_sample, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="json")
    common.add_argument("--tol", type=float, default=asy.DEFAULT_SPEC.abs_tol,
                        help="absolute truncation tolerance for series")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--approx", action="store_true",
                        help="add scientific-notation columns next to exact counts")

    p = argparse.ArgumentParser(prog="dyckmax",
                                description="Maximum height of uniform Dyck paths.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="|D_{2N,n}| by dp, matrix, spectral")
    c.add_argument("--N", type=int, required=True)
    c.add_argument("--n", type=int, default=None, help="strict height cap (default N+1)")
    c.add_argument("--method", choices=["dp", "matrix", "spectral", "all"], default="dp")

    d = sub.add_parser("dist", parents=[common], help="exact law of the maximum")
    d.add_argument("--N", type=int, required=True)

    lim = sub.add_parser("limit", parents=[common], help="f and K on a grid")
    g = lim.add_mutually_exclusive_group()
    g.add_argument("--x", help="comma-separated x grid (default 0.3..3.0)")
    g.add_argument("--t", help="comma-separated t grid")
    lim.add_argument("--exact-N", type=int, default=None,
                     help="also emit exact P_N(max < ceil(x sqrt(2N)))")

    dv = sub.add_parser("deviation", parents=[common], help="rate diagnostics")
    dv.add_argument("--regime", choices=["moderate", "gaussian", "cramer"], required=True)
    dv.add_argument("--N", required=True, help="comma-separated N values")
    dv.add_argument("--n", help="comma-separated n values")
    dv.add_argument("--x", help="comma-separated x values")

    s = sub.add_parser("sample", parents=[common], help="empirical law of the maximum")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--draws", type=int, default=10_000)

    v = sub.add_parser("verify", parents=[common], help="run invariant suites")
    v.add_argument("--suite", choices=["oracle", "spectral", "identity", "rates", "all"],
                   default="all")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = COMMANDS[args.command](args)
    except (ValueError, sp.FloatRangeError) as exc:
        print(f"dyckmax {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"dyckmax {args.command}: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    record.metadata.setdefault("tol", args.tol)
    record.metadata.setdefault("seed", args.seed)
    sys.stdout.write(record.to_csv() if args.format == "csv" else record.to_json())
    if args.command == "verify" and not record.metadata["all_passed"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
