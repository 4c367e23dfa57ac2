"""``hsbound`` command-line interface.

Exit codes: 0 success, 1 a bound was numerically violated (a bug, never
expected for real data), 2 bad input or parameters.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from typing import Any, Optional, TextIO

from . import __version__
from .bounds import ProbabilitySplit, classical_bound, lemma_pq_terms, majindar_bound, sharp_bound
from .core_stats import (
    EPS_STD,
    Sample,
    chain_terms,
    mean,
    median,
    nonparam_skewness,
    stddev_population,
    stddev_sample,
)
from .errors import DegenerateSample, HSBoundError, InvalidRange, ParseError
from .extremal import extremal_z, rescale
from .verify import check_sample, random_search_max, two_block_sweep

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2

SWEEP_TOL = 1e-12
CEILING_TOL = 1e-9

_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_SEP = re.compile(r"[\s,]+")


def parse_dataset(text: str) -> list[float]:
    """Parse whitespace/comma separated decimals.

    A JSON document produced by ``hsbound extremal --json`` is also
    accepted; its ``results.values`` become the dataset.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
            values = doc["results"]["values"]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"JSON input has no results.values: {exc}") from None
        if not isinstance(values, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
        ):
            raise ParseError("results.values must be a list of numbers")
        out = [float(v) for v in values]
    else:
        out = []
        for tok in _SEP.split(stripped):
            if not tok:
                continue
            if not _NUMBER.fullmatch(tok):
                raise ParseError(f"not a decimal number: {tok!r}")
            out.append(float(tok))
    if not all(math.isfinite(v) for v in out):
        raise ParseError("values must be finite")
    if len(out) < 2:
        raise ParseError(f"need at least 2 values, got {len(out)}")
    return out


def _read_input(path: str, stdin: TextIO) -> Sample:
    if path == "-":
        text = stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return Sample(parse_dataset(text))


def _fmt(x: float, digits: int) -> float:
    return float(f"{x:.{digits}g}")


def _round(obj: Any, digits: int) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return _fmt(obj, digits) if math.isfinite(obj) else str(obj)
    if isinstance(obj, dict):
        return {k: _round(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v, digits) for v in obj]
    return obj


def _human(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_human(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for row in val:
                lines.append(pad + "  - " + ", ".join(f"{k}={_scalar_text(v)}" for k, v in row.items()))
        else:
            lines.append(f"{pad}{key}: {_scalar_text(val)}")
    return lines


def _scalar_text(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, list):
        return " ".join(_scalar_text(x) for x in v)
    return str(v)


def render(doc: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(_round(doc, 15), indent=2) + "\n"
    return "\n".join(_human(doc)) + "\n"


def _document(command: str, inputs: dict, results: dict) -> dict:
    return {"command": command, "version": __version__, "inputs": inputs, "results": results}


def _require_population(args) -> None:
    if args.divisor != "n":
        raise HSBoundError(
            f"'{args.command}' checks bounds proved for divisor n; --divisor {args.divisor} is not allowed"
        )


# ---------------------------------------------------------------------------
# commands; each returns (document, exit code)


def cmd_stats(args, stdin: TextIO):
    s = _read_input(args.input, stdin)
    if args.divisor == "n":
        sd = stddev_population(s)
    else:
        sd = stddev_sample(s)
    t = chain_terms(s)
    results = {
        "n": s.n,
        "mean": mean(s),
        "sd": sd,
        "divisor": args.divisor,
        "median": median(s),
    }
    if sd > 0:
        results["ratio"] = nonparam_skewness(s) if args.divisor == "n" else (median(s) - mean(s)) / sd
        results["degenerate"] = False
    else:
        results["ratio"] = None
        results["degenerate"] = True
    results["chain_terms"] = {"t1": t.t1, "t2": t.t2, "t3": t.t3, "t4": t.t4}
    return _document("stats", {"input": args.input, "divisor": args.divisor}, results), EXIT_OK


def _report_dict(rep) -> dict:
    return {
        "n": rep.n,
        "ratio": rep.ratio,
        "classical": rep.classical,
        "sharp": rep.sharp,
        "slack": rep.slack,
        "is_extremal": rep.is_extremal,
        "case_label": rep.case_label.value if rep.case_label is not None else None,
        "within_classical": rep.within_classical,
        "within_sharp": rep.within_sharp,
    }


def cmd_check(args, stdin: TextIO):
    _require_population(args)
    s = _read_input(args.input, stdin)
    rep = check_sample(s)
    code = EXIT_OK if rep.holds else EXIT_VIOLATION
    return _document("check", {"input": args.input}, _report_dict(rep)), code


def cmd_extremal(args, stdin: TextIO):
    _require_population(args)
    z = extremal_z(args.n, args.sign)
    s = rescale(z, args.location, args.scale)
    ratio = nonparam_skewness(s)
    target = args.sign * sharp_bound(args.n)
    results = {
        "n": args.n,
        "sign": args.sign,
        "values": s.values.tolist(),
        "ratio": ratio,
        "sharp": sharp_bound(args.n),
        "verified": abs(ratio - target) <= EPS_STD,
    }
    inputs = {"n": args.n, "sign": args.sign, "location": args.location, "scale": args.scale}
    code = EXIT_OK if results["verified"] else EXIT_VIOLATION
    return _document("extremal", inputs, results), code


def cmd_sweep(args, stdin: TextIO):
    _require_population(args)
    if args.nmin < 3 or args.nmax < args.nmin:
        raise InvalidRange(f"need 3 <= nmin <= nmax, got nmin={args.nmin}, nmax={args.nmax}")
    rows = []
    for n in range(args.nmin, args.nmax + 1):
        sw = two_block_sweep(n)
        bound = sharp_bound(n)
        rows.append(
            {
                "n": n,
                "sharp": bound,
                "sweep_max": sw.max_ratio,
                "j_star": sw.j_star,
                "diff": abs(sw.max_ratio - bound),
            }
        )
    passed = all(r["diff"] <= SWEEP_TOL for r in rows)
    results = {"rows": rows, "tolerance": SWEEP_TOL, "pass": passed}
    code = EXIT_OK if passed else EXIT_VIOLATION
    return _document("sweep", {"nmin": args.nmin, "nmax": args.nmax}, results), code


def cmd_optimize(args, stdin: TextIO):
    _require_population(args)
    res = random_search_max(args.n, args.restarts, args.iters, args.seed)
    bound = sharp_bound(args.n)
    gap = bound - res.best_ratio
    status = "FAIL" if gap < -CEILING_TOL else "PASS"
    results = {
        "n": args.n,
        "best_ratio": res.best_ratio,
        "sharp": bound,
        "gap": gap,
        "best_restart": res.best_restart,
        "best_z": res.best_z.z.tolist(),
        "status": status,
    }
    inputs = {"n": args.n, "restarts": args.restarts, "iters": args.iters, "seed": args.seed}
    code = EXIT_OK if status == "PASS" else EXIT_VIOLATION
    return _document("optimize", inputs, results), code


def cmd_prob(args, stdin: TextIO):
    _require_population(args)
    ps = ProbabilitySplit(args.p, args.q)
    terms = lemma_pq_terms(ps)
    results = {
        "majindar_bound": majindar_bound(ps),
        "lhs": terms.lhs,
        "a1": terms.a1,
        "a2": terms.a2,
        "a3": terms.a3,
        "min_rhs": terms.min_rhs,
        "lhs_le_min": terms.lhs <= terms.min_rhs + 1e-12,
        "classical": classical_bound(),
    }
    code = EXIT_OK if results["lhs_le_min"] else EXIT_VIOLATION
    return _document("prob", {"p": args.p, "q": args.q}, results), code


COMMANDS = {
    "stats": cmd_stats,
    "check": cmd_check,
    "extremal": cmd_extremal,
    "sweep": cmd_sweep,
    "optimize": cmd_optimize,
    "prob": cmd_prob,
}


def _sign(text: str) -> int:
    if text in ("+1", "1", "+"):
        return 1
    if text in ("-1", "-"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be +1 or -1, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--divisor", choices=["n", "n-1"], default="n", help="sd divisor (default n)")

    parser = argparse.ArgumentParser(
        prog="hsbound", description="Sharp bounds on |median - mean| / sd."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="summary statistics and deviation chain")
    p.add_argument("--input", default="-", help="data file, or - for stdin")

    p = sub.add_parser("check", parents=[common], help="check a dataset against the bounds")
    p.add_argument("--input", default="-", help="data file, or - for stdin")

    p = sub.add_parser("extremal", parents=[common], help="emit a dataset attaining the bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sign", type=_sign, default=1, help="+1 (median above mean) or -1")
    p.add_argument("--location", type=float, default=0.0)
    p.add_argument("--scale", type=float, default=1.0)

    p = sub.add_parser("sweep", parents=[common], help="two-block oracle over a range of n")
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=20)

    p = sub.add_parser("optimize", parents=[common], help="randomized search for the maximum ratio")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("prob", parents=[common], help="Majindar bound and the (p, q) lemma terms")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    return parser


def main(
    argv: Optional[list[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        doc, code = COMMANDS[args.command](args, stdin)
    except DegenerateSample as exc:
        print(f"hsbound {args.command}: degenerate sample: {exc}", file=stderr)
        return EXIT_INPUT
    except HSBoundError as exc:
        print(f"hsbound {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INPUT
    stdout.write(render(doc, args.json))
    if code == EXIT_VIOLATION:
        print(f"hsbound {args.command}: bound violated beyond tolerance", file=stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
