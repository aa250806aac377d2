"""Command line interface.

Subcommands: parse, cable, invariants, check-cable, render, verify-all,
batch, regen-golden.  Reports are JSON on stdout; SVG goes to --out.
Exit codes: 0 success, 2 parse error, 3 invalid parameters, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from .cabling import CableParamError, CableParams, cable_geometric, cable_merge
from .curvefile import CurveFileError, deserialize, load, serialize
from .invariants import invariant_report, verify_cabling_formulas
from .multicurve import Multicurve, word_sets_equal
from .obstructions import obstruction_report
from .render import RenderOptions, render_cable_stages, render_svg, render_tiling
from .words import WordError, parse_word

EXIT_PARSE = 2
EXIT_PARAMS = 3
EXIT_VERIFY = 4

GOLDEN_ENV = "CABLE_CURVES_GOLDEN_DIR"


def golden_dir() -> str:
    here = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    return os.environ.get(GOLDEN_ENV, os.path.join(here, "golden"))


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str) -> Multicurve:
    try:
        _, mc = load(path)
        return mc
    except FileNotFoundError:
        raise _CliError(EXIT_PARSE, f"no such file: {path}") from None
    except (CurveFileError, WordError, ValueError) as exc:
        raise _CliError(EXIT_PARSE, str(exc)) from None


def cmd_parse(args) -> int:
    try:
        word = parse_word(args.word)
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out = {"normalized": word.text(), "letters": len(word.letters), "dimension": word.dim}
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_cable(args) -> int:
    mc = _load(args.input)
    try:
        CableParams.default(args.p, args.q)
    except CableParamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    results = {}
    if args.route in ("geometric", "both"):
        results["geometric"] = cable_geometric(mc, args.p, args.q)
    if args.route in ("merge", "both"):
        results["merge"] = cable_merge(mc, args.p, args.q)
    cabled = results.get("geometric") or results["merge"]
    name = f"cable-{args.p}-{args.q}"
    doc = serialize(cabled, name)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(doc)
    failures: List[str] = []
    if args.route == "both" and not word_sets_equal(results["geometric"], results["merge"]):
        failures.append("route mismatch: geometric and merge words differ")
    report = {
        "cable": json.loads(doc),
        "invariants": invariant_report(cabled).to_json_dict(),
        "shift": str(cabled.shift),
    }
    if args.verify:
        verification = verify_cabling_formulas(mc, args.p, args.q, cable=results.get("geometric"))
        report["verification"] = [
            {"name": c.name, "expected": c.expected, "computed": c.computed, "ok": c.ok}
            for c in verification.checks
        ]
        failures.extend(c.name for c in verification.failures())
    report["ok"] = not failures
    if failures:
        report["failures"] = failures
    print(json.dumps(report, sort_keys=True))
    return EXIT_VERIFY if failures else 0


def cmd_invariants(args) -> int:
    mc = _load(args.input)
    print(json.dumps(invariant_report(mc).to_json_dict(), sort_keys=True))
    return 0


def cmd_check_cable(args) -> int:
    mc = _load(args.input)
    rep = obstruction_report(mc, args.pmax)
    print(json.dumps(rep.to_json_dict(), sort_keys=True))
    return 0


def cmd_render(args) -> int:
    opts = RenderOptions(view=args.view, columns=args.columns, scale=args.scale)
    if args.view == "tiling":
        if args.p is None or args.q is None:
            print("error: tiling view needs --p and --q", file=sys.stderr)
            return EXIT_PARAMS
        try:
            data = render_tiling(args.p, args.q, opts)
        except (CableParamError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARAMS
    else:
        mc = _load(args.input)
        if args.stages:
            if args.p is None or args.q is None:
                print("error: --stages needs --p and --q", file=sys.stderr)
                return EXIT_PARAMS
            data = render_cable_stages(mc, args.p, args.q, opts)
        else:
            data = render_svg(mc, opts)
    with open(args.out, "wb") as f:
        f.write(data)
    print(json.dumps({"written": args.out, "bytes": len(data)}))
    return 0


def cmd_verify_all(args) -> int:
    from .acceptance import run_all

    ok = run_all()
    return 0 if ok else EXIT_VERIFY


def _batch_job(spec):
    path, p, q = spec
    mc = _load(path)
    cabled = cable_geometric(mc, p, q)
    return {
        "input": path,
        "p": p,
        "q": q,
        "invariants": invariant_report(cabled).to_json_dict(),
    }


def cmd_batch(args) -> int:
    try:
        grid = []
        for part in args.grid.split(";"):
            ps, qs = part.split(",")
            grid.append((int(ps), int(qs)))
            CableParams.default(int(ps), int(qs))
    except (ValueError, CableParamError) as exc:
        print(f"error: bad grid: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    jobs = [(path, p, q) for path in args.inputs for (p, q) in grid]
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        for result in pool.map(_batch_job, jobs):
            print(json.dumps(result, sort_keys=True))
    return 0


def cmd_regen_golden(args) -> int:
    from .golden import write_goldens

    written = write_goldens(args.dir or golden_dir())
    print(json.dumps({"written": written}, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cable-curves", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="normalize a word in the segment alphabet")
    p.add_argument("word")
    p.set_defaults(fn=cmd_parse)

    p = sub.add_parser("cable", help="cable a curve file")
    p.add_argument("input")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--route", choices=("geometric", "merge", "both"), default="geometric")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out", help="write the cabled curve file here")
    p.set_defaults(fn=cmd_cable)

    p = sub.add_parser("invariants", help="invariant report of a curve file")
    p.add_argument("input")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("check-cable", help="cabling obstruction report")
    p.add_argument("input")
    p.add_argument("--pmax", type=int, default=5)
    p.set_defaults(fn=cmd_check_cable)

    p = sub.add_parser("render", help="render a curve file (or a tiling) to SVG")
    p.add_argument("input", nargs="?")
    p.add_argument("--out", required=True)
    p.add_argument("--view", choices=("cylinder", "plane", "tiling"), default="cylinder")
    p.add_argument("--columns", type=int, default=3)
    p.add_argument("--scale", type=int, default=40)
    p.add_argument("--stages", action="store_true", help="staggered cable panels (needs --p/--q)")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("verify-all", help="run the acceptance suite")
    p.set_defaults(fn=cmd_verify_all)

    p = sub.add_parser("batch", help="cable many files over a grid, in parallel")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--grid", default="2,1;2,3;3,2")
    p.add_argument("--jobs", type=int, default=4)
    p.set_defaults(fn=cmd_batch)

    p = sub.add_parser("regen-golden", help="rewrite the golden files (explicit opt-in)")
    p.add_argument("--dir")
    p.set_defaults(fn=cmd_regen_golden)

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
