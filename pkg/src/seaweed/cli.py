"""Command-line front end.

Subcommands: ``index`` (compute one index), ``render`` (ASCII/SVG
drawing), ``verify`` (exhaustive cross-method sweeps), ``census``
(Frobenius doubling census), ``family`` (Frobenius family generators).

Exit codes: 0 success; 2 parse/parameter error; 3 shape or size refusal
(formula does not match, drawing above the vertex bound, census above the
cost bound); 4 verification mismatch.  All output is deterministic given
(argv, seed); JSON is emitted with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import formulas, meander, oracle, reduction
from .core import (InvalidComposition, SeaweedSpec, SpecError, enumerate_specs,
                   parse_spec)
from .formulas import CensusBoundError, ThreeBlockParams
from .meander import RenderBoundError

AUTO_MEANDER_BOUND = 100_000  # cross-check meander only below this many vertices


def _emit(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# formula shape dispatch


def formula_index(spec: SeaweedSpec) -> Optional[int]:
    """Closed-form index when the spec matches a known shape, else None."""
    a, b, n = spec.top, spec.bottom, spec.n
    kind = spec.algebra_type
    if kind == "A":
        if len(a) == 2 and len(b) == 1:
            return formulas.index_A_twoblock(a[0], a[1])
        if len(a) == 1 and len(b) == 2:
            return formulas.index_A_twoblock(b[0], b[1])
        if len(a) == 2 and len(b) == 2:
            return formulas.index_A_threeblock(a[0], a[1], b[0], b[1])
        return None
    if kind in ("B", "C"):
        if len(b) == 0:
            return formulas.index_BC_parabolic(n, a)
        if len(a) == 0:
            return formulas.index_BC_parabolic(n, b)
        if len(a) == 1 and len(b) == 1:
            return formulas.index_C_twoblock(n, a[0], b[0])
        if len(a) == 2 and len(b) == 1:
            return formulas.index_BC_threeblock(ThreeBlockParams(a[0], a[1], b[0], n))
        if len(a) == 1 and len(b) == 2:
            return formulas.index_BC_threeblock(ThreeBlockParams(b[0], b[1], a[0], n))
        return None
    if kind == "D":
        if len(a) == 2 and len(b) == 1:
            return formulas.index_D_threeblock(ThreeBlockParams(a[0], a[1], b[0], n))
        if len(a) == 1 and len(b) == 2:
            return formulas.index_D_threeblock(ThreeBlockParams(b[0], b[1], a[0], n))
        for full, comp in ((a, b), (b, a)):
            if full.blocks == (n,) and len(comp) >= 2 and comp.total == n - 1 \
                    and all(x == comp[0] for x in comp.blocks[:-1]):
                return formulas.index_D_repeated(comp[0], comp[-1], len(comp) - 1)
        return None
    return None


# ---------------------------------------------------------------------------
# index


def cmd_index(args) -> int:
    spec = parse_spec(args.spec)
    trace = None
    if args.method == "reduce" or args.method == "auto":
        value, trace = reduction.reduce_index(spec)
        if args.method == "auto" and 2 * spec.n <= AUTO_MEANDER_BOUND:
            check = meander.index_from_meander(spec)
            if check != value:
                print(f"error: reduction gives {value} but the meander count "
                      f"gives {check} for {spec}", file=sys.stderr)
                return 4
    elif args.method == "meander":
        value = meander.index_from_meander(spec)
    else:  # formula
        maybe = formula_index(spec)
        if maybe is None:
            print(f"error: no closed formula matches the shape of {spec}",
                  file=sys.stderr)
            return 3
        value = maybe
    if args.json:
        payload = {"schema": 1, "spec": str(spec), "method": args.method,
                   "index": value}
        if args.trace and trace is not None:
            payload["trace"] = [s.as_dict() for s in trace.steps]
            payload["terminal"] = trace.terminal
        _emit(_dump_json(payload), args.output)
    else:
        out = f"{value}\n"
        if args.trace and trace is not None:
            out += trace.json_lines()
        _emit(out, args.output)
    return 0


# ---------------------------------------------------------------------------
# render


def cmd_render(args) -> int:
    spec = parse_spec(args.spec)
    graph = meander.build(spec)
    text = meander.render(graph, fmt=args.format, unit=args.unit)
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# verify


def _check_one(task) -> tuple[str, dict, bool]:
    spec_str, use_oracle, trials, seed, ambient_bound = task
    spec = parse_spec(spec_str)
    values: dict[str, Optional[int]] = {}
    values["reduce"], _ = reduction.reduce_index(spec)
    values["meander"] = meander.index_from_meander(spec)
    values["formula"] = formula_index(spec)
    if use_oracle and spec.ambient_size <= ambient_bound:
        values["oracle"] = oracle.oracle_index(
            spec, trials=trials, seed=seed, ambient_bound=ambient_bound).index
    else:
        values["oracle"] = None
    present = {v for v in values.values() if v is not None}
    return spec_str, values, len(present) == 1


def _pmap(fn, items, jobs):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(items) // (jobs * 16))
        return list(pool.map(fn, items, chunksize=chunk))


def run_sweep(bounds: list[tuple[str, int]], use_oracle: bool = False,
              trials: int = 3, seed: int = 0, jobs: int = 1,
              ambient_bound: int = oracle.DEFAULT_AMBIENT_BOUND) -> dict:
    """Enumerate every spec within the (type, max_n) bounds and compare all
    applicable methods; report in canonical enumeration order."""
    tasks = []
    for algebra_type, max_n in bounds:
        for n in range(1, max_n + 1):
            for spec in enumerate_specs(algebra_type, n):
                tasks.append((str(spec), use_oracle, trials, seed, ambient_bound))
    results = _pmap(_check_one, tasks, jobs)
    mismatches = [{"spec": s, "values": v} for s, v, ok in results if not ok]
    return {"schema": 1, "checked": len(results), "oracle": use_oracle,
            "trials": trials, "seed": seed,
            "mismatch_count": len(mismatches), "mismatches": mismatches}


def cmd_verify(args) -> int:
    types = ["A", "B", "C", "D"] if args.type == "all" else [args.type]
    report = run_sweep([(t, args.max_n) for t in types],
                       use_oracle=args.oracle, trials=args.trials,
                       seed=args.seed, jobs=args.jobs,
                       ambient_bound=args.ambient_bound)
    if args.json:
        _emit(_dump_json(report), args.output)
    else:
        lines = [f"checked {report['checked']} specs; "
                 f"{report['mismatch_count']} mismatches"]
        if report["mismatches"]:
            first = report["mismatches"][0]
            lines.append(f"first mismatch: {first['spec']} -> {first['values']}")
        _emit("\n".join(lines) + "\n", args.output)
    return 4 if report["mismatch_count"] else 0


# ---------------------------------------------------------------------------
# census


def cmd_census(args) -> int:
    report = formulas.frobenius_census(args.max_n, include_odd=args.odd,
                                       cost_limit=args.cost_limit)
    _emit(_dump_json(report), args.output)
    return 0


# ---------------------------------------------------------------------------
# family


def cmd_family(args) -> int:
    specs: list[SeaweedSpec] = []
    if args.kind == "chain":
        if not args.alphas:
            print("error: chain needs --alphas", file=sys.stderr)
            return 2
        alphas = [int(x) for x in args.alphas.split(",")]
        specs.append(formulas.frobenius_chain_family(alphas))
    elif args.kind == "padding":
        if not args.spec or args.t is None:
            print("error: padding needs --spec and --t", file=sys.stderr)
            return 2
        specs.append(formulas.padded_parabolic_family(parse_spec(args.spec), args.t))
    else:  # doubling
        if not args.source:
            print("error: doubling needs --from", file=sys.stderr)
            return 2
        src = parse_spec(args.source)
        value, _ = reduction.reduce_index(src)
        if value != 1:
            print(f"error: doubling needs a type-A spec of index 1, "
                  f"{src} has index {value}", file=sys.stderr)
            return 2
        specs.extend(formulas.frobenius_doubling(src))
    lines = []
    for spec in specs:
        value, _ = reduction.reduce_index(spec)
        lines.append(f"{spec} index={value}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seaweed",
        description="Index of seaweed subalgebras of the classical Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="compute the index of one seaweed")
    p.add_argument("spec", help="canonical syntax, e.g. C:200:15,185|17,61,117")
    p.add_argument("--method", choices=["auto", "meander", "reduce", "formula"],
                   default="auto")
    p.add_argument("--trace", action="store_true",
                   help="append the reduction trace as JSON lines")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("render", help="draw the meander")
    p.add_argument("spec")
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--unit", type=int, default=40, help="SVG spacing unit")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="exhaustive cross-method agreement sweep")
    p.add_argument("--type", choices=["A", "B", "C", "D", "all"], default="all")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--oracle", action="store_true",
                   help="include the matrix rank oracle")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ambient-bound", type=int,
                   default=oracle.DEFAULT_AMBIENT_BOUND,
                   help="skip the oracle above this ambient matrix size")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="Frobenius doubling census (JSON report)")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--odd", action="store_true",
                   help="also check odd type-D ranks (always empty)")
    p.add_argument("--cost-limit", type=int, default=2_000_000)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("family", help="generate Frobenius families")
    p.add_argument("kind", choices=["chain", "padding", "doubling"])
    p.add_argument("--alphas", help="comma-separated multipliers (chain)")
    p.add_argument("--spec", help="parabolic B/C spec to pad (padding)")
    p.add_argument("--t", type=int, help="padding repetitions")
    p.add_argument("--from", dest="source", help="index-1 type-A source (doubling)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, InvalidComposition, ValueError) as exc:
        if isinstance(exc, (RenderBoundError, CensusBoundError)):
            print(f"error: {exc}", file=sys.stderr)
            return 3
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
