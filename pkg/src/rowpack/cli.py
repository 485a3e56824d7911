"""Command-line surface: searches, range scans, reproduction reports, tools.

Range scans fan out over processes (--jobs, or the PACK_JOBS environment
variable); parallel and serial runs write byte-identical files.  Compactor
commands require an explicit seed.  Exit status is nonzero whenever a
reproduction report falls short.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import compactor, render, search, tables, theory


def _default_jobs() -> int:
    env = os.environ.get("PACK_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_search(args: argparse.Namespace) -> int:
    result = search.best(args.n, d_max=args.dmax)
    _emit(json.dumps(search.result_to_json(result), indent=2) + "\n", args.out)
    return 0


def cmd_range(args: argparse.Namespace) -> int:
    results = search.scan_range(args.n_lo, args.n_hi, d_max=args.dmax, jobs=args.jobs)
    lines = "".join(
        json.dumps(search.result_to_json(r), separators=(",", ":")) + "\n" for r in results
    )
    counts = {"regular": 0, "may_hole": 0, "must_hole": 0}
    for r in results:
        counts[r.classification.value] += 1
    summary = {"from": args.n_lo, "to": args.n_hi, "counts": counts,
               "irregular": counts["may_hole"] + counts["must_hole"]}
    if args.out:
        _emit(lines, args.out)
        print(json.dumps(summary))
    else:
        sys.stdout.write(lines)
        print(json.dumps(summary), file=sys.stderr)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    report = tables.reproduce(args.which, d_max=args.dmax)
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 0 if report.ok else 1


def cmd_irregular(args: argparse.Namespace) -> int:
    values = search.irregular_scan(args.n_lo, args.n_hi, d_max=args.dmax, jobs=args.jobs)
    _emit("".join(f"{v}\n" for v in values), args.out)
    return 0


def cmd_milestones(args: argparse.Namespace) -> int:
    report = search.milestones(args.n_hi, d_max=args.dmax, jobs=args.jobs)
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 0


def cmd_aspect(args: argparse.Namespace) -> int:
    results = search.scan_range(1, args.n_hi, d_max=args.dmax, jobs=args.jobs)
    _emit(render.aspect_scatter_csv(results), args.out)
    return 0


def cmd_theory(args: argparse.Namespace) -> int:
    payload = {
        "waste": theory.waste_constants().to_json(),
        "densities": theory.reference_densities(),
        "smallest_two_row_m": theory.smallest_two_row_m(),
        "convergents": [c.to_json() for c in theory.convergents(args.kmax)],
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_compact(args: argparse.Namespace) -> int:
    if args.seeds is None and args.seed is None:
        print("compact requires an explicit --seed or --seeds", file=sys.stderr)
        return 2
    if args.seeds is not None:
        report = compactor.best_of(args.n, args.seeds)
        print(json.dumps(report.to_json(), indent=2))
        run = report.run
    else:
        run = compactor.compact(compactor.CompactorParams(n=args.n, seed=args.seed))
        print(json.dumps({
            "n": args.n, "seed": args.seed, "density": run.density,
            "moves_accepted": run.moves_accepted, "terminated": run.terminated.value,
        }, indent=2))
    if args.out:
        if args.format == "json":
            _emit(json.dumps(run.realization.to_json()) + "\n", args.out)
        else:
            _emit(run.trace_csv(), args.out)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    result = search.best(args.n, d_max=args.dmax)
    if not (0 <= args.variant < len(result.argmin)):
        print(f"variant must be in 0..{len(result.argmin) - 1}", file=sys.stderr)
        return 2
    svg = render.to_svg(result.argmin[args.variant].coordinates())
    _emit(svg, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rowpack",
        description="Minimum-area rectangles for n unit circles: exact class search and tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("--dmax", type=int, default=5, help="max monovacancies (default 5)")
        p.add_argument("--out", type=str, default=None, help="output path (default stdout)")
        return p

    p = add("search", cmd_search, "best packing for one n (JSON)")
    p.add_argument("--n", type=int, required=True)

    p = add("range", cmd_range, "scan [from, to]: JSONL results plus summary")
    p.add_argument("--from", dest="n_lo", type=int, required=True)
    p.add_argument("--to", dest="n_hi", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())

    p = add("table", cmd_table, "reproduction report against a published table")
    p.add_argument("--which", type=int, choices=(1, 2), required=True)

    p = add("irregular", cmd_irregular, "n values whose optimum may/must have holes")
    p.add_argument("--from", dest="n_lo", type=int, default=1)
    p.add_argument("--to", dest="n_hi", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())

    p = add("milestones", cmd_milestones, "smallest n per monovacancy landmark")
    p.add_argument("--to", dest="n_hi", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())

    p = add("aspect", cmd_aspect, "aspect-ratio scatter CSV for hex optima")
    p.add_argument("--to", dest="n_hi", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs())

    p = add("theory", cmd_theory, "closed-form constants and convergents (JSON)")
    p.add_argument("--kmax", type=int, default=3)

    p = add("compact", cmd_compact, "stochastic compactor run(s)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help="single-run seed")
    p.add_argument("--seeds", type=int, default=None, help="best-of seed count")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="--out content: trace CSV or final packing JSON")

    p = add("render", cmd_render, "SVG of a best packing")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", type=int, default=0, help="argmin index (default 0)")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
