"""Command-line harness.

Subcommands:
  run        execute a matrix of seeded cells and write a results CSV
  compare    rank-sum comparison of strategies inside a results CSV
  pf-sample  emit a true-front point cloud for a problem
  bench      time the compiled eigendecomposition against the pure fallback
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .backends import available_backends, get_backend
from .bench import (
    SCHEMA_VERSION,
    expand_config,
    read_csv,
    run_matrix,
    summarize,
    write_csv,
)
from .core import ContractError
from .problems import PROBLEM_NAMES, default_dimension, make_problem
from .rng import RngStream


def _int_list(text: str) -> list:
    return [int(tok) for tok in text.split(",") if tok != ""]


def _str_list(text: str) -> list:
    return [tok.strip() for tok in text.split(",") if tok.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maodpp", description=__doc__)
    parser.add_argument(
        "--version",
        action="version",
        version=f"maodpp {__version__} (csv schema {SCHEMA_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run seeded optimization cells, write CSV")
    p_run.add_argument("--config", help="JSON config file; flags below override its keys")
    p_run.add_argument("--problem", help="comma-separated problem names")
    p_run.add_argument("--objectives", help="comma-separated objective counts")
    p_run.add_argument("--strategy", help="comma-separated subset of dpp,kdpp,uniform")
    p_run.add_argument("--kernel", help="similarity mode: cos or expneg")
    p_run.add_argument("--seed", help="comma-separated seed list or a single count with 'n:'")
    p_run.add_argument("--evals", type=int, help="evaluation budget per run")
    p_run.add_argument("--pop-size", type=int, help="population size override")
    p_run.add_argument("--out", default="results.csv", help="output CSV path")
    p_run.add_argument("--out-dir", help="directory for per-run trace JSON files")
    p_run.add_argument("--parallel", type=int, metavar="N", help="run cells in N worker processes")

    p_cmp = sub.add_parser("compare", help="rank-sum strategy comparison from a results CSV")
    p_cmp.add_argument("--in", dest="path", required=True, help="results CSV")
    p_cmp.add_argument("--baseline", default="dpp", help="baseline strategy")
    p_cmp.add_argument("--alpha", type=float, default=0.05)
    p_cmp.add_argument("--metric", default="igd", choices=("igd", "hv"))

    p_pf = sub.add_parser("pf-sample", help="sample the true front of a problem")
    p_pf.add_argument("--problem", required=True, choices=PROBLEM_NAMES)
    p_pf.add_argument("--objectives", type=int, required=True)
    p_pf.add_argument("--n", type=int, default=5000)
    p_pf.add_argument("--dimension", type=int, help="decision-space size (default rule otherwise)")
    p_pf.add_argument("--seed", type=int, default=0)
    p_pf.add_argument("--out", required=True, help="output CSV path")

    p_bench = sub.add_parser("bench", help="compare eigendecomposition backends")
    p_bench.add_argument("--sizes", default="50,100,200", help="comma-separated matrix sizes")
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    return parser


def _seeds_from_flag(text: str):
    if text.startswith("n:"):
        return int(text[2:])
    return _int_list(text)


def _cmd_run(args) -> int:
    cfg = {}
    if args.config:
        with open(args.config) as fh:
            cfg = json.load(fh)
    if args.problem:
        cfg["problems"] = _str_list(args.problem)
    if args.objectives:
        cfg["objectives"] = _int_list(args.objectives)
    if args.strategy:
        cfg["strategies"] = _str_list(args.strategy)
    if args.kernel:
        cfg["kernel"] = args.kernel
    if args.seed:
        cfg["seeds"] = _seeds_from_flag(args.seed)
    if args.evals:
        cfg["max_evals"] = args.evals
    if args.pop_size:
        cfg["pop_size"] = args.pop_size
    if args.out_dir:
        cfg["out_dir"] = args.out_dir

    cells = expand_config(cfg)
    records, failures = run_matrix(
        cells, parallel=args.parallel is not None, max_workers=args.parallel
    )
    write_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out}")
    for label, message in failures:
        print(f"cell failed: {label}: {message}", file=sys.stderr)
    return 0 if not failures else 1


def _cmd_compare(args) -> int:
    records = read_csv(args.path)
    result = summarize(records, baseline=args.baseline, alpha=args.alpha, metric=args.metric)
    print(result.to_markdown(metric=args.metric))
    return 0


def _cmd_pf_sample(args) -> int:
    d = args.dimension or default_dimension(args.problem, args.objectives)
    problem = make_problem(args.problem, args.objectives, d)
    pts = problem.pf_sample(args.n, RngStream(args.seed))
    header = ",".join(f"f{i + 1}" for i in range(args.objectives))
    with open(args.out, "w") as fh:
        fh.write(header + "\n")
        for row in np.asarray(pts):
            fh.write(",".join("%.10g" % v for v in row) + "\n")
    print(f"wrote {len(pts)} points to {args.out}")
    return 0


def _cmd_bench(args) -> int:
    names = available_backends()
    if len(names) < 2:
        print(f"only {names[0]} backend available; nothing to compare")
    sizes = _int_list(args.sizes)
    rng = np.random.default_rng(args.seed)
    print("size  backend    best_ms   max|dw|_vs_first")
    for n in sizes:
        base = rng.standard_normal((n, n))
        a = base @ base.T
        reference = None
        for name in names:
            fn = get_backend(name)
            best = float("inf")
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                w, v, _ = fn(a.copy())
                best = min(best, (time.perf_counter() - t0) * 1000.0)
            if reference is None:
                reference = np.sort(w)
                delta = 0.0
            else:
                delta = float(np.max(np.abs(np.sort(w) - reference)))
            print(f"{n:<5d} {name:<10s} {best:9.2f}   {delta:.3e}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "compare":
            return _cmd_compare(args)
        if args.command == "pf-sample":
            return _cmd_pf_sample(args)
        if args.command == "bench":
            return _cmd_bench(args)
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
