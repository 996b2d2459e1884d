"""Benchmark harness: seeded run cells, CSV records, rank-sum comparisons.

A cell is one (problem, M, strategy, kernel, seed) combination. Cells are
independent and deterministic given their seed, so a matrix can run serial
or in a process pool and produce the same rows in the same order; only the
wall-time column is allowed to differ.
"""

from __future__ import annotations

import csv
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import ContractError
from .dpp import KERNEL_MODES
from .indicators import HV_SAMPLES, ReferenceSet, default_pop_size, hv, igd
from .moea import DEFAULT_KERNEL, STRATEGIES, AlgoConfig, run
from .problems import PROBLEM_NAMES, default_dimension, make_problem
from .rng import RngStream

SCHEMA_VERSION = "1"
CSV_FIELDS = ("problem", "M", "D", "N", "strategy", "kernel", "seed", "evals", "igd", "hv", "wall_ms")
_FLOAT_FIELDS = ("igd", "hv", "wall_ms")

# Fixed internal seeds keep reference sets and MC hypervolume deterministic
# across processes, which the serial-vs-parallel CSV identity relies on.
REFERENCE_SEED = 715
HV_SEED = 716

_REFERENCE_CACHE: dict = {}


def reference_size(m: int) -> int:
    return 5000 if m <= 5 else 10000


def reference_set(problem_name: str, m: int, d: int) -> ReferenceSet:
    key = (problem_name, m, d)
    if key not in _REFERENCE_CACHE:
        problem = make_problem(problem_name, m, d)
        pts = problem.pf_sample(reference_size(m), RngStream(REFERENCE_SEED))
        _REFERENCE_CACHE[key] = ReferenceSet(problem_name, m, np.asarray(pts, dtype=float))
    return _REFERENCE_CACHE[key]


def normalized_hv(f: np.ndarray, reference: ReferenceSet) -> float:
    """Hypervolume of nadir-normalized objectives against ref 1.1*(1,..,1).

    Reported on a 0..1 scale by dividing out the reference-box volume.
    """
    nadir = reference.points.max(axis=0)
    scale = np.where(nadir > 1e-12, nadir, 1.0)
    fn = np.asarray(f, dtype=float) / scale
    m = fn.shape[1]
    ref = np.full(m, 1.1)
    if m == 2:
        raw = hv(fn, ref, mode="exact")
    else:
        raw = hv(fn, ref, mode="mc", n_samples=HV_SAMPLES, rng=RngStream(HV_SEED))
    return raw / (1.1**m)


@dataclass(frozen=True)
class CellSpec:
    """Primitive-only description of one run, safe to ship to a worker."""

    problem: str
    m: int
    d: int
    n_pop: int
    strategy: str
    kernel: str
    seed: int
    max_evals: int = 100_000
    trace_every: int = 10
    out_dir: Optional[str] = None

    def label(self) -> str:
        return f"{self.problem}-m{self.m}-{self.strategy}-{self.kernel}-seed{self.seed}"


@dataclass(frozen=True)
class RunRecord:
    problem: str
    m: int
    d: int
    n_pop: int
    strategy: str
    kernel: str
    seed: int
    evals: int
    igd: float
    hv: float
    wall_ms: float
    trace_path: Optional[str] = None


def run_cell(cell: CellSpec) -> RunRecord:
    """Execute one cell and compute its final indicators."""
    problem = make_problem(cell.problem, cell.m, cell.d)
    ref = reference_set(cell.problem, cell.m, cell.d)
    metrics = None
    if cell.out_dir is not None:
        metrics = lambda pop: {"igd": float(igd(pop.f, ref))}
    cfg = AlgoConfig(
        problem=problem,
        n_pop=cell.n_pop,
        max_evals=cell.max_evals,
        strategy=cell.strategy,
        kernel=cell.kernel,
        seed=cell.seed,
        trace_every=cell.trace_every,
        metrics=metrics,
    )
    t0 = time.perf_counter()
    result = run(cfg)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    igd_val = float(igd(result.population.f, ref))
    hv_val = normalized_hv(result.population.f, ref)
    trace_path = None
    if cell.out_dir is not None:
        trace_path = _write_trace(cell, result)
    return RunRecord(
        cell.problem,
        cell.m,
        cell.d,
        cell.n_pop,
        cell.strategy,
        cell.kernel,
        cell.seed,
        result.evals,
        igd_val,
        hv_val,
        wall_ms,
        trace_path,
    )


def _write_trace(cell: CellSpec, result) -> str:
    os.makedirs(cell.out_dir, exist_ok=True)
    path = os.path.join(cell.out_dir, f"trace-{cell.label()}.json")
    payload = {
        "problem": cell.problem,
        "m": cell.m,
        "strategy": cell.strategy,
        "kernel": cell.kernel,
        "seed": cell.seed,
        "trace": [
            {"gen": t.gen, "evals": t.evals, "digest": t.digest, **t.metrics}
            for t in result.traces
        ],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
    return path


def _run_cell_entry(cell: CellSpec):
    try:
        return ("ok", run_cell(cell))
    except Exception as exc:  # noqa: BLE001 - cell isolation is the point
        return ("error", cell.label(), f"{type(exc).__name__}: {exc}")


def run_matrix(
    cells: Sequence[CellSpec],
    parallel: bool = False,
    max_workers: Optional[int] = None,
):
    """Run every cell, serially or fanned out; row order follows cell order.

    Returns (records, failures) where failures is a list of (label, message).
    """
    if parallel:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            outcomes = list(pool.map(_run_cell_entry, cells))
    else:
        outcomes = [_run_cell_entry(c) for c in cells]
    records, failures = [], []
    for item in outcomes:
        if item[0] == "ok":
            records.append(item[1])
        else:
            failures.append((item[1], item[2]))
    return records, failures


def expand_config(cfg: dict) -> list:
    """Turn a config mapping into the ordered list of cells it describes."""
    problems = cfg.get("problems")
    objectives = cfg.get("objectives")
    if not problems or not objectives:
        raise ContractError("config needs nonempty 'problems' and 'objectives' lists")
    strategies = cfg.get("strategies", ["dpp"])
    kernel = cfg.get("kernel", DEFAULT_KERNEL)
    seeds = cfg.get("seeds", 5)
    if isinstance(seeds, int):
        seeds = list(range(seeds))
    max_evals = int(cfg.get("max_evals", 100_000))
    pop_size = cfg.get("pop_size")
    trace_every = int(cfg.get("trace_every", 10))
    out_dir = cfg.get("out_dir")

    for name in problems:
        if name.lower() not in PROBLEM_NAMES:
            raise ContractError(f"config key 'problems': unknown problem {name!r}")
    for strat in strategies:
        if strat not in STRATEGIES:
            raise ContractError(f"config key 'strategies': unknown strategy {strat!r}")
    if kernel not in KERNEL_MODES:
        raise ContractError(f"config key 'kernel': unknown kernel {kernel!r}")

    cells = []
    for name in problems:
        key = name.lower()
        for m in objectives:
            m = int(m)
            d = default_dimension(key, m)
            n_pop = int(pop_size) if pop_size else default_pop_size(m)
            for strat in strategies:
                for seed in seeds:
                    cells.append(
                        CellSpec(key, m, d, n_pop, strat, kernel, int(seed), max_evals, trace_every, out_dir)
                    )
    return cells


# -- CSV ---------------------------------------------------------------


def _format_row(record: RunRecord) -> list:
    return [
        record.problem,
        str(record.m),
        str(record.d),
        str(record.n_pop),
        record.strategy,
        record.kernel,
        str(record.seed),
        str(record.evals),
        "%.5e" % record.igd,
        "%.5e" % record.hv,
        "%.5e" % record.wall_ms,
    ]


def write_csv(records: Sequence[RunRecord], path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for record in records:
            writer.writerow(_format_row(record))


def read_csv(path: str) -> list:
    records = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != CSV_FIELDS:
            raise ContractError(f"unexpected CSV header in {path}")
        for row in reader:
            records.append(
                RunRecord(
                    row["problem"],
                    int(row["M"]),
                    int(row["D"]),
                    int(row["N"]),
                    row["strategy"],
                    row["kernel"],
                    int(row["seed"]),
                    int(row["evals"]),
                    float(row["igd"]),
                    float(row["hv"]),
                    float(row["wall_ms"]),
                )
            )
    return records


def csv_without_wall(text: str) -> str:
    """CSV text with the wall-time column removed, for determinism checks."""
    out = []
    for line in text.strip().splitlines():
        out.append(",".join(line.split(",")[:-1]))
    return "\n".join(out)


# -- statistics --------------------------------------------------------


def wilcoxon_rank_sum(a: Sequence[float], b: Sequence[float]) -> float:
    """Two-sided rank-sum p-value, normal approximation.

    Uses midranks for ties, the tie-corrected variance, and a 0.5
    continuity correction. Fully tied samples carry no information and
    return 1.0.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n1, n2 = len(a), len(b)
    if n1 < 5 or n2 < 5:
        raise ContractError(f"rank-sum needs at least 5 values per sample, got {n1} and {n2}")
    vals = np.concatenate([a, b])
    n = n1 + n2
    order = np.argsort(vals, kind="mergesort")
    ranks = np.empty(n)
    sorted_vals = vals[order]
    tie_term = 0.0
    i = 0
    while i < n:
        j = i
        while j < n and sorted_vals[j] == sorted_vals[i]:
            j += 1
        ranks[order[i:j]] = 0.5 * (i + j + 1)
        count = j - i
        tie_term += count**3 - count
        i = j
    r1 = ranks[:n1].sum()
    mu = n1 * (n + 1) / 2.0
    sigma_sq = (n1 * n2 / 12.0) * ((n + 1) - tie_term / (n * (n - 1)))
    if sigma_sq <= 0.0:
        return 1.0
    diff = r1 - mu
    z = (diff - 0.5 * math.copysign(1.0, diff)) / math.sqrt(sigma_sq) if diff != 0.0 else 0.0
    return min(1.0, math.erfc(abs(z) / math.sqrt(2.0)))


VERDICT_BETTER = "BETTER"
VERDICT_WORSE = "WORSE"
VERDICT_SIMILAR = "SIMILAR"
VERDICT_SYMBOLS = {VERDICT_BETTER: "+", VERDICT_WORSE: "-", VERDICT_SIMILAR: "≈"}


@dataclass(frozen=True)
class StrategyStats:
    strategy: str
    median: float
    mean: float
    std: float
    count: int


@dataclass(frozen=True)
class CellComparison:
    problem: str
    m: int
    kernel: str
    baseline: StrategyStats
    other: StrategyStats
    p_value: float
    verdict: str


@dataclass(frozen=True)
class ComparisonResult:
    cells: tuple
    counts: dict

    def to_markdown(self, metric: str = "igd") -> str:
        lines = [
            f"| problem | M | kernel | baseline | median | strategy | median | p | verdict |",
            "|---|---|---|---|---|---|---|---|---|",
        ]
        for c in self.cells:
            lines.append(
                "| {} | {} | {} | {} | {:.5e} | {} | {:.5e} | {:.4f} | {} |".format(
                    c.problem,
                    c.m,
                    c.kernel,
                    c.baseline.strategy,
                    c.baseline.median,
                    c.other.strategy,
                    c.other.median,
                    c.p_value,
                    VERDICT_SYMBOLS[c.verdict],
                )
            )
        totals = "/".join(str(self.counts.get(v, 0)) for v in (VERDICT_BETTER, VERDICT_WORSE, VERDICT_SIMILAR))
        lines.append("")
        lines.append(f"+/-/≈ totals ({metric}, other vs baseline): {totals}")
        return "\n".join(lines)


def _stats(strategy: str, values: Sequence[float]) -> StrategyStats:
    arr = np.asarray(values, dtype=float)
    return StrategyStats(strategy, float(np.median(arr)), float(arr.mean()), float(arr.std(ddof=0)), len(arr))


def summarize(
    records: Sequence[RunRecord],
    baseline: str = "dpp",
    alpha: float = 0.05,
    metric: str = "igd",
) -> ComparisonResult:
    """Rank-sum verdicts of every non-baseline strategy against the baseline.

    Verdicts read from the other strategy's perspective: + means it beat
    the baseline at significance alpha. IGD compares low-is-better, HV
    high-is-better.
    """
    if metric not in ("igd", "hv"):
        raise ContractError(f"unknown comparison metric {metric!r}")
    lower_is_better = metric == "igd"
    groups: dict = {}
    for r in records:
        groups.setdefault((r.problem, r.m, r.kernel), {}).setdefault(r.strategy, []).append(
            getattr(r, metric)
        )
    cells = []
    counts = {VERDICT_BETTER: 0, VERDICT_WORSE: 0, VERDICT_SIMILAR: 0}
    for (problem, m, kernel), by_strategy in sorted(groups.items()):
        if baseline not in by_strategy:
            continue
        base_stats = _stats(baseline, by_strategy[baseline])
        for strategy in sorted(by_strategy):
            if strategy == baseline:
                continue
            other_stats = _stats(strategy, by_strategy[strategy])
            p = wilcoxon_rank_sum(by_strategy[baseline], by_strategy[strategy])
            if p < alpha:
                other_wins = (other_stats.median < base_stats.median) == lower_is_better
                verdict = VERDICT_BETTER if other_wins else VERDICT_WORSE
            else:
                verdict = VERDICT_SIMILAR
            counts[verdict] += 1
            cells.append(CellComparison(problem, m, kernel, base_stats, other_stats, p, verdict))
    if not cells:
        raise ContractError(f"no (problem, M) cell shares baseline {baseline!r} with another strategy")
    return ComparisonResult(tuple(cells), counts)
