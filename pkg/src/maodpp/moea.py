"""Main evolutionary loop with determinantal environmental selection.

Each generation builds a 2N mating pool biased toward well-converged
neighbors, produces N offspring by simulated binary crossover plus
polynomial mutation, refreshes the corner archive, and keeps N survivors
of the nondominated front by scoring a quality-similarity kernel.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from .core import (
    ContractError,
    NormalizationContext,
    Population,
    concat,
    initial_context,
    nondominated_filter,
    normalize,
    update_ideal,
    update_nadir,
)
from .csa import CornerArchive, build_csa, update_csa
from .dpp import (
    KERNEL_MODES,
    RANK_TOL,
    build_kernel,
    dpp_select_greedy,
    eigendecompose,
    kdpp_sample,
    uniform_sample,
)
from .indicators import default_pop_size
from .operators import VariationParams, fill_mating_pool, init_population, variation
from .problems.base import Problem
from .rng import RngStream

DEFAULT_KERNEL = "expneg"
STRATEGIES = ("dpp", "kdpp", "uniform")


@dataclass(frozen=True)
class AlgoConfig:
    """Settings for one optimization run."""

    problem: Problem
    n_pop: Optional[int] = None
    max_evals: int = 100_000
    strategy: str = "dpp"
    kernel: str = DEFAULT_KERNEL
    seed: int = 0
    variation: VariationParams = field(default_factory=VariationParams)
    trace_every: int = 10
    metrics: Optional[Callable[[Population], dict]] = None

    def resolved_pop_size(self) -> int:
        if self.n_pop is not None:
            return int(self.n_pop)
        return default_pop_size(self.problem.spec.m)


@dataclass(frozen=True)
class GenerationTrace:
    gen: int
    evals: int
    digest: str
    metrics: dict


@dataclass(frozen=True)
class RunResult:
    population: Population
    archive: CornerArchive
    traces: tuple
    evals: int
    generations: int


def _digest(pop: Population) -> str:
    return hashlib.sha256(np.ascontiguousarray(pop.f).tobytes()).hexdigest()[:16]


def _select_indices(kernel, k: int, strategy: str, rng: RngStream) -> np.ndarray:
    n = kernel.entries.shape[0]
    if strategy == "dpp":
        return np.asarray(dpp_select_greedy(kernel, k), dtype=int)
    if strategy == "uniform":
        return np.asarray(uniform_sample(n, k, rng), dtype=int)
    if strategy != "kdpp":
        raise ContractError(f"unknown selection strategy {strategy!r}")
    try:
        return np.asarray(kdpp_sample(kernel, k, rng), dtype=int)
    except ContractError:
        # Kernel rank below k: draw a full-rank subset, top up uniformly.
        lam = np.maximum(eigendecompose(kernel).values, 0.0)
        rank = int((lam >= RANK_TOL).sum())
        chosen = list(kdpp_sample(kernel, rank, rng)) if rank else []
        pool = np.setdiff1d(np.arange(n), chosen)
        extra = pool[uniform_sample(len(pool), k - len(chosen), rng)]
        return np.concatenate([np.asarray(chosen, dtype=int), extra])


def environmental_selection(
    pop: Population,
    offspring: Population,
    archive: CornerArchive,
    ctx: NormalizationContext,
    n_target: int,
    strategy: str = "dpp",
    kernel_mode: str = DEFAULT_KERNEL,
    rng: Optional[RngStream] = None,
) -> Population:
    """Survivors of pop+offspring: the nondominated front, thinned to size.

    When the front already fits it is returned whole; only an overfull
    front pays for the kernel build and eigendecomposition.
    """
    if kernel_mode not in KERNEL_MODES:
        raise ContractError(f"unknown kernel mode {kernel_mode!r}")
    front = nondominated_filter(concat(pop, offspring))
    if len(front) <= n_target:
        return front
    if strategy != "dpp" and rng is None:
        raise ContractError(f"strategy {strategy!r} needs a random stream")
    front_n = normalize(front, ctx)
    members_n = normalize(archive.members, ctx)
    kernel = build_kernel(front_n, CornerArchive(members_n, archive.face_start), kernel_mode)
    idx = np.sort(_select_indices(kernel, n_target, strategy, rng))
    return front.subset(idx)


def run(cfg: AlgoConfig) -> RunResult:
    """Run the loop until another full generation would exceed the budget."""
    if cfg.strategy not in STRATEGIES:
        raise ContractError(f"unknown selection strategy {cfg.strategy!r}")
    if cfg.kernel not in KERNEL_MODES:
        raise ContractError(f"unknown kernel mode {cfg.kernel!r}")
    problem = cfg.problem
    n = cfg.resolved_pop_size()
    m = problem.spec.m
    rng = RngStream(cfg.seed)

    pop = init_population(n, problem, rng)
    evals = n
    archive = build_csa(pop, n, m)
    ctx = initial_context(pop)

    def trace(gen: int) -> GenerationTrace:
        metrics = cfg.metrics(pop) if cfg.metrics is not None else {}
        return GenerationTrace(gen, evals, _digest(pop), metrics)

    traces = [trace(0)]
    gen = 0
    while evals + n <= cfg.max_evals:
        gen += 1
        pool = fill_mating_pool(pop, archive, n, ctx, rng)
        children = variation(pool, n, problem, cfg.variation, rng)
        evals += n
        ctx = update_ideal(ctx, children)
        archive = update_csa(archive, children, n)
        pop = environmental_selection(
            pop, children, archive, ctx, n, cfg.strategy, cfg.kernel, rng
        )
        ctx = update_nadir(ctx, pop)
        if cfg.trace_every and gen % cfg.trace_every == 0:
            traces.append(trace(gen))
    if not traces or traces[-1].gen != gen:
        traces.append(trace(gen))
    return RunResult(pop, archive, tuple(traces), evals, gen)


def make_config(problem: Problem, **kwargs) -> AlgoConfig:
    return AlgoConfig(problem=problem, **kwargs)


def with_seed(cfg: AlgoConfig, seed: int) -> AlgoConfig:
    return replace(cfg, seed=seed)
