"""Many-objective evolutionary optimization with determinantal selection.

The environmental-selection step scores candidate survivors through a
kernel that couples convergence quality with pairwise angular similarity,
then picks a subset either greedily (MAP-style), by exact k-DPP sampling,
or uniformly for ablation baselines.
"""

__version__ = "0.1.0"

from .core import (
    ContractError,
    NormalizationContext,
    Population,
    Solution,
    concat,
    dominates,
    initial_context,
    nondominated_filter,
    nondominated_mask,
    normalize,
    update_ideal,
    update_nadir,
)
from .csa import CornerArchive, archive_quota, build_csa, threshold, update_csa
from .dpp import (
    KERNEL_COS,
    KERNEL_EXPNEG,
    KernelMatrix,
    build_kernel,
    dpp_select_greedy,
    eigendecompose,
    kdpp_sample,
    uniform_sample,
)
from .indicators import ReferenceSet, das_dennis, default_pop_size, hv, igd, two_layer_size
from .moea import (
    DEFAULT_KERNEL,
    STRATEGIES,
    AlgoConfig,
    GenerationTrace,
    RunResult,
    environmental_selection,
    run,
)
from .operators import VariationParams, convergence, fill_mating_pool, variation
from .problems import PROBLEM_NAMES, make_problem
from .rng import RngStream

__all__ = [
    "AlgoConfig",
    "ContractError",
    "CornerArchive",
    "DEFAULT_KERNEL",
    "GenerationTrace",
    "KERNEL_COS",
    "KERNEL_EXPNEG",
    "KernelMatrix",
    "NormalizationContext",
    "PROBLEM_NAMES",
    "Population",
    "ReferenceSet",
    "RngStream",
    "RunResult",
    "STRATEGIES",
    "Solution",
    "VariationParams",
    "archive_quota",
    "build_csa",
    "build_kernel",
    "concat",
    "convergence",
    "das_dennis",
    "default_pop_size",
    "dominates",
    "dpp_select_greedy",
    "eigendecompose",
    "environmental_selection",
    "fill_mating_pool",
    "hv",
    "igd",
    "initial_context",
    "kdpp_sample",
    "make_problem",
    "nondominated_filter",
    "nondominated_mask",
    "normalize",
    "run",
    "threshold",
    "two_layer_size",
    "uniform_sample",
    "update_csa",
    "update_ideal",
    "update_nadir",
    "variation",
]
