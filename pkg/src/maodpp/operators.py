"""Variation operators and the angle-guided mating pool."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ContractError, NormalizationContext, Population, Solution, concat, normalize
from .rng import RngStream

# Floor applied to squared norms before inversion; caps convergence at 1e12.
CON_EPS = 1e-12
# Floor for vector norms inside cosine computations.
COS_EPS = 1e-12


@dataclass(frozen=True)
class VariationParams:
    """Crossover and mutation settings.

    ``p_mutation=None`` means the per-variable rate 1/D is filled in at
    call time from the decision vector length.
    """

    p_crossover: float = 1.0
    eta_crossover: float = 20.0
    p_mutation: float | None = None
    eta_mutation: float = 20.0


def _as_norm_matrix(arg) -> np.ndarray:
    if isinstance(arg, Solution):
        if arg.f_norm is None:
            raise ContractError("solution has no normalized objectives")
        return np.asarray(arg.f_norm, dtype=float)
    return np.asarray(arg, dtype=float)


def convergence(x) -> float:
    """Convergence measure 1 / sum(f_norm^2), capped at 1e12.

    Accepts a Solution carrying normalized objectives or a plain
    normalized objective vector. Smaller norms mean better convergence,
    hence a larger value.
    """
    f = _as_norm_matrix(x)
    return float(1.0 / max(float(np.dot(f, f)), CON_EPS))


def convergence_values(f_norm: np.ndarray) -> np.ndarray:
    """Row-wise convergence measure for an (n, m) normalized matrix."""
    sq = np.einsum("ij,ij->i", f_norm, f_norm)
    return 1.0 / np.maximum(sq, CON_EPS)


def unit_rows(f: np.ndarray) -> np.ndarray:
    """Rows scaled to unit norm, with norms floored at 1e-12."""
    norms = np.sqrt(np.einsum("ij,ij->i", f, f))
    return f / np.maximum(norms, COS_EPS)[:, None]


def cosine(a, b) -> float:
    """Cosine of the angle between two normalized objective vectors, clamped to [-1, 1]."""
    fa = _as_norm_matrix(a)
    fb = _as_norm_matrix(b)
    na = max(float(np.linalg.norm(fa)), COS_EPS)
    nb = max(float(np.linalg.norm(fb)), COS_EPS)
    return float(np.clip(np.dot(fa, fb) / (na * nb), -1.0, 1.0))


def cosine_matrix(f: np.ndarray) -> np.ndarray:
    """Pairwise cosine matrix of the rows of a normalized objective matrix."""
    u = unit_rows(f)
    g = u @ u.T
    g = 0.5 * (g + g.T)
    return np.clip(g, -1.0, 1.0)


def _cosine_extremes(cos: np.ndarray) -> tuple[float, float]:
    n = cos.shape[0]
    off = ~np.eye(n, dtype=bool)
    return float(cos[off].min()), float(cos[off].max())


def delta_threshold(x, y, pool_union: Population) -> float:
    """Acceptance threshold for swapping x out for y in the mating pool.

    Rescales cos(x, y) linearly between the smallest and largest cosine
    found over distinct pairs of the pool union. Degenerate pools (fewer
    than two members, or all pairwise cosines equal) yield 0.5.
    """
    if pool_union.f_norm is None:
        raise ContractError("pool union has no normalized objectives")
    if len(pool_union) < 2:
        return 0.5
    cos = cosine_matrix(pool_union.f_norm)
    lo, hi = _cosine_extremes(cos)
    span = hi - lo
    if span <= 1e-12:
        return 0.5
    return float(np.clip((cosine(x, y) - lo) / span, 0.0, 1.0))


def fill_mating_pool(
    pop: Population,
    archive_members: Population,
    n_target: int,
    ctx: NormalizationContext,
    rng,
) -> Population:
    """Draw a mating pool of size 2 * n_target from pop and the corner archive.

    Each iteration draws x uniformly from the union, finds x's nearest
    angular neighbor y in ``pop`` (never x itself), and emits y instead
    of x when a uniform draw falls below the rescaled-cosine threshold
    and y converges better than x. Nearby pairs have thresholds close to
    1, so a solution usually loses its pool slot to a better-converged
    neighbor covering the same direction. One index draw and one uniform
    draw happen per iteration, so the stream consumption is fixed.
    """
    if len(pop) == 0:
        raise ContractError("cannot fill a mating pool from an empty population")
    # Accept either the archive object or its member population.
    archive_members = getattr(archive_members, "members", archive_members)
    union = concat(pop, archive_members) if len(archive_members) else pop
    union = normalize(union, ctx)
    f_norm = union.f_norm
    con = convergence_values(f_norm)

    cos = cosine_matrix(f_norm)
    n_union = len(union)
    n_pop = len(pop)
    degenerate = n_union < 2
    if not degenerate:
        lo, hi = _cosine_extremes(cos)
        span = hi - lo
        degenerate = span <= 1e-12

    masked = cos[:, :n_pop].copy()
    diag = np.arange(min(n_pop, n_union))
    masked[diag, diag] = -np.inf
    if n_pop == 1 and n_union == 1:
        neighbor = np.zeros(1, dtype=int)
    else:
        neighbor = np.argmax(masked, axis=1)

    chosen = np.empty(2 * n_target, dtype=int)
    for i in range(2 * n_target):
        xi = int(rng.integers(0, n_union))
        yi = int(neighbor[xi])
        if degenerate:
            delta = 0.5
        else:
            delta = (cos[xi, yi] - lo) / span
        r = float(rng.random())
        if r < delta and con[yi] > con[xi]:
            chosen[i] = yi
        else:
            chosen[i] = xi
    return union.subset(chosen)


def sbx_pair(p1, p2, lower, upper, params: VariationParams, rng) -> tuple[np.ndarray, np.ndarray]:
    """Simulated binary crossover on one parent pair.

    Standard spread-factor form: per variable, with probability 0.5 a
    spread factor beta is drawn via the eta_crossover polynomial law and
    the two children straddle the parents' mean. With probability
    1 - p_crossover the children are plain copies. Children are clipped
    to the bounds.
    """
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    if rng.random() >= params.p_crossover:
        return p1.copy(), p2.copy()
    d = p1.shape[0]
    u_gate = rng.random(d)
    u = rng.random(d)

    exponent = 1.0 / (params.eta_crossover + 1.0)
    beta = np.where(
        u <= 0.5,
        (2.0 * u) ** exponent,
        (1.0 / (2.0 * (1.0 - u))) ** exponent,
    )
    active = (u_gate <= 0.5) & (np.abs(p1 - p2) > 1e-14)
    beta = np.where(active, beta, 1.0)

    mean = 0.5 * (p1 + p2)
    half_spread = 0.5 * beta * (p2 - p1)
    c1 = np.clip(mean - half_spread, lower, upper)
    c2 = np.clip(mean + half_spread, lower, upper)
    return c1, c2


def polynomial_mutation(x, lower, upper, params: VariationParams, rng) -> np.ndarray:
    """Bounded polynomial mutation with index eta_mutation.

    Each variable mutates independently with probability p_mutation
    (default 1/D). The perturbation law accounts for the distance to the
    bounds, so the result always stays inside them.
    """
    x = np.asarray(x, dtype=float)
    d = x.shape[0]
    p_m = params.p_mutation if params.p_mutation is not None else 1.0 / d
    gate = rng.random(d)
    u = rng.random(d)
    mask = gate < p_m
    if not mask.any():
        return x.copy()

    span = np.asarray(upper, dtype=float) - np.asarray(lower, dtype=float)
    span = np.where(span <= 0, 1.0, span)
    d_low = (x - lower) / span
    d_high = (upper - x) / span
    exp_pow = params.eta_mutation + 1.0
    mut_pow = 1.0 / exp_pow

    low_side = u <= 0.5
    val_low = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d_low) ** exp_pow
    val_high = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d_high) ** exp_pow
    delta = np.where(
        low_side,
        np.power(np.maximum(val_low, 0.0), mut_pow) - 1.0,
        1.0 - np.power(np.maximum(val_high, 0.0), mut_pow),
    )
    out = x.copy()
    out[mask] = x[mask] + delta[mask] * span[mask]
    return np.clip(out, lower, upper)


def init_population(n: int, problem, rng) -> Population:
    """Uniform random initialization inside the box, already evaluated."""
    spec = problem.spec
    x = spec.lower + rng.random((n, spec.d)) * (spec.upper - spec.lower)
    return Population(x, problem.evaluate(x))


def variation(pool: Population, n_offspring: int, problem, params: VariationParams, rng) -> Population:
    """Produce and evaluate n_offspring children from the mating pool.

    Each child comes from two uniformly drawn pool members: SBX yields a
    pair, the first child is kept and then mutated. Evaluation happens in
    one batch, charging exactly n_offspring evaluations.
    """
    if len(pool) == 0:
        raise ContractError("empty mating pool")
    spec = problem.spec
    xs = np.empty((n_offspring, spec.d))
    for i in range(n_offspring):
        pick = rng.integers(0, len(pool), 2)
        a, b = int(pick[0]), int(pick[1])
        child, _ = sbx_pair(pool.x[a], pool.x[b], spec.lower, spec.upper, params, rng)
        xs[i] = polynomial_mutation(child, spec.lower, spec.upper, params, rng)
    return Population(xs, problem.evaluate(xs))
