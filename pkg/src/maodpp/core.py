"""Population containers, Pareto dominance, and objective normalization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Guard against zero spans when ideal and nadir coincide in a component.
EPS_SCALE = 1e-12


class ContractError(ValueError):
    """An argument violated a documented precondition."""


@dataclass(frozen=True)
class Solution:
    """One candidate solution.

    ``x`` is the decision vector, ``f`` the raw objective vector, and
    ``f_norm`` the normalized objectives when a normalization pass has run.
    """

    x: np.ndarray
    f: np.ndarray
    f_norm: np.ndarray | None = None


class Population:
    """Ordered collection of solutions stored as row matrices.

    ``x`` has shape (n, d), ``f`` shape (n, m), and ``f_norm`` is either
    None or an (n, m) matrix of normalized objectives. Row order is
    meaningful and preserved by every operation; rows are treated as
    immutable once constructed.
    """

    __slots__ = ("x", "f", "f_norm")

    def __init__(self, x, f, f_norm=None):
        x = np.asarray(x, dtype=float)
        f = np.asarray(f, dtype=float)
        if x.ndim == 1:
            x = x[None, :]
        if f.ndim == 1:
            f = f[None, :]
        if x.ndim != 2 or f.ndim != 2:
            raise ContractError("x and f must be 2-d matrices")
        if x.shape[0] != f.shape[0]:
            raise ContractError("x and f row counts differ")
        self.x = x
        self.f = f
        if f_norm is None:
            self.f_norm = None
        else:
            f_norm = np.asarray(f_norm, dtype=float)
            if f_norm.shape != f.shape:
                raise ContractError("f_norm shape differs from f")
            self.f_norm = f_norm

    def __len__(self) -> int:
        return self.x.shape[0]

    @property
    def n_var(self) -> int:
        return self.x.shape[1]

    @property
    def n_obj(self) -> int:
        return self.f.shape[1]

    def solution(self, i: int) -> Solution:
        fn = None if self.f_norm is None else self.f_norm[i].copy()
        return Solution(self.x[i].copy(), self.f[i].copy(), fn)

    def subset(self, idx) -> "Population":
        """New population holding the given rows, in the given order."""
        idx = np.asarray(idx, dtype=int)
        fn = None if self.f_norm is None else self.f_norm[idx]
        return Population(self.x[idx], self.f[idx], fn)

    def copy(self) -> "Population":
        fn = None if self.f_norm is None else self.f_norm.copy()
        return Population(self.x.copy(), self.f.copy(), fn)


def concat(a: Population, b: Population) -> Population:
    """Rows of ``a`` followed by rows of ``b``. Drops f_norm unless both carry it."""
    if a.n_obj != b.n_obj or a.n_var != b.n_var:
        raise ContractError("populations have mismatched shapes")
    fn = None
    if a.f_norm is not None and b.f_norm is not None:
        fn = np.vstack([a.f_norm, b.f_norm])
    return Population(np.vstack([a.x, b.x]), np.vstack([a.f, b.f]), fn)


@dataclass(frozen=True)
class NormalizationContext:
    """Ideal and nadir objective estimates used for normalization."""

    ideal: np.ndarray
    nadir: np.ndarray


def dominates(a, b) -> bool:
    """True when objective vector ``a`` Pareto-dominates ``b``.

    a dominates b iff a <= b in every component and a < b in at least one.
    Minimization throughout.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ContractError("objective vectors have different lengths")
    return bool(np.all(a <= b) and np.any(a < b))


def nondominated_mask(f) -> np.ndarray:
    """Boolean mask of rows of ``f`` not dominated by any other row.

    Duplicate rows never dominate each other, so all copies survive.
    """
    f = np.asarray(f, dtype=float)
    n = f.shape[0]
    if n == 0:
        return np.zeros(0, dtype=bool)
    # Chunk the candidate axis so peak memory stays ~c*n*m regardless of n.
    chunk = max(1, 4_000_000 // max(n * f.shape[1], 1))
    dominated = np.zeros(n, dtype=bool)
    for lo in range(0, n, chunk):
        block = f[lo : lo + chunk]
        le = (f[None, :, :] <= block[:, None, :]).all(axis=2)
        lt = (f[None, :, :] < block[:, None, :]).any(axis=2)
        dominated[lo : lo + chunk] = (le & lt).any(axis=1)
    return ~dominated


def nondominated_filter(pop: Population) -> Population:
    """Nondominated rows of ``pop`` in their original order."""
    mask = nondominated_mask(pop.f)
    return pop.subset(np.flatnonzero(mask))


def initial_context(pop: Population) -> NormalizationContext:
    """Ideal = componentwise minimum, nadir = componentwise maximum of ``pop``."""
    if len(pop) == 0:
        raise ContractError("cannot initialize normalization from an empty population")
    return NormalizationContext(pop.f.min(axis=0), pop.f.max(axis=0))


def update_ideal(ctx: NormalizationContext, pop: Population) -> NormalizationContext:
    """Fold the populations' componentwise minima into the ideal point.

    The ideal is a running minimum over everything evaluated so far, so
    an empty population leaves the context unchanged.
    """
    if len(pop) == 0:
        return ctx
    return NormalizationContext(np.minimum(ctx.ideal, pop.f.min(axis=0)), ctx.nadir)


def update_nadir(ctx: NormalizationContext, pop: Population) -> NormalizationContext:
    """Recompute the nadir as the componentwise maximum over ``pop``.

    Unlike the ideal this is recomputed fresh each call rather than kept
    as a running extreme, so stale early-generation maxima drop out once
    selection has culled the solutions that produced them.
    """
    if len(pop) == 0:
        raise ContractError("nadir update needs at least one solution")
    return NormalizationContext(ctx.ideal, pop.f.max(axis=0))


def normalize(pop: Population, ctx: NormalizationContext) -> Population:
    """Population with f_norm = (f - ideal) / (nadir - ideal), spans floored at 1e-12."""
    span = np.maximum(ctx.nadir - ctx.ideal, EPS_SCALE)
    f_norm = (pop.f - ctx.ideal) / span
    return Population(pop.x, pop.f, f_norm)
