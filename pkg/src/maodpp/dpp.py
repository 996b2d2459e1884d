"""Determinantal point process kernel and the selection routines built on it."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ContractError, Population, Solution
from .csa import CornerArchive, threshold
from .operators import convergence, convergence_values, unit_rows
from . import backends

# Similarity modes. KERNEL_COS keeps the raw cosine matrix, which is a Gram
# matrix of rank at most M and therefore positive semidefinite. KERNEL_EXPNEG
# applies exp(EXPNEG_RATE * (cos - 1)) entrywise, an exponential decay in the
# cosine dissimilarity: still PSD (entrywise exp of a PSD matrix, by the
# power series and the Schur product theorem) but full numerical rank. The
# decay rate keeps >= 100 eigenvalues above 1e-10 of the max on 500-point
# 3-objective kernels; selection cannot resolve more picks than that
# spectrum depth, and a unit rate caps it near 40.
KERNEL_COS = "cos"
KERNEL_EXPNEG = "expneg"
KERNEL_MODES = (KERNEL_COS, KERNEL_EXPNEG)
EXPNEG_RATE = 8.0

# Eigenvalues below this count as zero for k-DPP sampling support.
RANK_TOL = 1e-10


@dataclass(frozen=True)
class KernelMatrix:
    """Symmetric selection kernel with the similarity mode that built it."""

    entries: np.ndarray
    mode: str


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues in descending order with matching eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0


def quality_values(f_norm: np.ndarray, t: float) -> np.ndarray:
    """Quality weights for normalized objective rows against radius ``t``.

    Convergence measures are rescaled by their maximum over the rows, so
    the best row scores 1. Rows with norm at most ``t`` (inside the corner
    radius) get double their rescaled convergence; a flat inside weight
    would leave selection blind to convergence whenever the radius covers
    the whole population, which it usually does.
    """
    con = convergence_values(f_norm)
    con1 = con / con.max()
    norms = np.sqrt(np.einsum("ij,ij->i", f_norm, f_norm))
    return np.where(norms <= t, 2.0 * con1, con1)


def quality(x: Solution, pop: Population, t: float) -> float:
    """Quality of one solution relative to a normalized population."""
    if pop.f_norm is None:
        raise ContractError("population has no normalized objectives")
    con_max = convergence_values(pop.f_norm).max()
    f = np.asarray(x.f_norm, dtype=float)
    con1 = float(convergence(x) / con_max)
    if float(np.linalg.norm(f)) <= t:
        return 2.0 * con1
    return con1


def build_kernel(pop: Population, archive: CornerArchive, mode: str = KERNEL_COS) -> KernelMatrix:
    """Selection kernel L = diag(q) S diag(q) over a normalized population.

    ``S`` is the pairwise cosine matrix of the normalized objective
    vectors, or exp(EXPNEG_RATE * (cos - 1)) in the ``expneg`` mode,
    which decays with the angular dissimilarity and keeps a unit
    diagonal. Qualities ``q`` come from convergence measures gated by
    the corner archive radius. Both the population and the archive
    members must be normalized.
    """
    if mode not in KERNEL_MODES:
        raise ContractError(f"unknown kernel mode {mode!r}")
    if pop.f_norm is None:
        raise ContractError("population has no normalized objectives")
    t = threshold(archive)
    u = unit_rows(pop.f_norm)
    sim = u @ u.T
    sim = 0.5 * (sim + sim.T)
    sim = np.clip(sim, -1.0, 1.0)
    if mode == KERNEL_EXPNEG:
        sim = np.exp(EXPNEG_RATE * (sim - 1.0))
    q = quality_values(pop.f_norm, t)
    return KernelMatrix(sim * np.outer(q, q), mode)


def _entries(l) -> np.ndarray:
    a = l.entries if isinstance(l, KernelMatrix) else np.asarray(l, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractError("kernel must be a square matrix")
    return a


def eigendecompose(l, tol: float = 1e-12, max_sweeps: int = 100) -> EigenSystem:
    """Full symmetric eigendecomposition via cyclic Jacobi sweeps.

    Eigenvalues are returned in descending order; exact ties keep the
    diagonal position order of the converged matrix. Input asymmetry
    beyond 1e-12 relative to the largest entry is rejected.
    """
    a = _entries(l)
    if a.size:
        scale = float(np.abs(a).max())
        if float(np.abs(a - a.T).max()) > 1e-12 * max(scale, 1e-300):
            raise ContractError("kernel matrix is not symmetric")
    w, v, sweeps = backends.jacobi_eigh(a, tol, max_sweeps)
    order = np.argsort(-w, kind="stable")
    return EigenSystem(w[order], v[:, order], sweeps)


def _eliminate(v: np.ndarray, i: int) -> np.ndarray:
    """Orthonormal basis of span(v) restricted to coordinate i = 0.

    One Gram-Schmidt style elimination against the column with the
    largest component on coordinate i, followed by a closed-form
    reorthonormalization (the eliminated columns' Gram matrix is a
    rank-one update of the identity).
    """
    row = v[i, :].copy()
    j = int(np.argmax(np.abs(row)))
    denom = row[j]
    if denom == 0.0:
        raise ContractError("selected coordinate has no support in the basis")
    pivot = v[:, j].copy()
    keep = np.delete(np.arange(v.shape[1]), j)
    coef = row[keep] / denom
    w = v[:, keep] - np.outer(pivot, coef)
    w[i, :] = 0.0
    u = float(coef @ coef)
    if u > 0.0:
        beta = ((u + 1.0) - math.sqrt(u + 1.0)) / (u * (u + 1.0))
        w = w - beta * np.outer(w @ coef, coef)
    return w


def _row_scores(v: np.ndarray) -> np.ndarray:
    return np.einsum("ij,ij->i", v, v)


def dpp_select_greedy(l, k: int, on_step=None) -> np.ndarray:
    """Greedy determinantal selection of ``k`` indices.

    Tracks every point's conditional kernel variance given the picks so
    far, which is exactly its marginal determinant gain. Each step takes
    the index with the largest variance (lowest index on ties), then
    extends an incremental Cholesky factor of the selected principal
    minor and discounts the remaining variances. Equivalent to projecting
    the chosen row out of the kernel's feature vectors, but needs only
    kernel entries, no eigendecomposition. Returns the indices in
    selection order.

    ``on_step`` is a test hook called after every update with the
    residual variances and the selection prefix.
    """
    a = _entries(l)
    n = a.shape[0]
    if not 1 <= k <= n:
        raise ContractError(f"k={k} outside 1..{n}")
    c = np.zeros((n, k))
    d2 = np.diagonal(a).astype(float).copy()
    selected = np.empty(k, dtype=int)
    taken = np.zeros(n, dtype=bool)
    for step in range(k):
        scores = np.where(taken, -1.0, d2)
        i = int(np.argmax(scores))
        selected[step] = i
        taken[i] = True
        if step + 1 < k:
            pivot = d2[i]
            if pivot > 0.0:
                e = a[:, i] - c[:, :step] @ c[i, :step]
                e /= math.sqrt(pivot)
                c[:, step] = e
                d2 = d2 - e * e
            if on_step is not None:
                on_step(np.where(taken, 0.0, np.maximum(d2, 0.0)), selected[: step + 1])
    return selected


def elementary_symmetric_log(log_lam: np.ndarray, k: int) -> np.ndarray:
    """Log elementary symmetric polynomials of degree 0..k.

    Entry [j, i] is log e_j over the first i eigenvalues, computed with
    the standard two-term recursion in log space for overflow safety.
    """
    m = log_lam.shape[0]
    table = np.full((k + 1, m + 1), -np.inf)
    table[0, :] = 0.0
    for j in range(1, k + 1):
        for i in range(1, m + 1):
            table[j, i] = np.logaddexp(table[j, i - 1], log_lam[i - 1] + table[j - 1, i - 1])
    return table


def kdpp_sample(l, k: int, rng) -> np.ndarray:
    """Sample ``k`` indices from the k-DPP defined by kernel ``l``.

    First samples an eigenvector subset of size k with probabilities given
    by elementary symmetric polynomial ratios, then runs the projection
    sampling loop, picking each index with probability proportional to its
    squared row mass. Eigenvalues below 1e-10 are outside the sampling
    support; asking for more indices than the supported rank is an error.
    """
    a = _entries(l)
    n = a.shape[0]
    if not 1 <= k <= n:
        raise ContractError(f"k={k} outside 1..{n}")
    es = eigendecompose(l)
    lam = np.maximum(es.values, 0.0)
    support = lam >= RANK_TOL
    rank = int(support.sum())
    if k > rank:
        raise ContractError(f"k={k} exceeds kernel rank {rank}")
    lam_s = lam[support]
    vec_s = es.vectors[:, support]

    table = elementary_symmetric_log(np.log(lam_s), k)
    chosen = []
    need = k
    for i in range(lam_s.shape[0], 0, -1):
        if need == 0:
            break
        if i == need:
            chosen.extend(range(i - 1, -1, -1))
            break
        p = math.exp(math.log(lam_s[i - 1]) + table[need - 1, i - 1] - table[need, i])
        if float(rng.random()) < p:
            chosen.append(i - 1)
            need -= 1

    v = vec_s[:, chosen].copy()
    selected = np.empty(k, dtype=int)
    taken = np.zeros(n, dtype=bool)
    for step in range(k):
        scores = np.maximum(_row_scores(v), 0.0)
        scores[taken] = 0.0
        total = scores.sum()
        if total <= 0.0:
            raise ContractError("projection basis lost all mass")
        i = int(rng.choice(n, size=None, p=scores / total))
        selected[step] = i
        taken[i] = True
        if step + 1 < k:
            v = _eliminate(v, i)
    return selected


def uniform_sample(n: int, k: int, rng) -> np.ndarray:
    """k distinct indices drawn uniformly from range(n)."""
    if not 1 <= k <= n:
        raise ContractError(f"k={k} outside 1..{n}")
    return np.asarray(rng.choice(n, size=k, replace=False), dtype=int)
