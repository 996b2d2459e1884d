"""Quality indicators and simplex-lattice reference machinery."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .core import ContractError

# Default Monte Carlo sample count for hypervolume with 3+ objectives.
HV_SAMPLES = 1_000_000


@dataclass(frozen=True)
class ReferenceSet:
    """Named point cloud on a problem's Pareto front."""

    name: str
    m: int
    points: np.ndarray


def igd(approx: np.ndarray, reference: np.ndarray) -> float:
    """Inverted generational distance: mean over reference points of the
    euclidean distance to the closest approximation point.

    An empty approximation set is infinitely far; an empty reference set
    is a contract violation.
    """
    reference = getattr(reference, "points", reference)
    reference = np.asarray(reference, dtype=float)
    approx = np.asarray(approx, dtype=float)
    if reference.ndim != 2 or reference.shape[0] == 0:
        raise ContractError("reference set must be a nonempty matrix")
    if approx.size == 0:
        return float("inf")
    if approx.ndim != 2 or approx.shape[1] != reference.shape[1]:
        raise ContractError("approximation and reference dimensions differ")
    # Chunk over reference rows to bound the distance-matrix footprint.
    total = 0.0
    step = max(1, int(2_000_000 // max(len(approx), 1)))
    for lo in range(0, len(reference), step):
        block = reference[lo : lo + step]
        d2 = ((block[:, None, :] - approx[None, :, :]) ** 2).sum(axis=2)
        total += float(np.sqrt(d2.min(axis=1)).sum())
    return total / len(reference)


def hv_exact_2d(points: np.ndarray, ref: np.ndarray) -> float:
    """Exact dominated area for two objectives via a sorted sweep."""
    points = np.asarray(points, dtype=float)
    ref = np.asarray(ref, dtype=float)
    if points.ndim != 2 or points.shape[1] != 2 or ref.shape != (2,):
        raise ContractError("exact sweep needs (n, 2) points and a 2-vector reference")
    inside = (points[:, 0] < ref[0]) & (points[:, 1] < ref[1])
    pts = points[inside]
    if len(pts) == 0:
        return 0.0
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    # Sweep left to right; each staircase step adds the strip between the
    # current upper edge and its own f2 value.
    area = 0.0
    prev_f2 = ref[1]
    for x1, x2 in pts:
        if x2 < prev_f2:
            area += (ref[0] - x1) * (prev_f2 - x2)
            prev_f2 = x2
    return float(area)


def hv_monte_carlo(points: np.ndarray, ref: np.ndarray, n_samples: int, rng) -> float:
    """Dominated-volume estimate from uniform samples in [min(points), ref]."""
    points = np.asarray(points, dtype=float)
    ref = np.asarray(ref, dtype=float)
    m = ref.shape[0]
    keep = points[(points < ref).all(axis=1)]
    if len(keep) == 0:
        return 0.0
    lo = keep.min(axis=0)
    box = float(np.prod(ref - lo))
    if box <= 0.0:
        return 0.0
    hits = 0
    chunk = max(1, int(4_000_000 // max(len(keep), 1)))
    done = 0
    while done < n_samples:
        take = min(chunk, n_samples - done)
        s = lo + rng.random((take, m)) * (ref - lo)
        dominated = np.zeros(take, dtype=bool)
        for row in keep:
            dominated |= (row <= s).all(axis=1)
            if dominated.all():
                break
        hits += int(dominated.sum())
        done += take
    return box * hits / n_samples


def hv(points, ref, mode: str = "auto", n_samples: int = HV_SAMPLES, rng=None) -> float:
    """Hypervolume dominated by ``points`` against reference point ``ref``.

    Two objectives use the exact sweep; more use Monte Carlo sampling
    (pass an RngStream for reproducible estimates). ``mode`` forces
    ``exact`` or ``mc`` explicitly.
    """
    points = np.asarray(points, dtype=float)
    ref = np.asarray(ref, dtype=float)
    if mode not in ("auto", "exact", "mc"):
        raise ContractError(f"unknown hv mode {mode!r}")
    if mode == "exact" or (mode == "auto" and ref.shape[0] == 2):
        return hv_exact_2d(points, ref)
    if rng is None:
        raise ContractError("monte carlo hypervolume needs an rng")
    return hv_monte_carlo(points, ref, n_samples, rng)


def das_dennis(m: int, p: int) -> np.ndarray:
    """Simplex lattice: all weight vectors with components i/p summing to 1.

    Row count is comb(m + p - 1, p). The degenerate resolution p = 0
    yields the single centroid vector.
    """
    if m < 1 or p < 0:
        raise ContractError("need m >= 1 and p >= 0")
    if p == 0:
        return np.full((1, m), 1.0 / m)
    rows = np.zeros((comb(m + p - 1, p), m))
    pos = 0

    def fill(prefix, remaining, slot):
        nonlocal pos
        if slot == m - 1:
            rows[pos, :slot] = prefix
            rows[pos, slot] = remaining
            pos += 1
            return
        for v in range(remaining + 1):
            fill(prefix + [v], remaining - v, slot + 1)

    fill([], p, 0)
    return rows / p


def two_layer_size(m: int, p1: int, p2: int) -> int:
    """Reference-point count of a two-layer simplex lattice."""
    size = comb(m + p1 - 1, p1)
    if p2 > 0:
        size += comb(m + p2 - 1, p2)
    return size


# Population sizes used by the benchmark harness, from two-layer lattice
# resolutions (5,0), (3,1), (2,2); 13 objectives share the 15-objective
# size by convention.
_POP_LAYERS = {5: (5, 0), 10: (3, 1), 15: (2, 2)}


def default_pop_size(m: int) -> int:
    """Benchmark population size for m objectives.

    Tabulated two-layer sizes for 5, 10, 13, and 15 objectives; any other
    m falls back to the smallest single-layer lattice of at least 100
    points.
    """
    if m == 13:
        return two_layer_size(15, 2, 2)
    if m in _POP_LAYERS:
        p1, p2 = _POP_LAYERS[m]
        return two_layer_size(m, p1, p2)
    p = 1
    while comb(m + p - 1, p) < 100:
        p += 1
    return comb(m + p - 1, p)
