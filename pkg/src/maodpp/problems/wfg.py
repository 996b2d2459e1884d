"""WFG suite: composable transformation chains over scaled boxes.

Each problem normalizes its decision vector to the unit box, pushes it
through shift/bias/reduction stages, maps the result onto a shape profile,
and scales objective m by 2m. Position parameters k equal M-1 here and the
distance tail has length l = D - k.
"""

from __future__ import annotations

import numpy as np

from ..core import ContractError, nondominated_mask
from .base import Problem, ProblemSpec, chain_products, sample_positive_sphere

_HALF_PI = 0.5 * np.pi


def _correct01(y):
    return np.clip(y, 0.0, 1.0)


def shift_linear(y, a):
    return _correct01(np.abs(y - a) / np.abs(np.floor(a - y) + a))


def shift_deceptive(y, a, b, c):
    tmp1 = np.floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b)
    tmp2 = np.floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b)
    return _correct01(1.0 + (np.abs(y - a) - b) * (tmp1 + tmp2 + 1.0 / b))


def shift_multimodal(y, a, b, c):
    frac = np.abs(y - c) / (2.0 * (np.floor(c - y) + c))
    return _correct01((1.0 + np.cos((4.0 * a + 2.0) * np.pi * (0.5 - frac)) + 4.0 * b * frac * frac) / (b + 2.0))


def bias_flat(y, a, b, c):
    out = (
        a
        + np.minimum(0.0, np.floor(y - b)) * a * (b - y) / b
        - np.minimum(0.0, np.floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c)
    )
    return _correct01(out)


def bias_poly(y, alpha):
    return _correct01(np.power(y, alpha))


def bias_param(y, u, a, b, c):
    v = a - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + a)
    return _correct01(np.power(y, b + (c - b) * v))


def reduce_sum(y, w):
    return (y * w).sum(axis=1) / np.sum(w)


def reduce_nonsep(y, a: int):
    n, cols = y.shape
    acc = np.zeros(n)
    for j in range(cols):
        acc = acc + y[:, j]
        for k in range(a - 1):
            acc = acc + np.abs(y[:, j] - y[:, (j + k + 1) % cols])
    denom = (cols / a) * np.ceil(a / 2.0) * (1.0 + 2.0 * a - 2.0 * np.ceil(a / 2.0))
    return acc / denom


def shape_linear(x):
    return chain_products(x, 1.0 - x)


def shape_convex(x):
    return chain_products(1.0 - np.cos(x * _HALF_PI), 1.0 - np.sin(x * _HALF_PI))


def shape_concave(x):
    return chain_products(np.sin(x * _HALF_PI), np.cos(x * _HALF_PI))


def shape_mixed(x1, alpha, a):
    tmp = 2.0 * a * np.pi
    return _correct01(np.power(1.0 - x1 - np.cos(tmp * x1 + _HALF_PI) / tmp, alpha))


def shape_disc(x1, alpha, beta, a):
    tmp = np.cos(a * np.power(x1, beta) * np.pi)
    return _correct01(1.0 - np.power(x1, alpha) * tmp * tmp)


class WFG(Problem):
    """Shared plumbing: normalization, grouping, post step, assembly."""

    def __init__(self, spec: ProblemSpec, k: int, l: int):
        super().__init__(spec)
        self.k = k
        self.l = l

    # -- helpers -----------------------------------------------------

    def _degeneracy(self) -> np.ndarray:
        return np.ones(self.spec.m - 1)

    def _group_sums(self, t: np.ndarray, dist_start: int, weights=None) -> np.ndarray:
        """Reduce position groups and the distance tail to m columns."""
        m = self.spec.m
        size = self.k // (m - 1)
        if weights is None:
            weights = np.ones(t.shape[1])
        cols = []
        for j in range(m - 1):
            lo, hi = j * size, (j + 1) * size
            cols.append(reduce_sum(t[:, lo:hi], weights[lo:hi]))
        cols.append(reduce_sum(t[:, dist_start:], weights[dist_start:]))
        return np.column_stack(cols)

    def _post(self, t: np.ndarray) -> np.ndarray:
        tm = t[:, -1][:, None]
        x = np.maximum(tm, self._degeneracy()[None, :]) * (t[:, :-1] - 0.5) + 0.5
        return np.hstack([x, tm])

    def _scales(self) -> np.ndarray:
        return 2.0 * np.arange(1, self.spec.m + 1, dtype=float)

    def _eval(self, z):
        y = _correct01(z / self.spec.upper)
        t = self._transform(y)
        x = self._post(t)
        h = self._shapes(x)
        return x[:, -1][:, None] + self._scales()[None, :] * h

    def _front_image(self, xp: np.ndarray) -> np.ndarray:
        """Objective vectors on the optimum set for given position values."""
        h = self._shapes(np.hstack([xp, np.zeros((len(xp), 1))]))
        return self._scales()[None, :] * h

    def _sample_filtered_front(self, n: int, rng) -> np.ndarray:
        """Rejection sampler for shapes whose image contains dominated parts."""
        pts = np.zeros((0, self.spec.m))
        while len(pts) < n:
            xp = rng.random((3 * n, self.spec.m - 1))
            cand = self._front_image(xp)
            cand = cand[nondominated_mask(cand)]
            pts = np.vstack([pts, cand]) if len(pts) else cand
            pts = pts[nondominated_mask(pts)]
        idx = rng.choice(len(pts), size=n, replace=False)
        return pts[np.sort(idx)]

    def pf_sample(self, n, rng):
        return sample_positive_sphere(self.spec.m, n, rng) * self._scales()[None, :]

    # -- per-problem pieces ------------------------------------------

    def _transform(self, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _shapes(self, x: np.ndarray) -> np.ndarray:
        return shape_concave(x[:, :-1])


def _suffix_means(y: np.ndarray) -> np.ndarray:
    """Column i gets the mean of all later columns (last column unused)."""
    total = y.sum(axis=1)[:, None]
    cs = np.cumsum(y, axis=1)
    counts = y.shape[1] - 1 - np.arange(y.shape[1])
    with np.errstate(divide="ignore", invalid="ignore"):
        u = (total - cs) / counts
    return u


def _prefix_means(y: np.ndarray) -> np.ndarray:
    """Column i gets the mean of all earlier columns (column 0 unused)."""
    cs = np.cumsum(y, axis=1)
    u = np.empty_like(y)
    u[:, 0] = 0.0
    counts = np.arange(1, y.shape[1])
    u[:, 1:] = cs[:, :-1] / counts
    return u


class WFG1(WFG):
    def _transform(self, y):
        k = self.k
        t = y.copy()
        t[:, k:] = shift_linear(t[:, k:], 0.35)
        t[:, k:] = bias_flat(t[:, k:], 0.8, 0.75, 0.85)
        t = bias_poly(t, 0.02)
        weights = 2.0 * np.arange(1, t.shape[1] + 1, dtype=float)
        return self._group_sums(t, k, weights)

    def _shapes(self, x):
        h = shape_convex(x[:, :-1])
        h[:, -1] = shape_mixed(x[:, 0], alpha=1.0, a=5)
        return h

    def pf_sample(self, n, rng):
        return self._sample_filtered_front(n, rng)


class WFG2(WFG):
    def _pair_reduce(self, t):
        k, l = self.k, self.l
        pairs = [reduce_nonsep(t[:, k + 2 * i : k + 2 * i + 2], 2) for i in range(l // 2)]
        return np.column_stack([t[:, :k]] + pairs)

    def _transform(self, y):
        k = self.k
        t = y.copy()
        t[:, k:] = shift_linear(t[:, k:], 0.35)
        t = self._pair_reduce(t)
        return self._group_sums(t, k)

    def _shapes(self, x):
        h = shape_convex(x[:, :-1])
        h[:, -1] = shape_disc(x[:, 0], alpha=1.0, beta=1.0, a=5)
        return h

    def pf_sample(self, n, rng):
        return self._sample_filtered_front(n, rng)


class WFG3(WFG2):
    def _degeneracy(self):
        a = np.zeros(self.spec.m - 1)
        a[0] = 1.0
        return a

    def _shapes(self, x):
        return shape_linear(x[:, :-1])

    def pf_sample(self, n, rng):
        xp = np.full((n, self.spec.m - 1), 0.5)
        xp[:, 0] = np.linspace(0.0, 1.0, n)
        return self._front_image(xp)


class WFG4(WFG):
    def _transform(self, y):
        t = shift_multimodal(y, 30.0, 10.0, 0.35)
        return self._group_sums(t, self.k)


class WFG5(WFG):
    def _transform(self, y):
        t = shift_deceptive(y, 0.35, 0.001, 0.05)
        return self._group_sums(t, self.k)


class WFG6(WFG):
    def _nonsep_groups(self, t):
        m = self.spec.m
        size = self.k // (m - 1)
        cols = [reduce_nonsep(t[:, j * size : (j + 1) * size], size) for j in range(m - 1)]
        cols.append(reduce_nonsep(t[:, self.k :], self.l))
        return np.column_stack(cols)

    def _transform(self, y):
        t = y.copy()
        t[:, self.k :] = shift_linear(t[:, self.k :], 0.35)
        return self._nonsep_groups(t)


class WFG7(WFG):
    def _transform(self, y):
        k = self.k
        u = _suffix_means(y)
        t = y.copy()
        t[:, :k] = bias_param(y[:, :k], u[:, :k], 0.98 / 49.98, 0.02, 50.0)
        t[:, k:] = shift_linear(t[:, k:], 0.35)
        return self._group_sums(t, k)


class WFG8(WFG):
    def _transform(self, y):
        k = self.k
        u = _prefix_means(y)
        t = y.copy()
        t[:, k:] = bias_param(y[:, k:], u[:, k:], 0.98 / 49.98, 0.02, 50.0)
        t[:, k:] = shift_linear(t[:, k:], 0.35)
        return self._group_sums(t, k)


class WFG9(WFG):
    def _transform(self, y):
        k = self.k
        u = _suffix_means(y)
        t = y.copy()
        t[:, :-1] = bias_param(y[:, :-1], u[:, :-1], 0.98 / 49.98, 0.02, 50.0)
        t[:, :k] = shift_deceptive(t[:, :k], 0.35, 0.001, 0.05)
        t[:, k:] = shift_multimodal(t[:, k:], 30.0, 95.0, 0.35)
        size = self.k // (self.spec.m - 1)
        cols = [reduce_nonsep(t[:, j * size : (j + 1) * size], size) for j in range(self.spec.m - 1)]
        cols.append(reduce_nonsep(t[:, k:], self.l))
        return np.column_stack(cols)


WFG_CLASSES = {
    "wfg1": WFG1,
    "wfg2": WFG2,
    "wfg3": WFG3,
    "wfg4": WFG4,
    "wfg5": WFG5,
    "wfg6": WFG6,
    "wfg7": WFG7,
    "wfg8": WFG8,
    "wfg9": WFG9,
}


def make_wfg(name: str, m: int, d: int) -> WFG:
    k = m - 1
    l = d - k
    if l < 1:
        raise ContractError(f"{name}: needs at least {k + 1} variables for {m} objectives")
    if name in ("wfg2", "wfg3") and l % 2:
        raise ContractError(f"{name}: distance tail must have even length, got {l}")
    upper = 2.0 * np.arange(1, d + 1, dtype=float)
    spec = ProblemSpec(name, m, d, np.zeros(d), upper)
    return WFG_CLASSES[name](spec, k, l)
