"""MaF test functions 1 through 7.

Constants follow the suite's reference implementation: scale base a = 2
for the badly scaled variants, position bias exponent 100 and a quartic
outer power for MaF5, and the two-variable arc for MaF6.
"""

from __future__ import annotations

import numpy as np

from ..core import nondominated_mask
from .base import (
    Problem,
    chain_products,
    degenerate_curve,
    sample_positive_sphere,
    sample_simplex,
)
from .dtlz import (
    _split,
    g_multimodal,
    g_sphere,
    linear_objectives,
    spherical_objectives,
)


class MaF1(Problem):
    """Inverted linear front, unimodal distance landscape."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_sphere(xd)
        return (1.0 + g)[:, None] * (1.0 - linear_objectives(xp))

    def pf_sample(self, n, rng):
        return 1.0 - sample_simplex(self.spec.m, n, rng)


class MaF2(Problem):
    """Concave front with per-objective distance groups and squeezed angles."""

    def _eval(self, x):
        m, d = self.spec.m, self.spec.d
        xp, xd = _split(x, m)
        n = x.shape[0]
        c = (d - m + 1) // m
        g = np.zeros((n, m))
        for j in range(m):
            lo = c * j
            hi = c * (j + 1) if j < m - 1 else d - m + 1
            block = xd[:, lo:hi]
            if block.shape[1]:
                z = (block / 2.0 + 0.25) - 0.5
                g[:, j] = (z * z).sum(axis=1)
        theta = xp / 2.0 + 0.25
        return (1.0 + g) * spherical_objectives(theta)

    def pf_sample(self, n, rng):
        theta = rng.random((n, self.spec.m - 1)) / 2.0 + 0.25
        return spherical_objectives(theta)


class MaF3(Problem):
    """Convex spherical front (quartic except the last objective), multimodal g."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_multimodal(xd)
        base = (1.0 + g)[:, None] * spherical_objectives(xp)
        out = np.empty_like(base)
        out[:, :-1] = base[:, :-1] ** 4
        out[:, -1] = base[:, -1] ** 2
        return out

    def pf_sample(self, n, rng):
        y = sample_positive_sphere(self.spec.m, n, rng)
        out = np.empty_like(y)
        out[:, :-1] = y[:, :-1] ** 4
        out[:, -1] = y[:, -1] ** 2
        return out


class MaF4(Problem):
    """Inverted concave front with objective ranges doubling per index."""

    def _eval(self, x):
        m = self.spec.m
        xp, xd = _split(x, m)
        g = g_multimodal(xd)
        scale = np.power(2.0, np.arange(1, m + 1))
        return (1.0 + g)[:, None] * (1.0 - spherical_objectives(xp)) * scale

    def pf_sample(self, n, rng):
        scale = np.power(2.0, np.arange(1, self.spec.m + 1))
        return (1.0 - sample_positive_sphere(self.spec.m, n, rng)) * scale


class MaF5(Problem):
    """Convex badly scaled front with a strong density bias."""

    def _eval(self, x):
        m = self.spec.m
        xp, xd = _split(x, m)
        g = g_sphere(xd)
        base = (1.0 + g)[:, None] * spherical_objectives(xp**100)
        scale = np.power(2.0, np.arange(m, 0, -1))
        return base**4 * scale

    def pf_sample(self, n, rng):
        scale = np.power(2.0, np.arange(self.spec.m, 0, -1))
        return sample_positive_sphere(self.spec.m, n, rng) ** 4 * scale


class MaF6(Problem):
    """Degenerate two-dimensional arc embedded in m objectives."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_sphere(xd)
        theta = xp.copy()
        if theta.shape[1] > 1:
            gg = g[:, None]
            theta[:, 1:] = (1.0 + 2.0 * gg * xp[:, 1:]) / (2.0 * (1.0 + gg))
        return (1.0 + 100.0 * g)[:, None] * spherical_objectives(theta)

    def pf_sample(self, n, rng):
        return degenerate_curve(self.spec.m, n)


class MaF7(Problem):
    """Disconnected front: free first objectives, oscillating last one."""

    def _eval(self, x):
        m = self.spec.m
        xp, xd = _split(x, m)
        g = 1.0 + 9.0 * xd.mean(axis=1)
        h = m - ((xp / (1.0 + g[:, None])) * (1.0 + np.sin(3.0 * np.pi * xp))).sum(axis=1)
        return np.hstack([xp, ((1.0 + g) * h)[:, None]])

    def pf_sample(self, n, rng):
        pts = np.zeros((0, self.spec.m))
        while len(pts) < n:
            xp = rng.random((3 * n, self.spec.m - 1))
            h = self.spec.m - (xp / 2.0 * (1.0 + np.sin(3.0 * np.pi * xp))).sum(axis=1)
            cand = np.hstack([xp, (2.0 * h)[:, None]])
            cand = cand[nondominated_mask(cand)]
            pts = np.vstack([pts, cand]) if len(pts) else cand
            pts = pts[nondominated_mask(pts)]
        idx = rng.choice(len(pts), size=n, replace=False)
        return pts[np.sort(idx)]
