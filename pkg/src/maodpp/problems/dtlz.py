"""DTLZ family and the two inverted variants."""

from __future__ import annotations

import numpy as np

from .base import (
    Problem,
    chain_products,
    degenerate_curve,
    sample_positive_sphere,
    sample_simplex,
    unit_box_spec,
)


def g_multimodal(xd: np.ndarray) -> np.ndarray:
    """Rastrigin-style distance penalty: zero at 0.5, heavily multimodal."""
    z = xd - 0.5
    k = xd.shape[1]
    return 100.0 * (k + (z * z - np.cos(20.0 * np.pi * z)).sum(axis=1))


def g_sphere(xd: np.ndarray) -> np.ndarray:
    z = xd - 0.5
    return (z * z).sum(axis=1)


def _split(x: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    return x[:, : m - 1], x[:, m - 1 :]


def linear_objectives(xp: np.ndarray) -> np.ndarray:
    """Simplex-shaped profile: rows sum to one."""
    return chain_products(xp, 1.0 - xp)


def spherical_objectives(theta: np.ndarray) -> np.ndarray:
    """Unit-sphere profile from angles given as fractions of pi/2."""
    half_pi = 0.5 * np.pi
    return chain_products(np.cos(theta * half_pi), np.sin(theta * half_pi))


class DTLZ1(Problem):
    """Linear front at sum(f) = 0.5 with a multimodal distance landscape."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_multimodal(xd)
        return 0.5 * (1.0 + g)[:, None] * linear_objectives(xp)

    def pf_sample(self, n, rng):
        return 0.5 * sample_simplex(self.spec.m, n, rng)


class DTLZ2(Problem):
    """Concave spherical front, unimodal distance landscape."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_sphere(xd)
        return (1.0 + g)[:, None] * spherical_objectives(xp)

    def pf_sample(self, n, rng):
        return sample_positive_sphere(self.spec.m, n, rng)


class DTLZ3(DTLZ2):
    """Spherical front with the multimodal distance penalty."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_multimodal(xd)
        return (1.0 + g)[:, None] * spherical_objectives(xp)


class DTLZ4(DTLZ2):
    """Spherical front with a strong density bias from the power transform."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_sphere(xd)
        return (1.0 + g)[:, None] * spherical_objectives(xp**100)


class DTLZ5(Problem):
    """Degenerate arc: all but the first angle collapse toward pi/4."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_sphere(xd)
        theta = xp.copy()
        if theta.shape[1] > 1:
            gg = g[:, None]
            theta[:, 1:] = (1.0 + 2.0 * gg * xp[:, 1:]) / (2.0 * (1.0 + gg))
        return (1.0 + g)[:, None] * spherical_objectives(theta)

    def pf_sample(self, n, rng):
        return degenerate_curve(self.spec.m, n)


class DTLZ6(DTLZ5):
    """Same arc as DTLZ5 with a biased, hard-to-reach distance optimum."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = np.power(xd, 0.1).sum(axis=1)
        theta = xp.copy()
        if theta.shape[1] > 1:
            gg = g[:, None]
            theta[:, 1:] = (1.0 + 2.0 * gg * xp[:, 1:]) / (2.0 * (1.0 + gg))
        return (1.0 + g)[:, None] * spherical_objectives(theta)


class IDTLZ1(Problem):
    """Inverted linear front: f = 0.5 (1 + g) - DTLZ1 objectives."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_multimodal(xd)
        base = 0.5 * (1.0 + g)[:, None]
        return base - base * linear_objectives(xp)

    def pf_sample(self, n, rng):
        return 0.5 * (1.0 - sample_simplex(self.spec.m, n, rng))


class IDTLZ2(Problem):
    """Inverted spherical front: f = (1 + g) - DTLZ2 objectives."""

    def _eval(self, x):
        xp, xd = _split(x, self.spec.m)
        g = g_sphere(xd)
        base = (1.0 + g)[:, None]
        return base - base * spherical_objectives(xp)

    def pf_sample(self, n, rng):
        return 1.0 - sample_positive_sphere(self.spec.m, n, rng)


def make(cls, name: str, m: int, d: int) -> Problem:
    return cls(unit_box_spec(name, m, d))
