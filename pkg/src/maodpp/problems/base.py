"""Problem abstraction and shared front-sampling helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import ContractError
from ..indicators import das_dennis


@dataclass(frozen=True)
class ProblemSpec:
    """Static description of a problem instance: sizes and box bounds."""

    name: str
    m: int
    d: int
    lower: np.ndarray = field(repr=False)
    upper: np.ndarray = field(repr=False)


class Problem:
    """Scalable benchmark problem: batch evaluation plus front sampling.

    Subclasses implement ``_eval`` on an (n, d) matrix and ``pf_sample``.
    Evaluation is pure: no state, no randomness, finite outputs for any
    point inside the box.
    """

    def __init__(self, spec: ProblemSpec):
        self.spec = spec

    def evaluate(self, x) -> np.ndarray:
        """Objective matrix for an (n, d) batch, or vector for a single point."""
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        if single:
            x = x[None, :]
        if x.ndim != 2 or x.shape[1] != self.spec.d:
            raise ContractError(f"{self.spec.name}: expected {self.spec.d} decision variables")
        if len(x) and (np.any(x < self.spec.lower) or np.any(x > self.spec.upper)):
            raise ContractError(f"{self.spec.name}: decision vector outside bounds")
        f = self._eval(x)
        return f[0] if single else f

    def _eval(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def pf_sample(self, n: int, rng) -> np.ndarray:
        """n points on the analytic Pareto front."""
        raise NotImplementedError


def unit_box_spec(name: str, m: int, d: int) -> ProblemSpec:
    return ProblemSpec(name, m, d, np.zeros(d), np.ones(d))


def sample_positive_sphere(m: int, n: int, rng) -> np.ndarray:
    """n points uniform on the unit sphere restricted to the positive orthant."""
    g = np.abs(rng.normal((n, m)))
    norms = np.sqrt(np.einsum("ij,ij->i", g, g))
    # A zero draw is essentially impossible; floor the norm anyway.
    return g / np.maximum(norms, 1e-300)[:, None]


def sample_simplex(m: int, n: int, rng) -> np.ndarray:
    """n points on the unit simplex: lattice nodes topped up with random fill.

    Uses the largest lattice resolution whose node count fits in ``n``,
    then draws the remainder from the flat Dirichlet (normalized
    exponentials), which jitters the coverage between lattice nodes.
    """
    from math import comb

    p = 0
    while comb(m + p, p + 1) <= n:
        p += 1
    lattice = das_dennis(m, p) if p > 0 else np.zeros((0, m))
    missing = n - len(lattice)
    if missing > 0:
        e = -np.log(1.0 - rng.random((missing, m)))
        fill = e / e.sum(axis=1)[:, None]
        return np.vstack([lattice, fill]) if len(lattice) else fill
    return lattice[:n]


def chain_products(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Corner-to-corner product profile used by several objective families.

    Given per-solution factor rows ``a`` and ``b`` of width M-1, column j
    of the result is prod(a_1..a_{M-1-j}) * b_{M-j} (with the convention
    that the missing factors are 1), matching the usual cumulative-product
    construction of simplex- and sphere-shaped fronts.
    """
    n, w = a.shape
    left = np.hstack([np.ones((n, 1)), np.cumprod(a, axis=1)])
    right = np.hstack([np.ones((n, 1)), b[:, ::-1]])
    return left[:, ::-1] * right


def degenerate_curve(m: int, n: int) -> np.ndarray:
    """Uniform parameter sweep of the degenerate arc fronts.

    Those fronts keep all but the first position angle pinned at pi/4, so
    objective j carries a fixed power of 1/sqrt(2) times cos or sin of the
    sweep parameter.
    """
    t = np.linspace(0.0, 1.0, n) * (np.pi / 2)
    c = np.cos(t)
    s = np.sin(t)
    if m == 2:
        expo = np.array([0.0])
    else:
        expo = np.concatenate([[m - 2.0], np.arange(m - 2.0, 0.0, -1.0)])
    pts = np.empty((n, m))
    pts[:, : m - 1] = c[:, None] * np.power(2.0, -0.5 * expo)[None, :]
    pts[:, m - 1] = s
    return pts
