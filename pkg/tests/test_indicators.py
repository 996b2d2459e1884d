"""IGD, hypervolume, and simplex-lattice reference points."""

from math import comb

import numpy as np
import pytest

from maodpp.core import ContractError
from maodpp.indicators import (
    ReferenceSet,
    das_dennis,
    default_pop_size,
    hv,
    hv_exact_2d,
    hv_monte_carlo,
    igd,
    two_layer_size,
)
from maodpp.rng import RngStream


def igd_oracle(approx, reference):
    # Direct two-loop definition, no vectorization shortcuts.
    total = 0.0
    for r in reference:
        best = min(float(np.linalg.norm(r - a)) for a in approx)
        total += best
    return total / len(reference)


def test_igd_matches_the_two_loop_oracle():
    rng = np.random.default_rng(3)
    for _ in range(25):
        m = int(rng.integers(2, 6))
        approx = rng.random((int(rng.integers(1, 40)), m))
        reference = rng.random((int(rng.integers(1, 60)), m))
        assert igd(approx, reference) == pytest.approx(igd_oracle(approx, reference), abs=1e-12)


def test_igd_accepts_reference_set_wrapper():
    pts = np.array([[0.0, 1.0], [1.0, 0.0]])
    ref = ReferenceSet("toy", 2, pts)
    approx = np.array([[0.5, 0.5]])
    assert igd(approx, ref) == pytest.approx(igd_oracle(approx, pts), abs=1e-14)


def test_igd_edge_cases():
    ref = np.array([[0.0, 0.0], [1.0, 1.0]])
    assert igd(np.zeros((0, 2)), ref) == float("inf")
    with pytest.raises(ContractError):
        igd(np.array([[0.5, 0.5]]), np.zeros((0, 2)))
    with pytest.raises(ContractError):
        igd(np.array([[0.5, 0.5, 0.5]]), ref)


def test_igd_chunking_is_invisible_on_large_references():
    rng = np.random.default_rng(5)
    approx = rng.random((400, 3))
    reference = rng.random((9000, 3))  # forces several chunks
    # Oracle on a thinned slice plus full-call consistency.
    direct = ((reference[:, None, :] - approx[None, :, :]) ** 2).sum(axis=2)
    want = float(np.sqrt(direct.min(axis=1)).mean())
    assert igd(approx, reference) == pytest.approx(want, rel=1e-13)


def hv2d_rectangles(points, ref):
    # Partition the x axis at point abscissas; each strip's dominated
    # height comes from the best f2 among points at or left of it.
    pts = [p for p in points if p[0] < ref[0] and p[1] < ref[1]]
    if not pts:
        return 0.0
    cuts = sorted({p[0] for p in pts}) + [ref[0]]
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        best = min(p[1] for p in pts if p[0] <= a)
        total += (b - a) * (ref[1] - best)
    return total


def test_hv_exact_2d_known_values():
    ref = np.array([1.0, 1.0])
    assert hv_exact_2d(np.array([[0.5, 0.5]]), ref) == pytest.approx(0.25)
    pts = np.array([[0.25, 0.75], [0.75, 0.25]])
    # Two overlapping rectangles: 2 * (0.75 * 0.25) - 0.25^2 overlap counted once.
    assert hv_exact_2d(pts, ref) == pytest.approx(0.3125)
    assert hv_exact_2d(np.array([[2.0, 2.0]]), ref) == 0.0


def test_hv_exact_2d_matches_rectangle_oracle():
    rng = np.random.default_rng(7)
    ref = np.array([1.0, 1.0])
    for _ in range(40):
        pts = rng.random((int(rng.integers(1, 25)), 2)) * 1.2
        assert hv_exact_2d(pts, ref) == pytest.approx(hv2d_rectangles(pts, ref), abs=1e-12)


def test_hv_exact_2d_ignores_duplicates_and_dominated_points():
    ref = np.array([1.0, 1.0])
    base = np.array([[0.2, 0.6], [0.6, 0.2]])
    noisy = np.vstack([base, base, [[0.7, 0.7], [0.9, 0.9]]])
    assert hv_exact_2d(noisy, ref) == pytest.approx(hv_exact_2d(base, ref), abs=1e-14)


def test_hv_monte_carlo_agrees_with_exact_2d():
    rng_data = np.random.default_rng(9)
    ref = np.array([1.0, 1.0])
    pts = rng_data.random((12, 2))
    exact = hv_exact_2d(pts, ref)
    est = hv_monte_carlo(pts, ref, 200_000, RngStream(11))
    assert abs(est - exact) <= 0.01


def test_hv_monte_carlo_is_exact_for_a_single_box():
    # One point dominating the sample box makes every sample a hit.
    pts = np.array([[0.2, 0.3, 0.1]])
    ref = np.array([1.0, 1.0, 1.0])
    est = hv_monte_carlo(pts, ref, 5000, RngStream(13))
    assert est == pytest.approx(0.8 * 0.7 * 0.9, abs=1e-12)


def test_hv_dispatch_and_validation():
    pts = np.array([[0.5, 0.5]])
    ref2 = np.array([1.0, 1.0])
    assert hv(pts, ref2) == pytest.approx(0.25)
    with pytest.raises(ContractError):
        hv(pts, ref2, mode="fancy")
    with pytest.raises(ContractError):
        hv(np.array([[0.5, 0.5, 0.5]]), np.ones(3))  # mc without rng
    val = hv(np.array([[0.5, 0.5, 0.5]]), np.ones(3), n_samples=2000, rng=RngStream(1))
    assert val == pytest.approx(0.125, abs=1e-12)


def test_das_dennis_row_count_and_simplex_membership():
    for m, p in [(2, 4), (3, 12), (5, 6), (8, 3)]:
        w = das_dennis(m, p)
        assert w.shape == (comb(m + p - 1, p), m)
        assert np.allclose(w.sum(axis=1), 1.0, atol=1e-12)
        assert np.all(w >= 0.0)
        # Components live on the lattice i/p.
        assert np.allclose(np.round(w * p), w * p, atol=1e-9)
        # No duplicated rows.
        assert len({tuple(np.round(row * p).astype(int)) for row in w}) == len(w)


def test_das_dennis_degenerate_and_tiny_cases():
    c = das_dennis(4, 0)
    assert c.shape == (1, 4) and np.allclose(c, 0.25)
    w = das_dennis(3, 1)
    assert sorted(map(tuple, w.tolist())) == sorted(map(tuple, np.eye(3).tolist()))
    with pytest.raises(ContractError):
        das_dennis(0, 3)
    with pytest.raises(ContractError):
        das_dennis(3, -1)


def test_two_layer_size_known_values():
    assert two_layer_size(5, 5, 0) == 126
    assert two_layer_size(10, 3, 1) == 230
    assert two_layer_size(15, 2, 2) == 240


def test_default_pop_size_table_and_fallback():
    assert default_pop_size(5) == 126
    assert default_pop_size(10) == 230
    assert default_pop_size(13) == 240
    assert default_pop_size(15) == 240
    # Fallback: smallest single-layer lattice of at least 100 points.
    assert default_pop_size(3) == 105  # p = 13
    assert default_pop_size(2) == 100  # p = 99
