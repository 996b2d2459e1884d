"""Dominance, population containers, and normalization context."""

import numpy as np
import pytest

from maodpp.core import (
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


def dominates_oracle(a, b):
    # Literal textbook definition, kept independent of the implementation.
    not_worse = all(x <= y for x, y in zip(a, b))
    strictly_better = any(x < y for x, y in zip(a, b))
    return not_worse and strictly_better


def nondominated_oracle(f):
    n = len(f)
    keep = np.ones(n, dtype=bool)
    for i in range(n):
        for j in range(n):
            if i != j and dominates_oracle(f[j], f[i]):
                keep[i] = False
                break
    return keep


def test_dominates_matches_oracle_on_random_pairs():
    rng = np.random.default_rng(11)
    for _ in range(500):
        m = rng.integers(2, 8)
        a = rng.random(m)
        b = rng.random(m)
        # Force frequent ties so the strict/weak split is exercised.
        if rng.random() < 0.5:
            k = rng.integers(0, m)
            b[:k] = a[:k]
        assert dominates(a, b) == dominates_oracle(a, b)
        assert dominates(a, a) is False


def test_dominates_rejects_mismatched_shapes():
    with pytest.raises(ContractError):
        dominates(np.zeros(3), np.zeros(4))


def test_nondominated_mask_matches_oracle():
    rng = np.random.default_rng(23)
    for _ in range(60):
        n = int(rng.integers(1, 60))
        m = int(rng.integers(2, 7))
        f = rng.random((n, m))
        if rng.random() < 0.3:
            # Duplicates must all survive together.
            f[rng.integers(0, n)] = f[rng.integers(0, n)]
        got = nondominated_mask(f)
        assert np.array_equal(got, nondominated_oracle(f))


def test_nondominated_mask_keeps_duplicates():
    f = np.array([[0.5, 0.5], [0.5, 0.5], [0.2, 0.9]])
    assert nondominated_mask(f).all()


def test_nondominated_mask_chunking_agrees_with_single_block():
    # Large enough rows that several chunks are used internally.
    rng = np.random.default_rng(5)
    f = rng.random((4000, 8))
    got = nondominated_mask(f)
    assert np.array_equal(got, nondominated_oracle(f))


def test_population_shape_checks():
    x = np.zeros((4, 3))
    f = np.zeros((4, 2))
    pop = Population(x, f)
    assert len(pop) == 4 and pop.n_var == 3 and pop.n_obj == 2
    with pytest.raises(ContractError):
        Population(np.zeros((4, 3)), np.zeros((5, 2)))


def test_population_subset_and_solution_views():
    rng = np.random.default_rng(3)
    pop = Population(rng.random((6, 4)), rng.random((6, 3)))
    sub = pop.subset([4, 1])
    assert np.array_equal(sub.x[0], pop.x[4])
    assert np.array_equal(sub.f[1], pop.f[1])
    sol = pop.solution(2)
    assert isinstance(sol, Solution)
    assert np.array_equal(sol.f, pop.f[2])


def test_concat_orders_first_population_first():
    a = Population(np.zeros((2, 2)), np.ones((2, 2)))
    b = Population(np.ones((3, 2)), np.zeros((3, 2)))
    both = concat(a, b)
    assert len(both) == 5
    assert np.array_equal(both.f[:2], a.f)
    assert np.array_equal(both.f[2:], b.f)


def test_nondominated_filter_preserves_order():
    f = np.array([[0.9, 0.1], [0.5, 0.5], [0.6, 0.6], [0.1, 0.9]])
    pop = Population(np.zeros((4, 1)), f)
    front = nondominated_filter(pop)
    assert np.array_equal(front.f, f[[0, 1, 3]])


def test_initial_context_is_componentwise_extremes():
    rng = np.random.default_rng(8)
    f = rng.random((30, 4))
    ctx = initial_context(Population(np.zeros((30, 1)), f))
    assert np.array_equal(ctx.ideal, f.min(axis=0))
    assert np.array_equal(ctx.nadir, f.max(axis=0))


def test_update_ideal_folding_equals_union_minimum():
    # Folding one batch at a time must land on the same ideal as a single
    # minimum over the concatenated history.
    rng = np.random.default_rng(17)
    for _ in range(20):
        batches = [rng.random((int(rng.integers(1, 10)), 3)) for _ in range(5)]
        ctx = initial_context(Population(np.zeros((len(batches[0]), 1)), batches[0]))
        for f in batches[1:]:
            ctx = update_ideal(ctx, Population(np.zeros((len(f), 1)), f))
        union = np.vstack(batches)
        assert np.allclose(ctx.ideal, union.min(axis=0), atol=0)


def test_update_ideal_ignores_empty_population():
    ctx = NormalizationContext(np.zeros(2), np.ones(2))
    empty = Population(np.zeros((0, 1)), np.zeros((0, 2)))
    assert update_ideal(ctx, empty) is ctx


def test_update_nadir_is_recomputed_not_folded():
    ctx = NormalizationContext(np.zeros(2), np.array([100.0, 100.0]))
    pop = Population(np.zeros((2, 1)), np.array([[1.0, 2.0], [3.0, 0.5]]))
    new = update_nadir(ctx, pop)
    # The stale 100s vanish: only current members define the nadir.
    assert np.array_equal(new.nadir, [3.0, 2.0])
    assert np.array_equal(new.ideal, ctx.ideal)


def test_update_nadir_requires_some_solution():
    ctx = NormalizationContext(np.zeros(2), np.ones(2))
    empty = Population(np.zeros((0, 1)), np.zeros((0, 2)))
    with pytest.raises(ContractError):
        update_nadir(ctx, empty)


def test_normalize_maps_bounds_to_unit_box():
    rng = np.random.default_rng(29)
    f = rng.random((40, 3)) * 7.0 - 2.0
    pop = Population(np.zeros((40, 1)), f)
    ctx = initial_context(pop)
    normed = normalize(pop, ctx)
    assert normed.f_norm.min() >= 0.0
    assert normed.f_norm.max() <= 1.0 + 1e-12
    assert np.any(np.isclose(normed.f_norm.min(axis=0), 0.0))


def test_normalize_floors_degenerate_span():
    # A constant objective must not divide by zero.
    f = np.column_stack([np.full(5, 3.0), np.linspace(0, 1, 5)])
    pop = Population(np.zeros((5, 1)), f)
    ctx = initial_context(pop)
    normed = normalize(pop, ctx)
    assert np.all(np.isfinite(normed.f_norm))
    assert np.all(normed.f_norm[:, 0] == 0.0)
