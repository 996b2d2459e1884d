"""Deterministic random streams built on a counter-based generator."""

from __future__ import annotations

import numpy as np


class RngStream:
    """Random stream with reproducible draws and splittable substreams.

    Backed by the Philox counter-based bit generator, so two streams
    created from the same seed produce bitwise-identical draw sequences
    regardless of platform or process. ``split`` derives independent
    child streams; the children are themselves reproducible functions
    of the parent's seed material.
    """

    def __init__(self, seed: int | None = None, _seq: np.random.SeedSequence | None = None):
        if _seq is None:
            _seq = np.random.SeedSequence(seed)
        self.seed = seed
        self._seq = _seq
        self._gen = np.random.Generator(np.random.Philox(_seq))

    def split(self, n: int) -> list["RngStream"]:
        """Derive ``n`` independent child streams."""
        return [RngStream(_seq=child) for child in self._seq.spawn(n)]

    def random(self, size=None):
        """Uniform floats in [0, 1)."""
        return self._gen.random(size)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self._gen.uniform(low, high, size)

    def integers(self, low, high=None, size=None):
        """Uniform integers in [low, high), numpy convention."""
        return self._gen.integers(low, high, size)

    def normal(self, size=None):
        return self._gen.standard_normal(size)

    def choice(self, n, size=None, replace=True, p=None):
        return self._gen.choice(n, size=size, replace=replace, p=p)

    def permutation(self, n):
        return self._gen.permutation(n)
