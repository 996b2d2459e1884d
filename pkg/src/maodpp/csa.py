"""Corner solution archive: extremes per objective and the radius they imply."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ContractError, Population, concat


@dataclass(frozen=True)
class CornerArchive:
    """Solutions near the boundary of the attainable region.

    Built from two sorted views per objective: ascending single-objective
    value (axis corners) and ascending norm of the remaining objectives
    (face corners). Duplicates across views are kept; row order follows
    the construction order, axis rows first. ``face_start`` marks where
    the face rows begin; the default 0 treats every row as a face row,
    which suits archives assembled by hand.
    """

    members: Population
    face_start: int = 0


def archive_quota(n_target: int, m: int) -> tuple[int, int]:
    """Per-objective head sizes: ceil(N / 3M) axis rows, ceil(2N / 3M) face rows."""
    return math.ceil(n_target / (3 * m)), math.ceil(2 * n_target / (3 * m))


def build_csa(source: Population, n_target: int, m: int) -> CornerArchive:
    """Assemble the corner archive from scratch out of ``source``.

    Sorting happens on raw objective values with stable order, so ties
    resolve by row position in ``source``. Quotas clamp to the source
    size when it is small.
    """
    if m != source.n_obj:
        raise ContractError("archive objective count differs from source")
    if len(source) == 0:
        raise ContractError("cannot build a corner archive from an empty population")
    q_axis, q_face = archive_quota(n_target, m)
    f = source.f
    sq = f * f
    total_sq = sq.sum(axis=1)

    picks = []
    for i in range(m):
        rest = np.sqrt(np.maximum(total_sq - sq[:, i], 0.0))
        # Ties on the objective value go to the better-converged row, so a
        # stray minimizer with huge remaining objectives cannot squat on an
        # axis slot forever.
        order = np.lexsort((rest, f[:, i]))
        picks.append(order[:q_axis])
    n_axis = sum(len(p) for p in picks)
    for i in range(m):
        rest = np.sqrt(np.maximum(total_sq - sq[:, i], 0.0))
        order = np.argsort(rest, kind="stable")
        picks.append(order[:q_face])
    return CornerArchive(source.subset(np.concatenate(picks)), n_axis)


def update_csa(archive: CornerArchive, offspring: Population, n_target: int) -> CornerArchive:
    """Rebuild the archive from its current members plus the offspring."""
    merged = concat(archive.members, offspring)
    return build_csa(merged, n_target, merged.n_obj)


def threshold(archive: CornerArchive) -> float:
    """Largest normalized-objective norm over the archive's face rows.

    Solutions inside this radius count as converged when kernel qualities
    are assigned. Only the face rows define it: they minimize the norm of
    the remaining objectives, so their own norms track how far the best
    corners have converged, while axis rows may minimize one objective
    with arbitrarily poor values elsewhere and would inflate the radius
    into meaninglessness. Requires normalized objectives.
    """
    members = archive.members
    if members.f_norm is None:
        raise ContractError("archive members are not normalized")
    if len(members) == 0:
        raise ContractError("empty archive has no threshold")
    f_norm = members.f_norm[archive.face_start :]
    if f_norm.shape[0] == 0:
        raise ContractError("archive has no face rows to set a threshold")
    norms = np.sqrt(np.einsum("ij,ij->i", f_norm, f_norm))
    return float(norms.max())
