"""Benchmark problem registry.

Every problem is built through :func:`make_problem`, which applies the
default dimension rule (D = M-1+5 for the linear-front dtlz pair, D = M-1+10
everywhere else) and validates the family-specific constraints.
"""

from __future__ import annotations

from ..core import ContractError
from .base import Problem, ProblemSpec, unit_box_spec
from . import dtlz as _dtlz
from . import maf as _maf
from .wfg import WFG_CLASSES, make_wfg

_SHORT_TAIL = ("dtlz1", "idtlz1")

_DTLZ_CLASSES = {
    "dtlz1": _dtlz.DTLZ1,
    "dtlz2": _dtlz.DTLZ2,
    "dtlz3": _dtlz.DTLZ3,
    "dtlz4": _dtlz.DTLZ4,
    "dtlz5": _dtlz.DTLZ5,
    "dtlz6": _dtlz.DTLZ6,
    "idtlz1": _dtlz.IDTLZ1,
    "idtlz2": _dtlz.IDTLZ2,
}

_MAF_CLASSES = {
    "maf1": _maf.MaF1,
    "maf2": _maf.MaF2,
    "maf3": _maf.MaF3,
    "maf4": _maf.MaF4,
    "maf5": _maf.MaF5,
    "maf6": _maf.MaF6,
    "maf7": _maf.MaF7,
}

PROBLEM_NAMES = tuple(sorted(_DTLZ_CLASSES) + sorted(_MAF_CLASSES) + sorted(WFG_CLASSES))


def default_dimension(name: str, m: int) -> int:
    return m - 1 + (5 if name in _SHORT_TAIL else 10)


def make_problem(name: str, m: int, d: int | None = None) -> Problem:
    """Instantiate a registered problem with validated shape parameters."""
    key = name.lower()
    if key not in PROBLEM_NAMES:
        raise ContractError(f"unknown problem {name!r}; expected one of {', '.join(PROBLEM_NAMES)}")
    if m < 2:
        raise ContractError(f"{key}: needs at least 2 objectives, got {m}")
    if d is None:
        d = default_dimension(key, m)
    if d < m:
        raise ContractError(f"{key}: needs at least {m} variables for {m} objectives, got {d}")

    if key in WFG_CLASSES:
        return make_wfg(key, m, d)
    cls = _DTLZ_CLASSES.get(key) or _MAF_CLASSES[key]
    return cls(unit_box_spec(key, m, d))


__all__ = [
    "Problem",
    "ProblemSpec",
    "PROBLEM_NAMES",
    "default_dimension",
    "make_problem",
]
