"""Dempster's rule of combination for fusing independent sources."""

from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from functools import reduce

from .core import DEFAULT_TOLERANCE, MassFunction
from .errors import DegenerateEvidenceError, ValidationError

__all__ = ["ConflictReport", "combine", "combine_all"]


@dataclass(frozen=True)
class ConflictReport:
    """Mass that fell on the empty set before normalisation."""

    k: float


def combine(
    m1: MassFunction,
    m2: MassFunction,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
) -> tuple[MassFunction, ConflictReport]:
    """Combine two mass functions on the same frame with Dempster's rule."""
    if m1.frame != m2.frame:
        raise ValidationError(
            f"cannot combine mass functions on different frames "
            f"{list(m1.frame.labels)} and {list(m2.frame.labels)}"
        )
    for name, m in (("first", m1), ("second", m2)):
        if m.empty_mass > 0.0:
            raise ValidationError(f"{name} mass function has mass on the empty set")

    products: dict[int, list[float]] = defaultdict(list)
    for b, mb in m1.focal:
        for c, mc in m2.focal:
            products[b & c].append(mb * mc)
    sums = {a: math.fsum(v) for a, v in sorted(products.items())}
    k = sums.pop(0, 0.0)
    if not sums or k >= 1.0:
        raise DegenerateEvidenceError("total conflict (k = 1); Dempster's rule is undefined")
    # Rounding can push a lone surviving set a hair above 1.
    fused = {a: min(v / (1.0 - k), 1.0) for a, v in sums.items()}
    return MassFunction.from_masks(m1.frame, fused, strict=True, tolerance=tolerance), ConflictReport(k)


def combine_all(
    sources: Iterable[MassFunction],
    *,
    tolerance: float = DEFAULT_TOLERANCE,
) -> tuple[MassFunction, list[ConflictReport]]:
    """Left fold of :func:`combine` over ``sources``; one report per step."""
    sources = list(sources)
    if not sources:
        raise ValidationError("nothing to combine")
    reports: list[ConflictReport] = []

    def step(acc: MassFunction, nxt: MassFunction) -> MassFunction:
        fused, report = combine(acc, nxt, tolerance=tolerance)
        reports.append(report)
        return fused

    return reduce(step, sources[1:], sources[0]), reports
