"""Pignistic and multiscale probability transformations, q-sweeps and rankings.

The multiscale transformation shares each focal set's mass among its
members in proportion to ``diff(w) ** q``, where ``diff`` is the width of
the singleton belief interval.  ``q = 0`` gives the equal split of the
pignistic transformation; larger ``q`` concentrates mass on the members
with the widest intervals.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass

from .core import Frame, MassFunction, SingletonIntervals, members, singleton_intervals
from .errors import DegenerateEvidenceError, ValidationError

DEFAULT_CROSSOVER_GRID = 64

__all__ = [
    "ProbabilityDistribution",
    "Ranking",
    "SweepTable",
    "find_crossover",
    "focal_weights",
    "multiscale",
    "pignistic",
    "rank",
    "sweep",
]


@dataclass(frozen=True)
class ProbabilityDistribution:
    """Per-element probabilities produced by a transformation.

    ``q`` is the exponent used; the pignistic transformation reports
    ``q = 0`` since it coincides with the multiscale one there.
    ``method`` is ``"betp"`` or ``"mulp"``.
    """

    frame: Frame
    probs: tuple[float, ...]
    q: float = 0.0
    method: str = "mulp"

    def __getitem__(self, label: str) -> float:
        return self.probs[self.frame.index(label)]

    def __iter__(self) -> Iterator[tuple[str, float]]:
        return zip(self.frame.labels, self.probs)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.frame.labels, self.probs))

    def total(self) -> float:
        return math.fsum(self.probs)


@dataclass(frozen=True)
class SweepTable:
    qs: tuple[float, ...]
    rows: tuple[ProbabilityDistribution, ...]

    @property
    def frame(self) -> Frame:
        return self.rows[0].frame

    def column(self, label: str) -> tuple[float, ...]:
        return tuple(row[label] for row in self.rows)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Ranking:
    """Elements in decreasing order of probability."""

    entries: tuple[tuple[str, float], ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    def __iter__(self) -> Iterator[tuple[str, float]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return " > ".join(self.labels)


def _check_q(q: float) -> float:
    if isinstance(q, bool) or not isinstance(q, (int, float)):
        raise ValidationError(f"q must be a real number, got {q!r}")
    q = float(q)
    if not math.isfinite(q) or q < 0.0:
        raise ValidationError(f"q must be finite and non-negative, got {q!r}")
    return q


def _member_weights(diffs: Sequence[float], q: float) -> list[float]:
    """Weights of one multi-element focal set from its members' diffs.

    Powers are taken of ``diff / max(diff)`` so the largest term is exactly
    one and no ratio overflows or underflows to an all-zero denominator.
    """
    n = len(diffs)
    if q == 0.0:
        # 0 ** 0 == 1: every member weighs the same.
        return [1.0 / n] * n
    top = max(diffs)
    if not top > 0.0:
        raise DegenerateEvidenceError("multi-element focal set with zero interval widths")
    ratios = [(d / top) ** q for d in diffs]
    denom = math.fsum(ratios)
    return [r / denom for r in ratios]


def focal_weights(intervals: SingletonIntervals, a: int, q: float) -> dict[str, float]:
    """Share of focal set ``a``'s mass given to each of its members.

    >>> from multiscale_bpa import Frame, build_mass_function
    >>> f = Frame("abc")
    >>> m = build_mass_function(f, [("a", 0.5), (("a", "b"), 0.5)])
    >>> focal_weights(singleton_intervals(m), f.mask(["a", "b"]), 1)
    {'a': 0.5, 'b': 0.5}
    """
    q = _check_q(q)
    frame = intervals.frame
    frame.check_mask(a)
    if not a:
        raise ValidationError("weights are undefined for the empty set")
    idx = list(members(a))
    if len(idx) == 1:
        return {frame.labels[idx[0]]: 1.0}
    weights = _member_weights([intervals.diff[i] for i in idx], q)
    return {frame.labels[i]: w for i, w in zip(idx, weights)}


def _allocate(
    m: MassFunction,
    split: Callable[[list[int]], list[float]],
) -> tuple[float, ...]:
    empty = m.empty_mass
    if empty >= 1.0:
        raise DegenerateEvidenceError("m(empty) = 1; the transformation is undefined")
    scale = 1.0 - empty
    parts: list[list[float]] = [[] for _ in m.frame.labels]
    for mask, mass in m.focal:
        if not mask:
            continue
        share = mass / scale
        idx = list(members(mask))
        if len(idx) == 1:
            parts[idx[0]].append(share)
            continue
        for i, w in zip(idx, split(idx)):
            parts[i].append(share * w)
    return tuple(math.fsum(p) for p in parts)


def pignistic(m: MassFunction) -> ProbabilityDistribution:
    """Pignistic transformation: each focal set's mass split evenly."""
    probs = _allocate(m, lambda idx: [1.0 / len(idx)] * len(idx))
    return ProbabilityDistribution(m.frame, probs, 0.0, "betp")


def multiscale(
    m: MassFunction,
    q: float,
    intervals: SingletonIntervals | None = None,
) -> ProbabilityDistribution:
    """Multiscale transformation with exponent ``q``.

    Singleton focal sets keep their whole mass.  ``intervals`` may be
    passed to reuse a precomputed :func:`singleton_intervals` result.
    """
    q = _check_q(q)
    if intervals is None:
        intervals = singleton_intervals(m)
    diff = intervals.diff

    def split(idx: list[int]) -> list[float]:
        return _member_weights([diff[i] for i in idx], q)

    return ProbabilityDistribution(m.frame, _allocate(m, split), q, "mulp")


def sweep(m: MassFunction, qs: Iterable[float]) -> SweepTable:
    """Multiscale distributions for an ascending list of exponents."""
    qs = tuple(qs)
    if not qs:
        raise ValidationError("sweep needs at least one q value")
    intervals = singleton_intervals(m)
    rows = []
    checked = []
    for q in qs:
        try:
            q = _check_q(q)
            rows.append(multiscale(m, q, intervals))
        except (ValidationError, DegenerateEvidenceError) as exc:
            raise type(exc)(f"at q={q!r}: {exc}") from exc
        if checked and q < checked[-1]:
            raise ValidationError(f"sweep q values must be ascending; {q!r} follows {checked[-1]!r}")
        checked.append(q)
    return SweepTable(tuple(checked), tuple(rows))


def rank(p: ProbabilityDistribution) -> Ranking:
    """Sort elements by decreasing probability, ties in frame order."""
    order = sorted(range(len(p.probs)), key=lambda i: (-p.probs[i], i))
    return Ranking(tuple((p.frame.labels[i], p.probs[i]) for i in order))


def find_crossover(
    m: MassFunction,
    x: str,
    y: str,
    q_lo: float,
    q_hi: float,
    tol: float = 1e-6,
    grid: int = DEFAULT_CROSSOVER_GRID,
) -> float | None:
    """Locate an exponent where ``MulP(x) - MulP(y)`` changes sign.

    The interval is scanned on ``grid`` evenly spaced points (endpoints
    included) and the first bracketing cell is bisected until it is
    narrower than ``tol``.  Returns ``None`` when no sign change is seen.
    Crossings that start and end inside one grid cell are not detected.
    """
    frame = m.frame
    ix, iy = frame.index(x), frame.index(y)
    if ix == iy:
        raise ValidationError(f"crossover needs two distinct elements, got {x!r} twice")
    q_lo, q_hi = _check_q(q_lo), _check_q(q_hi)
    if not q_lo < q_hi:
        raise ValidationError(f"invalid interval [{q_lo!r}, {q_hi!r}]")
    if not (math.isfinite(tol) and tol > 0):
        raise ValidationError(f"tolerance must be positive, got {tol!r}")
    if grid < 2:
        raise ValidationError(f"grid needs at least 2 points, got {grid}")

    intervals = singleton_intervals(m)

    def gap(q: float) -> float:
        probs = multiscale(m, q, intervals).probs
        return probs[ix] - probs[iy]

    step = (q_hi - q_lo) / (grid - 1)
    points = [q_lo + k * step for k in range(grid - 1)] + [q_hi]
    lo, g_lo = points[0], gap(points[0])
    if g_lo == 0.0:
        return lo
    for hi in points[1:]:
        g_hi = gap(hi)
        if g_hi == 0.0:
            return hi
        if (g_lo < 0.0) != (g_hi < 0.0):
            break
        lo, g_lo = hi, g_hi
    else:
        return None

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        g_mid = gap(mid)
        if g_mid == 0.0:
            return mid
        if (g_mid < 0.0) == (g_lo < 0.0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
