"""Frames of discernment, basic probability assignments, belief and plausibility.

Subsets of a frame are plain ``int`` bitmasks: bit ``i`` is set when the
element at index ``i`` of the frame belongs to the subset.  ``0`` is the
empty set and ``frame.omega`` is the whole frame.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from .errors import DegenerateEvidenceError, ValidationError

MAX_FRAME_SIZE = 64
DEFAULT_TOLERANCE = 1e-9

__all__ = [
    "DEFAULT_TOLERANCE",
    "MAX_FRAME_SIZE",
    "Frame",
    "MassFunction",
    "SingletonIntervals",
    "bel",
    "build_mass_function",
    "cardinality",
    "members",
    "pl",
    "singleton_intervals",
]


def cardinality(mask: int) -> int:
    return mask.bit_count()


def members(mask: int) -> Iterator[int]:
    """Yield the element indices present in ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment.

    The position of a label fixes its bit in every subset mask built on
    this frame.
    """

    labels: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ValidationError("frame must contain at least one element")
        if len(labels) > MAX_FRAME_SIZE:
            raise ValidationError(
                f"frame has {len(labels)} elements; at most {MAX_FRAME_SIZE} are supported"
            )
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValidationError(f"frame labels must be non-empty strings, got {label!r}")
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            dupes = sorted({x for x in labels if labels.count(x) > 1})
            raise ValidationError(f"duplicate frame labels: {', '.join(dupes)}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    @property
    def omega(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown label {label!r}") from None

    def mask(self, labels: Iterable[str] | str) -> int:
        """Subset mask for a collection of labels.

        A bare string is taken as a single label, not as a sequence of
        one-character labels.
        """
        if isinstance(labels, str):
            labels = (labels,)
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return bits

    def labels_of(self, mask: int) -> tuple[str, ...]:
        self.check_mask(mask)
        return tuple(self.labels[i] for i in members(mask))

    def check_mask(self, mask: int) -> None:
        if mask < 0 or mask & ~self.omega:
            raise ValidationError(
                f"subset mask {mask:#x} uses bits outside a frame of {len(self)} elements"
            )

    def complement(self, mask: int) -> int:
        self.check_mask(mask)
        return self.omega & ~mask


@dataclass(frozen=True)
class MassFunction:
    """A validated basic probability assignment.

    Only focal elements are stored, as ``(mask, mass)`` pairs sorted by
    mask.  Instances are immutable; use :func:`build_mass_function` or
    :meth:`from_masks` to create one.
    """

    frame: Frame
    focal: tuple[tuple[int, float], ...]

    @classmethod
    def from_masks(
        cls,
        frame: Frame,
        masses: Mapping[int, float] | Iterable[tuple[int, float]],
        *,
        strict: bool = False,
        tolerance: float = DEFAULT_TOLERANCE,
    ) -> MassFunction:
        pairs = masses.items() if isinstance(masses, Mapping) else masses
        seen: dict[int, float] = {}
        for mask, mass in pairs:
            frame.check_mask(mask)
            name = _describe(frame, mask)
            if mask in seen:
                raise ValidationError(f"duplicate focal set {name}")
            if isinstance(mass, bool) or not isinstance(mass, (int, float)):
                raise ValidationError(f"mass for {name} is not a number: {mass!r}")
            mass = float(mass)
            if not math.isfinite(mass):
                raise ValidationError(f"mass for {name} is not finite: {mass!r}")
            if mass <= 0.0:
                raise ValidationError(f"mass for {name} must be strictly positive, got {mass!r}")
            if mass > 1.0 + tolerance:
                raise ValidationError(f"mass for {name} exceeds 1: {mass!r}")
            seen[mask] = mass

        total = math.fsum(seen.values())
        if abs(total - 1.0) > tolerance:
            raise ValidationError(f"masses sum to {total!r}, expected 1 (tolerance {tolerance:g})")
        empty = seen.get(0, 0.0)
        if empty >= 1.0 or (not seen.keys() - {0}):
            raise DegenerateEvidenceError("all mass is on the empty set; m(empty) must be < 1")
        if strict and empty > 0.0:
            raise ValidationError(f"strict mode forbids mass on the empty set (got {empty!r})")
        return cls(frame, tuple(sorted(seen.items())))

    @property
    def masses(self) -> dict[int, float]:
        return dict(self.focal)

    @property
    def empty_mass(self) -> float:
        return self[0]

    def __getitem__(self, mask: int) -> float:
        for m, v in self.focal:
            if m == mask:
                return v
        self.frame.check_mask(mask)
        return 0.0

    def __len__(self) -> int:
        return len(self.focal)

    def __iter__(self) -> Iterator[tuple[int, float]]:
        return iter(self.focal)

    def is_bayesian(self) -> bool:
        return all(cardinality(mask) == 1 for mask, _ in self.focal)

    def labelled(self) -> dict[tuple[str, ...], float]:
        return {self.frame.labels_of(mask): mass for mask, mass in self.focal}


def _describe(frame: Frame, mask: int) -> str:
    if mask == 0:
        return "{}"
    return "{" + ",".join(frame.labels[i] for i in members(mask)) + "}"


def build_mass_function(
    frame: Frame,
    entries: Iterable[tuple[Iterable[str] | str, float]],
    *,
    strict: bool = False,
    tolerance: float = DEFAULT_TOLERANCE,
) -> MassFunction:
    """Validate ``(labels, mass)`` entries into a :class:`MassFunction`.

    Duplicated subsets are rejected rather than merged.  With ``strict``
    the empty set may not carry mass at all; otherwise ``0 <= m({}) < 1``.

    >>> f = Frame("abc")
    >>> m = build_mass_function(f, [("a", 0.6), (("a", "b", "c"), 0.4)])
    >>> len(m)
    2
    """
    pairs = []
    for labels, mass in entries:
        pairs.append((frame.mask(labels), mass))
    return MassFunction.from_masks(frame, pairs, strict=strict, tolerance=tolerance)


def bel(m: MassFunction, a: int) -> float:
    """Total mass of the non-empty focal sets contained in ``a``."""
    m.frame.check_mask(a)
    return math.fsum(v for b, v in m.focal if b and not b & ~a)


def pl(m: MassFunction, a: int) -> float:
    """Total mass of the focal sets intersecting ``a``."""
    m.frame.check_mask(a)
    return math.fsum(v for b, v in m.focal if b & a)


@dataclass(frozen=True)
class SingletonIntervals:
    """Belief, plausibility and their difference for every frame element."""

    frame: Frame
    bel: tuple[float, ...]
    pl: tuple[float, ...]
    diff: tuple[float, ...]

    def of(self, label: str) -> tuple[float, float, float]:
        i = self.frame.index(label)
        return self.bel[i], self.pl[i], self.diff[i]


def singleton_intervals(m: MassFunction) -> SingletonIntervals:
    """Bel, Pl and Pl - Bel of each singleton in one pass over the focal sets.

    The difference is accumulated directly from the multi-element focal
    sets containing each element instead of subtracting two rounded sums,
    so ``diff[i] >= m(A)`` holds exactly for every such set ``A``.
    """
    n = len(m.frame)
    inside: list[list[float]] = [[] for _ in range(n)]
    spread: list[list[float]] = [[] for _ in range(n)]
    for mask, mass in m.focal:
        if not mask:
            continue
        bucket = inside if mask & (mask - 1) == 0 else spread
        for i in members(mask):
            bucket[i].append(mass)
    b = tuple(math.fsum(x) for x in inside)
    d = tuple(math.fsum(x) for x in spread)
    p = tuple(math.fsum(x + y) for x, y in zip(inside, spread))
    return SingletonIntervals(m.frame, b, p, d)
