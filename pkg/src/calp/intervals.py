"""Closed [belief, plausibility] intervals and their product/sum algebra."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

# Allowed float drift when snapping endpoints back into range.
_SNAP = 1e-9


@dataclass(frozen=True)
class CapacityInterval:
    """An interval whose endpoints are a lower (belief) and an upper
    (plausibility) capacity.

    The lower endpoint always lies in [0, 1].  The upper endpoint may exceed 1:
    summing plausibilities of overlapping evidence is super-additive, and the
    excess is clamped only when a final query answer is reported.  Use
    :meth:`from_belief_plausibility` when both endpoints must be capacities.
    """

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoints must not be NaN")
        if -_SNAP <= lo < 0.0:
            lo = 0.0
        if 1.0 < lo <= 1.0 + _SNAP:
            lo = 1.0
        if -_SNAP <= hi < 0.0:
            hi = 0.0
        if not 0.0 <= lo <= 1.0:
            raise ValueError(f"lower endpoint {lo} outside [0, 1]")
        if hi < 0.0:
            raise ValueError(f"upper endpoint {hi} negative")
        if lo > hi:
            if lo - hi > _SNAP:
                raise ValueError(f"invalid interval [{lo}, {hi}]")
            lo = hi
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, p: float) -> "CapacityInterval":
        return cls(p, p)

    @classmethod
    def from_belief_plausibility(cls, belief: float, plausibility: float) -> "CapacityInterval":
        """Build from a (belief, plausibility) pair; both must lie in [0, 1]."""
        if plausibility > 1.0 + _SNAP:
            raise ValueError(f"plausibility {plausibility} exceeds 1")
        return cls(belief, min(plausibility, 1.0))

    def __mul__(self, other: "CapacityInterval") -> "CapacityInterval":
        # Valid componentwise because all endpoints are nonnegative.
        return CapacityInterval(self.lo * other.lo, self.hi * other.hi)

    def __add__(self, other: "CapacityInterval") -> "CapacityInterval":
        # No clamping here: callers clamp at final reporting only.
        return CapacityInterval(self.lo + other.lo, self.hi + other.hi)

    def clamp(self) -> tuple["CapacityInterval", bool]:
        """Clamp endpoints into [0, 1]; the flag reports whether anything was cut."""
        lo = min(max(self.lo, 0.0), 1.0)
        hi = min(max(self.hi, 0.0), 1.0)
        changed = lo != self.lo or hi != self.hi
        return CapacityInterval(lo, hi), changed

    def isclose(self, other: "CapacityInterval", tol: float = 1e-9) -> bool:
        return abs(self.lo - other.lo) <= tol and abs(self.hi - other.hi) <= tol

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


UNIT = CapacityInterval(1.0, 1.0)
ZERO = CapacityInterval(0.0, 0.0)


def interval_product(intervals: Iterable[CapacityInterval]) -> CapacityInterval:
    out = UNIT
    for iv in intervals:
        out = out * iv
    return out


def interval_sum(intervals: Iterable[CapacityInterval]) -> CapacityInterval:
    out = ZERO
    for iv in intervals:
        out = out + iv
    return out
