"""Exact arcs and arc unions on the circle.

Angles are :class:`fractions.Fraction` values measured in turns
(1 turn = 2*pi radians) and normalised into ``(0, 1]``.  An arc is the
half-open set ``(lo, hi]`` swept counter-clockwise from ``lo`` to ``hi``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from math import pi
from typing import Iterable, Sequence

ONE = Fraction(1)
ZERO = Fraction(0)

Segment = tuple[Fraction, Fraction]


def angle(value) -> Fraction:
    """Coerce ``value`` to an exact angle in ``(0, 1]`` turns."""
    x = Fraction(value) % 1
    return ONE if x == 0 else x


def to_radians(turns) -> float:
    return float(turns) * 2 * pi


def to_degrees(turns) -> float:
    return float(turns) * 360


@dataclass(frozen=True, order=True)
class AngularInterval:
    """Proper half-open arc ``(lo, hi]``; wraps through 1 when ``hi <= lo``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", angle(self.lo))
        object.__setattr__(self, "hi", angle(self.hi))
        if self.lo == self.hi:
            raise ValueError("arc must have width strictly between 0 and 1 turn")

    @property
    def width(self) -> Fraction:
        return (self.hi - self.lo) % 1

    @property
    def midpoint(self) -> Fraction:
        return angle(self.lo + self.width / 2)

    def contains(self, psi) -> bool:
        offset = (angle(psi) - self.lo) % 1
        return 0 < offset <= self.width

    def segments(self) -> list[Segment]:
        """Split into non-wrapping pieces ``(a, b]`` with ``0 <= a < b <= 1``."""
        lo = ZERO if self.lo == 1 else self.lo
        if lo < self.hi:
            return [(lo, self.hi)]
        out = [(lo, ONE)]
        out.append((ZERO, self.hi))
        return sorted(out)

    def __str__(self):
        return f"({self.lo}, {self.hi}]"


def width(iv: AngularInterval) -> Fraction:
    return iv.width


def contains(iv: AngularInterval, psi) -> bool:
    return iv.contains(psi)


def _normalise(segments: Iterable[Segment]) -> tuple[Segment, ...]:
    # sort, drop empties, merge overlapping or abutting pieces
    merged: list[list[Fraction]] = []
    for a, b in sorted(s for s in segments if s[0] < s[1]):
        if merged and a <= merged[-1][1]:
            if b > merged[-1][1]:
                merged[-1][1] = b
        else:
            merged.append([a, b])
    return tuple((a, b) for a, b in merged)


class AngularRegion:
    """Finite union of arcs, kept in canonical (sorted, merged) form.

    Internally the region is stored as non-wrapping segments of ``(0, 1]``;
    :attr:`arcs` re-joins the piece ending at 1 with the piece starting at 0.
    """

    __slots__ = ("_segments",)

    def __init__(self, segments: Iterable[Segment] = ()):
        segs = []
        for a, b in segments:
            a, b = Fraction(a), Fraction(b)
            if not (0 <= a and b <= 1):
                raise ValueError(f"segment ({a}, {b}] outside (0, 1]")
            segs.append((a, b))
        self._segments = _normalise(segs)

    @classmethod
    def empty(cls) -> "AngularRegion":
        return cls()

    @classmethod
    def full(cls) -> "AngularRegion":
        return cls([(ZERO, ONE)])

    @classmethod
    def from_arcs(cls, arcs: Iterable[AngularInterval]) -> "AngularRegion":
        return cls(s for iv in arcs for s in iv.segments())

    @property
    def segments(self) -> tuple[Segment, ...]:
        return self._segments

    @property
    def is_empty(self) -> bool:
        return not self._segments

    @property
    def is_full(self) -> bool:
        return self._segments == ((ZERO, ONE),)

    @property
    def arcs(self) -> tuple[AngularInterval, ...]:
        if self.is_full:
            raise ValueError("the full circle is not a proper arc")
        segs = list(self._segments)
        if len(segs) >= 2 and segs[0][0] == 0 and segs[-1][1] == 1:
            first = segs.pop(0)
            last = segs.pop()
            segs.append((last[0], first[1]))
        arcs = [AngularInterval(a if a != 0 else ONE, b) for a, b in segs]
        return tuple(sorted(arcs, key=lambda iv: iv.lo % 1))

    @property
    def measure(self) -> Fraction:
        return sum((b - a for a, b in self._segments), ZERO)

    def contains(self, psi) -> bool:
        x = angle(psi)
        i = bisect.bisect_left(self._segments, (x, x))
        # candidates are the segment starting before x and the one at i
        for j in (i - 1, i):
            if 0 <= j < len(self._segments):
                a, b = self._segments[j]
                if a < x <= b:
                    return True
        return False

    def complement(self) -> "AngularRegion":
        out, cursor = [], ZERO
        for a, b in self._segments:
            if a > cursor:
                out.append((cursor, a))
            cursor = b
        if cursor < 1:
            out.append((cursor, ONE))
        return AngularRegion(out)

    def intersect(self, other: "AngularRegion") -> "AngularRegion":
        out = []
        xs, ys = self._segments, other._segments
        i = j = 0
        while i < len(xs) and j < len(ys):
            a = max(xs[i][0], ys[j][0])
            b = min(xs[i][1], ys[j][1])
            if a < b:
                out.append((a, b))
            if xs[i][1] < ys[j][1]:
                i += 1
            else:
                j += 1
        return AngularRegion(out)

    def union(self, other: "AngularRegion") -> "AngularRegion":
        return AngularRegion(self._segments + other._segments)

    __and__ = intersect
    __or__ = union
    __invert__ = complement

    def __eq__(self, other):
        if not isinstance(other, AngularRegion):
            return NotImplemented
        return self._segments == other._segments

    def __hash__(self):
        return hash(self._segments)

    def __len__(self):
        return 0 if self.is_full else len(self.arcs)

    def __repr__(self):
        if self.is_full:
            return "AngularRegion(full)"
        return "AngularRegion{" + ", ".join(map(str, self.arcs)) + "}"


def measure(region: AngularRegion) -> Fraction:
    return region.measure


def complement(region: AngularRegion) -> AngularRegion:
    return region.complement()


def intersect(r1: AngularRegion, r2: AngularRegion) -> AngularRegion:
    return r1.intersect(r2)


def half_space(iv: AngularInterval, a: int) -> AngularRegion:
    """The arc itself for an ACK (``a == 1``), its complement otherwise."""
    region = AngularRegion.from_arcs([iv])
    return region if a else region.complement()


@dataclass(frozen=True)
class ComponentBeamLoop:
    """Cyclic partition of the circle into abutting arcs.

    ``arcs[0]`` is the arc that covers the point just above 0 turns.
    """

    arcs: tuple[AngularInterval, ...]

    def __post_init__(self):
        n = len(self.arcs)
        if n < 2:
            raise ValueError("a component loop needs at least two arcs")
        for k in range(n):
            if self.arcs[k].hi != self.arcs[(k + 1) % n].lo:
                raise ValueError("component arcs must abut cyclically")
        if sum(iv.width for iv in self.arcs) != 1:
            raise ValueError("component arcs must cover exactly one turn")

    def __len__(self):
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def __getitem__(self, k):
        return self.arcs[k]

    @property
    def endpoints(self) -> tuple[Fraction, ...]:
        return tuple(sorted(iv.hi for iv in self.arcs))

    def index_of(self, psi) -> int:
        """Index of the component arc holding ``psi``."""
        x = angle(psi)
        ends = [iv.hi for iv in self.arcs]
        # arcs[1:] are increasing and non-wrapping; arcs[0] is the wrap arc
        k = bisect.bisect_left(ends, x, 1)
        if k < len(ends) and self.arcs[k].contains(x):
            return k
        return 0


def partition(beams: Sequence[AngularInterval]) -> ComponentBeamLoop:
    """Cut the circle at every distinct endpoint of ``beams``."""
    points = sorted({p for iv in beams for p in (iv.lo, iv.hi)})
    if len(points) < 2:
        raise ValueError("need at least two distinct endpoints")
    arcs = [AngularInterval(points[-1], points[0])]
    arcs += [AngularInterval(a, b) for a, b in zip(points, points[1:])]
    return ComponentBeamLoop(tuple(arcs))
