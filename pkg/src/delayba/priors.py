"""Piecewise-constant priors on the angle of departure.

Densities are per turn, so the uniform prior has density 1 and
differential entropy 0 bits; add ``log2(2*pi)`` for the radian convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .geometry import AngularInterval, AngularRegion, angle

_GRID = 2**32


@dataclass(frozen=True)
class Prior:
    """Density pieces ``(lo, hi, density)`` tiling ``(0, 1]`` in order."""

    pieces: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        pieces = tuple((Fraction(a), Fraction(b), Fraction(f)) for a, b, f in self.pieces)
        if not pieces:
            raise ValueError("prior needs at least one piece")
        cursor = Fraction(0)
        for a, b, f in pieces:
            if a != cursor or not a < b:
                raise ValueError("prior pieces must tile (0, 1] in increasing order")
            if f < 0:
                raise ValueError("densities must be non-negative")
            cursor = b
        if cursor != 1:
            raise ValueError("prior pieces must end at 1 turn")
        if sum((b - a) * f for a, b, f in pieces) != 1:
            raise ValueError("prior must integrate to 1")
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def from_arcs(cls, items: Iterable[tuple[AngularInterval, Fraction]]) -> "Prior":
        """Build from ``(arc, density)`` pairs; wrapping arcs are split at 0."""
        segs = []
        for iv, f in items:
            segs += [(a, b, Fraction(f)) for a, b in iv.segments()]
        segs.sort()
        return cls(tuple(segs))

    def density(self, psi) -> Fraction:
        x = angle(psi)
        for a, b, f in self.pieces:
            if a < x <= b:
                return f
        raise AssertionError("unreachable: pieces tile the circle")


def uniform() -> Prior:
    return Prior(((Fraction(0), Fraction(1), Fraction(1)),))


def arc_prior(iv: AngularInterval) -> Prior:
    """Uniform on one arc, zero elsewhere."""
    inside = [(a, b) for a, b in iv.segments()]
    outside = AngularRegion(inside).complement().segments
    f = 1 / iv.width
    pieces = [(a, b, f) for a, b in inside] + [(a, b, Fraction(0)) for a, b in outside]
    return Prior(tuple(sorted(pieces)))


def prob(prior: Prior, region: AngularRegion) -> Fraction:
    """Exact prior mass of ``region``."""
    total = Fraction(0)
    for lo, hi in region.segments:
        for a, b, f in prior.pieces:
            overlap = min(hi, b) - max(lo, a)
            if overlap > 0:
                total += overlap * f
    return total


def entropy_bits(prior: Prior) -> float:
    """Differential entropy in bits with angles measured in turns."""
    h = 0.0
    for a, b, f in prior.pieces:
        if f > 0:
            h -= float((b - a) * f) * math.log2(f)
    return h


def _cumulative(prior: Prior):
    cum, out = Fraction(0), []
    for a, b, f in prior.pieces:
        mass = (b - a) * f
        out.append((cum, cum + mass, a, f))
        cum += mass
    return out


def sample(prior: Prior, rng: np.random.Generator) -> Fraction:
    """One exact draw by inverse CDF on a ``2**-32`` grid of the unit mass."""
    u = Fraction(int(rng.integers(1, _GRID, endpoint=True)), _GRID)
    for lo_mass, hi_mass, a, f in _cumulative(prior):
        if f > 0 and lo_mass < u <= hi_mass:
            return angle(a + (u - lo_mass) / f)
    raise AssertionError("unreachable: cumulative mass reaches 1")


def sample_array(prior: Prior, n: int, seed=0) -> np.ndarray:
    """``n`` float draws in ``(0, 1]`` turns; vectorised for Monte-Carlo use."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    table = [(float(lo), float(hi), float(a), float(f))
             for lo, hi, a, f in _cumulative(prior) if f > 0]
    u = 1.0 - rng.random(n)  # (0, 1]
    edges = np.array([hi for _, hi, _, _ in table])
    k = np.minimum(np.searchsorted(edges, u, side="left"), len(table) - 1)
    lo = np.array([t[0] for t in table])[k]
    start = np.array([t[2] for t in table])[k]
    dens = np.array([t[3] for t in table])[k]
    psi = start + (u - lo) / dens
    return np.where(psi <= 0.0, 1.0, np.minimum(psi, 1.0))
