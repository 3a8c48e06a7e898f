"""Concrete beam-alignment strategies and the entropy lower bound.

Durations count time slots: the scanning phase plus the ``d``-slot wait for
the last answer.  Bisection under delay is pipelined: packet ``i + 1`` is sent
only once ``a_i`` has arrived, so ``b`` packets take ``b*d + 1`` slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .beams import ScanningBeamSet, expected_beamwidth
from .codes import max_cardinality_bound
from .geometry import AngularInterval, to_degrees
from .priors import Prior, entropy_bits, uniform

METHODS = ("bisection", "modified-exhaustive", "non-interactive", "lower-bound")


class TargetUnreachable(ValueError):
    """No packet count up to the cap reaches the requested width."""


@dataclass(frozen=True)
class StrategySpec:
    kind: str
    b: Optional[int] = None
    target: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in METHODS:
            raise ValueError(f"unknown method {self.kind!r}; choose from {METHODS}")
        if self.b is not None and self.b < 1:
            raise ValueError("b must be >= 1")
        if self.target is not None and not 0 < self.target < 1:
            raise ValueError("target width must lie strictly between 0 and 1 turn")


@dataclass(frozen=True)
class DurationResult:
    method: str
    d: int
    b: int
    total_slots: int
    achieved_width: Fraction | float
    feasible: bool = True
    # False for non-interactive rows with b > d, where 2b URs is not known optimal
    optimal_regime: bool = True

    @property
    def achieved_degrees(self) -> float:
        return to_degrees(self.achieved_width)


def lower_bound_width(b: int, d: int, prior: Prior | None = None) -> Fraction | float:
    """``2**h / M(b, d)`` in turns; exact for zero-entropy priors."""
    h = entropy_bits(prior or uniform())
    m = max_cardinality_bound(b, d)
    if h == 0:
        return Fraction(1, m)
    return 2.0**h / m


def noninteractive_beamset(b: int, d: int) -> ScanningBeamSet:
    """``b`` half circles rotated by ``1/(2b)``: ``2b`` equal URs."""
    if b < 1:
        raise ValueError("b must be >= 1")
    step = Fraction(1, 2 * b)
    beams = [AngularInterval(i * step, i * step + Fraction(1, 2)) for i in range(1, b + 1)]
    return ScanningBeamSet.static(beams, d)


def exhaustive_beamset(b: int, d: int) -> ScanningBeamSet:
    """Scan ``b`` of ``b + 1`` equal cells, one per slot."""
    if b < 1:
        raise ValueError("b must be >= 1")
    beams = [AngularInterval(Fraction(i - 1, b + 1), Fraction(i, b + 1)) for i in range(1, b + 1)]
    return ScanningBeamSet.static(beams, d)


def bisection_beamset(b: int) -> ScanningBeamSet:
    """Halve the current UR every slot (``d = 1``)."""
    if b < 1:
        raise ValueError("b must be >= 1")
    levels = []
    cells = {"": (Fraction(0), Fraction(1))}
    for _ in range(b):
        level, nxt = {}, {}
        for prefix, (lo, hi) in cells.items():
            mid = (lo + hi) / 2
            level[prefix] = AngularInterval(lo, mid)
            nxt[prefix + "1"] = (lo, mid)
            nxt[prefix + "0"] = (mid, hi)
        levels.append(level)
        cells = nxt
    return ScanningBeamSet(b, 1, tuple(levels))


def _width(kind: str, b: int, d: int, prior: Prior):
    # every strategy here has equal-width URs, so the mean width is the same
    # for any prior; the lower bound is the only prior-dependent value
    if kind == "bisection":
        return Fraction(1, 2**b)
    if kind == "modified-exhaustive":
        return Fraction(1, b + 1)
    if kind == "non-interactive":
        return Fraction(1, 2 * b)
    return lower_bound_width(b, d, prior)


def _slots(kind: str, b: int, d: int) -> int:
    return b * d + 1 if kind == "bisection" else b + d


def strategy_beamset(kind: str, b: int, d: int) -> ScanningBeamSet:
    if kind == "bisection":
        return bisection_beamset(b)
    if kind == "modified-exhaustive":
        return exhaustive_beamset(b, d)
    if kind == "non-interactive":
        return noninteractive_beamset(b, d)
    raise ValueError(f"no beam set for {kind!r}")


def duration(method: StrategySpec | str, d: int, target, prior: Prior | None = None,
             b_cap: int = 1024) -> DurationResult:
    """Fewest packets reaching ``target`` mean width, and the slots they take."""
    kind = method.kind if isinstance(method, StrategySpec) else StrategySpec(method).kind
    target = Fraction(target)
    if not 0 < target < 1:
        raise ValueError("target width must lie strictly between 0 and 1 turn")
    if d < 1:
        raise ValueError("d must be >= 1")
    prior = prior or uniform()
    for b in range(1, b_cap + 1):
        w = _width(kind, b, d, prior)
        if w <= target:
            regime = kind != "non-interactive" or b <= d
            return DurationResult(kind, d, b, _slots(kind, b, d), w, optimal_regime=regime)
    raise TargetUnreachable(f"{kind} cannot reach width {target} with b <= {b_cap}")


def exact_strategy_width(kind: str, b: int, d: int, prior: Prior | None = None) -> Fraction:
    """Mean UR width of the constructed beam set, computed from its URs."""
    return expected_beamwidth(strategy_beamset(kind, b, d), prior or uniform())
