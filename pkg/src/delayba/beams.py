"""Delayed-feedback beam alignment on exact arcs.

A :class:`ScanningBeamSet` holds, for every slot ``i``, the beam the base
station transmits for each feedback prefix ``a_1 .. a_{i-d}`` it can have
received by then.  Feedback is error free: ``a_i = 1`` iff the angle of
departure lies in the ``i``-th beam.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

import numpy as np

from .codes import CodewordLoop, is_characteristic_loop, minimalize
from .geometry import (
    AngularInterval,
    AngularRegion,
    ComponentBeamLoop,
    angle,
    half_space,
    partition,
)


@dataclass(frozen=True)
class ScanningBeamSet:
    """Hierarchical beam set: ``levels[i-1]`` maps prefixes to the slot-``i`` beam."""

    b: int
    d: int
    levels: tuple[Mapping[str, AngularInterval], ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(dict(level) for level in self.levels))

    def prefix_length(self, i: int) -> int:
        return max(0, i - self.d)

    def beam_for(self, i: int, feedback: str) -> AngularInterval:
        """Beam used in slot ``i`` (1-based) given the feedback known so far."""
        return self.levels[i - 1][feedback[: self.prefix_length(i)]]

    def all_beams(self) -> list[AngularInterval]:
        return [iv for level in self.levels for iv in level.values()]

    @classmethod
    def static(cls, beams, d: int) -> "ScanningBeamSet":
        """Non-adaptive set: the same beam per slot for every reachable prefix."""
        beams = list(beams)
        b = len(beams)
        comp = partition(beams)
        words = {"".join("1" if iv.contains(arc.midpoint) else "0" for iv in beams)
                 for arc in comp}
        levels = []
        for i in range(1, b + 1):
            k = max(0, i - d)
            levels.append({p: beams[i - 1] for p in sorted({w[:k] for w in words})})
        return cls(b, d, tuple(levels))


@dataclass(frozen=True)
class Defect:
    level: int
    prefix: str
    rule: str

    def __str__(self):
        return f"level {self.level}, prefix {self.prefix!r}: {self.rule}"


def _walk(S: ScanningBeamSet, psi) -> tuple[str, Optional[tuple[int, str]]]:
    # simulate slot by slot; stop at the first slot with no beam for the prefix
    word = ""
    for i in range(1, S.b + 1):
        prefix = word[: S.prefix_length(i)]
        iv = S.levels[i - 1].get(prefix)
        if iv is None:
            return word, (i, prefix)
        word += "1" if iv.contains(psi) else "0"
    return word, None


def validate(S: ScanningBeamSet) -> list[Defect]:
    """Structural and reachability defects; an empty list means ``S`` is usable."""
    defects = []
    if S.b < 1:
        defects.append(Defect(0, "", "b must be >= 1"))
    if S.d < 1:
        defects.append(Defect(0, "", "d must be >= 1"))
    if len(S.levels) != S.b:
        defects.append(Defect(0, "", f"expected {S.b} levels, found {len(S.levels)}"))
    if defects:
        return defects
    for i, level in enumerate(S.levels, start=1):
        k = S.prefix_length(i)
        for prefix, iv in level.items():
            if len(prefix) != k or set(prefix) - {"0", "1"}:
                defects.append(Defect(i, prefix, f"prefix must be a {k}-bit string"))
            if not isinstance(iv, AngularInterval):
                defects.append(Defect(i, prefix, "beam is not a contiguous arc"))
        if k == 0 and len(level) != 1:
            defects.append(Defect(i, "", "slots before any feedback need exactly one beam"))
    if defects:
        return defects
    missing = set()
    for arc in partition(S.all_beams()):
        _, gap = _walk(S, arc.midpoint)
        if gap is not None:
            missing.add(gap)
    defects += [Defect(i, p, "no beam for a reachable feedback prefix") for i, p in sorted(missing)]
    return defects


def simulate_feedback(S: ScanningBeamSet, psi) -> str:
    word, gap = _walk(S, angle(psi))
    if gap is not None:
        raise KeyError(f"no beam at level {gap[0]} for prefix {gap[1]!r}")
    return word


def beam(S: ScanningBeamSet, psi) -> AngularRegion:
    """Uncertainty region left after all ``b`` answers for angle ``psi``."""
    word = simulate_feedback(S, psi)
    region = AngularRegion.full()
    for i in range(1, S.b + 1):
        region = region & half_space(S.beam_for(i, word), int(word[i - 1]))
    return region


@dataclass(frozen=True)
class UncertaintyMap:
    """URs keyed by feedback word, plus the loops they were built from.

    ``labels`` is the feedback word of every component arc in loop order;
    ``loop`` is its minimalised form, the MCL of the feedback code.
    """

    entries: Mapping[str, AngularRegion]
    components: ComponentBeamLoop
    labels: tuple[str, ...]
    loop: CodewordLoop

    def __len__(self):
        return len(self.entries)

    def measures(self) -> dict[str, Fraction]:
        return {w: r.measure for w, r in self.entries.items()}

    def locate(self, psi) -> str:
        return self.labels[self.components.index_of(psi)]


def uncertainty_map(S: ScanningBeamSet) -> UncertaintyMap:
    comp = partition(S.all_beams())
    # feedback is constant on a component arc; its midpoint is exact
    labels = tuple(simulate_feedback(S, arc.midpoint) for arc in comp)
    grouped: dict[str, list[AngularInterval]] = {}
    for arc, word in zip(comp, labels):
        grouped.setdefault(word, []).append(arc)
    entries = {w: AngularRegion.from_arcs(arcs) for w, arcs in sorted(grouped.items())}
    loop = minimalize(CodewordLoop(labels, S.d))
    return UncertaintyMap(entries, comp, labels, loop)


def check_theorem1(S: ScanningBeamSet) -> bool:
    """Executable witness that the feedback words form a d-unimodal code.

    Checks that the labelled component loop and its minimal form are both
    characteristic loops for delay ``d``, that the minimal form really has
    no consecutive repeats, and that it uses exactly the UR words.
    """
    umap = uncertainty_map(S)
    raw = CodewordLoop(umap.labels, S.d)
    return (
        umap.loop.is_minimal
        and umap.loop.distinct == frozenset(umap.entries)
        and is_characteristic_loop(raw)
        and is_characteristic_loop(umap.loop)
    )


def expected_beamwidth(S: ScanningBeamSet, prior) -> Fraction:
    """Exact prior-weighted mean UR width, in turns."""
    from .priors import prob

    umap = uncertainty_map(S)
    return sum((r.measure * prob(prior, r) for r in umap.entries.values()), Fraction(0))


def monte_carlo_beamwidth(S: ScanningBeamSet, prior, n: int, seed=0) -> tuple[float, float]:
    """Sample mean and standard error of the UR width over ``n`` prior draws."""
    from .priors import sample_array

    if n < 1:
        raise ValueError("need at least one sample")
    umap = uncertainty_map(S)
    psi = sample_array(prior, n, seed)
    widths = np.array([float(umap.entries[w].measure) for w in umap.labels])
    ends = np.array([float(arc.hi) for arc in umap.components.arcs[1:]])
    # arcs[1:] cover (p_1, p_k]; everything else falls in the wrap arc 0
    idx = np.searchsorted(ends, psi, side="left") + 1
    lo0 = float(umap.components.arcs[1].lo)
    idx[(psi <= lo0) | (idx > len(ends))] = 0
    sample = widths[idx]
    if n < 2:
        return float(sample.mean()), float("nan")
    return float(sample.mean()), float(sample.std(ddof=1) / np.sqrt(n))
