"""Reference and random beam sets and priors."""

from __future__ import annotations

import random
from fractions import Fraction

from .beams import ScanningBeamSet
from .geometry import AngularInterval, partition
from .priors import Prior

# component-arc endpoints of the worked b=4, d=3 layout, in 1/20 turn
_EXAMPLE1_EDGES = [Fraction(k, 20) for k in (20, 2, 3, 5, 8, 10, 12, 15, 17, 18)]

EXAMPLE1_LOOP = ("1100", "1000", "1001", "1000", "1010",
                 "0010", "0011", "0111", "0110", "0100")


def example1_beamset() -> ScanningBeamSet:
    """Four slots, delay three: three fixed beams, then one of two by ``a_1``.

    Component arc ``I_k`` is ``(e[k-1], e[k]]`` with ``e`` the edges above;
    its feedback word is ``EXAMPLE1_LOOP[k-1]``.
    """
    e = _EXAMPLE1_EDGES
    phi1 = AngularInterval(e[0], e[5])  # I1..I5
    phi2 = AngularInterval(e[7], e[1])  # I8, I9, I10, I1
    phi3 = AngularInterval(e[4], e[9])  # I5..I9
    s4_ack = AngularInterval(e[2], e[3])  # I3
    s4_nack = AngularInterval(e[6], e[8])  # I7, I8
    levels = ({"": phi1}, {"": phi2}, {"": phi3}, {"1": s4_ack, "0": s4_nack})
    return ScanningBeamSet(4, 3, levels)


def _reachable(levels: list[dict], d: int, k: int) -> set[str]:
    if k == 0:
        return {""}
    beams = [iv for level in levels[:k] for iv in level.values()]
    out = set()
    for arc in partition(beams):
        word = ""
        for i in range(1, k + 1):
            iv = levels[i - 1][word[: max(0, i - d)]]
            word += "1" if iv.contains(arc.midpoint) else "0"
        out.add(word)
    return out


def random_arc(rng: random.Random, max_den: int = 24) -> AngularInterval:
    q = rng.randint(2, max_den)
    lo = Fraction(rng.randrange(q), q)
    return AngularInterval(lo, lo + Fraction(rng.randint(1, q - 1), q))


def random_beamset(rng: random.Random, b: int, d: int, max_den: int = 24) -> ScanningBeamSet:
    """Random valid set: one random arc per reachable prefix at every slot."""
    levels: list[dict] = []
    for i in range(1, b + 1):
        prefixes = _reachable(levels, d, max(0, i - d))
        levels.append({p: random_arc(rng, max_den) for p in sorted(prefixes)})
    return ScanningBeamSet(b, d, tuple(levels))


def random_prior(rng: random.Random, pieces: int = 3, max_den: int = 12) -> Prior:
    """Random piecewise-constant prior with rational cut points and weights."""
    q = rng.randint(pieces, max_den * pieces)
    cuts = sorted(rng.sample(range(1, q), pieces - 1)) if pieces > 1 else []
    edges = [Fraction(0)] + [Fraction(c, q) for c in cuts] + [Fraction(1)]
    weights = [Fraction(rng.randint(0, 9)) for _ in range(pieces)]
    if not any(weights):
        weights[0] = Fraction(1)
    mass = sum(w * (b - a) for w, a, b in zip(weights, edges, edges[1:]))
    return Prior(tuple((a, b, w / mass) for w, a, b in zip(weights, edges, edges[1:])))
