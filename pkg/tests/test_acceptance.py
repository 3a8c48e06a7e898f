"""Acceptance criteria 1-8, one test each, at their stated tolerances."""

import random
import time
from fractions import Fraction as F
from pathlib import Path

from delayba.beams import (
    check_theorem1,
    expected_beamwidth,
    monte_carlo_beamwidth,
    uncertainty_map,
    validate,
)
from delayba.codes import (
    BinaryLoop,
    CodewordLoop,
    is_characteristic_loop,
    is_unimodal,
    max_cardinality_bound,
    max_cardinality_bruteforce,
)
from delayba.generators import EXAMPLE1_LOOP, random_beamset, random_prior
from delayba.geometry import AngularInterval, AngularRegion, complement, intersect, measure, partition
from delayba.io import load_beamset
from delayba.priors import entropy_bits, uniform
from delayba.strategies import METHODS, duration, exact_strategy_width, strategy_beamset

FIXTURES = Path(__file__).parent / "fixtures"
EDGES = [F(k, 20) for k in (20, 2, 3, 5, 8, 10, 12, 15, 17, 18)]


def test_criterion_1_golden_examples(criterion):
    with criterion(1, "golden unimodal / characteristic-loop / UR-map examples"):
        start = time.perf_counter()
        assert is_unimodal(BinaryLoop.parse("1001"))
        assert not is_unimodal(BinaryLoop.parse("1010"))
        assert is_characteristic_loop(CodewordLoop.parse("01 11 10", 2))
        L = CodewordLoop(EXAMPLE1_LOOP, 3)
        assert is_characteristic_loop(L) and L.is_minimal
        umap = uncertainty_map(load_beamset(FIXTURES / "example1.json"))
        assert len(umap) == 9
        i2 = AngularInterval(EDGES[1], EDGES[2])
        i4 = AngularInterval(EDGES[3], EDGES[4])
        assert umap.entries[EXAMPLE1_LOOP[1]] == AngularRegion.from_arcs([i2, i4])
        assert time.perf_counter() - start < 1


def test_criterion_2_bound_values(criterion):
    with criterion(2, "cardinality bound closed forms and recursion values"):
        start = time.perf_counter()
        assert all(max_cardinality_bound(b, 1) == 2**b for b in range(1, 11))
        assert all(max_cardinality_bound(b, d) == 2 * b
                   for d in range(1, 11) for b in range(1, d + 1))
        assert max_cardinality_bound(4, 3) == 10
        assert max_cardinality_bound(5, 2) == 32
        assert time.perf_counter() - start < 1


def test_criterion_3_oracle_soundness(criterion):
    with criterion(3, "exhaustive oracle never beats the bound; equality at d=1 and b<=d"):
        gaps = []
        for d in (1, 2, 3):
            for b in range(1, 6):
                oracle = max_cardinality_bruteforce(b, d, 3 * 2**b)
                bound = max_cardinality_bound(b, d)
                assert oracle <= bound, (b, d, oracle, bound)
                if d == 1 or b <= d:
                    assert oracle == bound, (b, d, oracle, bound)
                elif oracle < bound:
                    gaps.append((b, d, oracle, bound))
        for b, d, oracle, bound in gaps:
            print(f"  gap at b={b} d={d}: oracle {oracle} < bound {bound}")


def test_criterion_4_feedback_code_suite(criterion):
    with criterion(4, "1000 random beam sets: code is d-unimodal, measures sum to 1, multiplicity"):
        rng = random.Random(2024)
        for _ in range(1000):
            S = random_beamset(rng, rng.randint(1, 6), rng.randint(1, 4))
            assert validate(S) == []
            assert check_theorem1(S)
            umap = uncertainty_map(S)
            assert sum(r.measure for r in umap.entries.values()) == 1
            words = umap.loop.words
            for w, region in umap.entries.items():
                arcs = 1 if region.is_full else len(region)
                assert words.count(w) == arcs


def test_criterion_5_expected_width_consistency(criterion):
    with criterion(5, "exact expected width vs Monte-Carlo within 3 SE; uniform = sum of squares"):
        rng = random.Random(7)
        for k in range(50):
            S = random_beamset(rng, rng.randint(1, 6), rng.randint(1, 4))
            prior = random_prior(rng, pieces=rng.randint(1, 4))
            exact = expected_beamwidth(S, prior)
            mean, se = monte_carlo_beamwidth(S, prior, 100_000, seed=k)
            assert abs(mean - float(exact)) <= 3 * se + 1e-12, (k, mean, float(exact), se)
            squares = sum(m * m for m in uncertainty_map(S).measures().values())
            assert expected_beamwidth(S, uniform()) == squares


def test_criterion_6_entropy_bound(criterion):
    with criterion(6, "constructed strategies respect 2^h / M(b,d); bisection b=5 d=1 attains it"):
        rng = random.Random(11)
        priors = [uniform()] + [random_prior(rng, pieces=rng.randint(1, 4)) for _ in range(5)]
        for kind in METHODS[:3]:
            for b in range(1, 8):
                for d in ((1,) if kind == "bisection" else (1, 2, 3, 4)):
                    S = strategy_beamset(kind, b, d)
                    m = max_cardinality_bound(b, d)
                    for p in priors:
                        width = expected_beamwidth(S, p)
                        h = entropy_bits(p)
                        if h == 0:
                            assert width >= F(1, m)
                        else:
                            assert float(width) >= 2.0**h / m * (1 - 1e-12)
        assert exact_strategy_width("bisection", 5, 1) == F(1, 32) == F(1, max_cardinality_bound(5, 1))


def test_criterion_7_figure2(criterion):
    with criterion(7, "duration sweep at target 1/32: optimality at d=1, crossover at d=8, convergence"):
        start = time.perf_counter()
        target = F(1, 32)

        def slots(method, d):
            return duration(method, d, target).total_slots

        assert slots("bisection", 1) == 6 == slots("lower-bound", 1)
        assert (slots("bisection", 8), slots("modified-exhaustive", 8)) == (41, 39)
        assert all(slots("bisection", d) <= slots("modified-exhaustive", d) for d in range(1, 8))
        ds = range(1, 41)
        lb = [slots("lower-bound", d) for d in ds]
        assert lb == sorted(lb)
        assert all(lb[d - 1] <= slots(m, d) for d in ds for m in METHODS[:3])
        assert all(lb[d - 1] == slots("non-interactive", d) for d in ds if d >= 16)
        assert time.perf_counter() - start < 1


def _random_region(rng):
    arcs = []
    for _ in range(rng.randint(0, 3)):
        q = rng.randint(2, 30)
        lo = F(rng.randrange(q), q)
        arcs.append(AngularInterval(lo, lo + F(rng.randint(1, q - 1), q)))
    return AngularRegion.from_arcs(arcs)


def test_criterion_8_geometry_kernel(criterion):
    with criterion(8, "10^4 exact region identities; worked layout partitions into 10 component beams"):
        rng = random.Random(8)
        for _ in range(10_000):
            a, b = _random_region(rng), _random_region(rng)
            assert measure(a) + measure(complement(a)) == 1
            assert complement(complement(a)) == a
            assert intersect(a, b) == intersect(b, a)
            assert measure(a | b) + measure(intersect(a, b)) == measure(a) + measure(b)
            assert complement(a | b) == intersect(complement(a), complement(b))
        comp = partition(load_beamset(FIXTURES / "example1.json").all_beams())
        assert len(comp) == 10
        assert [arc.hi for arc in comp] == EDGES[1:] + EDGES[:1]
