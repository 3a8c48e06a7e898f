import random
from fractions import Fraction as F

import pytest

from delayba.beams import check_theorem1, uncertainty_map, validate
from delayba.codes import max_cardinality_bound
from delayba.generators import random_prior
from delayba.priors import entropy_bits, uniform
from delayba.strategies import (
    METHODS,
    StrategySpec,
    TargetUnreachable,
    duration,
    exact_strategy_width,
    lower_bound_width,
    strategy_beamset,
)

TARGET = F(1, 32)


def slots(method, d):
    return duration(method, d, TARGET).total_slots


def test_lower_bound_examples():
    assert lower_bound_width(5, 1) == F(1, 32)
    assert lower_bound_width(4, 3) == F(1, 10)
    assert isinstance(lower_bound_width(4, 3), F)


@pytest.mark.parametrize("kind,b,d,expected", [
    ("bisection", 5, 1, F(1, 32)),
    ("bisection", 3, 1, F(1, 8)),
    ("modified-exhaustive", 4, 2, F(1, 5)),
    ("non-interactive", 3, 2, F(1, 6)),
    ("non-interactive", 5, 4, F(1, 10)),
])
def test_constructed_widths(kind, b, d, expected):
    assert exact_strategy_width(kind, b, d) == expected


def test_constructed_sets_are_valid():
    for kind in METHODS[:3]:
        for b in range(1, 6):
            for d in (1, 2, 3):
                S = strategy_beamset(kind, b, d)
                assert validate(S) == []
                assert check_theorem1(S)


def test_widths_do_not_depend_on_prior():
    rng = random.Random(0)
    for kind in METHODS[:3]:
        for b in range(1, 5):
            d = 1 if kind == "bisection" else 2
            ref = exact_strategy_width(kind, b, d)
            for _ in range(3):
                assert exact_strategy_width(kind, b, d, random_prior(rng)) == ref


def test_strategies_respect_entropy_bound():
    rng = random.Random(1)
    priors = [uniform()] + [random_prior(rng) for _ in range(4)]
    for kind in METHODS[:3]:
        for b in range(1, 6):
            for d in ((1,) if kind == "bisection" else (1, 2, 3)):
                for p in priors:
                    bound = 2.0 ** entropy_bits(p) / max_cardinality_bound(b, d)
                    assert float(exact_strategy_width(kind, b, d, p)) >= bound - 1e-12


def test_noninteractive_has_2b_urs():
    for b in range(1, 7):
        umap = uncertainty_map(strategy_beamset("non-interactive", b, 3))
        assert len(umap) == 2 * b


def test_duration_examples():
    r = duration("bisection", 1, TARGET)
    assert (r.b, r.total_slots, r.achieved_width) == (5, 6, F(1, 32))
    assert duration("bisection", 8, TARGET).total_slots == 41
    assert duration("modified-exhaustive", 8, TARGET).total_slots == 39
    assert duration("modified-exhaustive", 8, TARGET).b == 31
    assert duration("non-interactive", 3, TARGET).b == 16
    assert not duration("non-interactive", 3, TARGET).optimal_regime
    assert duration("non-interactive", 16, TARGET).optimal_regime
    assert [slots("lower-bound", d) for d in range(1, 7)] == [6, 7, 10, 11, 13, 15]
    assert duration(StrategySpec("bisection"), 1, TARGET).achieved_degrees == pytest.approx(11.25)


def test_figure2_shape():
    lb = [slots("lower-bound", d) for d in range(1, 41)]
    assert lb == sorted(lb)
    for d in range(1, 41):
        for m in METHODS[:3]:
            assert lb[d - 1] <= slots(m, d)
    first = next(d for d in range(1, 41) if slots("bisection", d) > slots("modified-exhaustive", d))
    assert first == 8
    assert all(slots("lower-bound", d) == slots("non-interactive", d) for d in range(16, 41))
    assert slots("lower-bound", 15) == slots("non-interactive", 15)
    assert slots("lower-bound", 14) < slots("non-interactive", 14)


def test_duration_errors():
    with pytest.raises(ValueError):
        duration("nope", 1, TARGET)
    with pytest.raises(ValueError):
        duration("bisection", 0, TARGET)
    with pytest.raises(ValueError):
        duration("bisection", 1, F(3, 2))
    with pytest.raises(TargetUnreachable):
        duration("modified-exhaustive", 1, F(1, 1000), b_cap=10)
