"""Beam alignment with delayed feedback.

Exact arc geometry, d-unimodal codes and their cardinality bound,
delayed-feedback simulation and expected-beamwidth evaluation.
"""

from .beams import (
    ScanningBeamSet,
    UncertaintyMap,
    beam,
    check_theorem1,
    expected_beamwidth,
    monte_carlo_beamwidth,
    simulate_feedback,
    uncertainty_map,
    validate,
)
from .codes import (
    BinaryLoop,
    Code,
    CodewordLoop,
    SearchBudgetExceeded,
    find_characteristic_loop,
    is_characteristic_loop,
    is_unimodal,
    max_cardinality_bound,
    max_cardinality_bruteforce,
    minimalize,
    parent_loop,
)
from .geometry import AngularInterval, AngularRegion, ComponentBeamLoop, half_space, partition
from .kernels import BACKEND
from .priors import Prior, entropy_bits, prob, uniform
from .strategies import (
    DurationResult,
    StrategySpec,
    bisection_beamset,
    duration,
    exhaustive_beamset,
    lower_bound_width,
    noninteractive_beamset,
)

__version__ = "0.1.0"
