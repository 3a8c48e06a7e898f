"""Backend selection for the combinatorial kernels.

The compiled extension ``delayba._ckernels`` is used when it was built;
otherwise the pure-Python module is used.  Set ``DELAYBA_PURE_PYTHON=1``
to force the fallback.
"""

import os

if os.environ.get("DELAYBA_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = "cython" if _impl.__name__.endswith("_ckernels") else "python"

transitions = _impl.transitions
is_unimodal = _impl.is_unimodal
min_rotation = _impl.min_rotation
canonical_loop = _impl.canonical_loop
expand = _impl.expand
split_top = _impl.split_top
class_bits_unimodal = _impl.class_bits_unimodal
refine = _impl.refine
distinct_after = _impl.distinct_after

__all__ = [
    "BACKEND",
    "transitions",
    "is_unimodal",
    "min_rotation",
    "canonical_loop",
    "expand",
    "split_top",
    "class_bits_unimodal",
    "refine",
    "distinct_after",
]
