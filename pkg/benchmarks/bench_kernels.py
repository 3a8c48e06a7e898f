"""Compare the compiled and pure-Python kernel backends.

Micro-benchmarks call both kernel modules directly on the same inputs; the
end-to-end run times the cardinality oracle in a fresh interpreter per
backend, using DELAYBA_PURE_PYTHON to force the fallback.

    python benchmarks/bench_kernels.py [--oracle 6,5 7,4] [--repeat 3]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from delayba import _pykernels

try:
    from delayba import _ckernels
except ImportError:
    _ckernels = None


def _inputs(seed=0, count=2000):
    rng = random.Random(seed)
    groups = []
    for _ in range(count):
        n = rng.randint(2, 12)
        seq = tuple(rng.randrange(64) for _ in range(n))
        option = tuple(rng.choice([(0,), (1,), (0, 1), (1, 0), (0, 1, 0), (1, 0, 1)]) for _ in seq)
        groups.append((seq, option))
    return groups


def micro(repeat):
    groups = _inputs()
    cases = {
        "canonical_loop": lambda k: [k.canonical_loop(s) for s, _ in groups],
        "refine": lambda k: [k.refine(s, o, 7, True) for s, o in groups],
        "class_bits_unimodal": lambda k: [k.class_bits_unimodal(s, 2, 4) for s, _ in groups],
    }
    print(f"{'kernel':<22}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn in cases.items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=repeat)) * 1e3
        if _ckernels is None:
            print(f"{name:<22}{py:>12.2f}{'n/a':>12}{'':>10}")
            continue
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=repeat)) * 1e3
        print(f"{name:<22}{py:>12.2f}{cy:>12.2f}{py / cy:>9.1f}x")


def oracle(b, d, pure):
    code = (
        "import time; from delayba.codes import max_cardinality_bruteforce as f; "
        "from delayba.kernels import BACKEND; "
        f"t = time.perf_counter(); v = f({b}, {d}); "
        "print(BACKEND, v, time.perf_counter() - t)"
    )
    env = dict(os.environ)
    env.pop("DELAYBA_PURE_PYTHON", None)
    if pure:
        env["DELAYBA_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    backend, value, seconds = out.stdout.split()
    return backend, int(value), float(seconds)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--oracle", nargs="*", default=["6,5", "7,4"],
                        help="b,d pairs for the end-to-end oracle timing")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    micro(args.repeat)
    print()
    print(f"{'oracle (b,d)':<14}{'value':>7}{'python s':>11}{'cython s':>11}{'speedup':>10}")
    for pair in args.oracle:
        b, d = (int(x) for x in pair.split(","))
        _, value, py = oracle(b, d, pure=True)
        backend, value_c, cy = oracle(b, d, pure=False)
        assert value == value_c, "backends disagree"
        if backend != "cython":
            print(f"({b},{d}){'':<9}{value:>7}{py:>11.2f}{'n/a':>11}")
            continue
        print(f"({b},{d}){'':<9}{value:>7}{py:>11.2f}{cy:>11.2f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
