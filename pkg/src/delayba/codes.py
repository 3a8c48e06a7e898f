"""Unimodal loops and d-unimodal codes.

A *loop* is a cyclically ordered sequence.  A loop of ``b``-bit codewords is
a characteristic loop for delay ``d`` when

* for every column ``i <= d`` the bits in column ``i`` form a unimodal loop
  (all ones in one cyclic run), and
* for every column ``i > d`` and every prefix of length ``i - d``, the column
  ``i`` bits of the sub-loop of words sharing that prefix are unimodal.

Codewords are strings over ``"01"``; column 1 is the leftmost character.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import kernels


class SearchBudgetExceeded(RuntimeError):
    """An exhaustive search ran out of budget before finishing."""


def _check_word(word: str) -> str:
    if not word or set(word) - {"0", "1"}:
        raise ValueError(f"codeword must be a non-empty bit string, got {word!r}")
    return word


class BinaryLoop:
    """Cyclic bit sequence; equality ignores rotation."""

    __slots__ = ("bits",)

    def __init__(self, bits: Iterable[int]):
        bits = tuple(int(x) for x in bits)
        if not bits or set(bits) - {0, 1}:
            raise ValueError("binary loop needs at least one bit and only 0/1")
        self.bits = bits

    @classmethod
    def parse(cls, text: str) -> "BinaryLoop":
        return cls(int(ch) for ch in text if ch in "01")

    def canonical(self) -> tuple[int, ...]:
        return kernels.min_rotation(self.bits)

    def __eq__(self, other):
        if not isinstance(other, BinaryLoop):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __len__(self):
        return len(self.bits)

    def __repr__(self):
        return "⊙{" + ",".join(map(str, self.bits)) + "}"


@dataclass(frozen=True, eq=False)
class CodewordLoop:
    """Cyclic sequence of equal-length codewords with a feedback delay."""

    words: tuple[str, ...]
    d: int = 1

    def __post_init__(self):
        words = tuple(_check_word(w) for w in self.words)
        if not words:
            raise ValueError("a codeword loop needs at least one word")
        if len({len(w) for w in words}) != 1:
            raise ValueError("all codewords in a loop must have the same length")
        if self.d < 1:
            raise ValueError("delay d must be >= 1")
        object.__setattr__(self, "words", words)

    @classmethod
    def parse(cls, text: str, d: int = 1) -> "CodewordLoop":
        return cls(tuple(text.replace(",", " ").split()), d)

    @property
    def b(self) -> int:
        return len(self.words[0])

    @property
    def distinct(self) -> frozenset[str]:
        return frozenset(self.words)

    @property
    def is_minimal(self) -> bool:
        n = len(self.words)
        if n == 1:
            return True
        return all(self.words[k] != self.words[k - 1] for k in range(n))

    def column(self, i: int) -> tuple[int, ...]:
        """Bits of column ``i`` (1-based) in loop order."""
        return tuple(int(w[i - 1]) for w in self.words)

    def as_ints(self) -> tuple[int, ...]:
        return tuple(int(w, 2) for w in self.words)

    def canonical(self) -> tuple[str, ...]:
        return kernels.min_rotation(self.words)

    def to_code(self) -> "Code":
        return Code(self.distinct, self.d)

    def __eq__(self, other):
        if not isinstance(other, CodewordLoop):
            return NotImplemented
        return self.d == other.d and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.d, self.canonical()))

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __repr__(self):
        return "⊙{" + ",".join(self.words) + f"}}(d={self.d})"


@dataclass(frozen=True)
class Code:
    words: frozenset[str]
    d: int = 1

    def __post_init__(self):
        words = frozenset(_check_word(w) for w in self.words)
        if not words:
            raise ValueError("a code needs at least one codeword")
        if len({len(w) for w in words}) != 1:
            raise ValueError("all codewords must have the same length")
        if self.d < 1:
            raise ValueError("delay d must be >= 1")
        object.__setattr__(self, "words", words)

    @property
    def b(self) -> int:
        return len(next(iter(self.words)))

    @property
    def cardinality(self) -> int:
        return len(self.words)

    def __len__(self):
        return len(self.words)


def is_unimodal(loop) -> bool:
    """True iff the ones of a binary loop (if any) form a single cyclic run."""
    bits = loop.bits if isinstance(loop, BinaryLoop) else tuple(loop)
    if not bits:
        raise ValueError("empty loop")
    return kernels.is_unimodal(bits)


def _key_shift(b: int, i: int, d: int) -> int:
    # shift that extracts the (i - d)-bit prefix from a b-bit word, or -1
    return -1 if i <= d else b - (i - d)


def _loop_is_characteristic(words: Sequence[int], b: int, d: int) -> bool:
    for i in range(1, b + 1):
        if not kernels.class_bits_unimodal(words, b - i, _key_shift(b, i, d)):
            return False
    return True


def is_characteristic_loop(loop: CodewordLoop) -> bool:
    return _loop_is_characteristic(loop.as_ints(), loop.b, loop.d)


def _collapse(seq: Sequence) -> list:
    seq = list(seq)
    if len(set(seq)) <= 1:
        return seq[:1]
    # rotate so the loop does not start in the middle of a run
    k = next(j for j in range(len(seq)) if seq[j] != seq[j - 1])
    seq = seq[k:] + seq[:k]
    return [w for j, w in enumerate(seq) if j == 0 or w != seq[j - 1]]


def minimalize(loop: CodewordLoop) -> CodewordLoop:
    """Collapse runs of cyclically consecutive equal words."""
    if loop.is_minimal:
        return loop
    return CodewordLoop(tuple(_collapse(loop.words)), loop.d)


def parent_loop(loop: CodewordLoop, order: int) -> CodewordLoop:
    """MCL of the parent code of the given order (prefixes of length b - order)."""
    if not 1 <= order < loop.b:
        raise ValueError(f"order must be in [1, {loop.b - 1}], got {order}")
    keep = loop.b - order
    return minimalize(CodewordLoop(tuple(w[:keep] for w in loop.words), loop.d))


@lru_cache(maxsize=None)
def max_cardinality_bound(b: int, d: int) -> int:
    """Upper bound on the size of a d-unimodal code of length b.

    Exact for ``d == 1`` (``2**b``) and for ``b <= d`` (``2*b``); otherwise the
    recursion ``M(b-1, d) + 2*M(b-d, d)``.
    """
    if b < 1 or d < 1:
        raise ValueError("b and d must be >= 1")
    if d == 1:
        return 2**b
    if b <= d:
        return 2 * b
    return max_cardinality_bound(b - 1, d) + 2 * max_cardinality_bound(b - d, d)


_RUNS = {1: ((0,), (1,)), 2: ((0, 1), (1, 0)), 3: ((0, 1, 0), (1, 0, 1))}


@lru_cache(maxsize=None)
def run_options(c: int, whole: bool = False) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Ways to refine ``c`` cyclically ordered loop positions by one bit column.

    Each position becomes an alternating run of 1-3 bits (consecutive child
    words must differ); the concatenated bit loop must be unimodal.  With
    ``whole`` and a single position the run closes on itself, so length 3
    would repeat a word.
    """
    runs = [r for n in (1, 2, 3) for r in _RUNS[n]]
    if whole and c == 1:
        runs = [r for r in runs if len(r) <= 2]
    out = []

    def rec(prefix, changes):
        if len(prefix) == c:
            closing = prefix[-1][-1] != prefix[0][0]
            if changes + closing <= 2:
                out.append(tuple(prefix))
            return
        for r in runs:
            extra = len(r) - 1
            if prefix and prefix[-1][-1] != r[0]:
                extra += 1
            if changes + extra <= 2:
                prefix.append(r)
                rec(prefix, changes + extra)
                prefix.pop()

    rec([], 0)
    out.sort(key=lambda opt: sum(map(len, opt)))
    return tuple(out)


def _merge_front(into: dict, front: dict) -> None:
    for count, length in front.items():
        if length < into.get(count, length + 1):
            into[count] = length


def _join_fronts(f0: dict, f1: dict, max_len: int) -> dict:
    out: dict = {}
    for c0, l0 in f0.items():
        for c1, l1 in f1.items():
            length = l0 + l1
            if length <= max_len and length < out.get(c0 + c1, length + 1):
                out[c0 + c1] = length
    return out


def max_cardinality_bruteforce(b: int, d: int, max_len: Optional[int] = None,
                               budget: int = 5_000_000) -> int:
    """Largest d-unimodal code of length ``b`` with an MCL of length <= max_len.

    Exhaustive, column by column.  After columns ``1..i`` are fixed, the words
    sharing a prefix of length ``i + 1 - d`` form a sub-loop whose future
    columns are constrained only among themselves, so each such group is
    solved independently and memoised up to rotation, reflection and column
    complement.  Each group returns a Pareto front ``{distinct words: minimal
    final length}`` so the loop-length cap stays exact.
    """
    if b < 1 or d < 1:
        raise ValueError("b and d must be >= 1")
    if max_len is None:
        max_len = 3 * 2**b
    memo: dict = {}
    spent = 0

    def solve(i: int, group: tuple, whole: bool) -> dict:
        # ``group`` is already canonical
        nonlocal spent
        key = (i, group, whole)
        hit = memo.get(key)
        if hit is not None:
            return hit
        nbits = min(i, d - 1) + 1  # suffix width after adding column i+1
        split = i >= d - 1
        last = i + 1 == b
        front: dict = {}
        for option in run_options(len(group), whole):
            spent += 1
            if spent > budget:
                raise SearchBudgetExceeded(f"more than {budget} expansions")
            if last:
                length, count = kernels.distinct_after(group, option)
                if length <= max_len:
                    _merge_front(front, {count: length})
                continue
            length, children = kernels.refine(group, option, nbits, split)
            if length > max_len:
                continue
            if not split:
                _merge_front(front, solve(i + 1, children[0], whole))
                continue
            zero, one = children
            if zero and one:
                f = _join_fronts(solve(i + 1, zero, False), solve(i + 1, one, False), max_len)
            else:
                f = solve(i + 1, zero or one, whole)
            _merge_front(front, f)
        memo[key] = front
        return front

    front = solve(0, (0,), True)
    feasible = [count for count, length in front.items() if length <= max_len]
    if not feasible:
        raise ValueError(f"no characteristic loop fits in max_len={max_len}")
    return max(feasible)


def find_characteristic_loop(code: Code, max_len: Optional[int] = None,
                             budget: int = 1_000_000) -> Optional[CodewordLoop]:
    """Search for a minimal characteristic loop using exactly ``code``'s words.

    Returns ``None`` if no loop of length <= ``max_len`` exists; raises
    :class:`SearchBudgetExceeded` if the search was cut short.
    """
    b, d = code.b, code.d
    if max_len is None:
        max_len = 4 * len(code)
    if max_len < len(code):
        raise ValueError("max_len must be at least the code size")
    targets = sorted(int(w, 2) for w in code.words)
    allowed = [set() for _ in range(b + 1)]
    for w in targets:
        for i in range(b + 1):
            allowed[i].add(w >> (b - i))
    seen = [set() for _ in range(b + 1)]
    spent = 0

    def class_options(i, loop, positions):
        c = len(positions)
        need = {(loop[j] << 1) | bit for j in positions for bit in (0, 1)} & allowed[i + 1]
        out = []
        for option in run_options(c, len(loop) == 1):
            made = set()
            ok = True
            for j, run in zip(positions, option):
                for bit in run:
                    w = (loop[j] << 1) | bit
                    if w not in allowed[i + 1]:
                        ok = False
                        break
                    made.add(w)
                if not ok:
                    break
            if ok and made == need:
                out.append(option)
        return out

    def dfs(i, loop):
        nonlocal spent
        if i == b:
            return loop
        shift = -1 if i + 1 <= d else d - 1
        classes: dict = {}
        for j, w in enumerate(loop):
            classes.setdefault(0 if shift < 0 else w >> shift, []).append(j)
        groups = list(classes.values())
        choices = []
        for positions in groups:
            opts = class_options(i, loop, positions)
            if not opts:
                return None
            choices.append(opts)
        for combo in itertools.product(*choices):
            spent += 1
            if spent > budget:
                raise SearchBudgetExceeded(f"more than {budget} candidate loops")
            runs = [None] * len(loop)
            for positions, option in zip(groups, combo):
                for j, run in zip(positions, option):
                    runs[j] = run
            child = kernels.expand(loop, runs)
            if len(child) > max_len:
                continue
            canon = kernels.min_rotation(child)
            if canon in seen[i + 1]:
                continue
            seen[i + 1].add(canon)
            found = dfs(i + 1, child)
            if found is not None:
                return found
        return None

    found = dfs(0, (0,))
    if found is None:
        return None
    return CodewordLoop(tuple(format(w, f"0{b}b") for w in found), d)
