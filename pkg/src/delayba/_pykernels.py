"""Pure-Python versions of the combinatorial inner loops.

Every function here has a twin with the same signature in ``_ckernels.pyx``;
:mod:`delayba.kernels` picks one at import time.
"""


def transitions(bits):
    """Number of cyclic bit changes in ``bits``."""
    n = len(bits)
    count = 0
    for k in range(n):
        if bits[k] != bits[k - 1]:
            count += 1
    return count


def is_unimodal(bits):
    return transitions(bits) <= 2


def min_rotation(seq):
    """Lexicographically least rotation of ``seq`` as a tuple."""
    seq = tuple(seq)
    n = len(seq)
    if n == 0:
        return seq
    return min(seq[k:] + seq[:k] for k in range(n))


def canonical_loop(seq):
    """Orbit representative under rotation, reflection and bitwise XOR.

    XOR-normalising every rotation against its own first element removes the
    per-column complement symmetry without enumerating masks.
    """
    seq = tuple(seq)
    n = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for k in range(n):
            head = s[k]
            cand = tuple(w ^ head for w in s[k:] + s[:k])
            if best is None or cand < best:
                best = cand
    return best


def expand(seq, option):
    """Replace each element ``w`` of ``seq`` by ``(w << 1) | bit`` per run bit."""
    out = []
    for w, run in zip(seq, option):
        base = w << 1
        for bit in run:
            out.append(base | bit)
    return tuple(out)


def split_top(seq, nbits):
    """Split words of ``nbits`` bits by their top bit; drop that bit."""
    mask = (1 << (nbits - 1)) - 1
    zero, one = [], []
    for w in seq:
        if (w >> (nbits - 1)) & 1:
            one.append(w & mask)
        else:
            zero.append(w & mask)
    return tuple(zero), tuple(one)


def class_bits_unimodal(words, column_shift, key_shift):
    """Check a column of ``words`` for per-class unimodality.

    Words are grouped by ``w >> key_shift`` (the class key, order preserved)
    and each group's bit ``(w >> column_shift) & 1`` must form a unimodal loop.
    A negative ``key_shift`` means a single class.
    """
    groups = {}
    for w in words:
        key = 0 if key_shift < 0 else w >> key_shift
        groups.setdefault(key, []).append((w >> column_shift) & 1)
    for bits in groups.values():
        if transitions(bits) > 2:
            return False
    return True


def refine(group, option, nbits, split):
    """Expand ``group`` by ``option`` and return canonical child groups.

    Returns ``(len(child), children)`` where ``children`` holds one canonical
    group, or two (zero side, one side; either may be empty) when ``split``.
    """
    child = expand(group, option)
    if not split:
        return len(child), (canonical_loop(child),)
    zero, one = split_top(child, nbits)
    return len(child), (canonical_loop(zero) if zero else (),
                        canonical_loop(one) if one else ())


def distinct_after(group, option):
    """Length and number of distinct words of ``expand(group, option)``."""
    child = expand(group, option)
    return len(child), len(set(child))
