# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the functions in ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef inline int _cyclic_changes(long *bits, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t k
    cdef int count = 0
    if n == 0:
        return 0
    if bits[0] != bits[n - 1]:
        count += 1
    for k in range(1, n):
        if bits[k] != bits[k - 1]:
            count += 1
    return count


cdef long *_as_array(object seq, Py_ssize_t *n) except NULL:
    cdef Py_ssize_t k, size = len(seq)
    cdef long *buf = <long *> malloc((size if size > 0 else 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    for k in range(size):
        buf[k] = seq[k]
    n[0] = size
    return buf


def transitions(bits):
    cdef Py_ssize_t n
    cdef long *buf = _as_array(bits, &n)
    try:
        return _cyclic_changes(buf, n)
    finally:
        free(buf)


def is_unimodal(bits):
    return transitions(bits) <= 2


def min_rotation(seq):
    seq = tuple(seq)
    cdef Py_ssize_t n = len(seq)
    cdef Py_ssize_t k, best = 0, j
    if n == 0:
        return seq
    # generic objects (e.g. strings): compare rotations element-wise in place
    for k in range(1, n):
        for j in range(n):
            a = seq[(k + j) % n]
            c = seq[(best + j) % n]
            if a != c:
                if a < c:
                    best = k
                break
    return seq[best:] + seq[:best]


cdef int _cmp_candidate(long *s, Py_ssize_t n, Py_ssize_t k, int step,
                        long *best) noexcept nogil:
    # compare rotation/reflection candidate starting at k against best
    cdef Py_ssize_t j, idx
    cdef long head = s[k], v
    for j in range(n):
        idx = (k + step * j) % n
        if idx < 0:
            idx += n
        v = s[idx] ^ head
        if v != best[j]:
            return -1 if v < best[j] else 1
    return 0


cdef void _store_candidate(long *s, Py_ssize_t n, Py_ssize_t k, int step,
                           long *best) noexcept nogil:
    cdef Py_ssize_t j, idx
    cdef long head = s[k]
    for j in range(n):
        idx = (k + step * j) % n
        if idx < 0:
            idx += n
        best[j] = s[idx] ^ head


def canonical_loop(seq):
    cdef Py_ssize_t n, k, j
    cdef int step, t
    cdef long *s = _as_array(seq, &n)
    cdef long *best = <long *> malloc((n if n > 0 else 1) * sizeof(long))
    if best == NULL:
        free(s)
        raise MemoryError()
    try:
        if n == 0:
            return ()
        _store_candidate(s, n, 0, 1, best)
        with nogil:
            for t in range(2):
                step = 1 - 2 * t
                for k in range(n):
                    if _cmp_candidate(s, n, k, step, best) < 0:
                        _store_candidate(s, n, k, step, best)
        return tuple([best[j] for j in range(n)])
    finally:
        free(s)
        free(best)


def expand(seq, option):
    cdef list out = []
    cdef long base
    cdef Py_ssize_t k, n = len(seq)
    for k in range(n):
        base = (<long> seq[k]) << 1
        for bit in option[k]:
            out.append(base | <long> bit)
    return tuple(out)


def split_top(seq, int nbits):
    cdef long mask = (1L << (nbits - 1)) - 1
    cdef list zero = [], one = []
    cdef long w
    for item in seq:
        w = item
        if (w >> (nbits - 1)) & 1:
            one.append(w & mask)
        else:
            zero.append(w & mask)
    return tuple(zero), tuple(one)


def class_bits_unimodal(words, int column_shift, int key_shift):
    cdef Py_ssize_t n, k, j, m
    cdef long *w = _as_array(words, &n)
    cdef long *bits = <long *> malloc((n if n > 0 else 1) * sizeof(long))
    cdef char *done = <char *> malloc((n if n > 0 else 1) * sizeof(char))
    cdef long key
    cdef int ok = 1
    if bits == NULL or done == NULL:
        free(w)
        free(bits)
        free(done)
        raise MemoryError()
    try:
        with nogil:
            for k in range(n):
                done[k] = 0
            for k in range(n):
                if done[k]:
                    continue
                key = 0 if key_shift < 0 else w[k] >> key_shift
                m = 0
                for j in range(k, n):
                    if not done[j] and (key_shift < 0 or (w[j] >> key_shift) == key):
                        done[j] = 1
                        bits[m] = (w[j] >> column_shift) & 1
                        m += 1
                if _cyclic_changes(bits, m) > 2:
                    ok = 0
                    break
        return ok == 1
    finally:
        free(w)
        free(bits)
        free(done)


cdef tuple _canonical_from(long *s, Py_ssize_t n):
    cdef long *best
    cdef Py_ssize_t k, j
    cdef int step, t
    if n == 0:
        return ()
    best = <long *> malloc(n * sizeof(long))
    if best == NULL:
        raise MemoryError()
    try:
        _store_candidate(s, n, 0, 1, best)
        with nogil:
            for t in range(2):
                step = 1 - 2 * t
                for k in range(n):
                    if _cmp_candidate(s, n, k, step, best) < 0:
                        _store_candidate(s, n, k, step, best)
        return tuple([best[j] for j in range(n)])
    finally:
        free(best)


cdef Py_ssize_t _expand_into(object group, object option, long **out) except -1:
    cdef Py_ssize_t k, n = len(group), total = 0, m = 0
    cdef long base
    for k in range(n):
        total += len(option[k])
    out[0] = <long *> malloc((total if total > 0 else 1) * sizeof(long))
    if out[0] == NULL:
        raise MemoryError()
    for k in range(n):
        base = (<long> group[k]) << 1
        for bit in option[k]:
            out[0][m] = base | <long> bit
            m += 1
    return total


def refine(group, option, int nbits, bint split):
    cdef long *child = NULL
    cdef long *zero = NULL
    cdef long *one = NULL
    cdef Py_ssize_t total, k, nz = 0, no = 0
    cdef long mask, w
    total = _expand_into(group, option, &child)
    try:
        if not split:
            return total, (_canonical_from(child, total),)
        zero = <long *> malloc((total if total > 0 else 1) * sizeof(long))
        one = <long *> malloc((total if total > 0 else 1) * sizeof(long))
        if zero == NULL or one == NULL:
            raise MemoryError()
        mask = (1L << (nbits - 1)) - 1
        for k in range(total):
            w = child[k]
            if (w >> (nbits - 1)) & 1:
                one[no] = w & mask
                no += 1
            else:
                zero[nz] = w & mask
                nz += 1
        return total, (_canonical_from(zero, nz), _canonical_from(one, no))
    finally:
        free(child)
        free(zero)
        free(one)


def distinct_after(group, option):
    cdef long *child = NULL
    cdef Py_ssize_t total
    total = _expand_into(group, option, &child)
    try:
        return total, len({child[k] for k in range(total)})
    finally:
        free(child)
