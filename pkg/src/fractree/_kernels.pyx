# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled sequence kernels.

Mirrors ``fractree._kernels_py`` function for function.  Inputs small
enough to rule out 64-bit overflow run on C integers; anything larger is
delegated to the pure-Python twin, so results are identical across
backends.  Rule codes match _kernels_py (0=CW, 1=SA, 2=Kepler,
3=reduced CW).
"""

import array as _array

from libc.stdint cimport uint64_t

from fractree import _kernels_py as _py

RULE_CW = _py.RULE_CW
RULE_SA = _py.RULE_SA
RULE_KEPLER = _py.RULE_KEPLER
RULE_CW_REDUCED = _py.RULE_CW_REDUCED

# two values below 2**63 add without overflowing uint64
cdef uint64_t _ADD_SAFE = (<uint64_t>1) << 63
# num and den below 2**31 keep every intermediate of a Newman step in range
cdef uint64_t _STEP_SAFE = (<uint64_t>1) << 31


def stern_value(n):
    """f(n) of the diatomic recurrence, by binary-digit iteration."""
    if n < 1:
        raise ValueError("diatomic index must be >= 1")
    cdef int bits = n.bit_length()
    cdef uint64_t a = 1, b = 1, nn
    cdef int shift
    if bits > 64:
        return _py.stern_value(n)
    nn = n
    for shift in range(bits - 2, -1, -1):
        if (nn >> shift) & 1:
            a += b
        else:
            b += a
    return a


def stern_pair(n):
    """The consecutive pair (f(n), f(n+1))."""
    if n < 1:
        raise ValueError("diatomic index must be >= 1")
    cdef int bits = n.bit_length()
    cdef uint64_t a = 1, b = 1, nn
    cdef int shift
    if bits > 64:
        return _py.stern_pair(n)
    nn = n
    for shift in range(bits - 2, -1, -1):
        if (nn >> shift) & 1:
            a += b
        else:
            b += a
    return a, b


cdef object _to_u64(values):
    # None when any entry is negative, non-int, or >= 2**64
    try:
        return _array.array("Q", values)
    except (OverflowError, TypeError):
        return None


cdef bint _all_small(uint64_t[:] v, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        if v[i] >= _ADD_SAFE:
            return False
    return True


def diatomic_next(chunk):
    """Expand one diatomic chunk; see _kernels_py.diatomic_next."""
    cdef Py_ssize_t n = len(chunk), i
    if n < 2:
        raise ValueError("chunk must hold at least two values")
    src = _to_u64(chunk)
    if src is None:
        return _py.diatomic_next(chunk)
    cdef uint64_t[:] s = src
    if not _all_small(s, n):
        return _py.diatomic_next(chunk)
    out = _array.array("Q", bytes(8 * (2 * n - 1)))
    cdef uint64_t[:] o = out
    for i in range(n - 1):
        o[2 * i] = s[i]
        o[2 * i + 1] = s[i] + s[i + 1]
    o[2 * n - 2] = s[n - 1]
    return out.tolist()


def newman_run(num, den, count):
    """count successor-iteration terms from num/den inclusive."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    if num < 1 or den < 1:
        raise ValueError("start must be a positive finite fraction")
    cdef Py_ssize_t cnt = count, i = 0
    cdef list out = []
    cdef uint64_t p, q, t
    if num >= _STEP_SAFE or den >= _STEP_SAFE:
        return _py.newman_run(num, den, count)
    p = num
    q = den
    while i < cnt:
        if p >= _STEP_SAFE or q >= _STEP_SAFE:
            out.extend(_py.newman_run(p, q, cnt - i))
            return out
        out.append((p, q))
        t = (2 * (p // q) + 1) * q - p
        p = q
        q = t
        i += 1
    return out


def next_row(rule, row):
    """Apply a child rule to a flat [num, den, ...] tree row."""
    cdef Py_ssize_t n = len(row), i, npairs
    cdef int code = rule
    if n == 0 or n % 2:
        raise ValueError("flat row must hold (num, den) pairs")
    if code < 0 or code > 3:
        raise ValueError(f"unknown child rule {rule}")
    src = _to_u64(row)
    if src is None:
        return _py.next_row(rule, row)
    cdef uint64_t[:] s = src
    if not _all_small(s, n):
        return _py.next_row(rule, row)
    npairs = n // 2
    out = _array.array("Q", bytes(8 * 4 * npairs))
    cdef uint64_t[:] o = out
    cdef uint64_t p, q
    for i in range(npairs):
        p = s[2 * i]
        q = s[2 * i + 1]
        if code == 0:
            o[4 * i] = p
            o[4 * i + 1] = p + q
            o[4 * i + 2] = p + q
            o[4 * i + 3] = q
        elif code == 1:
            o[4 * i] = p + q
            o[4 * i + 1] = q
            o[4 * i + 2] = q
            o[4 * i + 3] = p + q
        elif code == 2:
            o[4 * i] = p
            o[4 * i + 1] = p + q
            o[4 * i + 2] = q
            o[4 * i + 3] = p + q
        else:
            if p >= q:
                raise ValueError("reduced-tree nodes must be < 1")
            o[4 * i] = p
            o[4 * i + 1] = p + q
            o[4 * i + 2] = q
            o[4 * i + 3] = 2 * q - p
    return out.tolist()


def sb_refine(boundary):
    """Insert mediants between consecutive boundary pairs."""
    cdef Py_ssize_t n = len(boundary), i, npairs
    if n < 4 or n % 2:
        raise ValueError("boundary must hold at least two (num, den) pairs")
    src = _to_u64(boundary)
    if src is None:
        return _py.sb_refine(boundary)
    cdef uint64_t[:] s = src
    if not _all_small(s, n):
        return _py.sb_refine(boundary)
    npairs = n // 2
    out = _array.array("Q", bytes(8 * (4 * npairs - 2)))
    cdef uint64_t[:] o = out
    for i in range(npairs - 1):
        o[4 * i] = s[2 * i]
        o[4 * i + 1] = s[2 * i + 1]
        o[4 * i + 2] = s[2 * i] + s[2 * i + 2]
        o[4 * i + 3] = s[2 * i + 1] + s[2 * i + 3]
    o[4 * npairs - 4] = s[n - 2]
    o[4 * npairs - 3] = s[n - 1]
    return out.tolist()
