# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of genjacobi._pykernel.

Same three functions, same semantics.  Each function takes a machine-word
fast path (exact: the entry bounds are checked first so int64 accumulation
cannot overflow) and falls back to arbitrary-precision object loops.
"""
from libc.stdlib cimport free, malloc

from math import gcd as _gcd

# any accumulated value stays strictly below this, leaving headroom in int64
_SAFE = 1 << 62


cdef object _absmax(list a):
    m = 0
    for v in a:
        if v < 0:
            v = -v
        if v > m:
            m = v
    return m


cdef long long _llgcd(long long x, long long y) noexcept:
    while y:
        x, y = y, x % y
    return x


def conv(list a, list b):
    """Convolution of two int lists: coefficients of the product."""
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef long long *ca
    cdef long long *cb
    cdef long long *cr
    cdef long long x
    if la == 0 or lb == 0:
        return [0] * (la + lb - 1) if la + lb >= 1 else []
    ma = _absmax(a)
    mb = _absmax(b)
    # the individual bounds matter when one side is all zeros: the product
    # bound is then 0 no matter how large the other side's entries are
    if ma < _SAFE and mb < _SAFE and ma * mb * (la if la < lb else lb) < _SAFE:
        ca = <long long *> malloc(la * sizeof(long long))
        cb = <long long *> malloc(lb * sizeof(long long))
        cr = <long long *> malloc((la + lb - 1) * sizeof(long long))
        if ca == NULL or cb == NULL or cr == NULL:
            free(ca)
            free(cb)
            free(cr)
            raise MemoryError()
        try:
            for i in range(la):
                ca[i] = a[i]
            for i in range(lb):
                cb[i] = b[i]
            for i in range(la + lb - 1):
                cr[i] = 0
            for i in range(la):
                x = ca[i]
                if x:
                    for j in range(lb):
                        cr[i + j] += x * cb[j]
            return [cr[i] for i in range(la + lb - 1)]
        finally:
            free(ca)
            free(cb)
            free(cr)
    res = [0] * (la + lb - 1)
    for i in range(la):
        ox = a[i]
        if ox:
            for j in range(lb):
                res[i + j] = res[i + j] + ox * b[j]
    return res


def add_scaled(list a, object sa, list b, object sb):
    """Elementwise sa*a + sb*b, shorter list padded with zeros."""
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef long long csa, csb
    cdef long long *cr
    if la < lb:
        a, sa, la, b, sb, lb = b, sb, lb, a, sa, la
    if la == 0:
        return []
    ma = _absmax(a)
    mb = _absmax(b)
    asa = -sa if sa < 0 else sa
    asb = -sb if sb < 0 else sb
    # entries and scales are converted individually, so each must fit on
    # its own even when a zero on the other factor nulls the sum bound
    if (ma < _SAFE and mb < _SAFE and asa < _SAFE and asb < _SAFE
            and ma * asa + mb * asb < _SAFE):
        cr = <long long *> malloc(la * sizeof(long long))
        if cr == NULL:
            raise MemoryError()
        try:
            csa = sa
            csb = sb
            for i in range(la):
                cr[i] = csa * <long long> a[i]
            for i in range(lb):
                cr[i] += csb * <long long> b[i]
            return [cr[i] for i in range(la)]
        finally:
            free(cr)
    res = [x * sa for x in a]
    for i in range(lb):
        res[i] = res[i] + b[i] * sb
    return res


def vec_gcd(list a):
    """gcd of all entries (nonnegative; 0 for an empty or all-zero list)."""
    cdef Py_ssize_t n = len(a), i
    cdef long long g
    if n == 0:
        return 0
    if _absmax(a) < _SAFE:
        g = 0
        for i in range(n):
            g = _llgcd(g, a[i] if a[i] >= 0 else -a[i])
            if g == 1:
                return 1
        return g
    og = 0
    for v in a:
        og = _gcd(og, v)
        if og == 1:
            return 1
    return og
