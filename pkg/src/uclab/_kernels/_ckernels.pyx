# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Family bits are held in ``uint64_t``, so these handle algebras with at most six
atoms; the dispatcher in ``uclab._kernels`` routes larger inputs to Python.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef uint64_t[6] LACKING
LACKING[0] = 0x5555555555555555ULL
LACKING[1] = 0x3333333333333333ULL
LACKING[2] = 0x0F0F0F0F0F0F0F0FULL
LACKING[3] = 0x00FF00FF00FF00FFULL
LACKING[4] = 0x0000FFFF0000FFFFULL
LACKING[5] = 0x00000000FFFFFFFFULL


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t c_upclose(uint64_t bits, int n) nogil:
    cdef int i
    for i in range(n):
        bits |= (bits & LACKING[i]) << (1 << i)
    return bits


cdef inline uint64_t c_downclose(uint64_t bits, int n) nogil:
    cdef int i
    for i in range(n):
        bits |= (bits & ~LACKING[i]) >> (1 << i)
    return bits


cdef inline uint64_t c_minkowski(uint64_t f, uint64_t g) nogil:
    cdef uint64_t out = 0, rest
    cdef int x
    while f:
        x = ctz(f)
        f &= f - 1
        rest = g
        while rest:
            out |= (<uint64_t>1) << (x | ctz(rest))
            rest &= rest - 1
    return out


def upclose(uint64_t bits, int n):
    return c_upclose(bits, n)


def downclose(uint64_t bits, int n):
    return c_downclose(bits, n)


def minkowski(uint64_t f, uint64_t g):
    return c_minkowski(f, g)


def supports(uint64_t f, uint64_t g, int n):
    return (g & ~c_upclose(f, n)) == 0


cdef uint64_t* _as_array(seq) except NULL:
    cdef Py_ssize_t i, k = len(seq)
    cdef uint64_t* out = <uint64_t*>malloc((k + 1) * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    for i in range(k):
        out[i] = seq[i]
    return out


def uc_violation(const unsigned char[::1] table, int n, stacks):
    cdef Py_ssize_t size = table.shape[0]
    cdef Py_ssize_t k = len(stacks)
    cdef uint64_t f, g, up, rest, low, u, v, x
    cdef Py_ssize_t i, j
    cdef uint64_t* arr
    if table[0]:
        return ("K0", 0, 0)
    for f in range(1, <uint64_t>size, 2):
        if table[f]:
            return ("K1", f, 0)
    for x in range(1, (<uint64_t>1) << n):
        if not table[(<uint64_t>1) << x]:
            return ("K2", (<uint64_t>1) << x, 0)
    for f in range(1, <uint64_t>size):
        if not table[f]:
            continue
        up = c_upclose(f, n)
        if not table[up]:
            return ("K3", f, up)
        rest = f
        while rest:
            low = rest & (~rest + 1)
            g = f ^ low
            if g and not table[g]:
                return ("K3", f, g)
            rest ^= low
    arr = _as_array(stacks)
    try:
        for i in range(k):
            u = arr[i]
            for j in range(k):
                v = arr[j]
                if table[u & v] and not table[u] and not table[v]:
                    return ("K4", u, v)
    finally:
        free(arr)
    return None


def k4_bruteforce(const unsigned char[::1] table, int n):
    cdef uint64_t size = table.shape[0]
    cdef uint64_t f, g
    for f in range(1, size):
        if table[f]:
            continue
        for g in range(f, size):
            if table[g]:
                continue
            if table[c_minkowski(f, g)]:
                return (f, g)
    return None


def hypercontact_violation(const unsigned char[::1] table, int n):
    cdef uint64_t size = table.shape[0]
    cdef uint64_t f, d, x, y, z, t, rest, base, bits, upf
    cdef int b
    if not table[0]:
        return ("H0", 0, 0, 0)
    for f in range(1, size, 2):
        if table[f]:
            return ("H1", f, 0, 0)
    for x in range(1, (<uint64_t>1) << n):
        if not table[(<uint64_t>1) << x]:
            return ("H2", (<uint64_t>1) << x, 0, 0)
    for f in range(1, size):
        if not table[f]:
            continue
        bits = f
        while bits:
            b = ctz(bits)
            bits &= bits - 1
            if not table[f ^ ((<uint64_t>1) << b)]:
                return ("H3", f, f ^ ((<uint64_t>1) << b), 0)
    for f in range(1, size):
        if not table[f]:
            continue
        upf = c_upclose(f, n)
        while upf:
            b = ctz(upf)
            upf &= upf - 1
            if not table[f | ((<uint64_t>1) << b)]:
                return ("H4", f, b, 0)
    for d in range(1, size):
        if not table[d]:
            continue
        bits = d
        while bits:
            z = ctz(bits)
            bits &= bits - 1
            for base in (d, d ^ ((<uint64_t>1) << z)):
                x = z
                while True:
                    rest = z ^ x
                    t = x
                    while True:
                        y = rest | t
                        if (not table[base | ((<uint64_t>1) << x)]
                                and not table[base | ((<uint64_t>1) << y)]):
                            return ("H5", base, x, y)
                        if t == 0:
                            break
                        t = (t - 1) & x
                    if x == 0:
                        break
                    x = (x - 1) & z
    return None


def ss_bruteforce(stacks, int n, uint64_t fixed_in, uint64_t fixed_out):
    cdef Py_ssize_t k = len(stacks)
    if k > 63:
        raise ValueError("at most 63 stacks")
    index = {s: i for i, s in enumerate(stacks)}
    cdef uint64_t empty = (<uint64_t>1) << <int>index[0]
    cdef uint64_t full = (<uint64_t>1) << <int>index[(1 << (1 << n)) - 1]
    cdef uint64_t principal = 0
    cdef uint64_t* arr = _as_array(stacks)
    cdef uint64_t* below = <uint64_t*>malloc(k * sizeof(uint64_t))
    cdef int* meet = <int*>malloc(k * k * sizeof(int))
    cdef Py_ssize_t i, j
    cdef uint64_t m, cand, sub, free_bits, bits
    cdef bint ok
    found = []
    try:
        for x in range(1, 1 << n):
            principal |= (<uint64_t>1) << <int>index[c_upclose((<uint64_t>1) << x, n)]
        for i in range(k):
            m = 0
            for j in range(k):
                if arr[j] and (arr[j] & ~arr[i]) == 0:
                    m |= (<uint64_t>1) << j
            below[i] = m
            for j in range(k):
                meet[i * k + j] = index[arr[i] & arr[j]]
        free_bits = ((<uint64_t>1) << k) - 1
        free_bits &= ~(fixed_in | fixed_out)
        sub = 0
        while True:
            cand = fixed_in | sub
            if not ((cand & empty) or (cand & full) or (principal & ~cand)):
                ok = True
                bits = cand
                while bits:
                    i = ctz(bits)
                    bits &= bits - 1
                    if below[i] & ~cand:
                        ok = False
                        break
                if ok:
                    for i in range(k):
                        if not ok:
                            break
                        if (cand >> i) & 1:
                            continue
                        for j in range(i, k):
                            if ((cand >> meet[i * k + j]) & 1) and not ((cand >> j) & 1):
                                ok = False
                                break
                if ok:
                    found.append(cand)
            sub = (sub - free_bits) & free_bits
            if sub == 0:
                break
    finally:
        free(arr)
        free(below)
        free(meet)
    return sorted(found)


def find_cover(stacks, uint64_t target):
    cdef Py_ssize_t k = len(stacks)
    if k > 26:
        raise ValueError("at most 26 stacks")
    cdef uint64_t* arr = _as_array(stacks)
    cdef uint64_t* inter
    cdef uint64_t m, low, limit = (<uint64_t>1) << k
    cdef uint64_t whole = ~(<uint64_t>0)
    cdef int64_t result = -1
    cdef Py_ssize_t i
    for i in range(k):
        whole &= arr[i]
    # intersections only shrink, so no cover exists unless the full one works
    if k == 0 or (whole & ~target):
        free(arr)
        return -1
    inter = <uint64_t*>malloc(limit * sizeof(uint64_t))
    if inter == NULL:
        free(arr)
        raise MemoryError()
    try:
        inter[0] = ~(<uint64_t>0)
        for m in range(1, limit):
            low = m & (~m + 1)
            inter[m] = inter[m ^ low] & arr[ctz(low)]
            if (inter[m] & ~target) == 0:
                result = m
                break
    finally:
        free(arr)
        free(inter)
    return result
