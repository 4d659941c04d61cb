# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse term kernels.

Monomials are packed into 64-bit keys (fixed-width exponent fields) so that
monomial multiplication is a single integer add and hashing is cheap.  When
every coefficient is a machine-sized ``int`` and the worst-case accumulated
value fits in 63 bits, coefficients are accumulated in C as well.  Inputs that
cannot be packed fall through to the pure-Python kernels.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, realloc, free

from symid import _kernels_py

add_terms = _kernels_py.add_terms

cdef int64_t _I63 = (<int64_t>1) << 62


cdef inline uint64_t _mix(uint64_t x) nogil:
    x ^= x >> 33
    x *= 0xff51afd7ed558ccdULL
    x ^= x >> 33
    x *= 0xc4ceb9fe1a85ec53ULL
    x ^= x >> 33
    return x


cdef class _Accumulator:
    cdef uint64_t* keys
    cdef int64_t* ivals
    cdef list ovals
    cdef Py_ssize_t n, cap
    cdef Py_ssize_t* table
    cdef Py_ssize_t tmask
    cdef bint use_int

    def __cinit__(self, Py_ssize_t hint, bint use_int):
        cdef Py_ssize_t tsize = 16, i
        while tsize < 2 * hint:
            tsize <<= 1
        self.tmask = tsize - 1
        self.table = <Py_ssize_t*>malloc(tsize * sizeof(Py_ssize_t))
        self.cap = hint if hint > 8 else 8
        self.keys = <uint64_t*>malloc(self.cap * sizeof(uint64_t))
        self.ivals = <int64_t*>malloc(self.cap * sizeof(int64_t))
        if self.table == NULL or self.keys == NULL or self.ivals == NULL:
            raise MemoryError()
        for i in range(tsize):
            self.table[i] = -1
        self.n = 0
        self.use_int = use_int
        self.ovals = []

    def __dealloc__(self):
        free(self.table)
        free(self.keys)
        free(self.ivals)

    cdef int _grow_table(self) except -1:
        cdef Py_ssize_t tsize = (self.tmask + 1) * 2, i, h
        cdef Py_ssize_t* fresh = <Py_ssize_t*>malloc(tsize * sizeof(Py_ssize_t))
        if fresh == NULL:
            raise MemoryError()
        for i in range(tsize):
            fresh[i] = -1
        for i in range(self.n):
            h = <Py_ssize_t>(_mix(self.keys[i]) & <uint64_t>(tsize - 1))
            while fresh[h] != -1:
                h = (h + 1) & (tsize - 1)
            fresh[h] = i
        free(self.table)
        self.table = fresh
        self.tmask = tsize - 1
        return 0

    cdef Py_ssize_t slot(self, uint64_t key) except -1:
        cdef Py_ssize_t h = <Py_ssize_t>(_mix(key) & <uint64_t>self.tmask)
        cdef Py_ssize_t idx
        cdef void* p
        while True:
            idx = self.table[h]
            if idx == -1:
                break
            if self.keys[idx] == key:
                return idx
            h = (h + 1) & self.tmask
        if self.n == self.cap:
            self.cap *= 2
            p = realloc(self.keys, self.cap * sizeof(uint64_t))
            if p == NULL:
                raise MemoryError()
            self.keys = <uint64_t*>p
            p = realloc(self.ivals, self.cap * sizeof(int64_t))
            if p == NULL:
                raise MemoryError()
            self.ivals = <int64_t*>p
        idx = self.n
        self.keys[idx] = key
        self.ivals[idx] = 0
        if not self.use_int:
            self.ovals.append(0)
        self.table[h] = idx
        self.n += 1
        if 2 * self.n > self.tmask:
            self._grow_table()
        return idx

    cdef dict unpack(self, int width, int bits):
        cdef dict out = {}
        cdef Py_ssize_t i
        cdef int k, last
        cdef uint64_t key, fmask = ((<uint64_t>1) << bits) - 1 if bits < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
        cdef list exps
        for i in range(self.n):
            if self.use_int:
                if self.ivals[i] == 0:
                    continue
                value = self.ivals[i]
            else:
                value = self.ovals[i]
                if not value:
                    continue
            key = self.keys[i]
            exps = []
            last = 0
            for k in range(width):
                exps.append(<long>((key >> (k * bits)) & fmask) if k * bits < 64 else 0)
                if exps[k]:
                    last = k + 1
            out[tuple(exps[:last])] = value
        return out


cdef int _max_exponent(dict terms):
    cdef int best = 0
    for m in terms:
        for e in m:
            if e > best:
                best = e
    return best


cdef bint _small_ints(dict terms):
    for c in terms.values():
        if type(c) is not int or not (-_I63 < c < _I63):
            return False
    return True


cdef uint64_t _pack(tuple mono, int bits):
    cdef uint64_t key = 0
    cdef int k
    for k in range(len(mono)):
        key |= (<uint64_t>mono[k]) << (k * bits)
    return key


cdef long _fdeg(tuple mono, tuple positions):
    cdef long d = 0
    cdef Py_ssize_t n = len(mono)
    for k in positions:
        if k < n:
            d += mono[k]
    return d


def _mul(dict a, dict b, tuple positions, long cutoff):
    if not a or not b:
        return {}
    cdef bint truncate = positions is not None
    cdef int width = 0, bits
    for m in a:
        if len(m) > width:
            width = len(m)
    for m in b:
        if len(m) > width:
            width = len(m)
    bits = (_max_exponent(a) + _max_exponent(b)).bit_length()
    if bits == 0:
        bits = 1
    if width * bits > 64:
        if truncate:
            return _kernels_py.mul_terms_truncated(a, b, positions, cutoff)
        return _kernels_py.mul_terms(a, b)

    cdef Py_ssize_t na = len(a), nb = len(b), i, j, idx
    cdef bint use_int = False
    if _small_ints(a) and _small_ints(b):
        bound = min(na, nb) * max(abs(c) for c in a.values()) * max(abs(c) for c in b.values())
        use_int = bound < (1 << 63)

    # b sorted by formal degree so the inner loop can stop early
    items_a = list(a.items())
    items_b = list(b.items())
    if truncate:
        items_a = [it for it in items_a if _fdeg(it[0], positions) <= cutoff]
        items_b.sort(key=lambda it: _fdeg(it[0], positions))
        na = len(items_a)
        if na == 0:
            return {}

    cdef uint64_t* ka = <uint64_t*>malloc(na * sizeof(uint64_t))
    cdef uint64_t* kb = <uint64_t*>malloc(nb * sizeof(uint64_t))
    cdef long* da = <long*>malloc(na * sizeof(long))
    cdef long* db = <long*>malloc(nb * sizeof(long))
    cdef int64_t* ia = <int64_t*>malloc(na * sizeof(int64_t))
    cdef int64_t* ib = <int64_t*>malloc(nb * sizeof(int64_t))
    cdef int64_t cbj
    cdef uint64_t kbj
    cdef long room
    cdef _Accumulator acc
    try:
        if ka == NULL or kb == NULL or da == NULL or db == NULL or ia == NULL or ib == NULL:
            raise MemoryError()
        ca = [c for _, c in items_a]
        cb = [c for _, c in items_b]
        for i in range(na):
            ka[i] = _pack(items_a[i][0], bits)
            da[i] = _fdeg(items_a[i][0], positions) if truncate else 0
            if use_int:
                ia[i] = ca[i]
        for j in range(nb):
            kb[j] = _pack(items_b[j][0], bits)
            db[j] = _fdeg(items_b[j][0], positions) if truncate else 0
            if use_int:
                ib[j] = cb[j]

        acc = _Accumulator(na + nb, use_int)
        for i in range(na):
            room = cutoff - da[i]
            for j in range(nb):
                if truncate and db[j] > room:
                    break
                idx = acc.slot(ka[i] + kb[j])
                if use_int:
                    acc.ivals[idx] += ia[i] * ib[j]
                else:
                    acc.ovals[idx] = acc.ovals[idx] + ca[i] * cb[j]
        return acc.unpack(width, bits)
    finally:
        free(ka)
        free(kb)
        free(da)
        free(db)
        free(ia)
        free(ib)


def mul_terms(dict a, dict b):
    return _mul(a, b, None, 0)


def mul_terms_truncated(dict a, dict b, positions, long cutoff):
    return _mul(a, b, tuple(positions), cutoff)
