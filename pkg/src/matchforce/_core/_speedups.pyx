# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled matching kernels, the behavioural twin of ``pure.Kernel``.

Orders up to 64 fit one machine word per row.  Subproblem counts live in a
flat byte table when the graph is small enough for that to be cheap, and
in a dict otherwise; values are 0, 1 or 2 ("two or more"), -1 marking
unknown in the table.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset

from matchforce.errors import MatchingOverflowError

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)

cdef int FLAT_TABLE_MAX_ORDER = 18


cdef class Kernel:
    cdef unsigned long long rows[64]
    cdef int order
    cdef signed char *tab
    cdef dict cache

    def __cinit__(self, rows):
        cdef int n = len(rows)
        if n > 64:
            raise ValueError("compiled kernel supports order <= 64")
        self.order = n
        cdef int i
        for i in range(n):
            self.rows[i] = rows[i]
        if n <= FLAT_TABLE_MAX_ORDER:
            self.tab = <signed char *> calloc(1ULL << n, 1)
            if self.tab == NULL:
                raise MemoryError()
            memset(self.tab, 0xFF, 1ULL << n)
            self.tab[0] = 1
            self.cache = None
        else:
            self.tab = NULL
            self.cache = {0: 1}

    def __dealloc__(self):
        if self.tab != NULL:
            free(self.tab)

    cdef int _c2(self, unsigned long long mask):
        cdef signed char hit
        if self.tab != NULL:
            hit = self.tab[mask]
            if hit >= 0:
                return hit
        else:
            obj = self.cache.get(mask)
            if obj is not None:
                return <int> obj
        cdef int u = __builtin_ctzll(mask)
        cdef unsigned long long rest = mask ^ (1ULL << u)
        cdef unsigned long long free_ = self.rows[u] & rest
        cdef unsigned long long vbit
        cdef int total = 0
        while free_:
            vbit = free_ & (~free_ + 1)
            free_ ^= vbit
            total += self._c2(rest ^ vbit)
            if total >= 2:
                total = 2
                break
        if self.tab != NULL:
            self.tab[mask] = <signed char> total
        else:
            self.cache[mask] = total
        return total

    def count2(self, mask):
        """Perfect matchings of the subgraph induced by ``mask``, capped at 2."""
        cdef unsigned long long m = mask
        if __builtin_popcountll(m) & 1:
            return 0
        if m == 0:
            return 1
        return self._c2(m)

    def pm_exists(self, mask):
        return self.count2(mask) > 0

    cdef int _enum(
        self, unsigned long long mask, long cap, list out, int *stack, int depth
    ) except -1:
        cdef int u, v
        cdef unsigned long long u_bit, rest, free_, vbit
        if mask == 0:
            if len(out) >= cap:
                raise MatchingOverflowError(f"more than {cap} perfect matchings")
            out.append(tuple([stack[i] for i in range(2 * depth)]))
            return 0
        u = __builtin_ctzll(mask)
        u_bit = 1ULL << u
        rest = mask ^ u_bit
        free_ = self.rows[u] & rest
        while free_:
            vbit = free_ & (~free_ + 1)
            free_ ^= vbit
            v = __builtin_ctzll(vbit)
            stack[2 * depth] = u
            stack[2 * depth + 1] = v
            self._enum(rest ^ vbit, cap, out, stack, depth + 1)
        return 0

    def enumerate_pms(self, mask, cap):
        """All perfect matchings of the induced subgraph, lexicographic,
        as flat (u0, v0, u1, v1, ...) tuples."""
        cdef unsigned long long m = mask
        if __builtin_popcountll(m) & 1:
            return []
        out: list = []
        cdef int stack[64]
        self._enum(m, cap, out, stack, 0)
        return out

    def forcing_scan(self, full_mask, edge_masks, int size):
        """First forcing subset of ``size`` matching edges, index order;
        returns (indices | None, tested)."""
        cdef unsigned long long full = full_mask
        cdef int k = len(edge_masks)
        cdef unsigned long long masks[64]
        cdef int idx[64]
        cdef int i, j, t
        cdef long long tested = 0
        cdef unsigned long long removed
        if size > k:
            return None, 0
        if size == 0:
            return ((), 1) if self._c2(full) <= 1 else (None, 1)
        for i in range(k):
            masks[i] = edge_masks[i]
        for i in range(size):
            idx[i] = i
        while True:
            removed = 0
            for i in range(size):
                removed |= masks[idx[i]]
            tested += 1
            if self._c2(full ^ removed) <= 1:
                return tuple([idx[i] for i in range(size)]), tested
            j = size - 1
            while j >= 0 and idx[j] == k - size + j:
                j -= 1
            if j < 0:
                return None, tested
            idx[j] += 1
            for t in range(j + 1, size):
                idx[t] = idx[t - 1] + 1
