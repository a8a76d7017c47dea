# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled combinatorial kernels; see ``_pykernels`` for the reference."""
from libc.stdlib cimport malloc, free, calloc
from libc.stdint cimport uint64_t


cdef inline bint _ok(int yn, int r, bint lukas):
    if lukas:
        return yn == 0 or r >= 1
    return yn <= r


def path_levels(int n, bint lukas, bint irreducible):
    cdef list out = []
    cdef int i, y, low, r, yn, j
    cdef bint found
    if n < 0:
        raise ValueError("path length must be nonnegative")
    if n == 0:
        return [] if irreducible else [(0,)]
    cdef int *lv = <int *> calloc(n + 1, sizeof(int))
    cdef int *cand = <int *> calloc(n + 1, sizeof(int))
    if lv == NULL or cand == NULL:
        free(lv)
        free(cand)
        raise MemoryError()
    try:
        i = 1
        cand[1] = 1
        while i >= 1:
            y = lv[i - 1]
            if lukas:
                low = 0
            else:
                low = y - 1 if y > 0 else 0
            if irreducible and i < n and low < 1:
                low = 1
            r = n - i
            found = False
            while cand[i] >= low:
                yn = cand[i]
                cand[i] -= 1
                if _ok(yn, r, lukas):
                    found = True
                    break
            if not found:
                i -= 1
                continue
            lv[i] = yn
            if i == n:
                out.append(tuple([lv[j] for j in range(n + 1)]))
            else:
                i += 1
                cand[i] = yn + 1
    finally:
        free(lv)
        free(cand)
    return out


def iter_levels(int n, bint lukas, bint irreducible):
    return iter(path_levels(n, lukas, irreducible))


def count_paths(int n, bint lukas, bint irreducible):
    cdef int i, y, yn, top, bottom
    if n < 0:
        raise ValueError("path length must be nonnegative")
    if n == 0:
        return 0 if irreducible else 1
    cdef list ways = [0] * (n + 2)
    cdef list nxt
    ways[0] = 1
    for i in range(1, n + 1):
        nxt = [0] * (n + 2)
        for y in range(n + 1):
            w = ways[y]
            if not w:
                continue
            top = y + 1
            if lukas:
                bottom = 0
            else:
                bottom = y - 1 if y > 0 else 0
            for yn in range(top, bottom - 1, -1):
                if irreducible and i < n and yn == 0:
                    continue
                if not _ok(yn, n - i, lukas):
                    continue
                nxt[yn] = nxt[yn] + w
        ways = nxt
    return ways[0]


cdef class _Search:
    cdef int p, words
    cdef uint64_t *masks
    cdef int *offset
    cdef int *count
    cdef uint64_t *occ
    cdef int *cols
    cdef int *idxs
    cdef char *used
    cdef long long explored, limit
    cdef list configs

    def __cinit__(self, list cands, long long limit):
        cdef int k, col, t, w, total = 0, width = 1
        self.p = len(cands)
        for row in cands:
            for paths in row:
                total += len(paths)
                for mk in paths:
                    width = max(width, (<object> mk).bit_length())
        self.words = (width + 63) // 64
        self.masks = <uint64_t *> calloc(max(total, 1) * self.words, sizeof(uint64_t))
        self.offset = <int *> calloc(self.p * self.p + 1, sizeof(int))
        self.count = <int *> calloc(self.p * self.p + 1, sizeof(int))
        self.occ = <uint64_t *> calloc((self.p + 1) * self.words, sizeof(uint64_t))
        self.cols = <int *> calloc(self.p + 1, sizeof(int))
        self.idxs = <int *> calloc(self.p + 1, sizeof(int))
        self.used = <char *> calloc(self.p + 1, sizeof(char))
        if (self.masks == NULL or self.offset == NULL or self.count == NULL
                or self.occ == NULL or self.cols == NULL or self.idxs == NULL
                or self.used == NULL):
            raise MemoryError()
        t = 0
        for k in range(self.p):
            for col in range(self.p):
                paths = cands[k][col]
                self.offset[k * self.p + col] = t
                self.count[k * self.p + col] = len(paths)
                for mk in paths:
                    for w in range(self.words):
                        self.masks[t * self.words + w] = <uint64_t> ((mk >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
                    t += 1
        self.explored = 0
        self.limit = limit
        self.configs = []

    def __dealloc__(self):
        free(self.masks)
        free(self.offset)
        free(self.count)
        free(self.occ)
        free(self.cols)
        free(self.idxs)
        free(self.used)

    cdef bint rec(self, int k):
        cdef int col, i, w, base, n
        cdef uint64_t *cur = self.occ + k * self.words
        cdef uint64_t *nxt = self.occ + (k + 1) * self.words
        cdef uint64_t *mk
        cdef bint clash
        if k == self.p:
            self.configs.append((tuple([self.cols[i] for i in range(self.p)]),
                                 tuple([self.idxs[i] for i in range(self.p)])))
            return True
        for col in range(self.p):
            if self.used[col]:
                continue
            self.used[col] = 1
            self.cols[k] = col
            base = self.offset[k * self.p + col]
            n = self.count[k * self.p + col]
            for i in range(n):
                mk = self.masks + (base + i) * self.words
                clash = False
                for w in range(self.words):
                    if mk[w] & cur[w]:
                        clash = True
                        break
                if clash:
                    continue
                self.explored += 1
                if self.explored > self.limit:
                    return False
                self.idxs[k] = i
                for w in range(self.words):
                    nxt[w] = cur[w] | mk[w]
                if not self.rec(k + 1):
                    return False
            self.used[col] = 0
        return True


def disjoint_configurations(list cands, long long limit):
    if len(cands) == 0:
        return [((), ())], 0, False
    cdef _Search s = _Search(cands, limit)
    cdef bint finished = s.rec(0)
    return s.configs, s.explored, not finished
