# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cover-search kernel.

Same contract as _search_py.run_search.  Requires at most 64 segments and 64
vertices (cover.find_covers checks before dispatching here); candidate path
sets are fixed-width word arrays, so the hot loop runs without the
interpreter.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

from .errors import BudgetExceededError

COMPILED = True

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef class _Search:
    cdef:
        int S, P, V, W, max_size, max_len, n_chosen, n_high
        long long node_budget, nodes
        u64 full_mask
        u64 *pmask          # per path: segment mask
        u64 *pvmask         # per path: vertex mask
        u64 *vinc           # per vertex: incident-segment mask
        u64 *seg_paths      # S x W candidate words
        u64 *avail          # (max_size+2) x W scratch
        int *path_segs_off
        int *path_segs
        int *ends           # 2 per path
        int *inc_off
        int *inc
        int *high_deg
        int *seg_count
        int *chosen
        list results

    def __cinit__(self):
        self.pmask = self.pvmask = self.vinc = self.seg_paths = self.avail = NULL
        self.path_segs_off = self.path_segs = self.ends = NULL
        self.inc_off = self.inc = self.high_deg = self.seg_count = self.chosen = NULL

    def __dealloc__(self):
        free(self.pmask); free(self.pvmask); free(self.vinc)
        free(self.seg_paths); free(self.avail)
        free(self.path_segs_off); free(self.path_segs); free(self.ends)
        free(self.inc_off); free(self.inc); free(self.high_deg)
        free(self.seg_count); free(self.chosen)

    def setup(self, num_segments, num_vertices, seg_masks, vert_masks,
              path_segs, ends, inc_segs, high_deg_vertices, vert_inc_mask,
              seg_paths, max_len, max_size, node_budget):
        cdef int i, j, k
        self.S = num_segments
        self.V = num_vertices
        self.P = len(seg_masks)
        self.W = (self.P + 63) >> 6
        self.max_size = max_size
        self.max_len = max_len
        self.node_budget = node_budget
        self.nodes = 0
        self.full_mask = (<u64>1 << self.S) - 1 if self.S < 64 else <u64>0 - 1
        self.results = []

        self.pmask = <u64*>calloc(self.P, sizeof(u64))
        self.pvmask = <u64*>calloc(self.P, sizeof(u64))
        self.vinc = <u64*>calloc(self.V, sizeof(u64))
        self.seg_paths = <u64*>calloc(self.S * self.W, sizeof(u64))
        self.avail = <u64*>calloc((self.max_size + 2) * self.W, sizeof(u64))
        self.ends = <int*>calloc(2 * self.P, sizeof(int))
        self.seg_count = <int*>calloc(self.S, sizeof(int))
        self.chosen = <int*>calloc(self.max_size + 1, sizeof(int))
        self.n_chosen = 0

        total = sum(len(s) for s in path_segs)
        self.path_segs_off = <int*>calloc(self.P + 1, sizeof(int))
        self.path_segs = <int*>calloc(max(total, 1), sizeof(int))
        k = 0
        for i in range(self.P):
            self.path_segs_off[i] = k
            for s in path_segs[i]:
                self.path_segs[k] = s
                k += 1
            self.pmask[i] = <u64>seg_masks[i]
            self.pvmask[i] = <u64>vert_masks[i]
            self.ends[2 * i] = ends[i][0]
            self.ends[2 * i + 1] = ends[i][1]
        self.path_segs_off[self.P] = k

        total = sum(len(s) for s in inc_segs)
        self.inc_off = <int*>calloc(self.V + 1, sizeof(int))
        self.inc = <int*>calloc(max(total, 1), sizeof(int))
        k = 0
        for i in range(self.V):
            self.inc_off[i] = k
            for s in inc_segs[i]:
                self.inc[k] = s
                k += 1
            self.vinc[i] = <u64>vert_inc_mask[i]
        self.inc_off[self.V] = k

        self.n_high = len(high_deg_vertices)
        self.high_deg = <int*>calloc(max(self.n_high, 1), sizeof(int))
        for i in range(self.n_high):
            self.high_deg[i] = high_deg_vertices[i]

        for i in range(self.S):
            mask = seg_paths[i]
            for j in range(self.W):
                self.seg_paths[i * self.W + j] = <u64>((mask >> (64 * j)) & 0xFFFFFFFFFFFFFFFF)

    cdef bint endpoint_retractable(self, int pid, u64 extra_mask, int minus) nogil:
        cdef int k, v, j, s, cov
        cdef bint all_covered
        for k in range(2):
            v = self.ends[2 * pid + k]
            all_covered = True
            for j in range(self.inc_off[v], self.inc_off[v + 1]):
                s = self.inc[j]
                cov = self.seg_count[s]
                if (extra_mask >> s) & 1:
                    cov += 1
                if minus >= 0 and (self.pmask[minus] >> s) & 1:
                    cov -= 1
                if cov == 0:
                    all_covered = False
                    break
            if all_covered:
                return True
        return False

    cdef bint germ_blocked(self, int pid) nogil:
        cdef int i, qid, k
        cdef u64 pm, pvm
        cdef bint touched
        if self.endpoint_retractable(pid, 0, -1):
            return True
        pm = self.pmask[pid]
        pvm = self.pvmask[pid]
        for i in range(self.n_chosen):
            qid = self.chosen[i]
            touched = False
            for k in range(2):
                if (pvm >> self.ends[2 * qid + k]) & 1:
                    touched = True
                    break
            if touched and self.endpoint_retractable(qid, pm, qid):
                return True
        return False

    cdef int rec(self, u64 covered, int level) except -1:
        cdef int slots, i, j, s, best_seg, best_n, n, pid, base, w
        cdef u64 uncovered, u, m, bit
        cdef u64 *lvl
        cdef u64 *child
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceededError(
                f"cover search node budget {self.node_budget} exceeded")
        if covered == self.full_mask:
            out = []
            for i in range(self.n_chosen):
                out.append(self.chosen[i])
            out.sort()
            self.results.append(tuple(out))
            return 0
        slots = self.max_size - self.n_chosen
        if slots == 0:
            return 0
        uncovered = self.full_mask & ~covered
        if __builtin_popcountll(uncovered) > slots * self.max_len:
            return 0
        for i in range(self.n_high):
            if __builtin_popcountll(self.vinc[self.high_deg[i]] & uncovered) > 2 * slots:
                return 0
        lvl = self.avail + level * self.W
        best_seg = -1
        best_n = -1
        u = uncovered
        while u:
            s = __builtin_ctzll(u)
            u &= u - 1
            base = s * self.W
            n = 0
            for j in range(self.W):
                n += __builtin_popcountll(self.seg_paths[base + j] & lvl[j])
            if n == 0:
                return 0
            if best_n < 0 or n < best_n:
                best_seg = s
                best_n = n
                if n == 1:
                    break
        child = self.avail + (level + 1) * self.W
        memcpy(child, lvl, self.W * sizeof(u64))
        base = best_seg * self.W
        for w in range(self.W):
            m = self.seg_paths[base + w] & lvl[w]
            while m:
                bit = m & (<u64>0 - m)
                m ^= bit
                pid = (w << 6) + __builtin_ctzll(bit)
                child[w] &= ~bit
                if slots == 1 and (self.pmask[pid] & uncovered) != uncovered:
                    continue
                if self.germ_blocked(pid):
                    continue
                self.chosen[self.n_chosen] = pid
                self.n_chosen += 1
                for j in range(self.path_segs_off[pid], self.path_segs_off[pid + 1]):
                    self.seg_count[self.path_segs[j]] += 1
                self.rec(covered | self.pmask[pid], level + 1)
                for j in range(self.path_segs_off[pid], self.path_segs_off[pid + 1]):
                    self.seg_count[self.path_segs[j]] -= 1
                self.n_chosen -= 1
        return 0

    def run(self, roots):
        cdef int q, j, w, idx
        cdef u64 *lvl = self.avail
        for q in roots:
            # ids strictly above the root may join
            for w in range(self.W):
                lvl[w] = 0
            for idx in range(q + 1, self.P):
                lvl[idx >> 6] |= (<u64>1) << (idx & 63)
            self.chosen[0] = q
            self.n_chosen = 1
            for j in range(self.path_segs_off[q], self.path_segs_off[q + 1]):
                self.seg_count[self.path_segs[j]] += 1
            self.rec(self.pmask[q], 0)
            for j in range(self.path_segs_off[q], self.path_segs_off[q + 1]):
                self.seg_count[self.path_segs[j]] -= 1
            self.n_chosen = 0
        return self.results, self.nodes


def run_search(num_segments, num_vertices, seg_masks, vert_masks, path_segs,
               ends, inc_segs, high_deg_vertices, vert_inc_mask, seg_paths,
               max_len, max_size, node_budget, roots):
    """Enumerate retracted covers; returns (list of sorted id tuples, nodes)."""
    search = _Search()
    search.setup(num_segments, num_vertices, seg_masks, vert_masks, path_segs,
                 ends, inc_segs, high_deg_vertices, vert_inc_mask, seg_paths,
                 max_len, max_size, node_budget)
    return search.run(roots)
