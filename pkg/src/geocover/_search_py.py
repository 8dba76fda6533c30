"""Pure-Python cover-search kernel.

Same contract as the compiled kernel in _kernel.pyx; cover.find_covers
selects between them at import time.  Segment and vertex sets are Python
int bitmasks, candidate path sets are one big int per segment.
"""

from __future__ import annotations

from .errors import BudgetExceededError

COMPILED = False


def run_search(num_segments, num_vertices, seg_masks, vert_masks, path_segs,
               ends, inc_segs, high_deg_vertices, vert_inc_mask, seg_paths,
               max_len, max_size, node_budget, roots):
    """Enumerate retracted covers; returns (list of sorted id tuples, nodes)."""
    full_mask = (1 << num_segments) - 1
    results = []
    seg_count = [0] * num_segments
    chosen = []
    nodes = 0

    def endpoint_retractable(pid, extra_mask, minus):
        for v in ends[pid]:
            for s in inc_segs[v]:
                cov = seg_count[s]
                if extra_mask >> s & 1:
                    cov += 1
                if minus >= 0 and seg_masks[minus] >> s & 1:
                    cov -= 1
                if cov == 0:
                    break
            else:
                return True
        return False

    def germ_blocked(pid):
        if endpoint_retractable(pid, 0, -1):
            return True
        pm = seg_masks[pid]
        pvm = vert_masks[pid]
        for qid in chosen:
            if not any(pvm >> v & 1 for v in ends[qid]):
                continue
            if endpoint_retractable(qid, pm, qid):
                return True
        return False

    def rec(covered, avail):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(f"cover search node budget {node_budget} exceeded")
        if covered == full_mask:
            results.append(tuple(sorted(chosen)))
            return
        slots = max_size - len(chosen)
        if slots == 0:
            return
        uncovered = full_mask & ~covered
        if uncovered.bit_count() > slots * max_len:
            return
        cap = 2 * slots
        for v in high_deg_vertices:
            if (vert_inc_mask[v] & uncovered).bit_count() > cap:
                return
        best_seg, best_cands, best_n = -1, 0, -1
        u = uncovered
        while u:
            low = u & -u
            u ^= low
            cands = seg_paths[low.bit_length() - 1] & avail
            n = cands.bit_count()
            if n == 0:
                return
            if best_n < 0 or n < best_n:
                best_cands, best_n = cands, n
                if n == 1:
                    break
        tried = 0
        m = best_cands
        last = slots == 1
        while m:
            low = m & -m
            m ^= low
            pid = low.bit_length() - 1
            if last and (seg_masks[pid] & uncovered) != uncovered:
                tried |= low
                continue
            if germ_blocked(pid):
                tried |= low
                continue
            chosen.append(pid)
            for s in path_segs[pid]:
                seg_count[s] += 1
            rec(covered | seg_masks[pid], avail & ~(tried | low))
            for s in path_segs[pid]:
                seg_count[s] -= 1
            chosen.pop()
            tried |= low
        return

    all_ids = (1 << len(seg_masks)) - 1
    for q in roots:
        chosen.append(q)
        for s in path_segs[q]:
            seg_count[s] += 1
        rec(seg_masks[q], all_ids & ~((2 << q) - 1))
        for s in path_segs[q]:
            seg_count[s] -= 1
        chosen.pop()
    return results, nodes
