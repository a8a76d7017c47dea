"""Pure-Python reference implementation of the combinatorial kernels.

``_ckernels.pyx`` mirrors every function here and must produce identical
output, in the same order.
"""


def _ok(yn, r, lukas):
    # can a path at level yn with r steps left still end at 0?
    if lukas:
        return yn == 0 or r >= 1
    return yn <= r


def iter_levels(n, lukas, irreducible):
    """Depth-first level sequences; steps tried as +1, 0, -1, -2, ..."""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    if n == 0:
        if not irreducible:
            yield (0,)
        return
    lv = [0] * (n + 1)
    cand = [0] * (n + 1)
    i = 1
    cand[1] = 1
    while i >= 1:
        y = lv[i - 1]
        low = 0 if lukas else max(y - 1, 0)
        if irreducible and i < n and low < 1:
            low = 1
        r = n - i
        while cand[i] >= low:
            yn = cand[i]
            cand[i] -= 1
            if _ok(yn, r, lukas):
                break
        else:
            i -= 1
            continue
        lv[i] = yn
        if i == n:
            yield tuple(lv)
        else:
            i += 1
            cand[i] = yn + 1


def path_levels(n, lukas, irreducible):
    return list(iter_levels(n, lukas, irreducible))


def count_paths(n, lukas, irreducible):
    """Transfer-count without materializing paths."""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    if n == 0:
        return 0 if irreducible else 1
    ways = {0: 1}
    for i in range(1, n + 1):
        nxt = {}
        for y, w in ways.items():
            top = y + 1
            bottom = 0 if lukas else max(y - 1, 0)
            for yn in range(top, bottom - 1, -1):
                if irreducible and i < n and yn == 0:
                    continue
                if not _ok(yn, n - i, lukas):
                    continue
                nxt[yn] = nxt.get(yn, 0) + w
        ways = nxt
    return ways.get(0, 0)


def disjoint_configurations(cands, limit):
    """Vertex-disjoint tuples of paths, one per row, columns permuted.

    ``cands[k][col]`` lists integer bitmasks of the vertices of every
    candidate path from row ``k`` to column ``col``.  Returns
    ``(configs, explored, exceeded)`` where each config is
    ``(cols, idxs)``: row ``k`` uses path ``cands[k][cols[k]][idxs[k]]``.
    """
    p = len(cands)
    configs = []
    cols = [0] * p
    idxs = [0] * p
    used = [False] * p
    explored = 0

    def rec(k, occ):
        nonlocal explored
        if k == p:
            configs.append((tuple(cols), tuple(idxs)))
            return True
        row = cands[k]
        for col in range(p):
            if used[col]:
                continue
            used[col] = True
            cols[k] = col
            for idx, mk in enumerate(row[col]):
                if mk & occ:
                    continue
                explored += 1
                if explored > limit:
                    return False
                idxs[k] = idx
                if not rec(k + 1, occ | mk):
                    return False
            used[col] = False
        return True

    if p == 0:
        return [((), ())], 0, False
    finished = rec(0, 0)
    return configs, explored, not finished
