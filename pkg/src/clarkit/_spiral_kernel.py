"""Compiled inner loop for spiral-based isomer enumeration.

Mirrors the pure-Python machine in clarkit.spiral as flat integer-array
code: a depth-first search over face-size sequences with the windup
machine pruning every infeasible prefix, and, for every sequence that
closes into a sphere, an unwinding scan over all starts that accepts the
sequence only when it is the lexicographically smallest spiral of its
graph.  Each isomer is therefore emitted exactly once, in lexicographic
sequence order, with no cross-graph state.

Face indices stay below 62, so dual adjacency fits int64 bitmasks.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _unwind_beats(
    sizes, adj, thirds, nf, ref, f1, f2, sense, free2, bnd2, pos2face
):
    """Unwind from one start and compare with ref as the sequence grows.

    Returns True iff the unwind completes with a strictly smaller
    sequence.  Geometric failure or a greater prefix returns False.
    """
    for i in range(nf):
        free2[i] = 0
    # state: bnd2 holds machine positions in [head, tail)
    head = 0
    tail = 2
    bnd2[0] = 0
    bnd2[1] = 1
    pos2face[0] = f1
    pos2face[1] = f2
    placed = (np.int64(1) << np.int64(f1)) | (np.int64(1) << np.int64(f2))
    free2[0] = sizes[f1] - 1
    free2[1] = sizes[f2] - 1
    smaller = False
    if sizes[f1] != ref[0]:
        if sizes[f1] > ref[0]:
            return False
        smaller = True
    if not smaller and sizes[f2] != ref[1]:
        if sizes[f2] > ref[1]:
            return False
        smaller = True
    for step in range(2, nf):
        a = pos2face[bnd2[tail - 1]]
        b = pos2face[bnd2[head]]
        if a < b:
            key = a * nf + b
        else:
            key = b * nf + a
        t0 = thirds[key, 0]
        t1 = thirds[key, 1]
        if t0 < 0 or t1 < 0:
            return False
        if step == 2:
            cand = t0 if sense == 0 else t1
            if (placed >> np.int64(cand)) & 1:
                return False
        else:
            p0 = (placed >> np.int64(t0)) & 1
            p1 = (placed >> np.int64(t1)) & 1
            if p0 + p1 != 1:
                return False
            cand = t1 if p0 else t0
        size = sizes[cand]
        if not smaller:
            if size > ref[step]:
                return False
            if size < ref[step]:
                smaller = True
        cadj = adj[cand]
        final = step == nf - 1
        if final:
            if tail - head != size:
                return False
            ok = True
            for i in range(head, tail):
                x = bnd2[i]
                if free2[x] != 1:
                    ok = False
                    break
                if not (cadj >> np.int64(pos2face[x])) & 1:
                    ok = False
                    break
            if not ok:
                return False
            return smaller
        # pops at the outer end
        r = 0
        while tail - r > head and free2[bnd2[tail - 1 - r]] == 1:
            r += 1
        if tail - r == head:
            return False
        start = bnd2[tail - 1 - r]
        # pops at the inner end
        lcount = 0
        while (tail - r) - (head + lcount) > 1 and free2[bnd2[head + lcount]] == 1:
            lcount += 1
        far = bnd2[head + lcount]
        if (tail - r) - (head + lcount) < 2 or free2[far] == 1:
            return False
        t = r + lcount + 2
        rem = size - t
        if rem < 1:
            return False
        # verify real adjacency of the whole arc
        if not (cadj >> np.int64(pos2face[start])) & 1:
            return False
        if not (cadj >> np.int64(pos2face[far])) & 1:
            return False
        for i in range(r):
            if not (cadj >> np.int64(pos2face[bnd2[tail - 1 - i]])) & 1:
                return False
        for i in range(lcount):
            if not (cadj >> np.int64(pos2face[bnd2[head + i]])) & 1:
                return False
        # apply
        for i in range(r):
            free2[bnd2[tail - 1 - i]] = 0
        for i in range(lcount):
            free2[bnd2[head + i]] = 0
        free2[start] -= 1
        free2[far] -= 1
        free2[step] = rem
        head += lcount
        tail -= r
        bnd2[tail] = step
        tail += 1
        pos2face[step] = cand
        placed |= np.int64(1) << np.int64(cand)
    return False


@njit(cache=True)
def enumerate_spirals(nf, npent, prefix, out):
    """DFS over all windable size sequences; emit canonical ones.

    Returns the number of rows written to ``out`` (face sizes per row),
    or -1 if ``out`` is too small.  ``prefix`` constrains the leading
    sizes for work partitioning.
    """
    # per-depth machine rows
    free = np.zeros((nf + 1, nf), np.int8)
    bnd = np.zeros((nf + 1, nf + 1), np.int8)
    blen = np.zeros(nf + 1, np.int32)
    adj = np.zeros((nf + 1, nf), np.int64)
    ntri = np.zeros(nf + 1, np.int32)
    tris = np.zeros((2 * nf, 3), np.int8)
    sizes = np.zeros(nf, np.int8)
    pents = np.zeros(nf + 1, np.int32)
    trial = np.zeros(nf, np.int8)
    # scan scratch
    thirds = np.full((nf * nf, 2), -1, np.int8)
    free2 = np.zeros(nf, np.int8)
    bnd2 = np.zeros(2 * nf + 2, np.int8)
    pos2face = np.zeros(nf, np.int8)
    ref = np.zeros(nf, np.int8)

    nhex = nf - npent
    written = 0
    depth = 0
    trial[0] = 0
    while depth >= 0:
        if depth == nf:
            # complete windup: build thirds, run the canonicity scan
            for i in range(ntri[nf]):
                a = tris[i, 0]
                b = tris[i, 1]
                c = tris[i, 2]
                for e in range(3):
                    if e == 0:
                        u, v, w = a, b, c
                    elif e == 1:
                        u, v, w = b, c, a
                    else:
                        u, v, w = c, a, b
                    if u < v:
                        key = u * nf + v
                    else:
                        key = v * nf + u
                    if thirds[key, 0] < 0:
                        thirds[key, 0] = w
                    else:
                        thirds[key, 1] = w
            for i in range(nf):
                ref[i] = sizes[i]
            beaten = False
            for f1 in range(nf):
                if beaten:
                    break
                if sizes[f1] > ref[0]:
                    continue
                nbrs = adj[nf, f1]
                for f2 in range(nf):
                    if beaten:
                        break
                    if not (nbrs >> np.int64(f2)) & 1:
                        continue
                    for sense in range(2):
                        if _unwind_beats(
                            sizes, adj[nf], thirds, nf, ref,
                            f1, f2, sense, free2, bnd2, pos2face,
                        ):
                            beaten = True
                            break
            # reset thirds
            for i in range(ntri[nf]):
                a = tris[i, 0]
                b = tris[i, 1]
                c = tris[i, 2]
                for e in range(3):
                    if e == 0:
                        u, v = a, b
                    elif e == 1:
                        u, v = b, c
                    else:
                        u, v = c, a
                    if u < v:
                        key = u * nf + v
                    else:
                        key = v * nf + u
                    thirds[key, 0] = -1
                    thirds[key, 1] = -1
            if not beaten:
                if written >= out.shape[0]:
                    return -1
                for i in range(nf):
                    out[written, i] = sizes[i]
                written += 1
            depth -= 1
            continue
        t = trial[depth]
        if t == 2:
            trial[depth] = 0
            depth -= 1
            continue
        trial[depth] = t + 1
        size = 5 if t == 0 else 6
        if size == 5 and pents[depth] >= npent:
            continue
        if size == 6 and depth - pents[depth] >= nhex:
            continue
        if depth < prefix.shape[0] and size != prefix[depth]:
            continue
        # machine step placing face c = depth
        c = depth
        nd = depth + 1
        ok = True
        if c == 0:
            free[1, 0] = size
            bnd[1, 0] = 0
            blen[1] = 1
            for i in range(nf):
                adj[1, i] = 0
            ntri[1] = 0
        elif c == 1:
            for i in range(nf):
                free[2, i] = free[1, i]
                adj[2, i] = adj[1, i]
            free[2, 0] = free[1, 0] - 1
            free[2, 1] = size - 1
            bnd[2, 0] = 0
            bnd[2, 1] = 1
            blen[2] = 2
            adj[2, 0] |= np.int64(1) << np.int64(1)
            adj[2, 1] |= np.int64(1) << np.int64(0)
            ntri[2] = 0
        else:
            m = blen[depth]
            final = c == nf - 1
            if final:
                if m != size:
                    ok = False
                else:
                    for i in range(m):
                        if free[depth, bnd[depth, i]] != 1:
                            ok = False
                            break
                if ok:
                    for i in range(nf):
                        free[nd, i] = free[depth, i]
                        adj[nd, i] = adj[depth, i]
                    k = ntri[depth]
                    for i in range(m):
                        x = bnd[depth, i]
                        y = bnd[depth, (i + 1) % m]
                        tris[k, 0] = x
                        tris[k, 1] = y
                        tris[k, 2] = c
                        k += 1
                        free[nd, x] = 0
                        adj[nd, x] |= np.int64(1) << np.int64(c)
                        adj[nd, c] |= np.int64(1) << np.int64(x)
                    ntri[nd] = k
                    blen[nd] = 0
            else:
                r = 0
                while r < m and free[depth, bnd[depth, m - 1 - r]] == 1:
                    r += 1
                if r == m:
                    ok = False
                else:
                    start = bnd[depth, m - 1 - r]
                    lcount = 0
                    while (m - r) - lcount > 1 and free[depth, bnd[depth, lcount]] == 1:
                        lcount += 1
                    far = bnd[depth, lcount]
                    if (m - r) - lcount < 2 or free[depth, far] == 1:
                        ok = False
                    else:
                        t_arc = r + lcount + 2
                        rem = size - t_arc
                        if rem < 1:
                            ok = False
                        else:
                            for i in range(nf):
                                free[nd, i] = free[depth, i]
                                adj[nd, i] = adj[depth, i]
                            free[nd, start] = free[depth, start] - 1
                            free[nd, far] = free[depth, far] - 1
                            for i in range(r):
                                free[nd, bnd[depth, m - 1 - i]] = 0
                            for i in range(lcount):
                                free[nd, bnd[depth, i]] = 0
                            free[nd, c] = rem
                            # arc in cyclic order
                            k = ntri[depth]
                            prev = start
                            for i in range(r):
                                x = bnd[depth, m - r + i]
                                tris[k, 0] = prev
                                tris[k, 1] = x
                                tris[k, 2] = c
                                k += 1
                                prev = x
                            for i in range(lcount):
                                x = bnd[depth, i]
                                tris[k, 0] = prev
                                tris[k, 1] = x
                                tris[k, 2] = c
                                k += 1
                                prev = x
                            tris[k, 0] = prev
                            tris[k, 1] = far
                            tris[k, 2] = c
                            k += 1
                            ntri[nd] = k
                            # adjacency of c with every arc member
                            adj[nd, c] = 0
                            for i in range(r + lcount + 2):
                                if i == 0:
                                    x = start
                                elif i <= r:
                                    x = bnd[depth, m - r + (i - 1)]
                                elif i <= r + lcount:
                                    x = bnd[depth, i - r - 1]
                                else:
                                    x = far
                                adj[nd, x] |= np.int64(1) << np.int64(c)
                                adj[nd, c] |= np.int64(1) << np.int64(x)
                            # new boundary: surviving middle + c
                            nb = 0
                            for i in range(lcount, m - r):
                                bnd[nd, nb] = bnd[depth, i]
                                nb += 1
                            bnd[nd, nb] = c
                            nb += 1
                            blen[nd] = nb
        if ok:
            sizes[depth] = size
            pents[nd] = pents[depth] + (1 if size == 5 else 0)
            trial[nd] = 0
            depth = nd
    return written
