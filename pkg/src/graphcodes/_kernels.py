"""Compiled kernels: canonical labeling, orbit closure, codeword enumeration.

Graphs enter as uint8 adjacency matrices.  A canonical key is the pair of
int64 limbs packing the upper-triangle weights (row-major, base m) of the
lexicographically least relabeling; the first digits go in the high limb so
that pair order equals serialization order.  The canonical labeling is
partition refinement plus individualize-and-refine backtracking, pruned by
automorphisms discovered from equal leaves.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

#: max upper-triangle digits a single int64 limb can hold, indexed by m
LIMB_CAP = np.array([0, 0, 62, 39, 31, 27], dtype=np.int64)

_MAXN = 16
_GENS_CAP = 256
_LEAF_CAP = 20_000_000


def limb_split(n: int, m: int) -> tuple[int, int]:
    """(digits in high limb, digits in low limb) for an (m, n) key."""
    t = n * (n - 1) // 2
    cap = int(LIMB_CAP[m])
    if t > 2 * cap:
        raise ValueError(f"canonical keys for m={m} support at most "
                         f"{int((1 + 8 * 2 * cap) ** 0.5 + 1) // 2} vertices")
    lo = min(t, cap)
    return t - lo, lo


def unpack_digits(hi: int, lo: int, n: int, m: int) -> list[int]:
    khi, klo = limb_split(n, m)
    digits = [0] * (khi + klo)
    for t in range(khi + klo - 1, khi - 1, -1):
        digits[t] = lo % m
        lo //= m
    for t in range(khi - 1, -1, -1):
        digits[t] = hi % m
        hi //= m
    return digits


def pack_digits(digits, m: int, n: int) -> tuple[int, int]:
    khi, _ = limb_split(n, m)
    hi = lo = 0
    for t, d in enumerate(digits):
        if t < khi:
            hi = hi * m + int(d)
        else:
            lo = lo * m + int(d)
    return hi, lo


# ---------------------------------------------------------------------------
# refinement + canonical search
# ---------------------------------------------------------------------------


def _mk_hmix() -> np.ndarray:
    mask = (1 << 64) - 1
    out = np.zeros(256, dtype=np.uint64)
    for code in range(256):
        z = (code + 0x9E3779B97F4A7C15) & mask
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        z ^= z >> 31
        out[code] = z
    return out.view(np.int64)


#: fixed hash of the (neighbour colour, edge weight) codes; refinement uses
#: order-independent multiset hashes, so a collision can only make the
#: partition coarser (the backtracking stays exact), never wrong.
HMIX = _mk_hmix()


@njit(cache=True)
def _refine(adj, n, m, colors, sigc, sigs, sigx, order):
    ncol = 0
    for v in range(n):
        if colors[v] + 1 > ncol:
            ncol = colors[v] + 1
    # the round cap guards against (astronomically unlikely) hash-collision
    # oscillation; the partition stays isomorphism-invariant regardless
    for _round in range(n + 2):
        for i in range(n):
            s = np.int64(0)
            x = np.int64(0)
            ci = colors[i] * m
            for j in range(n):
                h = HMIX[colors[j] * m + adj[i, j]]
                s += h
                x ^= h
            h0 = HMIX[ci]  # remove the i = j term (diagonal weight is 0)
            s -= h0
            x ^= h0
            z = s + np.int64(31) * x + np.int64(0x9E3779B97F4A7C15) * ci
            z ^= z >> 29
            sigs[i] = z * np.int64(-0x61C8864680B583EB)
        for i in range(n):
            order[i] = i
        for a in range(1, n):
            key = order[a]
            sk = sigs[key]
            b = a - 1
            while b >= 0 and sigs[order[b]] > sk:
                order[b + 1] = order[b]
                b -= 1
            order[b + 1] = key
        newn = 0
        prev = order[0]
        colors[prev] = 0
        for a in range(1, n):
            v = order[a]
            if sigs[v] != sigs[prev]:
                newn += 1
            colors[v] = newn
            prev = v
        newn += 1
        if newn == n or newn == ncol:
            return newn
        ncol = newn
    return ncol


@njit(cache=True)
def _encode_colors(adj, n, m, colors, perm):
    """Serialize the discretely colored graph into a limb pair."""
    for v in range(n):
        perm[colors[v]] = v
    t = n * (n - 1) // 2
    cap = LIMB_CAP[m]
    klo = t if t <= cap else cap
    khi = t - klo
    hi = np.int64(0)
    lo = np.int64(0)
    k = 0
    for i in range(n):
        vi = perm[i]
        for j in range(i + 1, n):
            d = adj[vi, perm[j]]
            if k < khi:
                hi = hi * m + d
            else:
                lo = lo * m + d
            k += 1
    return hi, lo


@njit(cache=True)
def _least_cell(colors, n, cellcnt, cand_row):
    """Vertices of the least colour whose cell has >= 2 members."""
    for c in range(n):
        cellcnt[c] = 0
    for v in range(n):
        cellcnt[colors[v]] += 1
    target = -1
    for c in range(n):
        if cellcnt[c] >= 2:
            target = c
            break
    k = 0
    for v in range(n):
        if colors[v] == target:
            cand_row[k] = v
            k += 1
    return k


@njit(cache=True)
def _canon_ws(adj, n, m, CS, CAND, TRIED, PATH, CCNT, CPOS, TCNT,
              SIGC, SIGS, SIGX, ORD, CELLC, PERM, BPERM, FPERM, GENS, res):
    """Canonical search.  res: [hi, lo, status, gen_count, gens_overflowed]."""
    res[2] = 0
    res[3] = 0
    res[4] = 0
    colors = CS[0]
    for v in range(n):
        colors[v] = 0
    ncol = _refine(adj, n, m, colors, SIGC, SIGS, SIGX, ORD)
    if ncol == n:
        hi, lo = _encode_colors(adj, n, m, colors, PERM)
        res[0] = hi
        res[1] = lo
        return
    gcount = 0
    have_first = False
    leaves = 0
    bh = np.int64(0)
    bl = np.int64(0)
    fh = np.int64(0)
    fl = np.int64(0)

    level = 0
    CCNT[0] = _least_cell(colors, n, CELLC, CAND[0])
    CPOS[0] = 0
    TCNT[0] = 0

    while level >= 0:
        if CPOS[level] >= CCNT[level]:
            level -= 1
            continue
        u = CAND[level, CPOS[level]]
        CPOS[level] += 1
        # automorphism pruning: some discovered generator fixing the current
        # path maps u to (or from) an already-expanded candidate at this node
        pruned = False
        for gi in range(gcount):
            fixes = True
            for t in range(level):
                if GENS[gi, PATH[t]] != PATH[t]:
                    fixes = False
                    break
            if not fixes:
                continue
            gu = GENS[gi, u]
            for t in range(TCNT[level]):
                w = TRIED[level, t]
                if gu == w or GENS[gi, w] == u:
                    pruned = True
                    break
            if pruned:
                break
        if pruned:
            continue
        TRIED[level, TCNT[level]] = u
        TCNT[level] += 1
        PATH[level] = u
        c0 = CS[level]
        c1 = CS[level + 1]
        cu = c0[u]
        for w in range(n):
            cw = c0[w]
            if cw > cu or (cw == cu and w != u):
                c1[w] = cw + 1
            else:
                c1[w] = cw
        ncol = _refine(adj, n, m, c1, SIGC, SIGS, SIGX, ORD)
        if ncol == n:
            leaves += 1
            if leaves > _LEAF_CAP:
                res[2] = 1
                return
            hi, lo = _encode_colors(adj, n, m, c1, PERM)
            if not have_first:
                have_first = True
                fh, fl = hi, lo
                bh, bl = hi, lo
                for v in range(n):
                    FPERM[v] = PERM[v]
                    BPERM[v] = PERM[v]
            else:
                new_best = hi < bh or (hi == bh and lo < bl)
                eq_best = hi == bh and lo == bl
                eq_first = hi == fh and lo == fl
                # an equal leaf yields the automorphism mapping one labeling
                # onto the other
                if eq_first or eq_best:
                    refp = FPERM if eq_first else BPERM
                    ident = True
                    for v in range(n):
                        if refp[v] != PERM[v]:
                            ident = False
                            break
                    if not ident and gcount < _GENS_CAP:
                        for v in range(n):
                            GENS[gcount, refp[v]] = PERM[v]
                        dup = False
                        for gi in range(gcount):
                            same = True
                            for v in range(n):
                                if GENS[gi, v] != GENS[gcount, v]:
                                    same = False
                                    break
                            if same:
                                dup = True
                                break
                        if not dup:
                            gcount += 1
                    elif not ident and gcount >= _GENS_CAP:
                        res[4] = 1
                if new_best:
                    bh, bl = hi, lo
                    for v in range(n):
                        BPERM[v] = PERM[v]
            continue
        level += 1
        CCNT[level] = _least_cell(c1, n, CELLC, CAND[level])
        CPOS[level] = 0
        TCNT[level] = 0

    res[0] = bh
    res[1] = bl
    res[3] = gcount


@njit(cache=True)
def _canon_alloc(adj, n, m, res, gens):
    CS = np.zeros((_MAXN + 2, _MAXN), dtype=np.int32)
    CAND = np.zeros((_MAXN + 2, _MAXN), dtype=np.int32)
    TRIED = np.zeros((_MAXN + 2, _MAXN), dtype=np.int32)
    PATH = np.zeros(_MAXN + 2, dtype=np.int32)
    CCNT = np.zeros(_MAXN + 2, dtype=np.int32)
    CPOS = np.zeros(_MAXN + 2, dtype=np.int32)
    TCNT = np.zeros(_MAXN + 2, dtype=np.int32)
    SIGC = np.zeros(_MAXN, dtype=np.int64)
    SIGS = np.zeros(_MAXN, dtype=np.int64)
    SIGX = np.zeros(_MAXN, dtype=np.int64)
    ORD = np.zeros(_MAXN, dtype=np.int32)
    CELLC = np.zeros(_MAXN, dtype=np.int32)
    PERM = np.zeros(_MAXN, dtype=np.int32)
    BPERM = np.zeros(_MAXN, dtype=np.int32)
    FPERM = np.zeros(_MAXN, dtype=np.int32)
    _canon_ws(adj, n, m, CS, CAND, TRIED, PATH, CCNT, CPOS, TCNT,
              SIGC, SIGS, SIGX, ORD, CELLC, PERM, BPERM, FPERM, gens, res)


def canon_pair(adj: np.ndarray, m: int) -> tuple[int, int]:
    """Canonical (hi, lo) limb pair of the graph's least serialization."""
    n = adj.shape[0]
    limb_split(n, m)  # range guard
    res = np.zeros(5, dtype=np.int64)
    gens = np.zeros((_GENS_CAP, _MAXN), dtype=np.int32)
    _canon_alloc(np.ascontiguousarray(adj, dtype=np.uint8), n, m, res, gens)
    if res[2] != 0:
        raise RuntimeError("canonical search exceeded its leaf budget")
    return int(res[0]), int(res[1])


def canon_generators(adj: np.ndarray, m: int) -> tuple[list[list[int]], bool]:
    """Automorphism generators discovered by the canonical search, plus an
    overflow flag (True when the generator buffer filled up)."""
    n = adj.shape[0]
    limb_split(n, m)
    res = np.zeros(5, dtype=np.int64)
    gens = np.zeros((_GENS_CAP, _MAXN), dtype=np.int32)
    _canon_alloc(np.ascontiguousarray(adj, dtype=np.uint8), n, m, res, gens)
    if res[2] != 0:
        raise RuntimeError("canonical search exceeded its leaf budget")
    out = [list(gens[i, :n]) for i in range(int(res[3]))]
    return out, bool(res[4])


# ---------------------------------------------------------------------------
# orbit closure
# ---------------------------------------------------------------------------


@njit(cache=True, inline="always")
def _hash_pair(h, l, mask):
    x = np.uint64(h) * np.uint64(0x9E3779B97F4A7C15)
    y = np.uint64(l) * np.uint64(0xC2B2AE3D27D4EB4F)
    z = x ^ (y >> np.uint64(15)) ^ y
    z = (z ^ (z >> np.uint64(31))) * np.uint64(0xD6E8FEB86659FD93)
    return np.int64(z & np.uint64(mask))


@njit(cache=True)
def _decode_digits(h, l, n, m, dig):
    t = n * (n - 1) // 2
    cap = LIMB_CAP[m]
    klo = t if t <= cap else cap
    khi = t - klo
    for k in range(t - 1, khi - 1, -1):
        dig[k] = l % m
        l //= m
    for k in range(khi - 1, -1, -1):
        dig[k] = h % m
        h //= m


@njit(cache=True)
def _digits_to_adj(dig, n, adj):
    k = 0
    for i in range(n):
        adj[i, i] = 0
        for j in range(i + 1, n):
            adj[i, j] = dig[k]
            adj[j, i] = dig[k]
            k += 1


_BATCH = 128


@njit(cache=True, parallel=True)
def _expand_batch(qh, ql, take, n, m, glc_as, shift_as, addm, mulm,
                  e_hi, e_lo, CS, CAND, TRIED, PATH, CCNT, CPOS, TCNT,
                  SIGC, SIGS, SIGX, ORD, CELLC, PERM, BPERM, FPERM, GENS,
                  RES, DIG, ADJ, NBUF, NBRS, KEYH, KEYL, MDEG, EIDX, FAIL):
    """Decode and expand ``take`` queued classes into neighbour keys, in
    parallel over batch slots (each slot owns its workspace row)."""
    nglc = len(glc_as)
    nmoves = nglc + len(shift_as)
    for b in prange(take):
        h = qh[b]
        l = ql[b]
        adj = ADJ[b]
        nbuf = NBUF[b]
        nbrs = NBRS[b]
        FAIL[b] = 0
        _decode_digits(h, l, n, m, DIG[b])
        _digits_to_adj(DIG[b], n, adj)
        dmin = n + 1
        for i in range(n):
            d = 0
            for j in range(n):
                if adj[i, j]:
                    d += 1
            if d < dmin:
                dmin = d
        MDEG[b] = dmin
        EIDX[b] = -1
        if len(e_hi) > 0:
            lo_i = 0
            hi_i = len(e_hi)
            while lo_i < hi_i:
                mid = (lo_i + hi_i) >> 1
                if e_hi[mid] < h or (e_hi[mid] == h and e_lo[mid] < l):
                    lo_i = mid + 1
                else:
                    hi_i = mid
            if lo_i < len(e_hi) and e_hi[lo_i] == h and e_lo[lo_i] == l:
                EIDX[b] = lo_i
        for v in range(n):
            nn = 0
            for j in range(n):
                if adj[v, j]:
                    nbrs[nn] = j
                    nn += 1
            if nn == 0:
                for mv in range(nmoves):
                    KEYH[b, v * nmoves + mv] = -1
                continue
            for mv in range(nmoves):
                for i in range(n):
                    for j in range(n):
                        nbuf[i, j] = adj[i, j]
                if mv < nglc:
                    a = glc_as[mv]
                    for ii in range(nn):
                        i = nbrs[ii]
                        wvi = adj[v, i]
                        for jj in range(ii + 1, nn):
                            j = nbrs[jj]
                            w = addm[nbuf[i, j], mulm[a, mulm[wvi, adj[v, j]]]]
                            nbuf[i, j] = w
                            nbuf[j, i] = w
                else:
                    a = shift_as[mv - nglc]
                    for jj in range(nn):
                        j = nbrs[jj]
                        w = mulm[a, adj[v, j]]
                        nbuf[v, j] = w
                        nbuf[j, v] = w
                _canon_ws(nbuf, n, m, CS[b], CAND[b], TRIED[b], PATH[b],
                          CCNT[b], CPOS[b], TCNT[b], SIGC[b], SIGS[b],
                          SIGX[b], ORD[b], CELLC[b], PERM[b], BPERM[b],
                          FPERM[b], GENS[b], RES[b])
                if RES[b, 2] != 0:
                    FAIL[b] = 1
                KEYH[b, v * nmoves + mv] = RES[b, 0]
                KEYL[b, v * nmoves + mv] = RES[b, 1]


@njit(cache=True)
def closure(seed_hi, seed_lo, n, m, glc_as, shift_as, addm, mulm,
            e_hi, e_lo, e_cov, budget, tgt_hi, tgt_lo):
    """BFS closure of the seed canonical keys under the selected moves.

    ``glc_as``/``shift_as`` list the move parameters applied at every vertex;
    since LC at one vertex composes additively in a and shifts multiply, a
    single generator per move type already yields the full closure.  The
    frontier is expanded in batches: neighbour keys are canonicalized in
    parallel into per-slot buffers, then inserted serially in batch order,
    so the result is independent of thread scheduling.

    Returns (keys_hi, keys_lo, min_degree, status); status 0 = complete,
    1 = budget exceeded, 2 = target key reached (early exit), 3 = internal
    canonical-search failure.
    """
    cap = 1 << 13
    while cap < 4 * len(seed_hi):
        cap <<= 1
    mask = cap - 1
    th = np.full(cap, -1, dtype=np.int64)
    tl = np.zeros(cap, dtype=np.int64)
    alloc = max(4096, len(seed_hi))
    out_h = np.empty(alloc, dtype=np.int64)
    out_l = np.empty(alloc, dtype=np.int64)
    cnt = 0
    min_deg = n + 1
    B = _BATCH
    nglc = len(glc_as)
    nmoves = nglc + len(shift_as)
    nkeys = n * nmoves

    # per-slot workspaces so the parallel batch needs no locking
    CS = np.zeros((B, _MAXN + 2, _MAXN), dtype=np.int32)
    CAND = np.zeros((B, _MAXN + 2, _MAXN), dtype=np.int32)
    TRIED = np.zeros((B, _MAXN + 2, _MAXN), dtype=np.int32)
    PATH = np.zeros((B, _MAXN + 2), dtype=np.int32)
    CCNT = np.zeros((B, _MAXN + 2), dtype=np.int32)
    CPOS = np.zeros((B, _MAXN + 2), dtype=np.int32)
    TCNT = np.zeros((B, _MAXN + 2), dtype=np.int32)
    SIGC = np.zeros((B, _MAXN), dtype=np.int64)
    SIGS = np.zeros((B, _MAXN), dtype=np.int64)
    SIGX = np.zeros((B, _MAXN), dtype=np.int64)
    ORD = np.zeros((B, _MAXN), dtype=np.int32)
    CELLC = np.zeros((B, _MAXN), dtype=np.int32)
    PERM = np.zeros((B, _MAXN), dtype=np.int32)
    BPERM = np.zeros((B, _MAXN), dtype=np.int32)
    FPERM = np.zeros((B, _MAXN), dtype=np.int32)
    GENS = np.zeros((B, _GENS_CAP, _MAXN), dtype=np.int32)
    RES = np.zeros((B, 5), dtype=np.int64)
    DIG = np.zeros((B, _MAXN * (_MAXN - 1) // 2), dtype=np.uint8)
    ADJ = np.zeros((B, n, n), dtype=np.uint8)
    NBUF = np.zeros((B, n, n), dtype=np.uint8)
    NBRS = np.zeros((B, n), dtype=np.int32)
    KEYH = np.zeros((B, nkeys), dtype=np.int64)
    KEYL = np.zeros((B, nkeys), dtype=np.int64)
    MDEG = np.zeros(B, dtype=np.int64)
    EIDX = np.zeros(B, dtype=np.int64)
    FAIL = np.zeros(B, dtype=np.int64)

    for s in range(len(seed_hi)):
        h = seed_hi[s]
        l = seed_lo[s]
        idx = _hash_pair(h, l, mask)
        while th[idx] != -1 and not (th[idx] == h and tl[idx] == l):
            idx = (idx + 1) & mask
        if th[idx] == -1:
            th[idx] = h
            tl[idx] = l
            if cnt == len(out_h):
                nh = np.empty(2 * cnt, dtype=np.int64)
                nl = np.empty(2 * cnt, dtype=np.int64)
                nh[:cnt] = out_h
                nl[:cnt] = out_l
                out_h, out_l = nh, nl
            out_h[cnt] = h
            out_l[cnt] = l
            cnt += 1
            if h == tgt_hi and l == tgt_lo:
                return out_h[:cnt], out_l[:cnt], min_deg, 2

    qi = 0
    while qi < cnt:
        take = cnt - qi
        if take > B:
            take = B
        _expand_batch(out_h[qi:qi + take], out_l[qi:qi + take], take, n, m,
                      glc_as, shift_as, addm, mulm, e_hi, e_lo,
                      CS, CAND, TRIED, PATH, CCNT, CPOS, TCNT,
                      SIGC, SIGS, SIGX, ORD, CELLC, PERM, BPERM, FPERM, GENS,
                      RES, DIG, ADJ, NBUF, NBRS, KEYH, KEYL, MDEG, EIDX, FAIL)
        qi += take
        # serial merge, in fixed batch order
        for b in range(take):
            if FAIL[b] != 0:
                return out_h[:cnt], out_l[:cnt], min_deg, 3
            if MDEG[b] < min_deg:
                min_deg = MDEG[b]
            if EIDX[b] >= 0:
                e_cov[EIDX[b]] = True
            for k in range(nkeys):
                ch = KEYH[b, k]
                if ch < 0:
                    continue
                cl = KEYL[b, k]
                idx = _hash_pair(ch, cl, mask)
                while th[idx] != -1 and not (th[idx] == ch and tl[idx] == cl):
                    idx = (idx + 1) & mask
                if th[idx] == -1:
                    th[idx] = ch
                    tl[idx] = cl
                    if cnt == len(out_h):
                        nh = np.empty(2 * cnt, dtype=np.int64)
                        nl = np.empty(2 * cnt, dtype=np.int64)
                        nh[:cnt] = out_h
                        nl[:cnt] = out_l
                        out_h, out_l = nh, nl
                    out_h[cnt] = ch
                    out_l[cnt] = cl
                    cnt += 1
                    if ch == tgt_hi and cl == tgt_lo:
                        return out_h[:cnt], out_l[:cnt], min_deg, 2
                    if budget > 0 and cnt > budget:
                        return out_h[:cnt], out_l[:cnt], min_deg, 1
                    if 2 * cnt >= cap:
                        cap <<= 2
                        mask = cap - 1
                        th = np.full(cap, -1, dtype=np.int64)
                        tl = np.zeros(cap, dtype=np.int64)
                        for t in range(cnt):
                            j2 = _hash_pair(out_h[t], out_l[t], mask)
                            while th[j2] != -1:
                                j2 = (j2 + 1) & mask
                            th[j2] = out_h[t]
                            tl[j2] = out_l[t]
    return out_h[:cnt], out_l[:cnt], min_deg, 0


# ---------------------------------------------------------------------------
# codeword enumeration
# ---------------------------------------------------------------------------


@njit(cache=True)
def weight_hist(gen, n, m, addq, mulq, subm):
    """Exact weight distribution of the span of the generator rows.

    Iterates coefficient vectors in F_m^n in reflected Gray order, so each
    step changes one digit by one and the codeword updates along one row's
    support.  gen entries are extension-field codes a + m*b.
    """
    hist = np.zeros(n + 1, dtype=np.int64)
    c = np.zeros(n, dtype=np.uint8)
    x = np.zeros(n, dtype=np.int8)
    d = np.ones(n, dtype=np.int8)
    sup_cnt = np.zeros(n, dtype=np.int32)
    sup_idx = np.zeros((n, n), dtype=np.int32)
    for i in range(n):
        k = 0
        for j in range(n):
            if gen[i, j]:
                sup_idx[i, k] = j
                k += 1
        sup_cnt[i] = k
    w = 0
    hist[0] += 1
    while True:
        pos = 0
        while pos < n:
            nx = x[pos] + d[pos]
            if 0 <= nx < m:
                break
            d[pos] = -d[pos]
            pos += 1
        if pos == n:
            break
        old = x[pos]
        new = old + d[pos]
        x[pos] = new
        diff = subm[new, old]
        for t in range(sup_cnt[pos]):
            j = sup_idx[pos, t]
            cj = c[j]
            if cj:
                w -= 1
            cj = addq[cj, mulq[diff, gen[pos, j]]]
            c[j] = cj
            if cj:
                w += 1
        hist[w] += 1
    return hist


@njit(cache=True)
def min_distance_graphform(adj, n, m, addm, subm, mulm, floor):
    """Least nonzero codeword weight of the graph code with adjacency adj.

    A combination of i rows has weight at least i (the omega-diagonal keeps
    every chosen coordinate nonzero), so supports are scanned in increasing
    size with all nonzero coefficient patterns, stopping once the size
    reaches the best weight.  If ``floor`` > 0 the search returns any weight
    found below it immediately (the exact value is then not resolved).
    """
    best = n + 1
    comb = np.zeros(n + 1, dtype=np.int32)
    s = np.zeros(n, dtype=np.uint8)
    x = np.zeros(n, dtype=np.int8)
    d = np.ones(n, dtype=np.int8)
    insup = np.zeros(n, dtype=np.bool_)
    for i in range(1, n + 1):
        if i >= best:
            break
        for t in range(i):
            comb[t] = t
        while True:
            for j in range(n):
                insup[j] = False
            for t in range(i):
                insup[comb[t]] = True
            for j in range(n):
                s[j] = 0
            for t in range(i):
                r = comb[t]
                for j in range(n):
                    s[j] = addm[s[j], adj[r, j]]
            cnt = 0
            for j in range(n):
                if not insup[j] and s[j]:
                    cnt += 1
            if i + cnt < best:
                best = i + cnt
                if floor > 0 and best < floor:
                    return best
            if m > 2:
                for t in range(i):
                    x[t] = 0
                    d[t] = 1
                while True:
                    pos = 0
                    while pos < i:
                        nx = x[pos] + d[pos]
                        if 0 <= nx < m - 1:
                            break
                        d[pos] = -d[pos]
                        pos += 1
                    if pos == i:
                        break
                    old = x[pos]
                    new = old + d[pos]
                    x[pos] = new
                    r = comb[pos]
                    diff = subm[new + 1, old + 1]
                    for j in range(n):
                        if adj[r, j]:
                            was = s[j]
                            now = addm[was, mulm[diff, adj[r, j]]]
                            s[j] = now
                            if not insup[j]:
                                if was and not now:
                                    cnt -= 1
                                elif now and not was:
                                    cnt += 1
                    if i + cnt < best:
                        best = i + cnt
                        if floor > 0 and best < floor:
                            return best
            # next support of size i
            t = i - 1
            while t >= 0 and comb[t] == n - i + t:
                t -= 1
            if t < 0:
                break
            comb[t] += 1
            for u in range(t + 1, i):
                comb[u] = comb[u - 1] + 1
    return best
