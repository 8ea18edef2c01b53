"""Compiled search kernels for generalized Hamming weights and verifiers."""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, inline="always")
def popcount64(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def _weight(v):
    w = 0
    for i in range(v.shape[0]):
        w += popcount64(v[i])
    return w


@njit(cache=True)
def primal_dfs(row0, rest, counts, best, lb):
    """Minimum popcount of OR-ed supports, one candidate per row.

    ``row0`` (n0, W) and each ``rest[i, :counts[i]]`` are packed supports
    sorted by weight.  Returns (best, indices); indices are -1 when nothing
    below the incoming ``best`` was found.
    """
    nrest = rest.shape[0]
    W = row0.shape[1]
    idx = np.full(nrest + 1, -1, dtype=np.int64)
    found = np.full(nrest + 1, -1, dtype=np.int64)
    acc = np.zeros((nrest + 2, W), dtype=np.uint64)
    for a in range(row0.shape[0]):
        if best <= lb:
            break
        w0 = _weight(row0[a])
        if w0 >= best:
            break
        if nrest == 0:
            best = w0
            found[0] = a
            continue
        for k in range(W):
            acc[1, k] = row0[a, k]
        idx[0] = a
        depth = 0  # index into rest currently being chosen
        idx[1] = -1
        while depth >= 0:
            idx[depth + 1] += 1
            j = idx[depth + 1]
            if j >= counts[depth] or best <= lb:
                idx[depth + 1] = -1
                depth -= 1
                continue
            cand = rest[depth, j]
            if _weight(cand) >= best:
                idx[depth + 1] = -1
                depth -= 1
                continue
            w = 0
            for k in range(W):
                v = acc[depth + 1, k] | cand[k]
                acc[depth + 2, k] = v
                w += popcount64(v)
            if w >= best:
                continue
            if depth == nrest - 1:
                best = w
                for t in range(nrest + 1):
                    found[t] = idx[t]
                continue
            depth += 1
            idx[depth + 1] = -1
    return best, found


@njit(cache=True)
def dual_bb(Hc, add, mul, neg, inv, r, best, lb):
    """Smallest coordinate set S with |S| - rank(Hc[:, S]) >= r.

    Branch and bound over column subsets with an incrementally maintained
    semi-echelon basis.  Only sizes below ``best`` are explored.  Returns
    (best, members) where members lists the chosen columns (or is empty).
    """
    n, m = Hc.shape
    basis = np.zeros((n + 1, n), dtype=np.int64)
    piv = np.zeros(n + 1, dtype=np.int64)
    added = np.zeros(m + 1, dtype=np.int64)
    cols = np.full(m + 1, -1, dtype=np.int64)
    witness = np.full(m, -1, dtype=np.int64)
    wsize = 0
    rank = 0
    depth = 0  # number of chosen columns
    cols[0] = -1
    v = np.zeros(n, dtype=np.int64)
    nodes = 0
    while depth >= 0:
        if best <= lb:
            break
        # undo the previous choice at this depth, then advance it
        if added[depth] == 1:
            rank -= 1
            added[depth] = 0
        c = cols[depth] + 1
        cols[depth] = c
        null_before = depth - rank
        need = r - null_before
        if c >= m or depth + need > best - 1 or m - c < need:
            cols[depth] = -1
            depth -= 1
            continue
        nodes += 1
        # reduce column c against the basis
        for i in range(n):
            v[i] = Hc[i, c]
        for b in range(rank):
            f = v[piv[b]]
            if f != 0:
                nf = neg[f]
                for i in range(n):
                    if basis[b, i] != 0:
                        v[i] = add[v[i], mul[nf, basis[b, i]]]
        p = -1
        for i in range(n):
            if v[i] != 0:
                p = i
                break
        if p >= 0:
            # independent: rank would grow
            if rank + 1 > best - 1 - r:
                continue
            iv = inv[v[p]]
            for i in range(n):
                basis[rank, i] = mul[iv, v[i]]
            piv[rank] = p
            rank += 1
            added[depth] = 1
        else:
            added[depth] = 0
        size = depth + 1
        if size - rank >= r:
            best = size
            wsize = size
            for t in range(size):
                witness[t] = cols[t]
            continue  # supersets are larger
        depth += 1
        cols[depth] = c  # next level starts after the column just taken
        added[depth] = 0
    return best, witness[:wsize].copy(), nodes


@njit(cache=True)
def thm62_scan(E, k_max):
    """Exhaustive check of the pi(a,b) inequality for one bound vector E.

    For every unordered pair a != b with 1 <= a_i, b_i <= E_i and equal sums
    d, checks pi(a,b) >= rhs(d, k) for the k in 1..m-1 maximizing the
    right-hand side.  Returns (checked pairs, violating pairs, min slack,
    argmin a, argmin b, argmin k).
    """
    m = E.shape[0]
    total = 1
    for i in range(m):
        total *= E[i]
    tuples = np.zeros((total, m), dtype=np.int64)
    sums = np.zeros(total, dtype=np.int64)
    prods = np.zeros(total, dtype=np.int64)
    for t in range(total):
        x = t
        s = 0
        p = 1
        for i in range(m - 1, -1, -1):
            a = x % E[i] + 1
            x //= E[i]
            tuples[t, i] = a
            s += a
            p *= a
        sums[t] = s
        prods[t] = p
    # suffix products of E: suf[j] = E_j * ... * E_{m-1}
    suf = np.ones(m + 2, dtype=np.int64)
    ssum = np.zeros(m + 2, dtype=np.int64)
    for j in range(m - 1, -1, -1):
        suf[j] = suf[j + 1] * E[j]
        ssum[j] = ssum[j + 1] + E[j]
    order = np.argsort(sums, kind="mergesort")
    checked = 0
    violations = 0
    best_slack = np.int64(1) << 62
    ba = np.zeros(m, dtype=np.int64)
    bb = np.zeros(m, dtype=np.int64)
    bk = -1
    start = 0
    while start < total:
        d = sums[order[start]]
        stop = start
        while stop < total and sums[order[stop]] == d:
            stop += 1
        # the right-hand side depends only on (d, k): keep the largest
        rmax = -(np.int64(1) << 62)
        kbest = -1
        for k in range(1, min(k_max, m - 1) + 1):
            # 1-based k: trailing indices k+1..m are 0-based k..m-1
            rhs = (d - ssum[k] - (k - 2)) * suf[k] - suf[k + 1]
            if rhs > rmax:
                rmax = rhs
                kbest = k
        if kbest < 0:
            start = stop
            continue
        for ia in range(start, stop):
            ta = order[ia]
            for ib in range(ia + 1, stop):
                tb = order[ib]
                pm = 1
                for i in range(m):
                    x = tuples[ta, i]
                    y = tuples[tb, i]
                    pm *= x if x < y else y
                slack = prods[ta] + prods[tb] - pm - rmax
                checked += 1
                if slack < 0:
                    violations += 1
                if slack < best_slack:
                    best_slack = slack
                    for i in range(m):
                        ba[i] = tuples[ta, i]
                        bb[i] = tuples[tb, i]
                    bk = kbest
        start = stop
    return checked, violations, best_slack, ba, bb, bk
