"""Compiled inner loops for the matching enumerations.

Each kernel walks one shard of the canonical matching stream (all matchings
extending a fixed prefix of pairs) with an explicit stack and preallocated
scratch arrays.  Connectivity is tracked incrementally with a union-find
over vertices that is undone on backtrack; faces are counted only at leaves.
Letters are 0-based here.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _find(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


@njit(cache=True, nogil=True)
def _union(parent, size, x, y):
    # returns the root that got attached, or -1 if already joined
    rx = _find(parent, x)
    ry = _find(parent, y)
    if rx == ry:
        return -1
    if size[rx] < size[ry]:
        rx, ry = ry, rx
    parent[ry] = rx
    size[rx] += size[ry]
    return ry


@njit(cache=True, nogil=True)
def _undo(parent, size, child):
    root = parent[child]
    size[root] -= size[child]
    parent[child] = child


@njit(cache=True, nogil=True)
def _count_cycles(sigma, tau, seen, stamp):
    n = sigma.shape[0]
    cycles = 0
    for x in range(n):
        if seen[x] != stamp:
            cycles += 1
            y = x
            while seen[y] != stamp:
                seen[y] = stamp
                y = sigma[tau[y]]
    return cycles


@njit(cache=True, nogil=True)
def oriented_shard(sigma, vertex_of, n_vertices, pre_a, pre_b, want_all, hist_conn, hist_all):
    """Enumerate one shard; returns the number of matchings visited.

    ``hist_conn[F]`` counts connected matchings with F faces; ``hist_all[F]``
    counts all matchings (filled only when ``want_all``).
    """
    n = sigma.shape[0]
    n_edges = n // 2
    tau = np.full(n, -1, np.int64)
    parent = np.arange(n_vertices)
    size = np.ones(n_vertices, np.int64)
    undo = np.full(n_edges, -1, np.int64)
    a_st = np.zeros(n_edges, np.int64)
    b_st = np.zeros(n_edges, np.int64)
    seen = np.zeros(n, np.int64)
    stamp = 0
    comps = n_vertices
    visited = 0

    base = pre_a.shape[0]
    for d in range(base):
        a = pre_a[d]
        b = pre_b[d]
        tau[a] = b
        tau[b] = a
        a_st[d] = a
        b_st[d] = b
        r = _union(parent, size, vertex_of[a], vertex_of[b])
        undo[d] = r
        if r >= 0:
            comps -= 1

    if base == n_edges:
        visited += 1
        if comps == 1 or want_all:
            stamp += 1
            f = _count_cycles(sigma, tau, seen, stamp)
            if comps == 1:
                hist_conn[f] += 1
            if want_all:
                hist_all[f] += 1
        return visited

    d = base
    a = 0
    while tau[a] != -1:
        a += 1
    a_st[d] = a
    b_st[d] = a
    while True:
        a = a_st[d]
        b = b_st[d]
        if b != a:
            tau[a] = -1
            tau[b] = -1
            if undo[d] >= 0:
                _undo(parent, size, undo[d])
                comps += 1
        b += 1
        while b < n and tau[b] != -1:
            b += 1
        if b >= n:
            d -= 1
            if d < base:
                break
            continue
        b_st[d] = b
        tau[a] = b
        tau[b] = a
        r = _union(parent, size, vertex_of[a], vertex_of[b])
        undo[d] = r
        if r >= 0:
            comps -= 1
        if d == n_edges - 1:
            visited += 1
            if comps == 1 or want_all:
                stamp += 1
                f = _count_cycles(sigma, tau, seen, stamp)
                if comps == 1:
                    hist_conn[f] += 1
                if want_all:
                    hist_all[f] += 1
        else:
            d += 1
            na = a + 1
            while tau[na] != -1:
                na += 1
            a_st[d] = na
            b_st[d] = na
    return visited


@njit(cache=True, nogil=True)
def _set_edge(tau4, a, b, twisted):
    # quotient dart q owns letters 2q ("+") and 2q + 1 ("-")
    if twisted:
        tau4[2 * a] = 2 * b + 1
        tau4[2 * b + 1] = 2 * a
        tau4[2 * a + 1] = 2 * b
        tau4[2 * b] = 2 * a + 1
    else:
        tau4[2 * a] = 2 * b
        tau4[2 * b] = 2 * a
        tau4[2 * a + 1] = 2 * b + 1
        tau4[2 * b + 1] = 2 * a + 1


@njit(cache=True, nogil=True)
def _twist_sweep(sigma4, tau4, a_st, b_st, n_edges, connected, want_all,
                 hist_conn, hist_all, cid, clen, starts):
    """Run all 2**E twist patterns for one quotient matching.

    Returns the number of condition-(6) violations: a cycle of sigma o tau
    whose partner cycle (through phi o tau) is itself or has another length.
    """
    m = sigma4.shape[0]
    for i in range(n_edges):
        _set_edge(tau4, a_st[i], b_st[i], False)
    bad = 0
    for t in range(1 << n_edges):
        if t > 0:
            changed = t ^ (t - 1)
            i = 0
            while changed:
                if changed & 1:
                    _set_edge(tau4, a_st[i], b_st[i], (t >> i) & 1)
                changed >>= 1
                i += 1
        for x in range(m):
            cid[x] = -1
        ncyc = 0
        for x in range(m):
            if cid[x] == -1:
                y = x
                length = 0
                while cid[y] == -1:
                    cid[y] = ncyc
                    length += 1
                    y = sigma4[tau4[y]]
                clen[ncyc] = length
                starts[ncyc] = x
                ncyc += 1
        if ncyc % 2:
            bad += 1
        for c in range(ncyc):
            x = starts[c]
            partner = cid[tau4[x] ^ 1]
            if partner == c or clen[partner] != clen[c]:
                bad += 1
                break
        f = ncyc // 2
        if connected:
            hist_conn[f] += 1
        if want_all:
            hist_all[f] += 1
    return bad


@njit(cache=True, nogil=True)
def unoriented_shard(sigma0, sigma4, vertex_of, n_vertices, pre_a, pre_b, want_all,
                     hist_conn, hist_all, status):
    """Enumerate one shard of signed matchings; returns signed matchings visited.

    The quotient matching is walked exactly like the oriented stream.  The
    orbit of <phi, sigma, tau> on the doubled letters is full iff the
    quotient vertex graph is connected, whatever the twists, so connectivity
    is read off the quotient union-find.  ``status[0]`` accumulates
    condition-(6) violations.
    """
    n = sigma0.shape[0]
    n_edges = n // 2
    m = sigma4.shape[0]
    tau = np.full(n, -1, np.int64)
    tau4 = np.zeros(m, np.int64)
    cid = np.zeros(m, np.int64)
    clen = np.zeros(m, np.int64)
    starts = np.zeros(m, np.int64)
    parent = np.arange(n_vertices)
    size = np.ones(n_vertices, np.int64)
    undo = np.full(n_edges, -1, np.int64)
    a_st = np.zeros(n_edges, np.int64)
    b_st = np.zeros(n_edges, np.int64)
    comps = n_vertices
    visited = 0
    per_leaf = 1 << n_edges

    base = pre_a.shape[0]
    for d in range(base):
        a = pre_a[d]
        b = pre_b[d]
        tau[a] = b
        tau[b] = a
        a_st[d] = a
        b_st[d] = b
        r = _union(parent, size, vertex_of[a], vertex_of[b])
        undo[d] = r
        if r >= 0:
            comps -= 1

    if base == n_edges:
        visited += per_leaf
        if comps == 1 or want_all:
            status[0] += _twist_sweep(sigma4, tau4, a_st, b_st, n_edges, comps == 1, want_all,
                                      hist_conn, hist_all, cid, clen, starts)
        return visited

    d = base
    a = 0
    while tau[a] != -1:
        a += 1
    a_st[d] = a
    b_st[d] = a
    while True:
        a = a_st[d]
        b = b_st[d]
        if b != a:
            tau[a] = -1
            tau[b] = -1
            if undo[d] >= 0:
                _undo(parent, size, undo[d])
                comps += 1
        b += 1
        while b < n and tau[b] != -1:
            b += 1
        if b >= n:
            d -= 1
            if d < base:
                break
            continue
        b_st[d] = b
        tau[a] = b
        tau[b] = a
        r = _union(parent, size, vertex_of[a], vertex_of[b])
        undo[d] = r
        if r >= 0:
            comps -= 1
        if d == n_edges - 1:
            visited += per_leaf
            if comps == 1 or want_all:
                status[0] += _twist_sweep(sigma4, tau4, a_st, b_st, n_edges, comps == 1, want_all,
                                          hist_conn, hist_all, cid, clen, starts)
        else:
            d += 1
            na = a + 1
            while tau[na] != -1:
                na += 1
            a_st[d] = na
            b_st[d] = na
    return visited
