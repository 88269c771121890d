# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``. Same signatures, same results."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int32_t idx_t


def lattice_tables(leq_in, topo_in):
    cdef const cnp.uint8_t[:, ::1] leq = np.ascontiguousarray(leq_in, dtype=np.uint8)
    cdef const cnp.intp_t[::1] topo = np.ascontiguousarray(topo_in, dtype=np.intp)
    cdef Py_ssize_t n = leq.shape[0]
    meet_arr = np.full((n, n), -1, dtype=np.int32)
    join_arr = np.full((n, n), -1, dtype=np.int32)
    cdef idx_t[:, ::1] meet = meet_arr
    cdef idx_t[:, ::1] join = join_arr
    cdef Py_ssize_t x, y, p, u, cand
    cdef bint ok
    for x in range(n):
        for y in range(n):
            # greatest lower bound: last common lower bound in topo order
            cand = -1
            for p in range(n - 1, -1, -1):
                u = topo[p]
                if leq[u, x] and leq[u, y]:
                    cand = u
                    break
            ok = cand >= 0
            if ok:
                for p in range(n):
                    u = topo[p]
                    if leq[u, x] and leq[u, y] and not leq[u, cand]:
                        ok = False
                        break
            if not ok:
                return meet_arr, join_arr, 1, x, y
            meet[x, y] = cand
            cand = -1
            for p in range(n):
                u = topo[p]
                if leq[x, u] and leq[y, u]:
                    cand = u
                    break
            ok = cand >= 0
            if ok:
                for p in range(n):
                    u = topo[p]
                    if leq[x, u] and leq[y, u] and not leq[cand, u]:
                        ok = False
                        break
            if not ok:
                return meet_arr, join_arr, 2, x, y
            join[x, y] = cand
    return meet_arr, join_arr, 0, -1, -1


cdef inline tuple _pentagon_short(const idx_t[:, ::1] M, const idx_t[:, ::1] J, Py_ssize_t n, Py_ssize_t z):
    cdef Py_ssize_t x, y
    cdef idx_t mzx, jzx
    for x in range(n):
        mzx = M[z, x]
        jzx = J[z, x]
        for y in range(n):
            if y != x and M[x, y] == x and M[z, y] == mzx and J[z, y] == jzx:
                return (z, x, y)
    return (-1, -1, -1)


def pentagon_any(meet, join):
    cdef const idx_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const idx_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t n = M.shape[0], z
    for z in range(n):
        r = _pentagon_short(M, J, n, z)
        if r[0] >= 0:
            return r
    return (-1, -1, -1)


def pentagon_short(meet, join, Py_ssize_t z):
    cdef const idx_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const idx_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    return _pentagon_short(M, J, M.shape[0], z)


def pentagon_long(meet, join, Py_ssize_t x, Py_ssize_t y):
    cdef const idx_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const idx_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t z
    for z in range(M.shape[0]):
        if M[z, x] == M[z, y] and J[z, x] == J[z, y]:
            return z
    return -1


def modular_pair_violation(meet, join, Py_ssize_t z, Py_ssize_t y):
    cdef const idx_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const idx_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t x
    cdef idx_t zy = M[z, y]
    for x in range(M.shape[0]):
        if x != y and M[x, y] == x and J[x, zy] != M[J[x, z], y]:
            return x
    return -1


def right_modular_violation(meet, join, Py_ssize_t m):
    cdef const idx_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const idx_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef Py_ssize_t n = M.shape[0], z, x
    cdef idx_t zm
    for z in range(n):
        zm = M[z, m]
        for x in range(n):
            if x != m and M[x, m] == x and J[x, zm] != M[J[z, x], m]:
                return (z, x)
    return (-1, -1)


def right_chain_violation(meet, join, chain):
    cdef const idx_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const idx_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef const idx_t[::1] ch = np.ascontiguousarray(chain, dtype=np.int32)
    cdef Py_ssize_t n = M.shape[0], k = ch.shape[0], i, j, z
    cdef idx_t x, y
    for i in range(k):
        x = ch[i]
        for j in range(i + 1, k):
            y = ch[j]
            for z in range(n):
                if J[x, M[z, y]] != M[J[x, z], y]:
                    return (x, y, z)
    return (-1, -1, -1)


def distributive_violation(meet, join, members):
    cdef const idx_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef const idx_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef idx_t[::1] mem = np.sort(np.asarray(members, dtype=np.int32))
    cdef Py_ssize_t k = mem.shape[0], a, b, c
    cdef idx_t x, y, z
    for a in range(k):
        x = mem[a]
        for b in range(k):
            y = mem[b]
            for c in range(k):
                z = mem[c]
                if M[x, J[y, z]] != J[M[x, y], M[x, z]]:
                    return (x, y, z)
    return (-1, -1, -1)


cdef _close(const idx_t[:, ::1] M, const idx_t[:, ::1] J, seed):
    cdef Py_ssize_t n = M.shape[0], i, nmem = 0, nwork = 0
    out = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] inside = out
    cdef const cnp.uint8_t[::1] sd = np.ascontiguousarray(seed, dtype=np.uint8)
    cdef idx_t[::1] members = np.empty(n, dtype=np.int32)
    cdef idx_t[::1] work = np.empty(n, dtype=np.int32)
    cdef idx_t a, b, c
    for i in range(n):
        if sd[i]:
            inside[i] = 1
            work[nwork] = i
            nwork += 1
    while nwork > 0:
        nwork -= 1
        a = work[nwork]
        for i in range(nmem):
            b = members[i]
            c = M[a, b]
            if not inside[c]:
                inside[c] = 1
                work[nwork] = c
                nwork += 1
            c = J[a, b]
            if not inside[c]:
                inside[c] = 1
                work[nwork] = c
                nwork += 1
        members[nmem] = a
        nmem += 1
    return out.astype(bool)


def closure(meet, join, seed):
    return _close(np.ascontiguousarray(meet, dtype=np.int32),
                  np.ascontiguousarray(join, dtype=np.int32), seed)


def closure1(table, seed):
    t = np.ascontiguousarray(table, dtype=np.int32)
    return _close(t, t, seed)
