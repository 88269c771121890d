"""Pure-Python implementations of the table-scanning kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Arrays come in as numpy arrays and are converted to nested lists once per call;
all return values are plain ints or tuples of ints, with ``-1`` meaning "none".
"""

import numpy as np

NONE3 = (-1, -1, -1)


def lattice_tables(leq, topo):
    """Meet and join tables of the order ``leq``.

    ``topo`` lists the elements in a linear extension of the order. Returns
    ``(meet, join, kind, x, y)`` where ``kind`` is 0 on success, 1 if the pair
    ``(x, y)`` has no greatest lower bound and 2 if it has no least upper bound.
    The first failing pair in row-major order is reported; meet failures on a
    pair are reported before join failures on the same pair.
    """
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    topo = np.asarray(topo, dtype=np.intp)
    meet = np.full((n, n), -1, dtype=np.int32)
    join = np.full((n, n), -1, dtype=np.int32)
    # rows of leq re-indexed by topological position
    down_t = leq[topo, :]   # down_t[p, x]: topo[p] <= x
    up_t = leq[:, topo].T   # up_t[p, x]: x <= topo[p]
    first_bad = None
    for x in range(n):
        common_lo = down_t & leq[:, x][topo][:, None]   # [p, y]: topo[p] <= x, y
        common_hi = up_t & leq[x, :][topo][:, None]     # [p, y]: x, y <= topo[p]
        has_lo = common_lo.any(axis=0)
        has_hi = common_hi.any(axis=0)
        # greatest lower bound candidate: last in topo order; lub candidate: first
        lo_cand = topo[n - 1 - np.argmax(common_lo[::-1, :], axis=0)]
        hi_cand = topo[np.argmax(common_hi, axis=0)]
        # every common lower bound must sit below the candidate
        lo_ok = has_lo & ~(common_lo & ~leq[topo][:, lo_cand]).any(axis=0)
        hi_ok = has_hi & ~(common_hi & ~leq[hi_cand][:, topo].T).any(axis=0)
        meet[x] = np.where(lo_ok, lo_cand, -1)
        join[x] = np.where(hi_ok, hi_cand, -1)
        if first_bad is None and not (lo_ok.all() and hi_ok.all()):
            for y in range(n):
                if not lo_ok[y]:
                    first_bad = (1, x, int(y))
                    break
                if not hi_ok[y]:
                    first_bad = (2, x, int(y))
                    break
            break
    if first_bad is not None:
        return meet, join, first_bad[0], first_bad[1], first_bad[2]
    return meet, join, 0, -1, -1


def pentagon_any(meet, join):
    """First ``(z, x, y)`` in lexicographic order forming a pentagon, x < y."""
    M = meet.tolist()
    J = join.tolist()
    n = len(M)
    for z in range(n):
        r = _pentagon_short(M, J, n, z)
        if r[0] >= 0:
            return r
    return NONE3


def pentagon_short(meet, join, z):
    """First ``(z, x, y)`` with ``z`` as the short side of a pentagon."""
    return _pentagon_short(meet.tolist(), join.tolist(), len(meet), z)


def _pentagon_short(M, J, n, z):
    Mz = M[z]
    Jz = J[z]
    for x in range(n):
        Mx = M[x]
        mzx = Mz[x]
        jzx = Jz[x]
        for y in range(n):
            # x < y  <=>  meet(x, y) == x and x != y
            if y != x and Mx[y] == x and Mz[y] == mzx and Jz[y] == jzx:
                return (z, x, y)
    return NONE3


def pentagon_long(meet, join, x, y):
    """First ``z`` making ``x < y`` the long side of a pentagon, or -1."""
    M = meet.tolist()
    J = join.tolist()
    for z in range(len(M)):
        if M[z][x] == M[z][y] and J[z][x] == J[z][y]:
            return z
    return -1


def modular_pair_violation(meet, join, z, y):
    """First ``x < y`` with ``x v (z ^ y) != (x v z) ^ y``, or -1."""
    M = meet.tolist()
    J = join.tolist()
    zy = M[z][y]
    for x in range(len(M)):
        if x != y and M[x][y] == x and J[x][zy] != M[J[x][z]][y]:
            return x
    return -1


def right_modular_violation(meet, join, m):
    """First ``(z, x)`` with ``(z, m)`` not a modular pair at ``x < m``."""
    M = meet.tolist()
    J = join.tolist()
    n = len(M)
    below = [x for x in range(n) if x != m and M[x][m] == x]
    for z in range(n):
        zm = M[z][m]
        Jz = J[z]
        for x in below:
            if J[x][zm] != M[Jz[x]][m]:
                return (z, x)
    return (-1, -1)


def right_chain_violation(meet, join, chain):
    """First ``(x, y, z)``, x before y in ``chain``, breaking the modular identity."""
    M = meet.tolist()
    J = join.tolist()
    n = len(M)
    ch = [int(c) for c in chain]
    k = len(ch)
    for i in range(k):
        x = ch[i]
        Jx = J[x]
        for j in range(i + 1, k):
            y = ch[j]
            for z in range(n):
                if Jx[M[z][y]] != M[Jx[z]][y]:
                    return (x, y, z)
    return NONE3


def distributive_violation(meet, join, members):
    """First triple ``(x, y, z)`` of ``members`` with ``x^(y v z) != (x^y) v (x^z)``."""
    M = meet.tolist()
    J = join.tolist()
    mem = sorted(int(m) for m in members)
    for x in mem:
        Mx = M[x]
        for y in mem:
            mxy = Mx[y]
            Jy = J[y]
            for z in mem:
                if Mx[Jy[z]] != J[mxy][Mx[z]]:
                    return (x, y, z)
    return NONE3


def closure(meet, join, seed):
    """Smallest meet- and join-closed superset of ``seed`` as a boolean mask."""
    return _close(meet.tolist(), join.tolist(), seed)


def closure1(table, seed):
    """Closure of ``seed`` under the single binary operation ``table``."""
    T = table.tolist()
    return _close(T, T, seed)


def _close(M, J, seed):
    n = len(M)
    inside = [False] * n
    members = []
    work = []
    for s in np.flatnonzero(np.asarray(seed)).tolist():
        if not inside[s]:
            inside[s] = True
            work.append(s)
    while work:
        a = work.pop()
        Ma = M[a]
        Ja = J[a]
        new = []
        for b in members:
            for c in (Ma[b], Ja[b]):
                if not inside[c]:
                    inside[c] = True
                    new.append(c)
        members.append(a)
        work.extend(new)
    return np.array(inside, dtype=bool)
