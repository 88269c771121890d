"""Slow, independent reference computations used to check the library.

Nothing here touches the precomputed tables or the kernels: meets and joins
are recomputed from the order relation by scanning bound sets.
"""

from itertools import combinations_with_replacement, permutations


def order_pairs(n, edges):
    """Reflexive-transitive closure by Warshall's algorithm, as a set of pairs."""
    le = [[i == j for j in range(n)] for i in range(n)]
    for i, j in edges:
        le[i][j] = True
    for k in range(n):
        for i in range(n):
            if le[i][k]:
                for j in range(n):
                    if le[k][j]:
                        le[i][j] = True
    return le


class BruteLattice:
    """Meet and join recomputed on every call from the order relation."""

    def __init__(self, le):
        self.le = le
        self.n = len(le)

    @classmethod
    def of(cls, L):
        return cls([[bool(L.leq[i, j]) for j in range(L.n)] for i in range(L.n)])

    def meet(self, x, y):
        lows = [z for z in range(self.n) if self.le[z][x] and self.le[z][y]]
        best = [g for g in lows if all(self.le[z][g] for z in lows)]
        assert len(best) == 1
        return best[0]

    def join(self, x, y):
        ups = [z for z in range(self.n) if self.le[x][z] and self.le[y][z]]
        best = [g for g in ups if all(self.le[g][z] for z in ups)]
        assert len(best) == 1
        return best[0]

    def lt(self, x, y):
        return x != y and self.le[x][y]

    def covers(self):
        return {(x, y) for x in range(self.n) for y in range(self.n)
                if self.lt(x, y) and not any(self.lt(x, z) and self.lt(z, y) for z in range(self.n))}


def brute_glb_exists(le, x, y):
    n = len(le)
    lows = [z for z in range(n) if le[z][x] and le[z][y]]
    return sum(1 for g in lows if all(le[z][g] for z in lows)) == 1


def brute_is_lattice(le):
    n = len(le)
    flip = [[le[j][i] for j in range(n)] for i in range(n)]
    return all(brute_glb_exists(le, x, y) and brute_glb_exists(flip, x, y)
               for x in range(n) for y in range(n))


def brute_maximal_chains(B):
    """All maximal chains as sorted-by-order tuples, found by extending paths."""
    covers = B.covers()
    bottom = next(x for x in range(B.n) if all(B.le[x][y] for y in range(B.n)))
    top = next(x for x in range(B.n) if all(B.le[y][x] for y in range(B.n)))
    out = []

    def ext(path):
        if path[-1] == top:
            out.append(tuple(path))
            return
        for (a, b) in covers:
            if a == path[-1]:
                ext(path + [b])

    ext([bottom])
    return sorted(out)


def brute_closure(B, seed):
    s = set(seed)
    while True:
        new = {B.meet(a, b) for a in s for b in s} | {B.join(a, b) for a in s for b in s}
        if new <= s:
            return s
        s |= new


def brute_distributive(B, members):
    return all(B.meet(x, B.join(y, z)) == B.join(B.meet(x, y), B.meet(x, z))
               for x in members for y in members for z in members)


def brute_modular_pair(B, z, y):
    return all(B.join(x, B.meet(z, y)) == B.meet(B.join(x, z), y)
               for x in range(B.n) if B.lt(x, y))


def brute_left_modular(B, m):
    return all(brute_modular_pair(B, m, y) for y in range(B.n))


def brute_right_modular(B, m):
    return all(brute_modular_pair(B, z, m) for z in range(B.n))


def brute_right_chain_modular(B, chain):
    return all(B.join(x, B.meet(z, y)) == B.meet(B.join(x, z), y)
               for i, x in enumerate(chain) for y in chain[i + 1:] for z in range(B.n))


def brute_is_chief(B, m):
    """Distributivity over the sublattice generated by m and every maximal chain."""
    return all(brute_distributive(B, brute_closure(B, set(m) | set(c)))
               for c in brute_maximal_chains(B))


def brute_rank(B):
    """Rank via longest chain from bottom, or None if maximal chains differ in length."""
    chains = brute_maximal_chains(B)
    if len({len(c) for c in chains}) != 1:
        return None
    rho = [0] * B.n
    for c in chains:
        for i, x in enumerate(c):
            rho[x] = i
    return rho


def brute_pentagons(B):
    """All (z, x, y) with x < y, z ^ x = z ^ y and z v x = z v y."""
    return [(z, x, y) for z in range(B.n) for x in range(B.n) for y in range(B.n)
            if B.lt(x, y) and B.meet(z, x) == B.meet(z, y) and B.join(z, x) == B.join(z, y)]


def birkhoff_brute(B, m, c, max_r):
    """Evaluate both identities with plain loops; returns the first failure or None."""
    for r in range(1, max_r + 1):
        for ai in combinations_with_replacement(range(len(m)), r):
            a = [m[i] for i in reversed(ai)]
            for bi in combinations_with_replacement(range(len(c)), r):
                b = [c[i] for i in bi]
                lhs1 = B.join(b[0], a[0])
                for i in range(1, r):
                    lhs1 = B.meet(lhs1, B.join(b[i], a[i]))
                rhs1 = b[0]
                for i in range(r - 1):
                    rhs1 = B.join(rhs1, B.meet(a[i], b[i + 1]))
                rhs1 = B.join(rhs1, a[-1])
                lhs2 = B.meet(a[0], b[0])
                for i in range(1, r):
                    lhs2 = B.join(lhs2, B.meet(a[i], b[i]))
                rhs2 = a[0]
                for i in range(r - 1):
                    rhs2 = B.meet(rhs2, B.join(b[i], a[i + 1]))
                rhs2 = B.meet(rhs2, b[-1])
                if lhs1 != rhs1 or lhs2 != rhs2:
                    return (a, b)
    return None


def brute_isomorphism_classes(lattices):
    """Group by pairwise isomorphism testing over all bijections."""
    reps = []
    for L in lattices:
        cov = set(L.covers)
        found = False
        for R in reps:
            if R.n != L.n or len(R.covers) != len(cov):
                continue
            if any(all((p[a], p[b]) in cov for a, b in R.covers) for p in permutations(range(L.n))):
                found = True
                break
        if not found:
            reps.append(L)
    return reps


def bell(n):
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]
