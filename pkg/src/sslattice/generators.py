"""Standard lattice families, duals, products and exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

import numpy as np

from .errors import NotALattice, SizeGuard
from .lattice import FiniteLattice, build_from_covers, from_leq

FAMILIES = ("boolean", "chain", "divisor", "partition", "noncrossing_partition", "n5", "m3")

# largest accepted parameter per family
SIZE_GUARDS = {
    "boolean": 12,
    "chain": 4096,
    "divisor": 10**9,
    "partition": 7,
    "noncrossing_partition": 7,
}
PRODUCT_GUARD = 4096
ENUMERATION_GUARD = 7
ENUMERATION_LONG_GUARD = 8


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameter: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.parameter < 0:
            raise SizeGuard("family parameter must be >= 0")
        guard = SIZE_GUARDS.get(self.family)
        if guard is not None and self.parameter > guard:
            raise SizeGuard(f"{self.family} parameter {self.parameter} exceeds the guard {guard}")


def make_family(spec: FamilySpec | str, parameter: int = 0) -> FiniteLattice:
    """Build a named lattice.

    Element orders: boolean subsets by bitmask value (bit k is element k+1);
    chains bottom-up; divisors ascending; partitions and non-crossing
    partitions in lexicographic order of restricted growth strings.
    """
    if isinstance(spec, str):
        spec = FamilySpec(spec, parameter)
    k = spec.parameter
    if spec.family == "boolean":
        return boolean_lattice(k)
    if spec.family == "chain":
        return chain_lattice(k)
    if spec.family == "divisor":
        return divisor_lattice(k)
    if spec.family == "partition":
        return partition_lattice(k)
    if spec.family == "noncrossing_partition":
        return partition_lattice(k, noncrossing=True)
    if spec.family == "n5":
        return pentagon()
    return diamond()


def pentagon() -> FiniteLattice:
    """N5: 0 < 1 < 2 < 4 and 0 < 3 < 4."""
    return build_from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def diamond() -> FiniteLattice:
    """M3: bottom 0, atoms 1, 2, 3, top 4."""
    return build_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def chain_lattice(n: int) -> FiniteLattice:
    if n < 1:
        raise SizeGuard("a chain needs at least one element")
    return build_from_covers(n, [(i, i + 1) for i in range(n - 1)])


def boolean_lattice(k: int) -> FiniteLattice:
    n = 1 << k
    ids = np.arange(n)
    meet = (ids[:, None] & ids[None, :]).astype(np.int32)
    join = (ids[:, None] | ids[None, :]).astype(np.int32)
    leq = meet == ids[:, None]
    covers = [(s, s | (1 << b)) for s in range(n) for b in range(k) if not s >> b & 1]
    labels = ["{" + "".join(str(b + 1) for b in range(k) if s >> b & 1) + "}" for s in range(n)]
    return FiniteLattice(leq, meet, join, covers, labels)


def divisor_lattice(m: int) -> FiniteLattice:
    if m < 1:
        raise SizeGuard("divisor lattice needs a positive integer")
    divs = [d for d in range(1, m + 1) if m % d == 0] if m < 10**5 else _divisors(m)
    d = np.array(divs, dtype=np.int64)
    leq = (d[None, :] % d[:, None]) == 0
    return from_leq(leq, [str(v) for v in divs])


def _divisors(m):
    small = [d for d in range(1, int(m**0.5) + 1) if m % d == 0]
    return sorted(set(small) | {m // d for d in small})


def restricted_growth_strings(n: int) -> list[tuple]:
    """All set partitions of n points as restricted growth strings, lex order."""
    if n == 0:
        return [()]
    out = []

    def grow(prefix, top):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(top + 2):
            prefix.append(v)
            grow(prefix, max(top, v))
            prefix.pop()

    grow([0], 0)
    return out


def blocks(rgs) -> list[tuple]:
    bl = {}
    for i, b in enumerate(rgs):
        bl.setdefault(b, []).append(i)
    return [tuple(v) for _, v in sorted(bl.items())]


def partition_label(rgs) -> str:
    return "|".join("".join(str(i + 1) for i in b) for b in blocks(rgs)) or "{}"


def is_noncrossing(rgs) -> bool:
    n = len(rgs)
    for a in range(n):
        for b in range(a + 1, n):
            if rgs[b] == rgs[a]:
                continue
            for c in range(b + 1, n):
                if rgs[c] != rgs[a]:
                    continue
                for d in range(c + 1, n):
                    if rgs[d] == rgs[b]:
                        return False
    return True


def partition_lattice(n: int, noncrossing: bool = False) -> FiniteLattice:
    """Set partitions of {1..n} under refinement (finer is lower)."""
    parts = restricted_growth_strings(n)
    if noncrossing:
        parts = [p for p in parts if is_noncrossing(p)]
    P = np.array(parts, dtype=np.int64).reshape(len(parts), n)
    leq = np.ones((len(parts), len(parts)), dtype=bool)
    for i, p in enumerate(parts):
        # p <= q iff q is constant on every block of p
        first = np.array([p.index(b) for b in p], dtype=np.intp)
        leq[i] = (P == P[:, first]).all(axis=1)
    return from_leq(leq, [partition_label(p) for p in parts])


def dual(L: FiniteLattice) -> FiniteLattice:
    """Same ids, order reversed."""
    return FiniteLattice(L.leq.T.copy(), L.join_table.copy(), L.meet_table.copy(),
                         [(j, i) for i, j in L.covers], L.labels)


def direct_product(L1: FiniteLattice, L2: FiniteLattice) -> FiniteLattice:
    """Componentwise order; the pair (x1, x2) gets id x1 * n2 + x2."""
    n1, n2 = L1.n, L2.n
    if n1 * n2 > PRODUCT_GUARD:
        raise SizeGuard(f"product of sizes {n1} and {n2} exceeds {PRODUCT_GUARD}")
    n = n1 * n2
    leq = (L1.leq[:, None, :, None] & L2.leq[None, :, None, :]).reshape(n, n)
    meet = (L1.meet_table[:, None, :, None] * n2 + L2.meet_table[None, :, None, :]).reshape(n, n)
    join = (L1.join_table[:, None, :, None] * n2 + L2.join_table[None, :, None, :]).reshape(n, n)
    covers = [(a * n2 + x, b * n2 + x) for a, b in L1.covers for x in range(n2)]
    covers += [(a * n2 + x, a * n2 + y) for a in range(n1) for x, y in L2.covers]
    labels = None
    if L1.labels is not None or L2.labels is not None:
        labels = [f"({L1.label(a)},{L2.label(b)})" for a in range(n1) for b in range(n2)]
    return FiniteLattice(leq, meet.astype(np.int32), join.astype(np.int32), covers, labels)


# -- exhaustive enumeration ----------------------------------------------------

def _ideals(down, k):
    """Down-closed subsets of {0..k-1} that contain 0, as bitmasks."""
    out = []
    for rest in range(1 << (k - 1)):
        mask = 1 | (rest << 1)
        ok = True
        m = mask
        while m:
            b = m & -m
            x = b.bit_length() - 1
            if down[x] & ~mask:
                ok = False
                break
            m ^= b
        if ok:
            out.append(mask)
    return out


def bounded_naturally_labeled_posets(n: int) -> Iterator[list[int]]:
    """Strict down-set bitmasks of every poset on 0..n-1 where x < y implies
    x < y as integers, 0 is the bottom and n-1 the top."""
    if n == 1:
        yield [0]
        return

    def grow(down):
        k = len(down)
        if k == n - 1:
            yield down + [(1 << k) - 1]
            return
        for ideal in _ideals(down, k):
            # strict down-set of the new element is the ideal itself
            yield from grow(down + [ideal])

    yield from grow([0])


def _leq_from_down(down):
    n = len(down)
    leq = np.eye(n, dtype=bool)
    for y, mask in enumerate(down):
        for x in range(n):
            if mask >> x & 1:
                leq[x, y] = True
    return leq


def enumerate_lattices(n: int, canonical: bool = False, allow_long: bool = False) -> Iterator[FiniteLattice]:
    """Yield every lattice on 0..n-1 whose order is contained in the integer order.

    Each such labeled order is produced exactly once; every isomorphism class
    of n-element lattices appears (it has a linear extension). With
    ``canonical`` only the first lattice of each isomorphism class is yielded.
    """
    guard = ENUMERATION_LONG_GUARD if allow_long else ENUMERATION_GUARD
    if not 1 <= n <= guard:
        raise SizeGuard(f"enumeration size must be between 1 and {guard}")
    seen = set()
    for down in bounded_naturally_labeled_posets(n):
        try:
            L = from_leq(_leq_from_down(down))
        except NotALattice:
            continue
        if canonical:
            key = canonical_form(L)
            if key in seen:
                continue
            seen.add(key)
        yield L


def count_candidates(n: int) -> int:
    """Number of bounded naturally labeled posets scanned for size n."""
    return sum(1 for _ in bounded_naturally_labeled_posets(n))


def linear_extensions(L: FiniteLattice) -> Iterator[tuple]:
    n = L.n
    below = [set(L.lower_covers[y]) for y in range(n)]
    placed = []
    used = [False] * n

    def rec():
        if len(placed) == n:
            yield tuple(placed)
            return
        for y in range(n):
            if not used[y] and all(used[x] for x in below[y]):
                used[y] = True
                placed.append(y)
                yield from rec()
                placed.pop()
                used[y] = False

    yield from rec()


def canonical_form(L: FiniteLattice) -> tuple:
    """Least sorted cover list over all order-preserving relabelings."""
    best = None
    for ext in linear_extensions(L):
        pos = {x: i for i, x in enumerate(ext)}
        enc = tuple(sorted((pos[a], pos[b]) for a, b in L.covers))
        if best is None or enc < best:
            best = enc
    return (L.n, best)


def isomorphic_bruteforce(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    """Try every bijection; only for tiny lattices."""
    if L1.n != L2.n or len(L1.covers) != len(L2.covers):
        return False
    target = set(L2.covers)
    for perm in permutations(range(L1.n)):
        if all((perm[a], perm[b]) in target for a, b in L1.covers):
            return True
    return False
