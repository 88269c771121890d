"""Finite lattices with precomputed order, meet and join tables."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Optional

import numpy as np

from . import kernels
from .errors import (
    CycleDetected,
    InvalidChain,
    LatticeError,
    NoBoundedStructure,
    NotALattice,
    NotClosed,
    NotGraded,
    NotMaximal,
)

Chain = tuple  # strictly increasing tuple of element ids
RankFunction = tuple  # rho[x] for every element id x


def _readonly(a):
    a.setflags(write=False)
    return a


class FiniteLattice:
    """An immutable finite lattice on the ids ``0..n-1``.

    Build one with :func:`build_from_covers` or :func:`from_leq`; the
    constructor itself trusts its arguments.

    Attributes
    ----------
    n : int
    covers : tuple of (i, j) pairs with i covered by j, sorted
    leq : (n, n) bool array, ``leq[x, y]`` iff x <= y
    meet_table, join_table : (n, n) int32 arrays
    bottom, top : int
    labels : tuple of str or None
    """

    __slots__ = (
        "n", "covers", "leq", "meet_table", "join_table", "bottom", "top",
        "labels", "upper_covers", "lower_covers",
    )

    def __init__(self, leq, meet_table, join_table, covers, labels=None):
        n = leq.shape[0]
        self.n = n
        self.leq = _readonly(leq)
        self.meet_table = _readonly(meet_table)
        self.join_table = _readonly(join_table)
        self.covers = tuple(sorted(covers))
        self.bottom = int(np.flatnonzero(leq.all(axis=1))[0])
        self.top = int(np.flatnonzero(leq.all(axis=0))[0])
        self.labels = tuple(labels) if labels is not None else None
        up = [[] for _ in range(n)]
        down = [[] for _ in range(n)]
        for i, j in self.covers:
            up[i].append(j)
            down[j].append(i)
        self.upper_covers = tuple(tuple(u) for u in up)
        self.lower_covers = tuple(tuple(sorted(d)) for d in down)

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, covers={len(self.covers)})"

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return hash((self.n, self.covers))

    def __len__(self):
        return self.n

    def le(self, x, y):
        return bool(self.leq[x, y])

    def lt(self, x, y):
        return x != y and bool(self.leq[x, y])

    def meet(self, x, y):
        return int(self.meet_table[x, y])

    def join(self, x, y):
        return int(self.join_table[x, y])

    def is_cover(self, x, y):
        return y in self.upper_covers[x]

    def label(self, x):
        if self.labels is not None and self.labels[x]:
            return self.labels[x]
        return str(x)

    def with_labels(self, labels):
        return FiniteLattice(self.leq, self.meet_table, self.join_table, self.covers, labels)


def _topological_order(n, succ):
    indeg = [0] * n
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    ready.reverse()
    order = []
    while ready:
        i = ready.pop()
        order.append(i)
        for j in sorted(succ[i], reverse=True):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    if len(order) < n:
        stuck = min(i for i in range(n) if indeg[i] > 0)
        raise CycleDetected(stuck)
    return order


def _cover_pairs(leq):
    lt = leq & ~np.eye(leq.shape[0], dtype=bool)
    f = lt.astype(np.float32)
    between = (f @ f) > 0
    cov = lt & ~between
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(cov))]


def _finish(leq, topo, labels):
    n = leq.shape[0]
    meet, join, kind, x, y = kernels.lattice_tables(leq, np.asarray(topo, dtype=np.intp))
    if kind:
        what = "meet" if kind == 1 else "join"
        bounded = leq.all(axis=1).sum() == 1 and leq.all(axis=0).sum() == 1
        if not bounded:
            raise NoBoundedStructure(int(x), int(y), what)
        raise NotALattice(int(x), int(y), what)
    if labels is not None and len(labels) != n:
        raise LatticeError(f"expected {n} labels, got {len(labels)}")
    return FiniteLattice(leq, np.asarray(meet, dtype=np.int32), np.asarray(join, dtype=np.int32),
                         _cover_pairs(leq), labels)


def build_from_covers(n: int, edges: Iterable[tuple[int, int]], labels=None) -> FiniteLattice:
    """Build a lattice from "i below j" pairs.

    Edges need not be covers; the relation is closed transitively and then
    reduced, so redundant comparabilities are absorbed.

    Raises CycleDetected, NotALattice or NoBoundedStructure.
    """
    if n < 1:
        raise LatticeError("a lattice needs at least one element")
    succ = [set() for _ in range(n)]
    for i, j in edges:
        i, j = int(i), int(j)
        if not (0 <= i < n and 0 <= j < n):
            raise LatticeError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise CycleDetected(i)
        succ[i].add(j)
    topo = _topological_order(n, succ)
    leq = np.eye(n, dtype=bool)
    for i in reversed(topo):
        for j in succ[i]:
            leq[i] |= leq[j]
    return _finish(leq, topo, labels)


def from_leq(leq, labels=None) -> FiniteLattice:
    """Build a lattice from a full n x n order table (must be a partial order)."""
    leq = np.array(leq, dtype=bool)
    n = leq.shape[0]
    if n < 1 or leq.shape != (n, n):
        raise LatticeError("order table must be a non-empty square matrix")
    if not leq.diagonal().all():
        raise LatticeError("order table is not reflexive")
    off = leq & leq.T & ~np.eye(n, dtype=bool)
    if off.any():
        i, j = (int(v) for v in np.argwhere(off)[0])
        raise CycleDetected(i)
    f = leq.astype(np.float32)
    if ((f @ f > 0) & ~leq).any():
        raise LatticeError("order table is not transitive")
    # ascending number of elements below gives a linear extension
    topo = np.lexsort((np.arange(n), leq.sum(axis=0)))
    return _finish(leq, topo.tolist(), labels)


def bounds(L: FiniteLattice, x: int, y: int) -> tuple[int, int]:
    """``(meet, join)`` of x and y."""
    return L.meet(x, y), L.join(x, y)


def maximal_chains(L: FiniteLattice, start: Optional[int] = None) -> Iterator[Chain]:
    """Lazily yield every cover path from ``start`` (default bottom) to top.

    Paths come out in lexicographic order of their id sequences.
    """
    start = L.bottom if start is None else start
    up = L.upper_covers
    top = L.top
    path = [start]
    stack = [iter(up[start])]
    if start == top:
        yield (start,)
        return
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            path.pop()
            continue
        path.append(nxt)
        if nxt == top:
            yield tuple(path)
            path.pop()
        else:
            stack.append(iter(up[nxt]))


def _path_lengths(L):
    order = np.argsort(L.leq.sum(axis=0), kind="stable")
    shortest = [0] * L.n
    longest = [0] * L.n
    for y in order.tolist():
        low = L.lower_covers[y]
        if low:
            shortest[y] = 1 + min(shortest[x] for x in low)
            longest[y] = 1 + max(longest[x] for x in low)
    return shortest, longest


def is_graded(L: FiniteLattice) -> bool:
    shortest, longest = _path_lengths(L)
    return shortest[L.top] == longest[L.top]


def rank_function(L: FiniteLattice) -> RankFunction:
    """Rank of every element, or raise NotGraded with two witness chains.

    The witnesses are the lexicographically first maximal chain and the first
    later one whose length differs from it.
    """
    shortest, longest = _path_lengths(L)
    if shortest[L.top] == longest[L.top]:
        return tuple(shortest)
    chains = maximal_chains(L)
    first = next(chains)
    for c in chains:
        if len(c) != len(first):
            raise NotGraded(first, c)
    raise AssertionError("unequal path lengths but no witness chain")  # pragma: no cover


def validate_chain(L: FiniteLattice, chain: Sequence[int], maximal: bool = False) -> Chain:
    """Return ``chain`` as a tuple after checking it is strictly increasing.

    With ``maximal=True`` also require bottom-to-top with covers only
    (raises NotMaximal).
    """
    ch = tuple(int(c) for c in chain)
    if not ch:
        raise InvalidChain("empty chain")
    for c in ch:
        if not 0 <= c < L.n:
            raise InvalidChain(f"element {c} out of range")
    for a, b in zip(ch, ch[1:]):
        if not L.lt(a, b):
            raise InvalidChain(f"{a} is not strictly below {b}")
    if maximal:
        if ch[0] != L.bottom or ch[-1] != L.top:
            raise NotMaximal(f"chain {list(ch)} must run from {L.bottom} to {L.top}")
        for a, b in zip(ch, ch[1:]):
            if not L.is_cover(a, b):
                raise NotMaximal(f"{b} does not cover {a}")
    return ch


def is_maximal_chain(L: FiniteLattice, chain: Sequence[int]) -> bool:
    try:
        validate_chain(L, chain, maximal=True)
    except InvalidChain:
        return False
    return True


def _mask(L, elements):
    m = np.zeros(L.n, dtype=bool)
    m[list(elements)] = True
    return m


def sublattice_closure(L: FiniteLattice, seed: Iterable[int]) -> frozenset:
    """Smallest subset containing ``seed`` closed under meet and join."""
    seed = list(seed)
    if not seed:
        raise LatticeError("seed must be non-empty")
    closed = kernels.closure(L.meet_table, L.join_table, _mask(L, seed))
    return frozenset(np.flatnonzero(closed).tolist())


def closure_under(table, elements, n) -> frozenset:
    """Closure of ``elements`` under one binary operation table."""
    m = np.zeros(n, dtype=bool)
    m[list(elements)] = True
    return frozenset(np.flatnonzero(kernels.closure1(table, m)).tolist())


def _check_closed(L, members):
    inside = set(members)
    for x in members:
        for y in members:
            if L.meet(x, y) not in inside or L.join(x, y) not in inside:
                raise NotClosed(x, y)


def distributive_violation(L: FiniteLattice, subset: Optional[Iterable[int]] = None, check=True):
    """First triple (x, y, z) with x^(y v z) != (x^y) v (x^z), or None.

    ``subset`` must be a sublattice (NotClosed otherwise); defaults to all of L.
    """
    members = range(L.n) if subset is None else sorted(set(subset))
    if subset is not None and check:
        _check_closed(L, members)
    t = kernels.distributive_violation(L.meet_table, L.join_table,
                                       np.asarray(list(members), dtype=np.int32))
    return None if t[0] < 0 else tuple(int(v) for v in t)


def is_distributive(L: FiniteLattice, subset: Optional[Iterable[int]] = None) -> bool:
    return distributive_violation(L, subset) is None
