"""Element- and chain-level modularity predicates and pentagon search.

Each predicate comes in two flavours: ``is_*`` returns a bool, and the
matching ``*_violation`` returns the lexicographically first witness (or None).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import NotACover
from .lattice import FiniteLattice, validate_chain


@dataclass(frozen=True)
class PentagonWitness:
    """An N5 sublattice: long side ``x < y``, short side ``z``."""

    x: int
    y: int
    z: int
    bot: int
    top: int

    def elements(self):
        return (self.bot, self.x, self.y, self.z, self.top)

    def to_text(self):
        return f"PENTAGON x={self.x} y={self.y} z={self.z} bot={self.bot} top={self.top}"


def _pentagon(L, z, x, y):
    return PentagonWitness(x=x, y=y, z=z, bot=L.meet(z, x), top=L.join(z, x))


# -- pentagons ---------------------------------------------------------------

def find_pentagon(L: FiniteLattice, short_side: Optional[int] = None,
                  long_side_cover: Optional[tuple[int, int]] = None) -> Optional[PentagonWitness]:
    """First pentagon in (z, x, y) order, optionally constrained.

    ``short_side=m`` requires z == m. ``long_side_cover=(x, y)`` requires the
    long side to be exactly the cover x < y (NotACover if it is not a cover).
    """
    if short_side is not None and long_side_cover is not None:
        raise ValueError("give at most one constraint")
    if long_side_cover is not None:
        x, y = long_side_cover
        if not L.is_cover(x, y):
            raise NotACover(x, y)
        z = kernels.pentagon_long(L.meet_table, L.join_table, x, y)
        return None if z < 0 else _pentagon(L, int(z), x, y)
    if short_side is not None:
        z, x, y = kernels.pentagon_short(L.meet_table, L.join_table, short_side)
    else:
        z, x, y = kernels.pentagon_any(L.meet_table, L.join_table)
    return None if z < 0 else _pentagon(L, int(z), int(x), int(y))


# -- modular pairs and elements ----------------------------------------------

def modular_pair_violation(L: FiniteLattice, z: int, y: int) -> Optional[int]:
    """Smallest x < y with x v (z ^ y) != (x v z) ^ y."""
    x = kernels.modular_pair_violation(L.meet_table, L.join_table, z, y)
    return None if x < 0 else int(x)


def is_modular_pair(L: FiniteLattice, z: int, y: int) -> bool:
    return modular_pair_violation(L, z, y) is None


def left_modular_violation(L: FiniteLattice, m: int) -> Optional[PentagonWitness]:
    """A pentagon with ``m`` as its short side, if any."""
    return find_pentagon(L, short_side=m)


def is_left_modular(L: FiniteLattice, m: int) -> bool:
    return left_modular_violation(L, m) is None


def left_modular_violation_by_pairs(L: FiniteLattice, m: int) -> Optional[tuple[int, int]]:
    """Definitional scan: first (y, x) where (m, y) fails to be a modular pair."""
    for y in range(L.n):
        x = modular_pair_violation(L, m, y)
        if x is not None:
            return (y, x)
    return None


def right_modular_violation(L: FiniteLattice, m: int) -> Optional[tuple[int, int]]:
    """First (z, x) with x < m and x v (z ^ m) != (x v z) ^ m."""
    z, x = kernels.right_modular_violation(L.meet_table, L.join_table, m)
    return None if z < 0 else (int(z), int(x))


def is_right_modular(L: FiniteLattice, m: int) -> bool:
    return right_modular_violation(L, m) is None


def is_two_sided_modular(L: FiniteLattice, m: int) -> bool:
    return is_left_modular(L, m) and is_right_modular(L, m)


def left_modular_elements(L: FiniteLattice) -> list[int]:
    return [m for m in range(L.n) if is_left_modular(L, m)]


def rank_modular_violation(L: FiniteLattice, rho: Sequence[int], m: int) -> Optional[int]:
    """Smallest x with rho(m v x) + rho(m ^ x) != rho(m) + rho(x)."""
    r = np.asarray(rho)
    lhs = r[L.join_table[m]] + r[L.meet_table[m]]
    bad = np.flatnonzero(lhs != r[m] + r)
    return int(bad[0]) if bad.size else None


def is_rank_modular(L: FiniteLattice, rho: Sequence[int], m: int) -> bool:
    return rank_modular_violation(L, rho, m) is None


# -- chains -------------------------------------------------------------------

def right_chain_violation(L: FiniteLattice, chain: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """First (x, y, z), x < y in the chain, with x v (z ^ y) != (x v z) ^ y."""
    ch = validate_chain(L, chain)
    t = kernels.right_chain_violation(L.meet_table, L.join_table,
                                      np.asarray(ch, dtype=np.int32))
    return None if t[0] < 0 else tuple(int(v) for v in t)


def is_right_chain_modular(L: FiniteLattice, chain: Sequence[int]) -> bool:
    return right_chain_violation(L, chain) is None


@dataclass
class ChainReport:
    """Outcome of a chain-modularity test.

    ``left_failures`` maps each chain element that is not left-modular to a
    pentagon having it as short side. ``right_failure`` is an (x, y, z) triple
    from the pairwise scan; ``cover_failures`` maps each cover pair of the chain
    that is the long side of a pentagon to that pentagon (fast path only).
    """

    chain: tuple
    method: str
    left_failures: dict = field(default_factory=dict)
    right_failure: Optional[tuple] = None
    cover_failures: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not (self.left_failures or self.right_failure or self.cover_failures)

    def __bool__(self):
        return self.ok

    def lines(self):
        out = []
        for m, w in self.left_failures.items():
            out.append(f"VIOLATION op=left_modular args={m}")
            out.append(w.to_text())
        if self.right_failure is not None:
            out.append("VIOLATION op=right_chain_modular args="
                       + ",".join(map(str, self.right_failure)))
        for (x, y), w in self.cover_failures.items():
            out.append(f"VIOLATION op=cover_long_side args={x},{y}")
            out.append(w.to_text())
        return out


def _left_failures(L, ch):
    fails = {}
    for m in ch:
        w = left_modular_violation(L, m)
        if w is not None:
            fails[m] = w
    return fails


def chain_modularity_report(L: FiniteLattice, chain: Sequence[int]) -> ChainReport:
    """Definitional test: every element left-modular and every pair right chain-modular."""
    ch = validate_chain(L, chain)
    return ChainReport(ch, "pairwise", _left_failures(L, ch), right_chain_violation(L, ch))


def is_chain_modular(L: FiniteLattice, chain: Sequence[int]) -> bool:
    return chain_modularity_report(L, chain).ok


def fast_chain_report(L: FiniteLattice, chain: Sequence[int]) -> ChainReport:
    """Cover-pair test for a maximal chain (NotMaximal otherwise).

    Checks left-modularity of each element and that no cover of the chain is
    the long side of a pentagon; this only touches the n elements once per cover.
    """
    ch = validate_chain(L, chain, maximal=True)
    covers = {}
    for x, y in zip(ch, ch[1:]):
        w = find_pentagon(L, long_side_cover=(x, y))
        if w is not None:
            covers[(x, y)] = w
    return ChainReport(ch, "fast", _left_failures(L, ch), None, covers)


def fast_chain_modular(L: FiniteLattice, chain: Sequence[int]) -> bool:
    return fast_chain_report(L, chain).ok
