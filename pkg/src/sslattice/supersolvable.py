"""Chief chains, supersolvability certificates and the equivalence verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, islice
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import NotGraded, PreconditionFailed
from .lattice import (
    FiniteLattice,
    closure_under,
    maximal_chains,
    rank_function,
    sublattice_closure,
    validate_chain,
)
from .modularity import (
    fast_chain_report,
    find_pentagon,
    is_chain_modular,
    is_left_modular,
    is_rank_modular,
)

FAILURE_SAMPLE = 100


# -- the sublattice generated by two chains ----------------------------------

def generated_sublattice_two_chains(L: FiniteLattice, m: Sequence[int], c: Sequence[int]):
    """Return ``(S, S_star, closure)`` for chains m and c, as frozensets.

    Bottom and top are added to both chains first. S collects joins of the
    meets m_i ^ c_j, S_star collects meets of the joins m_i v c_j, and closure
    is the sublattice generated by m and c together.
    """
    m = set(validate_chain(L, m)) | {L.bottom, L.top}
    c = set(validate_chain(L, c)) | {L.bottom, L.top}
    meets = {L.meet(a, b) for a in m for b in c}
    joins = {L.join(a, b) for a in m for b in c}
    S = closure_under(L.join_table, meets, L.n)
    S_star = closure_under(L.meet_table, joins, L.n)
    return S, S_star, sublattice_closure(L, m | c)


# -- chief chains (distributivity oracle) -------------------------------------

def chief_chain_violation(L: FiniteLattice, m: Sequence[int]):
    """First maximal chain c whose sublattice with m is not distributive.

    Returns ``(c, (x, y, z))`` or None. Checking maximal chains c suffices:
    every chain lies in a maximal one, and sublattices of distributive
    lattices are distributive.
    """
    m = validate_chain(L, m, maximal=True)
    seed = np.zeros(L.n, dtype=bool)
    seed[list(m)] = True
    for c in maximal_chains(L):
        s = seed.copy()
        s[list(c)] = True
        members = np.flatnonzero(kernels.closure(L.meet_table, L.join_table, s))
        t = kernels.distributive_violation(L.meet_table, L.join_table, members.astype(np.int32))
        if t[0] >= 0:
            return c, tuple(int(v) for v in t)
    return None


def is_chief_chain(L: FiniteLattice, m: Sequence[int]) -> bool:
    return chief_chain_violation(L, m) is None


# -- the Birkhoff/Stanley identities ------------------------------------------

@dataclass(frozen=True)
class BirkhoffViolation:
    equation: int          # 1: meets of joins; 2: joins of meets
    a: tuple               # weakly decreasing, from m
    b: tuple               # weakly increasing, from c
    lhs: int
    rhs: int

    def to_text(self):
        return (f"VIOLATION op=birkhoff_eq{self.equation} "
                f"args={','.join(map(str, self.a))};{','.join(map(str, self.b))} "
                f"lhs={self.lhs} rhs={self.rhs}")


def _reduce(table, cols):
    acc = cols[0]
    for col in cols[1:]:
        acc = table[acc, col]
    return acc


def birkhoff_violation(L: FiniteLattice, m: Sequence[int], c: Sequence[int],
                       max_r: Optional[int] = None, check: bool = True) -> Optional[BirkhoffViolation]:
    """Search monotone selections for a failure of the two dual identities.

    For each r up to ``max_r`` (default ``min(len(m), len(c)) + 1``) every
    a_1 >= ... >= a_r drawn from m and b_1 <= ... <= b_r drawn from c, with
    repetition, is tested against::

        (b1 v a1) ^ ... ^ (br v ar)  ==  b1 v (a1 ^ b2) v ... v (a_{r-1} ^ br) v ar
        (a1 ^ b1) v ... v (ar ^ br)  ==  a1 ^ (b1 v a2) ^ ... ^ (b_{r-1} v ar) ^ br

    Raises PreconditionFailed if ``check`` and m is not chain-modular.
    """
    m = validate_chain(L, m)
    c = validate_chain(L, c)
    if check and not is_chain_modular(L, m):
        raise PreconditionFailed(f"chain {list(m)} is not chain-modular")
    if max_r is None:
        max_r = min(len(m), len(c)) + 1
    M, J = L.meet_table, L.join_table
    m_desc = np.array(m[::-1], dtype=np.intp)
    c_asc = np.array(c, dtype=np.intp)
    for r in range(1, max_r + 1):
        A = m_desc[np.array(list(combinations_with_replacement(range(len(m)), r)), dtype=np.intp)]
        B = c_asc[np.array(list(combinations_with_replacement(range(len(c)), r)), dtype=np.intp)]
        # broadcast to (len(A), len(B)) grids per position
        a = [A[:, i][:, None] for i in range(r)]
        b = [B[:, i][None, :] for i in range(r)]
        lhs1 = _reduce(M, [J[b[i], a[i]] for i in range(r)])
        rhs1 = _reduce(J, [b[0]] + [M[a[i], b[i + 1]] for i in range(r - 1)] + [a[r - 1]])
        lhs2 = _reduce(J, [M[a[i], b[i]] for i in range(r)])
        rhs2 = _reduce(M, [a[0]] + [J[b[i], a[i + 1]] for i in range(r - 1)] + [b[r - 1]])
        for eq, lhs, rhs in ((1, lhs1, rhs1), (2, lhs2, rhs2)):
            lhs, rhs = np.broadcast_arrays(lhs, rhs)
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                i, j = bad[0]
                return BirkhoffViolation(eq, tuple(A[i].tolist()), tuple(B[j].tolist()),
                                         int(lhs[i, j]), int(rhs[i, j]))
    return None


def verify_birkhoff_identities(L, m, c, max_r=None) -> bool:
    return birkhoff_violation(L, m, c, max_r) is None


# -- rank from a chain ---------------------------------------------------------

def synthetic_rank(L: FiniteLattice, m: Sequence[int], check: bool = True) -> tuple:
    """rho(y) = number of i with m_{i+1} ^ y > m_i ^ y.

    With ``check`` the chain must be a chain-modular maximal chain, which is
    what makes rho the rank function of L.
    """
    m = validate_chain(L, m, maximal=check)
    if check and not is_chain_modular(L, m):
        raise PreconditionFailed(f"chain {list(m)} is not chain-modular")
    rows = L.meet_table[list(m)]
    # m_i ^ y <= m_{i+1} ^ y always, so strict growth is just inequality
    return tuple(int(v) for v in (rows[1:] != rows[:-1]).sum(axis=0))


# -- certificates -------------------------------------------------------------

@dataclass
class SupersolvabilityCertificate:
    verdict: str                         # "supersolvable" | "not_supersolvable"
    chief_chain: Optional[tuple] = None
    method: str = "fast"                 # "fast" | "oracle" | "both"
    failures: dict = field(default_factory=dict)   # chain -> ChainReport
    truncated: bool = False

    @property
    def supersolvable(self):
        return self.verdict == "supersolvable"

    def lines(self):
        out = [f"verdict {self.verdict}", f"method {self.method}"]
        if self.chief_chain is not None:
            out.append("chief_chain " + ",".join(map(str, self.chief_chain)))
        for ch, rep in self.failures.items():
            out.append("chain " + ",".join(map(str, ch)))
            out.extend("  " + s for s in rep.lines())
        if self.truncated:
            out.append(f"failures truncated to the first {len(self.failures)} maximal chains")
        return out

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "chief_chain": list(self.chief_chain) if self.chief_chain is not None else None,
            "method": self.method,
            "failures": [
                {"chain": list(ch), "witnesses": rep.lines()} for ch, rep in self.failures.items()
            ],
            "truncated": self.truncated,
        }


def _left_modular_mask(L, jobs):
    if jobs > 1 and L.n > 64:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            flags = list(ex.map(is_left_modular, [L] * L.n, range(L.n), chunksize=max(1, L.n // (4 * jobs))))
    else:
        flags = [is_left_modular(L, m) for m in range(L.n)]
    return flags


def _first_good_chain(L, good_elem, good_cover):
    """Lexicographically first maximal chain using only good elements and covers."""
    dead = set()
    path = []

    def walk(x):
        if x in dead or not good_elem[x]:
            return False
        path.append(x)
        if x == L.top:
            return True
        for y in L.upper_covers[x]:
            if good_cover(x, y) and walk(y):
                return True
        path.pop()
        dead.add(x)
        return False

    return tuple(path) if walk(L.bottom) else None


def certify_supersolvable(L: FiniteLattice, use_oracle: bool = False, jobs: int = 1,
                          max_failures: int = FAILURE_SAMPLE) -> SupersolvabilityCertificate:
    """Find the first maximal chain (in enumeration order) that is chain-modular.

    Uses the cover-pair reduction: elements must be left-modular and no cover
    of the chain may be the long side of a pentagon. Since both conditions are
    local, the first passing chain is found by a pruned depth-first search.
    With ``use_oracle`` the chain is also confirmed by the distributivity test.
    """
    good_elem = _left_modular_mask(L, jobs)
    cover_memo = {}

    def good_cover(x, y):
        if (x, y) not in cover_memo:
            cover_memo[(x, y)] = find_pentagon(L, long_side_cover=(x, y)) is None
        return cover_memo[(x, y)]

    chain = _first_good_chain(L, good_elem, good_cover)
    if chain is not None:
        method = "fast"
        if use_oracle:
            if not is_chief_chain(L, chain):
                raise AssertionError(f"chain-modular chain {chain} failed the distributivity oracle")
            method = "both"
        return SupersolvabilityCertificate("supersolvable", chain, method)
    chains = maximal_chains(L)
    failures = {c: fast_chain_report(L, c) for c in islice(chains, max_failures)}
    truncated = next(chains, None) is not None
    if use_oracle:
        for c in failures:
            if is_chief_chain(L, c):
                raise AssertionError(f"chain {c} passed the distributivity oracle but not the fast check")
    return SupersolvabilityCertificate("not_supersolvable", None,
                                       "both" if use_oracle else "fast", failures, truncated)


def certify_by_oracle(L: FiniteLattice) -> SupersolvabilityCertificate:
    """Slow path: first maximal chain passing the distributivity oracle."""
    for c in maximal_chains(L):
        if is_chief_chain(L, c):
            return SupersolvabilityCertificate("supersolvable", c, "oracle")
    return SupersolvabilityCertificate("not_supersolvable", None, "oracle")


# -- equivalence of the characterizations ----------------------------------------

@dataclass
class ChainConditions:
    chain: tuple
    chief: bool          # C1: distributivity oracle
    graded_left: bool    # C3: graded and every element left-modular
    chain_modular: bool  # C4
    rank_modular: bool   # C5: graded and every element rank modular

    @property
    def bits(self):
        return (self.chief, self.graded_left, self.chain_modular, self.rank_modular)

    @property
    def agree(self):
        return len(set(self.bits)) == 1


@dataclass
class EquivalenceReport:
    lattice_id: str
    chains: list

    @property
    def agreement(self):
        return all(c.agree for c in self.chains)

    def lines(self):
        out = [f"lattice {self.lattice_id} agreement={'yes' if self.agreement else 'NO'}"]
        for c in self.chains:
            out.append("  chain " + ",".join(map(str, c.chain)) + " C1C3C4C5="
                       + "".join("1" if b else "0" for b in c.bits))
        return out


def lattice_id(L: FiniteLattice) -> str:
    return f"{L.n}:" + ",".join(f"{i}-{j}" for i, j in L.covers)


def chain_conditions(L: FiniteLattice, m: Sequence[int], rho=None, left=None) -> ChainConditions:
    """Evaluate C1, C3, C4 and C5 on the maximal chain m.

    ``rho`` is the rank function (None if L is not graded); ``left`` an optional
    precomputed list of left-modularity flags.
    """
    m = validate_chain(L, m, maximal=True)
    if left is None:
        left = [is_left_modular(L, x) for x in range(L.n)]
    graded = rho is not None
    return ChainConditions(
        chain=m,
        chief=is_chief_chain(L, m),
        graded_left=graded and all(left[x] for x in m),
        chain_modular=is_chain_modular(L, m),
        rank_modular=graded and all(is_rank_modular(L, rho, x) for x in m),
    )


def verify_condition_equivalence(L: FiniteLattice) -> EquivalenceReport:
    try:
        rho = rank_function(L)
    except NotGraded:
        rho = None
    left = [is_left_modular(L, x) for x in range(L.n)]
    return EquivalenceReport(lattice_id(L), [chain_conditions(L, m, rho, left) for m in maximal_chains(L)])
