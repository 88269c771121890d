from math import comb

import pytest

from oracles import BruteLattice, bell, brute_is_lattice, brute_isomorphism_classes
from sslattice.errors import SizeGuard
from sslattice.generators import (
    FamilySpec,
    boolean_lattice,
    bounded_naturally_labeled_posets,
    canonical_form,
    chain_lattice,
    count_candidates,
    diamond,
    direct_product,
    dual,
    enumerate_lattices,
    isomorphic_bruteforce,
    make_family,
    pentagon,
    restricted_growth_strings,
    _leq_from_down,
)
from sslattice.lattice import is_distributive, maximal_chains, rank_function
from sslattice.modularity import find_pentagon, left_modular_elements
from sslattice.supersolvable import certify_supersolvable, is_chief_chain


def test_partition_three_is_diamond():
    P3 = make_family("partition", 3)
    assert P3.n == 5
    assert canonical_form(P3) == canonical_form(diamond())
    assert isomorphic_bruteforce(P3, diamond())


@pytest.mark.parametrize("n", range(0, 7))
def test_partition_sizes(n):
    assert len(restricted_growth_strings(n)) == bell(n)
    if n <= 5:
        assert make_family("partition", n).n == bell(n)


def test_partition_four(pi4):
    assert pi4.n == 15
    assert rank_function(pi4)[pi4.top] == 3
    assert pi4.labels[pi4.top] == "1234" and pi4.labels[pi4.bottom] == "1|2|3|4"


@pytest.mark.parametrize("n", range(1, 6))
def test_partition_rank_is_points_minus_blocks(n):
    L = make_family("partition", n)
    rho = rank_function(L)
    for x, lab in enumerate(L.labels):
        assert rho[x] == n - len(lab.split("|"))


@pytest.mark.parametrize("n", range(1, 6))
def test_partition_left_modular_are_one_block(n):
    L = make_family("partition", n)
    one_block = {x for x, lab in enumerate(L.labels)
                 if sum(1 for b in lab.split("|") if len(b) > 1) <= 1}
    assert set(left_modular_elements(L)) == one_block


@pytest.mark.parametrize("n", range(1, 7))
def test_noncrossing_sizes(n):
    L = make_family("noncrossing_partition", n)
    assert L.n == comb(2 * n, n) // (n + 1)


def test_boolean_and_chain_are_distributive_with_chief_chains():
    for L in (boolean_lattice(0), boolean_lattice(3), chain_lattice(1), chain_lattice(5)):
        assert is_distributive(L)
        assert all(is_chief_chain(L, c) for c in maximal_chains(L))
    assert boolean_lattice(0).n == 1


def test_boolean_order_is_inclusion(b3):
    B = BruteLattice.of(b3)
    for s in range(8):
        for t in range(8):
            assert B.le[s][t] == (s & ~t == 0)
    assert b3.labels[5] == "{13}"


def test_divisor_lattice():
    L = make_family("divisor", 12)
    assert [int(v) for v in L.labels] == [1, 2, 3, 4, 6, 12]
    assert L.labels[L.meet(3, 4)] == "2"   # gcd(4, 6)
    assert L.labels[L.join(2, 3)] == "12"  # lcm(3, 4)
    assert is_distributive(L)


def test_size_guards():
    with pytest.raises(SizeGuard):
        FamilySpec("partition", 8)
    with pytest.raises(SizeGuard):
        FamilySpec("boolean", 13)
    with pytest.raises(SizeGuard):
        FamilySpec("chain", -1)
    with pytest.raises(ValueError):
        FamilySpec("tamari", 3)
    with pytest.raises(SizeGuard):
        make_family("chain", 0)
    with pytest.raises(SizeGuard):
        direct_product(boolean_lattice(6), boolean_lattice(7))
    with pytest.raises(SizeGuard):
        list(enumerate_lattices(8))
    with pytest.raises(SizeGuard):
        list(enumerate_lattices(0))


# -- dual and product ---------------------------------------------------------------

def test_dual_involution():
    for L in (pentagon(), diamond(), make_family("partition", 4)):
        D = dual(L)
        assert dual(D) == L
        assert (D.bottom, D.top) == (L.top, L.bottom)
        assert (D.meet_table == L.join_table).all()


def test_dual_pentagon():
    N5 = pentagon()
    D = dual(N5)
    assert find_pentagon(D) is not None
    assert isomorphic_bruteforce(N5, D)
    assert certify_supersolvable(N5).verdict == certify_supersolvable(D).verdict


def test_dual_boolean_by_complement(b3):
    D = dual(b3)
    relabeled = sorted((7 - i, 7 - j) for i, j in D.covers)
    assert tuple(relabeled) == b3.covers
    assert certify_supersolvable(D).verdict == certify_supersolvable(b3).verdict


def test_products():
    c2, c3, one = chain_lattice(2), chain_lattice(3), chain_lattice(1)
    B2 = direct_product(c2, c2)
    assert B2.n == 4 and canonical_form(B2) == canonical_form(boolean_lattice(2))
    grid = direct_product(c2, c3)
    assert grid.n == 6 and is_distributive(grid)
    L = pentagon()
    assert direct_product(L, one) == L
    P = direct_product(L, c2)
    B = BruteLattice.of(P)
    assert all(P.meet(x, y) == B.meet(x, y) and P.join(x, y) == B.join(x, y)
               for x in range(P.n) for y in range(P.n))
    assert set(P.covers) == B.covers()


# -- enumeration ----------------------------------------------------------------------------

def test_enumeration_small_counts():
    assert len(list(enumerate_lattices(1))) == 1
    chains3 = list(enumerate_lattices(3))
    assert len(chains3) == 1 and chains3[0].covers == ((0, 1), (1, 2))
    assert len(list(enumerate_lattices(3, canonical=True))) == 1


def test_enumeration_is_exactly_the_lattice_candidates():
    # every scanned candidate is a naturally labeled bounded poset; the ones
    # passing the independent bound-set test are exactly the ones yielded
    for n in range(1, 7):
        expected = set()
        for down in bounded_naturally_labeled_posets(n):
            le = _leq_from_down(down).tolist()
            assert all(not le[i][j] for i in range(n) for j in range(i))
            if brute_is_lattice(le):
                expected.add(tuple(map(tuple, le)))
        got = [tuple(map(tuple, L.leq.tolist())) for L in enumerate_lattices(n)]
        assert len(got) == len(set(got))
        assert set(got) == expected


def test_candidate_scan_covers_all_orders():
    # brute force over subsets of comparability pairs among the inner elements
    for n in range(2, 8):
        inner = [(i, j) for i in range(1, n - 1) for j in range(i + 1, n - 1)]
        count = 0
        for bits in range(1 << len(inner)):
            rel = {p for k, p in enumerate(inner) if bits >> k & 1}
            if all((a, c) in rel for (a, b) in rel for (b2, c) in rel if b == b2):
                count += 1
        assert count_candidates(n) == count


@pytest.mark.parametrize("n", [4, 5, 6])
def test_canonical_filter_matches_isomorphism_oracle(n):
    labeled = list(enumerate_lattices(n))
    classes = brute_isomorphism_classes(labeled)
    canon = list(enumerate_lattices(n, canonical=True))
    assert len(canon) == len(classes)
    assert {canonical_form(L) for L in canon} == {canonical_form(L) for L in classes}


def test_canonical_class_counts():
    # class counts computed by the pairwise oracle above for n <= 6; n = 7
    # frozen from the canonical filter
    counts = [len(list(enumerate_lattices(n, canonical=True))) for n in range(1, 8)]
    assert counts == [1, 1, 1, 2, 5, 15, 53]
