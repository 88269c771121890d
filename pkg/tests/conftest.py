import os
import sys

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from sslattice.generators import diamond, make_family, pentagon  # noqa: E402
from sslattice.lattice import from_leq  # noqa: E402


@pytest.fixture(scope="session")
def n5():
    return pentagon()


@pytest.fixture(scope="session")
def m3():
    return diamond()


@pytest.fixture(scope="session")
def b3():
    return make_family("boolean", 3)


@pytest.fixture(scope="session")
def pi4():
    return make_family("partition", 4)


def ids(L, *labels):
    return tuple(L.labels.index(s) for s in labels)


@st.composite
def closure_lattices(draw, max_points=5, max_sets=8):
    """Random lattices: intersection-closed set families plus the full set,
    ordered by inclusion, with element ids shuffled."""
    k = draw(st.integers(1, max_points))
    full = (1 << k) - 1
    sets = set(draw(st.lists(st.integers(0, full), max_size=max_sets)))
    sets.add(full)
    changed = True
    while changed:
        new = {a & b for a in sets for b in sets} - sets
        changed = bool(new)
        sets |= new
    elems = sorted(sets)
    perm = draw(st.permutations(range(len(elems))))
    placed = [None] * len(elems)
    for i, s in enumerate(elems):
        placed[perm[i]] = s
    arr = np.array(placed)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    return from_leq(leq)
