"""Cross-checks between the compiled and pure-Python kernel lanes."""

import itertools
import random

import numpy as np
import pytest

from resolvekit import _pykernels
from resolvekit.graph import all_pairs_distances
from resolvekit.solvers import last_diff_matrix

from util import random_connected_graph

ck = pytest.importorskip("resolvekit._ckernels")


def _random_instance(seed, max_n=9):
    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(2, max_n))
    return rng, g, all_pairs_distances(g)


@pytest.mark.parametrize("seed", range(10))
def test_bfs_all_pairs_agree(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(1, 12))
    nbrs = [list(b) for b in g.adjacency]
    assert np.array_equal(ck.bfs_all_pairs(nbrs), _pykernels.bfs_all_pairs(nbrs))


def test_bfs_disconnected_marks_unreachable():
    nbrs = [[1], [0], []]
    for impl in (ck, _pykernels):
        d = impl.bfs_all_pairs(nbrs)
        assert d[0, 2] == -1 and d[2, 0] == -1 and d[0, 1] == 1


@pytest.mark.parametrize("seed", range(12))
def test_set_resolves_agree(seed):
    rng, g, dm = _random_instance(seed)
    for k in range(0, min(g.n, 4) + 1):
        for cols in itertools.combinations(range(g.n), k):
            assert ck.set_resolves(dm.d, cols) == _pykernels.set_resolves(dm.d, cols)


@pytest.mark.parametrize("seed", range(12))
def test_search_pd_agree(seed):
    rng, g, dm = _random_instance(seed, max_n=8)
    ld = last_diff_matrix(dm.d)
    for t in range(1, g.n + 1):
        a1, _ = ck.search_pd(dm.d, t, ld)
        a2, _ = _pykernels.search_pd(dm.d, t, ld)
        assert a1 == a2


@pytest.mark.parametrize("seed", range(6))
def test_search_pd_prefix_split_covers_space(seed):
    rng, g, dm = _random_instance(seed, max_n=7)
    ld = last_diff_matrix(dm.d)
    for t in range(2, g.n + 1):
        whole, _ = ck.search_pd(dm.d, t, ld)
        split = None
        for c1 in range(min(2, t)):
            found, _ = ck.search_pd(dm.d, t, ld, (0, c1))
            if found is not None:
                split = found
                break
        if g.n >= 2:
            assert whole == split
