import numpy as np
import pytest

from clarkit.errors import SpiralDoesNotClose
from clarkit.spiral import (
    DualGraph,
    canonical_spiral,
    enumerate_spirals_py,
    unwind,
    wind_up,
)

KNOWN_COUNTS = {20: 1, 22: 0, 24: 1, 26: 1, 28: 2, 30: 3, 32: 6}


def test_windup_dodecahedron():
    tri = wind_up([5] * 12)
    assert len(tri.triangles) == 20
    assert sorted(len(s) for s in tri.adjacency_sets()) == [5] * 12
    third = tri.third_map()
    assert len(third) == 30
    assert all(len(v) == 2 for v in third.values())


def test_windup_c60():
    pos = {1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32}
    seq = tuple(5 if i + 1 in pos else 6 for i in range(32))
    tri = wind_up(seq)
    assert len(tri.triangles) == 60
    sizes = sorted(len(s) for s in tri.adjacency_sets())
    assert sizes == [5] * 12 + [6] * 20


def test_windup_failure_has_specific_error():
    # no 22-vertex fullerene exists: every 13-face sequence fails
    with pytest.raises(SpiralDoesNotClose):
        wind_up((5,) * 12 + (6,))
    with pytest.raises(SpiralDoesNotClose):
        wind_up((6,) + (5,) * 12)


def test_canonical_spiral_dodecahedron():
    tri = wind_up([5] * 12)
    assert canonical_spiral(DualGraph.from_triangulation(tri)) == (5,) * 12


def test_canonical_spiral_idempotent_on_c60():
    pos = {1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32}
    seq = tuple(5 if i + 1 in pos else 6 for i in range(32))
    dual = DualGraph.from_triangulation(wind_up(seq))
    assert canonical_spiral(dual) == seq


def test_unwind_failed_start_returns_no_sequence():
    tri = wind_up([5] * 12)
    dual = DualGraph.from_triangulation(tri)
    ok = 0
    for f1 in range(12):
        for f2 in dual.adj[f1]:
            for sense in (0, 1):
                _, seq = unwind(dual, f1, f2, sense)
                if seq is not None:
                    assert seq == (5,) * 12
                    ok += 1
    assert ok > 0


@pytest.mark.parametrize("n", sorted(KNOWN_COUNTS))
def test_python_enumeration_matches_census(n):
    got = list(enumerate_spirals_py(n // 2 + 2))
    assert len(got) == KNOWN_COUNTS[n]
    assert got == sorted(got)


@pytest.mark.parametrize("n", (20, 24, 26, 28, 30, 32))
def test_kernel_matches_python_enumeration(n):
    from clarkit._spiral_kernel import enumerate_spirals

    nf = n // 2 + 2
    out = np.zeros((64, nf), np.int8)
    k = enumerate_spirals(nf, 12, np.zeros(0, np.int8), out)
    got = [tuple(int(x) for x in out[i]) for i in range(k)]
    assert got == list(enumerate_spirals_py(nf))


def test_kernel_prefix_partition_is_complete():
    from clarkit._spiral_kernel import enumerate_spirals

    nf = 16  # n = 28
    whole = np.zeros((64, nf), np.int8)
    k = enumerate_spirals(nf, 12, np.zeros(0, np.int8), whole)
    ref = sorted(tuple(int(x) for x in whole[i]) for i in range(k))
    parts = []
    for first in (5, 6):
        out = np.zeros((64, nf), np.int8)
        kk = enumerate_spirals(nf, 12, np.array([first], np.int8), out)
        parts.extend(tuple(int(x) for x in out[i]) for i in range(kk))
    assert sorted(parts) == ref
