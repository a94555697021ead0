import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from su2free import _kernels_py as pure
from su2free import kernels

compiled = pytest.importorskip("su2free._kernels")

ids = st.lists(st.integers(0, 6), min_size=0, max_size=25).map(lambda xs: np.array(xs, dtype=np.int64))


def _tuple(x):
    return tuple(int(v) for v in x) if isinstance(x, tuple) else int(x)


@given(ids, ids, ids, st.integers(0, 6))
def test_scan_product_agrees(a, b, c, one):
    got = _tuple(compiled.scan_product(a, b, c, one))
    assert got == _tuple(pure.scan_product(a, b, c, one))
    if got[0] >= 0:
        assert a[got[0]] == b[got[1]] == c[got[2]] != one
    else:
        common = set(a.tolist()) & set(b.tolist()) & set(c.tolist())
        assert common <= {one}


@given(st.integers(0, 25).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 4), min_size=n, max_size=n),
    st.lists(st.integers(0, 4), min_size=n, max_size=n))), ids, st.integers(0, 4))
def test_scan_pairs_agrees(pairs, d, one):
    pa, pb = (np.array(x, dtype=np.int64) for x in pairs)
    assert _tuple(compiled.scan_pairs(pa, pb, d, one)) == _tuple(pure.scan_pairs(pa, pb, d, one))


@given(st.integers(0, 25).flatmap(lambda n: st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), min_size=n, max_size=n)), st.integers(0, 3))
def test_scan_triples_agrees(rows, one):
    arr = np.array(rows, dtype=np.int64).reshape(-1, 3)
    cols = [np.ascontiguousarray(arr[:, t]) for t in range(3)]
    assert int(compiled.scan_triples(*cols, one)) == int(pure.scan_triples(*cols, one))


@given(st.lists(st.integers(0, 5), max_size=20), st.lists(st.integers(0, 5), max_size=20))
def test_fiber_pairs_agrees(fa, fb):
    a, b = np.array(fa, dtype=np.int64), np.array(fb, dtype=np.int64)
    ca, cb = compiled.fiber_pairs(a, b, 6)
    pa, pb = pure.fiber_pairs(a, b, 6)
    assert np.array_equal(np.asarray(ca), pa) and np.array_equal(np.asarray(cb), pb)
    assert sorted(zip(pa.tolist(), pb.tolist())) == [(i, j) for i in range(len(fa)) for j in range(len(fb))
                                                     if fa[i] == fb[j]]


def test_compiled_backend_selected_by_default():
    assert kernels.BACKEND == "cython"


def test_pure_backend_forced_by_environment():
    code = "import su2free.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, SU2FREE_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
