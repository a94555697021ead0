"""Pure-Python kernels; same contracts as the compiled ``_kernels`` module.

All inputs are 1-d integer arrays of real-part ids.  ``one`` is the id of
the real part 1, which only the identity quaternion has.
"""

import numpy as np


def scan_product(r1, r2, r3, one):
    """First (i, j, k) with r1[i] == r2[j] == r3[k] != one, else (-1, -1, -1)."""
    a, b, c = list(map(int, r1)), list(map(int, r2)), list(map(int, r3))
    for i, v in enumerate(a):
        if v == one:
            continue
        for j, w in enumerate(b):
            if w != v:
                continue
            for k, x in enumerate(c):
                if x == v:
                    return i, j, k
    return -1, -1, -1


def scan_pairs(pa, pb, rd, one):
    """First (i, k) with pa[i] == pb[i] == rd[k] != one, else (-1, -1)."""
    a, b, d = list(map(int, pa)), list(map(int, pb)), list(map(int, rd))
    for i in range(len(a)):
        v = a[i]
        if v == one or b[i] != v:
            continue
        for k, x in enumerate(d):
            if x == v:
                return i, k
    return -1, -1


def scan_triples(ra, rb, rc, one):
    """First i with ra[i] == rb[i] == rc[i] != one, else -1."""
    for i, (x, y, z) in enumerate(zip(map(int, ra), map(int, rb), map(int, rc))):
        if x != one and x == y and y == z:
            return i
    return -1


def fiber_pairs(fa, fb, nf):
    """All (i, j) with fa[i] == fb[j], ordered by i then j."""
    buckets = [[] for _ in range(nf)]
    for j, v in enumerate(map(int, fb)):
        buckets[v].append(j)
    ia, ib = [], []
    for i, v in enumerate(map(int, fa)):
        for j in buckets[v]:
            ia.append(i)
            ib.append(j)
    return np.array(ia, dtype=np.int64), np.array(ib, dtype=np.int64)
