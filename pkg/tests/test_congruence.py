import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from su2free.congruence import (
    cos_equality_lattice,
    ext_gcd,
    is_prime,
    neg_congruence,
    res_solvable,
    simple_system_trivial_only,
    solve_linear,
)
from su2free.exact import cos_turn, realpart_equal
from su2free.freeness import Simple, is_free

nonzero = st.integers(-20, 20).filter(bool)


def test_solve_linear_examples():
    lat = solve_linear(4, 6, 2)
    assert lat.base == (2, -1) and lat.steps == ((3, -2),)
    assert solve_linear(2, 4, 1) is None
    lat = solve_linear(1, 1, 0)
    assert lat.base == (0, 0) and lat.steps == ((1, -1),)


def test_printed_step_is_too_coarse():
    """With g = gcd(a, b) > 1 the step (b, -a) misses solutions; the lattice keeps them."""
    lat = solve_linear(4, 6, 2)
    x0, y0 = lat.base
    coarse = {(x0 + 6 * t, y0 - 4 * t) for t in range(-10, 11)}
    assert (5, -3) not in coarse and lat.contains(5, -3)


@given(nonzero, nonzero, st.integers(-40, 40))
def test_ext_gcd(a, b, c):
    g, u, v = ext_gcd(a, b)
    assert g == math.gcd(a, b) and a * u + b * v == g


def test_solve_linear_window_complete():
    """|a|, |b| <= 20, |c| <= 40 against brute force in |x|, |y| <= 200."""
    xs = np.arange(-200, 201)
    for a in range(-20, 21):
        if a == 0:
            continue
        for b in range(-20, 21):
            if b == 0:
                continue
            for c in range(-40, 41):
                lat = solve_linear(a, b, c)
                num = c - a * xs
                ok = num % b == 0
                ys = num[ok] // b
                inside = np.abs(ys) <= 200
                brute = set(zip(xs[ok][inside].tolist(), ys[inside].tolist()))
                if lat is None:
                    assert not brute
                    continue
                sx, _ = lat.steps[0]
                span = 400 // abs(sx) + 2
                pts = {lat.point(t) for t in range(-span - abs(lat.base[0]), span + abs(lat.base[0]) + 1)}
                assert {(x, y) for x, y in pts if abs(x) <= 200 and abs(y) <= 200} == brute


def test_neg_congruence_examples():
    assert neg_congruence(12, 5) == 2
    assert neg_congruence(9, 8) == 1
    assert neg_congruence(7, 2) == 7
    with pytest.raises(ValueError):
        neg_congruence(12, 4)


def test_neg_congruence_scan():
    for n in range(2, 201):
        for r in range(1, n):
            if math.gcd(r, n) != 1:
                continue
            n1 = neg_congruence(n, r)
            sols = [x for x in range(n) if (x + r * x) % n == 0]
            assert sols == list(range(0, n, n1))


def test_cos_equality_grid():
    rp = {n: [cos_turn(Fraction(x, n)) for x in range(n)] for n in range(2, 49)}
    for n in range(2, 49):
        for m in range(2, 49):
            fam = cos_equality_lattice(n, m)
            res = fam.residues()
            for x in range(n):
                for y in range(m):
                    eq = realpart_equal(rp[n][x], rp[m][y])
                    assert ((x, y) in res) == eq
                    assert fam.contains(x, y) == eq


def test_res_examples():
    assert res_solvable(5, 1, -0.5)
    assert res_solvable(4, 1, 0.5)
    assert not res_solvable(3, 1, 0.5)


def test_res_scan():
    half, mhalf = cos_turn(Fraction(1, 6)), cos_turn(Fraction(1, 3))
    for n in range(2, 301):
        vals = [(x % 3, cos_turn(Fraction(x, 3 * n))) for x in range(3 * n)]
        for residue in (1, 2):
            for target, value in ((0.5, half), (-0.5, mhalf)):
                brute = any(r == residue and realpart_equal(v, value) for r, v in vals)
                assert res_solvable(n, residue, target) == brute, (n, residue, target)


def test_simple_system_examples():
    assert simple_system_trivial_only(7, 2, 4)
    assert simple_system_trivial_only(5, 2, 3)
    for p in (2, 3, 5, 7, 11):
        assert not simple_system_trivial_only(p, 1, 1)


def test_simple_system_equals_oracle():
    for p in range(2, 98):
        if not is_prime(p):
            continue
        for r in range(1, p):
            for s in range(1, p):
                assert simple_system_trivial_only(p, r, s) == is_free(Simple(p, r, s))[0]
