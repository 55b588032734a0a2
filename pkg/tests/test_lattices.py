import itertools
import random

import pytest

from bdmeta import lattices as lat
from bdmeta.lattices import Sublattice


def _rand(rng, r, c, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)]


def test_snf_roundtrip_and_divisibility():
    rng = random.Random(1)
    for _ in range(300):
        A = _rand(rng, rng.randint(1, 4), rng.randint(1, 4))
        s = lat.smith_normal_form(A)
        assert lat.matmul(lat.matmul(s.U, A), s.V) == [list(r) for r in s.S]
        assert abs(lat.det(s.U)) == 1 and abs(lat.det(s.V)) == 1
        d = s.diagonal
        assert all(x >= 0 for x in d)
        assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1) if d[i])


def test_hnf_transform():
    rng = random.Random(2)
    for _ in range(100):
        A = _rand(rng, 3, 3)
        H, U = lat.hnf_with_transform(A)
        assert lat.matmul(U, A) == [list(r) for r in H]
        assert abs(lat.det(U)) == 1


def test_left_kernel():
    A = [[1, 2], [2, 4], [0, 1]]
    K = lat.left_kernel(A)
    assert K and all(lat.vecmat(k, A) == [0, 0] for k in K)


def test_intersection_of_multiples():
    assert lat.intersect(Sublattice.span([[2]], 1), Sublattice.span([[3]], 1)) == Sublattice.span([[6]], 1)


def test_quotient_invariants():
    inv = lat.quotient_invariants(Sublattice.span([[2, 0], [0, 6]], 2), Sublattice.full(2))
    assert inv.free_rank == 0 and inv.torsion == (2, 6) and inv.order == 12
    inv = lat.quotient_invariants(Sublattice.span([[1, -1]], 2), Sublattice.full(2))
    assert inv.free_rank == 1 and inv.torsion == ()


def _scaled_dual_brute(B, n, box=6):
    r = len(B)
    out = []
    for y in itertools.product(range(-box, box + 1), repeat=r):
        if all(sum(y[i] * B[i][k] for i in range(r)) % n == 0 for k in range(r)):
            out.append(list(y))
    return Sublattice.span(out, r)


@pytest.mark.parametrize("B,n", [
    ([[2, -1], [-1, 2]], 2), ([[2, -1], [-1, 2]], 3), ([[2, 1, 1], [1, 2, 1], [1, 1, 2]], 2),
    ([[2, 1, 1], [1, 2, 1], [1, 1, 2]], 4), ([[0]], 2), ([[2, -3], [-3, 6]], 3), ([[4, -2], [-2, 2]], 4),
])
def test_scaled_dual_matches_enumeration(B, n):
    assert lat.scaled_dual(Sublattice.full(len(B)), B, n) == _scaled_dual_brute(B, n)


def test_extend_hom():
    sub, amb = Sublattice.span([[2]], 1), Sublattice.full(1)
    assert lat.extend_hom(sub, amb, [1]) is None
    assert lat.extend_hom(sub, amb, [0]) == [0]
    assert lat.extend_hom(sub, amb, [4]) == [2]
    assert lat.extend_hom(sub, amb, [1], 2) is None
    assert lat.extend_hom(sub, amb, [2], 4) in ([1], [3])


def test_extend_hom_against_brute_force():
    rng = random.Random(3)
    for _ in range(60):
        gens = _rand(rng, 2, 2, -3, 3)
        sub = Sublattice.span(gens, 2)
        if sub.rank == 0:
            continue
        m = rng.choice([0, 2, 3, 4])
        phi = [rng.randint(-3, 3) for _ in sub.basis]
        got = lat.extend_hom(sub, Sublattice.full(2), phi, m)
        rng_vals = range(-8, 9) if m == 0 else range(m)
        brute = None
        for a, b in itertools.product(rng_vals, repeat=2):
            ok = all((a * v[0] + b * v[1] - p) % m == 0 if m else a * v[0] + b * v[1] == p
                     for v, p in zip(sub.basis, phi))
            if ok:
                brute = (a, b)
                break
        if got is not None:
            assert all((got[0] * v[0] + got[1] * v[1] - p) % m == 0 if m else got[0] * v[0] + got[1] * v[1] == p
                       for v, p in zip(sub.basis, phi))
        if m:
            assert (got is None) == (brute is None)
        elif brute is not None:
            assert got is not None


def test_aligned_bases():
    amb = Sublattice.full(2)
    sub = Sublattice.span([[2, 0], [1, 3]], 2)
    ys, ks = lat.aligned_bases(sub, amb)
    assert Sublattice.span([[k * c for c in y] for y, k in zip(ys, ks)], 2) == sub
    assert Sublattice.span(ys, 2) == amb
    assert sorted(ks) == [1, 6]


def test_aligned_bases_needs_finite_index():
    with pytest.raises(lat.NotFiniteIndex):
        lat.aligned_bases(Sublattice.span([[1, 0]], 2), Sublattice.full(2))


def test_coordinate_matrix_rejects_non_sublattice():
    with pytest.raises(lat.NotASublattice):
        lat.coordinate_matrix(Sublattice.full(1), Sublattice.span([[2]], 1))
