import random
from fractions import Fraction

import pytest

from concord.linalg import (
    bareiss_det,
    hermitian_signature,
    int_matrix_inverse,
    refine_interval,
    resultant,
    smith_normal_form,
    squarefree_part,
    sturm_chain,
    sturm_count,
    sturm_isolate,
)


def test_bareiss_small():
    assert bareiss_det([[2, 0], [0, 3]]) == 6
    assert bareiss_det([[1, 2], [3, 4]]) == -2
    assert bareiss_det([]) == 1
    assert bareiss_det([[0, 1], [1, 0]]) == -1


def test_resultant_known():
    # res(x^2 - 1, x^2 - 4) = (1-4)*(1-4)... roots +-1 vs +-2: prod (a-b) over pairs
    assert resultant([-1, 0, 1], [-4, 0, 1]) == 9
    assert resultant([-1, 1], [1, 1]) == 2  # (x-1, x+1) -> value of x+1 at 1... +/-2


def test_snf_identity_and_diag():
    dec = smith_normal_form([[1, 0], [0, 1]])
    assert dec.d == [1, 1]
    dec = smith_normal_form([[2, 0], [0, 3]])
    assert dec.d == [1, 6]


def test_snf_figure_eight_cover():
    dec = smith_normal_form([[2, 1], [1, -2]])
    assert dec.d == [1, 5]


def test_snf_zero_and_rectangular():
    dec = smith_normal_form([[0, 0], [0, 0]])
    assert dec.d == [0, 0]
    dec = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert dec.d[0] >= 1
    prod = 1
    for x in dec.invariant_factors:
        prod *= x


def test_snf_random_property():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        mat = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        dec = smith_normal_form(mat)  # internal checks assert U M W = D etc.
        for a, b in zip(dec.d, dec.d[1:]):
            if a:
                assert b % a == 0


def test_int_matrix_inverse():
    m = [[1, 1], [0, 1]]
    assert int_matrix_inverse(m) == [[1, -1], [0, 1]]
    with pytest.raises(ValueError):
        int_matrix_inverse([[2, 0], [0, 1]])


def test_hermitian_signature_basics():
    assert hermitian_signature([]) == (0, 0)
    z = (0, 0)
    assert hermitian_signature([[z, z], [z, z]]) == (0, 2)
    assert hermitian_signature([[(-4, 0), (2, 0)], [(2, 0), (-4, 0)]]) == (-2, 0)
    assert hermitian_signature([[(2, 0), (1, 0)], [(1, 0), (-2, 0)]]) == (0, 0)


def test_hermitian_signature_complex_entries():
    # [[2, i], [-i, 2]] has eigenvalues 1, 3
    m = [[(2, 0), (0, 1)], [(0, -1), (2, 0)]]
    assert hermitian_signature(m) == (2, 0)


def test_hermitian_signature_congruence_invariance():
    rng = random.Random(21)
    for _ in range(15):
        n = rng.randint(1, 4)
        # random Hermitian H = B + B^H
        B = [[(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)))
              for _ in range(n)] for _ in range(n)]
        H = [[(B[i][j][0] + B[j][i][0], B[i][j][1] - B[j][i][1])
              for j in range(n)] for i in range(n)]
        sig = hermitian_signature(H)
        # congruence by a random invertible rational P (real entries)
        while True:
            P = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
            if bareiss_det([[int(x) for x in row] for row in P]) != 0:
                break
        PH = [[sum(P[k][i] * H[k][j][0] for k in range(n)) for j in range(n)]
              for i in range(n)]
        PHim = [[sum(P[k][i] * H[k][j][1] for k in range(n)) for j in range(n)]
                for i in range(n)]
        out = [[(sum(PH[i][k] * P[k][j] for k in range(n)),
                 sum(PHim[i][k] * P[k][j] for k in range(n))) for j in range(n)]
               for i in range(n)]
        assert hermitian_signature(out)[0] == sig[0]


def test_hermitian_rejects_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_signature([[(0, 1), (0, 0)], [(0, 0), (0, 0)]])


def test_sturm_isolate_sqrt2():
    ivs = sturm_isolate([-2, 0, 1], -2, 2)
    assert len(ivs) == 2
    (a1, b1), (a2, b2) = ivs
    assert a1 < -1 < b1 or (a1 < Fraction(-3, 2) and b1 > Fraction(-3, 2))
    assert b1 < a2


def test_sturm_isolate_linear_and_endpoint_roots():
    assert len(sturm_isolate([-1, 1], -2, 2)) == 1
    # root exactly at the open endpoint is excluded
    assert sturm_isolate([-2, 1], -2, 2) == []
    assert sturm_isolate([2, 1], -2, 2) == []


def test_sturm_isolate_counts_match_scan():
    rng = random.Random(17)
    for _ in range(25):
        deg = rng.randint(1, 5)
        p = [Fraction(rng.randint(-6, 6)) for _ in range(deg)] + [Fraction(rng.randint(1, 6))]
        ivs = sturm_isolate(p, -10, 10)
        # brute-force sign scan on a fine rational grid
        sf = squarefree_part(p)
        def ev(x):
            total = Fraction(0)
            for c in reversed(sf):
                total = total * x + c
            return total
        grid = [Fraction(k, 8) for k in range(-80, 81)]
        scan = 0
        for a, b in zip(grid, grid[1:]):
            va, vb = ev(a), ev(b)
            if va == 0:
                scan += 1
            elif va * vb < 0:
                scan += 1
        if ev(grid[-1]) == 0:
            scan += 1
        if ev(grid[0]) == 0:
            scan -= 1  # excluded by open interval
        assert len(ivs) >= scan - 1  # grid may merge close roots
        for (a, b) in ivs:
            assert -10 <= a < b <= 10


def test_refine_interval_shrinks():
    p = squarefree_part([-2, 0, 1])
    chain = sturm_chain(p)
    iv = sturm_isolate([-2, 0, 1], 0, 2)[0]
    smaller = refine_interval(p, chain, iv, steps=5)
    assert smaller[1] - smaller[0] <= (iv[1] - iv[0]) / 16
    assert sturm_count(chain, smaller[0], smaller[1]) == 1
