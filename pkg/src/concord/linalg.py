"""Exact linear algebra engines.

Integer Smith normal form with unimodular transforms, exact signatures of
Hermitian matrices over the Gaussian rationals, Sturm-sequence real root
isolation with rational intervals, and a fraction-free integer determinant.
No floating point anywhere.
"""

from fractions import Fraction


# ---------------------------------------------------------------------------
# integer determinants and resultants


def bareiss_det(mat):
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(p, q):
    """Resultant of two integer coefficient lists (ascending) via Sylvester."""
    p = list(p)
    q = list(q)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    m = len(p) - 1
    n = len(q) - 1
    if m < 0 or n < 0:
        raise ValueError("zero polynomial")
    if m == 0:
        return p[0] ** n
    if n == 0:
        return q[0] ** m
    size = m + n
    rows = []
    rp = list(reversed(p))
    rq = list(reversed(q))
    for i in range(n):
        rows.append([0] * i + rp + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + rq + [0] * (m - 1 - i))
    assert all(len(r) == size for r in rows)
    return bareiss_det(rows)


# ---------------------------------------------------------------------------
# Smith normal form


class SmithDecomposition:
    """U * M * W = D with U, W unimodular and D the diagonal of invariant factors."""

    def __init__(self, d, U, W, rows, cols):
        self.d = d
        self.U = U
        self.W = W
        self.rows = rows
        self.cols = cols

    @property
    def invariant_factors(self):
        """Nonzero diagonal entries d1 | d2 | ..."""
        return [x for x in self.d if x != 0]

    def nontrivial_factors(self):
        return [x for x in self.d if x > 1]


def smith_normal_form(mat):
    """Smith normal form of an integer matrix, with transforms.

    Returns a SmithDecomposition; the diagonal is nonnegative with each
    entry dividing the next, and U*M*W = D holds exactly.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    a = [[int(x) for x in row] for row in mat]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    W = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row i -= q * row j
        for k in range(cols):
            a[i][k] -= q * a[j][k]
        for k in range(rows):
            U[i][k] -= q * U[j][k]

    def col_op(i, j, q):  # col i -= q * col j
        for r in range(rows):
            a[r][i] -= q * a[r][j]
        for r in range(cols):
            W[r][i] -= q * W[r][j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            W[r][i], W[r][j] = W[r][j], W[r][i]

    def row_negate(i):
        for k in range(cols):
            a[i][k] = -a[i][k]
        for k in range(rows):
            U[i][k] = -U[i][k]

    for s in range(min(rows, cols)):
        while True:
            # move a smallest nonzero entry of the trailing block to (s, s)
            pivot = None
            best = None
            for i in range(s, rows):
                for j in range(s, cols):
                    v = abs(a[i][j])
                    if v and (best is None or v < best):
                        best = v
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != s:
                row_swap(s, pi)
            if pj != s:
                col_swap(s, pj)
            if a[s][s] < 0:
                row_negate(s)
            # clear the edging
            dirty = False
            for i in range(s + 1, rows):
                if a[i][s]:
                    q = a[i][s] // a[s][s]
                    row_op(i, s, q)
                    if a[i][s]:
                        dirty = True
            for j in range(s + 1, cols):
                if a[s][j]:
                    q = a[s][j] // a[s][s]
                    col_op(j, s, q)
                    if a[s][j]:
                        dirty = True
            if dirty:
                continue
            # enforce divisibility into the trailing block
            offender = None
            for i in range(s + 1, rows):
                for j in range(s + 1, cols):
                    if a[i][j] % a[s][s]:
                        offender = i
                        break
                if offender:
                    break
            if offender is None:
                break
            row_op(s, offender, -1)  # add offending row to pivot row
        # next block
    d = [a[i][i] for i in range(min(rows, cols))]
    dec = SmithDecomposition(d, U, W, rows, cols)
    _check_snf(mat, dec)
    return dec


def _check_snf(mat, dec):
    rows, cols = dec.rows, dec.cols
    prod = _mat_mul_int(_mat_mul_int(dec.U, mat), dec.W)
    for i in range(rows):
        for j in range(cols):
            want = dec.d[i] if i == j and i < len(dec.d) else 0
            if prod[i][j] != want:
                raise AssertionError("SNF transform identity failed")
    for i in range(len(dec.d) - 1):
        if dec.d[i] and dec.d[i + 1] % dec.d[i]:
            raise AssertionError("SNF divisibility chain failed")
        if dec.d[i] == 0 and dec.d[i + 1] != 0:
            raise AssertionError("SNF zero ordering failed")
    if rows and abs(bareiss_det(dec.U)) != 1:
        raise AssertionError("U not unimodular")
    if cols and abs(bareiss_det(dec.W)) != 1:
        raise AssertionError("W not unimodular")


def _mat_mul_int(A, B):
    n = len(A)
    m = len(B[0]) if B else 0
    k = len(B)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            v = Ai[t]
            if v:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    row[j] += v * Bt[j]
    return out


def int_matrix_inverse(mat):
    """Exact inverse of a unimodular integer matrix (det +/- 1)."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    out = []
    for row in aug:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix is not unimodular")
        out.append([int(v) for v in vals])
    return out


# ---------------------------------------------------------------------------
# Hermitian signatures over the Gaussian rationals


def hermitian_signature(H):
    """Exact (signature, nullity) of a Hermitian Gaussian-rational matrix.

    Entries are (re, im) pairs of Fractions or ints.  The characteristic
    polynomial is computed by Faddeev-LeVerrier after clearing denominators
    (scaling by a positive rational preserves signature), and the counts of
    positive/negative eigenvalues come from Descartes' rule, which is exact
    for the real-rooted characteristic polynomial.
    """
    n = len(H)
    if n == 0:
        return 0, 0
    den = 1
    for row in H:
        for re, im in row:
            re, im = Fraction(re), Fraction(im)
            den = _lcm(den, re.denominator)
            den = _lcm(den, im.denominator)
    A = [[(int(Fraction(re) * den), int(Fraction(im) * den)) for re, im in row] for row in H]
    for i in range(n):
        for j in range(n):
            if A[i][j][0] != A[j][i][0] or A[i][j][1] != -A[j][i][1]:
                raise ValueError("matrix is not Hermitian")
    coeffs = _char_poly_gauss_int(A)
    # coeffs = [1, c1, ..., cn] for lambda^n + c1 lambda^(n-1) + ... + cn
    for c in coeffs:
        if c[1] != 0:
            raise AssertionError("characteristic polynomial not real")
    real = [c[0] for c in coeffs]
    nullity = 0
    while real and real[-1] == 0:
        real.pop()
        nullity += 1
    pos = _sign_variations(real)
    neg_poly = [v if (len(real) - 1 - i) % 2 == 0 else -v for i, v in enumerate(real)]
    neg = _sign_variations(neg_poly)
    if pos + neg + nullity != n:
        raise AssertionError("eigenvalue counts do not add up")
    return pos - neg, nullity


def _char_poly_gauss_int(A):
    """Faddeev-LeVerrier over the Gaussian integers; returns [1, c1, ..., cn]."""
    n = len(A)
    coeffs = [(1, 0)]
    M = None
    for k in range(1, n + 1):
        if M is None:
            M = [row[:] for row in A]
        else:
            # M = A * (M + c_{k-1} I)
            c = coeffs[-1]
            for i in range(n):
                M[i][i] = _gadd(M[i][i], c)
            M = _gmat_mul(A, M)
        tr = (0, 0)
        for i in range(n):
            tr = _gadd(tr, M[i][i])
        ck = (-tr[0] // k, -tr[1] // k)
        if ck[0] * k != -tr[0] or ck[1] * k != -tr[1]:
            raise AssertionError("Faddeev division not exact")
        coeffs.append(ck)
    return coeffs


def _gadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gmat_mul(A, B):
    n = len(A)
    out = [[(0, 0)] * n for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(n):
            v = Ai[t]
            if v != (0, 0):
                Bt = B[t]
                for j in range(n):
                    w = Bt[j]
                    if w != (0, 0):
                        row[j] = _gadd(row[j], _gmul(v, w))
    return out


def _sign_variations(coeffs):
    signs = [1 if v > 0 else -1 for v in coeffs if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# Sturm sequences and real root isolation


def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_eval(p, x):
    total = Fraction(0)
    for c in reversed(p):
        total = total * x + c
    return total


def _poly_deriv(p):
    return [i * c for i, c in enumerate(p)][1:]


def _poly_divmod(num, den):
    num = [Fraction(c) for c in num]
    den = _poly_trim([Fraction(c) for c in den])
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lc = den[-1]
    while _poly_trim(num) and len(_poly_trim(num)) >= len(den):
        num = _poly_trim(num)
        k = len(num) - len(den)
        c = num[-1] / lc
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    return q, _poly_trim(num)


def _poly_gcd(a, b):
    a = _poly_trim([Fraction(c) for c in a])
    b = _poly_trim([Fraction(c) for c in b])
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def squarefree_part(p):
    """p / gcd(p, p') with rational coefficients, monic-normalized gcd."""
    p = _poly_trim([Fraction(c) for c in p])
    if len(p) <= 1:
        return p
    g = _poly_gcd(p, _poly_deriv(p))
    if len(g) <= 1:
        return p
    q, r = _poly_divmod(p, g)
    assert not r
    return _poly_trim(q)


def sturm_chain(p):
    chain = [_poly_trim([Fraction(c) for c in p])]
    chain.append(_poly_trim(_poly_deriv(chain[0])))
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        chain.append([-c for c in r])
    chain.pop()
    return chain


def _chain_variations(chain, x):
    vals = [_poly_eval(q, x) for q in chain]
    return _sign_variations(vals)


def sturm_count(chain, a, b):
    """Distinct roots in (a, b] for a squarefree chain with p(a) != 0."""
    return _chain_variations(chain, a) - _chain_variations(chain, b)


def sturm_isolate(p, lo, hi):
    """Disjoint rational isolating intervals for the distinct real roots in (lo, hi).

    The squarefree part is taken internally; open-interval endpoints that
    happen to be roots are excluded by deflation.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    p = squarefree_part(p)
    if len(p) <= 1:
        return []
    for endpoint in (lo, hi):
        while _poly_eval(p, endpoint) == 0:
            q, r = _poly_divmod(p, [-endpoint, Fraction(1)])
            assert not r
            p = _poly_trim(q)
            if len(p) <= 1:
                return []
    chain = sturm_chain(p)
    total = sturm_count(chain, lo, hi)
    out = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        # keep endpoints off the roots
        while _poly_eval(p, mid) == 0:
            mid = (a + 2 * mid) / 3
        left = sturm_count(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, cnt - left))
    out.sort()
    # shrink until pairwise disjoint with strict gaps
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i][1] >= out[i + 1][0]:
                out[i] = refine_interval(p, chain, out[i])
                out[i + 1] = refine_interval(p, chain, out[i + 1])
                changed = True
    return out


def refine_interval(p, chain, interval, steps=1):
    """Halve an isolating interval (keeping exactly one root inside)."""
    a, b = interval
    for _ in range(steps):
        mid = (a + b) / 2
        while _poly_eval(p, mid) == 0:
            mid = (a + 2 * mid) / 3
        if sturm_count(chain, a, mid) == 1:
            b = mid
        else:
            a = mid
    return (a, b)
