"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are represented as coefficient tuples over the power basis
1, z, ..., z^(d-1) where d = deg Phi_n and z is a primitive n-th root of
unity.  All coefficients are Fractions, so every operation is exact.
The degenerate cases n = 1, 2 give Q itself (z = 1 and z = -1).
"""

from fractions import Fraction
from functools import lru_cache


def _poly_divmod_int(num, den):
    """Exact division of integer coefficient lists (ascending), den monic."""
    num = list(num)
    d = len(den) - 1
    q = [0] * max(len(num) - d, 1)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q[i - d] = c
        for k in range(d + 1):
            num[i - d + k] -= c * den[k]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, ascending, as a tuple of ints."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            if any(rem[k] for k in range(len(rem))):
                raise AssertionError("cyclotomic division not exact")
    return tuple(poly)


class CyclotomicField:
    """The field Q(zeta_n) with exact rational-vector elements."""

    def __init__(self, n):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # z^m expressed in the power basis, for m = 0..n-1
        pows = []
        cur = [Fraction(1)] + [Fraction(0)] * (d - 1)
        for _ in range(n):
            pows.append(tuple(cur))
            cur = self._mul_by_z(cur)
        self._zpow = pows
        self.zero = tuple([Fraction(0)] * d)
        self.one = tuple([Fraction(1)] + [Fraction(0)] * (d - 1))

    def _mul_by_z(self, vec):
        d = self.degree
        out = [Fraction(0)] * d
        for i in range(d - 1):
            out[i + 1] = vec[i]
        top = vec[d - 1]
        if top:
            # z^d = -(m_0 + m_1 z + ... + m_{d-1} z^{d-1}) for monic modulus
            for i in range(d):
                out[i] -= top * self.modulus[i]
        return out

    def zeta(self, k=1):
        return self._zpow[k % self.n]

    def from_rational(self, a):
        v = [Fraction(0)] * self.degree
        v[0] = Fraction(a)
        return tuple(v)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scalar_mul(self, c, a):
        c = Fraction(c)
        return tuple(c * x for x in a)

    def mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        # reduce powers >= d using the z^m tables
        out = list(prod[:d]) + [Fraction(0)] * max(0, d - len(prod))
        for m in range(d, 2 * d - 1):
            c = prod[m]
            if c:
                zp = self._zpow[m % self.n]
                for i in range(d):
                    out[i] += c * zp[i]
        return tuple(out)

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def equal(self, a, b):
        return all(x == y for x, y in zip(a, b))

    def inv(self, a):
        """Inverse via extended Euclid against the modulus over Q[x]."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        # r0 = modulus, r1 = a ; track s with s*a = r (mod modulus)
        r0 = [Fraction(c) for c in self.modulus]
        r1 = list(a)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        s0 = [Fraction(0)]
        s1 = [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _frac_poly_divmod(r0, r1)
            s = _frac_poly_sub(s0, _frac_poly_mul(q, s1))
            r0, r1 = r1, r
            s0, s1 = s1, s
        # r0 is now a nonzero constant gcd
        c = r0[0]
        inv = [x / c for x in s0]
        inv = inv[: self.degree] + [Fraction(0)] * max(0, self.degree - len(inv))
        # s0 may have degree >= d only if inputs were unreduced; reduce defensively
        out = tuple(inv[: self.degree])
        check = self.mul(out, a)
        if not self.equal(check, self.one):
            raise AssertionError("cyclotomic inverse failed")
        return out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def galois(self, a, j):
        """Apply z -> z^j; requires gcd(j, n) = 1 for a field automorphism."""
        out = [Fraction(0)] * self.degree
        for k, c in enumerate(a):
            if c:
                zp = self._zpow[(j * k) % self.n]
                for i in range(self.degree):
                    out[i] += c * zp[i]
        return tuple(out)

    def conj(self, a):
        """Complex conjugation z -> z^(-1)."""
        return self.galois(a, self.n - 1 if self.n > 1 else 1)

    def is_rational(self, a):
        return all(x == 0 for x in a[1:])

    def to_rational(self, a):
        if not self.is_rational(a):
            raise ValueError("element is not rational")
        return a[0]

    def norm(self, a):
        """Field norm to Q: product of all Galois conjugates."""
        prod = self.one
        for j in range(1, self.n + 1):
            if _gcd(j, self.n) == 1:
                prod = self.mul(prod, self.galois(a, j))
        return self.to_rational(prod)

    def repr_element(self, a):
        terms = []
        for k, c in enumerate(a):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*z" if abs(c) != 1 else ("z" if c > 0 else "-z"))
            else:
                terms.append(f"{c}*z^{k}" if abs(c) != 1 else (f"z^{k}" if c > 0 else f"-z^{k}"))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _frac_poly_divmod(num, den):
    num = list(num)
    den = list(den)
    while len(den) > 1 and den[-1] == 0:
        den.pop()
    dn = len(den) - 1
    lc = den[-1]
    q = [Fraction(0)] * max(len(num) - dn, 1)
    while len(num) - 1 >= dn and any(num):
        if num[-1] == 0:
            num.pop()
            continue
        k = len(num) - 1 - dn
        c = num[-1] / lc
        q[k] = c
        for i in range(dn + 1):
            num[k + i] -= c * den[i]
        num.pop()
    if not num:
        num = [Fraction(0)]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
