"""Exact Laurent polynomial algebra over the rationals.

Provides the LaurentPoly value type (finite exponent -> Fraction maps in
canonical trimmed form), unit normalization, factorization into rational
irreducibles, the Fox-Milnor factorization test, and exact evaluation at
roots of unity.
"""

from fractions import Fraction

import sympy

from .cyclotomic import CyclotomicField


class LaurentPoly:
    """Immutable Laurent polynomial with exact rational coefficients.

    Canonical form keeps only nonzero coefficients; the zero polynomial
    is the empty map.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v != 0:
                    c[int(e)] = v
        object.__setattr__(self, "c", c)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def t(k=1, coeff=1):
        return LaurentPoly({k: coeff})

    @staticmethod
    def from_coeffs(coeffs, shift=0):
        """Build from an ascending coefficient list starting at exponent `shift`."""
        return LaurentPoly({shift + i: v for i, v in enumerate(coeffs)})

    # -- basic structure ---------------------------------------------------

    def is_zero(self):
        return not self.c

    @property
    def min_exp(self):
        return min(self.c) if self.c else 0

    @property
    def max_exp(self):
        return max(self.c) if self.c else 0

    @property
    def span(self):
        return self.max_exp - self.min_exp if self.c else 0

    def coeff(self, e):
        return self.c.get(e, Fraction(0))

    def coeff_list(self):
        """Ascending coefficients from min_exp to max_exp (empty for zero)."""
        if not self.c:
            return []
        lo, hi = self.min_exp, self.max_exp
        return [self.c.get(e, Fraction(0)) for e in range(lo, hi + 1)]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self.c)
        for e, v in other.c.items():
            c[e] = c.get(e, Fraction(0)) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                c[e] = c.get(e, Fraction(0)) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers only for units")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __call__(self, x):
        x = Fraction(x)
        total = Fraction(0)
        for e, v in self.c.items():
            total += v * x ** e
        return total

    # -- shifts and conjugates --------------------------------------------

    def shift(self, k):
        return LaurentPoly({e + k: v for e, v in self.c.items()})

    def reciprocal_conjugate(self):
        """f(1/t), renormalized to lowest exponent 0."""
        flipped = {-e: v for e, v in self.c.items()}
        lo = min(flipped) if flipped else 0
        return LaurentPoly({e - lo: v for e, v in flipped.items()})

    def poly_part(self):
        """(ascending integer-exponent coefficient list, shift) with list[0] != 0."""
        if not self.c:
            return [], 0
        lo = self.min_exp
        return self.coeff_list(), lo

    def is_symmetric(self):
        """True when f(1/t) equals +/- t^k f(t)."""
        if self.is_zero():
            return True
        lo, hi = self.min_exp, self.max_exp
        sign = None
        for e, v in self.c.items():
            w = self.c.get(lo + hi - e)
            if w is None:
                return False
            s = 1 if v == w else (-1 if v == -w else None)
            if s is None:
                return False
            if sign is None:
                sign = s
            elif sign != s:
                return False
        return True

    def equals_up_to_unit(self, other):
        """True when self = +/- t^k * other."""
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        a = self.coeff_list()
        b = other.coeff_list()
        if len(a) != len(b):
            return False
        return a == b or a == [-x for x in b]

    def content_and_primitive(self):
        """Positive rational content c and primitive integer part p, self = c * t^lo * p."""
        if self.is_zero():
            return Fraction(0), LaurentPoly.zero()
        coeffs = self.coeff_list()
        from math import gcd
        num_gcd = 0
        den_lcm = 1
        for v in coeffs:
            num_gcd = gcd(num_gcd, abs(v.numerator))
            den_lcm = den_lcm * v.denominator // gcd(den_lcm, v.denominator)
        content = Fraction(num_gcd, den_lcm)
        prim = [v / content for v in coeffs]
        return content, LaurentPoly({i: v for i, v in enumerate(prim)})

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.c:
            return "0"
        terms = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                term = str(v)
            elif e == 1:
                term = "t" if v == 1 else ("-t" if v == -1 else f"{v}*t")
            else:
                term = (
                    f"t^{e}" if v == 1 else (f"-t^{e}" if v == -1 else f"{v}*t^{e}")
                )
            terms.append(term)
        out = terms[0]
        for term in terms[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly({0: x})


def parse_poly(text):
    """Parse the canonical string form back into a LaurentPoly."""
    text = text.strip().replace("- ", "+ -").replace("**", "^")
    if text == "0":
        return LaurentPoly.zero()
    total = {}
    for raw in text.split("+"):
        term = raw.strip().replace(" ", "")
        if not term:
            continue
        if "t" in term:
            head, _, tail = term.partition("t")
            coeff = head.rstrip("*")
            if coeff in ("", "-"):
                coeff += "1"
            exp = 1
            if tail.startswith("^"):
                exp = int(tail[1:])
            elif tail:
                raise ValueError(f"bad term {raw!r}")
            e, v = exp, Fraction(coeff)
        else:
            e, v = 0, Fraction(term)
        total[e] = total.get(e, Fraction(0)) + v
    return LaurentPoly(total)


class Factorization:
    """Unit * content * product of primitive integer irreducibles."""

    def __init__(self, sign, t_exp, content, factors):
        self.sign = sign
        self.t_exp = t_exp
        self.content = content
        self.factors = factors  # list of (LaurentPoly, multiplicity)

    def rebuild(self):
        out = LaurentPoly({self.t_exp: self.sign * self.content})
        for f, m in self.factors:
            out = out * f ** m
        return out

    def __repr__(self):
        unit = f"{'-' if self.sign < 0 else ''}{self.content}*t^{self.t_exp}"
        fs = " * ".join(f"({f})^{m}" for f, m in self.factors)
        return f"{unit}" + (f" * {fs}" if fs else "")


def factor_over_rationals(f):
    """Complete factorization of f into rational irreducibles.

    The unit is sign * content * t^k; factors are primitive integer
    polynomials with positive leading coefficient, in a deterministic
    order, and the product reconstructs f exactly.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    content, prim = f.content_and_primitive()
    t_exp = f.min_exp
    x = sympy.Symbol("x")
    expr = sympy.Poly([int(v) for v in reversed(prim.coeff_list())], x, domain="QQ")
    const, factor_list = expr.factor_list()
    sign = 1
    const = Fraction(int(const.p), int(const.q)) if hasattr(const, "p") else Fraction(int(const))
    factors = []
    for poly, mult in factor_list:
        coeffs = [Fraction(int(c.p), int(c.q)) if hasattr(c, "p") else Fraction(int(c))
                  for c in reversed(poly.all_coeffs())]
        g = LaurentPoly({i: v for i, v in enumerate(coeffs)})
        gc, gp = g.content_and_primitive()
        if gp.coeff(gp.max_exp) < 0:
            gp = -gp
            gc = -gc
        const *= gc ** mult
        factors.append((gp, mult))
    if const < 0:
        sign = -1
        const = -const
    if const != 1:
        # fold any residual rational into the content
        content *= const
    factors.sort(key=lambda fm: (fm[0].span, fm[0].coeff_list()))
    result = Factorization(sign, t_exp, content, factors)
    if result.rebuild() != f:
        raise AssertionError("factorization does not rebuild input")
    return result


class FoxMilnorResult:
    def __init__(self, passes, witness):
        self.passes = passes
        self.witness = witness

    def __bool__(self):
        return self.passes


def fox_milnor_test(delta):
    """Decide whether delta = f(t) f(1/t) up to units +/- t^k.

    Requires a symmetric input with delta(1) = +/- 1.  On success the
    witness f is returned and f * reciprocal_conjugate(f) rebuilds delta
    up to a unit.
    """
    if delta.is_zero():
        raise ValueError("zero polynomial")
    if not delta.is_symmetric():
        raise ValueError("Fox-Milnor test requires a symmetric polynomial")
    if abs(delta(1)) != 1:
        raise ValueError("Fox-Milnor test requires |delta(1)| = 1")
    fact = factor_over_rationals(delta)
    remaining = {}
    keys = {}
    for g, m in fact.factors:
        key = tuple(g.coeff_list())
        remaining[key] = m
        keys[key] = g
    witness = LaurentPoly.one()
    for key in sorted(keys):
        g = keys[key]
        m = remaining[key]
        if m == 0:
            continue
        grec = g.reciprocal_conjugate()
        if grec.coeff(grec.max_exp) < 0:
            grec = -grec
        rkey = tuple(grec.coeff_list())
        if rkey == key:
            if m % 2:
                return FoxMilnorResult(False, None)
            witness = witness * g ** (m // 2)
            remaining[key] = 0
        else:
            if remaining.get(rkey, 0) != m:
                return FoxMilnorResult(False, None)
            witness = witness * g ** m
            remaining[key] = 0
            remaining[rkey] = 0
    check = witness * witness.reciprocal_conjugate()
    if not check.equals_up_to_unit(delta):
        raise AssertionError("Fox-Milnor witness does not rebuild input")
    return FoxMilnorResult(True, witness)


def evaluate_at_root_of_unity(f, q, j):
    """Exact value of f(zeta_q^j) as an element of Q(zeta_q).

    Returns (field, element).  Requires 0 < j < q.
    """
    if not 0 < j < q:
        raise ValueError("need 0 < j < q")
    field = CyclotomicField(q)
    total = field.zero
    for e, v in f.c.items():
        term = field.scalar_mul(v, field.zeta((j * e) % q))
        total = field.add(total, term)
    return field, total
