"""Exact arithmetic in the coefficient field Q(i)(s, p1, ..., p8).

Every coefficient in the library is a fraction of multivariate polynomials
with Gaussian-rational coefficients.  Variable 0 is ``s``, a fixed square
root of the deformation parameter ``q`` (so ``q = s**2`` and ``q`` is never
a number).  Variables 1..8 are free parameters ``p1`` .. ``p8``; the first
eight carry the aliases alpha, beta, gamma, delta, alpha1, alpha2, beta1,
beta2 used by the coideal families.

Equality is decided exactly by cross-multiplication.  Canonicalization
reduces by the common monomial factor, takes a full gcd when numerator and
denominator involve only ``s`` (the common case), and makes the denominator
monic under graded-lex order with ``s`` first.  Values are immutable; it is
safe to share them between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple

PARAM_NAMES = ("p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8")
PARAM_ALIASES = {
    "alpha": "p1", "beta": "p2", "gamma": "p3", "delta": "p4",
    "alpha1": "p5", "alpha2": "p6", "beta1": "p7", "beta2": "p8",
}
VAR_NAMES = ("s",) + PARAM_NAMES


class ScalarError(ArithmeticError):
    pass


class GaussQ:
    """Gaussian rational a/d + (b/d)i with integer a, b, d > 0, gcd-reduced."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=1):
        if d == 1:
            self.a = a
            self.b = b
            self.d = 1
            return
        if d == 0:
            raise ScalarError("zero denominator in Gaussian rational")
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(abs(a), abs(b)), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self.a = a
        self.b = b
        self.d = d

    @staticmethod
    def from_fraction(fr):
        return GaussQ(fr.numerator, 0, fr.denominator)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.d == 1 and self.b == 0 and self.a == other
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __add__(self, other):
        return GaussQ(self.a * other.d + other.a * self.d,
                      self.b * other.d + other.b * self.d, self.d * other.d)

    def __sub__(self, other):
        return GaussQ(self.a * other.d - other.a * self.d,
                      self.b * other.d - other.b * self.d, self.d * other.d)

    def __neg__(self):
        return GaussQ(-self.a, -self.b, self.d)

    def __mul__(self, other):
        return GaussQ(self.a * other.a - self.b * other.b,
                      self.a * other.b + self.b * other.a, self.d * other.d)

    def inv(self):
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ScalarError("division by zero")
        # 1/(a+bi) = (a-bi)*d / (a^2+b^2), with the old d moved up
        return GaussQ(self.a * self.d, -self.b * self.d, n)

    def conj(self):
        return GaussQ(self.a, -self.b, self.d)

    def __repr__(self):
        return f"GaussQ({self.a}, {self.b}, {self.d})"


GQ_ZERO = GaussQ(0)
GQ_ONE = GaussQ(1)
GQ_I = GaussQ(0, 1)

# i^t for t = 0..3
_I_POWERS = (GaussQ(1), GaussQ(0, 1), GaussQ(-1), GaussQ(0, -1))


def _trim(exps):
    exps = tuple(exps)
    while exps and exps[-1] == 0:
        exps = exps[:-1]
    return exps


def _grlex_key(exps):
    # graded-lex with s (variable 0) most significant
    return (sum(exps), exps)


class Poly:
    """Multivariate polynomial over GaussQ, sparse dict of exponent tuples."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def const(c):
        if isinstance(c, int):
            c = GaussQ(c)
        elif isinstance(c, Fraction):
            c = GaussQ.from_fraction(c)
        return Poly({(): c}) if not c.is_zero() else Poly()

    @staticmethod
    def var(index, power=1):
        exps = [0] * (index + 1)
        exps[index] = power
        return Poly({_trim(exps): GQ_ONE})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def const_value(self):
        return self.terms.get((), GQ_ZERO)

    def max_var(self):
        m = -1
        for exps in self.terms:
            if len(exps) - 1 > m:
                m = len(exps) - 1
        return m

    def __eq__(self, other):
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((e, c.a, c.b, c.d) for e, c in self.terms.items()))

    def __add__(self, other):
        res = dict(self.terms)
        for e, c in other.terms.items():
            if e in res:
                v = res[e] + c
                if v.is_zero():
                    del res[e]
                else:
                    res[e] = v
            else:
                res[e] = c
        return Poly(res)

    def __sub__(self, other):
        res = dict(self.terms)
        for e, c in other.terms.items():
            if e in res:
                v = res[e] - c
                if v.is_zero():
                    del res[e]
                else:
                    res[e] = v
            else:
                res[e] = -c
        return Poly(res)

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        res = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                n1, n2 = len(e1), len(e2)
                if n1 < n2:
                    e = tuple(e2[i] + (e1[i] if i < n1 else 0) for i in range(n2))
                else:
                    e = tuple(e1[i] + (e2[i] if i < n2 else 0) for i in range(n1))
                if e in res:
                    v = res[e] + c1 * c2
                    if v.is_zero():
                        del res[e]
                    else:
                        res[e] = v
                else:
                    v = c1 * c2
                    if not v.is_zero():
                        res[e] = v
        return Poly(res)

    def scale(self, c):
        if c.is_zero():
            return Poly()
        return Poly({e: v * c for e, v in self.terms.items()})

    def shift_down(self, mins):
        """Divide by the monomial with exponents ``mins``."""
        n = len(mins)
        res = {}
        for e, c in self.terms.items():
            res[_trim(tuple((e[i] if i < len(e) else 0) - (mins[i] if i < n else 0)
                            for i in range(max(len(e), n))))] = c
        return Poly(res)

    def monomial_mins(self):
        """Componentwise minimum exponent vector over all terms."""
        if not self.terms:
            return ()
        n = max(len(e) for e in self.terms)
        mins = [None] * n
        for e in self.terms:
            for i in range(n):
                v = e[i] if i < len(e) else 0
                if mins[i] is None or v < mins[i]:
                    mins[i] = v
        return tuple(mins)

    def lead(self):
        """(exponents, coeff) of the graded-lex leading term."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def exact_div(self, other):
        """Return self/other if the division is exact, else None."""
        if other.is_zero():
            raise ScalarError("division by zero polynomial")
        if other.is_const():
            return self.scale(other.const_value().inv())
        le, lc = other.lead()
        lcinv = lc.inv()
        rem = Poly(dict(self.terms))
        quot = {}
        nle = len(le)
        while rem.terms:
            e, c = rem.lead()
            if len(e) < nle or any(e[i] < le[i] for i in range(nle)):
                return None
            qe = _trim(tuple(e[i] - (le[i] if i < nle else 0) for i in range(len(e))))
            qc = c * lcinv
            quot[qe] = qc
            rem = rem - other * Poly({qe: qc})
        return Poly(quot)

    def subs_s_inverse(self):
        """Substitute s -> 1/s; return (poly, k) with result = poly / s^k."""
        k = max((e[0] if e else 0 for e in self.terms), default=0)
        res = {}
        for e, c in self.terms.items():
            e0 = e[0] if e else 0
            ne = (k - e0,) + tuple(e[1:])
            res[_trim(ne)] = c
        return Poly(res), k

    def conj_coeffs(self):
        return Poly({e: c.conj() for e, c in self.terms.items()})

    def subs_params(self, values):
        """Substitute some parameters (dict var-index -> Scalar); returns Scalar.

        Parameters not mentioned stay symbolic; s always stays.  The
        substitution runs variable by variable entirely on polynomials,
        normalizing only once at the end.
        """
        num = self
        den = POLY_ONE
        for idx, val in values.items():
            if num.max_var() < idx:
                continue
            top = max((e[idx] if idx < len(e) else 0) for e in num.terms)
            if top == 0:
                continue
            vn, vd = val.num, val.den
            pow_n = [POLY_ONE]
            pow_d = [POLY_ONE]
            for _ in range(top):
                pow_n.append(pow_n[-1] * vn)
                pow_d.append(pow_d[-1] * vd)
            acc = Poly()
            for e, c in num.terms.items():
                ex = e[idx] if idx < len(e) else 0
                rest = list(e)
                if idx < len(rest):
                    rest[idx] = 0
                mono = Poly({_trim(rest): c})
                acc = acc + mono * pow_n[ex] * pow_d[top - ex]
            num = acc
            den = den * pow_d[top]
        return Scalar(num, den)

    def coeffs_in_param(self, index):
        """View as a polynomial in p_index: dict {power: Poly without it}."""
        out = {}
        for e, c in self.terms.items():
            p = e[index] if index < len(e) else 0
            rest = list(e)
            if index < len(rest):
                rest[index] = 0
            key = _trim(rest)
            bucket = out.setdefault(p, {})
            if key in bucket:
                v = bucket[key] + c
                if v.is_zero():
                    del bucket[key]
                else:
                    bucket[key] = v
            else:
                bucket[key] = c
        return {p: Poly(t) for p, t in out.items() if t}

    def __repr__(self):
        return f"Poly({self.terms!r})"


POLY_ZERO = Poly()
POLY_ONE = Poly({(): GQ_ONE})


def _gcd_univar(p, q):
    """Monic gcd of two univariate-in-s polynomials over Q(i)."""
    fa = {(e[0] if e else 0): c for e, c in p.terms.items()}
    fb = {(e[0] if e else 0): c for e, c in q.terms.items()}

    def norm(f):
        if not f:
            return f
        lc = f[max(f)].inv()
        return {e: c * lc for e, c in f.items()}

    def rem(f, g):
        dg = max(g)
        lg = g[dg].inv()
        f = dict(f)
        while f and max(f) >= dg:
            df = max(f)
            c = f[df] * lg
            for e, gc in g.items():
                k = e + df - dg
                v = f.get(k, GQ_ZERO) - c * gc
                if v.is_zero():
                    f.pop(k, None)
                else:
                    f[k] = v
        return f

    a, b = norm(fa), norm(fb)
    while b:
        a, b = b, norm(rem(a, b))
    return Poly({((e,) if e else ()): c for e, c in a.items()})


class Scalar:
    """Element of Q(i)(s, p1..p8) as a canonical fraction num/den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=POLY_ONE, _normalized=False):
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return Scalar(POLY_ZERO, POLY_ONE, _normalized=True)

    @staticmethod
    def one():
        return Scalar(POLY_ONE, POLY_ONE, _normalized=True)

    @staticmethod
    def from_int(n):
        return Scalar(Poly.const(n))

    @staticmethod
    def from_fraction(fr):
        return Scalar(Poly.const(Fraction(fr)))

    @staticmethod
    def from_gauss(c):
        return Scalar(Poly({(): c}) if not c.is_zero() else POLY_ZERO)

    @staticmethod
    def i():
        return Scalar(Poly({(): GQ_I}))

    @staticmethod
    def s_power(k):
        if k >= 0:
            return Scalar(Poly.var(0, k) if k else POLY_ONE)
        return Scalar(POLY_ONE, Poly.var(0, -k))

    @staticmethod
    def q_power(k):
        return Scalar.s_power(2 * k)

    @staticmethod
    def param(index, power=1):
        # index 1..8
        if power >= 0:
            return Scalar(Poly.var(index, power) if power else POLY_ONE)
        return Scalar(POLY_ONE, Poly.var(index, -power))

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _promote(other)
        if self.num == other.num and self.den == other.den:
            return True
        return (self.num * other.den - other.num * self.den).is_zero()

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        other = _promote(other)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _promote(other)
        if self.den == other.den:
            return Scalar(self.num - other.num, self.den)
        return Scalar(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __rsub__(self, other):
        return _promote(other) - self

    def __neg__(self):
        return Scalar(-self.num, self.den, _normalized=True)

    def __mul__(self, other):
        other = _promote(other)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _promote(other)
        if other.num.is_zero():
            raise ScalarError("division by zero scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _promote(other) / self

    def inv(self):
        if self.num.is_zero():
            raise ScalarError("inverse of zero scalar")
        return Scalar(self.den, self.num)

    def __pow__(self, n):
        if n == 0:
            return Scalar.one()
        if n < 0:
            return self.inv() ** (-n)
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def subs_params(self, values):
        """Substitute parameters.  ``values`` maps p-index (1..8) -> Scalar."""
        num = self.num.subs_params(values)
        den = self.den.subs_params(values)
        return num / den

    def max_param(self):
        return max(self.num.max_var(), self.den.max_var())

    def __repr__(self):
        from .exprs import format_scalar
        return format_scalar(self)


def _promote(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as a scalar")


def _normalize(num, den):
    if den.is_zero():
        raise ScalarError("zero denominator")
    if num.is_zero():
        return POLY_ZERO, POLY_ONE
    # common monomial factor
    mn, md = num.monomial_mins(), den.monomial_mins()
    k = max(len(mn), len(md))
    if k:
        mins = tuple(min(mn[i] if i < len(mn) else 0,
                         md[i] if i < len(md) else 0) for i in range(k))
        if any(mins):
            num = num.shift_down(mins)
            den = den.shift_down(mins)
    if not den.is_const():
        if num.max_var() <= 0 and den.max_var() <= 0:
            g = _gcd_univar(num, den)
            if not g.is_const():
                num = num.exact_div(g)
                den = den.exact_div(g)
        else:
            q = num.exact_div(den)
            if q is not None:
                num, den = q, POLY_ONE
    # monic denominator under graded-lex
    _, lc = den.lead()
    if not (lc.a == 1 and lc.b == 0 and lc.d == 1):
        inv = lc.inv()
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


# -- the q-world ----------------------------------------------------------

def qnum(k: int) -> Scalar:
    """The symmetric q-integer (q^k - q^-k)/(q - q^-1)."""
    if k == 0:
        return Scalar.zero()
    sign = 1 if k > 0 else -1
    k = abs(k)
    out = Scalar.zero()
    for j in range(k):
        out = out + Scalar.s_power(2 * (k - 1 - 2 * j))
    return out if sign > 0 else -out


def qfact(k: int) -> Scalar:
    """The q-factorial [k]! = [k][k-1]...[1]."""
    if k < 0:
        raise ScalarError("q-factorial of a negative integer")
    out = Scalar.one()
    for m in range(2, k + 1):
        out = out * qnum(m)
    return out


def _sqrt_fraction(fr):
    """Exact square root of a nonnegative rational, or None."""
    from math import isqrt
    if fr < 0:
        return None
    n, d = fr.numerator, fr.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def _sqrt_gauss(c: GaussQ):
    """Exact square root of a Gaussian rational inside Q(i), or None."""
    a = Fraction(c.a, c.d)
    b = Fraction(c.b, c.d)
    if b == 0:
        r = _sqrt_fraction(a)
        if r is not None:
            return GaussQ(r.numerator, 0, r.denominator)
        r = _sqrt_fraction(-a)
        if r is not None:
            return GaussQ(0, r.numerator, r.denominator)
        return None
    t = _sqrt_fraction(a * a + b * b)
    if t is None:
        return None
    cc = _sqrt_fraction((a + t) / 2)
    if cc is None or cc == 0:
        return None
    dd = b / (2 * cc)
    num_c, num_d = cc, dd
    den = num_c.denominator * num_d.denominator
    return GaussQ(num_c.numerator * num_d.denominator,
                  num_d.numerator * num_c.denominator, den)


def _sqrt_poly(p: Poly):
    """Exact square root of a univariate-in-s polynomial, or None."""
    if p.is_zero():
        return Poly()
    if p.max_var() > 0:
        return None
    coeffs = {(e[0] if e else 0): c for e, c in p.terms.items()}
    deg = max(coeffs)
    low = min(coeffs)
    if deg % 2 or low % 2:
        return None
    lead = _sqrt_gauss(coeffs[deg])
    if lead is None:
        return None
    half = deg // 2
    root = {half: lead}
    lead2inv = (lead + lead).inv()
    for k in range(half - 1, low // 2 - 1, -1):
        # match the coefficient of s^(half+k): pairs e1 <= e2 with e1+e2 there
        target = half + k
        acc = coeffs.get(target, GQ_ZERO)
        for e1 in list(root):
            e2 = target - e1
            if e2 in root:
                if e1 < e2:
                    acc = acc - (root[e1] * root[e2] + root[e1] * root[e2])
                elif e1 == e2:
                    acc = acc - root[e1] * root[e2]
        c = acc * lead2inv
        if not c.is_zero():
            root[k] = c
    cand = Poly({((e,) if e else ()): c for e, c in root.items() if not c.is_zero()})
    if (cand * cand) == p:
        return cand
    return None


def scalar_sqrt(x: Scalar):
    """Exact square root inside Q(i)(s) when one exists, else None."""
    if x.is_zero():
        return Scalar.zero()
    if x.max_param() > 0:
        return None
    p = x.num * x.den
    r = _sqrt_poly(p)
    if r is None:
        return None
    return Scalar(r, x.den)


# -- real forms and conjugation -------------------------------------------

class RealForm:
    """The three real forms: su2 and su11 keep q real, slr has |q| = 1."""

    SU2 = "su2"
    SU11 = "su11"
    SLR = "slr"
    ALL = ("su2", "su11", "slr")


def conjugate(x: Scalar, form: str) -> Scalar:
    """Complex conjugation of a scalar under the given real form.

    For the q-real forms (su2, su11) this fixes s and sends i to -i; for the
    |q| = 1 form (slr) it additionally sends s to 1/s.  Free parameters are
    taken to be real, hence fixed.
    """
    num = x.num.conj_coeffs()
    den = x.den.conj_coeffs()
    if form == RealForm.SLR:
        num, a = num.subs_s_inverse()
        den, b = den.subs_s_inverse()
        if a >= b:
            den = den * Poly.var(0, a - b) if a > b else den
        else:
            num = num * Poly.var(0, b - a)
        return Scalar(num, den)
    return Scalar(num, den)


# -- group-like labels ----------------------------------------------------

class GroupLabel(NamedTuple):
    """Label of a group-like element: mu = i^t * s^k with t mod 4, k in Z."""

    t: int
    k: int

    @staticmethod
    def one():
        return GroupLabel(0, 0)

    @staticmethod
    def of_q(n):
        """mu = q^n."""
        return GroupLabel(0, 2 * n)

    def __mul__(self, other):
        return GroupLabel((self.t + other.t) % 4, self.k + other.k)

    def inverse(self):
        return GroupLabel((-self.t) % 4, -self.k)

    def power(self, m):
        return GroupLabel((self.t * m) % 4, self.k * m)

    def is_one(self):
        return self.t % 4 == 0 and self.k == 0

    def as_scalar(self, m=1) -> Scalar:
        """The value mu^m as an exact scalar."""
        c = _I_POWERS[(self.t * m) % 4]
        return Scalar.from_gauss(c) * Scalar.s_power(self.k * m)

    def conj_label(self, form):
        """Label of the star of the group-like f_mu under the given form."""
        if form == RealForm.SLR:
            # f_mu* = f_{conj(mu)^-1}; with |s| = 1 this is mu itself
            return self
        # q real: f_mu* = f_{conj(mu)}; s real, i -> -i
        return GroupLabel((-self.t) % 4, self.k)


LABEL_ONE = GroupLabel(0, 0)
LABEL_EPS_MINUS = GroupLabel(2, 0)
LABEL_K = GroupLabel(0, 1)
