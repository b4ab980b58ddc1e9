"""The quantum coordinate algebra of 2x2 quantum matrices with determinant 1.

Generators a = u11, b = u12, c = u21, d = u22 with the relations

    ab = q ba,  ac = q ca,  bc = cb,  bd = q db,  cd = q dc,
    ad - da = (q - q^-1) bc,  ad - q bc = 1.

The convention is pinned by the dual pairing against the generator matrices
of the dual algebra: the pairing-compatibility test in the suite fails if
any relation is altered.  Normal-form monomials are a^i b^j c^k or
b^j c^k d^l.  The pairing is computed on raw generator words by recursion
through the dual coproduct, so it never consults these relations.
"""

from __future__ import annotations

from typing import NamedTuple

from .scalars import Scalar
from . import uq
from .uq import UElement, UMonomial


class OMonomial(NamedTuple):
    """Normal-form monomial a^ea b^eb c^ec d^ed with ea*ed = 0."""

    ea: int
    eb: int
    ec: int
    ed: int

    def word(self):
        return ("a",) * self.ea + ("b",) * self.eb + ("c",) * self.ec \
            + ("d",) * self.ed

    def degree(self):
        return self.ea + self.eb + self.ec + self.ed

    def order_key(self):
        return (self.degree(), self.ea, self.eb, self.ec, self.ed)


O_ONE = OMonomial(0, 0, 0, 0)


def omono_key(m: OMonomial):
    return m.order_key()


class OElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero():
        return OElement()

    @staticmethod
    def monomial(m, coeff=None):
        coeff = Scalar.one() if coeff is None else coeff
        return OElement({m: coeff}) if not coeff.is_zero() else OElement()

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = OElement.monomial(O_ONE, Scalar.from_int(other)) \
                if other else OElement()
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[m] for m, c in self.terms.items())

    def __add__(self, other):
        res = dict(self.terms)
        for m, c in other.terms.items():
            if m in res:
                v = res[m] + c
                if v.is_zero():
                    del res[m]
                else:
                    res[m] = v
            else:
                res[m] = c
        return OElement(res)

    def __sub__(self, other):
        res = dict(self.terms)
        for m, c in other.terms.items():
            if m in res:
                v = res[m] - c
                if v.is_zero():
                    del res[m]
                else:
                    res[m] = v
            else:
                res[m] = -c
        return OElement(res)

    def __neg__(self):
        return OElement({m: -c for m, c in self.terms.items()})

    def scale(self, c):
        if c.is_zero():
            return OElement()
        return OElement({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            c = other if isinstance(other, Scalar) else Scalar.from_int(other)
            return self.scale(c)
        out = OElement()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out = out + _mul_mono(m1, m2).scale(c1 * c2)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.__mul__(other)
        return other.__mul__(self)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: omono_key(t[0]))

    def __repr__(self):
        from .exprs import format_o
        return format_o(self)


def gen(letter) -> OElement:
    return OElement.monomial(_LETTER_MONO[letter])


_LETTER_MONO = {
    "a": OMonomial(1, 0, 0, 0), "b": OMonomial(0, 1, 0, 0),
    "c": OMonomial(0, 0, 1, 0), "d": OMonomial(0, 0, 0, 1),
}


_ORDER = {"a": 0, "b": 1, "c": 2, "d": 3}
# y x -> q^e x y for the genuinely q-commuting pairs; d a is substituted
_COMM_Q = {("b", "a"): -1, ("c", "a"): -1, ("c", "b"): 0,
           ("d", "b"): -1, ("d", "c"): -1}


def normal_form_word(word, coeff=None) -> OElement:
    """Normal form of a word in the generators a, b, c, d."""
    coeff = Scalar.one() if coeff is None else coeff
    pending = {tuple(word): coeff}
    out = OElement()
    while pending:
        w, c = pending.popitem()
        if c.is_zero():
            continue
        n = next((k for k in range(len(w) - 1)
                  if _ORDER[w[k]] > _ORDER[w[k + 1]]), None)
        if n is None:
            i = w.count("a")
            j = w.count("b")
            k = w.count("c")
            l = w.count("d")
            out = out + _reduce_ad(i, j, k, l, c)
            continue
        x, y = w[n], w[n + 1]
        pre, post = w[:n], w[n + 2:]
        if (x, y) == ("d", "a"):
            # da = 1 + q^-1 bc
            _accum(pending, pre + post, c)
            _accum(pending, pre + ("b", "c") + post, c * Scalar.q_power(-1))
        else:
            e = _COMM_Q[(x, y)]
            _accum(pending, pre + (y, x) + post,
                   c * Scalar.q_power(e) if e else c)
    return out


def _accum(pending, w, c):
    if w in pending:
        pending[w] = pending[w] + c
    else:
        pending[w] = c


def _reduce_ad(i, j, k, l, coeff) -> OElement:
    if i and l:
        # a^i b^j c^k d^l = q^(j+k) a^(i-1) b^j c^k (1 + q bc) d^(l-1)
        c = coeff * Scalar.q_power(j + k)
        return _reduce_ad(i - 1, j, k, l - 1, c) \
            + _reduce_ad(i - 1, j + 1, k + 1, l - 1, c * Scalar.q_power(1))
    return OElement.monomial(OMonomial(i, j, k, l), coeff)


def _mul_mono(m1: OMonomial, m2: OMonomial) -> OElement:
    return normal_form_word(m1.word() + m2.word())


# -- coalgebra ----------------------------------------------------------------

_COPRODUCT_LETTER = {
    "a": (("a", "a"), ("b", "c")),
    "b": (("a", "b"), ("b", "d")),
    "c": (("c", "a"), ("d", "c")),
    "d": (("c", "b"), ("d", "d")),
}


def coproduct(x: OElement):
    """Coproduct as dict {(left OMonomial, right OMonomial): Scalar}."""
    out = {}
    for m, c in x.terms.items():
        pairs = {(O_ONE, O_ONE): Scalar.one()}
        for letter in m.word():
            nxt = {}
            for (l, r), cc in pairs.items():
                for (lu, ru) in _COPRODUCT_LETTER[letter]:
                    left = _mul_mono(l, _LETTER_MONO[lu])
                    right = _mul_mono(r, _LETTER_MONO[ru])
                    for lm, lc in left.terms.items():
                        for rm, rc in right.terms.items():
                            key = (lm, rm)
                            v = cc * lc * rc
                            if key in nxt:
                                w = nxt[key] + v
                                if w.is_zero():
                                    del nxt[key]
                                else:
                                    nxt[key] = w
                            else:
                                nxt[key] = v
            pairs = nxt
        for key, v in pairs.items():
            w = out.get(key)
            w = v if w is None else w + v
            if w.is_zero():
                out.pop(key, None)
            else:
                out[key] = w
    return out


def counit(x: OElement) -> Scalar:
    out = Scalar.zero()
    for m, c in x.terms.items():
        if m.eb == 0 and m.ec == 0:
            out = out + c
    return out


# -- the dual pairing ----------------------------------------------------------

_LETTER_INDEX = {"a": (0, 0), "b": (0, 1), "c": (1, 0), "d": (1, 1)}

_pair_cache = {}


def pair_mono_word(m: UMonomial, word) -> Scalar:
    """Pairing of a PBW monomial with a raw generator word.

    Recursion through the closed-form dual coproduct; the base cases are the
    counit and the fundamental 2x2 matrices.  Never uses the quadratic
    relations of the coordinate algebra.
    """
    key = (m, word)
    hit = _pair_cache.get(key)
    if hit is not None:
        return hit
    if not word:
        out = Scalar.one() if (m.fi == 0 and m.ej == 0 and m.gk == 0) \
            else Scalar.zero()
    elif len(word) == 1:
        r, s = _LETTER_INDEX[word[0]]
        out = uq.fundamental_matrix(UElement.monomial(m))[r][s]
    else:
        out = Scalar.zero()
        rest = word[1:]
        for ml, mr in uq.coproduct_mono(m):
            left = pair_mono_word(ml, word[:1])
            if left.is_zero():
                continue
            out = out + left * pair_mono_word(mr, rest)
    _pair_cache[key] = out
    return out


def pair(X: UElement, x: OElement) -> Scalar:
    """The dual Hopf pairing, bilinear in both arguments."""
    out = Scalar.zero()
    for mu, cu in X.terms.items():
        for mo, co in x.terms.items():
            p = pair_mono_word(mu, mo.word())
            if not p.is_zero():
                out = out + p * cu * co
    return out


def pair_word(X: UElement, word) -> Scalar:
    """Pairing against an arbitrary (not normal-ordered) generator word."""
    out = Scalar.zero()
    for mu, cu in X.terms.items():
        p = pair_mono_word(mu, tuple(word))
        if not p.is_zero():
            out = out + p * cu
    return out


def monomials_up_to_degree(dmax):
    """All normal-form monomials of total degree <= dmax, sorted."""
    out = []
    for deg in range(dmax + 1):
        for ea in range(deg + 1):
            for eb in range(deg - ea + 1):
                for ec in range(deg - ea - eb + 1):
                    ed = deg - ea - eb - ec
                    if ea and ed:
                        continue
                    out.append(OMonomial(ea, eb, ec, ed))
    return sorted(out, key=omono_key)
