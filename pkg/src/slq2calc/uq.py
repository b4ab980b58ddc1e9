"""The dual Hopf algebra of the quantum coordinate ring, with PBW basis.

Generators are E, F, G and the group-likes f_mu, mu = i^t s^k, subject to

    f_mu f_nu = f_{mu nu},   f_mu E = mu^2 E f_mu,   f_mu F = mu^-2 F f_mu,
    f_mu G = G f_mu,   GE = E(G+2),   GF = F(G-2),
    EF - FE = (f_q - f_{q^-1}) / (q - q^-1).

Internally every element is a linear combination of divided-power monomials
Fd(i) f_mu Ed(j) Gd(k), where Fd(k) = F^k K^-k / [k]!, Ed(k) = K^-k E^k / [k]!
and Gd(k) = G^k / k! with K = f_s.  Multiplication rewrites the concatenated
generator word to normal order; the coproduct of a basis monomial is a
closed-form multiplicity-free sum, which the coideal machinery relies on.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .scalars import (GroupLabel, LABEL_EPS_MINUS, LABEL_K, LABEL_ONE,
                      RealForm, Scalar, ScalarError, conjugate, qfact, qnum)


class UMonomial(NamedTuple):
    """Divided-power basis monomial Fd(fi) f_{i^lt s^lk} Ed(ej) Gd(gk)."""

    fi: int
    lt: int
    lk: int
    ej: int
    gk: int

    @property
    def label(self):
        return GroupLabel(self.lt, self.lk)

    def order_key(self):
        return (self.fi, self.ej, self.gk, self.lt, self.lk)

    def degree(self):
        """Weight under the algebra automorphisms scaling E and F."""
        return self.fi - self.ej


MONO_ONE = UMonomial(0, 0, 0, 0, 0)


def mono_key(m: UMonomial):
    return m.order_key()


class UElement:
    """Finite linear combination of PBW monomials; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero():
        return UElement()

    @staticmethod
    def monomial(m: UMonomial, coeff=None):
        coeff = Scalar.one() if coeff is None else coeff
        return UElement({m: coeff}) if not coeff.is_zero() else UElement()

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UElement.monomial(MONO_ONE, Scalar.from_int(other)) \
                if other else UElement()
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
        return UElement(res)

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
        return UElement(res)

    def __neg__(self):
        return UElement({m: -c for m, c in self.terms.items()})

    def scale(self, c: Scalar):
        if c.is_zero():
            return UElement()
        return UElement({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            c = other if isinstance(other, Scalar) else Scalar.from_int(other)
            return self.scale(c)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.__mul__(other)
        return mul(other, self)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]))

    def __repr__(self):
        from .exprs import format_u
        return format_u(self)


# -- constructors -----------------------------------------------------------

def one() -> UElement:
    return UElement.monomial(MONO_ONE)

def flike(label: GroupLabel, coeff=None) -> UElement:
    return UElement.monomial(UMonomial(0, label.t % 4, label.k, 0, 0), coeff)

def K(n=1) -> UElement:
    return flike(GroupLabel(0, n))

def eps_minus() -> UElement:
    return flike(LABEL_EPS_MINUS)

def Fd(n) -> UElement:
    return UElement.monomial(UMonomial(n, 0, 0, 0, 0))

def Ed(n) -> UElement:
    return UElement.monomial(UMonomial(0, 0, 0, n, 0))

def Gd(n) -> UElement:
    return UElement.monomial(UMonomial(0, 0, 0, 0, n))

def E() -> UElement:
    # E = K Ed(1)
    return UElement.monomial(UMonomial(0, 0, 1, 1, 0))

def F() -> UElement:
    # F = Fd(1) K
    return UElement.monomial(UMonomial(1, 0, 1, 0, 0))

def G() -> UElement:
    return Gd(1)


# -- words and normal ordering ----------------------------------------------
#
# A word is a tuple of atoms 'E' | 'F' | 'G' | ('f', t, k).  Rewriting moves
# F left, G right and group-likes in between, straightening E past F with the
# commutator relation.

_RANK = {"F": 0, "f": 1, "E": 2, "G": 3}

def _atom_rank(a):
    return _RANK[a if isinstance(a, str) else "f"]


def _first_disorder(word):
    for n in range(len(word) - 1):
        x, y = word[n], word[n + 1]
        rx, ry = _atom_rank(x), _atom_rank(y)
        if rx > ry:
            return n
        if rx == 1 and ry == 1:
            return n  # merge adjacent group-likes
    return None


def _qdenom() -> Scalar:
    # q - q^-1
    return Scalar.q_power(1) - Scalar.q_power(-1)


def normal_form_word(word, coeff=None) -> UElement:
    """Express a generator word in the divided-power PBW basis."""
    coeff = Scalar.one() if coeff is None else coeff
    pending = {tuple(word): coeff}
    finished = {}
    while pending:
        w, c = pending.popitem()
        if c.is_zero():
            continue
        n = _first_disorder(w)
        if n is None:
            key = w
            if key in finished:
                finished[key] = finished[key] + c
            else:
                finished[key] = c
            continue
        x, y = w[n], w[n + 1]
        pre, post = w[:n], w[n + 2:]

        def put(mid, factor):
            nw = pre + mid + post
            if nw in pending:
                pending[nw] = pending[nw] + c * factor
            else:
                pending[nw] = c * factor

        rx, ry = _atom_rank(x), _atom_rank(y)
        if rx == 1 and ry == 1:
            lab = GroupLabel(x[1], x[2]) * GroupLabel(y[1], y[2])
            put((("f", lab.t, lab.k),), Scalar.one())
        elif x == "E" and y == "F":
            put(("F", "E"), Scalar.one())
            d = _qdenom().inv()
            put((("f", 0, 2),), d)
            put((("f", 0, -2),), -d)
        elif x == "G" and y == "F":
            put(("F", "G"), Scalar.one())
            put(("F",), Scalar.from_int(-2))
        elif x == "G" and y == "E":
            put(("E", "G"), Scalar.one())
            put(("E",), Scalar.from_int(2))
        elif rx == 1:
            # f_mu F -> mu^-2 F f_mu
            lab = GroupLabel(x[1], x[2])
            put((y, x), lab.as_scalar(-2))
        elif ry == 1:
            lab = GroupLabel(y[1], y[2])
            if x == "E":
                put((y, x), lab.as_scalar(-2))
            elif x == "F":
                put((y, x), lab.as_scalar(2))
            else:  # G
                put((y, x), Scalar.one())
        else:
            raise AssertionError(f"unhandled pair {x} {y}")
    out = UElement()
    for w, c in finished.items():
        out = out + _sorted_word_to_pbw(w, c)
    return out


def _sorted_word_to_pbw(word, coeff) -> UElement:
    a = b = g = 0
    lab = LABEL_ONE
    for atom in word:
        if atom == "F":
            a += 1
        elif atom == "E":
            b += 1
        elif atom == "G":
            g += 1
        else:
            lab = lab * GroupLabel(atom[1], atom[2])
    # F^a f_nu E^b G^g = [a]! [b]! g! Fd(a) f_{s^(a+b) nu} Ed(b) Gd(g)
    c = coeff * qfact(a) * qfact(b)
    fact = 1
    for m in range(2, g + 1):
        fact *= m
    c = c * Scalar.from_int(fact)
    lab = lab * GroupLabel(0, a + b)
    return UElement.monomial(UMonomial(a, lab.t % 4, lab.k, b, g), c)


def mono_to_word(m: UMonomial):
    """Inverse of the PBW packing: (word, coefficient)."""
    lab = m.label * GroupLabel(0, -(m.fi + m.ej))
    word = (("F",) * m.fi) + ((("f", lab.t, lab.k),) if not lab.is_one() else ()) \
        + (("E",) * m.ej) + (("G",) * m.gk)
    fact = 1
    for n in range(2, m.gk + 1):
        fact *= n
    c = (qfact(m.fi) * qfact(m.ej) * Scalar.from_int(fact)).inv()
    return word, c


def mul(a: UElement, b: UElement) -> UElement:
    out = UElement()
    for m1, c1 in a.terms.items():
        w1, k1 = mono_to_word(m1)
        for m2, c2 in b.terms.items():
            w2, k2 = mono_to_word(m2)
            out = out + normal_form_word(w1 + w2, c1 * c2 * k1 * k2)
    return out


# -- Hopf structure ----------------------------------------------------------

def coproduct_mono(m: UMonomial):
    """Closed-form coproduct; yields (left monomial, right monomial) pairs.

    Every pair carries coefficient one:
    Delta(Fd(i) f_mu Ed(j) Gd(k)) =
        sum Fd(i-r) f_{q^(-r-s) mu} Ed(j-s) Gd(k-t) (x) Fd(r) f_mu Ed(s) Gd(t).
    """
    for r in range(m.fi + 1):
        for s in range(m.ej + 1):
            lt, lk = m.lt, m.lk - 2 * (r + s)
            for t in range(m.gk + 1):
                yield (UMonomial(m.fi - r, lt, lk, m.ej - s, m.gk - t),
                       UMonomial(r, m.lt, m.lk, s, t))


def coproduct(a: UElement):
    """Coproduct as a dict {(left monomial, right monomial): coefficient}."""
    out = {}
    for m, c in a.terms.items():
        for pair in coproduct_mono(m):
            if pair in out:
                v = out[pair] + c
                if v.is_zero():
                    del out[pair]
                else:
                    out[pair] = v
            else:
                out[pair] = c
    return out


def coproduct_legs(a: UElement):
    """Coproduct collected on the right leg: dict {right mono: left UElement}."""
    legs = {}
    for (ml, mr), c in coproduct(a).items():
        legs.setdefault(mr, {})
        cur = legs[mr].get(ml)
        legs[mr][ml] = c if cur is None else cur + c
    return {mr: UElement({m: c for m, c in d.items() if not c.is_zero()})
            for mr, d in legs.items()}


def counit(a: UElement) -> Scalar:
    out = Scalar.zero()
    for m, c in a.terms.items():
        if m.fi == 0 and m.ej == 0 and m.gk == 0:
            out = out + c
    return out


def antipode(a: UElement) -> UElement:
    """The antipode: anti-automorphism with S(E) = -qE, S(F) = -q^-1 F,
    S(G) = -G, S(f_mu) = f_{mu^-1}."""
    out = UElement()
    for m, c in a.terms.items():
        word, k = mono_to_word(m)
        swapped = []
        factor = c * k
        for atom in reversed(word):
            if atom == "E":
                swapped.append("E")
                factor = factor * (-Scalar.q_power(1))
            elif atom == "F":
                swapped.append("F")
                factor = factor * (-Scalar.q_power(-1))
            elif atom == "G":
                swapped.append("G")
                factor = -factor
            else:
                swapped.append(("f", (-atom[1]) % 4, -atom[2]))
        out = out + normal_form_word(tuple(swapped), factor)
    return out


def degree(m: UMonomial) -> int:
    return m.degree()


def degree_split(a: UElement):
    """Split into degree-homogeneous parts: dict {degree: UElement}."""
    parts = {}
    for m, c in a.terms.items():
        parts.setdefault(m.degree(), {})[m] = c
    return {d: UElement(t) for d, t in parts.items()}


def apply_star(a: UElement, form: str) -> UElement:
    """Antilinear anti-involution of the chosen real form.

    su2:  E* = F, F* = E, G* = G, f_mu* = f_{conj(mu)}      (q real)
    su11: E* = -F, F* = -E, G* = G, f_mu* = f_{conj(mu)}    (q real)
    slr:  E* = -qE, F* = -q^-1 F, G* = -G, f_mu* = f_{conj(mu)^-1}  (|q| = 1)
    """
    out = UElement()
    for m, c in a.terms.items():
        word, k = mono_to_word(m)
        factor = conjugate(c * k, form)
        swapped = []
        for atom in reversed(word):
            if atom == "E":
                if form == RealForm.SU2:
                    swapped.append("F")
                elif form == RealForm.SU11:
                    swapped.append("F")
                    factor = -factor
                else:
                    swapped.append("E")
                    factor = factor * (-Scalar.q_power(1))
            elif atom == "F":
                if form == RealForm.SU2:
                    swapped.append("E")
                elif form == RealForm.SU11:
                    swapped.append("E")
                    factor = -factor
                else:
                    swapped.append("F")
                    factor = factor * (-Scalar.q_power(-1))
            elif atom == "G":
                if form == RealForm.SLR:
                    factor = -factor
                swapped.append("G")
            else:
                lab = GroupLabel(atom[1], atom[2]).conj_label(form)
                swapped.append(("f", lab.t, lab.k))
        out = out + normal_form_word(tuple(swapped), factor)
    return out


# -- the fundamental 2x2 representation --------------------------------------

def _atom_matrix(atom):
    z, o = Scalar.zero(), Scalar.one()
    if atom == "E":
        return [[z, z], [o, z]]
    if atom == "F":
        return [[z, o], [z, z]]
    if atom == "G":
        return [[-o, z], [z, o]]
    lab = GroupLabel(atom[1], atom[2])
    return [[lab.as_scalar(-1), z], [z, lab.as_scalar(1)]]


def fundamental_matrix(a: UElement):
    """2x2 matrix of the element in the fundamental corepresentation pairing."""
    z = Scalar.zero()
    out = [[z, z], [z, z]]
    for m, c in a.terms.items():
        word, k = mono_to_word(m)
        acc = [[Scalar.one(), z], [z, Scalar.one()]]
        for atom in word:
            am = _atom_matrix(atom)
            acc = [[acc[0][0] * am[0][0] + acc[0][1] * am[1][0],
                    acc[0][0] * am[0][1] + acc[0][1] * am[1][1]],
                   [acc[1][0] * am[0][0] + acc[1][1] * am[1][0],
                    acc[1][0] * am[0][1] + acc[1][1] * am[1][1]]]
        ck = c * k
        for r in range(2):
            for s in range(2):
                out[r][s] = out[r][s] + acc[r][s] * ck
    return out


def random_element(rng, max_power=2, n_terms=2, label_range=3) -> UElement:
    """Small random element for the property tests (deterministic rng)."""
    pool = [Scalar.one(), -Scalar.one(), Scalar.from_int(2), Scalar.i(),
            Scalar.s_power(1), Scalar.s_power(-1) + Scalar.one()]
    out = UElement()
    for _ in range(rng.randint(1, n_terms)):
        m = UMonomial(rng.randint(0, max_power), rng.randint(0, 3),
                      rng.randint(-label_range, label_range),
                      rng.randint(0, max_power), rng.randint(0, max_power))
        out = out + UElement.monomial(m, pool[rng.randrange(len(pool))])
    return out
