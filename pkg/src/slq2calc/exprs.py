"""Expression grammar, parser and canonical printers.

One grammar covers scalars and both algebras.  Atoms:

    integers, rationals 2/3, i, s, q (= s^2), parameters p1..p8 with the
    aliases alpha beta gamma delta alpha1 alpha2 beta1 beta2;
    dual-algebra generators E F G K Kinv eps- f[<label>] Fd(n) Ed(n) Gd(n);
    coordinate generators a b c d (aliases u11 u12 u21 u22);
    names bound through an environment (the detail tables use H, X, Y).

Operators + - * / ^ with explicit multiplication; exponents are integers
except that q accepts half-integers (q^(1/2) = s).  Division only by
scalars.  Mixing generators of the two algebras is an error.  Printing is
canonical and deterministic, and parse(print(x)) == x holds for scalars and
elements of either algebra.
"""

from __future__ import annotations

import re

from . import oq, uq
from .scalars import (GaussQ, GQ_I, GQ_ONE, GroupLabel, PARAM_ALIASES,
                      PARAM_NAMES, Poly, Scalar, VAR_NAMES, _grlex_key)
from .oq import OElement
from .uq import UElement, UMonomial

_GQ_UNITS = (GQ_ONE, GQ_I, GaussQ(-1), GaussQ(0, -1))


class ParseError(ValueError):
    def __init__(self, msg, pos=None):
        super().__init__(msg if pos is None else f"{msg} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<epsm>eps-)|(?P<name>[A-Za-z_]\w*)"
                    r"|(?P<op>[-+*/^()\[\],]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group("int"):
            out.append(("int", int(m.group("int")), m.start()))
        elif m.group("epsm"):
            out.append(("epsm", "eps-", m.start()))
        elif m.group("name"):
            out.append(("name", m.group("name"), m.start()))
        else:
            out.append(("op", m.group("op"), m.start()))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


_U_KIND, _O_KIND, _S_KIND = "u", "o", "s"

_O_ALIASES = {"u11": "a", "u12": "b", "u21": "c", "u22": "d"}


class _Parser:
    def __init__(self, text, env=None):
        self.tokens = _tokenize(text)
        self.n = 0
        self.env = env or {}

    def peek(self):
        return self.tokens[self.n]

    def next(self):
        t = self.tokens[self.n]
        self.n += 1
        return t

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self):
        v = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {val!r}", pos)
        return v

    def expr(self):
        v = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                w = self.term()
                v = _add(v, w) if val == "+" else _add(v, _neg(w))
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.next()
                v = _mul(v, self.factor(), pos)
            elif kind == "op" and val == "/":
                self.next()
                v = _div(v, self.factor(), pos)
            else:
                return v

    def factor(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return _neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.next()
            num, den = self.exponent()
            return _pow(base, num, den, pos)
        return base

    def exponent(self):
        """Integer or (possibly negative, possibly /2) exponent."""
        kind, val, pos = self.next()
        if kind == "int":
            return val, 1
        if kind == "op" and val == "-":
            kind2, val2, pos2 = self.next()
            if kind2 != "int":
                raise ParseError("expected integer exponent", pos2)
            return -val2, 1
        if kind == "op" and val == "(":
            sign = 1
            kind2, val2, pos2 = self.next()
            if kind2 == "op" and val2 == "-":
                sign = -1
                kind2, val2, pos2 = self.next()
            if kind2 != "int":
                raise ParseError("expected integer exponent", pos2)
            num = sign * val2
            kind3, val3, pos3 = self.next()
            den = 1
            if kind3 == "op" and val3 == "/":
                kind4, val4, pos4 = self.next()
                if kind4 != "int":
                    raise ParseError("expected exponent denominator", pos4)
                den = val4
                kind3, val3, pos3 = self.next()
            if not (kind3 == "op" and val3 == ")"):
                raise ParseError("expected )", pos3)
            return num, den
        raise ParseError("expected exponent", pos)

    def atom(self):
        kind, val, pos = self.next()
        if kind == "int":
            return Scalar.from_int(val)
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect_op(")")
            return v
        if kind == "epsm":
            return uq.eps_minus()
        if kind != "name":
            raise ParseError(f"unexpected token {val!r}", pos)
        name = val
        if name in self.env:
            return self.env[name]
        if name == "i":
            return Scalar.i()
        if name == "s":
            return Scalar.s_power(1)
        if name == "q":
            return Scalar.q_power(1)
        if name in PARAM_ALIASES:
            name = PARAM_ALIASES[name]
        if name in PARAM_NAMES:
            return Scalar.param(PARAM_NAMES.index(name) + 1)
        if name == "E":
            return uq.E()
        if name == "F":
            return uq.F()
        if name == "G":
            return uq.G()
        if name == "K":
            return uq.K(1)
        if name == "Kinv":
            return uq.K(-1)
        if name == "f":
            self.expect_op("[")
            inner = self.expr()
            self.expect_op("]")
            return uq.flike(_label_of_scalar(inner, pos))
        if name in ("Fd", "Ed", "Gd"):
            self.expect_op("(")
            kind2, val2, pos2 = self.next()
            if kind2 != "int":
                raise ParseError("expected divided-power index", pos2)
            self.expect_op(")")
            return {"Fd": uq.Fd, "Ed": uq.Ed, "Gd": uq.Gd}[name](val2)
        if name in _O_ALIASES:
            name = _O_ALIASES[name]
        if name in ("a", "b", "c", "d"):
            return oq.gen(name)
        raise ParseError(f"unknown name {name!r}", pos)


def _kind(v):
    if isinstance(v, Scalar):
        return _S_KIND
    if isinstance(v, UElement):
        return _U_KIND
    return _O_KIND


def _add(v, w):
    kv, kw = _kind(v), _kind(w)
    if kv == kw:
        return v + w
    if kv == _S_KIND:
        return _embed(v, kw) + w
    if kw == _S_KIND:
        return v + _embed(w, kv)
    raise ParseError("cannot mix generators of the two algebras")


def _embed(scalar, kind):
    if kind == _U_KIND:
        return UElement.monomial(uq.MONO_ONE, scalar)
    return OElement.monomial(oq.O_ONE, scalar)


def _neg(v):
    return -v


def _mul(v, w, pos):
    kv, kw = _kind(v), _kind(w)
    if kv == _S_KIND:
        return w * v if kw != _S_KIND else v * w
    if kw == _S_KIND:
        return v * w
    if kv != kw:
        raise ParseError("cannot mix generators of the two algebras", pos)
    return v * w


def _div(v, w, pos):
    if _kind(w) != _S_KIND:
        raise ParseError("division only by scalars", pos)
    if _kind(v) == _S_KIND:
        return v / w
    return v * w.inv()


def _pow(base, num, den, pos):
    if den == 2:
        # half-integer exponents only through q
        if _kind(base) == _S_KIND and base == Scalar.q_power(1):
            return Scalar.s_power(num)
        raise ParseError("half-integer exponent only allowed on q", pos)
    if den != 1:
        raise ParseError("exponent denominator must be 1 or 2", pos)
    if _kind(base) == _S_KIND:
        return base ** num
    if num >= 0:
        out = _embed(Scalar.one(), _kind(base))
        for _ in range(num):
            out = out * base
        return out
    # negative powers only for a single group-like monomial
    if _kind(base) == _U_KIND and len(base.terms) == 1:
        (m, c), = base.terms.items()
        if m.fi == 0 and m.ej == 0 and m.gk == 0:
            lab = m.label.power(num)
            return uq.flike(lab, c ** num)
    raise ParseError("negative power of a non-invertible element", pos)


def _label_of_scalar(sc, pos):
    """Recognize a scalar as a unit monomial i^t s^k and return its label."""
    if not isinstance(sc, Scalar):
        raise ParseError("label must be scalar", pos)
    num, den = sc.num, sc.den
    if len(num.terms) != 1 or len(den.terms) != 1:
        raise ParseError("label must be i^t * s^k", pos)
    (en, cn), = num.terms.items()
    (ed, cd), = den.terms.items()
    if any(e for e in en[1:]) or any(e for e in ed[1:]):
        raise ParseError("label may not contain parameters", pos)
    k = (en[0] if en else 0) - (ed[0] if ed else 0)
    c = cn * cd.inv()
    for t in range(4):
        if c == _GQ_UNITS[t]:
            return GroupLabel(t, k)
    raise ParseError("label coefficient must be a power of i", pos)


def parse(text, env=None):
    """Parse an expression; returns Scalar, UElement or OElement."""
    return _Parser(text, env).parse()


def parse_scalar(text) -> Scalar:
    v = parse(text)
    if not isinstance(v, Scalar):
        raise ParseError("expected a scalar expression")
    return v


def parse_u(text, env=None) -> UElement:
    v = parse(text, env)
    if isinstance(v, Scalar):
        return UElement.monomial(uq.MONO_ONE, v)
    if not isinstance(v, UElement):
        raise ParseError("expected a dual-algebra expression")
    return v


def parse_o(text) -> OElement:
    v = parse(text)
    if isinstance(v, Scalar):
        return OElement.monomial(oq.O_ONE, v)
    if not isinstance(v, OElement):
        raise ParseError("expected a coordinate-algebra expression")
    return v


# -- printing -----------------------------------------------------------------

def _format_gauss(c: GaussQ, need_parens=False):
    """Format a Gaussian rational; returns (text, is_composite)."""
    re_n, im_n, d = c.a, c.b, c.d
    parts = []
    if re_n:
        parts.append(f"{re_n}" if d == 1 else f"{re_n}/{d}")
    if im_n:
        if im_n == 1 and d == 1:
            parts.append("i")
        elif im_n == -1 and d == 1:
            parts.append("-i")
        else:
            t = f"{im_n}" if d == 1 else f"{im_n}/{d}"
            parts.append(f"{t}*i")
    if not parts:
        return "0", False
    if len(parts) == 1:
        return parts[0], False
    text = parts[0]
    text += f"+{parts[1]}" if not parts[1].startswith("-") else parts[1]
    return f"({text})", True


def _format_monomial(exps):
    out = []
    for idx, e in enumerate(exps):
        if e == 0:
            continue
        name = VAR_NAMES[idx]
        out.append(name if e == 1 else f"{name}^{e}" if e > 0 else f"{name}^-{-e}")
    return "*".join(out)


def _format_poly(p: Poly, monomial_shift=None):
    """Print a polynomial; monomial_shift subtracts exponents (Laurent)."""
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
    chunks = []
    for exps, c in items:
        if monomial_shift:
            n = max(len(exps), len(monomial_shift))
            exps = tuple((exps[i] if i < len(exps) else 0)
                         - (monomial_shift[i] if i < len(monomial_shift) else 0)
                         for i in range(n))
        mono = _format_monomial(exps)
        ctext, _ = _format_gauss(c)
        if mono:
            if ctext == "1":
                text = mono
            elif ctext == "-1":
                text = f"-{mono}"
            else:
                text = f"{ctext}*{mono}"
        else:
            text = ctext
        chunks.append(text)
    out = chunks[0]
    for t in chunks[1:]:
        out += f"+{t}" if not t.startswith("-") else t
    return out


def format_scalar(x: Scalar) -> str:
    if x.is_zero():
        return "0"
    den = x.den
    if den.is_const():
        return _format_poly(x.num)
    if len(den.terms) == 1:
        (exps, c), = den.terms.items()
        # monic normalization guarantees c == 1
        return _format_poly(x.num, monomial_shift=exps)
    num = _format_poly(x.num)
    dent = _format_poly(den)
    if len(x.num.terms) > 1 or num.startswith("-"):
        num = f"({num})"
    return f"{num}/({dent})"


def _coeff_prefix(c: Scalar):
    text = format_scalar(c)
    if text == "1":
        return ""
    if text == "-1":
        return "-"
    if ("+" in text[1:] or "-" in text[1:]) and "/(" not in text \
            and not (text.startswith("(") and text.endswith(")")):
        text = f"({text})"
    return f"{text}*"


def format_label(lab: GroupLabel) -> str:
    t, k = lab.t % 4, lab.k
    head = {0: "", 1: "i", 2: "-", 3: "-i"}[t]
    if k == 0:
        stext = "1" if t in (0, 2) else ""
    else:
        stext = "s" if k == 1 else f"s^{k}" if k > 0 else f"s^-{-k}"
    if head.endswith("i") and stext:
        return f"{head}*{stext}"
    return head + stext if (head + stext) else "1"


def format_u_monomial(m: UMonomial) -> str:
    parts = []
    if m.fi:
        parts.append(f"Fd({m.fi})")
    if not m.label.is_one():
        parts.append(f"f[{format_label(m.label)}]")
    if m.ej:
        parts.append(f"Ed({m.ej})")
    if m.gk:
        parts.append(f"Gd({m.gk})")
    return "*".join(parts) if parts else "1"


def format_u(el: UElement) -> str:
    if el.is_zero():
        return "0"
    chunks = []
    for m, c in el.sorted_terms():
        mono = format_u_monomial(m)
        if mono == "1":
            text = format_scalar(c)
            if ("+" in text[1:] or "-" in text[1:]) and "/(" not in text:
                text = f"({text})"
        else:
            text = f"{_coeff_prefix(c)}{mono}"
        chunks.append(text)
    out = chunks[0]
    for t in chunks[1:]:
        out += f"+{t}" if not t.startswith("-") else t
    return out


def format_o_monomial(m) -> str:
    parts = []
    for letter, e in zip("abcd", (m.ea, m.eb, m.ec, m.ed)):
        if e == 1:
            parts.append(letter)
        elif e > 1:
            parts.append(f"{letter}^{e}")
    return "*".join(parts) if parts else "1"


def format_o(el: OElement) -> str:
    if el.is_zero():
        return "0"
    chunks = []
    for m, c in el.sorted_terms():
        mono = format_o_monomial(m)
        if mono == "1":
            text = format_scalar(c)
            if ("+" in text[1:] or "-" in text[1:]) and "/(" not in text:
                text = f"({text})"
        else:
            text = f"{_coeff_prefix(c)}{mono}"
        chunks.append(text)
    out = chunks[0]
    for t in chunks[1:]:
        out += f"+{t}" if not t.startswith("-") else t
    return out


def format_tensor_u(pairs) -> str:
    """Print a dual-algebra tensor {(left mono, right mono): coeff}."""
    items = sorted(pairs.items(),
                   key=lambda t: (t[0][1].order_key(), t[0][0].order_key()))
    chunks = []
    for (ml, mr), c in items:
        chunks.append(f"{_coeff_prefix(c)}{format_u_monomial(ml)}"
                      f" (x) {format_u_monomial(mr)}")
    return "  +  ".join(chunks) if chunks else "0"
