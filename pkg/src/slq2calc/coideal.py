"""Right coideals of the dual algebra: components, closure, dimension bound.

A right coideal is a subspace V with Delta(V) inside V (x) U.  Since the
coproduct of a PBW monomial is a multiplicity-free closed form, the closure
of an element under the coproduct is the span of its component extractions,
and membership questions are exact echelon reductions.
"""

from __future__ import annotations

from .linalg import Span
from .scalars import GroupLabel, Scalar
from .uq import UElement, UMonomial, counit, mono_key, one


class ClosureCapExceeded(RuntimeError):
    pass


def u_span(elements=()):
    sp = Span(key=mono_key)
    for el in elements:
        sp.add(dict(el.terms))
    return sp


class Subspace:
    """Echelonized span of dual-algebra elements with recorded pivots."""

    def __init__(self, elements=()):
        self.span = u_span()
        self.basis = []
        for el in elements:
            self.add(el)

    @property
    def dim(self):
        return self.span.dim

    def add(self, el: UElement) -> bool:
        if self.span.add(dict(el.terms)):
            self.basis.append(el)
            return True
        return False

    def echelon_basis(self):
        return [UElement(dict(v)) for v in self.span.basis()]

    def contains(self, el: UElement) -> bool:
        return self.span.contains(dict(el.terms))

    def coordinates(self, el: UElement):
        """Coordinates of el in the *inserted* basis, or None."""
        return self.span.coordinates(dict(el.terms))

    def equals(self, other) -> bool:
        return self.span.equals(other.span)


def components(X: UElement, r: int, mu: GroupLabel, s: int, t: int) -> UElement:
    """Component extraction on the label-mu part of X.

    The (r, mu, s, t) component collects the coefficients alpha_{i,mu,j,k}
    with i >= r, j >= s, k >= t into Fd(i-r) f_{q^(-r-s) mu} Ed(j-s) Gd(k-t).
    """
    if r < 0 or s < 0 or t < 0:
        raise ValueError("component indices must be nonnegative")
    shift = GroupLabel(0, -2 * (r + s))
    lab = mu * shift
    out = {}
    for m, c in X.terms.items():
        if m.lt == mu.t % 4 and m.lk == mu.k \
                and m.fi >= r and m.ej >= s and m.gk >= t:
            key = UMonomial(m.fi - r, lab.t, lab.k, m.ej - s, m.gk - t)
            if key in out:
                v = out[key] + c
                if v.is_zero():
                    del out[key]
                else:
                    out[key] = v
            else:
                out[key] = c
    return UElement(out)


def labels_of(X: UElement):
    return sorted({GroupLabel(m.lt, m.lk) for m in X.terms},
                  key=lambda l: (l.t, l.k))


def all_components(X: UElement):
    """Every nonzero component of X, one per (r, mu, s, t)."""
    out = []
    for mu in labels_of(X):
        ri = max((m.fi for m in X.terms if (m.lt, m.lk) == (mu.t, mu.k)),
                 default=0)
        si = max((m.ej for m in X.terms if (m.lt, m.lk) == (mu.t, mu.k)),
                 default=0)
        ti = max((m.gk for m in X.terms if (m.lt, m.lk) == (mu.t, mu.k)),
                 default=0)
        for r in range(ri + 1):
            for s in range(si + 1):
                for t in range(ti + 1):
                    c = components(X, r, mu, s, t)
                    if not c.is_zero():
                        out.append(c)
    return out


def closure(gens, cap=512) -> Subspace:
    """Smallest right coideal containing the generators.

    Iterates component extraction to a fixed point; the extraction of a
    single element is already a coideal, so one pass suffices, but the loop
    guards against that argument ever being wrong.  The cap bounds runaway
    dimensions from mis-entered inputs.
    """
    sub = Subspace()
    queue = list(gens)
    while queue:
        el = queue.pop()
        if el.is_zero() or not sub.add(el):
            continue
        if sub.dim > cap:
            raise ClosureCapExceeded(f"coideal closure exceeded {cap} dimensions")
        queue.extend(all_components(el))
    return sub


def closure_oracle_dim(X: UElement) -> int:
    """Independent route to dim closure({X}): span the left coproduct legs."""
    from .uq import coproduct_legs
    sp = u_span()
    for left in coproduct_legs(X).values():
        sp.add(dict(left.terms))
    return sp.dim


def is_right_coideal(V: Subspace) -> bool:
    return all(V.contains(c)
               for b in V.echelon_basis() for c in all_components(b))


def is_unital(V: Subspace) -> bool:
    return V.contains(one())


def homogeneous_split(V: Subspace):
    """Split into label-homogeneous components; dict {GroupLabel: Subspace}."""
    parts = {}
    for b in V.echelon_basis():
        for mu in labels_of(b):
            piece = UElement({m: c for m, c in b.terms.items()
                              if (m.lt, m.lk) == (mu.t, mu.k)})
            parts.setdefault(mu, Subspace()).add(piece)
    total = sum(p.dim for p in parts.values())
    if total != V.dim:
        raise ValueError("homogeneous components do not sum up to the space")
    for p in parts.values():
        for b in p.basis:
            if not V.contains(b):
                raise ValueError("homogeneous component leaves the space")
    return parts


def dim_lower_bound(X: UElement) -> int:
    """Lower bound for the dimension of any right coideal containing X.

    For a label-homogeneous X with G-coefficient slices X_t this is
    sum_t (s13(t) + 1) over t <= d4(X), where s13(t) is the largest i+j
    degree among the slices X_m, m >= t.  A non-homogeneous X is split into
    its label components first and the bounds are added.
    """
    if X.is_zero():
        raise ValueError("lower bound of the zero element")
    total = 0
    for mu in labels_of(X):
        part = {m: c for m, c in X.terms.items()
                if (m.lt, m.lk) == (mu.t, mu.k)}
        slices = {}
        for m in part:
            slices.setdefault(m.gk, []).append(m.fi + m.ej)
        d4 = max(slices)
        for t in range(d4 + 1):
            s13 = max((max(v) for g, v in slices.items() if g >= t),
                      default=None)
            if s13 is None:
                continue
            total += s13 + 1
    return total


def dim_lower_bound_t13(X: UElement) -> int:
    """The same bound through the transposed counting (cross-check route)."""
    if X.is_zero():
        raise ValueError("lower bound of the zero element")
    total = 0
    for mu in labels_of(X):
        part = {m: c for m, c in X.terms.items()
                if (m.lt, m.lk) == (mu.t, mu.k)}
        slices = {}
        for m in part:
            slices.setdefault(m.gk, []).append(m.fi + m.ej)
        d13 = max(max(v) for v in slices.values())
        for p in range(d13 + 1):
            t13 = max((g for g, v in slices.items() if max(v) >= p),
                      default=None)
            if t13 is None:
                continue
            total += t13 + 1
    return total
