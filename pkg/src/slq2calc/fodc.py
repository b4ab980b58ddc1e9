"""First-order differential calculus data built from a unital right coideal.

From a 4-dimensional unital right coideal the pipeline extracts the
3-dimensional quantum tangent space, normalizes its basis dually to
((u11-u22)/2, u12, u21), reads the commutation functionals off the
coproduct, checks the stated right-ideal generators, spans the invariant
symmetric 2-forms, builds the exterior quotients of ranks (3, 3, 1, 0), and
evaluates the Maurer-Cartan differentials.  All steps are exact.
"""

from __future__ import annotations

from . import oq, uq
from .coideal import Subspace, is_right_coideal, is_unital
from .linalg import Span, mat_inverse, rank
from .oq import OElement, OMonomial, pair
from .scalars import Scalar
from .uq import UElement, mono_key


class FodcError(ValueError):
    pass


# index order of the invariant one-forms
FORM_NAMES = ("H", "X", "Y")
PAIRS = [(i, j) for i in range(3) for j in range(3)]
WEDGE_BASIS = ((0, 1), (0, 2), (1, 2))  # classes of wH^wX, wH^wY, wX^wY

_QUAD_MONOS = (
    OMonomial(2, 0, 0, 0), OMonomial(1, 1, 0, 0), OMonomial(1, 0, 1, 0),
    OMonomial(0, 2, 0, 0), OMonomial(0, 1, 1, 0), OMonomial(0, 1, 0, 1),
    OMonomial(0, 0, 2, 0), OMonomial(0, 0, 1, 1), OMonomial(0, 0, 0, 2),
)


def quadratic_monomials():
    """The nine quadratic normal-form monomials, in the detail-table order."""
    return [OElement.monomial(m) for m in _QUAD_MONOS]


def dual_basis_elements():
    """((u11 - u22)/2, u12, u21) as coordinate-algebra elements."""
    half = Scalar.from_fraction(1) / Scalar.from_int(2)
    return ((oq.gen("a") - oq.gen("d")).scale(half), oq.gen("b"), oq.gen("c"))


_LETTERS = ("a", "b", "c", "d")


class TangentSpace:
    """Quantum tangent space: counit-free part of a unital right coideal."""

    def __init__(self, basis):
        self.basis = list(basis)
        self.span = Subspace(self.basis)
        if self.span.dim != len(self.basis):
            raise FodcError("tangent basis is linearly dependent")
        for z in self.basis:
            if not uq.counit(z).is_zero():
                raise FodcError("tangent element with nonzero counit")
        # span of the unital extension with coordinate tracking
        self.bar = Span(key=mono_key)
        for z in self.basis:
            self.bar.add(dict(z.terms))
        self.bar.add(dict(uq.one().terms))

    @property
    def dim(self):
        return len(self.basis)

    def bar_basis(self):
        return self.basis + [uq.one()]

    def coordinates(self, el: UElement):
        """Coordinates in (basis..., 1); None when el is outside."""
        return self.bar.coordinates(dict(el.terms))

    def contains(self, el: UElement) -> bool:
        return self.span.contains(el)


def tangent_from_coideal(V: Subspace) -> TangentSpace:
    if not is_unital(V):
        raise FodcError("coideal is not unital")
    if not is_right_coideal(V):
        raise FodcError("subspace is not a right coideal")
    sub = Subspace()
    basis = []
    for b in V.echelon_basis():
        z = b - uq.one().scale(uq.counit(b))
        if not z.is_zero() and sub.add(z):
            basis.append(z)
    if len(basis) != V.dim - 1:
        raise FodcError("counit-free part has unexpected dimension")
    return TangentSpace(basis)


def li_matrix(T: TangentSpace):
    rows = []
    for z in T.bar_basis():
        rows.append([pair(z, oq.gen(u)) for u in _LETTERS])
    return rows


def li_check(T: TangentSpace) -> bool:
    """True iff the functionals of the unital extension have rank 4 on the
    fundamental corepresentation's matrix elements."""
    return rank(li_matrix(T)) == 4


def normalize_basis(T: TangentSpace) -> TangentSpace:
    """Rescale to the basis dual to ((u11-u22)/2, u12, u21)."""
    if T.dim != 3:
        raise FodcError("normalization needs a 3-dimensional tangent space")
    duals = dual_basis_elements()
    B = [[pair(z, a) for a in duals] for z in T.basis]
    try:
        C = mat_inverse(B)
    except ValueError:
        raise FodcError("singular pairing matrix against the dual triple")
    new_basis = []
    for i in range(3):
        acc = UElement.zero()
        for k in range(3):
            acc = acc + T.basis[k].scale(C[i][k])
        new_basis.append(acc)
    return TangentSpace(new_basis)


def f_matrix(T: TangentSpace):
    """The commutation functionals: 3x3 matrix of dual-algebra elements.

    Entry (j, i) collects the right coproduct legs of the i-th tangent
    vector whose left legs land on the j-th basis vector; the legs on 1
    must reassemble the tangent vector itself, which is asserted.
    """
    n = T.dim
    F = [[UElement.zero() for _ in range(n)] for _ in range(n)]
    for i, z in enumerate(T.basis):
        ones_part = UElement.zero()
        for mr, left in uq.coproduct_legs(z).items():
            coords = T.coordinates(left)
            if coords is None:
                raise FodcError("coproduct leg leaves the coideal")
            for idx, c in coords.items():
                if idx == n:
                    ones_part = ones_part + UElement.monomial(mr, c)
                else:
                    F[idx][i] = F[idx][i] + UElement.monomial(mr, c)
        if not (ones_part == z):
            raise FodcError("legs on the unit do not reassemble the vector")
    return F


def universal_two_form_dim(T: TangentSpace) -> int:
    """dim of the invariant 2-forms of the universal calculus:
    nullity of the multiplication map on the unital extension, minus dim."""
    bar = T.bar_basis()
    sp = Span(key=mono_key)
    r = 0
    for x in bar:
        for y in bar:
            if sp.add(dict(uq.mul(x, y).terms)):
                r += 1
    nullity = len(bar) ** 2 - r
    return nullity - T.dim


def normalize_ideal_gen(g: OElement) -> OElement:
    """Push a listed generator into the counit kernel: g - eps(g) 1."""
    return g - OElement.monomial(oq.O_ONE, oq.counit(g))


def annihilator_span(T: TangentSpace, degree_cap=2):
    """Span of the joint annihilator of the unital extension among
    normal-form monomials of total degree <= cap (coordinate vectors)."""
    monos = oq.monomials_up_to_degree(degree_cap)
    matrix = [[pair(z, OElement.monomial(m)) for m in monos]
              for z in T.bar_basis()]
    from .linalg import nullspace
    sp = Span()
    for vec in nullspace(matrix):
        sp.add(vec)
    return sp, monos, matrix


def products_span(gens, degree_cap=2):
    """Span of {g * m : m monomial, deg(g m) <= cap} in monomial coordinates."""
    monos = oq.monomials_up_to_degree(degree_cap)
    index = {m: k for k, m in enumerate(monos)}
    sp = Span()
    for g in gens:
        for m in monos:
            prod = g * OElement.monomial(m)
            if prod.is_zero():
                continue
            if max(mm.degree() for mm in prod.terms) > degree_cap:
                continue
            sp.add({index[mm]: c for mm, c in prod.terms.items()})
    return sp


def right_ideal_check(T: TangentSpace, gens, degree_cap=2):
    """Annihilation and degree-capped completeness of listed generators."""
    gens = [normalize_ideal_gen(g) for g in gens]
    failures = []
    for k, g in enumerate(gens):
        for z, name in zip(T.bar_basis(), FORM_NAMES + ("1",)):
            v = pair(z, g)
            if not v.is_zero():
                failures.append(f"<{name}, generator {k}> = {v!r}")
    ann, monos, matrix = annihilator_span(T, degree_cap)
    ev_rank = rank(matrix)
    prods = products_span(gens, degree_cap)
    complete = prods.equals(ann)
    return {
        "annihilation": not failures,
        "failures": failures,
        "evaluation_rank": ev_rank,
        "rank_ok": ev_rank == T.dim + 1,
        "annihilator_dim": ann.dim,
        "products_dim": prods.dim,
        "completeness": complete,
        "ok": (not failures) and complete and ev_rank == T.dim + 1,
    }


class ExteriorData:
    """Quotient data of the universal exterior algebra in degrees 2..4."""

    def __init__(self, sym2_vectors):
        self.sym2_vectors = [dict(v) for v in sym2_vectors]
        key2 = _quot_key(set(WEDGE_BASIS))
        self.q2 = Span(key=key2)
        for v in self.sym2_vectors:
            self.q2.add(dict(v))
        if self.q2.dim != 6:
            raise FodcError(f"symmetric 2-forms span dim {self.q2.dim}, not 6")
        if any(p in WEDGE_BASIS for p in self.q2.rows):
            raise FodcError("chosen wedge basis does not survive the quotient")

        triple_basis = (0, 1, 2)
        key3 = _quot_key({triple_basis})
        self.q3 = Span(key=key3)
        for v in self.sym2_vectors:
            for k in range(3):
                self.q3.add({(i, j, k): c for (i, j), c in v.items()})
                self.q3.add({(k, i, j): c for (i, j), c in v.items()})
        self.dim3 = 27 - self.q3.dim

        # degree 4: the two-sided ideal fills everything
        q4 = Span()
        for v in self.sym2_vectors:
            for k in range(3):
                for l in range(3):
                    q4.add({(i, j, k, l): c for (i, j), c in v.items()})
                    q4.add({(k, i, j, l): c for (i, j), c in v.items()})
                    q4.add({(k, l, i, j): c for (i, j), c in v.items()})
        self.dim4 = 81 - q4.dim

    def dims(self):
        return (3, 9 - self.q2.dim, self.dim3, self.dim4)

    def red2(self, vec):
        """V (x) V coordinates -> wedge coordinates on WEDGE_BASIS."""
        res, _ = self.q2.reduce(dict(vec))
        out = [Scalar.zero()] * 3
        for p, c in res.items():
            out[WEDGE_BASIS.index(p)] = c
        return out

    def red3(self, vec):
        """Triple coordinates -> coefficient of the top class."""
        res, _ = self.q3.reduce(dict(vec))
        out = Scalar.zero()
        for t, c in res.items():
            if t == (0, 1, 2):
                out = out + c
            else:
                raise FodcError("triple reduction left a non-basis term")
        return out

    def wedge_table(self):
        """Wedge coordinates of every product w_i (x) w_j."""
        return {(i, j): self.red2({(i, j): Scalar.one()}) for i, j in PAIRS}


def _quot_key(preferred_complement):
    """Pivot order that avoids the quotient-basis keys."""
    def key(k):
        return (1 if k in preferred_complement else 0, k)
    return key


class FODCModel:
    """All derived calculus data for one tangent space."""

    def __init__(self, tangent: TangentSpace):
        if tangent.dim != 3:
            raise FodcError("model construction needs a 3-dimensional space")
        self.tangent = tangent
        self.products = [[uq.mul(x, y) for y in tangent.basis]
                         for x in tangent.basis]
        self.f = f_matrix(tangent)
        self.universal_dim = universal_two_form_dim(tangent)
        self.exterior = None
        self.d_omega = None

    # -- symmetric 2-forms -------------------------------------------------

    def sym2_vector(self, a: OElement):
        """Coordinates of omega(a_(1)) (x) omega(a_(2)) on the pair basis."""
        vec = {}
        for i in range(3):
            for j in range(3):
                c = pair(self.products[i][j], a)
                if not c.is_zero():
                    vec[(i, j)] = c
        return vec

    def symmetric_two_forms(self, gens):
        """Span the invariant symmetric 2-forms from right-ideal elements.

        The spanning set runs over the generators and their products with
        the four matrix generators; the span is monitored to stabilize at
        9 - universal_dim.
        """
        gens = [normalize_ideal_gen(g) for g in gens]
        target = 9 - self.universal_dim
        sp = Span()
        vectors = []
        pool = list(gens)
        for g in gens:
            for u in _LETTERS:
                pool.append(g * oq.gen(u))
        for a in pool:
            v = self.sym2_vector(a)
            if v and sp.add(dict(v)):
                vectors.append(v)
            if sp.dim == target:
                break
        if sp.dim != target:
            raise FodcError(
                f"symmetric 2-forms span dim {sp.dim}, expected {target}")
        return vectors

    def build_exterior(self, gens):
        self.sym2 = self.symmetric_two_forms(gens)
        self.exterior = ExteriorData(self.sym2)
        self.d_omega = self.maurer_cartan()
        self.d2_table = self._d2_table()
        return self.exterior

    # -- differentials -------------------------------------------------------

    def maurer_cartan(self):
        """Wedge coordinates of d(w_H), d(w_X), d(w_Y)."""
        out = []
        for a in dual_basis_elements():
            vec = {}
            for i in range(3):
                for j in range(3):
                    c = pair(self.products[i][j], a)
                    if not c.is_zero():
                        vec[(i, j)] = -c
            out.append(self.exterior.red2(vec))
        return out

    def _d2_table(self):
        """Top-class coordinate of d(w_i ^ w_j) for the wedge basis pairs."""
        table = {}
        for (i, j) in WEDGE_BASIS:
            acc = Scalar.zero()
            # d(wi ^ wj) = d(wi) ^ wj - wi ^ d(wj)
            for bidx, (bi, bj) in enumerate(WEDGE_BASIS):
                c = self.d_omega[i][bidx]
                if not c.is_zero():
                    acc = acc + c * self.exterior.red3(
                        {(bi, bj, j): Scalar.one()})
                c = self.d_omega[j][bidx]
                if not c.is_zero():
                    acc = acc - c * self.exterior.red3(
                        {(i, bi, bj): Scalar.one()})
            table[(i, j)] = acc
        return table

    def d_squared_on_forms(self):
        """d(d w_i) in the top degree; all three must vanish."""
        out = []
        for i in range(3):
            acc = Scalar.zero()
            for bidx, (bi, bj) in enumerate(WEDGE_BASIS):
                c = self.d_omega[i][bidx]
                if not c.is_zero():
                    acc = acc + c * self.d2_table[(bi, bj)]
            out.append(acc)
        return out

    # -- verification helpers -----------------------------------------------

    def tangent_env(self):
        H, X, Y = self.tangent.basis
        return {"H": H, "X": X, "Y": Y}

    def pairing_row(self, z: UElement):
        return [pair(z, m) for m in quadratic_monomials()]


def module_relation_check(model: FODCModel, degree_cap=2) -> bool:
    """Two-route check of the commutation functionals.

    For every tangent functional Z_i, word x of degree <= cap and generator
    u, the pairing of Z_i with x u must match the expansion through the
    commutation matrix: Z_i(x u) = Z_j(x) f^j_i(u) + eps(x) Z_i(u).
    """
    T = model.tangent
    monos = oq.monomials_up_to_degree(degree_cap)
    for m in monos:
        x = OElement.monomial(m)
        ex = oq.counit(x)
        zx = [pair(z, x) for z in T.basis]
        for u in _LETTERS:
            xu = x * oq.gen(u)
            for i in range(3):
                lhs = pair(T.basis[i], xu)
                rhs = ex * pair(T.basis[i], oq.gen(u))
                for j in range(3):
                    rhs = rhs + zx[j] * pair(model.f[j][i], oq.gen(u))
                if not (lhs - rhs).is_zero():
                    return False
    return True


def f_corepresentation_check(model: FODCModel) -> bool:
    """f^i_j(xy) = sum_k f^i_k(x) f^k_j(y) on the matrix generators."""
    for x in _LETTERS:
        for y in _LETTERS:
            xy = oq.gen(x) * oq.gen(y)
            for i in range(3):
                for j in range(3):
                    lhs = pair(model.f[i][j], xy)
                    rhs = Scalar.zero()
                    for k in range(3):
                        rhs = rhs + pair(model.f[i][k], oq.gen(x)) \
                            * pair(model.f[k][j], oq.gen(y))
                    if not (lhs - rhs).is_zero():
                        return False
    return True
