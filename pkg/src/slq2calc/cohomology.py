"""Finite-spin complexes of a calculus and their exact cohomology ranks.

The ladder representation of spin j/2 acts through

    E.e_v = [j/2 + v] e_(v-1),   F.e_v = [j/2 - v] e_(v+1),
    f_mu.e_v = mu^(-2v) e_v,     G.e_v = -2v e_v,

indexed by v = -j/2 .. j/2.  Tensoring with the invariant exterior algebra
of a calculus gives a four-term complex whose differential is assembled
from the tangent action, the wedge reduction tables and the Maurer-Cartan
coefficients; ranks are computed exactly and the cohomology dimensions
reported per degree.
"""

from __future__ import annotations

from .fodc import FODCModel, WEDGE_BASIS
from .linalg import rank
from .scalars import GroupLabel, Scalar, qnum
from .uq import UElement, mono_to_word


class SpinRep:
    """The (two_lambda + 1)-dimensional ladder module."""

    def __init__(self, two_lambda: int):
        if two_lambda < 0:
            raise ValueError("negative spin")
        self.two_lambda = two_lambda
        self.dim = two_lambda + 1

    def nu2(self, idx):
        """Twice the weight of the idx-th basis vector."""
        return 2 * idx - self.two_lambda

    def act_word(self, word, idx):
        """Apply a generator word to e_idx; returns (coeff, idx) or None."""
        coeff = Scalar.one()
        for atom in reversed(word):
            n2 = self.nu2(idx)
            if atom == "E":
                # E.e_v = [lambda + v] e_(v-1)
                k = (self.two_lambda + n2) // 2
                if k == 0:
                    return None
                coeff = coeff * qnum(k)
                idx -= 1
            elif atom == "F":
                k = (self.two_lambda - n2) // 2
                if k == 0:
                    return None
                coeff = coeff * qnum(k)
                idx += 1
            elif atom == "G":
                if n2 == 0:
                    return None
                coeff = coeff * Scalar.from_int(-n2)
            else:
                lab = GroupLabel(atom[1], atom[2])
                coeff = coeff * lab.as_scalar(-n2)
        return coeff, idx

    def act(self, Z: UElement, vec):
        """Action of a dual-algebra element on a coordinate vector."""
        out = [Scalar.zero()] * self.dim
        for m, c in Z.terms.items():
            word, k = mono_to_word(m)
            ck = c * k
            for idx, v in enumerate(vec):
                if v.is_zero():
                    continue
                r = self.act_word(word, idx)
                if r is None:
                    continue
                coeff, j = r
                if 0 <= j < self.dim:
                    out[j] = out[j] + coeff * ck * v

        return out

    def act_matrix(self, Z: UElement):
        cols = []
        for idx in range(self.dim):
            e = [Scalar.zero()] * self.dim
            e[idx] = Scalar.one()
            cols.append(self.act(Z, e))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]


def differential(model: FODCModel, rep: SpinRep, k: int):
    """Matrix of d: V (x) L^k -> V (x) L^(k+1) in coordinates.

    Degree-k coordinates are (basis form, module index) pairs, column
    index = form * dim + idx.
    """
    n = rep.dim
    acts = [rep.act_matrix(z) for z in model.tangent.basis]
    if k == 0:
        # d(v) = sum_r (Z_r v) (x) w_r
        rows = []
        for r in range(3):
            for i in range(n):
                rows.append([acts[r][i][j] for j in range(n)])
        return rows
    if k == 1:
        # d(v (x) w_i) = sum_r (Z_r v) (x) [w_r ^ w_i] + v (x) dw_i
        wedge = model.exterior.wedge_table()
        rows = [[Scalar.zero()] * (3 * n) for _ in range(3 * n)]
        for i in range(3):          # input form index
            for r in range(3):      # acting tangent index
                red = wedge[(r, i)]
                for b in range(3):  # output wedge-basis index
                    if red[b].is_zero():
                        continue
                    for out_i in range(n):
                        for in_i in range(n):
                            v = acts[r][out_i][in_i]
                            if not v.is_zero():
                                rows[b * n + out_i][i * n + in_i] = \
                                    rows[b * n + out_i][i * n + in_i] + red[b] * v
            for b in range(3):
                c = model.d_omega[i][b]
                if not c.is_zero():
                    for idx in range(n):
                        rows[b * n + idx][i * n + idx] = \
                            rows[b * n + idx][i * n + idx] + c
        return rows
    if k == 2:
        # d(v (x) wedge_b) = sum_r (Z_r v) (x) [w_r ^ wedge_b] + v (x) d wedge_b
        rows = [[Scalar.zero()] * (3 * n) for _ in range(n)]
        for b, (bi, bj) in enumerate(WEDGE_BASIS):
            for r in range(3):
                top = model.exterior.red3({(r, bi, bj): Scalar.one()})
                if not top.is_zero():
                    for out_i in range(n):
                        for in_i in range(n):
                            v = acts[r][out_i][in_i]
                            if not v.is_zero():
                                rows[out_i][b * n + in_i] = \
                                    rows[out_i][b * n + in_i] + top * v
            c = model.d2_table[(bi, bj)]
            if not c.is_zero():
                for idx in range(n):
                    rows[idx][b * n + idx] = rows[idx][b * n + idx] + c
        return rows
    raise ValueError("degree out of range")


def cohomology_dims(model: FODCModel, two_lambda: int):
    """(h0, h1, h2, h3) of the spin-two_lambda/2 complex, plus a d^2 check."""
    rep = SpinRep(two_lambda)
    n = rep.dim
    d0 = differential(model, rep, 0)
    d1 = differential(model, rep, 1)
    d2 = differential(model, rep, 2)
    if not _is_zero_product(d1, d0) or not _is_zero_product(d2, d1):
        raise ArithmeticError("differential does not square to zero")
    r0, r1, r2 = rank(d0), rank(d1), rank(d2)
    dims = (n, 3 * n, 3 * n, n)
    h0 = dims[0] - r0
    h1 = (dims[1] - r1) - r0
    h2 = (dims[2] - r2) - r1
    h3 = dims[3] - r2
    return (h0, h1, h2, h3)


def _is_zero_product(a, b):
    # a*b == 0 for dense scalar matrices
    for i in range(len(a)):
        for j in range(len(b[0])):
            acc = Scalar.zero()
            for k in range(len(b)):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            if not acc.is_zero():
                return False
    return True


def partial_grading_preserved(model: FODCModel, two_lambda: int) -> bool:
    """The internal weight grading is preserved by every differential.

    The weight of e_v (x) w_{i1} ^ ... is 2v plus the form weights (0 for
    the H-form, -2 for X, +2 for Y, doubled to stay integral).
    """
    rep = SpinRep(two_lambda)
    n = rep.dim
    form_w = (0, -2, 2)

    def grade0(idx):
        return rep.nu2(idx)

    checks = []
    d0 = differential(model, rep, 0)
    checks.append((d0, [grade0(i) for i in range(n)],
                   [form_w[r] + grade0(i) for r in range(3) for i in range(n)]))
    d1 = differential(model, rep, 1)
    wedge_w = [form_w[i] + form_w[j] for (i, j) in WEDGE_BASIS]
    checks.append((d1,
                   [form_w[r] + grade0(i) for r in range(3) for i in range(n)],
                   [wedge_w[b] + grade0(i) for b in range(3) for i in range(n)]))
    d2 = differential(model, rep, 2)
    top_w = 0  # H ^ X ^ Y
    checks.append((d2,
                   [wedge_w[b] + grade0(i) for b in range(3) for i in range(n)],
                   [top_w + grade0(i) for i in range(n)]))
    for mat, col_w, row_w in checks:
        for i, rw in enumerate(row_w):
            for j, cw in enumerate(col_w):
                if not mat[i][j].is_zero() and rw != cw:
                    return False
    return True
