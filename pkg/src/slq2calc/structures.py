"""Extra structure on a calculus: symmetry filters, braidings, brackets.

Hopf-automorphism invariance reduces to gradedness of the tangent space;
star-calculus structure reduces to star-invariance under the three real
forms.  Braidings live on the 9-dimensional space of invariant 2-tensors:
they must commute with the right-action matrices assembled from the
commutation functionals, fix the symmetric 2-forms, and satisfy the braid
relation on triples.  The solver looks for braidings whose fixed space is
exactly the symmetric forms, acting by one further eigenvalue on an
invariant complement.
"""

from __future__ import annotations

from typing import NamedTuple

from . import oq, uq
from .fodc import FODCModel, PAIRS, TangentSpace
from .linalg import (Span, kron, mat_eq, mat_identity, mat_inverse,
                     mat_is_zero, mat_mul, mat_scale, mat_sub, rank)
from .scalars import RealForm, Scalar
from .smallsolve import Unresolved, solve_system
from .uq import UElement


# -- symmetry filters ---------------------------------------------------------

def hopf_invariant(T: TangentSpace) -> bool:
    """True iff the space is spanned by weight-homogeneous elements."""
    for z in T.basis:
        for part in uq.degree_split(z).values():
            if not T.contains(part):
                return False
    return True


def star_invariant(T: TangentSpace, form: str) -> bool:
    return all(T.contains(uq.apply_star(z, form)) for z in T.basis)


def real_forms(T: TangentSpace):
    return [f for f in RealForm.ALL if star_invariant(T, f)]


# -- right action on invariant 2-tensors --------------------------------------

_LETTER_PAIRS = {"a": ("a",), "b": ("b",), "c": ("c",), "d": ("d",)}
_COPROD = {"a": (("a", "a"), ("b", "c")), "b": (("a", "b"), ("b", "d")),
           "c": (("c", "a"), ("d", "c")), "d": (("c", "b"), ("d", "d"))}


def right_action_matrices(model: FODCModel):
    """The four 9x9 matrices of the right action of the matrix generators.

    In coordinates on w_i (x) w_j the right action by x sends the (ij)
    coordinate through f^i_k(x_(1)) f^j_l(x_(2)); a braiding must commute
    with all four.
    """
    fval = {}
    for letter in "abcd":
        g = oq.gen(letter)
        fval[letter] = [[oq.pair(model.f[i][j], g) for j in range(3)]
                        for i in range(3)]
    out = {}
    for letter in "abcd":
        m9 = [[Scalar.zero() for _ in range(9)] for _ in range(9)]
        for (l1, l2) in _COPROD[letter]:
            t1 = _transpose(fval[l1])
            t2 = _transpose(fval[l2])
            m9 = _madd(m9, kron(t1, t2))
        out[letter] = m9
    return out


def _transpose(m):
    return [[m[j][i] for j in range(len(m))] for i in range(len(m))]


def _madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


# -- braidings ----------------------------------------------------------------

class Braiding(NamedTuple):
    sigma: list            # 9x9 scalar matrix on the pair basis
    eigenvalue: Scalar     # the action on the complement of the fixed space
    complement: list       # three 9-coordinate dict-vectors


def _pair_index(p):
    return PAIRS.index(p)


def vec9_of_dict(v):
    out = [Scalar.zero()] * 9
    for p, c in v.items():
        out[_pair_index(p)] = c
    return out


def sigma_from_eigendata(sym2_vectors, comp_vectors, lam: Scalar):
    """Assemble sigma = 1 on the symmetric forms, lam on the complement."""
    cols = [vec9_of_dict(v) for v in sym2_vectors] + \
           [vec9_of_dict(v) for v in comp_vectors]
    B = [[cols[j][i] for j in range(9)] for i in range(9)]
    Binv = mat_inverse(B)
    D = mat_identity(9)
    for k in range(6, 9):
        D[k][k] = lam
    return mat_mul(mat_mul(B, D), Binv)


def apply_mat(m, vec):
    out = [Scalar.zero()] * len(m)
    for j, c in enumerate(vec):
        if c.is_zero():
            continue
        for i in range(len(m)):
            if not m[i][j].is_zero():
                out[i] = out[i] + m[i][j] * c
    return out


def braid_relation_holds(sigma) -> bool:
    i3 = mat_identity(3)
    s12 = kron(sigma, i3)
    s23 = kron(i3, sigma)
    lhs = mat_mul(mat_mul(s12, s23), s12)
    rhs = mat_mul(mat_mul(s23, s12), s23)
    return mat_eq(lhs, rhs)


def verify_braiding(model: FODCModel, sigma) -> dict:
    """The four defining conditions, reported separately."""
    n = 9
    invertible = rank(sigma) == n
    ms = right_action_matrices(model)
    bimodule = all(mat_eq(mat_mul(sigma, m), mat_mul(m, sigma))
                   for m in ms.values())
    annihilates = all(
        all(x.is_zero() for x in _sub_vec(apply_mat(sigma, vec9_of_dict(v)),
                                          vec9_of_dict(v)))
        for v in model.sym2)
    braid = braid_relation_holds(sigma)
    return {"invertible": invertible, "bimodule": bimodule,
            "annihilates_sym2": annihilates, "braid": braid,
            "ok": invertible and bimodule and annihilates and braid}


def _sub_vec(u, v):
    return [x - y for x, y in zip(u, v)]


def minimal_polynomial_is(sigma, lam: Scalar) -> bool:
    """(x-1)(x-lam) kills sigma with eigenspace dimensions (6, 3)."""
    one = mat_identity(9)
    a = mat_sub(sigma, one)
    b = mat_sub(sigma, mat_scale(one, lam))
    if not mat_is_zero(mat_mul(a, b)):
        return False
    return rank(a) == 3 and rank(b) == 6


# -- search for braidings -------------------------------------------------------

_GRADE = (0, -1, 1)  # H, X, Y


def _pair_grade(p):
    return _GRADE[p[0]] + _GRADE[p[1]]


def solve_braiding(model: FODCModel, max_aux=6):
    """All braidings with fixed space exactly the symmetric 2-forms.

    Stage 1 solves the linear bimodule constraints for a projection onto an
    invariant complement of the symmetric forms.  A unique candidate is
    tested directly.  A multi-parameter family is restricted to complements
    homogeneous for the grading (0, -1, +1) of (H, X, Y) — every listed
    braiding is — and the braid relation is solved exactly for the
    remaining parameters and the eigenvalue.
    """
    ms = right_action_matrices(model)
    svecs = [vec9_of_dict(v) for v in model.sym2]
    # block basis: six symmetric forms, then a complement from pair vectors
    comp_idx = _choose_complement(svecs)
    basis_cols = svecs + [_unit9(k) for k in comp_idx]
    B = [[basis_cols[j][i] for j in range(9)] for i in range(9)]
    Binv = mat_inverse(B)
    mblocks = {}
    for letter, m in ms.items():
        mb = mat_mul(mat_mul(Binv, m), B)
        for i in range(6, 9):
            for j in range(6):
                if not mb[i][j].is_zero():
                    raise Unresolved("symmetric forms not stable under action")
        mblocks[letter] = mb
    # Sylvester system for W: 6x3, W Mcc - Mss W = Msc for each letter
    unknowns = [(r, c) for r in range(6) for c in range(3)]
    uindex = {u: k for k, u in enumerate(unknowns)}
    rows, rhs = [], []
    for mb in mblocks.values():
        mss = [[mb[i][j] for j in range(6)] for i in range(6)]
        msc = [[mb[i][j] for j in range(6, 9)] for i in range(6)]
        mcc = [[mb[i][j] for j in range(6, 9)] for i in range(6, 9)]
        for r in range(6):
            for c in range(3):
                row = [Scalar.zero()] * len(unknowns)
                for k in range(3):
                    row[uindex[(r, k)]] = row[uindex[(r, k)]] + mcc[k][c]
                for k in range(6):
                    row[uindex[(k, c)]] = row[uindex[(k, c)]] - mss[r][k]
                rows.append(row)
                rhs.append(msc[r][c])
    sol = _solve_linear(rows, rhs)
    if sol is None:
        return []
    w0, hom = sol
    candidates = []
    if not hom:
        candidates.append(({}, w0, []))
    else:
        # restrict to grading-homogeneous complements
        grades_s = _block_grades(svecs)
        grades_c = [_pair_grade(PAIRS[k]) for k in comp_idx]
        if grades_s is None:
            raise Unresolved("symmetric forms are not graded")
        fixed = {}
        for k, (r, c) in enumerate(unknowns):
            if grades_s[r] != grades_c[c]:
                fixed[k] = Scalar.zero()
        rows2 = list(rows)
        rhs2 = list(rhs)
        for k, val in fixed.items():
            row = [Scalar.zero()] * len(unknowns)
            row[k] = Scalar.one()
            rows2.append(row)
            rhs2.append(val)
        sol2 = _solve_linear(rows2, rhs2)
        if sol2 is None:
            return []
        w0g, homg = sol2
        if len(homg) > max_aux:
            raise Unresolved(f"{len(homg)} braiding parameters is out of scope")
        candidates.append((dict(enumerate(homg, start=1)), w0g, homg))
    out = []
    for aux, w0cur, hom_basis in candidates:
        out.extend(_finish_candidates(model, B, Binv, unknowns, w0cur,
                                      hom_basis))
    # deduplicate by the sigma matrix
    seen = []
    uniq = []
    for b in out:
        if any(mat_eq(b.sigma, s) for s in seen):
            continue
        seen.append(b.sigma)
        uniq.append(b)
    return uniq


def _finish_candidates(model, B, Binv, unknowns, w0, hom_basis):
    naux = len(hom_basis)
    kap_idx = naux + 1
    kappa = Scalar.param(kap_idx)
    wvals = {}
    for k, u in enumerate(unknowns):
        val = w0.get(k, Scalar.zero())
        for a, h in enumerate(hom_basis, start=1):
            c = h.get(k)
            if c is not None and not c.is_zero():
                val = val + Scalar.param(a) * c
        wvals[u] = val
    # projection in block coordinates, then back to pair coordinates
    pblock = [[Scalar.zero()] * 9 for _ in range(9)]
    for (r, c), v in wvals.items():
        pblock[r][6 + c] = v
    for k in range(3):
        pblock[6 + k][6 + k] = Scalar.one()
    p9 = mat_mul(mat_mul(B, pblock), Binv)
    i3 = mat_identity(3)
    p1 = kron(p9, i3)
    p2 = kron(i3, p9)
    lhs = mat_sub(mat_mul(mat_mul(p1, p2), p1), mat_mul(mat_mul(p2, p1), p2))
    rhs = mat_scale(mat_sub(p2, p1), kappa)
    eqs = [x - y for rl, rr in zip(lhs, rhs) for x, y in zip(rl, rr)]
    eqs = [e for e in eqs if not e.is_zero()]
    variables = list(range(1, naux + 1)) + [kap_idx]
    if not eqs:
        return []  # P1 == P2 cannot happen for rank-3 projections
    try:
        assignments = solve_system(eqs, variables, nonzero={kap_idx})
    except Unresolved:
        if naux == 0:
            return []
        raise
    out = []
    for assign in assignments:
        kap = assign.get(kap_idx)
        if kap is None:
            continue
        # eigenvalues from kappa (lam-1)^2 = lam... kappa lam^2-(2kappa+1)lam+kappa
        from .smallsolve import poly_roots
        lams = poly_roots([kap, -(kap + kap + Scalar.one()), kap])
        for lam in lams:
            if lam.is_zero() or lam == Scalar.one():
                continue
            subs = {v: assign[v] for v in assign}
            pnum = [[p9[i][j].subs_params(subs) for j in range(9)]
                    for i in range(9)]
            sigma = _madd_scaled(mat_identity(9), pnum, lam - Scalar.one())
            rep = verify_braiding(model, sigma)
            if rep["ok"] and minimal_polynomial_is(sigma, lam):
                comp = _projection_image(pnum)
                out.append(Braiding(sigma, lam, comp))
    return out


def _madd_scaled(a, b, c):
    return [[x + y * c for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _projection_image(p9):
    sp = Span()
    img = []
    for j in range(9):
        col = {i: p9[i][j] for i in range(9) if not p9[i][j].is_zero()}
        if col and sp.add(dict(col)):
            img.append(col)
    return [{PAIRS[i]: c for i, c in v.items()} for v in img]


def _unit9(k):
    out = [Scalar.zero()] * 9
    out[k] = Scalar.one()
    return out


def _choose_complement(svecs):
    sp = Span()
    for v in svecs:
        sp.add({i: c for i, c in enumerate(v) if not c.is_zero()})
    # prefer the graded triple (XH, YH, YX)
    preferred = [_pair_index((1, 0)), _pair_index((2, 0)), _pair_index((2, 1))]
    chosen = []
    for k in preferred + [i for i in range(9) if i not in preferred]:
        if sp.add({k: Scalar.one()}):
            chosen.append(k)
        if len(chosen) == 3:
            return chosen
    raise Unresolved("no complement of the symmetric forms")


def _block_grades(svecs):
    grades = []
    for v in svecs:
        g = {_pair_grade(PAIRS[i]) for i, c in enumerate(v) if not c.is_zero()}
        if len(g) != 1:
            return None
        grades.append(g.pop())
    return grades


def _solve_linear(rows, rhs):
    from .linalg import solve_affine
    return solve_affine(rows, rhs)


# -- generalized bracket and Jacobi identity -----------------------------------

class BracketTable(NamedTuple):
    constants: dict        # (i, j) -> [c_H, c_X, c_Y]


def lie_bracket(model: FODCModel, sigma) -> BracketTable:
    """[Z_i, Z_j] = Z_i Z_j - sigma^(ij)_(kl) Z_k Z_l, reduced to the basis.

    The matrix entry sigma^(ij)_(kl) is the (ij) coordinate of the image of
    the (kl) basis tensor; functionals transform through the transpose of
    the action on forms.  Non-closure raises.
    """
    T = model.tangent
    consts = {}
    for i in range(3):
        for j in range(3):
            acc = dict(model.products[i][j].terms)
            acc = UElement(acc)
            row = _pair_index((i, j))
            for k in range(3):
                for l in range(3):
                    c = sigma[row][_pair_index((k, l))]
                    if not c.is_zero():
                        acc = acc - model.products[k][l].scale(c)
            coords = T.coordinates(acc)
            if coords is None:
                raise ValueError(f"bracket [{i},{j}] leaves the tangent space")
            if not coords.get(3, Scalar.zero()).is_zero():
                raise ValueError(f"bracket [{i},{j}] has a constant term")
            consts[(i, j)] = [coords.get(k, Scalar.zero()) for k in range(3)]
    return BracketTable(consts)


def jacobi_check(model: FODCModel, sigma, table: BracketTable) -> bool:
    """(beta(beta x id) - beta(id x beta)) A3t = 0 on all basis triples."""
    i3 = mat_identity(3)
    s12 = kron(sigma, i3)
    s23 = kron(i3, sigma)
    i27 = mat_identity(27)
    a3 = mat_mul(mat_sub(i27, s12),
                 _madd(mat_sub(i27, s23), mat_mul(s23, s12)))
    triples = [(i, j, k) for i in range(3) for j in range(3) for k in range(3)]
    tindex = {t: n for n, t in enumerate(triples)}

    def beta(i, j):
        return table.constants[(i, j)]

    for (i, j, k) in triples:
        out = [Scalar.zero()] * 3
        row_in = tindex[(i, j, k)]
        for (r, s, t) in triples:
            c = a3[row_in][tindex[(r, s, t)]]
            if c.is_zero():
                continue
            # beta(beta(r,s), t) - beta(r, beta(s,t))
            for m in range(3):
                cm = beta(r, s)[m]
                if not cm.is_zero():
                    for n in range(3):
                        out[n] = out[n] + c * cm * beta(m, t)[n]
                cm = beta(s, t)[m]
                if not cm.is_zero():
                    for n in range(3):
                        out[n] = out[n] - c * cm * beta(r, m)[n]
        if any(not x.is_zero() for x in out):
            return False
    return True
