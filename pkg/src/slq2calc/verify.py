"""The per-calculus verification battery and the list-level filters.

``verify_calculus`` rebuilds one calculus from its coideal basis and checks
every recorded piece of data exactly: coideal axioms, the independence
condition, the universal 2-form dimension, the normalized dual basis, the
commutation matrix, the quadratic relations, the fundamental
representation, the pairing table, right-ideal annihilation and degree-2
completeness, the symmetric 2-forms, the exterior dimensions, the
Maurer-Cartan coefficients, symmetry filters, real forms, the braiding
with its bracket and Jacobi identity, and the cohomology table.
"""

from __future__ import annotations

from . import coideal, cohomology, fodc, oq, structures, uq
from .exprs import parse_o, parse_scalar, parse_u
from .fixtures import (FixtureSet, load_u_basis, parse_pair_vector,
                       PAIR_NAMES, WEDGE_NAMES)
from .linalg import Span, rank
from .scalars import Scalar


class CheckResult:
    def __init__(self, name, ok, detail=""):
        self.name = name
        self.ok = ok
        self.detail = detail

    def as_dict(self):
        return {"check": self.name, "ok": self.ok, "detail": self.detail}


def build_model(record, degree_cap=2):
    basis = load_u_basis(record["coideal_basis"])
    V = coideal.closure(basis)
    T = fodc.normalize_basis(fodc.tangent_from_coideal(V))
    model = fodc.FODCModel(T)
    gens = [parse_o(g) for g in record["right_ideal"]]
    model.right_ideal_gens = gens
    model.right_ideal_report = fodc.right_ideal_check(T, gens, degree_cap)
    model.build_exterior(gens)
    return model


def verify_calculus(record, checks=None, two_lambda_max=5, degree_cap=2):
    """Run the full battery; returns a list of CheckResult."""
    out = []
    wanted = None if checks is None else set(checks)

    def want(name):
        return wanted is None or name in wanted

    basis = load_u_basis(record["coideal_basis"])
    V = coideal.closure(basis)
    if want("coideal"):
        ok = V.dim == 4 and coideal.is_right_coideal(V) \
            and coideal.is_unital(V)
        out.append(CheckResult("coideal", ok, f"dim {V.dim}"))
    T0 = fodc.tangent_from_coideal(V)
    if want("li"):
        out.append(CheckResult("li", fodc.li_check(T0)))
    if want("universal-dim"):
        d = fodc.universal_two_form_dim(T0)
        out.append(CheckResult("universal-dim", d == 3, f"dim {d}"))
    T = fodc.normalize_basis(T0)
    model = fodc.FODCModel(T)
    env = model.tangent_env()

    if want("tangent-basis"):
        fixture_hxy = load_u_basis(record["HXY"])
        ok = all(T.basis[k] == fixture_hxy[k] for k in range(3))
        out.append(CheckResult("tangent-basis", ok))
    if want("f-matrix"):
        ok = True
        bad = []
        for i in range(3):
            for j in range(3):
                expected = parse_u(record["f_matrix"][i][j], env)
                if not (model.f[i][j] == expected):
                    ok = False
                    bad.append(f"({'HXY'[i]},{'HXY'[j]})")
        out.append(CheckResult("f-matrix", ok, " ".join(bad)))
    if want("relations"):
        ok = True
        for rel in record["relations"]:
            lhs = parse_u(rel["lhs"], env)
            rhs = parse_u(rel["rhs"], env)
            if not (lhs - rhs).is_zero():
                ok = False
        out.append(CheckResult("relations", ok))
    if want("fundamental"):
        ok = True
        for k, name in enumerate("HXY"):
            mat = uq.fundamental_matrix(T.basis[k])
            fix = record["fund_repr"][name]
            for r in range(2):
                for c in range(2):
                    if not (mat[r][c] - parse_scalar(fix[r][c])).is_zero():
                        ok = False
        out.append(CheckResult("fundamental", ok))
    if want("pairing-table"):
        ok = True
        nonzero = zero = 0
        for k, name in enumerate("HXY"):
            row = model.pairing_row(T.basis[k])
            for col, val in enumerate(row):
                fix = parse_scalar(record["pairing_table"][name][col])
                if not (val - fix).is_zero():
                    ok = False
                if fix.is_zero():
                    zero += 1
                else:
                    nonzero += 1
        out.append(CheckResult("pairing-table", ok,
                               f"{nonzero} nonzero, {zero} zero cells"))

    gens = [parse_o(g) for g in record["right_ideal"]]
    rep = fodc.right_ideal_check(T, gens, degree_cap)
    if want("right-ideal"):
        out.append(CheckResult(
            "right-ideal", rep["ok"],
            f"rank {rep['evaluation_rank']}, "
            f"annihilator dim {rep['annihilator_dim']}"))
    model.build_exterior(gens)
    if want("sym2"):
        sp = Span()
        for v in model.sym2:
            sp.add(dict(v))
        fixture_forms = [parse_pair_vector(d) for d in record["sym2_forms"]]
        contained = all(sp.contains(dict(v)) for v in fixture_forms)
        fsp = Span()
        for v in fixture_forms:
            fsp.add(dict(v))
        ok = sp.dim == 6 and contained and fsp.dim == 6
        out.append(CheckResult("sym2", ok, f"dim {sp.dim}"))
    if want("exterior-dims"):
        dims = model.exterior.dims()
        out.append(CheckResult("exterior-dims", dims == (3, 3, 1, 0),
                               str(dims)))
    if want("maurer-cartan"):
        ok = True
        for k, name in enumerate("HXY"):
            fix = record["d_omega"][name]
            for b, wname in enumerate(WEDGE_NAMES):
                expected = parse_scalar(fix.get(wname, "0"))
                if not (model.d_omega[k][b] - expected).is_zero():
                    ok = False
        out.append(CheckResult("maurer-cartan", ok))
    if want("d-squared"):
        ok = all(x.is_zero() for x in model.d_squared_on_forms())
        out.append(CheckResult("d-squared", ok))
    if want("module-consistency"):
        out.append(CheckResult("module-consistency",
                               fodc.module_relation_check(model)))
    if want("f-corepresentation"):
        out.append(CheckResult("f-corepresentation",
                               fodc.f_corepresentation_check(model)))
    if want("hopf-invariant"):
        out.append(CheckResult("hopf-invariant",
                               structures.hopf_invariant(T)))
    if want("real-forms"):
        forms = structures.real_forms(T)
        ok = forms == sorted(record["real_forms"],
                             key=["su2", "su11", "slr"].index) or \
            set(forms) == set(record["real_forms"])
        out.append(CheckResult("real-forms", ok, ",".join(forms)))

    if want("braiding") or want("bracket") or want("jacobi"):
        bdata = record.get("braiding")
        if bdata is None:
            if want("braiding"):
                sols = structures.solve_braiding(model)
                out.append(CheckResult(
                    "braiding", not sols,
                    "no braiding (exact-kernel ansatz)" if not sols
                    else f"unexpected braiding found ({len(sols)})"))
            if want("bracket"):
                out.append(CheckResult("bracket", True, "not applicable"))
            if want("jacobi"):
                out.append(CheckResult("jacobi", True, "not applicable"))
        else:
            lam = parse_scalar(bdata["eigenvalue_2"])
            comp = [parse_pair_vector(d) for d in bdata["eigenspace_2"]]
            sigma = structures.sigma_from_eigendata(model.sym2, comp, lam)
            if want("braiding"):
                brep = structures.verify_braiding(model, sigma)
                minok = structures.minimal_polynomial_is(sigma, lam)
                out.append(CheckResult(
                    "braiding", brep["ok"] and minok,
                    "(1-s)(l+s)=0 " + ("ok" if minok else "FAIL")))
            table = None
            if want("bracket"):
                try:
                    table = structures.lie_bracket(model, sigma)
                    out.append(CheckResult("bracket", True, "closes"))
                except ValueError as exc:
                    out.append(CheckResult("bracket", False, str(exc)))
            if want("jacobi"):
                if table is None:
                    table = structures.lie_bracket(model, sigma)
                out.append(CheckResult(
                    "jacobi", structures.jacobi_check(model, sigma, table)))

    if want("cohomology"):
        ok = True
        detail = []
        for tl in range(two_lambda_max + 1):
            dims = cohomology.cohomology_dims(model, tl)
            expect = (1, 0, 0, 1) if tl == 0 else (0, 0, 0, 0)
            euler = dims[0] - dims[1] + dims[2] - dims[3]
            if dims != expect or euler != 0:
                ok = False
            detail.append(f"2l={tl}:{dims}")
        out.append(CheckResult("cohomology", ok, " ".join(detail)))
    return out


ALL_CHECKS = (
    "coideal", "li", "universal-dim", "tangent-basis", "f-matrix",
    "relations", "fundamental", "pairing-table", "right-ideal", "sym2",
    "exterior-dims", "maurer-cartan", "d-squared", "module-consistency",
    "f-corepresentation", "hopf-invariant", "real-forms", "braiding",
    "bracket", "jacobi", "cohomology",
)


def run_filter(fixtures: FixtureSet):
    """The selection pipeline over the filtered list plus excluded samples.

    Returns (results, survivors): per-record dicts with the independence
    flag, the universal 2-form dimension and the invariance flag.
    """
    results = []
    for item in fixtures.items:
        basis = load_u_basis(item["basis"])
        V = coideal.Subspace(basis)
        T = fodc.tangent_from_coideal(V)
        li = fodc.li_check(T)
        dim2 = fodc.universal_two_form_dim(T)
        hopf = structures.hopf_invariant(T)
        results.append({"kind": "item", "item": item["item"],
                        "family": item["family"], "li": li,
                        "two_form_dim": dim2, "hopf_invariant": hopf,
                        "survives": li and dim2 >= 3,
                        "expected_two_form_dim": item["two_form_dim"],
                        "expected_hopf": item["hopf_invariant"],
                        "page": item.get("page")})
    for rec in fixtures.excluded:
        basis = fixtures.family_basis(rec["family"], rec["params"])
        V = coideal.Subspace(basis)
        T = fodc.tangent_from_coideal(V)
        li = fodc.li_check(T)
        dim2 = fodc.universal_two_form_dim(T)
        results.append({"kind": "excluded", "family": rec["family"],
                        "params": rec["params"], "li": li,
                        "two_form_dim": dim2,
                        "survives": li and dim2 >= 3})
    survivors = [r for r in results if r["survives"]]
    return results, survivors


def annihilator_from_generators(gens, degree_cap=2):
    return fodc.products_span([fodc.normalize_ideal_gen(g) for g in gens],
                              degree_cap)


def isomorphism_class_span(record, degree_cap=2):
    """Degree-capped annihilator span of a calculus record."""
    basis = load_u_basis(record["coideal_basis"])
    V = coideal.closure(basis)
    T = fodc.tangent_from_coideal(V)
    sp, _, _ = fodc.annihilator_span(T, degree_cap)
    return sp
