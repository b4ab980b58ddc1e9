#!/usr/bin/env python3
"""Build the fixture JSON files from the transcribed tables.

Run from the repository root:  python3 tools/make_fixtures.py

Every record is validated on the way out: coideal bases must span unital
right coideals of the stated dimension at the recorded samples, the
marked families must pass the independence check there, and each boundary
sample must actually exhibit the recorded degeneration.
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from slq2calc import coideal, fodc, uq
from slq2calc.exprs import parse_scalar, parse_u
from slq2calc.scalars import PARAM_ALIASES, PARAM_NAMES, Scalar

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "slq2calc", "fixtures")


def P(d):
    """Parameter dict {alias: value-string} -> {p-index: Scalar}."""
    out = {}
    for k, v in d.items():
        name = PARAM_ALIASES.get(k, k)
        out[PARAM_NAMES.index(name) + 1] = parse_scalar(str(v))
    return out


def load_basis(strings, params):
    vals = P(params)
    out = []
    for s in strings:
        el = parse_u(s)
        el = uq.UElement({m: c.subs_params(vals) for m, c in el.terms.items()
                          if not c.subs_params(vals).is_zero()})
        out.append(el)
    return out


# ---------------------------------------------------------------------------
# the eleven calculi (detail tables), page order
# ---------------------------------------------------------------------------

CALCULI = [
    {
        "name": "calc1", "page": 1, "item": 1,
        "coideal_basis": ["F*K^2*E+q^5/(q^2-1)^2*K^4", "F*K", "K*E", "1"],
        "HXY": ["2*(q^(-1)-q)/(q^4+1)*(F*K^2*E+q^5*(K^4-1)/(q^2-1)^2)",
                "q^(-1/2)*F*K", "q^(-1/2)*K*E"],
        "real_forms": ["su2", "su11", "slr"],
        "fund_repr": {"H": [["2*q^(-2)/(q^2+q^(-2))", "0"],
                            ["0", "-2*q^2/(q^2+q^(-2))"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q*H*X-q^(-1)*X*H", "rhs": "2*(q+q^(-1))/(q^2+q^(-2))*X"},
            {"lhs": "q^(-1)*H*Y-q*Y*H", "rhs": "-2*(q+q^(-1))/(q^2+q^(-2))*Y"},
            {"lhs": "q^(-2)*X*Y-q^2*Y*X", "rhs": "(q^2+q^(-2))/2*H"},
        ],
        "f_matrix": [["K^4", "0", "0"],
                     ["2*q^(-3/2)*(q^(-1)-q)/(q^2+q^(-2))*K^3*E", "K^2", "0"],
                     ["2*q^(-3/2)*(q^(-1)-q)/(q^2+q^(-2))*F*K^3", "0", "K^2"]],
        "d_omega": {"H": {"XY": "-(q^4+1)/2"},
                    "X": {"HX": "-2*(q^(-2)+1)/(q^2+q^(-2))"},
                    "Y": {"HY": "2*(q^2+1)/(q^2+q^(-2))"}},
        "pairing_table": {
            "H": ["(2*q^(-2)+2*q^(-4))/(q^2+q^(-2))", "0", "0", "0",
                  "2*(q^(-1)-q)/(q^2+q^(-2))", "0", "0", "0",
                  "(-2*q^4-2*q^2)/(q^2+q^(-2))"],
            "X": ["0", "1", "0", "0", "0", "q", "0", "0", "0"],
            "Y": ["0", "0", "1", "0", "0", "0", "0", "q", "0"]},
        "right_ideal": ["u11+q^(-4)*u22-(1+q^(-4))", "u12^2", "u21^2",
                        "u12*u21+(q^3-q)*u11", "(u11-1)*u12", "(u11-1)*u21"],
        "sym2_forms": [{"HH": "1"}, {"XX": "1"},
                       {"HX": "q^(-1)", "XH": "q"},
                       {"XY": "q^2", "YX": "q^(-2)"}, {"YY": "1"},
                       {"HY": "q", "YH": "q^(-1)"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "q^(-2)", "XH": "-q^2"},
            {"HY": "q^2", "YH": "-q^(-2)"},
            {"XY": "q^3", "YX": "-q^(-3)",
             "HH": "-4*(q-q^(-1))/(q^2+q^(-2))^2"}]},
    },
    {
        "name": "calc2", "page": 2, "item": 8,
        "coideal_basis": ["F*K^5", "K*E", "K^4", "1"],
        "HXY": ["2/(q^(-2)-q^2)*(K^4-1)", "q^(-5/2)*F*K^5", "q^(-1/2)*K*E"],
        "real_forms": ["slr"],
        "fund_repr": {"H": [["2*q^(-1)/(q+q^(-1))", "0"],
                            ["0", "-2*q/(q+q^(-1))"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q^2*H*X-q^(-2)*X*H", "rhs": "2*X"},
            {"lhs": "q^(-2)*H*Y-q^2*Y*H", "rhs": "-2*Y"},
            {"lhs": "q^(-3)*X*Y-q^3*Y*X+(q^2+1)^2*(q^2-1)/(4*q^3)*H^2",
             "rhs": "(q+q^(-1))/2*H"},
        ],
        # the (H, X) entry follows from the coproduct; the printed table
        # carries the opposite sign (see the decisions ledger)
        "f_matrix": [["K^4", "(q^(-2)-q^2)/2*X", "0"],
                     ["0", "K^6", "0"],
                     ["0", "0", "K^2"]],
        "d_omega": {"H": {"XY": "(-q^4-q^2)/2"},
                    "X": {"HX": "-2*q^(-2)"},
                    "Y": {"HY": "2*q^2"}},
        "pairing_table": {
            "H": ["2*q^(-2)", "0", "0", "0", "0", "0", "0", "0", "-2*q^2"],
            "X": ["0", "q^(-2)", "0", "0", "0", "q^3", "0", "0", "0"],
            "Y": ["0", "0", "1", "0", "0", "0", "0", "q", "0"]},
        "right_ideal": ["u11+q^(-2)*u22-(1+q^(-2))", "u12^2", "u21^2",
                        "u12*u21", "(u11-q^(-2))*u12", "(u11-1)*u21"],
        "sym2_forms": [{"HH": "1", "XY": "-(q^2+1)^2*(q^2-1)/4"},
                       {"XX": "1"},
                       {"HX": "q^(-2)", "XH": "q^2"},
                       {"XY": "q^3", "YX": "q^(-3)"}, {"YY": "1"},
                       {"HY": "q^2", "YH": "q^(-2)"}],
        "braiding": None,
    },
    {
        "name": "calc3", "page": 3, "item": 9,
        "coideal_basis": ["F*K^-3", "K*E", "K^-4", "1"],
        "HXY": ["2/(q^2-q^(-2))*(K^-4-1)", "q^(3/2)*F*K^-3", "q^(-1/2)*K*E"],
        "real_forms": ["slr"],
        "fund_repr": {"H": [["2*q/(q+q^(-1))", "0"],
                            ["0", "-2*q^(-1)/(q+q^(-1))"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q^(-2)*H*X-q^2*X*H", "rhs": "2*X"},
            {"lhs": "q^2*H*Y-q^(-2)*Y*H", "rhs": "-2*Y"},
            {"lhs": "q*X*Y-q^(-1)*Y*X", "rhs": "(q+q^(-1))/2*H"},
        ],
        "f_matrix": [["K^-4", "(q^2-q^(-2))/2*X", "0"],
                     ["0", "K^-2", "0"],
                     ["0", "0", "K^2"]],
        "d_omega": {"H": {"XY": "(-1-q^(-2))/2"},
                    "X": {"HX": "-2*q^2"},
                    "Y": {"HY": "2*q^(-2)"}},
        "pairing_table": {
            "H": ["2*q^2", "0", "0", "0", "0", "0", "0", "0", "-2*q^(-2)"],
            "X": ["0", "q^2", "0", "0", "0", "q^(-1)", "0", "0", "0"],
            "Y": ["0", "0", "1", "0", "0", "0", "0", "q", "0"]},
        "right_ideal": ["u11+q^2*u22-(1+q^2)", "u12^2", "u21^2",
                        "u12*u21", "(u11-q^2)*u12", "(u11-1)*u21"],
        "sym2_forms": [{"HH": "1"}, {"XX": "1"},
                       {"HX": "q^2", "XH": "q^(-2)"},
                       {"XY": "q^(-1)", "YX": "q"}, {"YY": "1"},
                       {"HY": "q^(-2)", "YH": "q^2"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "q", "XH": "-q^(-1)"},
            {"HY": "q^(-1)", "YH": "-q"},
            {"XY": "1", "YX": "-1"}]},
    },
    {
        "name": "calc4", "page": 4, "item": 10,
        "coideal_basis": ["F*K^-1", "K^-1*E", "K^-2", "1"],
        "HXY": ["2/(q-q^(-1))*(K^-2-1)", "q^(1/2)*F*K^-1", "q^(1/2)*K^-1*E"],
        "real_forms": ["su2", "su11", "slr"],
        "fund_repr": {"H": [["2*q/(q+1)", "0"], ["0", "-2/(q+1)"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q^(-1)*H*X-q*X*H", "rhs": "2*X"},
            {"lhs": "q*H*Y-q^(-1)*Y*H", "rhs": "-2*Y"},
            {"lhs": "q*X*Y-q^(-1)*Y*X-(q-q^(-1))/4*H^2", "rhs": "H"},
        ],
        "f_matrix": [["K^-2", "(q-q^(-1))/2*X", "(q-q^(-1))/2*Y"],
                     ["0", "1", "0"],
                     ["0", "0", "1"]],
        "d_omega": {"H": {"XY": "-q^(-1)"},
                    "X": {"HX": "-2*q"},
                    "Y": {"HY": "2*q^(-1)"}},
        "pairing_table": {
            "H": ["2*q", "0", "0", "0", "0", "0", "0", "0", "-2*q^(-1)"],
            "X": ["0", "q", "0", "0", "0", "1", "0", "0", "0"],
            "Y": ["0", "0", "q", "0", "0", "0", "0", "1", "0"]},
        "right_ideal": ["u11+q*u22-(1+q)", "u12^2", "u21^2",
                        "u12*u21", "(u11-q)*u12", "(u11-q)*u21"],
        "sym2_forms": [{"HH": "1", "XY": "(1-q^(-2))/4"}, {"XX": "1"},
                       {"HX": "q", "XH": "q^(-1)"},
                       {"XY": "q^(-1)", "YX": "q"}, {"YY": "1"},
                       {"HY": "q^(-1)", "YH": "q"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "1", "XH": "-1"},
            {"HY": "1", "YH": "-1"},
            {"XY": "1", "YX": "-1"}]},
    },
    {
        "name": "calc5", "page": 5, "item": 11,
        "coideal_basis": ["F*eps-*K^-1", "eps-*K^-1*E", "eps-*K^-2", "1"],
        "HXY": ["2/(q^(-1)-q)*(eps-*K^-2-1)", "-q^(1/2)*F*eps-*K^-1",
                "-q^(1/2)*eps-*K^-1*E"],
        "real_forms": ["su2", "su11", "slr"],
        "fund_repr": {"H": [["2*q/(q-1)", "0"], ["0", "2/(q-1)"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q^(-1)*H*X-q*X*H", "rhs": "-2*X"},
            {"lhs": "q*H*Y-q^(-1)*Y*H", "rhs": "2*Y"},
            {"lhs": "q*X*Y-q^(-1)*Y*X-(q-q^(-1))/4*H^2", "rhs": "-H"},
        ],
        "f_matrix": [["eps-*K^-2", "(q^(-1)-q)/2*X", "(q^(-1)-q)/2*Y"],
                     ["0", "eps-", "0"],
                     ["0", "0", "eps-"]],
        "d_omega": {"H": {"XY": "q^(-1)"},
                    "X": {"HX": "2*q"},
                    "Y": {"HY": "-2*q^(-1)"}},
        "pairing_table": {
            "H": ["-2*q", "0", "0", "0", "0", "0", "0", "0", "2*q^(-1)"],
            "X": ["0", "-q", "0", "0", "0", "-1", "0", "0", "0"],
            "Y": ["0", "0", "-q", "0", "0", "0", "0", "-1", "0"]},
        "right_ideal": ["u11-q*u22-(1-q)", "u12^2", "u21^2",
                        "u12*u21", "(u11+q)*u12", "(u11+q)*u21"],
        "sym2_forms": [{"HH": "1", "XY": "(1-q^(-2))/4"}, {"XX": "1"},
                       {"HX": "q", "XH": "q^(-1)"},
                       {"XY": "q^(-1)", "YX": "q"}, {"YY": "1"},
                       {"HY": "q^(-1)", "YH": "q"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "1", "XH": "-1"},
            {"HY": "1", "YH": "-1"},
            {"XY": "1", "YX": "-1"}]},
    },
    {
        "name": "calc6", "page": 6, "item": 12,
        "coideal_basis": ["F*K^-3", "K^-3*E", "K^-4", "1"],
        "HXY": ["2/(q^2-q^(-2))*(K^-4-1)", "q^(3/2)*F*K^-3", "q^(3/2)*K^-3*E"],
        "real_forms": ["su2", "su11", "slr"],
        "fund_repr": {"H": [["2*q/(q+q^(-1))", "0"],
                            ["0", "-2*q^(-1)/(q+q^(-1))"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q^(-2)*H*X-q^2*X*H", "rhs": "2*X"},
            {"lhs": "q^2*H*Y-q^(-2)*Y*H", "rhs": "-2*Y"},
            {"lhs": "q^3*X*Y-q^(-3)*Y*X-(q^2+1)^2*(q^2-1)/(4*q^3)*H^2",
             "rhs": "(q+q^(-1))/2*H"},
        ],
        "f_matrix": [["K^-4", "(q^2-q^(-2))/2*X", "(q^2-q^(-2))/2*Y"],
                     ["0", "K^-2", "0"],
                     ["0", "0", "K^-2"]],
        "d_omega": {"H": {"XY": "(-q^(-2)-q^(-4))/2"},
                    "X": {"HX": "-2*q^2"},
                    "Y": {"HY": "2*q^(-2)"}},
        "pairing_table": {
            "H": ["2*q^2", "0", "0", "0", "0", "0", "0", "0", "-2*q^(-2)"],
            "X": ["0", "q^2", "0", "0", "0", "q^(-1)", "0", "0", "0"],
            "Y": ["0", "0", "q^2", "0", "0", "0", "0", "q^(-1)", "0"]},
        "right_ideal": ["u11+q^2*u22-(1+q^2)", "u12^2", "u21^2",
                        "u12*u21", "(u11-q^2)*u12", "(u11-q^2)*u21"],
        "sym2_forms": [{"HH": "1", "XY": "(1+q^(-2))^2*(1-q^(-2))/4"},
                       {"XX": "1"},
                       {"HX": "q^2", "XH": "q^(-2)"},
                       {"XY": "q^(-3)", "YX": "q^3"}, {"YY": "1"},
                       {"HY": "q^(-2)", "YH": "q^2"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "q", "XH": "-q^(-1)"},
            {"HY": "q^(-1)", "YH": "-q"},
            {"XY": "q^(-2)", "YX": "-q^2"}]},
    },
    {
        "name": "calc7", "page": 7, "item": 13,
        "coideal_basis": ["F*K", "K^5*E", "K^4", "1"],
        "HXY": ["2/(q^(-2)-q^2)*(K^4-1)", "q^(-1/2)*F*K", "q^(-5/2)*K^5*E"],
        "real_forms": ["slr"],
        "fund_repr": {"H": [["2*q^(-1)/(q+q^(-1))", "0"],
                            ["0", "-2*q/(q+q^(-1))"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q^2*H*X-q^(-2)*X*H", "rhs": "2*X"},
            {"lhs": "q^(-2)*H*Y-q^2*Y*H", "rhs": "-2*Y"},
            {"lhs": "q^(-3)*X*Y-q^3*Y*X+(q^2+1)^2*(q^2-1)/(4*q^3)*H^2",
             "rhs": "(q+q^(-1))/2*H"},
        ],
        "f_matrix": [["K^4", "0", "(q^(-2)-q^2)/2*Y"],
                     ["0", "K^2", "0"],
                     ["0", "0", "K^6"]],
        "d_omega": {"H": {"XY": "(-q^2-q^4)/2"},
                    "X": {"HX": "-2*q^(-2)"},
                    "Y": {"HY": "2*q^2"}},
        "pairing_table": {
            "H": ["2*q^(-2)", "0", "0", "0", "0", "0", "0", "0", "-2*q^2"],
            "X": ["0", "1", "0", "0", "0", "q", "0", "0", "0"],
            "Y": ["0", "0", "q^(-2)", "0", "0", "0", "0", "q^3", "0"]},
        "right_ideal": ["u11+q^(-2)*u22-(1+q^(-2))", "u12^2", "u21^2",
                        "u12*u21", "(u11-1)*u12", "(u11-q^(-2))*u21"],
        "sym2_forms": [{"HH": "1", "XY": "-(q^2+1)^2*(q^2-1)/4"},
                       {"XX": "1"},
                       {"HX": "q^(-2)", "XH": "q^2"},
                       {"XY": "q^3", "YX": "q^(-3)"}, {"YY": "1"},
                       {"HY": "q^2", "YH": "q^(-2)"}],
        "braiding": None,
    },
    {
        "name": "calc8", "page": 8, "item": 14,
        "coideal_basis": ["F*K", "K^-3*E", "K^-4", "1"],
        "HXY": ["2/(q^2-q^(-2))*(K^-4-1)", "q^(-1/2)*F*K", "q^(3/2)*K^-3*E"],
        "real_forms": ["slr"],
        "fund_repr": {"H": [["2*q/(q+q^(-1))", "0"],
                            ["0", "-2*q^(-1)/(q+q^(-1))"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q^(-2)*H*X-q^2*X*H", "rhs": "2*X"},
            {"lhs": "q^2*H*Y-q^(-2)*Y*H", "rhs": "-2*Y"},
            {"lhs": "q*X*Y-q^(-1)*Y*X", "rhs": "(q+q^(-1))/2*H"},
        ],
        "f_matrix": [["K^-4", "0", "(q^2-q^(-2))/2*Y"],
                     ["0", "K^2", "0"],
                     ["0", "0", "K^-2"]],
        "d_omega": {"H": {"XY": "(-1-q^(-2))/2"},
                    "X": {"HX": "-2*q^2"},
                    "Y": {"HY": "2*q^(-2)"}},
        "pairing_table": {
            "H": ["2*q^2", "0", "0", "0", "0", "0", "0", "0", "-2*q^(-2)"],
            "X": ["0", "1", "0", "0", "0", "q", "0", "0", "0"],
            "Y": ["0", "0", "q^2", "0", "0", "0", "0", "q^(-1)", "0"]},
        "right_ideal": ["u11+q^2*u22-(1+q^2)", "u12^2", "u21^2",
                        "u12*u21", "(u11-1)*u12", "(u11-q^2)*u21"],
        "sym2_forms": [{"HH": "1"}, {"XX": "1"},
                       {"HX": "q^2", "XH": "q^(-2)"},
                       {"XY": "q^(-1)", "YX": "q"}, {"YY": "1"},
                       {"HY": "q^(-2)", "YH": "q^2"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "q", "XH": "-q^(-1)"},
            {"HY": "q^(-1)", "YH": "-q"},
            {"XY": "1", "YX": "-1"}]},
    },
    {
        "name": "calc9", "page": 9, "item": 17,
        "coideal_basis": ["F*K", "K*E", "K^4", "1"],
        "HXY": ["2/(q^(-2)-q^2)*(K^4-1)", "q^(-1/2)*F*K", "q^(-1/2)*K*E"],
        "real_forms": ["su2", "su11", "slr"],
        "fund_repr": {"H": [["2*q^(-1)/(q+q^(-1))", "0"],
                            ["0", "-2*q/(q+q^(-1))"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q^2*H*X-q^(-2)*X*H", "rhs": "2*X"},
            {"lhs": "q^(-2)*H*Y-q^2*Y*H", "rhs": "-2*Y"},
            {"lhs": "q^(-1)*X*Y-q*Y*X", "rhs": "(q+q^(-1))/2*H"},
        ],
        "f_matrix": [["K^4", "0", "0"], ["0", "K^2", "0"], ["0", "0", "K^2"]],
        "d_omega": {"H": {"XY": "(-1-q^2)/2"},
                    "X": {"HX": "-2*q^(-2)"},
                    "Y": {"HY": "2*q^2"}},
        "pairing_table": {
            "H": ["2*q^(-2)", "0", "0", "0", "0", "0", "0", "0", "-2*q^2"],
            "X": ["0", "1", "0", "0", "0", "q", "0", "0", "0"],
            "Y": ["0", "0", "1", "0", "0", "0", "0", "q", "0"]},
        "right_ideal": ["u11+q^(-2)*u22-(1+q^(-2))", "u12^2", "u21^2",
                        "u12*u21", "(u11-1)*u12", "(u11-1)*u21"],
        "sym2_forms": [{"HH": "1"}, {"XX": "1"},
                       {"HX": "q^(-2)", "XH": "q^2"},
                       {"XY": "q", "YX": "q^(-1)"}, {"YY": "1"},
                       {"HY": "q^2", "YH": "q^(-2)"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "q^(-3)", "XH": "-q^3"},
            {"HY": "q^3", "YH": "-q^(-3)"},
            {"XY": "q^2", "YX": "-q^(-2)"}]},
    },
    {
        "name": "calc10", "page": 10, "item": 18,
        "coideal_basis": ["F*K", "K*E", "K^2", "1"],
        "HXY": ["2/(q^(-1)-q)*(K^2-1)", "q^(-1/2)*F*K", "q^(-1/2)*K*E"],
        "real_forms": ["su2", "su11", "slr"],
        "fund_repr": {"H": [["2/(q+1)", "0"], ["0", "-2*q/(q+1)"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q*H*X-q^(-1)*X*H", "rhs": "2*X"},
            {"lhs": "q^(-1)*H*Y-q*Y*H", "rhs": "-2*Y"},
            {"lhs": "q^(-1)*X*Y-q*Y*X+(q-q^(-1))/4*H^2", "rhs": "H"},
        ],
        "f_matrix": [["K^2", "0", "0"], ["0", "K^2", "0"], ["0", "0", "K^2"]],
        "d_omega": {"H": {"XY": "-q"},
                    "X": {"HX": "-2*q^(-1)"},
                    "Y": {"HY": "2*q"}},
        "pairing_table": {
            "H": ["2*q^(-1)", "0", "0", "0", "0", "0", "0", "0", "-2*q"],
            "X": ["0", "1", "0", "0", "0", "q", "0", "0", "0"],
            "Y": ["0", "0", "1", "0", "0", "0", "0", "q", "0"]},
        "right_ideal": ["u11+q^(-1)*u22-(1+q^(-1))", "u12^2", "u21^2",
                        "u12*u21", "(u11-1)*u12", "(u11-1)*u21"],
        "sym2_forms": [{"HH": "1", "XY": "(1-q^2)/4"}, {"XX": "1"},
                       {"HX": "q^(-1)", "XH": "q"},
                       {"XY": "q", "YX": "q^(-1)"}, {"YY": "1"},
                       {"HY": "q", "YH": "q^(-1)"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "1", "XH": "-1"},
            {"HY": "1", "YH": "-1"},
            {"XY": "1", "YX": "-1"}]},
    },
    {
        "name": "calc11", "page": 11, "item": 20,
        "coideal_basis": ["F*K", "K*E", "eps-*K^2", "1"],
        "HXY": ["2/(q-q^(-1))*(eps-*K^2-1)", "q^(-1/2)*F*K", "q^(-1/2)*K*E"],
        "real_forms": ["su2", "su11", "slr"],
        "fund_repr": {"H": [["2/(1-q)", "0"], ["0", "2*q/(1-q)"]],
                      "X": [["0", "1"], ["0", "0"]],
                      "Y": [["0", "0"], ["1", "0"]]},
        "relations": [
            {"lhs": "q*H*X-q^(-1)*X*H", "rhs": "-2*X"},
            {"lhs": "q^(-1)*H*Y-q*Y*H", "rhs": "2*Y"},
            {"lhs": "q^(-1)*X*Y-q*Y*X+(q-q^(-1))/4*H^2", "rhs": "-H"},
        ],
        "f_matrix": [["eps-*K^2", "0", "0"], ["0", "K^2", "0"],
                     ["0", "0", "K^2"]],
        "d_omega": {"H": {"XY": "q"},
                    "X": {"HX": "2*q^(-1)"},
                    "Y": {"HY": "-2*q"}},
        "pairing_table": {
            "H": ["-2*q^(-1)", "0", "0", "0", "0", "0", "0", "0", "2*q"],
            "X": ["0", "1", "0", "0", "0", "q", "0", "0", "0"],
            "Y": ["0", "0", "1", "0", "0", "0", "0", "q", "0"]},
        "right_ideal": ["u11-q^(-1)*u22-(1-q^(-1))", "u12^2", "u21^2",
                        "u12*u21", "(u11-1)*u12", "(u11-1)*u21"],
        "sym2_forms": [{"HH": "1", "XY": "(1-q^2)/4"}, {"XX": "1"},
                       {"HX": "q^(-1)", "XH": "q"},
                       {"XY": "q", "YX": "q^(-1)"}, {"YY": "1"},
                       {"HY": "q", "YH": "q^(-1)"}],
        "braiding": {"eigenvalue_2": "-q^2", "eigenspace_2": [
            {"HX": "1", "XH": "-1"},
            {"HY": "1", "YH": "-1"},
            {"XY": "1", "YX": "-1"}]},
    },
]

# independently presented generating set of the classical 3-dimensional
# calculus' right ideal (same ideal as calc9, different generators)
REFERENCE_3D = {
    "name": "reference-3d",
    "right_ideal": ["u12*u21", "u12^2+u12*u21", "q*u21^2",
                    "u11+q^(-2)*u22-(1+q^(-2))",
                    "(u11-1)*u12+u12^2", "(u11-1)*u21"],
}


# ---------------------------------------------------------------------------
# unital right coideals of dimension <= 4 (family, sample, conditions)
# ---------------------------------------------------------------------------

# (name, dim, basis, params, conditions, li, boundary)
# boundary: (kind-hint, params, basis-override)  with kind decided on run
GEN = {"alpha": "1", "beta": "2", "gamma": "3", "delta": "5"}


def fam(name, dim, basis, params=None, conditions=(), li=False,
        boundary=None):
    return {"name": name, "dim": dim, "basis": list(basis),
            "params": dict(params or {}), "conditions": list(conditions),
            "li": li, "boundary": boundary}


FAMILIES = [
    fam("X1_1", 1, ["1"]),
    fam("X2_1", 2, ["G", "1"]),
    fam("X2_2", 2, ["Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "1"],
        {"alpha": "1", "beta": "2"}),
    fam("X2_3", 2, ["K^2*Ed(1)+alpha*K^2", "1"], {"alpha": "1"}),
    fam("X2_4", 2, ["f[q]", "1"], conditions=["mu != 1"],
        boundary=("span", {}, ["f[1]", "1"])),
    fam("X3_1", 3, ["Gd(2)", "G", "1"]),
    fam("X3_2", 3, ["K^2*G+alpha*Fd(1)*K^2+beta*K^2*Ed(1)", "K^2", "1"],
        {"alpha": "1", "beta": "2"}, ["|alpha|+|beta| != 0"],
        boundary=("closure", {"alpha": "0", "beta": "0"}, None)),
    fam("X3_3", 3, ["G+alpha*Fd(1)+beta*Ed(1)", "Kinv^2", "1"],
        {"alpha": "1", "beta": "2"}, ["|alpha|+|beta| != 0"],
        boundary=("closure", {"alpha": "0", "beta": "0"}, None)),
    fam("X3_4", 3, ["f[q]*G", "f[q]", "1"], conditions=["mu != 1"],
        boundary=("span", {}, ["f[1]*G", "f[1]", "1"])),
    fam("X3_5", 3, ["G", "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "1"],
        {"alpha": "1", "beta": "2"}),
    fam("X3_6", 3, ["G", "K^2*Ed(1)+alpha*K^2", "1"], {"alpha": "1"}),
    fam("X3_7", 3, ["G", "f[q]", "1"], conditions=["mu != 1"],
        boundary=("span", {}, ["G", "f[1]", "1"])),
    fam("X3_8", 3, ["Fd(2)*K^4+alpha*Fd(1)*K^4*Ed(1)+alpha^2*K^4*Ed(2)"
                    "+beta*Fd(1)*K^4+alpha*beta*K^4*Ed(1)+gamma*K^4",
                    "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}),
    fam("X3_9", 3, ["K^4*Ed(2)+alpha*K^4*Ed(1)+beta*K^4",
                    "K^2*Ed(1)+alpha*K^2", "1"], {"alpha": "1", "beta": "2"}),
    fam("X3_10", 3, ["Fd(1)*f[q^3]+alpha*f[q^3]*Ed(1)+beta*f[q^3]",
                     "f[q^2]", "1"], {"alpha": "1", "beta": "2"},
        ["mu != q"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["Fd(1)*f[q]+alpha*f[q]*Ed(1)+beta*f[q]", "f[1]", "1"])),
    fam("X3_11", 3, ["f[q^3]*Ed(1)+alpha*f[q^3]", "f[q^2]", "1"],
        {"alpha": "1"}, ["mu != q"],
        boundary=("span", {"alpha": "1"},
                  ["f[q]*Ed(1)+alpha*f[q]", "f[1]", "1"])),
    fam("X3_12", 3, ["Fd(1)*K^2+alpha*K^2", "K^2*Ed(1)+beta*K^2", "1"],
        {"alpha": "1", "beta": "2"}),
    fam("X3_13", 3, ["Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "f[i]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != 1"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "f[1]", "1"])),
    fam("X3_14", 3, ["K^2*Ed(1)+alpha*K^2", "f[i]", "1"], {"alpha": "1"},
        ["mu != 1"],
        boundary=("span", {"alpha": "1"},
                  ["K^2*Ed(1)+alpha*K^2", "f[1]", "1"])),
    fam("X3_15", 3, ["f[q]", "f[-1]", "1"],
        conditions=["mu != nu", "mu != 1", "nu != 1"],
        boundary=("span", {}, ["f[q]", "f[q]", "1"])),
    fam("X4_1", 4, ["Gd(3)", "Gd(2)", "G", "1"]),
    fam("X4_2", 4, ["K^2*Gd(2)+alpha*Fd(1)*K^2+beta*K^2*Ed(1)",
                    "K^2*G", "K^2", "1"],
        {"alpha": "1", "beta": "2"}, ["|alpha|+|beta| != 0"],
        boundary=("closure", {"alpha": "0", "beta": "0"}, None)),
    fam("X4_3", 4, ["Gd(2)+alpha*Fd(1)+beta*Ed(1)", "G", "Kinv^2", "1"],
        {"alpha": "1", "beta": "2"}, ["|alpha|+|beta| != 0"],
        boundary=("closure", {"alpha": "0", "beta": "0"}, None)),
    fam("X4_4", 4, ["f[q]*Gd(2)", "f[q]*G", "f[q]", "1"],
        conditions=["mu != 1"],
        boundary=("span", {}, ["f[1]*Gd(2)", "f[1]*G", "f[1]", "1"])),
    fam("X4_5", 4, ["Gd(2)", "G", "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "1"],
        {"alpha": "1", "beta": "2"}),
    fam("X4_6", 4, ["Gd(2)", "G", "K^2*Ed(1)+alpha*K^2", "1"], {"alpha": "1"}),
    fam("X4_7", 4, ["Gd(2)", "G", "f[q]", "1"], conditions=["mu != 1"],
        boundary=("span", {}, ["Gd(2)", "G", "f[1]", "1"])),
    fam("X4_8", 4, ["Fd(1)*K^2*G+alpha*K^2*Ed(1)*G+beta*K^2*G"
                    "+gamma*K^2*Ed(1)+delta*K^2", "G",
                    "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "1"],
        GEN, [], li="gamma != 2*alpha",
        boundary=("li", {"alpha": "1", "beta": "2", "gamma": "2",
                         "delta": "5"}, None)),
    fam("X4_9", 4, ["K^2*Ed(1)*G+alpha*K^2*G+beta*Fd(1)*K^2+gamma*K^2", "G",
                    "K^2*Ed(1)+alpha*K^2", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, [], li="beta != 0",
        boundary=("li", {"alpha": "1", "beta": "0", "gamma": "3"}, None)),
    fam("X4_10", 4, ["K^4*G+alpha*Fd(2)*K^4+alpha*beta*Fd(1)*K^4*Ed(1)"
                     "+alpha*beta^2*K^4*Ed(2)+alpha*gamma*Fd(1)*K^4"
                     "+alpha*beta*gamma*K^4*Ed(1)",
                     "Fd(1)*K^2+beta*K^2*Ed(1)+gamma*K^2", "K^4", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, ["alpha != 0"],
        boundary=("closure", {"alpha": "0", "beta": "2", "gamma": "3"}, None)),
    fam("X4_11", 4, ["K^4*G+alpha*K^4*Ed(2)+alpha*beta*K^4*Ed(1)",
                     "K^2*Ed(1)+beta*K^2", "K^4", "1"],
        {"alpha": "1", "beta": "2"}, ["alpha != 0"],
        boundary=("closure", {"alpha": "0", "beta": "2"}, None)),
    fam("X4_12", 4, ["G+alpha*Fd(2)+alpha*beta*Fd(1)*Ed(1)+alpha*beta^2*Ed(2)"
                     "+alpha*gamma*Fd(1)+alpha*beta*gamma*Ed(1)",
                     "Fd(1)*Kinv^2+beta*Kinv^2*Ed(1)+gamma*Kinv^2",
                     "Kinv^4", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, ["alpha != 0"],
        boundary=("closure", {"alpha": "0", "beta": "2", "gamma": "3"}, None)),
    fam("X4_13", 4, ["G+alpha*Ed(2)+alpha*beta*Ed(1)",
                     "Kinv^2*Ed(1)+beta*Kinv^2", "Kinv^4", "1"],
        {"alpha": "1", "beta": "2"}, ["alpha != 0"],
        boundary=("closure", {"alpha": "0", "beta": "2"}, None)),
    fam("X4_14", 4, ["f[q^3]*G+alpha*Fd(1)*f[q^3]+beta*f[q^3]*Ed(1)",
                     "f[q^3]", "f[q^2]", "1"],
        {"alpha": "1", "beta": "2"},
        ["mu != 1", "mu != q", "|alpha|+|beta| != 0"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["f[q]*G+alpha*Fd(1)*f[q]+beta*f[q]*Ed(1)",
                   "f[q]", "f[1]", "1"])),
    fam("X4_15", 4, ["K^2*G+alpha*Fd(1)*K^2+beta*K^2*Ed(1)", "G", "K^2", "1"],
        {"alpha": "1", "beta": "2"}, ["|alpha|+|beta| != 0"],
        boundary=("closure", {"alpha": "0", "beta": "0"}, None)),
    fam("X4_16", 4, ["K^2*G+alpha*Fd(1)*K^2+beta*K^2*Ed(1)",
                     "Fd(1)*K^4+gamma*K^4*Ed(1)+delta*K^4", "K^2", "1"],
        GEN, ["|alpha|+|beta| != 0"], li="beta != alpha*gamma",
        boundary=("li", {"alpha": "1", "beta": "3", "gamma": "3",
                         "delta": "5"}, None)),
    fam("X4_17", 4, ["K^2*G+alpha*Fd(1)*K^2+beta*K^2*Ed(1)",
                     "K^4*Ed(1)+gamma*K^4", "K^2", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"},
        ["|alpha|+|beta| != 0"], li="alpha != 0",
        boundary=("li", {"alpha": "0", "beta": "2", "gamma": "3"}, None)),
    fam("X4_18", 4, ["K^2*G+alpha*K^2*Ed(1)", "Fd(1)*K^2+beta*K^2*Ed(1)",
                     "K^2", "1"],
        {"alpha": "1", "beta": "2"}, ["alpha != 0"], li=True,
        boundary=("closure", {"alpha": "0", "beta": "2"}, None)),
    fam("X4_19", 4, ["K^2*G+alpha*Fd(1)*K^2", "K^2*Ed(1)", "K^2", "1"],
        {"alpha": "1"}, ["alpha != 0"], li=True,
        boundary=("closure", {"alpha": "0"}, None)),
    fam("X4_20", 4, ["K^2*G+alpha*Fd(1)*K^2+beta*K^2*Ed(1)", "f[-1]",
                     "K^2", "1"],
        {"alpha": "1", "beta": "2"},
        ["|alpha|+|beta| != 0", "mu != 1", "mu != q"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["K^2*G+alpha*Fd(1)*K^2+beta*K^2*Ed(1)", "f[1]",
                   "K^2", "1"])),
    fam("X4_21", 4, ["G+alpha*Fd(1)+beta*Ed(1)", "Kinv^2*G", "Kinv^2", "1"],
        {"alpha": "1", "beta": "2"}, ["|alpha|+|beta| != 0"],
        boundary=("closure", {"alpha": "0", "beta": "0"}, None)),
    fam("X4_22", 4, ["G+alpha*Ed(1)", "Fd(1)+beta*Ed(1)", "Kinv^2", "1"],
        {"alpha": "1", "beta": "2"}, ["alpha != 0"], li=True,
        boundary=("closure", {"alpha": "0", "beta": "2"}, None)),
    fam("X4_23", 4, ["G+alpha*Fd(1)", "Ed(1)", "Kinv^2", "1"],
        {"alpha": "1"}, ["alpha != 0"], li=True,
        boundary=("closure", {"alpha": "0"}, None)),
    fam("X4_24", 4, ["G+alpha*Fd(1)+beta*Ed(1)",
                     "Fd(1)*K^2+gamma*K^2*Ed(1)+delta*K^2", "Kinv^2", "1"],
        GEN, ["|alpha|+|beta| != 0"], li="beta != alpha*gamma",
        boundary=("li", {"alpha": "1", "beta": "3", "gamma": "3",
                         "delta": "5"}, None)),
    fam("X4_25", 4, ["G+alpha*Fd(1)+beta*Ed(1)", "K^2*Ed(1)+gamma*K^2",
                     "Kinv^2", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"},
        ["|alpha|+|beta| != 0"], li="alpha != 0",
        boundary=("li", {"alpha": "0", "beta": "2", "gamma": "3"}, None)),
    fam("X4_26", 4, ["G+alpha*Fd(1)+beta*Ed(1)", "f[q]", "Kinv^2", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != 1", "mu != q^-1"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["G+alpha*Fd(1)+beta*Ed(1)", "f[q^-1]", "Kinv^2", "1"])),
    fam("X4_27", 4, ["f[q]*G", "G", "f[q]", "1"], conditions=["mu != 1"],
        boundary=("span", {}, ["f[1]*G", "G", "f[1]", "1"])),
    fam("X4_28", 4, ["f[q]*G", "Fd(1)*f[q^2]+alpha*f[q^2]*Ed(1)"
                     "+beta*f[q^2]", "f[q]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != 1"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["f[1]*G", "Fd(1)*f[q]+alpha*f[q]*Ed(1)+beta*f[q]",
                   "f[1]", "1"])),
    fam("X4_29", 4, ["f[q]*G", "f[q^2]*Ed(1)+alpha*f[q^2]", "f[q]", "1"],
        {"alpha": "1"}, ["mu != 1"],
        boundary=("span", {"alpha": "1"},
                  ["f[1]*G", "f[q]*Ed(1)+alpha*f[q]", "f[1]", "1"])),
    fam("X4_30", 4, ["f[-1]*G", "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2",
                     "f[-1]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != 1"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["f[1]*G", "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2",
                   "f[1]", "1"])),
    fam("X4_31", 4, ["f[-1]*G", "K^2*Ed(1)+alpha*K^2", "f[-1]", "1"],
        {"alpha": "1"}, ["mu != 1"],
        boundary=("span", {"alpha": "1"},
                  ["f[1]*G", "K^2*Ed(1)+alpha*K^2", "f[1]", "1"])),
    fam("X4_32", 4, ["f[q]*G", "f[q]", "f[-1]", "1"],
        conditions=["mu != nu", "mu != 1", "nu != 1"],
        boundary=("span", {}, ["f[q]*G", "f[q]", "f[q]", "1"])),
    fam("X4_33", 4, ["G", "Fd(2)*K^4+alpha*Fd(1)*K^4*Ed(1)+alpha^2*K^4*Ed(2)"
                     "+beta*Fd(1)*K^4+alpha*beta*K^4*Ed(1)+gamma*K^4",
                     "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, ["alpha != 0"]),
    fam("X4_34", 4, ["G", "K^4*Ed(2)+alpha*K^4*Ed(1)+beta*K^4",
                     "K^2*Ed(1)+alpha*K^2", "1"], {"alpha": "1", "beta": "2"}),
    fam("X4_35", 4, ["G", "Fd(1)*f[q^3]+alpha*f[q^3]*Ed(1)+beta*f[q^3]",
                     "f[q^2]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != q"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["G", "Fd(1)*f[q]+alpha*f[q]*Ed(1)+beta*f[q]",
                   "f[1]", "1"])),
    fam("X4_36", 4, ["G", "f[q^3]*Ed(1)+alpha*f[q^3]", "f[q^2]", "1"],
        {"alpha": "1"}, ["mu != q"],
        boundary=("span", {"alpha": "1"},
                  ["G", "f[q]*Ed(1)+alpha*f[q]", "f[1]", "1"])),
    fam("X4_37", 4, ["G", "Fd(1)*K^2+alpha*K^2", "K^2*Ed(1)+beta*K^2", "1"],
        {"alpha": "1", "beta": "2"}, [], li=True),
    fam("X4_38", 4, ["G", "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "f[-1]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != 1"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["G", "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "f[1]", "1"])),
    fam("X4_39", 4, ["G", "K^2*Ed(1)+alpha*K^2", "f[-1]", "1"],
        {"alpha": "1"}, ["mu != 1"],
        boundary=("span", {"alpha": "1"},
                  ["G", "K^2*Ed(1)+alpha*K^2", "f[1]", "1"])),
    fam("X4_40", 4, ["G", "f[q]", "f[-1]", "1"],
        conditions=["mu != nu", "mu != 1", "nu != 1"],
        boundary=("span", {}, ["G", "f[q]", "f[q]", "1"])),
    fam("X4_41", 4, ["Fd(3)*K^6+alpha*Fd(2)*K^6*Ed(1)+alpha^2*Fd(1)*K^6*Ed(2)"
                     "+alpha^3*K^6*Ed(3)+beta*Fd(2)*K^6"
                     "+alpha*beta*Fd(1)*K^6*Ed(1)+alpha^2*beta*K^6*Ed(2)"
                     "+gamma*Fd(1)*K^6+alpha*gamma*K^6*Ed(1)+delta*K^6",
                     "Fd(2)*K^4+alpha*Fd(1)*K^4*Ed(1)+alpha^2*K^4*Ed(2)"
                     "+beta*Fd(1)*K^4+alpha*beta*K^4*Ed(1)+gamma*K^4",
                     "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "1"], GEN),
    fam("X4_42", 4, ["K^6*Ed(3)+alpha*K^6*Ed(2)+beta*K^6*Ed(1)+gamma*K^6",
                     "K^4*Ed(2)+alpha*K^4*Ed(1)+beta*K^4",
                     "K^2*Ed(1)+alpha*K^2", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}),
    fam("X4_43", 4, ["Fd(2)*f[i]+alpha*Fd(1)*f[i]*Ed(1)+alpha^2*f[i]*Ed(2)"
                     "+beta*Fd(1)*f[i]+alpha*beta*f[i]*Ed(1)+gamma*f[i]",
                     "Fd(1)*f[i*q^-1]+alpha*f[i*q^-1]*Ed(1)+beta*f[i*q^-1]",
                     "f[i*q^-2]", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, ["mu != q^2"],
        boundary=("span", {"alpha": "1", "beta": "2", "gamma": "3"},
                  ["Fd(2)*f[q^2]+alpha*Fd(1)*f[q^2]*Ed(1)"
                   "+alpha^2*f[q^2]*Ed(2)+beta*Fd(1)*f[q^2]"
                   "+alpha*beta*f[q^2]*Ed(1)+gamma*f[q^2]",
                   "Fd(1)*f[q]+alpha*f[q]*Ed(1)+beta*f[q]", "f[1]", "1"])),
    fam("X4_44", 4, ["f[i]*Ed(2)+alpha*f[i]*Ed(1)+beta*f[i]",
                     "f[i*q^-1]*Ed(1)+alpha*f[i*q^-1]", "f[i*q^-2]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != q^2"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["f[q^2]*Ed(2)+alpha*f[q^2]*Ed(1)+beta*f[q^2]",
                   "f[q]*Ed(1)+alpha*f[q]", "f[1]", "1"])),
    fam("X4_45", 4, ["Fd(2)*K^4+alpha1*Fd(1)*K^4*Ed(1)+alpha2*K^4*Ed(2)"
                     "+(beta1+alpha1*beta2)*Fd(1)*K^4"
                     "+(alpha1*beta1+alpha2*beta2)*K^4*Ed(1)+gamma*K^4",
                     "Fd(1)*K^2+beta1*K^2", "K^2*Ed(1)+beta2*K^2", "1"],
        {"alpha1": "1", "alpha2": "3", "beta1": "2", "beta2": "5",
         "gamma": "1"},
        ["alpha2 != alpha1^2"],
        li="(q^2-q^-2)*gamma != q*alpha1+(q^2-1)*(beta1^2"
           "+2*alpha1*beta1*beta2+alpha2*beta2^2)",
        boundary=("li", {"alpha1": "1", "alpha2": "3", "beta1": "2",
                         "beta2": "5",
                         "gamma": "(q+99*(q^2-1))/(q^2-q^(-2))"}, None)),
    fam("X4_46", 4, ["Fd(2)*K^4+alpha*Fd(1)*K^4*Ed(1)+alpha^2*K^4*Ed(2)"
                     "+beta*Fd(1)*K^4+gamma*K^4*Ed(1)+delta*K^4",
                     "Fd(1)*K^2+alpha*K^2*Ed(1)", "K^2", "1"],
        GEN, ["gamma != alpha*beta"], li=True,
        boundary=("closure", {"alpha": "1", "beta": "2", "gamma": "2",
                              "delta": "5"}, None)),
    fam("X4_47", 4, ["Fd(1)*K^4*Ed(1)+alpha*K^4*Ed(2)+beta*Fd(1)*K^4"
                     "+(gamma+alpha*beta)*K^4*Ed(1)+delta*K^4",
                     "Fd(1)*K^2+gamma*K^2", "K^2*Ed(1)+beta*K^2", "1"],
        GEN, [],
        li="(q^2-q^-2)*delta != q+(q^2-1)*beta*(2*gamma+alpha*beta)",
        boundary=("li", {"alpha": "1", "beta": "2", "gamma": "3",
                         "delta": "(q+16*(q^2-1))/(q^2-q^(-2))"}, None)),
    fam("X4_48", 4, ["K^4*Ed(2)+alpha*Fd(1)*K^4+beta*K^4*Ed(1)+gamma*K^4",
                     "K^2*Ed(1)", "K^2", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, ["alpha != 0"], li=True,
        boundary=("closure", {"alpha": "0", "beta": "2", "gamma": "3"}, None)),
    fam("X4_49", 4, ["Fd(2)*K^4+alpha*Fd(1)*K^4*Ed(1)+alpha^2*K^4*Ed(2)"
                     "+beta*Fd(1)*K^4+alpha*beta*K^4*Ed(1)+gamma*K^4",
                     "Fd(1)*K^2+(beta-alpha*delta)*K^2",
                     "K^2*Ed(1)+delta*K^2", "1"],
        GEN, [], li="alpha != (q-q^-3)*gamma-(q-q^-1)*beta^2",
        boundary=("li", {"alpha": "3*(q-q^(-3))-4*(q-q^(-1))", "beta": "2",
                         "gamma": "3", "delta": "5"}, None)),
    fam("X4_50", 4, ["Fd(2)*K^4+alpha*Fd(1)*K^4*Ed(1)+alpha^2*K^4*Ed(2)"
                     "+beta*Fd(1)*K^4+alpha*beta*K^4*Ed(1)+gamma*K^4",
                     "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "f[-1]", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, ["mu != 1"],
        boundary=("span", {"alpha": "1", "beta": "2", "gamma": "3"},
                  ["Fd(2)*K^4+alpha*Fd(1)*K^4*Ed(1)+alpha^2*K^4*Ed(2)"
                   "+beta*Fd(1)*K^4+alpha*beta*K^4*Ed(1)+gamma*K^4",
                   "Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "f[1]", "1"])),
    fam("X4_51", 4, ["K^4*Ed(2)+alpha*K^4*Ed(1)+beta*K^4",
                     "Fd(1)*K^2+gamma*K^2", "K^2*Ed(1)+alpha*K^2", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, [],
        li="(1+q^-2)*beta != alpha^2",
        boundary=("li", {"alpha": "1", "beta": "1/(1+q^(-2))", "gamma": "3"},
                  None)),
    fam("X4_52", 4, ["K^4*Ed(2)+alpha*K^4*Ed(1)+beta*K^4",
                     "K^2*Ed(1)+alpha*K^2", "f[-1]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != 1"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["K^4*Ed(2)+alpha*K^4*Ed(1)+beta*K^4",
                   "K^2*Ed(1)+alpha*K^2", "f[1]", "1"])),
    fam("X4_53", 4, ["Fd(1)*f[q^3]+alpha*f[q^3]*Ed(1)+beta*f[q^3]",
                     "Fd(1)*K^2+gamma*K^2*Ed(1)+delta*K^2", "f[q^2]", "1"],
        GEN, ["mu != q"], li="gamma != alpha, mu^2 != q^2",
        boundary=("li", {"alpha": "1", "beta": "2", "gamma": "1",
                         "delta": "5"}, None)),
    fam("X4_54", 4, ["Fd(1)*f[q^3]+alpha*f[q^3]*Ed(1)+beta*f[q^3]",
                     "K^2*Ed(1)+gamma*K^2", "f[q^2]", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, ["mu != q"],
        li="mu^2 != q^2",
        boundary=("li", {"alpha": "1", "beta": "2", "gamma": "3"},
                  ["Fd(1)*f[-q]+alpha*f[-q]*Ed(1)+beta*f[-q]",
                   "K^2*Ed(1)+gamma*K^2", "f[-1]", "1"])),
    fam("X4_55", 4, ["Fd(1)*f[q^3]+alpha*f[q^3]", "f[q^3]*Ed(1)+beta*f[q^3]",
                     "f[q^2]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != q"], li="mu^2 != q^2",
        boundary=("li", {"alpha": "1", "beta": "2"},
                  ["Fd(1)*f[-q]+alpha*f[-q]", "f[-q]*Ed(1)+beta*f[-q]",
                   "f[-1]", "1"])),
    fam("X4_56", 4, ["Fd(1)*f[q^3]+alpha*f[q^3]*Ed(1)+beta*f[q^3]",
                     "f[q^2]", "f[-1]", "1"],
        {"alpha": "1", "beta": "2"},
        ["mu != q", "mu != q*nu", "nu != 1"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["Fd(1)*f[-q]+alpha*f[-q]*Ed(1)+beta*f[-q]",
                   "f[-1]", "f[-1]", "1"])),
    fam("X4_57", 4, ["Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2",
                     "f[q^3]*Ed(1)+gamma*f[q^3]", "f[q^2]", "1"],
        {"alpha": "1", "beta": "2", "gamma": "3"}, ["mu != q"],
        li="mu^2 != q^2",
        boundary=("li", {"alpha": "1", "beta": "2", "gamma": "3"},
                  ["Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2",
                   "f[-q]*Ed(1)+gamma*f[-q]", "f[-1]", "1"])),
    fam("X4_58", 4, ["Fd(1)*K^2+alpha*K^2", "K^2*Ed(1)+beta*K^2",
                     "f[q^2]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != 1"], li="mu^2 != 1",
        boundary=("li", {"alpha": "1", "beta": "2"},
                  ["Fd(1)*K^2+alpha*K^2", "K^2*Ed(1)+beta*K^2",
                   "f[-1]", "1"])),
    fam("X4_59", 4, ["Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "f[-1]",
                     "f[i]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != nu", "mu != 1", "nu != 1"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["Fd(1)*K^2+alpha*K^2*Ed(1)+beta*K^2", "f[-1]",
                   "f[-1]", "1"])),
    fam("X4_60", 4, ["K^2*Ed(1)+alpha*K^2", "f[-1]", "f[i]", "1"],
        {"alpha": "1"}, ["mu != nu", "mu != 1", "nu != 1"],
        boundary=("span", {"alpha": "1"},
                  ["K^2*Ed(1)+alpha*K^2", "f[-1]", "f[-1]", "1"])),
    fam("X4_61", 4, ["f[q^3]*Ed(1)+alpha*f[q^3]", "K^2*Ed(1)+beta*K^2",
                     "f[q^2]", "1"],
        {"alpha": "1", "beta": "2"}, ["mu != q"],
        boundary=("span", {"alpha": "1", "beta": "2"},
                  ["f[q]*Ed(1)+alpha*f[q]", "K^2*Ed(1)+beta*K^2",
                   "f[1]", "1"])),
    fam("X4_62", 4, ["f[q^3]*Ed(1)+alpha*f[q^3]", "f[q^2]", "f[-1]", "1"],
        {"alpha": "1"}, ["mu != q", "mu != q*nu", "nu != 1"],
        boundary=("span", {"alpha": "1"},
                  ["f[-q]*Ed(1)+alpha*f[-q]", "f[-1]", "f[-1]", "1"])),
    fam("X4_63", 4, ["f[q]", "f[-1]", "f[i*q^2]", "1"],
        conditions=["mu_i pairwise distinct and != 1"],
        boundary=("span", {}, ["f[q]", "f[-1]", "f[q]", "1"])),
]


# ---------------------------------------------------------------------------
# the filtered list (items surviving the 2-form dimension test)
# ---------------------------------------------------------------------------

ITEMS = [
    {"item": 1, "family": "X4_47",
     "family_params": {"alpha": "0", "beta": "0", "gamma": "0",
                       "delta": "q^5/(q^2-1)^2"},
     "basis": ["F*K^2*E+q^5/(q^2-1)^2*K^4", "F*K", "K*E", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 1},
    {"item": 2, "family": "X4_53",
     "family_params": {"alpha": "0", "beta": "1",
                       "gamma": "-(q-q^(-1))^2", "delta": "1+q"},
     "basis": ["F+K", "F*K-(q-q^(-1))^2*K*E+(1+q)*K^2", "Kinv", "1"],
     "two_form_dim": 3, "hopf_invariant": False, "page": None},
    {"item": 3, "family": "X4_53",
     "family_params": {"alpha": "0", "beta": "1",
                       "gamma": "-(q-q^(-1))^2", "delta": "1+q"},
     "basis": ["F*eps-+eps-*K", "F*K-(q-q^(-1))^2*K*E+(1+q)*K^2",
               "eps-*Kinv", "1"],
     "two_form_dim": 3, "hopf_invariant": False, "page": None},
    {"item": 4, "family": "X4_53",
     "family_params": {"alpha": "0", "beta": "1",
                       "gamma": "(q-q^(-1))^2", "delta": "1-q"},
     "basis": ["F*f[i]+f[i]*K", "F*K+(q-q^(-1))^2*K*E+(1-q)*K^2",
               "f[i]*Kinv", "1"],
     "two_form_dim": 3, "hopf_invariant": False, "page": None},
    {"item": 5, "family": "X4_53",
     "family_params": {"alpha": "0", "beta": "1",
                       "gamma": "(q-q^(-1))^2", "delta": "1-q"},
     "basis": ["F*f[-i]+f[-i]*K", "F*K+(q-q^(-1))^2*K*E+(1-q)*K^2",
               "f[-i]*Kinv", "1"],
     "two_form_dim": 3, "hopf_invariant": False, "page": None},
    {"item": 6, "family": "X4_53",
     "family_params": {"alpha": "1", "beta": "0", "gamma": "-1",
                       "delta": "0"},
     "basis": ["F*f[i]*K+f[i]*K*E", "F*K-K*E", "f[i]", "1"],
     "two_form_dim": 4, "hopf_invariant": False, "page": None},
    {"item": 7, "family": "X4_53",
     "family_params": {"alpha": "1", "beta": "0", "gamma": "-1",
                       "delta": "0"},
     "basis": ["F*f[-i]*K+f[-i]*K*E", "F*K-K*E", "f[-i]", "1"],
     "two_form_dim": 4, "hopf_invariant": False, "page": None},
    {"item": 8, "family": "X4_54",
     "family_params": {"alpha": "0", "beta": "0", "gamma": "0"},
     "basis": ["F*K^5", "K*E", "K^4", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 2},
    {"item": 9, "family": "X4_54",
     "family_params": {"alpha": "0", "beta": "0", "gamma": "0"},
     "basis": ["F*K^-3", "K*E", "K^-4", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 3},
    {"item": 10, "family": "X4_55",
     "family_params": {"alpha": "0", "beta": "0"},
     "basis": ["F*K^-1", "K^-1*E", "K^-2", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 4},
    {"item": 11, "family": "X4_55",
     "family_params": {"alpha": "0", "beta": "0"},
     "basis": ["F*eps-*K^-1", "eps-*K^-1*E", "eps-*K^-2", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 5},
    {"item": 12, "family": "X4_55",
     "family_params": {"alpha": "0", "beta": "0"},
     "basis": ["F*K^-3", "K^-3*E", "K^-4", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 6},
    {"item": 13, "family": "X4_57",
     "family_params": {"alpha": "0", "beta": "0", "gamma": "0"},
     "basis": ["F*K", "K^5*E", "K^4", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 7},
    {"item": 14, "family": "X4_57",
     "family_params": {"alpha": "0", "beta": "0", "gamma": "0"},
     "basis": ["F*K", "K^-3*E", "K^-4", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 8},
    {"item": 15, "family": "X4_57",
     "family_params": {"alpha": "-1/(q-q^(-1))^2",
                       "beta": "1/((q-1)*(q^(-2)-1))", "gamma": "1"},
     "basis": ["F*K-1/(q-q^(-1))^2*K*E+1/((q-1)*(q^(-2)-1))*K^2",
               "E+K", "Kinv", "1"],
     "two_form_dim": 3, "hopf_invariant": False, "page": None},
    {"item": 16, "family": "X4_57",
     "family_params": {"alpha": "-1/(q-q^(-1))^2",
                       "beta": "1/((q-1)*(q^(-2)-1))", "gamma": "1"},
     "basis": ["F*K-1/(q-q^(-1))^2*K*E+1/((q-1)*(q^(-2)-1))*K^2",
               "eps-*E+eps-*K", "eps-*Kinv", "1"],
     "two_form_dim": 3, "hopf_invariant": False, "page": None},
    {"item": 17, "family": "X4_58",
     "family_params": {"alpha": "0", "beta": "0"},
     "basis": ["F*K", "K*E", "K^4", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 9},
    {"item": 18, "family": "X4_58",
     "family_params": {"alpha": "0", "beta": "0"},
     "basis": ["F*K", "K*E", "K^2", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 10},
    {"item": 19, "family": "X4_58",
     "family_params": {"alpha": "1", "beta": "-q^3/(q^2-1)^2"},
     "basis": ["F*K+K^2", "K*E-q^3/(q^2-1)^2*K^2", "K^-2", "1"],
     "two_form_dim": 3, "hopf_invariant": False, "page": None},
    {"item": 20, "family": "X4_58",
     "family_params": {"alpha": "0", "beta": "0"},
     "basis": ["F*K", "K*E", "eps-*K^2", "1"],
     "two_form_dim": 3, "hopf_invariant": True, "page": 11},
]

# families that pass the independence condition at generic samples but
# whose universal 2-forms drop below dimension 3
EXCLUDED_SAMPLES = [
    {"family": "X4_8", "params": GEN},
    {"family": "X4_19", "params": {"alpha": "1"}},
    {"family": "X4_37", "params": {"alpha": "1", "beta": "2"}},
    {"family": "X4_58", "params": {"alpha": "1", "beta": "2"}},
]


def validate_family(rec):
    basis = load_basis(rec["basis"], rec["params"])
    V = coideal.Subspace(basis)
    assert V.dim == rec["dim"], (rec["name"], V.dim)
    assert coideal.is_right_coideal(V), rec["name"]
    assert coideal.is_unital(V), rec["name"]
    if rec["li"]:
        T = fodc.tangent_from_coideal(V)
        assert fodc.li_check(T), f"{rec['name']} fails LI at generic sample"
    b = rec["boundary"]
    if b is None:
        return rec
    kind, params, basis_override = b
    bstrings = basis_override or rec["basis"]
    bbasis = load_basis(bstrings, params)
    out = {"kind": kind, "params": dict(params)}
    if basis_override:
        out["basis"] = basis_override
    if kind == "span":
        sp = coideal.Subspace(bbasis)
        assert sp.dim < rec["dim"], f"{rec['name']} boundary span keeps rank"
        out["expect_dim"] = sp.dim
    elif kind == "closure":
        generic_first = load_basis([rec["basis"][0]], rec["params"])[0]
        g = coideal.closure([generic_first]).dim
        cl = coideal.closure([bbasis[0]]).dim
        assert cl < g, f"{rec['name']} boundary closure keeps rank {cl}/{g}"
        out["generic_closure_dim"] = g
        out["expect_dim"] = cl
    elif kind == "li":
        V = coideal.Subspace(bbasis)
        assert V.dim == rec["dim"], (rec["name"], "boundary dim", V.dim)
        assert coideal.is_right_coideal(V)
        T = fodc.tangent_from_coideal(V)
        assert not fodc.li_check(T), f"{rec['name']} boundary passes LI"
    rec = dict(rec)
    rec["boundary"] = out
    return rec


def validate_item(rec):
    basis = load_basis(rec["basis"], {})
    V = coideal.Subspace(basis)
    assert V.dim == 4, (rec["item"], V.dim)
    assert coideal.is_right_coideal(V) and coideal.is_unital(V), rec["item"]
    T = fodc.tangent_from_coideal(V)
    assert fodc.li_check(T), rec["item"]
    return rec


def main():
    os.makedirs(OUT, exist_ok=True)
    fams = []
    for rec in FAMILIES:
        fams.append(validate_family(rec))
        print("ok family", rec["name"])
    items = [validate_item(r) for r in ITEMS]
    print("ok items")
    with open(os.path.join(OUT, "coideals.json"), "w") as fh:
        json.dump(fams, fh, indent=1, sort_keys=True)
    with open(os.path.join(OUT, "filter_items.json"), "w") as fh:
        json.dump({"items": items, "excluded": EXCLUDED_SAMPLES}, fh,
                  indent=1, sort_keys=True)
    with open(os.path.join(OUT, "calculi.json"), "w") as fh:
        json.dump({"calculi": CALCULI, "reference_3d": REFERENCE_3D}, fh,
                  indent=1, sort_keys=True)
    print("fixture files written to", OUT)


if __name__ == "__main__":
    main()
