"""Loading and validation of the bundled fixture tables."""

from __future__ import annotations

import json
from importlib import resources

from . import uq
from .exprs import parse_o, parse_scalar, parse_u
from .scalars import PARAM_ALIASES, PARAM_NAMES


class FixtureError(ValueError):
    pass


def _read_json(name, path=None):
    if path is not None:
        with open(f"{path}/{name}", encoding="utf-8") as fh:
            return json.load(fh)
    ref = resources.files(__package__) / "fixtures" / name
    return json.loads(ref.read_text(encoding="utf-8"))


def param_values(d):
    """{alias: value-string} -> {p-index: Scalar}."""
    out = {}
    for k, v in d.items():
        name = PARAM_ALIASES.get(k, k)
        if name not in PARAM_NAMES:
            raise FixtureError(f"unknown parameter {k!r}")
        out[PARAM_NAMES.index(name) + 1] = parse_scalar(str(v))
    return out


def load_u_basis(strings, params=None):
    vals = param_values(params or {})
    out = []
    for s in strings:
        el = parse_u(s)
        if vals:
            terms = {}
            for m, c in el.terms.items():
                c = c.subs_params(vals)
                if not c.is_zero():
                    terms[m] = c
            el = uq.UElement(terms)
        out.append(el)
    return out


PAIR_NAMES = ("HH", "HX", "HY", "XH", "XX", "XY", "YH", "YX", "YY")
WEDGE_NAMES = ("HX", "HY", "XY")
_PAIR_OF_NAME = {n: (("HXY".index(n[0])), ("HXY".index(n[1])))
                 for n in PAIR_NAMES}


def parse_pair_vector(d):
    """{pair-name: scalar-string} -> {(i, j): Scalar}."""
    out = {}
    for name, s in d.items():
        if name not in _PAIR_OF_NAME:
            raise FixtureError(f"unknown tensor coordinate {name!r}")
        out[_PAIR_OF_NAME[name]] = parse_scalar(s)
    return out


class FixtureSet:
    """The bundled tables: detail records, coideal families, filter list."""

    def __init__(self, path=None):
        data = _read_json("calculi.json", path)
        self.calculi = {rec["name"]: rec for rec in data["calculi"]}
        self.reference_3d = data["reference_3d"]
        self.families = {rec["name"]: rec
                         for rec in _read_json("coideals.json", path)}
        filt = _read_json("filter_items.json", path)
        self.items = filt["items"]
        self.excluded = filt["excluded"]

    def calculus(self, name):
        if name in self.calculi:
            return self.calculi[name]
        # allow lookup by page number or by the filtered-list item number
        for rec in self.calculi.values():
            if str(rec["page"]) == str(name):
                return rec
        for rec in self.calculi.values():
            if f"item{rec['item']}" == str(name):
                return rec
        raise FixtureError(f"unknown calculus {name!r}")

    def calculus_names(self):
        return sorted(self.calculi, key=lambda n: self.calculi[n]["page"])

    def family(self, name):
        if name not in self.families:
            raise FixtureError(f"unknown coideal family {name!r}")
        return self.families[name]

    def family_basis(self, name, params=None, basis=None):
        rec = self.family(name)
        return load_u_basis(basis or rec["basis"],
                            rec["params"] if params is None else params)
