"""JSON-ready reports.  Rationals become ``"p/q"`` strings, integers stay integers."""
from __future__ import annotations

import json
from fractions import Fraction

from .ideal_io import IdealSpec
from .multiplicity import epsilon_multiplicity, hs_multiplicity, j_multiplicity
from .newton import MonomialIdeal, NewtonData, analytic_spread, newton

SCHEMA_VERSION = 1


def rational(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value) -> Fraction:
    return Fraction(value) if isinstance(value, str) else Fraction(int(value))


def newton_dict(nd: NewtonData) -> dict:
    return {
        "vertices": [[rational(x) for x in v] for v in nd.vert],
        "facets": [
            {"normal": list(f.normal), "offset": rational(f.offset), "bounded": f.bounded}
            for f in nd.facets
        ],
    }


def base_report(spec: IdealSpec) -> dict:
    return {"version": SCHEMA_VERSION, "ideal": spec.to_dict()}


def full_report(spec: IdealSpec, ideal: MonomialIdeal) -> dict:
    nd = newton(ideal)
    out = base_report(spec)
    out["newton"] = newton_dict(nd)
    out["spread"] = analytic_spread(nd)
    out["j"] = j_multiplicity(nd)
    out["epsilon"] = rational(epsilon_multiplicity(nd))
    hs = hs_multiplicity(ideal)
    if hs is not None:
        out["hs"] = hs
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=False, separators=(", ", ": "))


def to_text(report: dict, prefix: str = "") -> str:
    lines = []
    for key, value in report.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            lines.append(to_text(value, name + "."))
        else:
            lines.append(f"{name}: {json.dumps(value)}")
    return "\n".join(l for l in lines if l)
