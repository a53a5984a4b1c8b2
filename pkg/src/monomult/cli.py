"""Command line interface: ``monomult <command> [ideal] [options]``.

The ideal comes from the positional argument, ``--file``, or standard input,
in that order of preference.  Output is JSON unless ``--format text``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DimensionError, InputError, MonomultError, ParseError
from .ideal_io import IdealSpec, parse_edges, parse_ideal, parse_rays
from .multiplicity import (
    cycle_edges,
    edge_ideal,
    epsilon_multiplicity,
    hs_multiplicity,
    j_multiplicity,
)
from .newton import MonomialIdeal, analytic_spread, integral_closure, newton, saturation_closure
from .oracle import convergence_report, length_sequence
from .plot import render_svg
from .report import SCHEMA_VERSION, base_report, dumps, full_report, rational, to_text
from .toric import PointedCone, ToricIdeal, toric_j_multiplicity, toric_newton

MODES = {
    "closure": "closure_filtration_j",
    "direct": "direct_power_j",
    "conesec": "cone_section_count",
    "epsilon": "closure_epsilon",
    "epsilon-direct": "direct_power_epsilon",
}


def _read_spec(args) -> IdealSpec:
    variables = args.vars.split(",") if getattr(args, "vars", None) else None
    if getattr(args, "ideal", None):
        text = args.ideal
    elif getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    spec = parse_ideal(text, variables)
    rays = getattr(args, "rays", None)
    if rays:
        spec = IdealSpec(spec.variables, spec.generators, parse_rays(rays))
    return spec


def _ideal(spec: IdealSpec) -> MonomialIdeal:
    return MonomialIdeal(spec.generators, spec.dim)


def _spec_of(ideal: MonomialIdeal, variables) -> dict:
    return IdealSpec(tuple(variables), ideal.generators).to_dict()


def _toric(spec: IdealSpec) -> ToricIdeal:
    if spec.cone is None:
        raise InputError("toric computations need a cone (--rays or a 'cone' entry)")
    return ToricIdeal(PointedCone(spec.cone), spec.generators)


def cmd_newton(args):
    spec = _read_spec(args)
    return full_report(spec, _ideal(spec))


def cmd_j(args):
    spec = _read_spec(args)
    return {**base_report(spec), "j": j_multiplicity(_ideal(spec))}


def cmd_epsilon(args):
    spec = _read_spec(args)
    return {**base_report(spec), "epsilon": rational(epsilon_multiplicity(_ideal(spec)))}


def cmd_hs(args):
    spec = _read_spec(args)
    ideal = _ideal(spec)
    return {**base_report(spec), "m_primary": ideal.is_m_primary, "hs": hs_multiplicity(ideal)}


def cmd_spread(args):
    spec = _read_spec(args)
    return {**base_report(spec), "spread": analytic_spread(_ideal(spec))}


def cmd_intclosure(args):
    spec = _read_spec(args)
    return {**base_report(spec), "intclosure": _spec_of(integral_closure(_ideal(spec)), spec.variables)}


def cmd_saturation(args):
    spec = _read_spec(args)
    sat = saturation_closure(_ideal(spec))
    return {**base_report(spec), "saturation": _spec_of(sat, spec.variables)}


def cmd_edgeideal(args):
    if args.cycle is not None:
        edges = cycle_edges(args.cycle)
        d = args.cycle
    elif args.edges:
        edges = parse_edges(args.edges)
        d = args.vertices
    else:
        raise InputError("edgeideal needs --edges or --cycle")
    ideal = edge_ideal(edges, d)
    return {"version": SCHEMA_VERSION, "ideal": _spec_of(ideal, [f"x{i}" for i in range(1, ideal.dim + 1)])}


def cmd_toric_j(args):
    spec = _read_spec(args)
    ideal = _toric(spec)
    spec = IdealSpec(spec.variables, spec.generators, ideal.cone.ray_generators)
    return {**base_report(spec), "j": toric_j_multiplicity(ideal)}


def cmd_verify(args):
    spec = _read_spec(args)
    kind = MODES[args.mode]
    if spec.cone is not None:
        if kind not in ("cone_section_count", "closure_filtration_j"):
            raise InputError(f"mode {args.mode!r} is not available for toric ideals")
        toric = _toric(spec)
        target = Fraction(toric_j_multiplicity(toric))
        seq = length_sequence(toric_newton(toric), kind, args.nmax)
    else:
        ideal = _ideal(spec)
        seq = length_sequence(ideal, kind, args.nmax)
        nd = newton(ideal)
        target = epsilon_multiplicity(nd) if kind.endswith("epsilon") else Fraction(j_multiplicity(nd))
    rep = convergence_report(seq, target)
    oracle = {
        "kind": seq.kind,
        "values": {str(n): v for n, v in sorted(seq.values.items())},
        "target": rational(target),
        "normalized": {str(n): rational(v) for n, v in rep.normalized.items()},
        "n_max": rep.n_max,
        "gap": rational(rep.gap),
    }
    return {**base_report(spec), "oracle": oracle}


def cmd_plot(args):
    spec = _read_spec(args)
    if spec.dim != 2:
        raise DimensionError(f"plot supports d = 2 only, got d = {spec.dim}")
    svg = render_svg(_ideal(spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        return {**base_report(spec), "svg": args.output}
    return svg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monomult", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, helptext, ideal=True):
        p = sub.add_parser(name, help=helptext)
        if ideal:
            p.add_argument("ideal", nargs="?", help="generators, e.g. 'y^4, x^2*y, x*y^2'")
            p.add_argument("--file", help="read generators (one per line) or a JSON IdealSpec")
            p.add_argument("--vars", help="comma-separated variable names")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.set_defaults(func=func)
        return p

    add("newton", cmd_newton, "full report: Newton polyhedron, spread and multiplicities")
    add("j", cmd_j, "j-multiplicity")
    add("epsilon", cmd_epsilon, "epsilon-multiplicity")
    add("hs", cmd_hs, "Hilbert-Samuel multiplicity (m-primary ideals)")
    add("spread", cmd_spread, "analytic spread")
    add("intclosure", cmd_intclosure, "integral closure")
    add("saturation", cmd_saturation, "saturation of the integral closure")
    p = add("edgeideal", cmd_edgeideal, "edge ideal of a graph", ideal=False)
    p.add_argument("--edges", help="edges such as '1-2,2-3,3-1'")
    p.add_argument("--cycle", type=int, help="use the cycle on this many vertices")
    p.add_argument("--vertices", type=int, help="number of vertices (default: largest label)")
    p = add("toric-j", cmd_toric_j, "j-multiplicity in k[Z^d & sigma]")
    p.add_argument("--rays", help="cone ray generators, e.g. '1,0;1,2'")
    p = add("verify", cmd_verify, "lattice-count oracle and convergence report")
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--mode", choices=sorted(MODES), default="closure")
    p.add_argument("--rays", help="cone ray generators for the toric oracle")
    p = add("plot", cmd_plot, "SVG of conv, bd, pyr and out regions (d = 2)")
    p.add_argument("--output", "-o", help="write the SVG here instead of standard output")
    return parser


def _error_payload(exc: Exception) -> dict:
    err = {"type": type(exc).__name__, "message": getattr(exc, "message", str(exc))}
    if isinstance(exc, ParseError) and exc.position is not None:
        err["position"] = exc.position
    return {"error": err}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (MonomultError, OSError) as exc:
        sys.stdout.write(json.dumps(_error_payload(exc)) + "\n")
        return 2
    if isinstance(result, str):
        sys.stdout.write(result)
    elif args.format == "text":
        sys.stdout.write(to_text(result) + "\n")
    else:
        sys.stdout.write(dumps(result) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
