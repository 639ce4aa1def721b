"""Command-line front end.

Exit status is 0 on success, 1 when an engine raises a domain error and
2 for usage errors.  ``--json`` may appear anywhere on the command line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decision import decide
from .determinant import check_slope_consistency, krebes_fraction
from .errors import InvalidTemplate, LoopPresent, ParseError, TangleError
from .notation import parse, render
from .slope import (
    classify,
    connection_type,
    find_closed_subtangles,
    find_qm_summands,
    has_loop,
    slope,
)
from .surface import surface_report
from .template import assemble, load_template


def _surface_json(f):
    return {"euler": f.euler, "boundary_count": f.boundary_count,
            "boundary_slope": str(f.boundary_slope), "genus": f.genus}


def cmd_slope(args):
    e = parse(args.expr)
    s = slope(e)
    t = classify(s)
    return {"slope": str(s), "type": t.value}, [], f"{s} ({t})"


def cmd_classify(args):
    e = parse(args.expr)
    s = slope(e)
    loop = has_loop(e)
    try:
        conn = connection_type(e).value
    except LoopPresent:
        conn = None
    closed = [list(p) for p in find_closed_subtangles(e)]
    qs = [{"m": m, "path": list(p)} for m, p in find_qm_summands(e)]
    result = {"slope": str(s), "type": classify(s).value, "has_loop": loop,
              "connection_type": conn, "closed_subtangles": closed, "q_summands": qs}
    lines = [
        f"slope: {s}",
        f"type: {classify(s).value}",
        f"has_loop: {str(loop).lower()}",
        f"connection_type: {conn if conn else 'undefined (loop present)'}",
        f"closed_subtangles: {len(closed)}" + "".join(f"\n  at {'/'.join(p) or '(root)'}" for p in closed),
        f"q_summands: {len(qs)}" + "".join(
            f"\n  Q_{q['m']} at {'/'.join(q['path']) or '(root)'}" for q in qs),
    ]
    return result, [], "\n".join(lines)


def cmd_surface(args):
    report = surface_report(parse(args.expr))
    f = report.surface
    result = _surface_json(f)
    result["gluings"] = [{"path": list(g.path), "copies": list(g.copies), "arcs": g.arcs}
                         for g in report.gluings]
    text = (f"euler: {f.euler}\nboundary_count: {f.boundary_count}\n"
            f"boundary_slope: {f.boundary_slope}\ngenus: {f.genus}")
    return result, list(report.warnings), text


def cmd_genus(args):
    report = surface_report(parse(args.expr))
    return {"genus": report.surface.genus}, list(report.warnings), str(report.surface.genus)


def cmd_oracle(args):
    e = parse(args.expr)
    f = krebes_fraction(e)
    warnings = []
    try:
        consistent = check_slope_consistency(e)
    except LoopPresent:
        consistent = None
        warnings.append("slope consistency is only stated for loop-free tangles")
    s = slope(e)
    result = {"krebes": {"num": f.num, "den": f.den}, "reduced": list(f.reduced()),
              "slope": str(s), "consistent": consistent}
    verdict = "n/a" if consistent is None else str(consistent).lower()
    text = f"krebes: {f}\nreduced: {'/'.join(map(str, f.reduced()))}\nslope: {s}\nconsistent: {verdict}"
    return result, warnings, text


def cmd_assemble(args):
    t = load_template(args.template)
    d = assemble(t)
    result = {"crossings": d.n_crossings, "components": d.components(), "free_loops": d.loops,
              "alternating": d.is_alternating(), "split": d.is_split()}
    if args.pd:
        result["pd"] = d.pd_text().splitlines()
        return result, [], d.pd_text()
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in result.items())
    return result, [], text


def _verdict_text(name, v):
    value = str(v.value).lower() if isinstance(v.value, bool) else v.value
    if v.witness is None:
        return f"{name}: {value}"
    return f"{name}: {value}  witness: {json.dumps(v.witness, sort_keys=True)}"


def cmd_decide(args):
    r = decide(load_template(args.template))
    lines = [_verdict_text("closed_surface", r.closed_surface), _verdict_text("sphere", r.sphere),
             _verdict_text("torus", r.torus)]
    return r.to_json(), list(r.warnings), "\n".join(lines)


def build_parser():
    p = argparse.ArgumentParser(prog="algtangle", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, fn, help_ in [
        ("slope", cmd_slope, "slope and parity type"),
        ("classify", cmd_classify, "type, loops, connection, closed sub-tangles, Q_m summands"),
        ("surface", cmd_surface, "Euler characteristic, boundary and genus of the surface"),
        ("genus", cmd_genus, "genus of the tangle"),
        ("oracle", cmd_oracle, "Krebes fraction and slope consistency"),
    ]:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("expr", help="tangle expression, e.g. '-[3]^r + [3]^r'")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("assemble", help="assemble a template file into a link diagram")
    sp.add_argument("template")
    sp.add_argument("--pd", action="store_true", help="print the PD code")
    sp.set_defaults(func=cmd_assemble)
    sp = sub.add_parser("decide", help="closed-surface, sphere and torus decisions")
    sp.add_argument("template")
    sp.set_defaults(func=cmd_decide)
    return p


def _error_payload(exc):
    payload = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        payload.update(position=exc.position, expected=exc.expected, found=exc.found)
    if isinstance(exc, InvalidTemplate):
        payload["violations"] = exc.violations
    return payload


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    echo = vars(args).get("expr", vars(args).get("template"))
    report = {"command": args.command, "input": echo}
    try:
        if "expr" in vars(args):
            report["input"] = render(parse(args.expr))
        result, warnings, text = args.func(args)
    except (TangleError, OSError) as exc:
        report.update(error=_error_payload(exc), warnings=[])
        if as_json:
            print(json.dumps(report, sort_keys=True), file=out)
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=err)
        # an unreadable template path is a usage error, not a domain error
        return 2 if isinstance(exc, OSError) else 1
    report.update(result=result, warnings=warnings)
    if as_json:
        print(json.dumps(report, sort_keys=True), file=out)
    else:
        print(text, file=out)
        for w in warnings:
            print(f"warning: {w}", file=err)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
