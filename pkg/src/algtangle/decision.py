"""Decision procedures for closed essential surfaces in algebraically alternating links."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAlgebraicallyAlternating, PreconditionViolated
from .expr import QLoop, subtree, walk
from .slope import expand_products, find_closed_subtangles, find_qm_summands, has_loop, slope
from .template import (
    DiagramTemplate,
    assemble,
    basic_diagram,
    find_cut_tangles,
    is_algebraically_alternating,
    trace_components,
)


@dataclass
class Verdict:
    value: object
    witness: object = None

    def to_json(self):
        return {"value": self.value, "witness": self.witness}


@dataclass
class SurfaceExistenceReport:
    closed_surface: Verdict
    sphere: Verdict
    torus: Verdict
    preconditions_met: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def to_json(self):
        return {
            "closed_surface": self.closed_surface.to_json(),
            "sphere": self.sphere.to_json(),
            "torus": self.torus.to_json(),
            "preconditions_met": dict(self.preconditions_met),
            "warnings": list(self.warnings),
        }


def require_alternating(t: DiagramTemplate):
    if not is_algebraically_alternating(t):
        raise NotAlgebraicallyAlternating("the basic diagram is not alternating")


def _closed_witnesses(v, e):
    out = [{"kind": "closed subtangle", "vertex": v, "path": list(p)}
           for p in find_closed_subtangles(e)]
    # Q_m is the rotation of a sum of m+1 slope-1/0 tangles, so it holds
    # a closed sub-tangle even though the literal node has no Sum
    for path, node in walk(expand_products(e)):
        if isinstance(node, QLoop):
            out.append({"kind": "closed subtangle", "vertex": v, "path": list(path), "q_m": node.m})
    return out


def decide_closed_surface(t: DiagramTemplate) -> Verdict:
    require_alternating(t)
    if assemble(basic_diagram(t)).is_split():
        return Verdict(True, {"kind": "basic diagram split"})
    for v in t.vertices:
        found = _closed_witnesses(v, t.tangles[v])
        if found:
            return Verdict(True, found[0])
    return Verdict(False)


def decide_sphere(t: DiagramTemplate) -> Verdict:
    require_alternating(t)
    for cut in find_cut_tangles(t):
        if cut["genus"] == 0:
            return Verdict(True, {"kind": "genus 0 cut tangle", **cut})
    return Verdict(False)


def q_summands(t: DiagramTemplate):
    out = []
    for v in t.vertices:
        for m, path in find_qm_summands(t.tangles[v]):
            out.append({"vertex": v, "m": m, "path": list(path)})
    return out


def decide_torus(t: DiagramTemplate) -> Verdict:
    """Tri-state "yes" / "no" / "unknown" with a witness."""
    require_alternating(t)
    cuts = find_cut_tangles(t)
    zero = [c for c in cuts if c["genus"] == 0]
    if zero:
        raise PreconditionViolated(f"genus 0 cut tangle at {zero[0]['vertex']!r}")
    for c in cuts:
        if c["genus"] == 1:
            return Verdict("yes", {"kind": "genus 1 cut tangle", **c})
    qs = q_summands(t)
    for q in qs:
        if q["m"] >= 2:
            return Verdict("yes", {"kind": "Q_m summand", **q})
    if qs:
        # whether Q_1 annuli chain into a Q_2 is not visible in the syntax
        return Verdict("unknown", {"kind": "unresolved Q_1 summands", "summands": qs})
    return Verdict("no")


def decide(t: DiagramTemplate) -> SurfaceExistenceReport:
    """Run all three decisions and collect them in one report."""
    closed = decide_closed_surface(t)
    sphere = decide_sphere(t)
    flags = {"algebraically_alternating": True, "no_genus_0_cut_tangle": not sphere.value}
    warnings = []
    if sphere.value:
        torus = Verdict("unknown", {"kind": "precondition failed: genus 0 cut tangle exists"})
        warnings.append("torus clause skipped: a genus 0 cut tangle exists")
    else:
        torus = decide_torus(t)
        if torus.value == "unknown":
            warnings.append("torus verdict unknown: Q_1 summands found")
    for c in find_cut_tangles(t):
        if c["genus"] is None:
            warnings.append(f"genus of cut tangle at {c['vertex']!r} is undefined")
    return SurfaceExistenceReport(closed, sphere, torus, flags, warnings)


def check_meridian_lemma(t: DiagramTemplate) -> bool:
    """True when no closed essential surface exists, as predicted for knots."""
    require_alternating(t)
    if trace_components(assemble(t)) != 1:
        raise PreconditionViolated("the template does not assemble to a knot")
    for v in t.vertices:
        if has_loop(t.tangles[v]):
            raise PreconditionViolated(f"vertex {v!r} carries a tangle with a loop")
    return decide_closed_surface(t).value is False


def verify_witness(t: DiagramTemplate, verdict: Verdict) -> bool:
    """Recheck a positive verdict from its witness alone."""
    w = verdict.witness
    if not verdict.value or verdict.value in ("no", "unknown"):
        return True
    kind = w["kind"]
    if kind == "basic diagram split":
        return assemble(basic_diagram(t)).shadow_components() > 1
    if kind == "closed subtangle":
        node = subtree(expand_products(t.tangles[w["vertex"]]), tuple(w["path"]))
        if isinstance(node, QLoop):
            return node.m >= 1
        return slope(node.left).is_infinite and slope(node.right).is_infinite
    if kind.endswith("cut tangle"):
        from .surface import genus
        from .template import cut_tangles

        return w["vertex"] in cut_tangles(t) and genus(t.tangles[w["vertex"]]) == w["genus"]
    if kind == "Q_m summand":
        return any(m == w["m"] and list(p) == w["path"]
                   for m, p in find_qm_summands(t.tangles[w["vertex"]]))
    return False
