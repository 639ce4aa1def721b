import json
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from algtangle import fixtures as F
from algtangle.errors import InvalidTemplate
from algtangle.expr import RationalSeq, Reflect, Rotate
from algtangle.generate import random_template
from algtangle.notation import parse
from algtangle.template import (
    DiagramTemplate,
    alternating_signs,
    alternating_template,
    assemble,
    basic_diagram,
    basic_tangle,
    denominator_template,
    find_cut_tangles,
    is_algebraically_alternating,
    load_template,
    medial_template,
    numerator_template,
    octahedron,
    prism,
    save_template,
    template_faces,
    trace_components,
    validate_template,
    wheel,
)

seeds = st.integers(0, 2**32)


def test_octahedron_is_valid():
    t = alternating_template(octahedron())
    r = validate_template(t)
    assert r.ok
    assert (len(t.vertices), len(t.edges), len(r.faces)) == (6, 12, 8)
    assert all(len(f) == 3 for f in r.faces)


def test_doubled_edges_make_bigons():
    edges = [(("a", 1), ("b", 0)), (("a", 2), ("b", 3)), (("a", 0), ("b", 1)), (("a", 3), ("b", 2))]
    one = RationalSeq((1,))
    r = validate_template(DiagramTemplate.build(["a", "b"], edges, {"a": one, "b": one}))
    assert not r.ok and any("bigon" in v for v in r.violations)


def test_disconnected_template():
    edges = [(("a", 0), ("a", 1)), (("a", 3), ("a", 2)), (("b", 0), ("b", 1)), (("b", 3), ("b", 2))]
    one = RationalSeq((1,))
    r = validate_template(DiagramTemplate.build(["a", "b"], edges, {"a": one, "b": one}, closure=True))
    assert "underlying graph is disconnected" in r.violations


def test_port_use_is_checked():
    edges = [(("a", 0), ("a", 1)), (("a", 1), ("a", 2))]
    r = validate_template(DiagramTemplate.build(["a"], edges, {"a": RationalSeq((1,))}))
    assert any("used 2 times" in v for v in r.violations)
    assert any("port 3" in v for v in r.violations)
    with pytest.raises(InvalidTemplate):
        assemble(DiagramTemplate.build(["a"], edges, {"a": RationalSeq((1,))}))


def test_monogon_is_rejected_outside_closures():
    t = numerator_template(parse("[3]"))
    assert validate_template(t).ok
    plain = DiagramTemplate(t.vertices, t.edges, t.tangles, closure=False)
    violations = validate_template(plain).violations
    assert any("monogon" in v for v in violations)


def test_closure_templates():
    d = assemble(numerator_template(parse("[3]")))
    assert d.n_crossings == 3 and trace_components(d) == 1 and d.is_alternating()
    d = assemble(numerator_template(parse("[0]")))
    assert d.n_crossings == 0 and d.loops == 2
    d = assemble(denominator_template(parse("[3]")))
    assert d.n_crossings == 3 and trace_components(d) == 1


@pytest.mark.parametrize("rot", [wheel(3), wheel(4), wheel(6), prism(3), prism(5)])
def test_medial_templates_are_spheres(rot):
    t = alternating_template(medial_template(rot))
    r = validate_template(t)
    assert r.ok
    assert len(t.vertices) - len(t.edges) + len(r.faces) == 2
    assert assemble(t).is_alternating()


def test_basic_diagram_sign_rule():
    assert basic_tangle(parse("[2 0] + [2]")) == RationalSeq((1,))  # slope 5/2
    assert basic_tangle(parse("-[2 3]")) == Reflect(RationalSeq((1,)))
    assert basic_tangle(parse("-[3]^r + [3]^r")) == RationalSeq((0,))
    assert basic_tangle(parse("([2] + -[2])^r")) == Rotate(RationalSeq((0,)))
    t = alternating_template(octahedron(), {"o0": parse("[2 3]")})
    b = basic_diagram(t)
    assert set(b.tangles.values()) <= {RationalSeq((1,)), Reflect(RationalSeq((1,)))}


def test_algebraically_alternating():
    t = alternating_template(octahedron(), {"o0": parse("[2 3]"), "o3": parse("[1 1 2]")})
    assert is_algebraically_alternating(t)
    v = t.vertices[2]
    flipped = t.with_tangles(**{v: Reflect(t.tangles[v])})
    assert not is_algebraically_alternating(flipped)
    assert is_algebraically_alternating(numerator_template(parse("[3]")))


def test_cut_tangles():
    assert find_cut_tangles(F.sphere_fixture()) == [{"vertex": "v", "genus": 0}]
    assert find_cut_tangles(F.torus_fixture()) == [{"vertex": "v", "genus": 1}]
    t = alternating_template(octahedron(), {"o0": parse("[2 3]")})
    assert find_cut_tangles(t) == []


def test_replacing_cut_by_crossing_joins_the_halves():
    t = F.sphere_fixture()
    assert assemble(t.with_tangles(v=RationalSeq((0,)))).is_split()
    assert not assemble(t.with_tangles(v=RationalSeq((1,)))).is_split()


def test_json_round_trip(tmp_path):
    t = F.torus_fixture()
    path = tmp_path / "t.json"
    save_template(t, path)
    data = json.loads(path.read_text())
    assert set(data) == {"closure", "vertices", "edges", "tangles"}
    assert data["tangles"]["v"] == "(-[2]^r + [3]^r)^r + [6]"
    u = load_template(path)
    assert u == t and u.tangles == t.tangles


def test_malformed_files():
    with pytest.raises(InvalidTemplate):
        DiagramTemplate.loads("{not json")
    with pytest.raises(InvalidTemplate):
        DiagramTemplate.loads('{"edges": []}')


@settings(max_examples=500, deadline=None)
@given(seeds)
def test_random_templates(seed):
    t = random_template(random.Random(seed), depth=2)
    r = validate_template(t)
    assert r.ok
    assert len(t.vertices) - len(t.edges) + len(r.faces) == 2
    d = assemble(t)
    counts = Counter(a for x in d.pd_code() for a in x)
    assert all(c == 2 for c in counts.values())
    assert is_algebraically_alternating(t)


def test_mirrored_signs_also_alternate():
    t = medial_template(prism(4))
    signs = alternating_signs(t)
    mirror = {v: RationalSeq((-s,)) for v, s in signs.items()}
    d = assemble(DiagramTemplate(t.vertices, t.edges, mirror))
    assert d.is_alternating()
    assert len(template_faces(t)) == len(t.vertices) + 2
