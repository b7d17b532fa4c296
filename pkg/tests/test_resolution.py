from fractions import Fraction

import numpy as np
import pytest

from helpers import a3, cusp, cusp_description, node, node_description, retouched
from singspec.resolution import Component, ComponentKind, DocumentError, InvalidResolution, ResolutionData, \
    delta_invariant, from_explicit, milnor_number, same_resolution, validate

def test_cusp_is_valid() -> None:
    res = cusp()
    assert not validate(res)
    assert res.ids == ["E1", "E2", "E3", "C"]
    assert [c.m for c in res.components] == [2, 3, 6, 1]
    assert res.branches == 1
    assert res.is_reduced
    assert res.lcm == 6

def test_node_is_valid() -> None:
    res = from_explicit(node_description())
    assert not validate(res)
    assert res.branches == 2

def test_wrapped_document() -> None:
    assert from_explicit({"curve": cusp_description()}) == cusp()

def test_tampered_multiplicity_breaks_projection_formula() -> None:
    violations = validate(retouched(cusp(), "E3", m=5))
    assert {v.identity for v in violations} == {"projection_formula"}
    assert sorted(v.component for v in violations) == ["E1", "E2", "E3"]

@pytest.mark.parametrize("name,changes,identity",
    [
        ("E1", {"m": 3}, "projection_formula"),
        ("C", {"m": 2}, "projection_formula"),
        ("E2", {"a": 1}, "adjunction"),
        ("E3", {"a": 5}, "adjunction"),
        ("E1", {"self_int": -2}, "adjunction"),
        ("E3", {"self_int": -2}, "adjunction"),
        ("E2", {"self_int": 0}, "component"),
        ("C", {"a": 1}, "component"),
        ("C", {"self_int": -1}, "component"),
        ("E1", {"m": 0}, "component"),
    ]
)
def test_each_field_tampering_is_detected(name: str, changes, identity: str) -> None:
    violations = validate(retouched(cusp(), name, **changes))
    assert identity in {v.identity for v in violations}

@pytest.mark.parametrize("edges",
    [
        [["E1", "E3"], ["E2", "E3"]],                          # branch detached
        [["E1", "E3"], ["E2", "E3"], ["E3", "C"], ["E1", "E2"]],  # extra intersection
        [["E1", "E3"], ["E2", "E1"], ["E3", "C"]],             # moved edge
    ]
)
def test_edge_tampering_is_detected(edges) -> None:
    description = cusp_description()
    description["edges"] = edges
    with pytest.raises(InvalidResolution):
        from_explicit(description)

def test_repeated_edge_is_not_simple() -> None:
    description = cusp_description()
    description["edges"].append(["E3", "E1"])
    with pytest.raises(InvalidResolution) as exc:
        from_explicit(description)
    assert exc.value.violations[0].identity == "simple_graph"

def test_self_loop_and_unknown_component() -> None:
    res = cusp()
    looped = ResolutionData(res.components, res.edges | {frozenset({"E1"})})
    assert "simple_graph" in {v.identity for v in validate(looped)}
    dangling = ResolutionData(res.components, res.edges | {frozenset({"E1", "Z"})})
    assert "simple_graph" in {v.identity for v in validate(dangling)}

def test_disconnected_exceptional_curves() -> None:
    # two disjoint (-1)-curves each carrying a smooth branch
    components = (
        Component.exceptional("E1", 1, 1, -1),
        Component.exceptional("E2", 1, 1, -1),
        Component.branch("C1"),
        Component.branch("C2"),
    )
    res = ResolutionData.from_parts(components, [["E1", "C1"], ["E2", "C2"]])
    violations = validate(res)
    assert "connected" in {v.identity for v in violations}

def test_not_negative_definite() -> None:
    components = (
        Component.exceptional("E1", 1, 0, -1),
        Component.exceptional("E2", 1, 0, -1),
    )
    res = ResolutionData.from_parts(components, [["E1", "E2"]])
    assert "negative_definite" in {v.identity for v in validate(res)}

@pytest.mark.parametrize("description",
    [
        {},
        {"components": []},
        {"components": [{"id": "E1", "kind": "weird", "m": 1}]},
        {"components": [{"id": "E1", "kind": "exceptional", "m": "2", "a": 1, "self": -1}]},
        {"components": [{"kind": "exceptional", "m": 2}]},
        {"components": [{"id": "C", "kind": "non_exceptional", "m": 1}], "edges": "none"},
    ]
)
def test_unparseable_descriptions(description) -> None:
    with pytest.raises(DocumentError):
        from_explicit(description)

def test_intersections() -> None:
    res = cusp()
    assert res.intersection("E3", "E3") == -1
    assert res.intersection("E1", "E3") == 1
    assert res.intersection("E1", "E2") == 0
    with pytest.raises(ValueError):
        res.intersection("C", "C")
    assert res.neighbours("E3") == ["C", "E1", "E2"]
    matrix = res.intersection_matrix(["E1", "E2", "E3"])
    assert (matrix == np.array([[-3, 0, 1], [0, -2, 1], [1, 1, -1]])).all()
    assert res.intersection_matrix(["E3"], res.ids).shape == (1, 4)

def test_graph_labels() -> None:
    graph = cusp().graph()
    assert graph.number_of_nodes() == 4
    assert graph.number_of_edges() == 3
    assert graph.nodes["E3"]["m"] == 6
    assert graph.nodes["C"]["kind"] == ComponentKind.NON_EXCEPTIONAL.value

@pytest.mark.parametrize("res,lo,hi,expected",
    [
        (cusp(), Fraction(0), Fraction(1), [Fraction(5, 6), Fraction(1)]),
        (node(), Fraction(0), Fraction(1), [Fraction(1)]),
        (a3(), Fraction(0), Fraction(1), [Fraction(3, 4), Fraction(1)]),
        (cusp(), Fraction(5, 6), Fraction(2), [Fraction(1), Fraction(7, 6), Fraction(4, 3), Fraction(3, 2),
            Fraction(5, 3), Fraction(11, 6), Fraction(2)]),
    ]
)
def test_candidate_exponents(res, lo, hi, expected) -> None:
    assert res.candidate_exponents(lo, hi) == expected

def test_candidate_exponents_range() -> None:
    with pytest.raises(ValueError):
        cusp().candidate_exponents(Fraction(1), Fraction(1))

@pytest.mark.parametrize("res,mu,delta",
    [
        (cusp(), 2, 1),
        (node(), 1, 1),
        (a3(), 3, 2),
    ]
)
def test_milnor_and_delta(res, mu: int, delta: int) -> None:
    assert milnor_number(res) == mu
    assert delta_invariant(res) == delta

def test_delta_from_milnor_number_when_not_recorded() -> None:
    res = cusp()
    assert res.delta is None
    assert delta_invariant(res) == 1

def test_smooth_germ_invariants() -> None:
    res = ResolutionData.from_parts([Component.branch("C")], [])
    assert not validate(res)
    assert milnor_number(res) == 0
    assert delta_invariant(res) == 0

def test_branches_meeting_without_exceptional_curves() -> None:
    res = ResolutionData.from_parts([Component.branch("C1"), Component.branch("C2")], [["C1", "C2"]])
    assert [v.identity for v in validate(res)] == ["exceptional_fibre"]
    with pytest.raises(ValueError):
        milnor_number(res)

def test_same_resolution_ignores_names() -> None:
    assert same_resolution(from_explicit(node_description()), node())
    assert not same_resolution(node(), a3())
    assert not same_resolution(cusp(), retouched(cusp(), "E1", a=2))
