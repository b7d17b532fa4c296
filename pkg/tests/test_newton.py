from fractions import Fraction

import pytest

from helpers import coprime_pairs, cusp, node
from singspec.exc_geometry import spectrum
from singspec.resolution import DocumentError, NewtonPolygonError, delta_invariant, from_newton, \
    from_newton_document, from_proximity_document, milnor_number, quasi_homogeneous_proximity, same_resolution, \
    validate
from singspec.resolution.newton import edge_normal, lower_convex_hull, newton_boundary
from singspec.spectrum import Spectrum

def test_cusp_matches_blowups_exactly() -> None:
    res = from_newton([(2, 0), (0, 3)])
    expected = cusp()
    assert [(c.id, c.m, c.a, c.self_int) for c in res.components] == \
        [(c.id, c.m, c.a, c.self_int) for c in expected.components]
    assert res.edges == expected.edges
    assert [c.ray for c in res.exceptional] == [(1, 1), (2, 1), (3, 2)]

def test_node() -> None:
    res = from_newton([(2, 0), (0, 2)])
    assert same_resolution(res, node())
    assert [c.id for c in res.non_exceptional] == ["C1", "C2"]

def test_smooth_germ() -> None:
    res = from_newton([(1, 0)])
    assert not res.exceptional
    assert [(c.id, c.m, c.ray) for c in res.components] == [("C", 1, (1, 0))]
    assert not validate(res)

def test_coordinate_axes_become_branches() -> None:
    # x y (x + y^2): both axes divide f
    res = from_newton([(2, 1), (1, 2)])
    axes = {c.ray: c.m for c in res.non_exceptional if c.ray is not None}
    assert axes == {(1, 0): 1, (0, 1): 1}
    assert not validate(res)

def test_normal_crossing_monomial() -> None:
    # x y: the two axes are separated by a single blow-up, as for the node
    res = from_newton([(1, 1)])
    assert [(c.id, c.m, c.a, c.self_int, c.ray) for c in res.exceptional] == [("E1", 2, 1, -1, (1, 1))]
    assert res.neighbours("E1") == ["C1", "C2"]
    assert same_resolution(res, node())
    assert spectrum(res) == Spectrum({Fraction(1): 1})
    assert milnor_number(res) == 1
    assert delta_invariant(res) == 1

def test_non_reduced_monomial() -> None:
    # x^2 y
    res = from_newton([(2, 1)])
    assert [(c.m, c.self_int) for c in res.exceptional] == [(3, -1)]
    assert sorted(c.m for c in res.non_exceptional) == [1, 2]
    assert not validate(res)

@pytest.mark.parametrize("points,expected",
    [
        ([(2, 0), (0, 3)], [(0, 3), (2, 0)]),
        ([(0, 3), (1, 1), (3, 0), (5, 5)], [(0, 3), (1, 1), (3, 0)]),
        ([(0, 4), (2, 2), (4, 0)], [(0, 4), (4, 0)]),
        ([(0, 5), (0, 3), (2, 0), (3, 0)], [(0, 3), (2, 0)]),
        ([(1, 0)], [(1, 0)]),
    ]
)
def test_newton_boundary(points, expected) -> None:
    assert newton_boundary(points) == expected

def test_lower_convex_hull_drops_interior_points() -> None:
    assert lower_convex_hull([(0, 2), (1, 1), (2, 0), (1, 2)]) == [(0, 2), (2, 0)]

@pytest.mark.parametrize("start,end,normal,length",
    [
        ((0, 3), (2, 0), (3, 2), 1),
        ((0, 2), (2, 0), (1, 1), 2),
        ((0, 4), (2, 0), (2, 1), 2),
    ]
)
def test_edge_normal(start, end, normal, length: int) -> None:
    assert edge_normal(start, end) == (normal, length)

@pytest.mark.parametrize("support",
    [
        [],
        [(0, 0), (2, 0)],
        [(-1, 2)],
        [(1, 2, 3)],
    ]
)
def test_bad_support(support) -> None:
    with pytest.raises(NewtonPolygonError):
        from_newton(support)

def test_degenerate_germs_are_refused() -> None:
    with pytest.raises(NewtonPolygonError):
        from_newton([(2, 0), (0, 3)], assume_nondegenerate=False)

def test_document() -> None:
    assert from_newton_document({"newton": {"support": [[2, 0], [0, 3]]}}) == from_newton([(2, 0), (0, 3)])
    with pytest.raises(DocumentError):
        from_newton_document({"support": "x^2 + y^3"})
    with pytest.raises(DocumentError):
        from_newton_document({"support": [[2, 0]], "assume_nondegenerate": "yes"})

@pytest.mark.parametrize("a,b", coprime_pairs())
def test_toric_and_blowup_resolutions_agree(a: int, b: int) -> None:
    toric = from_newton([(a, 0), (0, b)])
    blowup = from_proximity_document(quasi_homogeneous_proximity(a, b))
    assert sorted((c.m, c.a) for c in toric.components) == sorted((c.m, c.a) for c in blowup.components)
    assert same_resolution(toric, blowup)

def test_two_edges() -> None:
    # two branches along the first edge, one along the second
    res = from_newton([(0, 3), (2, 1), (5, 0)])
    assert not validate(res)
    assert res.branches == 3
    assert [(c.ray, c.m, c.self_int) for c in res.exceptional] == [((1, 1), 3, -2), ((1, 2), 4, -2), ((1, 3), 5, -1)]
