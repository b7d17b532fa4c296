"""Toric resolutions of Newton-nondegenerate germs f(x, y), read off the
support of f alone."""

import logging
import math
from typing import Any, Iterable, List, Mapping, Sequence, Tuple

from .base import Component, DocumentError, Ray, ResolutionData, branch_ids, check_valid

logger = logging.getLogger(__name__)

Point = Tuple[int, int]

class NewtonPolygonError(ValueError):
    pass


def cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

def _determinant(u: Ray, v: Ray) -> int:
    return u[0] * v[1] - u[1] * v[0]

def lower_convex_hull(points: Iterable[Point]) -> List[Point]:
    pts = sorted(set(points))
    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    return lower

def newton_boundary(support: Iterable[Point]) -> List[Point]:
    """Vertices of the compact faces of the Newton polygon, from the vertex
    nearest the y axis down to the one nearest the x axis."""
    hull = lower_convex_hull(support)
    lowest = min(p[1] for p in hull)
    for index, point in enumerate(hull):
        if point[1] == lowest:
            return hull[:index + 1]
    raise NewtonPolygonError("Newton polygon has no lowest vertex") # pragma: no cover

def edge_normal(start: Point, end: Point) -> Tuple[Ray, int]:
    """Primitive inward normal of a compact edge and its lattice length."""
    di = end[0] - start[0]
    dj = start[1] - end[1]
    length = math.gcd(di, dj)
    return (dj // length, di // length), length

def _insert_ray(fan: List[Ray], target: Ray, inserted: List[Ray]) -> None:
    # Stern-Brocot descent: keep adding the sum of the two rays bounding the
    # cone that contains the target until the target itself is a ray
    while target not in fan:
        for index in range(len(fan) - 1):
            left, right = fan[index], fan[index + 1]
            if _determinant(left, target) > 0 and _determinant(target, right) > 0:
                mediant = (left[0] + right[0], left[1] + right[1])
                fan.insert(index + 1, mediant)
                inserted.append(mediant)
                logger.debug("inserted ray %s while refining towards %s", mediant, target)
                break
        else:
            raise NewtonPolygonError(f"Ray {target} lies outside the positive quadrant")

def _self_intersection(previous: Ray, ray: Ray, following: Ray) -> int:
    total = (previous[0] + following[0], previous[1] + following[1])
    axis = 0 if ray[0] else 1
    return -(total[axis] // ray[axis])

def _check_support(support: Iterable[Sequence[int]]) -> List[Point]:
    points = []
    for entry in support:
        if len(entry) != 2 or any(isinstance(x, bool) or not isinstance(x, int) for x in entry):
            raise NewtonPolygonError(f"Support point {list(entry)} is not a pair of integers")
        i, j = entry
        if i < 0 or j < 0:
            raise NewtonPolygonError(f"Support point ({i}, {j}) has a negative exponent")
        if (i, j) == (0, 0):
            raise NewtonPolygonError("f has a constant term, so does not vanish at the origin")
        points.append((i, j))
    if not points:
        raise NewtonPolygonError("Support is empty")
    return points

def from_newton(support: Iterable[Sequence[int]], assume_nondegenerate: bool = True) -> ResolutionData:
    if not assume_nondegenerate:
        raise NewtonPolygonError("The toric resolution is only correct for Newton-nondegenerate germs")
    points = _check_support(support)

    fan: List[Ray] = [(1, 0), (0, 1)]
    inserted: List[Ray] = []
    branches_on = {}
    boundary = newton_boundary(points)
    for start, end in zip(boundary, boundary[1:]):
        normal, length = edge_normal(start, end)
        _insert_ray(fan, normal, inserted)
        branches_on[normal] = length
    if not inserted and all(min(p[axis] for p in points) > 0 for axis in (0, 1)):
        # a monomial x^i y^j: its two axes still meet, so blow up the origin once
        _insert_ray(fan, (1, 1), inserted)

    def order(ray: Ray) -> int:
        return min(ray[0] * i + ray[1] * j for i, j in points)

    names = {ray: f"E{index + 1}" for index, ray in enumerate(inserted)}
    components = []
    for ray in inserted:
        position = fan.index(ray)
        components.append(Component.exceptional(
            names[ray],
            order(ray),
            ray[0] + ray[1] - 1,
            _self_intersection(fan[position - 1], ray, fan[position + 1]),
            ray,
        ))

    # strict transforms, in fan order: the x = 0 axis, the branches through
    # each exceptional curve, then the y = 0 axis
    strict: List[Tuple[Ray, int, bool]] = []
    for ray in fan:
        if ray in names:
            strict.extend((ray, 1, False) for _ in range(branches_on.get(ray, 0)))
        elif order(ray) > 0:
            strict.append((ray, order(ray), True))

    edges = [
        (names[left], names[right])
        for left, right in zip(fan, fan[1:])
        if left in names and right in names
    ]
    axis_names = {}
    for name, (ray, m, is_axis) in zip(branch_ids(len(strict)), strict):
        components.append(Component.branch(name, m, ray if is_axis else None))
        if is_axis:
            axis_names[ray] = name
        else:
            edges.append((names[ray], name))
    for left, right in zip(fan, fan[1:]):
        if left in axis_names and right in names:
            edges.append((axis_names[left], names[right]))
        elif left in names and right in axis_names:
            edges.append((names[left], axis_names[right]))

    logger.debug("toric build: fan %s, %d exceptional curves", fan, len(inserted))
    return check_valid(ResolutionData.from_parts(components, edges))

def from_newton_document(description: Mapping[str, Any]) -> ResolutionData:
    if not isinstance(description, Mapping):
        raise DocumentError("Expected a newton object")
    if "newton" in description:
        description = description["newton"]
        if not isinstance(description, Mapping):
            raise DocumentError("Expected a newton object")
    support = description.get("support")
    if not isinstance(support, list) or not all(isinstance(p, list) for p in support):
        raise DocumentError("A newton document needs a list of [i, j] support points")
    assume = description.get("assume_nondegenerate", True)
    if not isinstance(assume, bool):
        raise DocumentError("assume_nondegenerate must be true or false")
    return from_newton(support, assume)
