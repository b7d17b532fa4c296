import pytest

from singspec.monomial import MonomialIdeal

def test_generators_are_minimalised() -> None:
    ideal = MonomialIdeal(2, [(1, 0), (2, 3), (0, 2), (1, 1)])
    assert ideal.generators == ((0, 2), (1, 0))

def test_duplicates_collapse() -> None:
    ideal = MonomialIdeal(2, [(1, 1), (1, 1)])
    assert ideal.generators == ((1, 1),)

@pytest.mark.parametrize("generators,exponent,expected",
    [
        ([(1, 0), (0, 1)], (0, 0), False),
        ([(1, 0), (0, 1)], (0, 3), True),
        ([(2, 1)], (2, 0), False),
        ([(2, 1)], (3, 4), True),
        ([], (5, 5), False),
        ([(0, 0)], (0, 0), True),
    ]
)
def test_contains(generators, exponent, expected: bool) -> None:
    assert MonomialIdeal(2, generators).contains(exponent) == expected

@pytest.mark.parametrize("lhs,rhs,is_smaller,is_equal",
    [
        (MonomialIdeal.principal((1, 1)), MonomialIdeal.principal((1, 1)), False, True),
        (MonomialIdeal.principal((1, 2)), MonomialIdeal.principal((1, 1)), True, False),
        (MonomialIdeal.principal((2, 0)), MonomialIdeal.principal((0, 1)), False, False),
        (MonomialIdeal(2, [(1, 0), (0, 1)]), MonomialIdeal.unit(2), True, False),
        (MonomialIdeal.zero(2), MonomialIdeal.principal((4, 4)), True, False),
    ]
)
def test_inclusion_operators(lhs, rhs, is_smaller: bool, is_equal: bool) -> None:
    assert (lhs == rhs) == is_equal
    assert (lhs < rhs) == is_smaller
    assert (rhs > lhs) == is_smaller
    assert (lhs <= rhs) == (is_equal or is_smaller)
    assert (rhs >= lhs) == (is_equal or is_smaller)

def test_find_intersection_empty_list() -> None:
    with pytest.raises(ValueError):
        MonomialIdeal.find_intersection([])

def test_find_intersection() -> None:
    maximal = MonomialIdeal(2, [(1, 0), (0, 1)])
    ideal = MonomialIdeal(2, [(2, 0), (0, 3)])
    assert MonomialIdeal.find_intersection([maximal]) == maximal
    assert MonomialIdeal.find_intersection([maximal, ideal]) == ideal
    assert MonomialIdeal.find_intersection([
        MonomialIdeal.principal((1, 0)), MonomialIdeal.principal((0, 1))
    ]) == MonomialIdeal.principal((1, 1))

def test_product() -> None:
    maximal = MonomialIdeal(2, [(1, 0), (0, 1)])
    assert maximal.product(maximal) == MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
    assert maximal.product(MonomialIdeal.unit(2)) == maximal
    assert maximal.product(MonomialIdeal.zero(2)).is_zero

def test_mismatched_variable_counts() -> None:
    with pytest.raises(ValueError):
        _ = MonomialIdeal.unit(2) <= MonomialIdeal.unit(3)

def test_principal_generator() -> None:
    assert MonomialIdeal.principal((1, 2, 0)).generator == (1, 2, 0)
    with pytest.raises(ValueError):
        _ = MonomialIdeal(2, [(1, 0), (0, 1)]).generator

def test_str() -> None:
    assert str(MonomialIdeal(2, [(1, 0), (0, 2)])) == "(x2^2, x1)"
    assert str(MonomialIdeal.unit(2)) == "(1)"
    assert str(MonomialIdeal.zero(2)) == "(0)"
    assert str(MonomialIdeal.principal((1, 1))) == "(x1*x2)"
