import pytest

from helpers import a3, coprime_pairs, cusp
from singspec.exc_geometry import spectrum
from singspec.resolution import from_newton

@pytest.mark.parametrize("parallelism", [None, 1, 2, 4])
def test_cusp_spectrum_any_parallelism(parallelism) -> None:
    assert spectrum(cusp(), parallelism) == spectrum(cusp())

@pytest.mark.parametrize("a,b", [pair for pair in coprime_pairs() if pair[0] * pair[1] > 20])
def test_parallel_spectrum_matches_serial(a: int, b: int) -> None:
    res = from_newton([(a, 0), (0, b)])
    assert spectrum(res, parallelism=3) == spectrum(res)

def test_parallel_spectrum_with_two_branches() -> None:
    res = a3()
    assert spectrum(res, parallelism=2) == spectrum(res, parallelism=1)
