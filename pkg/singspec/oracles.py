"""Closed forms for the quasi-homogeneous and monomial families, used as ground
truth. Nothing in here calls the resolution machinery it is checked against."""

import math
from fractions import Fraction
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple, Union

from .rationals import as_rational
from .resolution import ResolutionData
from .spectrum import Spectrum

class OracleMismatch(RuntimeError):
    pass


class RootSet:
    """The distinct roots of a Bernstein-Sato polynomial, all negative."""

    def __init__(self, roots: Iterable[Fraction]):
        values = frozenset(as_rational(r) for r in roots)
        for root in values:
            if root >= 0:
                raise ValueError(f"b-function roots are negative, got {root}")
        self._roots = values

    def __contains__(self, value) -> bool:
        return as_rational(value) in self._roots

    def __iter__(self) -> Iterator[Fraction]:
        return iter(sorted(self._roots, reverse=True))

    def __len__(self) -> int:
        return len(self._roots)

    def __eq__(self, other) -> bool:
        if isinstance(other, RootSet):
            return self._roots == other._roots
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._roots)

    def __repr__(self) -> str:
        return f"RootSet({sorted(self._roots)})"


def _check_exponents(a: int, b: int) -> None:
    if a < 2 or b < 2:
        raise ValueError(f"x^{a} + y^{b} needs both exponents at least 2")

def _weights(a: int, b: int) -> Iterator[Fraction]:
    for i in range(1, a):
        for j in range(1, b):
            yield Fraction(i, a) + Fraction(j, b)

def qh_spectrum(a: int, b: int) -> Spectrum:
    _check_exponents(a, b)
    terms: dict = {}
    for weight in _weights(a, b):
        terms[weight] = terms.get(weight, 0) + 1
    return Spectrum(terms)

def qh_bfunction_roots(a: int, b: int) -> RootSet:
    _check_exponents(a, b)
    return RootSet([-w for w in _weights(a, b)] + [Fraction(-1)])

def nc_bfunction_roots(m: Sequence[int]) -> RootSet:
    if not any(mi > 0 for mi in m):
        raise ValueError("At least one multiplicity must be positive")
    return RootSet(Fraction(-j, mi) for mi in m if mi > 0 for j in range(1, mi + 1))


class MilnorDelta(NamedTuple):
    mu: int
    delta: int
    branches: int

def milnor_delta(source: Union[Tuple[int, int], ResolutionData]) -> MilnorDelta:
    """mu, delta and the number of branches, tied together by
    mu = 2 delta - r + 1. Either x^a + y^b for coprime (a, b), or a
    resolution built from infinitely near points, which records delta."""
    if isinstance(source, ResolutionData):
        if source.delta is None:
            raise ValueError("delta is only known for resolutions built from proximity data")
        branches = source.branches
        return MilnorDelta(2 * source.delta - branches + 1, source.delta, branches)
    a, b = source
    _check_exponents(a, b)
    if math.gcd(a, b) != 1:
        raise ValueError(f"x^{a} + y^{b} is irreducible only for coprime exponents")
    mu = (a - 1) * (b - 1)
    return MilnorDelta(mu, mu // 2, 1)

def cross_check_milnor_delta(a: int, b: int, res: ResolutionData) -> MilnorDelta:
    expected = milnor_delta((a, b))
    found = milnor_delta(res)
    if expected != found:
        raise OracleMismatch(f"x^{a} + y^{b} has {expected}, but its proximity data gives {found}")
    return expected

def elsv_check(jumps: Iterable[Fraction], roots: RootSet) -> List[Fraction]:
    """The jumping numbers whose negatives are not b-function roots; empty
    when the containment holds."""
    return sorted(as_rational(jump) for jump in jumps if -as_rational(jump) not in roots)
