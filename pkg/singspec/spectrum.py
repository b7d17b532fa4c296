from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from .rationals import as_rational, format_rational, parse_rational

class Spectrum:
    """A fractional polynomial sum n_alpha t^alpha with positive integer
    multiplicities, kept sparse: exponents with n_alpha = 0 are never stored."""

    def __init__(self, multiplicities: Union[Mapping[Fraction, int], None] = None):
        self._terms: Dict[Fraction, int] = {}
        for exponent, count in (multiplicities or {}).items():
            if count < 0:
                raise ValueError(f"Spectrum multiplicity at {exponent} is negative: {count}")
            if count:
                key = as_rational(exponent)
                self._terms[key] = self._terms.get(key, 0) + count

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[Union[str, int]]]) -> "Spectrum":
        terms: Dict[Fraction, int] = {}
        for exponent, count in pairs:
            key = parse_rational(exponent) if isinstance(exponent, str) else as_rational(exponent)
            terms[key] = terms.get(key, 0) + int(count)
        return cls(terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{format_rational(k)}: {v}" for k, v in self.items())
        return f"Spectrum({{{inner}}})"

    def __getitem__(self, exponent: Fraction) -> int:
        return self._terms.get(as_rational(exponent), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(sorted(self._terms))

    def __add__(self, other: "Spectrum") -> "Spectrum":
        if not isinstance(other, Spectrum):
            return NotImplemented
        merged = dict(self._terms)
        for exponent, count in other._terms.items():
            merged[exponent] = merged.get(exponent, 0) + count
        return Spectrum(merged)

    def __mul__(self, scalar: int) -> "Spectrum":
        if isinstance(scalar, bool) or not isinstance(scalar, int):
            return NotImplemented
        if scalar < 0:
            raise ValueError("Spectra can only be scaled by nonnegative integers")
        return Spectrum({k: v * scalar for k, v in self._terms.items()})

    __rmul__ = __mul__

    def items(self) -> List[Tuple[Fraction, int]]:
        return sorted(self._terms.items())

    def support(self) -> List[Fraction]:
        return sorted(self._terms)

    def total(self) -> int:
        return sum(self._terms.values())

    def is_symmetric(self, n: int = 2) -> bool:
        """n_alpha = n_(n - alpha) for every alpha."""
        return all(self[n - exponent] == count for exponent, count in self._terms.items())

    def within(self, lo: Fraction, hi: Fraction) -> bool:
        """Whether every exponent lies strictly between lo and hi."""
        return all(lo < exponent < hi for exponent in self._terms)

    def as_pairs(self) -> List[List[Union[str, int]]]:
        return [[format_rational(k), v] for k, v in self.items()]
