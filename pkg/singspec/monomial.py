from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

Exponent = Tuple[int, ...]

def _minimalise(generators: Iterable[Sequence[int]], n: int) -> Tuple[Exponent, ...]:
    vectors = sorted({tuple(int(x) for x in g) for g in generators})
    for vector in vectors:
        if len(vector) != n:
            raise ValueError(f"Exponent {vector} does not have {n} entries")
        if any(x < 0 for x in vector):
            raise ValueError(f"Exponent {vector} has negative entries")
    if not vectors:
        return ()
    stacked = np.array(vectors, dtype=np.int64).reshape(len(vectors), n)
    keep = []
    for index, vector in enumerate(stacked):
        # a generator is redundant if some other generator divides it
        dominated = np.all(stacked <= vector, axis=1)
        dominated[index] = False
        if not dominated.any():
            keep.append(vectors[index])
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal of C{x_1..x_n} generated by monomials, held as its minimal
    generating set of exponent vectors. No generators is the zero ideal, and
    the zero vector alone is the unit ideal."""
    n: int
    generators: Tuple[Exponent, ...]

    def __init__(self, n: int, generators: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise ValueError("Monomial ideals need at least one variable")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", _minimalise(generators, n))

    @classmethod
    def principal(cls, exponent: Sequence[int]) -> "MonomialIdeal":
        return cls(len(exponent), [exponent])

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, [])

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.n,)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def generator(self) -> Exponent:
        if len(self.generators) != 1:
            raise ValueError("Ideal is not principal")
        return self.generators[0]

    def contains(self, exponent: Sequence[int]) -> bool:
        if len(exponent) != self.n:
            raise ValueError(f"Exponent {tuple(exponent)} does not have {self.n} entries")
        return any(all(g <= e for g, e in zip(generator, exponent)) for generator in self.generators)

    def _check_compatible(self, other) -> None:
        if not isinstance(other, MonomialIdeal):
            raise TypeError("Can only compare with another monomial ideal")
        if other.n != self.n:
            raise ValueError("Monomial ideals are in different numbers of variables")

    def __le__(self, other) -> bool:
        self._check_compatible(other)
        return all(other.contains(g) for g in self.generators)

    def __ge__(self, other) -> bool:
        return other <= self

    def __lt__(self, other) -> bool:
        return (self <= other) and (self != other)

    def __gt__(self, other) -> bool:
        return other < self

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_compatible(other)
        return MonomialIdeal(self.n, [
            tuple(np.add(g, h)) for g in self.generators for h in other.generators
        ])

    @staticmethod
    def find_intersection(ideals: List["MonomialIdeal"]) -> "MonomialIdeal":
        if not ideals:
            raise ValueError("Expected list of ideals")
        result = ideals[0]
        for ideal in ideals[1:]:
            result._check_compatible(ideal)
            # lcm of each pair of generators
            result = MonomialIdeal(result.n, [
                tuple(np.maximum(g, h)) for g in result.generators for h in ideal.generators
            ])
        return result

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        if self.is_unit:
            return "(1)"
        names = [f"x{i + 1}" for i in range(self.n)]
        terms = []
        for generator in self.generators:
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, generator) if e > 0]
            terms.append("*".join(factors))
        return "(" + ", ".join(terms) + ")"
