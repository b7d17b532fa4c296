"""The normal crossing local model f = x_1^m_1 ... x_n^m_n.

Here the V-filtration induced on O and the multiplier ideals are monomial and
can be written down directly; this is the model every other computation in
the package reduces to."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from .monomial import Exponent, MonomialIdeal
from .rationals import as_rational, ceil_times_minus_one, floor_times, is_integral, lcm_of

logger = logging.getLogger(__name__)

class InvalidModel(ValueError):
    pass

class InexactPsiPieces(RuntimeError):
    pass


@dataclass(frozen=True)
class NCModel:
    n: int
    m: Tuple[int, ...]

    def __init__(self, m: Sequence[int]):
        multiplicities = tuple(int(x) for x in m)
        if len(multiplicities) < 1:
            raise InvalidModel("Normal crossing model needs at least one coordinate")
        if any(x < 0 for x in multiplicities):
            raise InvalidModel(f"Multiplicities must be nonnegative, got {multiplicities}")
        if not any(x > 0 for x in multiplicities):
            raise InvalidModel("At least one multiplicity must be positive")
        object.__setattr__(self, "n", len(multiplicities))
        object.__setattr__(self, "m", multiplicities)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.m, dtype=np.int64)

    @property
    def support(self) -> FrozenSet[int]:
        """Components of D, numbered from 1 like the coordinates."""
        return frozenset(i + 1 for i, x in enumerate(self.m) if x > 0)

    @property
    def lcm(self) -> int:
        return lcm_of(self.m)

    def _check_exponent(self, nu: Sequence[int]) -> np.ndarray:
        if len(nu) != self.n:
            raise InvalidModel(f"Exponent {tuple(nu)} does not have {self.n} entries")
        vector = np.array(nu, dtype=np.int64)
        if (vector < 0).any():
            raise InvalidModel(f"Exponent {tuple(nu)} has negative entries")
        return vector


@dataclass(frozen=True)
class PsiPieceQuery:
    alpha: Fraction
    mu: Tuple[Fraction, ...]
    I: FrozenSet[int] # pylint: disable=C0103
    J: FrozenSet[int] # pylint: disable=C0103
    J_prime: FrozenSet[int] # pylint: disable=C0103

    def validate(self, model: NCModel) -> None:
        if not 0 < self.alpha <= 1:
            raise InvalidModel(f"alpha must lie in (0,1], got {self.alpha}")
        if len(self.mu) != model.n:
            raise InvalidModel(f"mu must have {model.n} entries")
        if not all(0 < x <= 1 for x in self.mu):
            raise InvalidModel("mu must lie in (0,1]^n; reduce it mod Z first")
        support = model.support
        if not self.I <= support:
            raise InvalidModel(f"I = {sorted(self.I)} must be a set of components of D")
        if self.J & self.J_prime:
            raise InvalidModel("J and J' must be disjoint")
        if (self.J | self.J_prime) != support:
            raise InvalidModel("J and J' must together cover every component of D")

    @classmethod
    def make(cls, alpha, mu, I, J, J_prime) -> "PsiPieceQuery": # pylint: disable=C0103
        return cls(
            as_rational(alpha),
            tuple(as_rational(x) for x in mu),
            frozenset(I),
            frozenset(J),
            frozenset(J_prime),
        )


def monomial_v_order(model: NCModel, nu: Sequence[int]) -> Fraction:
    """The alpha with x^nu in V^alpha O but not in V^>alpha O."""
    vector = model._check_exponent(nu)
    return min(Fraction(int(vector[i]) + 1, mi) for i, mi in enumerate(model.m) if mi > 0)

def v_generator(model: NCModel, alpha: Fraction) -> Exponent:
    """V^alpha O is generated by x^nu with nu_i + 1 >= m_i alpha, and the least
    such nu is nu_i = max(ceil(m_i alpha) - 1, 0)."""
    shifted = ceil_times_minus_one(model.vector, as_rational(alpha))
    return tuple(int(x) for x in np.maximum(shifted, 0))

def multiplier_nc(model: NCModel, alpha: Fraction) -> MonomialIdeal:
    """J(alpha D) for the normal crossing divisor, generated by x^[alpha m]."""
    floors = floor_times(model.vector, as_rational(alpha))
    return MonomialIdeal.principal(tuple(int(x) for x in np.maximum(floors, 0)))

def jumping_nc(model: NCModel, bound: Fraction) -> List[Fraction]:
    bound = as_rational(bound)
    if bound <= 0:
        raise InvalidModel(f"Jumping bound must be positive, got {bound}")
    jumps = set()
    for mi in model.m:
        if mi == 0:
            continue
        j = 1
        while Fraction(j, mi) <= bound:
            jumps.add(Fraction(j, mi))
            j += 1
    return sorted(jumps)

def next_jump(model: NCModel, alpha: Fraction) -> Fraction:
    """The smallest jumping number strictly greater than alpha (alpha >= 0)."""
    alpha = as_rational(alpha)
    return min(Fraction(max(floor_times(mi, alpha), 0) + 1, mi) for mi in model.m if mi > 0)

def v_bf_generators(model: NCModel, alpha: Fraction) -> List[Tuple[Exponent, int]]:
    """Generators V^(alpha+j) O (x) d_t^j of V^alpha B_f over D_X, 0 <= j <= max(1 - alpha, 0)."""
    alpha = as_rational(alpha)
    top = int(floor_times(1, max(1 - alpha, Fraction(0))))
    return [(v_generator(model, alpha + j), j) for j in range(top + 1)]

def d_alpha_nc(model: NCModel, alpha: Fraction) -> FrozenSet[int]:
    alpha = as_rational(alpha)
    if not 0 < alpha <= 1:
        raise InvalidModel(f"D(alpha) is only defined for alpha in (0,1], got {alpha}")
    return frozenset(i + 1 for i, mi in enumerate(model.m) if mi > 0 and is_integral(mi * alpha))

def _eigenvalue_condition(model: NCModel, query: PsiPieceQuery) -> bool:
    return all(is_integral(query.mu[i - 1] + model.m[i - 1] * query.alpha) for i in model.support)

def psi_piece_dim(model: NCModel, query: PsiPieceQuery) -> int:
    query.validate(model)
    if not _eigenvalue_condition(model, query):
        return 0
    return len(query.I)

def psi_localized_dims(model: NCModel, query: PsiPieceQuery) -> Tuple[int, int, int]:
    """Dimensions of the I-pieces of psi_f O, of its extension by zero across
    E (the J components), and of its direct image across E' (the J' ones)."""
    query.validate(model)
    if not _eigenvalue_condition(model, query):
        return (0, 0, 0)
    full = len(query.I)
    shriek = full - len(query.I & query.J)
    star = len(query.I - query.J_prime)
    if shriek + star != full:
        raise InexactPsiPieces(f"psi pieces of {query} are not exact: {shriek} + {star} != {full}")
    logger.debug("psi pieces at alpha %s, I %s: %d = %d + %d", query.alpha, sorted(query.I), full, shriek, star)
    return (full, shriek, star)
