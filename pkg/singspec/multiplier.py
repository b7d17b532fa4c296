import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Tuple

from .exc_geometry import InconsistentGeometry, euler_char, h0_h1, k_sheaf
from .monomial import MonomialIdeal
from .rationals import as_rational, floor_times
from .resolution import ResolutionData, delta_invariant

logger = logging.getLogger(__name__)

class NonReducedDivisor(ValueError):
    def __init__(self, components):
        super().__init__(f"Divisor is not reduced along {', '.join(components)}")
        self.components = components


@dataclass(frozen=True)
class ValuationConditions:
    """The germs g with ord_{D'_i}(pi^* g) >= c_i for every component; any
    component not listed has threshold 0."""
    thresholds: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for name, value in self.thresholds.items():
            if value < 0:
                raise ValueError(f"Threshold on {name} is negative: {value}")
        object.__setattr__(self, "thresholds", dict(self.thresholds))

    def __getitem__(self, name: str) -> int:
        return self.thresholds.get(name, 0)

    def __le__(self, other: "ValuationConditions") -> bool:
        names = set(self.thresholds) | set(other.thresholds)
        return all(self[name] <= other[name] for name in names)

    def __hash__(self) -> int:
        return hash(frozenset(self.thresholds.items()))

    @property
    def is_trivial(self) -> bool:
        return all(value == 0 for value in self.thresholds.values())

    def as_dict(self) -> Dict[str, int]:
        return dict(self.thresholds)


def multiplier_conditions(res: ResolutionData, alpha: Fraction) -> ValuationConditions:
    alpha = as_rational(alpha)
    return ValuationConditions({
        c.id: max(int(floor_times(c.m, alpha)) - c.a, 0) for c in res.components
    })

def jumping_candidates(res: ResolutionData, lo: Fraction, hi: Fraction) -> List[Fraction]:
    return res.candidate_exponents(lo, hi)

def graded_dim(res: ResolutionData, alpha: Fraction) -> int:
    """dim G(D, x, alpha), the Euler characteristic of K_alpha on E(alpha),
    which has to agree with its space of sections."""
    cfg = k_sheaf(res, alpha, primed=False)
    chi = euler_char(cfg)
    _, h1 = h0_h1(cfg)
    if h1 != 0:
        raise InconsistentGeometry(f"h1(K_{alpha}) = {h1}, expected 0")
    if chi < 0:
        raise InconsistentGeometry(f"chi(K_{alpha}) = {chi} is negative")
    return chi

def punctual_jumping_numbers(res: ResolutionData) -> List[Tuple[Fraction, int]]:
    found = []
    for alpha in jumping_candidates(res, Fraction(0), Fraction(1)):
        dim = graded_dim(res, alpha)
        if dim > 0:
            found.append((alpha, dim))
    return found

def lct(res: ResolutionData) -> Fraction:
    return min(Fraction(c.a + 1, c.m) for c in res.components)

def skoda_extend(jumps: Iterable[Fraction], bound: Fraction) -> List[Fraction]:
    """Jumping numbers in (0,1] carried up to the bound by integer shifts."""
    bound = as_rational(bound)
    extended = set()
    for jump in jumps:
        jump = as_rational(jump)
        if not 0 < jump <= 1:
            raise ValueError(f"Expected jumping numbers in (0,1], got {jump}")
        while jump <= bound:
            extended.add(jump)
            jump += 1
    return sorted(extended)

def _require_reduced(res: ResolutionData) -> None:
    fat = [c.id for c in res.non_exceptional if c.m != 1]
    if fat:
        raise NonReducedDivisor(fat)

def adjoint_conditions(res: ResolutionData) -> ValuationConditions:
    _require_reduced(res)
    return ValuationConditions({
        c.id: max(c.m - c.a, 0) if c.is_exceptional else 0 for c in res.components
    })


class OmegaQuotient(NamedTuple):
    dims: Dict[Fraction, int]
    bound_at_one: int
    delta: int

    @property
    def sandwich(self) -> Tuple[int, int, int]:
        lower = sum(self.dims.values())
        return (lower, self.delta, lower + self.bound_at_one)

    @property
    def sandwich_holds(self) -> bool:
        lower, delta, upper = self.sandwich
        return lower <= delta <= upper

def omega_quotient_dims(res: ResolutionData) -> OmegaQuotient:
    """Graded pieces of omega_D / omega~_D for alpha in (0,1), and the bound
    on the piece at 1, of which only the upper bound is known."""
    _require_reduced(res)
    dims = {}
    bound = 0
    for alpha, dim in punctual_jumping_numbers(res):
        if alpha < 1:
            dims[alpha] = dim
        else:
            bound = dim
    result = OmegaQuotient(dims, bound, delta_invariant(res))
    if not result.sandwich_holds:
        logger.warning("delta = %d is outside the bounds %s", result.delta, result.sandwich)
    return result

def _toric_rays(res: ResolutionData, alpha: Fraction) -> List[Tuple[Tuple[int, int], int]]:
    rays = []
    for c in res.components:
        if c.ray is not None:
            rays.append((c.ray, int(floor_times(c.m, alpha)) - c.a))
        elif c.is_exceptional:
            raise ValueError(f"{c.id} is not a toric divisor, monomial generators need a toric resolution")
        elif floor_times(c.m, alpha) > 0:
            raise ValueError(f"The condition along {c.id} is not monomial at alpha = {alpha}")
    return rays

def monomial_multiplier(res: ResolutionData, alpha: Fraction) -> MonomialIdeal:
    """Monomial generators of J(alpha D) for a toric resolution: x^u lies in
    it iff <rho, u> >= [alpha m_rho] - a_rho on every ray of the fan."""
    alpha = as_rational(alpha)
    rays = _toric_rays(res, alpha)
    widest = max([math.ceil(Fraction(c, p)) for (p, _), c in rays if p > 0 and c > 0], default=0)

    generators = []
    for ux in range(widest + 1):
        uy, feasible = 0, True
        for (p, q), c in rays:
            needed = c - p * ux
            if needed <= 0:
                continue
            if q == 0:
                feasible = False
                break
            uy = max(uy, -(-needed // q))
        if feasible:
            generators.append((ux, uy))
    return MonomialIdeal(2, generators)

def denominators_divide_lcm(res: ResolutionData, jumps: Iterable[Fraction]) -> bool:
    lcm = res.lcm
    return all(lcm % as_rational(jump).denominator == 0 for jump in jumps)
