"""The sheaves K_alpha and K'_alpha on the exceptional fibre of a plane curve
germ's resolution, and the spectrum they assemble into.

Every configuration here is a tree of smooth rational curves meeting
transversally, with a line bundle given by its degree on each curve. That is
enough to get Euler characteristics from Riemann-Roch and global sections
from exact linear algebra."""

import logging
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix

from .rationals import as_rational, ceil_times_minus_one, is_integral
from .resolution import ResolutionData
from .spectrum import Spectrum

logger = logging.getLogger(__name__)

# Node positions on each component start at these offsets; h0 must not depend
# on which one is used.
NODE_POSITION_OFFSETS = (0, 10)

class InconsistentGeometry(RuntimeError):
    pass


@dataclass(frozen=True)
class CurveConfig:
    components: Tuple[Tuple[str, int], ...]
    nodes: FrozenSet[FrozenSet[str]]

    def __post_init__(self):
        names = {name for name, _ in self.components}
        if len(names) != len(self.components):
            raise ValueError("Curve configuration repeats a component")
        for node in self.nodes:
            if len(node) != 2 or not node <= names:
                raise ValueError(f"Node {sorted(node)} does not join two listed components")

    @property
    def degrees(self) -> Dict[str, int]:
        return dict(self.components)

    @property
    def is_empty(self) -> bool:
        return not self.components

    def sorted_nodes(self) -> List[Tuple[str, str]]:
        return sorted(tuple(sorted(node)) for node in self.nodes) # type: ignore


class AlphaStrata(NamedTuple):
    e_set: FrozenSet[str]
    e_prime_set: FrozenSet[str]
    # each point is (exceptional curve it lies on, strict transform through it)
    e_double_prime: Tuple[Tuple[str, str], ...]


def _check_alpha(alpha: Fraction) -> Fraction:
    alpha = as_rational(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must lie in (0,1], got {alpha}")
    return alpha

def e_alpha(res: ResolutionData, alpha: Fraction) -> AlphaStrata:
    alpha = _check_alpha(alpha)
    e_set = frozenset(c.id for c in res.exceptional if is_integral(c.m * alpha))
    e_prime_set = frozenset(c.id for c in res.non_exceptional if is_integral(c.m * alpha))
    points = sorted(
        (exc, other)
        for exc in e_set
        for other in res.neighbours(exc)
        if other in e_prime_set
    )
    return AlphaStrata(e_set, e_prime_set, tuple(points))

def k_sheaf(res: ResolutionData, alpha: Fraction, primed: bool = False) -> CurveConfig:
    """K_alpha (or K'_alpha when primed) restricted to the curves of E(alpha):
    the relative canonical bundle twisted down by [(alpha - eps) m_i] D'_i,
    and for K' also by the points where E(alpha) meets E'(alpha)."""
    alpha = _check_alpha(alpha)
    strata = e_alpha(res, alpha)
    curves = [c.id for c in res.exceptional if c.id in strata.e_set]
    if not curves:
        return CurveConfig((), frozenset())

    everything = res.ids
    coefficients = ceil_times_minus_one(np.array([res.component(x).m for x in everything], dtype=np.int64), alpha)
    matrix = res.intersection_matrix(curves, everything)
    self_ints = np.array([res.component(x).self_int for x in curves], dtype=np.int64)
    degrees = (-2 - self_ints) - matrix @ coefficients
    if primed:
        degrees -= np.array([sum(1 for exc, _ in strata.e_double_prime if exc == x) for x in curves], dtype=np.int64)

    nodes = frozenset(key for key in res.edges if key <= strata.e_set)
    config = CurveConfig(tuple((x, int(d)) for x, d in zip(curves, degrees)), nodes)
    logger.debug("K%s_%s degrees %s", "'" if primed else "", alpha, config.degrees)
    return config

def euler_char(cfg: CurveConfig) -> int:
    return sum(degree + 1 for _, degree in cfg.components) - len(cfg.nodes)

def _sections(cfg: CurveConfig, offset: int) -> int:
    degrees = cfg.degrees
    columns: Dict[str, int] = {}
    width = 0
    for name, degree in cfg.components:
        columns[name] = width
        width += max(degree + 1, 0)
    if width == 0:
        return 0

    positions: Dict[Tuple[str, str], int] = {}
    next_position = {name: offset for name in degrees}
    for node in cfg.sorted_nodes():
        for name in node:
            positions[(name, node[0] if name == node[1] else node[1])] = next_position[name]
            next_position[name] += 1

    rows = []
    for first, second in cfg.sorted_nodes():
        row = [0] * width
        # a section is a polynomial of degree <= d on each curve, and the two
        # curves through a node must agree there
        for name, other, sign in ((first, second, 1), (second, first, -1)):
            t = positions[(name, other)]
            for power in range(degrees[name] + 1):
                row[columns[name] + power] += sign * t ** power
        rows.append(row)
    if not rows:
        return width
    return width - Matrix(rows).rank()

def h0_h1(cfg: CurveConfig) -> Tuple[int, int]:
    dims = {offset: _sections(cfg, offset) for offset in NODE_POSITION_OFFSETS}
    if len(set(dims.values())) != 1:
        raise InconsistentGeometry(f"h0 depends on where the nodes are placed: {dims}")
    h0 = dims[NODE_POSITION_OFFSETS[0]]
    h1 = h0 - euler_char(cfg)
    if h1 < 0:
        raise InconsistentGeometry(f"h0 = {h0} is smaller than chi = {euler_char(cfg)}")
    return h0, h1

def hodge_piece_dims(res: ResolutionData, alpha: Fraction) -> Tuple[int, int, int, int]:
    """h0 and h1 of K_alpha and of K'_alpha: the dimensions of F^1 on the
    e(-alpha) eigenspaces of H^1, H^2, H^1_c and H^2_c of the Milnor fibre."""
    unprimed = h0_h1(k_sheaf(res, alpha, False))
    primed = h0_h1(k_sheaf(res, alpha, True))
    return (unprimed[0], unprimed[1], primed[0], primed[1])


class _Piece(NamedTuple):
    alpha: Fraction
    primed: bool
    value: int

def _evaluate_piece(task: Tuple[ResolutionData, Fraction, bool]) -> _Piece:
    res, alpha, primed = task
    cfg = k_sheaf(res, alpha, primed)
    if primed:
        chi = euler_char(cfg)
        if chi < 0:
            raise InconsistentGeometry(f"chi(K'_{alpha}) = {chi} is negative")
        return _Piece(alpha, primed, chi)
    h0, h1 = h0_h1(cfg)
    if h1 != 0:
        raise InconsistentGeometry(f"h1(K_{alpha}) = {h1}, expected 0")
    return _Piece(alpha, primed, h0)

def _evaluate_pieces(tasks: Sequence[Tuple[ResolutionData, Fraction, bool]], parallelism: Optional[int]) -> List[_Piece]:
    if not parallelism or parallelism == 1 or len(tasks) < 2:
        return [_evaluate_piece(task) for task in tasks]
    worker_count = min(parallelism, len(tasks), multiprocessing.cpu_count())
    with multiprocessing.Pool(worker_count) as pool:
        return pool.map(_evaluate_piece, tasks)

def spectrum(res: ResolutionData, parallelism: Optional[int] = None) -> Spectrum:
    """n_alpha = chi(K_alpha) for alpha in (0,1], and n_(2-beta) = chi(K'_beta)
    for beta in (0,1). Only candidate exponents are evaluated, since K_alpha
    vanishes elsewhere."""
    candidates = res.candidate_exponents(Fraction(0), Fraction(1))
    tasks = [(res, alpha, False) for alpha in candidates]
    tasks += [(res, beta, True) for beta in candidates if beta < 1]
    terms: Dict[Fraction, int] = {}
    for piece in _evaluate_pieces(tasks, parallelism):
        exponent = 2 - piece.alpha if piece.primed else piece.alpha
        if piece.value:
            terms[exponent] = terms.get(exponent, 0) + piece.value
    result = Spectrum(terms)
    logger.debug("spectrum %s from %d pieces", result, len(tasks))
    return result

def exhaustive_support_check(res: ResolutionData) -> List[Tuple[Fraction, bool, int]]:
    """Evaluates chi(K_alpha) and chi(K'_alpha) at every alpha = j/m_i in
    (0,1] that is not a candidate exponent, returning those that don't vanish."""
    candidates = set(res.candidate_exponents(Fraction(0), Fraction(1)))
    others = sorted({
        Fraction(j, c.m)
        for c in res.exceptional
        for j in range(1, c.m + 1)
    } - candidates)
    failures = []
    for alpha in others:
        for primed in (False, True):
            if primed and alpha == 1:
                continue
            chi = euler_char(k_sheaf(res, alpha, primed))
            if chi != 0:
                failures.append((alpha, primed, chi))
    return failures
