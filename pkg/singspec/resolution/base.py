import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from sympy import Matrix

from ..rationals import as_rational, lcm_of

logger = logging.getLogger(__name__)

Ray = Tuple[int, int]

class ComponentKind(Enum):
    EXCEPTIONAL = "exceptional"
    NON_EXCEPTIONAL = "non_exceptional"

class DocumentError(ValueError):
    """The input document could not be turned into the requested object."""

@dataclass(frozen=True)
class Violation:
    identity: str
    component: Optional[str]
    message: str

    def __str__(self) -> str:
        where = f" on {self.component}" if self.component is not None else ""
        return f"{self.identity}{where}: {self.message}"

class InvalidResolution(ValueError):
    def __init__(self, violations: List[Violation]):
        super().__init__("; ".join(str(v) for v in violations))
        self.violations = violations


@dataclass(frozen=True)
class Component:
    id: str # pylint: disable=C0103
    kind: ComponentKind
    m: int
    a: int = 0
    self_int: Optional[int] = None
    # Only set by the toric builder: the fan ray whose divisor this is.
    ray: Optional[Ray] = None

    @property
    def is_exceptional(self) -> bool:
        return self.kind == ComponentKind.EXCEPTIONAL

    @classmethod
    def exceptional(cls, name: str, m: int, a: int, self_int: int, ray: Optional[Ray] = None) -> "Component":
        return cls(name, ComponentKind.EXCEPTIONAL, m, a, self_int, ray)

    @classmethod
    def branch(cls, name: str, m: int = 1, ray: Optional[Ray] = None) -> "Component":
        return cls(name, ComponentKind.NON_EXCEPTIONAL, m, 0, None, ray)


def edge(first: str, second: str) -> FrozenSet[str]:
    return frozenset((first, second))

def branch_ids(count: int) -> List[str]:
    """A lone strict transform is called C, several are C1, C2, ..."""
    if count == 1:
        return ["C"]
    return [f"C{i + 1}" for i in range(count)]


@dataclass(frozen=True)
class ResolutionData:
    """The combinatorics of an embedded resolution (X', D') -> (X, D) of a
    plane curve germ: the components of D' = pi^*D with their multiplicities,
    discrepancies and self-intersections, and which pairs of them meet."""
    components: Tuple[Component, ...]
    edges: FrozenSet[FrozenSet[str]]
    delta: Optional[int] = None
    _index: Dict[str, Component] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {c.id: c for c in self.components})

    @classmethod
    def from_parts(
        cls,
        components: Iterable[Component],
        edge_pairs: Iterable[Sequence[str]],
        delta: Optional[int] = None,
    ) -> "ResolutionData":
        """Builds the data from a list of pairs, rejecting the things a set of
        edges can't represent (repeated intersections) before they are lost."""
        violations = []
        edges = set()
        for pair in edge_pairs:
            if len(pair) != 2:
                violations.append(Violation("simple_graph", None, f"edge {list(pair)} does not have two ends"))
                continue
            key = edge(pair[0], pair[1])
            if key in edges:
                violations.append(Violation("simple_graph", pair[0], f"repeated edge {pair[0]}-{pair[1]}"))
            edges.add(key)
        if violations:
            raise InvalidResolution(violations)
        return cls(tuple(components), frozenset(edges), delta)

    @property
    def ids(self) -> List[str]:
        return [c.id for c in self.components]

    @property
    def exceptional(self) -> List[Component]:
        return [c for c in self.components if c.is_exceptional]

    @property
    def non_exceptional(self) -> List[Component]:
        return [c for c in self.components if not c.is_exceptional]

    @property
    def branches(self) -> int:
        return len(self.non_exceptional)

    @property
    def is_reduced(self) -> bool:
        return all(c.m == 1 for c in self.non_exceptional)

    @property
    def lcm(self) -> int:
        return lcm_of(c.m for c in self.components)

    def component(self, name: str) -> Component:
        try:
            return self._index[name]
        except KeyError as exc:
            raise KeyError(f"No component called {name}") from exc

    def neighbours(self, name: str) -> List[str]:
        found = []
        for key in self.edges:
            if name in key and len(key) == 2:
                (other,) = key - {name}
                found.append(other)
        return sorted(found)

    def intersection(self, first: str, second: str) -> int:
        if first == second:
            component = self.component(first)
            if component.self_int is None:
                raise ValueError(f"{first} has no self-intersection recorded")
            return component.self_int
        return 1 if edge(first, second) in self.edges else 0

    def intersection_matrix(self, rows: Sequence[str], cols: Optional[Sequence[str]] = None) -> np.ndarray:
        if cols is None:
            cols = rows
        return np.array([[self.intersection(r, c) for c in cols] for r in rows], dtype=np.int64).reshape(
            len(rows), len(cols)
        )

    def graph(self) -> nx.Graph:
        result = nx.Graph()
        for c in self.components:
            result.add_node(c.id, kind=c.kind.value, m=c.m, a=c.a, self_int=c.self_int)
        for key in self.edges:
            if len(key) == 2:
                result.add_edge(*sorted(key))
        return result

    def candidate_exponents(self, lo: Fraction, hi: Fraction) -> List[Fraction]:
        """All (a_i + 1 + k)/m_i in (lo, hi], the points where one of the
        floors [alpha m_i] - a_i can first become positive or increase."""
        lo, hi = as_rational(lo), as_rational(hi)
        if not 0 <= lo < hi:
            raise ValueError(f"Expected 0 <= lo < hi, got ({lo}, {hi}]")
        found = set()
        for c in self.components:
            numerator = max(c.a + 1, (lo.numerator * c.m) // lo.denominator + 1)
            while Fraction(numerator, c.m) <= hi:
                found.add(Fraction(numerator, c.m))
                numerator += 1
        return sorted(found)


def _structural_violations(res: ResolutionData) -> List[Violation]:
    violations = []
    seen = set()
    for c in res.components:
        if c.id in seen:
            violations.append(Violation("simple_graph", c.id, "component id used twice"))
        seen.add(c.id)
        if c.m < 1:
            violations.append(Violation("component", c.id, f"multiplicity {c.m} is not positive"))
        if c.is_exceptional:
            if c.self_int is None or c.self_int > -1:
                violations.append(Violation("component", c.id, f"self-intersection {c.self_int} is not <= -1"))
            if c.a < 0:
                violations.append(Violation("component", c.id, f"discrepancy {c.a} is negative"))
        else:
            if c.a != 0:
                violations.append(Violation("component", c.id, "non-exceptional component with nonzero discrepancy"))
            if c.self_int is not None:
                violations.append(Violation("component", c.id, "non-exceptional component with a self-intersection"))
    for key in sorted(res.edges, key=sorted):
        ends = sorted(key)
        if len(ends) != 2:
            violations.append(Violation("simple_graph", ends[0], "self-loop"))
            continue
        for end in ends:
            if end not in seen:
                violations.append(Violation("simple_graph", end, f"edge {ends[0]}-{ends[1]} names an unknown component"))
    return violations

def _is_negative_definite(matrix: np.ndarray) -> bool:
    exact = Matrix(matrix.tolist())
    size = exact.shape[0]
    for k in range(1, size + 1):
        minor = exact[:k, :k].det()
        # leading minors of a negative definite matrix alternate in sign, starting negative
        if minor * (-1) ** k <= 0:
            return False
    return True

def validate(res: ResolutionData) -> List[Violation]:
    """Everything that is wrong with the resolution data; an empty list means
    it is a consistent SNC resolution of a single germ."""
    violations = _structural_violations(res)
    if violations:
        return violations

    exceptional = [c.id for c in res.exceptional]
    if not exceptional:
        if len(res.non_exceptional) > 1:
            violations.append(Violation(
                "exceptional_fibre", None, "several branches meet without an exceptional curve"))
        return violations

    graph = res.graph()
    if not nx.is_connected(graph.subgraph(exceptional)):
        violations.append(Violation("connected", None, "exceptional curves do not form a connected fibre"))

    matrix = res.intersection_matrix(exceptional)
    if not _is_negative_definite(matrix):
        violations.append(Violation("negative_definite", None, "intersection matrix is not negative definite"))

    discrepancies = np.array([res.component(x).a for x in exceptional], dtype=np.int64)
    canonical_degrees = matrix @ discrepancies
    for name, degree, row in zip(exceptional, canonical_degrees, matrix):
        expected = -2 - int(row[exceptional.index(name)])
        if int(degree) != expected:
            violations.append(Violation("adjunction", name, f"K.E = {int(degree)}, expected {expected}"))

    everything = res.ids
    multiplicities = np.array([res.component(x).m for x in everything], dtype=np.int64)
    pullback_degrees = res.intersection_matrix(exceptional, everything) @ multiplicities
    for name, degree in zip(exceptional, pullback_degrees):
        if int(degree) != 0:
            violations.append(Violation("projection_formula", name, f"pi^*D.E = {int(degree)}, expected 0"))

    return violations

def check_valid(res: ResolutionData) -> ResolutionData:
    violations = validate(res)
    if violations:
        for violation in violations:
            logger.debug("resolution violation: %s", violation)
        raise InvalidResolution(violations)
    return res
