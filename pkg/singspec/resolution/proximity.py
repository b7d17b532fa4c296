"""Resolutions from a cluster of infinitely near points: the multiplicities
e_i of the strict transform at the blown up points p_0, p_1, ... and which
earlier points each one is proximate to."""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Set, Tuple

from .base import Component, DocumentError, ResolutionData, branch_ids, check_valid

logger = logging.getLogger(__name__)

class ProximityError(ValueError):
    pass


@dataclass(frozen=True)
class BranchAttachment:
    on: int # pylint: disable=C0103
    m: int = 1
    id: Optional[str] = None # pylint: disable=C0103

    @classmethod
    def from_document(cls, entry: Any) -> "BranchAttachment":
        if isinstance(entry, bool) or not isinstance(entry, (int, Mapping)):
            raise DocumentError(f"Expected a branch object, got {entry!r}")
        if isinstance(entry, int):
            return cls(entry)
        try:
            on = entry["on"]
        except KeyError as exc:
            raise DocumentError(f"Branch {dict(entry)} does not say which point it is on") from exc
        m = entry.get("m", 1)
        name = entry.get("id")
        if isinstance(on, bool) or not isinstance(on, int) or isinstance(m, bool) or not isinstance(m, int):
            raise DocumentError(f"Branch {dict(entry)} must have integer 'on' and 'm'")
        if name is not None and not isinstance(name, str):
            raise DocumentError(f"Branch id {name!r} must be a string")
        return cls(on, m, name)


def _proximate_sets(count: int, prox: Sequence[Sequence[int]]) -> List[Set[int]]:
    sets: List[Set[int]] = [set() for _ in range(count)]
    for pair in prox:
        if len(pair) != 2:
            raise ProximityError(f"Proximity entry {list(pair)} is not a pair")
        later, earlier = pair
        if not 0 <= earlier < later < count:
            raise ProximityError(f"p{later} cannot be proximate to p{earlier}")
        if earlier in sets[later]:
            raise ProximityError(f"p{later} is listed as proximate to p{earlier} twice")
        sets[later].add(earlier)

    for index, targets in enumerate(sets):
        if index > 0 and (index - 1) not in targets:
            raise ProximityError(f"p{index} is not proximate to the point before it")
        if len(targets) > 2:
            raise ProximityError(f"p{index} is proximate to {len(targets)} points, at most 2 allowed")
        if len(targets) == 2:
            # a satellite point lies on the intersection of the two curves it is
            # proximate to, and the later of those curves must pass through the earlier
            first, second = sorted(targets)
            if first not in sets[second]:
                raise ProximityError(f"p{index} is proximate to p{first} and p{second}, but p{second} is not proximate to p{first}")
    return sets

def from_proximity(
    mults: Sequence[int],
    prox: Sequence[Sequence[int]],
    branches: Sequence[BranchAttachment],
) -> ResolutionData:
    count = len(mults)
    if count == 0:
        raise ProximityError("Need at least one blown up point")
    if any(isinstance(e, bool) or not isinstance(e, int) or e < 1 for e in mults):
        raise ProximityError(f"Multiplicities must be positive integers, got {list(mults)}")
    if not branches:
        raise ProximityError("At least one branch must be attached")
    proximate_to = _proximate_sets(count, prox)

    m: List[int] = []
    a: List[int] = []
    for index in range(count):
        m.append(mults[index] + sum(m[j] for j in proximate_to[index]))
        a.append(1 + sum(a[j] for j in proximate_to[index]))

    components = []
    edges: List[Tuple[str, str]] = []
    names = [f"E{index + 1}" for index in range(count)]
    for index in range(count):
        later = sum(1 for k in range(index + 1, count) if index in proximate_to[k])
        components.append(Component.exceptional(names[index], m[index], a[index], -1 - later))
        for j in range(index + 1, count):
            if index not in proximate_to[j]:
                continue
            separated = any(index in proximate_to[k] and j in proximate_to[k] for k in range(j + 1, count))
            if not separated:
                edges.append((names[index], names[j]))

    default_names = branch_ids(len(branches))
    for default, branch in zip(default_names, branches):
        if not 0 <= branch.on < count:
            raise ProximityError(f"Branch is attached to p{branch.on}, which does not exist")
        if branch.m < 1:
            raise ProximityError(f"Branch multiplicity {branch.m} is not positive")
        name = branch.id if branch.id is not None else default
        components.append(Component.branch(name, branch.m))
        edges.append((names[branch.on], name))

    delta = sum(e * (e - 1) // 2 for e in mults)
    logger.debug("proximity build: m=%s a=%s delta=%d", m, a, delta)
    return check_valid(ResolutionData.from_parts(components, edges, delta))

def from_proximity_document(description: Mapping[str, Any]) -> ResolutionData:
    if not isinstance(description, Mapping):
        raise DocumentError("Expected a proximity object")
    if "proximity" in description:
        description = description["proximity"]
        if not isinstance(description, Mapping):
            raise DocumentError("Expected a proximity object")
    mults = description.get("mults")
    prox = description.get("prox", [])
    branches = description.get("branches")
    if not isinstance(mults, list):
        raise DocumentError("A proximity document needs a list of mults")
    if not isinstance(prox, list) or not all(isinstance(p, list) for p in prox):
        raise DocumentError("prox must be a list of [later, earlier] pairs")
    if not isinstance(branches, list):
        raise DocumentError("A proximity document needs a list of branches")
    return from_proximity(mults, prox, [BranchAttachment.from_document(b) for b in branches])

def quasi_homogeneous_proximity(a: int, b: int) -> Dict[str, Any]:
    """The proximity document of the irreducible germ x^a + y^b, read off the
    Euclidean algorithm on (b, a): each quotient q_k gives a run of q_k
    points whose multiplicity is the previous remainder."""
    if a < 2 or b < 2:
        raise ValueError(f"Expected exponents of at least 2, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise ValueError(f"x^{a} + y^{b} is irreducible only for coprime exponents")
    small, large = min(a, b), max(a, b)

    blocks: List[Tuple[int, int]] = []
    previous, current = large, small
    while current:
        quotient, remainder = divmod(previous, current)
        blocks.append((quotient, current))
        previous, current = current, remainder

    mults: List[int] = []
    prox: List[List[int]] = []
    last_of_block: List[int] = []
    for block, (quotient, multiplicity) in enumerate(blocks):
        for step in range(quotient):
            index = len(mults)
            mults.append(multiplicity)
            if index > 0:
                prox.append([index, index - 1])
            if step > 0 and block >= 1:
                prox.append([index, last_of_block[block - 1]])
            if step == 0 and block >= 2:
                prox.append([index, last_of_block[block - 2]])
        last_of_block.append(len(mults) - 1)

    return {"mults": mults, "prox": prox, "branches": [{"on": len(mults) - 1}]}
