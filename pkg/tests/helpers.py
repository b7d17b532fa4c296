import dataclasses
import json
import math
import os
from typing import Any, Dict, List, Tuple

from singspec.resolution import ResolutionData, from_explicit, from_proximity_document

CORPUS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")

def corpus_files() -> List[str]:
    return sorted(os.path.join(CORPUS_DIR, name) for name in os.listdir(CORPUS_DIR) if name.endswith(".json"))

def corpus_document(name: str) -> Dict[str, Any]:
    with open(os.path.join(CORPUS_DIR, name), "r", encoding="utf-8") as handle:
        return json.load(handle)

def cusp_description() -> Dict[str, Any]:
    return {
        "components": [
            {"id": "E1", "kind": "exceptional", "m": 2, "a": 1, "self": -3},
            {"id": "E2", "kind": "exceptional", "m": 3, "a": 2, "self": -2},
            {"id": "E3", "kind": "exceptional", "m": 6, "a": 4, "self": -1},
            {"id": "C", "kind": "non_exceptional", "m": 1, "a": 0},
        ],
        "edges": [["E1", "E3"], ["E2", "E3"], ["E3", "C"]],
    }

def node_description() -> Dict[str, Any]:
    return {
        "components": [
            {"id": "E1", "kind": "exceptional", "m": 2, "a": 1, "self": -1},
            {"id": "B1", "kind": "non_exceptional", "m": 1, "a": 0},
            {"id": "B2", "kind": "non_exceptional", "m": 1, "a": 0},
        ],
        "edges": [["E1", "B1"], ["E1", "B2"]],
    }

def cusp() -> ResolutionData:
    return from_explicit(cusp_description())

def node() -> ResolutionData:
    return from_proximity_document({"mults": [2], "prox": [], "branches": [{"on": 0}, {"on": 0}]})

def a3() -> ResolutionData:
    return from_proximity_document({"mults": [2, 2], "prox": [[1, 0]], "branches": [{"on": 1}, {"on": 1}]})

def cusp_proximity() -> ResolutionData:
    return from_proximity_document({"mults": [2, 1, 1], "prox": [[1, 0], [2, 0], [2, 1]], "branches": [{"on": 2}]})

def retouched(res: ResolutionData, name: str, **changes) -> ResolutionData:
    """A copy of the data with one component's fields overwritten, unvalidated."""
    components = tuple(
        dataclasses.replace(c, **changes) if c.id == name else c for c in res.components
    )
    return ResolutionData(components, res.edges, res.delta)

def coprime_pairs(limit: int = 9) -> List[Tuple[int, int]]:
    return [
        (a, b)
        for a in range(2, limit + 1)
        for b in range(a + 1, limit + 1)
        if math.gcd(a, b) == 1
    ]
