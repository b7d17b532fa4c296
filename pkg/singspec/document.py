"""Input documents: a JSON object with exactly one of the keys below."""

import json
from typing import Any, Mapping, Optional, Tuple

from .nc_engine import NCModel
from .resolution import (
    DocumentError,
    ResolutionData,
    from_explicit,
    from_newton,
    from_newton_document,
    from_proximity_document,
)

VARIANTS = ("nc", "curve", "proximity", "newton", "qh")
GERM_VARIANTS = ("curve", "proximity", "newton", "qh")

def load(path: str) -> Mapping[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            document = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"Could not read {path}: {exc}") from exc
    if not isinstance(document, Mapping):
        raise DocumentError(f"{path} does not hold a JSON object")
    return document

def variant(document: Mapping[str, Any]) -> str:
    present = [key for key in VARIANTS if key in document]
    if len(present) != 1:
        raise DocumentError(f"Expected exactly one of {', '.join(VARIANTS)}, found {present or 'none'}")
    return present[0]

def nc_model(document: Mapping[str, Any]) -> NCModel:
    if variant(document) != "nc":
        raise DocumentError("This needs a normal crossing ('nc') document")
    body = document["nc"]
    multiplicities = body.get("multiplicities") if isinstance(body, Mapping) else None
    if not isinstance(multiplicities, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in multiplicities):
        raise DocumentError("nc documents need an integer list of multiplicities")
    return NCModel(multiplicities)

def qh_exponents(document: Mapping[str, Any]) -> Optional[Tuple[int, int]]:
    if variant(document) != "qh":
        return None
    body = document["qh"]
    if not isinstance(body, Mapping):
        raise DocumentError("qh documents are of the form {\"a\": a, \"b\": b}")
    a, b = body.get("a"), body.get("b")
    for value in (a, b):
        if isinstance(value, bool) or not isinstance(value, int) or value < 2:
            raise DocumentError("qh exponents must be integers of at least 2")
    return a, b

def germ(document: Mapping[str, Any]) -> ResolutionData:
    kind = variant(document)
    if kind == "curve":
        return from_explicit(document["curve"])
    if kind == "proximity":
        return from_proximity_document(document["proximity"])
    if kind == "newton":
        return from_newton_document(document["newton"])
    if kind == "qh":
        a, b = qh_exponents(document) # type: ignore
        return from_newton([(a, 0), (0, b)])
    raise DocumentError("This needs a curve germ document, not a normal crossing model")
