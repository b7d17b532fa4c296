from typing import Any, Mapping

from .base import Component, ComponentKind, DocumentError, ResolutionData, check_valid

def _integer(entry: Mapping[str, Any], key: str, default=None) -> int:
    value = entry.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"Field {key!r} of {dict(entry)} must be an integer")
    return value

def _component(entry: Any) -> Component:
    if not isinstance(entry, Mapping):
        raise DocumentError(f"Expected a component object, got {entry!r}")
    try:
        name = entry["id"]
        kind = ComponentKind(entry["kind"])
    except KeyError as exc:
        raise DocumentError(f"Component {dict(entry)} is missing {exc}") from exc
    except ValueError as exc:
        raise DocumentError(f"Unknown component kind {entry['kind']!r}") from exc
    if not isinstance(name, str):
        raise DocumentError(f"Component id {name!r} must be a string")
    m = _integer(entry, "m")
    a = _integer(entry, "a", 0)
    self_int = _integer(entry, "self") if "self" in entry else None
    return Component(name, kind, m, a, self_int)

def from_explicit(description: Mapping[str, Any]) -> ResolutionData:
    """Reads a {"components": [...], "edges": [...]} object (optionally still
    wrapped in its "curve" key) and returns validated resolution data."""
    if not isinstance(description, Mapping):
        raise DocumentError("Expected a curve object")
    if "curve" in description:
        description = description["curve"]
        if not isinstance(description, Mapping):
            raise DocumentError("Expected a curve object")
    components = description.get("components")
    edges = description.get("edges", [])
    if not isinstance(components, list) or not components:
        raise DocumentError("A curve needs a non-empty list of components")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise DocumentError("Edges must be a list of [id, id] pairs")
    res = ResolutionData.from_parts([_component(c) for c in components], edges)
    return check_valid(res)
