from .base import (
    Component,
    ComponentKind,
    DocumentError,
    InvalidResolution,
    ResolutionData,
    Violation,
    check_valid,
    validate,
)
from .explicit import from_explicit
from .invariants import delta_invariant, milnor_number, same_resolution
from .newton import NewtonPolygonError, from_newton, from_newton_document
from .proximity import (
    BranchAttachment,
    ProximityError,
    from_proximity,
    from_proximity_document,
    quasi_homogeneous_proximity,
)
