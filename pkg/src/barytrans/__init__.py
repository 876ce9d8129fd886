"""Barycentric transformations of Fano polytopes, in exact arithmetic."""

__version__ = "0.1.0"

from .canonical import canonical_key  # noqa: E402
from .classify import (  # noqa: E402
    PeriodicBInfinity,
    StrictType,
    Unresolved,
    classify,
    is_pseudo_periodic,
    orbit_classes,
)
from .fano import (  # noqa: E402
    FanoFailure,
    FanoPolytope,
    automorphisms,
    b_transform,
    b_transform_fano,
    cond_b1,
    g_values,
    gorenstein_index,
    has_nontrivial_rotation,
    is_kahler_einstein,
    is_smooth,
    is_symmetric,
    validate_fano,
)
from .geometry import VPolytope, centroid, dual, hull, volume  # noqa: E402

__all__ = [
    "FanoFailure",
    "FanoPolytope",
    "PeriodicBInfinity",
    "StrictType",
    "Unresolved",
    "VPolytope",
    "automorphisms",
    "b_transform",
    "b_transform_fano",
    "canonical_key",
    "centroid",
    "classify",
    "cond_b1",
    "dual",
    "g_values",
    "gorenstein_index",
    "has_nontrivial_rotation",
    "hull",
    "is_kahler_einstein",
    "is_pseudo_periodic",
    "is_smooth",
    "is_symmetric",
    "orbit_classes",
    "validate_fano",
    "volume",
]
