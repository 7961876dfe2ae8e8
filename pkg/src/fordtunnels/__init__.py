"""Ford domains of compression-body groups and the geodesics dual to their tunnels."""

from . import errors
from .errors import FordToolkitError
from .ford import (
    discreteness_alarm,
    face_pairing_check,
    ford_footprint,
    is_simple_ford,
    normalize_generators,
    visibility,
)
from .geometry import (
    Geodesic,
    IsometricSphere,
    closest_points,
    dual_geodesic,
    equidistant_surface,
    geodesic_distance,
    isometric_sphere,
    transform_geodesic,
    transform_sphere,
)
from .group import (
    CompressionBodyRep,
    Word,
    delta_generators,
    enumerate_elements,
    example_simple_ford,
    prop42_family,
    thm43_family,
    validate,
)
from .moebius import (
    INF,
    HalfSpacePoint,
    MoebiusMap,
    apply_boundary,
    apply_interior,
    classify,
    compose,
    inverse,
    normalize,
)
from .render import render_svg, scene_from_footprint
from .serialization import parse_rep, serialize_rep
from .tunnels import (
    dual_arc_decomposition,
    epsilon_ball_witness,
    find_t0,
    lift_pair_distance,
    min_translate_distance,
    signed_area,
    triangle_points,
)

__all__ = [
    "apply_boundary",
    "apply_interior",
    "classify",
    "closest_points",
    "compose",
    "CompressionBodyRep",
    "delta_generators",
    "discreteness_alarm",
    "dual_arc_decomposition",
    "dual_geodesic",
    "enumerate_elements",
    "epsilon_ball_witness",
    "equidistant_surface",
    "errors",
    "example_simple_ford",
    "face_pairing_check",
    "find_t0",
    "ford_footprint",
    "FordToolkitError",
    "Geodesic",
    "geodesic_distance",
    "HalfSpacePoint",
    "INF",
    "inverse",
    "is_simple_ford",
    "isometric_sphere",
    "IsometricSphere",
    "lift_pair_distance",
    "min_translate_distance",
    "MoebiusMap",
    "normalize",
    "normalize_generators",
    "parse_rep",
    "prop42_family",
    "render_svg",
    "scene_from_footprint",
    "serialize_rep",
    "signed_area",
    "thm43_family",
    "transform_geodesic",
    "transform_sphere",
    "triangle_points",
    "validate",
    "visibility",
    "Word",
]

__version__ = "0.1.0"
