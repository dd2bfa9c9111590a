"""Limit roots and limit directions of Lorentzian Coxeter systems.

Spectral computation of limit roots: group elements are enumerated as
matrices, classified by Lorentz-transformation type, and light-like
eigendirections of infinite-order elements (plus their conjugates) yield
dense samples of the limit set, cross-validated against orbit accumulation
and codimension-2 arrangement intersections.
"""

__version__ = "0.1.0"

from .graphs import CoxeterGraph, builtin, load_graph, universal, dihedral
from .geometry import GeometricSystem, build_form, generator_matrix, make_system, signature
from .elements import ElementStore, GroupElement, element_of, enumerate_elements
from .projective import Causal, ProjectivePoint, causal_character, chart_distance, light_conic, to_chart
from .spectral import (
    Kind,
    SpectralClass,
    classify,
    hyperbolic_directions,
    orthogonality_check,
    parabolic_direction,
    unimodular_subspace,
)
from .limits import (
    PeriodicWord,
    PointRecord,
    PointSet,
    hausdorff,
    inversion_set,
    orbit_accumulate,
    power_dynamics,
    sample_limit_roots,
    word_limit_root,
)
from .arrangement import (
    Codim2Intersection,
    IntersectionKind,
    Root,
    Weight,
    codim2_spacelike,
    descend_to_fundamental,
    fundamental_weights,
    intersection_equals_unimodular,
    roots_by_depth,
    sign_vector,
)

__all__ = [
    "CoxeterGraph",
    "GeometricSystem",
    "GroupElement",
    "ElementStore",
    "ProjectivePoint",
    "PointSet",
    "PointRecord",
    "PeriodicWord",
    "SpectralClass",
    "Kind",
    "Causal",
    "Root",
    "Weight",
    "Codim2Intersection",
    "IntersectionKind",
    "build_form",
    "builtin",
    "causal_character",
    "chart_distance",
    "classify",
    "codim2_spacelike",
    "descend_to_fundamental",
    "dihedral",
    "element_of",
    "enumerate_elements",
    "fundamental_weights",
    "generator_matrix",
    "hausdorff",
    "hyperbolic_directions",
    "intersection_equals_unimodular",
    "inversion_set",
    "light_conic",
    "load_graph",
    "make_system",
    "orbit_accumulate",
    "orthogonality_check",
    "parabolic_direction",
    "power_dynamics",
    "roots_by_depth",
    "sample_limit_roots",
    "sign_vector",
    "signature",
    "to_chart",
    "unimodular_subspace",
    "universal",
    "word_limit_root",
]
