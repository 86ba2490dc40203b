"""Exact α-invariants of del Pezzo surfaces with an anticanonical boundary curve."""

from .curves import (
    ample_window_check,
    enumerate_classes,
    enumerate_lines,
    is_ample,
    is_nef,
    line_type,
    window_inequality,
)
from .germs import Branch, Germ, local_intersection, quasi_homogeneous_branch, smooth_branch, validate_germ
from .lattice import (
    DivisorClass,
    Lattice,
    SurfaceModel,
    arithmetic_genus,
    blow_up_lattice,
    canonical_class,
    degree,
    intersect,
    pullback,
    strict_transform,
)
from .lct import FL, KEEInterval, PiecewiseFL, alpha_from_witnesses, kee_interval, lct_dynamic, lct_numeric, piecewise_min
from .resolution import CoeffForm, Curve, PairConfig, Point, is_log_canonical, minimal_log_resolution, validate_config

__all__ = [
    "Branch", "CoeffForm", "Curve", "DivisorClass", "FL", "Germ", "KEEInterval", "Lattice", "PairConfig",
    "PiecewiseFL", "Point", "SurfaceModel", "alpha_from_witnesses", "ample_window_check", "arithmetic_genus",
    "blow_up_lattice", "canonical_class", "degree", "enumerate_classes", "enumerate_lines", "intersect",
    "is_ample", "is_log_canonical", "is_nef", "kee_interval", "lct_dynamic", "lct_numeric", "line_type",
    "local_intersection", "minimal_log_resolution", "piecewise_min", "pullback", "quasi_homogeneous_branch",
    "smooth_branch", "strict_transform", "validate_config", "validate_germ", "window_inequality",
]
