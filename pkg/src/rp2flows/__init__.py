"""Flows on the Boy's and Girl's surfaces, enumerated and classified."""

from __future__ import annotations

from .classification import (
    CountReport,
    FlowClass,
    burnside_combine,
    canonical_form,
    classify,
    count_report,
    homotopy_count,
    table61,
)
from .cw_complex import (
    BoundaryWord,
    StratifiedSurface,
    SurfaceName,
    build_surface,
    enumerate_planar_gluings,
    pullback_complex,
    validate_complex,
)
from .errors import DomainError
from .flow_model import (
    Color,
    Coloring,
    classify_simple_region,
    corner_roles,
    derive_orientations,
    enumerate_one_fixed_point,
    region_boundary,
)
from .region_enumeration import (
    Family,
    FlowStructure,
    RegionCounts,
    RegionFlow,
    enumerate_ms_optimal,
    enumerate_projective,
    enumerate_region_flows,
    fixed_point_census,
)

__all__ = [
    "BoundaryWord", "Color", "Coloring", "CountReport", "DomainError", "Family",
    "FlowClass", "FlowStructure", "RegionCounts", "RegionFlow", "StratifiedSurface",
    "SurfaceName", "build_surface", "burnside_combine", "canonical_form", "classify",
    "classify_simple_region", "corner_roles", "count_report", "derive_orientations",
    "enumerate_ms_optimal", "enumerate_one_fixed_point", "enumerate_planar_gluings",
    "enumerate_projective", "enumerate_region_flows", "fixed_point_census",
    "homotopy_count", "pullback_complex", "region_boundary", "table61", "validate_complex",
]
