"""Quantum sl(2) basic data, Moore-Seiberg checks and closed invariants."""

from ._cetqft import (
    FramingError,
    SurfaceError,
    WordError,
    dim_V,
    dual_surface,
    apply_moves,
    fusion_range,
    invariant_closed,
    normalize_surface,
    q_int,
    r_matrix,
    relation_ids,
    report,
    scalar_C,
    torus_S,
    torus_operator,
    validate_surface,
    verify,
    verify_all,
    wall_sigma,
    weight_S,
    weyl_D,
    word_framing,
)

__all__ = [name for name in dir() if not name.startswith("_")]
