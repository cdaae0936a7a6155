"""Pseudo-depth multi-object tracking (PD-SORT)."""

from ._core import (
    MetricsReport,
    Tracker,
    TrackerConfig,
    dviou,
    evaluate,
    interval_depths,
    iou,
    pseudo_depth,
    qpdm_cost,
    solve_assignment,
)

__all__ = [
    "MetricsReport",
    "Tracker",
    "TrackerConfig",
    "dviou",
    "evaluate",
    "interval_depths",
    "iou",
    "pseudo_depth",
    "qpdm_cost",
    "solve_assignment",
]
