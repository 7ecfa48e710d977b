"""Simulator and verification harness for the two-color mutual visibility
algorithm for unit-disk robots with lights."""

from ._core import (
    Decision,
    FramePolicy,
    HullView,
    Light,
    Outcome,
    Point,
    Role,
    Scenario,
    Trace,
    angle_cw,
    classify,
    compute,
    convex_hull,
    dist_point_segment,
    exterior_bisector,
    generate_scenario,
    min_dist_moving,
    orient,
    run,
    scenario_from_text,
    verify_trace_text,
    visibility_oracle,
    visible,
    visible_set,
)

__all__ = [
    "Decision",
    "FramePolicy",
    "HullView",
    "Light",
    "Outcome",
    "Point",
    "Role",
    "Scenario",
    "Trace",
    "angle_cw",
    "classify",
    "compute",
    "convex_hull",
    "dist_point_segment",
    "exterior_bisector",
    "generate_scenario",
    "min_dist_moving",
    "orient",
    "run",
    "scenario_from_text",
    "verify_trace_text",
    "visibility_oracle",
    "visible",
    "visible_set",
]
