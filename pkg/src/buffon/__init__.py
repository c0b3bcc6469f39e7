"""Monte Carlo pi estimation by casting shapes onto a lined or tiled floor.

The classic baseline drops a needle on parallel lines; the main estimator
casts an equilateral triangle (side equal to the tile size) onto a square
tiling and counts grid-line crossings, giving pi ~= 12 * trials / crossings.
"""

from .errors import DegenerateSampleError, UnsupportedConfigurationError
from .estimators import (
    BatchResult,
    EstimateSummary,
    NeedleAggregate,
    SummaryStats,
    TrialAggregate,
    estimate_pi_needle,
    estimate_pi_triangle,
    run_batch,
    run_needle_trials,
    run_triangle_trials,
    summarize,
)
from .geometry import (
    CrossingTally,
    GridSpec,
    TriangleSpec,
    count_line_crossings_sorted,
    crossings_per_cast,
    make_triangle,
    segment_crosses_line,
    sorted_axis_coords,
)
from .oracle import (
    expected_crossings_closed_form,
    expected_crossings_quadrature,
    mean_width_identity,
)
from .render import (
    CastScene,
    HistogramScene,
    Viewport,
    filename_for_cast,
    render_cast,
    render_histogram,
    scene_for_cast,
)
from .sampling import CastSample, RngConfig, sample_cast, sample_offset, sample_rotation

__version__ = "0.1.0"

__all__ = [
    "BatchResult",
    "CastSample",
    "CastScene",
    "CrossingTally",
    "DegenerateSampleError",
    "EstimateSummary",
    "GridSpec",
    "HistogramScene",
    "NeedleAggregate",
    "RngConfig",
    "SummaryStats",
    "TrialAggregate",
    "TriangleSpec",
    "UnsupportedConfigurationError",
    "Viewport",
    "count_line_crossings_sorted",
    "crossings_per_cast",
    "estimate_pi_needle",
    "estimate_pi_triangle",
    "expected_crossings_closed_form",
    "expected_crossings_quadrature",
    "filename_for_cast",
    "make_triangle",
    "mean_width_identity",
    "render_cast",
    "render_histogram",
    "run_batch",
    "run_needle_trials",
    "run_triangle_trials",
    "sample_cast",
    "sample_offset",
    "sample_rotation",
    "scene_for_cast",
    "segment_crosses_line",
    "sorted_axis_coords",
    "summarize",
]
