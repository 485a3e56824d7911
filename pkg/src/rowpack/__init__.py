"""rowpack: minimum-area rectangles for n non-overlapping unit circles.

Exact search over row-structured packings (square grid, hexagonal, hybrids,
with monovacancies), improvement-move analysis, closed-form asymptotics, a
stochastic wall-press compactor, and SVG rendering.
"""
from .quadint import QuadInt, compare
from .packings import ClassConfig, PackingRealization, RowPattern, hybrid_pair
from .search import (
    Classification,
    SearchResult,
    best,
    classify,
    enumerate_candidates,
    irregular_scan,
    milestones,
    read_results,
    scan_range,
    shape_census,
    write_results,
)
from .improve import ImprovementReport, MoveKind, applicable_move, improved_metrics
from .theory import (
    ConvergentEntry,
    WasteConstants,
    convergents,
    reference_densities,
    smallest_two_row_m,
    two_row_beats_square,
    verify_convergent_regularity,
    waste_constants,
)
from .compactor import CompactorParams, CompactorRun, best_of, compact, random_start, relax
from .render import RenderOptions, aspect_scatter_csv, to_svg

__version__ = "0.1.0"

__all__ = [
    "QuadInt", "compare",
    "ClassConfig", "PackingRealization", "RowPattern", "hybrid_pair",
    "Classification", "SearchResult", "best", "classify", "enumerate_candidates",
    "irregular_scan", "milestones", "read_results", "scan_range", "shape_census",
    "write_results",
    "ImprovementReport", "MoveKind", "applicable_move", "improved_metrics",
    "ConvergentEntry", "WasteConstants", "convergents", "reference_densities",
    "smallest_two_row_m", "two_row_beats_square", "verify_convergent_regularity",
    "waste_constants",
    "CompactorParams", "CompactorRun", "best_of", "compact", "random_start", "relax",
    "RenderOptions", "aspect_scatter_csv", "to_svg",
]
