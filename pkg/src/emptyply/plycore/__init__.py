"""Ply, vertex-ply, empty-ply verification and the structural checkers."""
from .crossings import StubSet, count_crossings, count_overlaps, crossing_pairs, quarter_shped
from .depth import depth_oracle, max_depth, strict_count
from .lemmas import Check, LemmaReport, lemma_report
from .ply import (
    EmptyPlyCheck,
    PlyReport,
    containment_pairs,
    coverage_counts,
    is_empty_ply,
    ply,
    ply_report,
    vertex_ply,
)

__all__ = [
    "Check",
    "EmptyPlyCheck",
    "LemmaReport",
    "PlyReport",
    "StubSet",
    "containment_pairs",
    "count_crossings",
    "count_overlaps",
    "coverage_counts",
    "crossing_pairs",
    "depth_oracle",
    "is_empty_ply",
    "lemma_report",
    "max_depth",
    "ply",
    "ply_report",
    "quarter_shped",
    "strict_count",
    "vertex_ply",
]
