"""Ply, vertex-ply and empty-ply drawings of graphs."""
from .drawing import Drawing, Graph, ValidationError, ply_disks, validate
from .errors import DomainError, InfeasibleByTheorem, NotAvailableError
from .geometry import EPS, Disk, Point, Segment
from .plycore import (
    is_empty_ply,
    lemma_report,
    max_depth,
    ply,
    ply_report,
    quarter_shped,
    vertex_ply,
)

__version__ = "0.1.0"

__all__ = [
    "EPS",
    "Disk",
    "DomainError",
    "Drawing",
    "Graph",
    "InfeasibleByTheorem",
    "NotAvailableError",
    "Point",
    "Segment",
    "ValidationError",
    "is_empty_ply",
    "lemma_report",
    "max_depth",
    "ply",
    "ply_disks",
    "ply_report",
    "quarter_shped",
    "validate",
    "vertex_ply",
]
