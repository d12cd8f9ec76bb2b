"""Crossing numbers of complete multipartite graphs: exact drawings, counts and bounds."""

from .errors import DegenerateArc, DegenerateConfiguration, UnknownFamily, VertexOnEdge
from .exact_geom import (
    CrossingReport,
    PartitionType,
    Point2,
    RectilinearDrawing,
    classify_quadruple,
    count_crossings,
    orient,
    segments_cross_properly,
)
from .kernels import BACKEND

__version__ = "0.1.0"
