"""
Marching squares over a sampled scalar field.

This is the one approximate computation of the package: zero sets are traced
on a float grid with linear interpolation along cell edges.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import numpy.typing as npt

type Point = tuple[float, float]
type Segment = tuple[Point, Point]
type Field = Callable[[npt.NDArray[np.float64], npt.NDArray[np.float64]], npt.NDArray[np.float64]]

# Corners of a cell: 0 = (i, j), 1 = (i+1, j), 2 = (i+1, j+1), 3 = (i, j+1).
_EDGES = ((0, 1), (1, 2), (2, 3), (3, 0))


def _lerp(p0: Point, p1: Point, v0: float, v1: float) -> Point:
    t = 0.5 if v0 == v1 else v0 / (v0 - v1)
    t = min(max(t, 0.0), 1.0)
    return (p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1]))


def trace_zero_set(
    field: Field,
    window: tuple[float, float, float, float],
    resolution: int,
) -> list[Segment]:
    """
    Segments approximating {field = 0} inside window = (xmin, xmax, ymin, ymax).

    The window is split into resolution x resolution cells. Saddle cells are
    resolved by the sign of the field at the cell center.
    """
    xmin, xmax, ymin, ymax = window
    xs = np.linspace(xmin, xmax, resolution + 1)
    ys = np.linspace(ymin, ymax, resolution + 1)
    grid_x, grid_y = np.meshgrid(xs, ys, indexing="ij")
    values = field(grid_x, grid_y)
    positive = values > 0

    mixed = (
        (positive[:-1, :-1] != positive[1:, :-1])
        | (positive[:-1, :-1] != positive[1:, 1:])
        | (positive[:-1, :-1] != positive[:-1, 1:])
    )
    segments: list[Segment] = []
    for i, j in zip(*np.nonzero(mixed), strict=True):
        corners = (
            (float(xs[i]), float(ys[j])),
            (float(xs[i + 1]), float(ys[j])),
            (float(xs[i + 1]), float(ys[j + 1])),
            (float(xs[i]), float(ys[j + 1])),
        )
        samples = (
            float(values[i, j]),
            float(values[i + 1, j]),
            float(values[i + 1, j + 1]),
            float(values[i, j + 1]),
        )
        signs = [s > 0 for s in samples]
        crossing = [e for e, (a, b) in enumerate(_EDGES) if signs[a] != signs[b]]
        points = {
            e: _lerp(corners[_EDGES[e][0]], corners[_EDGES[e][1]], samples[_EDGES[e][0]], samples[_EDGES[e][1]])
            for e in crossing
        }
        if len(crossing) == 2:
            segments.append((points[crossing[0]], points[crossing[1]]))
            continue
        # saddle: decide whether corner 0 connects to corner 2 through the center
        center = field(np.array([(xs[i] + xs[i + 1]) / 2]), np.array([(ys[j] + ys[j + 1]) / 2]))
        if (float(center[0]) > 0) == signs[0]:
            pairs = ((0, 1), (2, 3))
        else:
            pairs = ((3, 0), (1, 2))
        segments.extend((points[a], points[b]) for a, b in pairs)
    return segments
