from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import numpy.typing as npt
import structlog

from src import Loggers
from src.polarmaps.algebra.polycore import Poly, ProjPoint
from src.polarmaps.errors import DimensionError, PreconditionError, RangeError
from src.polarmaps.polar import polar_cycle
from src.polarmaps.presentation.plot.marching_squares import Field, Segment, trace_zero_set

logger = structlog.getLogger(Loggers.main.name)

type Window = tuple[float, float, float, float]

_FIT_WINDOW: Window = (-10.0, 10.0, -10.0, 10.0)
_FIT_RESOLUTION = 100
_FALLBACK_WINDOW: Window = (-1.0, 1.0, -1.0, 1.0)


@dataclass(frozen=True, slots=True)
class PlotPolicy:
    resolution: int = 200
    chart: int = 2
    margin: Fraction = Fraction(1, 10)


DEFAULT_PLOT = PlotPolicy()


@dataclass(frozen=True, slots=True)
class PlotObject:
    object_id: str
    form: Poly
    segments: tuple[Segment, ...]


@dataclass(frozen=True, slots=True)
class PlotData:
    """Contour segments of a plane curve and of its osculating conics in one affine chart."""

    chart: int
    axes: tuple[int, int]
    window: Window
    resolution: int
    objects: tuple[PlotObject, ...]
    base_points: tuple[ProjPoint, ...] = field(default_factory=tuple)

    def affine(self, point: ProjPoint) -> tuple[float, float] | None:
        """Chart coordinates of a point; None on the line at infinity of the chart."""
        w = point.coords[self.chart]
        if not w:
            return None
        return (float(point.coords[self.axes[0]] / w), float(point.coords[self.axes[1]] / w))


def chart_field(form: Poly, chart: int) -> Field:
    """Float evaluator of form restricted to x_chart = 1, in the two remaining coordinates."""
    axes = [i for i in range(3) if i != chart]
    terms = [(float(c), alpha[axes[0]], alpha[axes[1]]) for alpha, c in form.terms.items()]

    def evaluate(u: npt.NDArray[np.float64], v: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        total = np.zeros_like(u, dtype=float)
        for c, a, b in terms:
            total += c * u**a * v**b
        return total

    return evaluate


def _fit_window(form: Poly, chart: int, margin: Fraction, extra: Sequence[tuple[float, float]]) -> Window:
    segments = trace_zero_set(chart_field(form, chart), _FIT_WINDOW, _FIT_RESOLUTION)
    xs = [p[0] for s in segments for p in s] + [p[0] for p in extra]
    ys = [p[1] for s in segments for p in s] + [p[1] for p in extra]
    if not xs:
        return _FALLBACK_WINDOW
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    pad_x = float(margin) * (xmax - xmin) or 1.0
    pad_y = float(margin) * (ymax - ymin) or 1.0
    return (xmin - pad_x, xmax + pad_x, ymin - pad_y, ymax + pad_y)


def emit_plot(
    f: Poly,
    points: Sequence[ProjPoint],
    policy: PlotPolicy = DEFAULT_PLOT,
    window: Window | None = None,
) -> PlotData:
    """
    Trace a plane curve and the degree-2 polar cycle (osculating conic) at each point.

    Raises:
        DimensionError: F is not a ternary form.
        RangeError: Bad chart or resolution.
        PreconditionError: A point is not on the curve or the conic is undefined there.
    """
    if f.num_vars != 3:
        raise DimensionError("plots need a plane curve", num_vars=f.num_vars)
    if not 0 <= policy.chart <= 2:
        raise RangeError("chart must be 0, 1 or 2", chart=policy.chart)
    if policy.resolution < 1:
        raise RangeError("resolution must be positive", resolution=policy.resolution)

    objects_forms: list[tuple[str, Poly]] = [("curve", f)]
    for index, point in enumerate(points):
        if f.evaluate(point.coords):
            raise PreconditionError("point is not on the curve", point=str(point))
        cycle = polar_cycle(f, 2, point)
        objects_forms.append((f"conic_{index}", cycle.form))

    axes = (0, 1, 2)[: policy.chart] + (0, 1, 2)[policy.chart + 1 :]
    draft = PlotData(policy.chart, (axes[0], axes[1]), _FALLBACK_WINDOW, policy.resolution, (), tuple(points))
    anchors = [a for a in (draft.affine(p) for p in points) if a is not None]
    if window is None:
        window = _fit_window(f, policy.chart, policy.margin, anchors)

    objects = tuple(
        PlotObject(object_id, form, tuple(trace_zero_set(chart_field(form, policy.chart), window, policy.resolution)))
        for object_id, form in objects_forms
    )
    logger.debug("Plot traced", window=window, objects=len(objects), segments=sum(len(o.segments) for o in objects))
    return PlotData(policy.chart, draft.axes, window, policy.resolution, objects, tuple(points))
