"""CSV and SVG renderings of traced plots. Coordinates are floats and approximate."""

from __future__ import annotations

import csv
import io
from html import escape

from src.polarmaps.presentation.plot.emit import PlotData

CSV_HEADER = ("object_id", "x", "y", "segment_id")

_SVG_SIZE = 600
_COLORS = ("#000000", "#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e")


def _number(value: float) -> str:
    return format(value, ".9g")


def to_csv(plot: PlotData) -> str:
    """One row per segment endpoint; both endpoints of a segment share its segment_id."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    segment_id = 0
    for item in plot.objects:
        for start, end in item.segments:
            for x, y in (start, end):
                writer.writerow((item.object_id, _number(x), _number(y), segment_id))
            segment_id += 1
    return buffer.getvalue()


def to_svg(plot: PlotData) -> str:
    xmin, xmax, ymin, ymax = plot.window
    scale_x = _SVG_SIZE / (xmax - xmin)
    scale_y = _SVG_SIZE / (ymax - ymin)

    def screen(x: float, y: float) -> str:
        return f"{_number((x - xmin) * scale_x)} {_number((ymax - y) * scale_y)}"

    u, v = plot.axes
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg width="{_SVG_SIZE}" height="{_SVG_SIZE}" viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}" '
        'version="1.1" xmlns="http://www.w3.org/2000/svg">',
        f"  <title>chart x{plot.chart} = 1, axes x{u} (right) and x{v} (up)</title>",
        "  <desc>Contours traced by marching squares on a float grid; approximate.</desc>",
        f'  <rect x="0" y="0" width="{_SVG_SIZE}" height="{_SVG_SIZE}" fill="#ffffff" />',
    ]
    for index, item in enumerate(plot.objects):
        color = _COLORS[index % len(_COLORS)]
        width = 2 if item.object_id == "curve" else 1
        path = "".join(f"M{screen(*start)}L{screen(*end)}" for start, end in item.segments)
        lines.append(f'  <g id="{escape(item.object_id)}">')
        lines.append(f"    <title>{escape(str(item.form))}</title>")
        if path:
            lines.append(f'    <path d="{path}" stroke="{color}" stroke-width="{width}" fill="none" />')
        lines.append("  </g>")
    for point in plot.base_points:
        affine = plot.affine(point)
        if affine is None:
            continue
        cx, cy = screen(*affine).split()
        lines.append(f'  <circle cx="{cx}" cy="{cy}" r="4" fill="#c0392b"><title>{escape(str(point))}</title></circle>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
