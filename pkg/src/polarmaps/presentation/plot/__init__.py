from .emit import DEFAULT_PLOT, PlotData, PlotObject, PlotPolicy, chart_field, emit_plot
from .export import CSV_HEADER, to_csv, to_svg
from .marching_squares import trace_zero_set

__all__ = [
    "CSV_HEADER",
    "DEFAULT_PLOT",
    "PlotData",
    "PlotObject",
    "PlotPolicy",
    "chart_field",
    "emit_plot",
    "to_csv",
    "to_svg",
    "trace_zero_set",
]
