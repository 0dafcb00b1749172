from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import structlog

from src import Loggers
from src.polarmaps.algebra.grobner import DEFAULT_LIMITS, GroebnerLimits
from src.polarmaps.algebra.polycore import Poly, ProjPoint, multi_indices
from src.polarmaps.curves import flexes
from src.polarmaps.errors import DimensionError, ParseError, PolarMapsError
from src.polarmaps.geometry import (
    DEFAULT_SAMPLING,
    SamplingPolicy,
    image_degree_formula,
    implicitize_polar_image,
    is_cone,
    polar_class,
    polar_image_dimension,
    polar_regularity,
    regularity_profile,
    verify_image_degree,
)
from src.polarmaps.geometry.regularity import RegularityReport
from src.polarmaps.polar import euler_identity_check, polar_cycle, reciprocity_sides
from src.polarmaps.presentation.cli.jobs import Command, ErrorPayload, JobSpec, OutputFormat, Report, Timing, render
from src.polarmaps.presentation.cli.parser import parse_poly
from src.polarmaps.presentation.plot import DEFAULT_PLOT, PlotPolicy, emit_plot, to_csv, to_svg

logger = structlog.getLogger(Loggers.jobs.name)

PUSHFORWARD_NOTE = "bezout_count is the pushforward degree, counted with multiplicity; it is not divided by deg(g^p)"
IRREDUCIBLE_NOTE = "the minor test assumes F irreducible; irreducibility was not checked"
PLOT_NOTE = "plot coordinates are sampled in floating point and approximate"


def monomial_label(alpha: tuple[int, ...]) -> str:
    return "*".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(alpha) if a) or "1"


def parse_point(text: str, num_vars: int) -> ProjPoint:
    values: list[Fraction] = []
    offset = 0
    for piece in text.split(","):
        try:
            values.append(Fraction(piece.strip()))
        except (ValueError, ZeroDivisionError) as error:
            raise ParseError(f"bad coordinate {piece.strip()!r}", offset) from error
        offset += len(piece.encode()) + 1
    if len(values) != num_vars:
        raise DimensionError("point dimension does not match", num_vars=num_vars, point=text)
    return ProjPoint(values)


def parse_window(text: str) -> tuple[float, float, float, float]:
    try:
        xmin, xmax, ymin, ymax = (float(v) for v in text.split(","))
    except ValueError as error:
        raise ParseError("window must be xmin,xmax,ymin,ymax", 0) from error
    if not (xmin < xmax and ymin < ymax):
        raise ParseError("window bounds must be increasing", 0)
    return (xmin, xmax, ymin, ymax)


def _regularity_payload(report: RegularityReport) -> dict[str, Any]:
    return {
        "p": report.p,
        "regular": report.regular,
        "witness": report.certificate.witness,
        "base_locus": [str(g) for g in report.base_locus_ideal.generators],
    }


@dataclass(slots=True)
class Outcome:
    result: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    artifact: str | None = None


class JobRunner:
    """Dispatches one JobSpec to the library and wraps the answer in a Report."""

    def __init__(
        self,
        limits: GroebnerLimits = DEFAULT_LIMITS,
        sampling: SamplingPolicy = DEFAULT_SAMPLING,
        plot: PlotPolicy = DEFAULT_PLOT,
    ) -> None:
        self.limits = limits
        self.sampling = sampling
        self.plot = plot
        self._handlers: dict[Command, Callable[[JobSpec], Outcome]] = {
            Command.POLAR: self._polar,
            Command.EULER: self._euler,
            Command.RECIPROCITY: self._reciprocity,
            Command.REGULARITY: self._regularity,
            Command.CONE: self._cone,
            Command.IMAGE_DEGREE: self._image_degree,
            Command.IMAGE_DIM: self._image_dim,
            Command.CLASS: self._class,
            Command.FLEXES: self._flexes,
            Command.IMPLICITIZE: self._implicitize,
            Command.PLOT: self._plot,
        }

    def run(self, job: JobSpec) -> Report:
        started = time.perf_counter_ns()
        try:
            outcome = self._handlers[job.command](job)
        except PolarMapsError as error:
            return Report(
                command=str(job.command),
                job=job.echo(),
                error=ErrorPayload(
                    kind=error.error_kind,
                    message=error.message,
                    exit_status=error.exit_status,
                    context=render(dict(error.context)),
                ),
                timing=self._timing(started),
            )
        except Exception as error:
            logger.exception("Unexpected failure", command=str(job.command))
            return Report(
                command=str(job.command),
                job=job.echo(),
                error=ErrorPayload(kind="unexpected", message=str(error), exit_status=1),
                timing=self._timing(started),
            )
        return Report(
            command=str(job.command),
            job=job.echo(),
            result=render(outcome.result),
            warnings=outcome.warnings,
            timing=self._timing(started),
            artifact=outcome.artifact,
        )

    @staticmethod
    def _timing(started: int) -> Timing:
        return Timing(elapsed_us=(time.perf_counter_ns() - started) // 1_000)

    @staticmethod
    def _poly(job: JobSpec) -> Poly:
        return parse_poly(job.poly or "", job.num_vars)

    def _polar(self, job: JobSpec) -> Outcome:
        f = self._poly(job)
        cycle = polar_cycle(f, job.k, parse_point(job.point, f.num_vars))
        return Outcome(
            {
                "k": cycle.degree,
                "base_point": cycle.base_point,
                "form": cycle.form,
                "raw_form": cycle.raw_form,
                "chow": {
                    "ambient_dim": cycle.chow.ambient_dim,
                    "degree": cycle.chow.degree,
                    "coords": cycle.chow.coords,
                },
                "chow_index_order": [monomial_label(a) for a in multi_indices(f.num_vars, cycle.degree)],
            }
        )

    def _euler(self, job: JobSpec) -> Outcome:
        check = euler_identity_check(self._poly(job), job.s)
        return Outcome({"s": job.s, "holds": check.holds, "lhs": check.lhs, "rhs": check.rhs})

    def _reciprocity(self, job: JobSpec) -> Outcome:
        sides = reciprocity_sides(self._poly(job), job.s)
        return Outcome({"s": job.s, "holds": sides.holds, "lhs_terms": len(sides.lhs), "rhs_terms": len(sides.rhs)})

    def _regularity(self, job: JobSpec) -> Outcome:
        f = self._poly(job)
        if job.p is not None:
            return Outcome(_regularity_payload(polar_regularity(f, job.p, self.limits)))
        return Outcome({"profile": [_regularity_payload(r) for r in regularity_profile(f, self.limits)]})

    def _cone(self, job: JobSpec) -> Outcome:
        report = is_cone(self._poly(job))
        return Outcome(
            {
                "is_cone": report.is_cone,
                "vertex_dimension": report.vertex_dimension,
                "vertex_space": [v.primitive() for v in report.vertex_space],
            }
        )

    def _image_degree(self, job: JobSpec) -> Outcome:
        if job.poly is None:
            return Outcome({"d": job.d, "p": job.p, "n": job.n, "formula": image_degree_formula(job.d, job.p, job.n)})
        seed = job.seed if job.seed is not None else self.sampling.seed
        check = verify_image_degree(self._poly(job), job.p, seed, self.sampling, self.limits)
        return Outcome(
            {
                "p": job.p,
                "seed": seed,
                "bezout_count": check.bezout_count,
                "formula": check.formula,
                "agree": check.agree,
                "attempts": check.attempts,
                "slices": check.slices,
            },
            warnings=[PUSHFORWARD_NOTE],
        )

    def _image_dim(self, job: JobSpec) -> Outcome:
        dimension = polar_image_dimension(self._poly(job), job.p)
        return Outcome({"p": job.p, "dimension": dimension}, warnings=[IRREDUCIBLE_NOTE])

    def _class(self, job: JobSpec) -> Outcome:
        report = polar_class(self._poly(job), job.p)
        return Outcome({"p": report.p, "class_coeff": report.class_coeff, "ratio_to_gauss": report.ratio_to_gauss})

    def _flexes(self, job: JobSpec) -> Outcome:
        seed = job.seed if job.seed is not None else self.sampling.seed
        report = flexes(self._poly(job), seed, self.sampling, self.limits)
        return Outcome(
            {
                "d": report.d,
                "seed": seed,
                "resultant_degree": report.resultant_degree,
                "count_with_multiplicity": report.count_with_multiplicity,
                "expected": report.expected,
                "squarefree_degree": report.squarefree_degree,
                "rational_flexes": [point.primitive() for point in report.rational_flexes],
                "coordinate_change": report.coordinate_change,
                "attempts": report.attempts,
            }
        )

    def _implicitize(self, job: JobSpec) -> Outcome:
        f = self._poly(job)
        image = implicitize_polar_image(f, job.p, self.limits)
        return Outcome(
            {
                "p": job.p,
                "coordinates": {f"x{i}": monomial_label(a) for i, a in enumerate(multi_indices(f.num_vars, job.p))},
                "generators": list(image.generators),
            }
        )

    def _plot(self, job: JobSpec) -> Outcome:
        f = self._poly(job)
        policy = PlotPolicy(
            resolution=job.resolution or self.plot.resolution,
            chart=self.plot.chart if job.chart is None else job.chart,
            margin=self.plot.margin,
        )
        points = [parse_point(text, f.num_vars) for text in job.points]
        window = parse_window(job.window) if job.window else None
        plot = emit_plot(f, points, policy, window)
        artifact = None
        if job.output == OutputFormat.CSV:
            artifact = to_csv(plot)
        elif job.output == OutputFormat.SVG:
            artifact = to_svg(plot)
        return Outcome(
            {
                "chart": plot.chart,
                "resolution": plot.resolution,
                "window": plot.window,
                "objects": [
                    {"object_id": o.object_id, "form": o.form, "segments": len(o.segments)} for o in plot.objects
                ],
                "base_points": plot.base_points,
            },
            warnings=[PLOT_NOTE],
            artifact=artifact,
        )
