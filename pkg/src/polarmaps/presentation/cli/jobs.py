from __future__ import annotations

import json
import math
from collections.abc import Mapping
from enum import Enum, StrEnum
from fractions import Fraction
from typing import Any, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.polarmaps.algebra.polycore import Poly, ProjPoint

SCHEMA_VERSION = "1"


class Command(StrEnum):
    POLAR = "polar"
    EULER = "euler"
    RECIPROCITY = "reciprocity"
    REGULARITY = "regularity"
    CONE = "cone"
    IMAGE_DEGREE = "image-degree"
    IMAGE_DIM = "image-dim"
    CLASS = "class"
    FLEXES = "flexes"
    IMPLICITIZE = "implicitize"
    PLOT = "plot"


class OutputFormat(StrEnum):
    JSON = "json"
    TEXT = "text"
    CSV = "csv"
    SVG = "svg"


_REQUIRED: dict[Command, tuple[str, ...]] = {
    Command.POLAR: ("poly", "k", "point"),
    Command.EULER: ("poly", "s"),
    Command.RECIPROCITY: ("poly", "s"),
    Command.REGULARITY: ("poly",),
    Command.CONE: ("poly",),
    Command.IMAGE_DEGREE: ("p",),
    Command.IMAGE_DIM: ("poly", "p"),
    Command.CLASS: ("poly", "p"),
    Command.FLEXES: ("poly",),
    Command.IMPLICITIZE: ("poly", "p"),
    Command.PLOT: ("poly",),
}


class JobSpec(BaseModel):
    """
    One analysis request, as given on the command line or as one line of a jobs file.

    `vars` fixes the number of variables x0..x(vars-1); without it the ring is
    inferred from the highest variable index in `poly`.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    command: Command
    poly: str | None = Field(default=None, description="Polynomial in the x0..xn grammar")
    num_vars: int | None = Field(default=None, alias="vars", ge=1)
    k: int | None = Field(default=None, ge=0)
    p: int | None = Field(default=None, ge=0)
    s: int | None = Field(default=None, ge=0)
    point: str | None = Field(default=None, description="Comma separated rational coordinates")
    points: list[str] = Field(default_factory=list, description="Base points of a plot")
    seed: int | None = None
    d: int | None = Field(default=None, ge=0)
    n: int | None = Field(default=None, ge=0)
    resolution: int | None = Field(default=None, ge=1)
    chart: int | None = Field(default=None, ge=0, le=2)
    window: str | None = Field(default=None, description="xmin,xmax,ymin,ymax")
    output: OutputFormat = Field(default=OutputFormat.JSON, alias="format")

    @model_validator(mode="after")
    def _check_parameters(self) -> Self:
        missing = [name for name in _REQUIRED[self.command] if getattr(self, name) is None]
        if self.command == Command.IMAGE_DEGREE and self.poly is None and (self.d is None or self.n is None):
            missing.append("poly or d and n")
        if missing:
            raise ValueError(f"{self.command} needs {', '.join(missing)}")
        if self.output in {OutputFormat.CSV, OutputFormat.SVG} and self.command != Command.PLOT:
            raise ValueError(f"{self.output} output is only available for plot")
        return self

    def echo(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True, exclude_none=True, exclude_defaults=True)


def render(value: Any) -> Any:
    """Exact JSON rendering: rationals become integers or "a/b" strings, finite floats stay numbers."""
    match value:
        case bool() | int() | str() | None:
            return value
        case Enum():
            return value.value
        case Fraction():
            return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        case float() if math.isfinite(value):
            return float(value)
        case float():
            return str(value)
        case Poly():
            return str(value)
        case ProjPoint():
            return [render(c) for c in value.coords]
        case Mapping():
            return {str(key): render(item) for key, item in value.items()}
        case list() | tuple() | set() | frozenset():
            return [render(item) for item in value]
    return str(value)


class ErrorPayload(BaseModel):
    kind: str
    message: str
    exit_status: int
    context: dict[str, Any] = Field(default_factory=dict)


class Timing(BaseModel):
    elapsed_us: int = 0


class Report(BaseModel):
    schema_version: Literal["1"] = SCHEMA_VERSION
    command: str
    job: dict[str, Any]
    result: dict[str, Any] | None = None
    warnings: list[str] = Field(default_factory=list)
    error: ErrorPayload | None = None
    timing: Timing = Field(default_factory=Timing)
    artifact: str | None = Field(default=None, exclude=True)

    @property
    def exit_status(self) -> int:
        return self.error.exit_status if self.error else 0

    def to_json(self) -> str:
        return self.model_dump_json()

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.error:
            lines.append(f"error: {self.error.kind}: {self.error.message}")
        for key, value in (self.result or {}).items():
            shown = value if isinstance(value, str | int) else json.dumps(value)
            lines.append(f"{key}: {shown}")
        lines.extend(f"warning: {warning}" for warning in self.warnings)
        lines.append(f"elapsed_us: {self.timing.elapsed_us}")
        return "\n".join(lines)

    def render_output(self, output: OutputFormat) -> str:
        match output:
            case OutputFormat.TEXT:
                return self.to_text() + "\n"
            case OutputFormat.CSV | OutputFormat.SVG if self.artifact is not None:
                return self.artifact
        return self.to_json() + "\n"
