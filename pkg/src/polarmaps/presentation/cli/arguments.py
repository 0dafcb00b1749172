from __future__ import annotations

import argparse
import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from pathlib import Path

from pydantic import ValidationError

from src.polarmaps.presentation.cli.jobs import Command, ErrorPayload, JobSpec, OutputFormat, Report

PARSE_EXIT_STATUS = 2

_JOB_FLAGS = ("poly", "vars", "k", "p", "s", "point", "points", "seed", "d", "n", "resolution", "chart", "window")


@dataclass(frozen=True, slots=True)
class Invocation:
    """What the command line asked for: either one job, or a jobs file to run in batch."""

    job: JobSpec | Report | None
    jobs_file: Path | None
    out: Path | None
    output: OutputFormat


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarmaps",
        description="Exact polar maps of projective hypersurfaces.",
    )
    parser.add_argument("command", nargs="?", choices=[c.value for c in Command], help="Analysis to run")
    parser.add_argument("--poly", help='Homogeneous polynomial, e.g. "x2*x1^2 - x0^3 - x0^2*x2"')
    parser.add_argument("--vars", type=int, help="Number of variables n+1 (default: highest index seen + 1)")
    parser.add_argument("--k", type=int, help="Polar degree k for `polar`")
    parser.add_argument("--p", type=int, help="Polar order p")
    parser.add_argument("--s", type=int, help="Order s of Euler and reciprocity checks")
    parser.add_argument("--point", help="Projective point as comma separated rationals, e.g. 3,6,1")
    parser.add_argument("--points", action="append", default=[], help="Base point of a plot (repeatable)")
    parser.add_argument("--seed", type=int, help="Seed of the randomized certificates")
    parser.add_argument("--d", type=int, help="Degree, for the closed-form image degree")
    parser.add_argument("--n", type=int, help="Projective dimension, for the closed-form image degree")
    parser.add_argument("--resolution", type=int, help="Plot grid cells per side")
    parser.add_argument("--chart", type=int, help="Affine chart x_i = 1 of a plot")
    parser.add_argument("--window", help="Plot window xmin,xmax,ymin,ymax")
    parser.add_argument(
        "--format",
        dest="output",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Report format",
    )
    parser.add_argument("--out", type=Path, help="Write the report to this path instead of stdout")
    parser.add_argument("--jobs", type=Path, help="Run every JSON job of this file, one per line")
    return parser


def rejected(command: str, job: dict[str, object], message: str, **context: object) -> Report:
    return Report(
        command=command,
        job=job,
        error=ErrorPayload(kind="parse", message=message, exit_status=PARSE_EXIT_STATUS, context=dict(context)),
    )


def _validation_message(error: ValidationError) -> str:
    return "; ".join(f"{'.'.join(map(str, e['loc'])) or 'job'}: {e['msg']}" for e in error.errors())


def job_from_mapping(data: object) -> JobSpec | Report:
    """Validate one job; a rejected job comes back as a parse-error Report."""
    if not isinstance(data, dict):
        return rejected("", {}, "a job must be a JSON object")
    try:
        return JobSpec.model_validate(data)
    except ValidationError as error:
        return rejected(str(data.get("command", "")), data, _validation_message(error))


def job_from_args(args: argparse.Namespace) -> JobSpec | Report:
    data: dict[str, object] = {"command": args.command, "format": args.output}
    for name in _JOB_FLAGS:
        value = getattr(args, name)
        if value is not None and value != []:
            data[name] = value
    return job_from_mapping(data)


def read_jobs(path: Path) -> Iterator[JobSpec | Report]:
    """JSON lines, one job per line; blank lines are skipped."""
    with path.open(encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as error:
                yield rejected("", {}, f"line {number}: {error.msg}", line=number, position=error.pos)
                continue
            yield job_from_mapping(data)


def parse_invocation(argv: Sequence[str] | None = None) -> Invocation:
    parser = build_parser()
    args = parser.parse_args(argv)
    output = OutputFormat(args.output)
    if args.jobs is not None:
        if args.command is not None:
            parser.error("--jobs replaces the command")
        return Invocation(job=None, jobs_file=args.jobs, out=args.out, output=output)
    if args.command is None:
        parser.error("a command or --jobs FILE is required")
    return Invocation(job=job_from_args(args), jobs_file=None, out=args.out, output=output)
