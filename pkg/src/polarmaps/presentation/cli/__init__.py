from .arguments import build_parser, job_from_mapping, parse_invocation, read_jobs
from .jobs import Command, ErrorPayload, JobSpec, OutputFormat, Report, render
from .parser import parse_poly, tokenize
from .runner import JobRunner, parse_point

__all__ = [
    "Command",
    "ErrorPayload",
    "JobRunner",
    "JobSpec",
    "OutputFormat",
    "Report",
    "build_parser",
    "job_from_mapping",
    "parse_invocation",
    "parse_point",
    "parse_poly",
    "read_jobs",
    "render",
    "tokenize",
]
