import uuid
from collections.abc import Awaitable, Callable
from typing import Any

import structlog

from src import Loggers
from src.polarmaps.presentation.cli.jobs import JobSpec, Report

logger = structlog.getLogger(Loggers.jobs.name)


class LoggingMiddleware:
    """Middleware for logging every job that passes through the runner."""

    async def __call__(
        self,
        handler: Callable[[JobSpec], Awaitable[Report]],
        job: JobSpec,
    ) -> Report:
        with structlog.contextvars.bound_contextvars(_trace=uuid.uuid4().hex):
            log_params: dict[str, Any] = {"command": str(job.command)}
            if job.poly is not None:
                log_params["poly"] = job.poly
            if job.seed is not None:
                log_params["seed"] = job.seed

            await logger.ainfo("Request `Job`", **log_params)

            report = await handler(job)

            if report.error is None:
                await logger.ainfo("Job complete", elapsed_us=report.timing.elapsed_us, **log_params)
            elif report.error.kind == "unexpected":
                await logger.aerror("Job crashed", _error=report.error.message, **log_params)
            else:
                await logger.awarning(
                    "Job rejected",
                    kind=report.error.kind,
                    exit_status=report.error.exit_status,
                    _error=report.error.message,
                    **log_params,
                )

            return report
