import asyncio
import os
import sys
import tempfile
from collections.abc import Callable, Sequence
from pathlib import Path

import structlog

from src import Loggers
from src.config.configuration import BatchSettings
from src.polarmaps.presentation.cli.arguments import parse_invocation, read_jobs
from src.polarmaps.presentation.cli.jobs import JobSpec, Report
from src.polarmaps.presentation.cli.middlewares.logging_middleware import LoggingMiddleware
from src.polarmaps.presentation.cli.runner import JobRunner

logger = structlog.getLogger(Loggers.main.name)

type ReportHandler = Callable[[int, Report], None]


def write_atomic(path: Path, text: str) -> None:
    """Write through a temporary file in the same directory, then rename over the target."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, temporary = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        Path(temporary).replace(path)
    except BaseException:
        Path(temporary).unlink(missing_ok=True)
        raise


class BatchSink:
    """
    Writes batch reports as they are handed over, one JSON line each.

    With an output file every report rewrites it atomically, so the file always
    holds a complete prefix of the batch. Plot artifacts go next to the output
    file (or the jobs file) as `<stem>.<index>.<format>`; the report names the
    artifact under `result.artifact_file`.
    """

    def __init__(self, jobs: Sequence[JobSpec | Report], out: Path | None, jobs_file: Path) -> None:
        self.jobs = jobs
        self.out = out
        self.anchor = out if out is not None else jobs_file
        self.lines: list[str] = []

    def artifact_path(self, index: int, job: JobSpec) -> Path:
        return self.anchor.with_name(f"{self.anchor.stem}.{index}.{job.output.value}")

    def open(self) -> None:
        if self.out is not None:
            write_atomic(self.out, "")

    def __call__(self, index: int, report: Report) -> None:
        job = self.jobs[index]
        if report.artifact is not None and isinstance(job, JobSpec):
            path = self.artifact_path(index, job)
            write_atomic(path, report.artifact)
            report = report.model_copy(update={"result": {**(report.result or {}), "artifact_file": path.name}})
        line = report.to_json() + "\n"
        if self.out is None:
            sys.stdout.write(line)
            sys.stdout.flush()
            return
        self.lines.append(line)
        write_atomic(self.out, "".join(self.lines))
        logger.debug("Batch report written", index=index, written=len(self.lines), total=len(self.jobs))


class PolarMapsApplication:
    def __init__(self, batch: BatchSettings, runner: JobRunner) -> None:
        self.batch = batch
        self.runner = runner
        self.middleware = LoggingMiddleware()
        self._semaphore = asyncio.Semaphore(batch.concurrency)

    async def _execute(self, job: JobSpec) -> Report:
        return await asyncio.to_thread(self.runner.run, job)

    async def submit(self, job: JobSpec | Report) -> Report:
        """Run one job through the middleware; already rejected jobs pass straight through."""
        if isinstance(job, Report):
            await logger.awarning("Job rejected before dispatch", _error=job.error.message if job.error else None)
            return job
        return await self.middleware(self._execute, job)

    async def _bounded(self, job: JobSpec | Report) -> Report:
        async with self._semaphore:
            return await self.submit(job)

    async def run_batch(self, jobs: Sequence[JobSpec | Report], on_report: ReportHandler | None = None) -> list[Report]:
        """
        Run the jobs with bounded concurrency; reports come back in input order.

        `on_report` sees each report once it and every earlier job have
        finished, so a slow job holds back only the reports after it.
        """
        tasks = [asyncio.create_task(self._bounded(job)) for job in jobs]
        reports: list[Report] = []
        try:
            for index, task in enumerate(tasks):
                report = await task
                if on_report is not None:
                    on_report(index, report)
                reports.append(report)
        finally:
            for task in tasks:
                task.cancel()
        return reports

    async def run(self, argv: Sequence[str] | None = None) -> int:
        invocation = parse_invocation(argv)
        if invocation.jobs_file is not None:
            await logger.ainfo("Launched...", mode="batch", jobs=str(invocation.jobs_file))
            jobs = list(read_jobs(invocation.jobs_file))
            sink = BatchSink(jobs, invocation.out, invocation.jobs_file)
            sink.open()
            reports = await self.run_batch(jobs, sink)
            return max((report.exit_status for report in reports), default=0)

        await logger.ainfo("Launched...", mode="single")
        report = await self.submit(invocation.job)
        text = report.render_output(invocation.output)
        if invocation.out is not None:
            write_atomic(invocation.out, text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
        return report.exit_status

    async def close(self) -> None:
        await logger.ainfo("Application closed")
