import asyncio
import sys
from collections.abc import Sequence

import structlog
from dishka import Provider, Scope, provide

from src import Configuration, Loggers
from src.polarmaps.dependency_injection import build_container
from src.polarmaps.infrastructure.bootstrap import PolarMapsApplication

logger = structlog.getLogger(Loggers.main.name)


class PolarMapsProvider(Provider):
    app = provide(PolarMapsApplication, scope=Scope.APP)


async def main(argv: Sequence[str] | None = None) -> int:
    config = Configuration()
    Loggers(developer_mode=config.is_development)

    container = build_container({Configuration: config}, PolarMapsProvider())
    application = await container.get(PolarMapsApplication)

    try:
        await logger.adebug("Starting application....")
        return await application.run(argv)
    finally:
        await application.close()
        await container.close()


def cli() -> None:
    sys.exit(asyncio.run(main()))


if __name__ == "__main__":
    cli()
