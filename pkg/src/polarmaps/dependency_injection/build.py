from typing import Any

from dishka import AsyncContainer, make_async_container
from dishka.provider import BaseProvider

from src.polarmaps.dependency_injection.configuration import ConfigurationProvider
from src.polarmaps.dependency_injection.engines import EngineProvider


def build_container(context: dict[Any, Any] | None = None, *providers: BaseProvider) -> AsyncContainer:
    """
    Configure the application DI container.

    Returns:
        AsyncContainer: the ready dependency container.
    """
    container: AsyncContainer = make_async_container(
        ConfigurationProvider(), EngineProvider(), *providers, context=context
    )

    return container
