from dishka import Provider, Scope, from_context, provide

from src import Configuration
from src.config.configuration import BatchSettings, LimitsSettings, PlotSettings, SamplingSettings


class ConfigurationProvider(Provider):
    """
    Provides the configuration passed in as context and each of its sections.

    Components depend on the section they read, so a test can override one
    section without building a whole `Configuration`.
    """

    scope = Scope.APP

    config = from_context(provides=Configuration, scope=Scope.APP)

    @provide
    def limits(self, config: Configuration) -> LimitsSettings:
        return config.limits

    @provide
    def sampling(self, config: Configuration) -> SamplingSettings:
        return config.sampling

    @provide
    def batch(self, config: Configuration) -> BatchSettings:
        return config.batch

    @provide
    def plot(self, config: Configuration) -> PlotSettings:
        return config.plot
