from dishka import Provider, Scope, provide

from src.config.configuration import LimitsSettings, PlotSettings, SamplingSettings
from src.polarmaps.algebra.grobner import GroebnerLimits
from src.polarmaps.geometry import SamplingPolicy
from src.polarmaps.presentation.cli.runner import JobRunner
from src.polarmaps.presentation.plot import PlotPolicy


class EngineProvider(Provider):
    """Turns configuration sections into the policies the exact engines take."""

    scope = Scope.APP

    @provide
    def limits(self, settings: LimitsSettings) -> GroebnerLimits:
        return GroebnerLimits(
            step_limit=settings.step_limit,
            max_basis_size=settings.max_basis_size,
            hilbert_extra_degrees=settings.hilbert_extra_degrees,
        )

    @provide
    def sampling(self, settings: SamplingSettings) -> SamplingPolicy:
        return SamplingPolicy(
            seed=settings.seed,
            slice_coefficient_bound=settings.slice_coefficient_bound,
            slice_retries=settings.slice_retries,
            coordinate_entry_bound=settings.coordinate_entry_bound,
            coordinate_retries=settings.coordinate_retries,
        )

    @provide
    def plot(self, settings: PlotSettings) -> PlotPolicy:
        return PlotPolicy(resolution=settings.resolution, chart=settings.chart, margin=settings.margin_fraction)

    runner = provide(JobRunner)
