from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Environment(StrEnum):
    DEVELOPMENT = "development"
    STAGING = "staging"
    PRODUCTION = "production"


class LimitsSettings(BaseModel):
    """
    Resource limits of the Gröbner engine.

    Every limit is explicit: exceeding one raises a typed resource error
    instead of running unbounded.
    """

    step_limit: int = Field(default=50_000, description="S-pair reductions per Buchberger call", ge=1)
    max_basis_size: int = Field(default=5_000, description="Largest intermediate basis", ge=1)
    hilbert_extra_degrees: int = Field(
        default=12,
        description="Degrees past the regularity bound tried before the Hilbert function is declared unstable",
        ge=1,
    )


class SamplingSettings(BaseModel):
    seed: int = Field(default=1729, description="Seed used when a job does not pass one")
    slice_coefficient_bound: int = Field(default=10, description="Random slice coefficients lie in [-b, b]", ge=1)
    slice_retries: int = Field(default=5, description="Re-draws of a degenerate slice", ge=0)
    coordinate_entry_bound: int = Field(default=5, description="Entries of random coordinate changes", ge=1)
    coordinate_retries: int = Field(default=5, description="Re-draws of a bad coordinate change", ge=0)


class BatchSettings(BaseModel):
    concurrency: int = Field(default=4, description="Jobs executed at the same time in batch mode", ge=1)


class PlotSettings(BaseModel):
    resolution: int = Field(default=200, description="Grid cells per side", ge=1)
    chart: int = Field(default=2, description="Affine chart x_chart = 1", ge=0, le=2)
    margin: str = Field(default="1/10", description="Relative margin around the fitted window")

    @property
    def margin_fraction(self) -> Fraction:
        return Fraction(self.margin)


class Configuration(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="POLARMAPS_", env_file=".env", env_file_encoding="utf-8", env_nested_delimiter="__"
    )
    environment: Environment = Field(default=Environment.DEVELOPMENT, alias="ENV")

    limits: LimitsSettings = Field(default_factory=LimitsSettings)
    sampling: SamplingSettings = Field(default_factory=SamplingSettings)
    batch: BatchSettings = Field(default_factory=BatchSettings)
    plot: PlotSettings = Field(default_factory=PlotSettings)

    @property
    def is_production(self) -> bool:
        return self.environment == Environment.PRODUCTION

    @property
    def is_development(self) -> bool:
        return self.environment == Environment.DEVELOPMENT

    @property
    def is_staging(self) -> bool:
        return self.environment == Environment.STAGING
