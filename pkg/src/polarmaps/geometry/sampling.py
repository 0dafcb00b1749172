from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class SamplingPolicy:
    """
    Seeded randomness for generic slices and coordinate changes.

    Every attempt gets its own generator derived from the master seed, a
    label and the attempt number, so trials are reproducible and independent
    of the order in which they run.
    """

    seed: int = 1729
    slice_coefficient_bound: int = 10
    slice_retries: int = 5
    coordinate_entry_bound: int = 5
    coordinate_retries: int = 5

    def with_seed(self, seed: int | None) -> SamplingPolicy:
        if seed is None or seed == self.seed:
            return self
        return SamplingPolicy(
            seed=seed,
            slice_coefficient_bound=self.slice_coefficient_bound,
            slice_retries=self.slice_retries,
            coordinate_entry_bound=self.coordinate_entry_bound,
            coordinate_retries=self.coordinate_retries,
        )

    def rng(self, label: str, attempt: int) -> random.Random:
        return random.Random(f"{self.seed}:{label}:{attempt}")


DEFAULT_SAMPLING = SamplingPolicy()
