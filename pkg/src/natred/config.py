"""Shared numerical tolerances.

Every module takes an optional ToleranceConfig; the default instance is
used when none is passed so the whole library agrees on what "zero" means.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceConfig:
    eps_coeff: float = 1e-9   # below this a coefficient is treated as zero
    eps_rank: float = 1e-7    # relative threshold for rank decisions


DEFAULT_TOLS = ToleranceConfig()
