"""Run configuration and the pinned tolerance constants."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .fourier import grid_size_for

# Pinned tolerances.  Exact coefficient identities are checked at TOL_EXACT;
# identities involving truncated infinite expansions at TOL_SERIES plus a
# geometric tail bound recorded by the Blaschke machinery.
TOL_EXACT = 1e-12
TOL_SERIES = 1e-8
TOL_CONJUGATION = 1e-9
TOL_COMMUTANT = 1e-8
TOL_PROJECTION = 1e-10
DIVIDES_REL_TOL = 1e-7
ONLY_MZ_THRESHOLD = 0.1

ENV_CONFIG_VAR = "BLASCHKE_LAB_CONFIG"


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by suites, certifiers and the CLI."""

    band: int = 64
    grid: int | None = None
    tol_exact: float = TOL_EXACT
    tol_series: float = TOL_SERIES
    seed: int = 0
    trials: int = 25

    def __post_init__(self):
        if self.band < 1:
            raise ValueError("band must be >= 1")
        if self.grid is not None and self.grid < 4 * self.band + 4:
            raise ValueError("grid must satisfy grid >= 4*band + 4")
        if self.tol_exact > self.tol_series:
            raise ValueError("tol_exact must not exceed tol_series")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    @property
    def grid_size(self) -> int:
        """Power-of-two grid size honouring grid >= 4*band + 4."""
        base = grid_size_for(self.band)
        if self.grid is None:
            return base
        m = 2
        while m < self.grid:
            m *= 2
        return max(m, base)

    def to_dict(self) -> dict:
        return {
            "band": self.band,
            "grid": self.grid_size,
            "tol_exact": self.tol_exact,
            "tol_series": self.tol_series,
            "seed": self.seed,
            "trials": self.trials,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {k: data[k] for k in ("band", "grid", "tol_exact", "tol_series", "seed", "trials") if k in data}
        return cls(**known)

    @classmethod
    def from_env(cls) -> "RunConfig":
        """Config from the JSON file named by BLASCHKE_LAB_CONFIG, else defaults."""
        path = os.environ.get(ENV_CONFIG_VAR)
        if not path:
            return cls()
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


DEFAULT_CONFIG = RunConfig()
