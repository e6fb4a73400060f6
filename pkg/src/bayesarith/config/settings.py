"""Configuration and settings management."""

import os
from dataclasses import dataclass, field
from typing import Optional

JOBS_ENV = "BAYESARITH_JOBS"

MODES = ("exact", "float")
PRICING_RULES = ("bland", "dantzig")

# Largest C a sweep accepts by default (12-bit numbers)
DEFAULT_SWEEP_LIMIT = 4095

# Largest addition width the brute-force oracle enumerates
DEFAULT_ENUMERATION_LIMIT = 6


def default_jobs() -> int:
    """Worker count from $BAYESARITH_JOBS, else 1."""
    raw = os.environ.get(JOBS_ENV, "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


@dataclass
class Settings:
    """Solver and experiment settings."""

    # Arithmetic of the LP solver: exact rationals or HiGHS floats
    mode: str = "exact"

    # Apply product-rule presolve before solving
    presolve: bool = True

    # Worker processes for sweeps
    jobs: int = field(default_factory=default_jobs)

    # Column count from which rank switches to sparse elimination
    dense_threshold: int = 2000

    # Feasibility and optimum tolerance in float mode
    float_tolerance: float = 1e-9

    # Entering-column rule of the exact simplex
    pricing: str = "bland"

    # Polarity explored first when both bit values reach the target
    prefer_bit: int = 1

    # Backtrack into unexplored bit branches before concluding
    exhaustive: bool = False

    sweep_limit: int = DEFAULT_SWEEP_LIMIT
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT

    # Seed for random objective probing
    seed: int = 0

    @classmethod
    def from_args(
        cls,
        mode: str = "exact",
        no_presolve: bool = False,
        jobs: Optional[int] = None,
        pricing: str = "bland",
        prefer_bit: int = 1,
        exhaustive: bool = False,
        seed: Optional[int] = None,
        tolerance: Optional[float] = None,
    ) -> "Settings":
        """
        Create settings from CLI arguments.

        Args:
            mode: "exact" or "float"
            no_presolve: Skip product-rule presolve
            jobs: Worker count override
            pricing: "bland" or "dantzig"
            prefer_bit: Bit value tried first by the factoring driver
            exhaustive: Enable branch backtracking in the factoring driver
            seed: Sampling seed
            tolerance: Float-mode tolerance override
        """
        return cls(
            mode=mode,
            presolve=not no_presolve,
            jobs=jobs if jobs is not None else default_jobs(),
            pricing=pricing,
            prefer_bit=prefer_bit,
            exhaustive=exhaustive,
            seed=seed if seed is not None else 0,
            float_tolerance=tolerance if tolerance is not None else 1e-9,
        )

    def validate(self) -> list[str]:
        """
        Validate settings.

        Returns:
            List of error messages (empty if valid)
        """
        errors = []

        if self.mode not in MODES:
            errors.append(f"Unknown mode: {self.mode} (expected one of {', '.join(MODES)})")

        if self.pricing not in PRICING_RULES:
            errors.append(f"Unknown pricing rule: {self.pricing}")

        if self.prefer_bit not in (0, 1):
            errors.append(f"prefer_bit must be 0 or 1, got {self.prefer_bit}")

        if self.jobs < 1:
            errors.append(f"jobs must be >= 1, got {self.jobs}")

        if not 0 < self.float_tolerance < 1:
            errors.append(f"float tolerance must be in (0, 1), got {self.float_tolerance}")

        if self.dense_threshold < 1:
            errors.append(f"dense threshold must be positive, got {self.dense_threshold}")

        return errors
