"""Shared result records and sampling configuration."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ShredderRecord:
    """A verified shredder: canonical vertex tuple plus its component count."""

    vertices: tuple[int, ...]
    components: int
    provenance: str  # "balanced" | "local" | "low-degree" | "high-degree"


@dataclass(frozen=True)
class MostShatteringResult:
    cut: tuple[int, ...]
    components: int
    is_shredder: bool
    k: int


@dataclass(frozen=True)
class SamplingConfig:
    """Multipliers for the randomized loop bounds.

    The published constants (400 / 300 / 800, targeting an n^-100 failure
    probability) are wildly oversized for desk-scale graphs; the defaults here
    keep the differential suites green at a tiny fraction of the cost.
    ``prob_exponent`` records the failure exponent a constant set targets; the
    other three factors absorb it in the loop bounds.
    """

    hit_factor: int = 8
    boost_factor: int = 4
    balanced_factor: int = 12
    prob_exponent: int = 8

    def __post_init__(self):
        for name in ("hit_factor", "boost_factor", "balanced_factor", "prob_exponent"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")

    @staticmethod
    def paper() -> "SamplingConfig":
        return SamplingConfig(hit_factor=400, boost_factor=300, balanced_factor=800,
                              prob_exponent=100)


def log_rounds(n: int) -> int:
    """ceil(log2(max(n, 2))): the log-factor used in every loop bound."""
    n = max(n, 2)
    return (n - 1).bit_length()


def ceil_log2_ratio(num: int, den: int) -> int:
    """Smallest i with 2^i >= num/den (0 when num <= den)."""
    i = 0
    while (den << i) < num:
        i += 1
    return i
