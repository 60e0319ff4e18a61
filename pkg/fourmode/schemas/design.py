"""Pydantic schemas for the derivative-free design search."""

import math
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .couplings import CouplingSet, HopfCoordinates
from .triples import TransferMatch

Interval = Tuple[float, float]


class NelderMeadOptions(BaseModel):
    """Simplex coefficients and stopping rules."""

    model_config = ConfigDict(frozen=True)

    reflection: float = Field(default=1.0, gt=0)
    expansion: float = Field(default=2.0, gt=1)
    contraction: float = Field(default=0.5, gt=0, lt=1)
    shrink: float = Field(default=0.5, gt=0, lt=1)
    xatol: float = Field(default=1e-10, gt=0, description="Simplex diameter threshold")
    fatol: float = Field(default=1e-14, gt=0, description="Objective spread threshold")
    max_evaluations: int = Field(default=20000, ge=1)
    initial_step: float = Field(default=0.5, gt=0)


class NelderMeadResult(BaseModel):
    """Best point found by one simplex run."""

    model_config = ConfigDict(frozen=True)

    x: Tuple[float, ...]
    fun: float
    evaluations: int
    converged: bool


class DesignProblem(BaseModel):
    """Search for couplings that transfer 1 -> 3 completely at tau_target."""

    model_config = ConfigDict(frozen=True)

    tau_target: float = Field(gt=0)
    bounds: Tuple[Interval, ...] = Field(description="Closed interval per searched coupling")
    ladder_only: bool = True
    seed: int = 0
    n_starts: int = Field(default=32, ge=1)
    options: NelderMeadOptions = Field(default_factory=NelderMeadOptions)

    @model_validator(mode="after")
    def _valid_bounds(self) -> "DesignProblem":
        expected = 3 if self.ladder_only else 4
        if len(self.bounds) != expected:
            raise ValueError(f"expected {expected} bounds, got {len(self.bounds)}")
        for lo, hi in self.bounds:
            if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
                raise ValueError(f"invalid bound [{lo}, {hi}]")
        return self

    @classmethod
    def uniform(
        cls,
        tau_target: float,
        lo: float,
        hi: float,
        ladder_only: bool = True,
        **kwargs,
    ) -> "DesignProblem":
        """The same interval for every searched coupling."""
        n = 3 if ladder_only else 4
        return cls(
            tau_target=tau_target,
            bounds=tuple((lo, hi) for _ in range(n)),
            ladder_only=ladder_only,
            **kwargs,
        )


class DesignResult(BaseModel):
    """Best design found by the multistart search."""

    model_config = ConfigDict(frozen=True)

    tau_target: float
    couplings: CouplingSet
    infidelity: float = Field(ge=0)
    hopf: HopfCoordinates
    matched: Optional[TransferMatch] = None
    evaluations: int = Field(description="Objective evaluations over all starts")
    converged: bool
    start_index: int


class OptimizeInput(BaseModel):
    """Input schema for the optimize tool."""

    tau: float = Field(gt=0)
    lo: float = 0.0
    hi: float = Field(gt=0)
    seed: int = 0
    diamond: bool = False
    starts: Optional[int] = Field(default=None, ge=1)


class OptimizeOutput(BaseModel):
    """Output schema for the optimize tool."""

    result: DesignResult
    oracle_infidelity: float
