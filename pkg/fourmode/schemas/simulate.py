"""Pydantic schemas for the simulate and detect tools."""

from typing import List, Optional

from pydantic import BaseModel, Field

from .couplings import CouplingSet, HopfCoordinates
from .transfer import FrequencyPair, ReferenceTimes
from .triples import OddPair, PythTriple


class SimulateInput(BaseModel):
    """Input schema for the simulate tool."""

    couplings: CouplingSet
    t_max: float = Field(gt=0, description="End of the time grid")
    steps: Optional[int] = Field(default=None, ge=2, description="Number of grid intervals")
    initial_level: int = Field(default=1, ge=1, le=4, description="Initially populated level")
    verify: bool = Field(default=False, description="Cross-check every point with the oracle")


class SimulateOutput(BaseModel):
    """Output schema for the simulate tool."""

    couplings: CouplingSet
    initial_level: int
    disconnected: bool = Field(description="Levels 1 and 3 dynamically decoupled")
    columns: List[str]
    rows: List[List[float]]
    max_oracle_deviation: Optional[float] = None


class DetectInput(BaseModel):
    """Input schema for the detect tool."""

    couplings: CouplingSet
    tol: Optional[float] = Field(default=None, gt=0)


class MatchSummary(BaseModel):
    """Matched triple and its transfer solution."""

    triple: PythTriple
    pair: OddPair
    tau: float
    omega: float
    vL: float
    vR: float


class DetectOutput(BaseModel):
    """Output schema for the detect tool."""

    hopf: HopfCoordinates
    frequencies: Optional[FrequencyPair] = None
    reference_times: Optional[ReferenceTimes] = None
    match: Optional[MatchSummary] = None

    @property
    def xi(self) -> List[float]:
        return list(self.hopf.as_tuple())
