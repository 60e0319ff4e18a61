"""Pydantic schemas and value types for the four-mode toolkit."""

from .couplings import CouplingSet, HopfCoordinates, Su2Generator
from .design import (
    DesignProblem,
    DesignResult,
    NelderMeadOptions,
    NelderMeadResult,
    OptimizeInput,
    OptimizeOutput,
)
from .simulate import DetectInput, DetectOutput, MatchSummary, SimulateInput, SimulateOutput
from .states import AMPLITUDE_COLUMNS, StateAmplitudes, TimeSeries
from .transfer import FrequencyPair, ReferenceTimes, TransferSolution, TwoLevelParams
from .triples import (
    DesignInput,
    DesignOutput,
    OddPair,
    PythTriple,
    TransferMatch,
    TriplesInput,
    TriplesOutput,
)

__all__ = [
    "CouplingSet", "HopfCoordinates", "Su2Generator",
    "StateAmplitudes", "TimeSeries", "AMPLITUDE_COLUMNS",
    "FrequencyPair", "TransferSolution", "TwoLevelParams", "ReferenceTimes",
    "PythTriple", "OddPair", "TransferMatch",
    "DesignProblem", "DesignResult", "NelderMeadOptions", "NelderMeadResult",
    "SimulateInput", "SimulateOutput",
    "DetectInput", "DetectOutput", "MatchSummary",
    "DesignInput", "DesignOutput",
    "TriplesInput", "TriplesOutput",
    "OptimizeInput", "OptimizeOutput",
]
