"""Pydantic schemas for Pythagorean triples and Euclid odd pairs."""

from math import gcd
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from .couplings import CouplingSet
from .transfer import TransferSolution


class PythTriple(BaseModel):
    """Integer triple with a^2 + b^2 = c^2.

    Triples produced by the Euclid generator use the canonical leg order
    (even leg, odd leg, hypotenuse).
    """

    model_config = ConfigDict(
        frozen=True, json_schema_extra={"example": {"a": 4, "b": 3, "c": 5}}
    )

    a: PositiveInt
    b: PositiveInt
    c: PositiveInt

    @model_validator(mode="after")
    def _pythagorean(self) -> "PythTriple":
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise ValueError(f"({self.a}, {self.b}, {self.c}) does not satisfy a^2 + b^2 = c^2")
        return self

    @property
    def primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)


class OddPair(BaseModel):
    """Euclid generator pair: odd, coprime, p > q >= 1."""

    model_config = ConfigDict(
        frozen=True, json_schema_extra={"example": {"p": 3, "q": 1}}
    )

    p: PositiveInt
    q: PositiveInt

    @model_validator(mode="after")
    def _euclid_conditions(self) -> "OddPair":
        if self.p % 2 == 0 or self.q % 2 == 0 or gcd(self.p, self.q) != 1:
            raise ValueError("p,q must be odd and coprime")
        if self.p <= self.q:
            raise ValueError("p must be greater than q")
        return self


class TransferMatch(BaseModel):
    """A coupling set recognised as a Pythagorean transfer configuration."""

    model_config = ConfigDict(frozen=True)

    triple: PythTriple
    pair: OddPair
    solution: TransferSolution


class TriplesInput(BaseModel):
    """Input schema for the triples tool."""

    c_max: int = Field(description="Largest hypotenuse to enumerate", examples=[25, 100])


class TriplesOutput(BaseModel):
    """Output schema for the triples tool."""

    c_max: int
    triples: List[PythTriple]
    count: int


class DesignInput(BaseModel):
    """Input schema for the design tool: an odd pair or a primitive triple, plus tau."""

    p: Optional[int] = Field(default=None, description="Larger odd generator")
    q: Optional[int] = Field(default=None, description="Smaller odd generator")
    triple: Optional[Tuple[int, int, int]] = Field(
        default=None, description="Primitive triple (any leg order)"
    )
    tau: float = Field(gt=0, description="Target transfer time")
    cone_tolerance: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _one_source(self) -> "DesignInput":
        has_pair = self.p is not None or self.q is not None
        if has_pair == (self.triple is not None):
            raise ValueError("give either p and q, or a triple")
        if has_pair and (self.p is None or self.q is None):
            raise ValueError("both p and q are required")
        return self


class DesignOutput(BaseModel):
    """Output schema for the design tool."""

    couplings: CouplingSet
    triple: PythTriple
    pair: OddPair
    tau: float
    omega: float
    vL: float
    vR: float
    fidelity: float = Field(description="Oracle |a3(tau)|^2 from |psi_1>")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "couplings": {"v12": 4.967294, "v23": 2.980376, "v34": 3.973835, "v14": 0.0},
                "triple": {"a": 4, "b": 3, "c": 5},
                "pair": {"p": 3, "q": 1},
                "tau": 1.0,
                "omega": 3.141593,
                "vL": 1.570796,
                "vR": 4.712389,
                "fidelity": 1.0,
            }
        }
    )
