"""Pydantic schemas for characteristic frequencies and transfer solutions."""

from math import gcd
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, PositiveInt, model_validator


class FrequencyPair(BaseModel):
    """Left and right rotation rates of the two SU(2) factors."""

    model_config = ConfigDict(frozen=True)

    vL: float = Field(ge=0, description="Left frequency sqrt((xi0 - xi2) / 2)")
    vR: float = Field(ge=0, description="Right frequency sqrt((xi0 + xi2) / 2)")


class TransferSolution(BaseModel):
    """Complete-transfer time and its odd-multiple frequency decomposition.

    ``q`` counts the quarter turns of the smaller frequency and ``p`` those of
    the larger one, so min(vL, vR) * tau = q*pi/2 and max(vL, vR) * tau = p*pi/2.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "tau": 0.9934588265796101,
                "p": 3,
                "q": 1,
                "omega": 3.1622776601683795,
                "vL": 1.5811388300841898,
                "vR": 4.743416490252569,
            }
        },
    )

    tau: float = Field(gt=0, description="Transfer time")
    p: PositiveInt = Field(description="Odd multiple of the larger frequency")
    q: PositiveInt = Field(description="Odd multiple of the smaller frequency")
    omega: float = Field(gt=0, description="pi / tau")
    vL: float = Field(ge=0)
    vR: float = Field(ge=0)

    @model_validator(mode="after")
    def _odd_coprime(self) -> "TransferSolution":
        if self.p % 2 == 0 or self.q % 2 == 0 or gcd(self.p, self.q) != 1:
            raise ValueError("p,q must be odd and coprime")
        if self.q > self.p:
            raise ValueError("q must not exceed p")
        return self


class TwoLevelParams(BaseModel):
    """Coupling and detuning of the two-level Rabi reference."""

    model_config = ConfigDict(frozen=True)

    v: FiniteFloat = Field(description="Coupling")
    delta: FiniteFloat = Field(default=0.0, description="Detuning")


class ReferenceTimes(BaseModel):
    """Alternative transfer-time expressions kept next to the certified one.

    Neither is a transfer time in general; they are recorded for comparison.
    """

    model_config = ConfigDict(frozen=True)

    torque_time: float = Field(description="pi / |Omega_P| = pi / sqrt(xi0)")
    half_scale_time: float = Field(description="pi / sqrt(2 xi0)")
    certified_time: Optional[float] = Field(
        default=None, description="Odd-multiple transfer time when one exists"
    )
