"""Pydantic schemas for coupling sets, SU(2) generators and Hopf coordinates."""

from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, FiniteFloat


class CouplingSet(BaseModel):
    """The four real nearest-neighbor couplings, in radians per unit time."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"v12": 5.0, "v23": 3.0, "v34": 4.0, "v14": 0.0}},
    )

    v12: FiniteFloat = Field(default=0.0, description="Coupling between levels 1 and 2")
    v23: FiniteFloat = Field(default=0.0, description="Coupling between levels 2 and 3")
    v34: FiniteFloat = Field(default=0.0, description="Coupling between levels 3 and 4")
    v14: FiniteFloat = Field(default=0.0, description="Coupling between levels 1 and 4")

    @property
    def is_ladder(self) -> bool:
        return self.v14 == 0.0

    @property
    def is_diamond(self) -> bool:
        return all(v != 0.0 for v in self.as_tuple())

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.v12, self.v23, self.v34, self.v14)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=float)

    def scaled(self, factor: float) -> "CouplingSet":
        return CouplingSet(**{k: factor * v for k, v in self.model_dump().items()})

    @classmethod
    def from_values(cls, values: Sequence[float]) -> "CouplingSet":
        """Build from (v12, v23, v34[, v14]); a missing v14 means a ladder."""
        values = [float(v) for v in values]
        if len(values) == 3:
            values.append(0.0)
        if len(values) != 4:
            raise ValueError(f"expected 3 or 4 coupling values, got {len(values)}")
        return cls(v12=values[0], v23=values[1], v34=values[2], v14=values[3])


class Su2Generator(BaseModel):
    """Coefficients of sigma_x and sigma_z in one SU(2) factor (sigma_y is absent)."""

    model_config = ConfigDict(frozen=True)

    cx: FiniteFloat = Field(description="sigma_x coefficient")
    cz: FiniteFloat = Field(description="sigma_z coefficient")

    @property
    def magnitude(self) -> float:
        return float(np.hypot(self.cx, self.cz))


class HopfCoordinates(BaseModel):
    """Projective invariants (xi0, xi1, xi2, xi3) in units of frequency squared."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"xi0": 25.0, "xi1": 15.0, "xi2": 20.0, "xi3": 0.0}},
    )

    xi0: FiniteFloat
    xi1: FiniteFloat
    xi2: FiniteFloat
    xi3: FiniteFloat

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.xi0, self.xi1, self.xi2, self.xi3)
