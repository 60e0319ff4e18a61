"""State vectors and time series.

These carry complex NumPy arrays, so they are frozen dataclasses rather than
pydantic models. Levels are numbered 1..4 at every public entry point.
"""

from dataclasses import dataclass, field
from typing import List

import numpy as np

AMPLITUDE_COLUMNS = [
    "t",
    "p1",
    "p2",
    "p3",
    "p4",
    "re_a1",
    "im_a1",
    "re_a2",
    "im_a2",
    "re_a3",
    "im_a3",
    "re_a4",
    "im_a4",
]


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class StateAmplitudes:
    """Complex amplitudes (a1, a2, a3, a4) of the four modes."""

    vector: np.ndarray

    def __post_init__(self) -> None:
        vector = np.array(self.vector, dtype=complex).reshape(-1)
        if vector.shape != (4,):
            raise ValueError(f"a four-mode state needs 4 amplitudes, got {vector.size}")
        object.__setattr__(self, "vector", _frozen(vector))

    @classmethod
    def basis(cls, level: int) -> "StateAmplitudes":
        """The basis state |psi_level>, level in 1..4."""
        if level not in (1, 2, 3, 4):
            raise ValueError(f"level must be in 1..4, got {level}")
        vector = np.zeros(4, dtype=complex)
        vector[level - 1] = 1.0
        return cls(vector)

    @classmethod
    def from_components(
        cls, a1: complex, a2: complex, a3: complex, a4: complex
    ) -> "StateAmplitudes":
        return cls(np.array([a1, a2, a3, a4], dtype=complex))

    @property
    def a1(self) -> complex:
        return complex(self.vector[0])

    @property
    def a2(self) -> complex:
        return complex(self.vector[1])

    @property
    def a3(self) -> complex:
        return complex(self.vector[2])

    @property
    def a4(self) -> complex:
        return complex(self.vector[3])

    @property
    def populations(self) -> np.ndarray:
        return np.abs(self.vector) ** 2

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))


@dataclass(frozen=True)
class TimeSeries:
    """Amplitudes on a strictly increasing time grid.

    ``disconnected`` flags the xi1 = xi3 = 0 sector, where levels 1 and 3 never
    exchange population.
    """

    times: np.ndarray
    amplitudes: np.ndarray
    disconnected: bool = field(default=False)

    def __post_init__(self) -> None:
        times = np.array(self.times, dtype=float).reshape(-1)
        amplitudes = np.array(self.amplitudes, dtype=complex)
        if amplitudes.shape != (times.size, 4):
            raise ValueError(
                f"amplitudes must have shape ({times.size}, 4), got {amplitudes.shape}"
            )
        if times.size > 1 and not np.all(np.diff(times) > 0):
            raise ValueError("time points must be strictly increasing")
        object.__setattr__(self, "times", _frozen(times))
        object.__setattr__(self, "amplitudes", _frozen(amplitudes))

    def __len__(self) -> int:
        return int(self.times.size)

    def state(self, index: int) -> StateAmplitudes:
        return StateAmplitudes(self.amplitudes[index])

    @property
    def populations(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def rows(self) -> List[List[float]]:
        """Rows laid out as AMPLITUDE_COLUMNS."""
        table = np.empty((len(self), len(AMPLITUDE_COLUMNS)), dtype=float)
        table[:, 0] = self.times
        table[:, 1:5] = self.populations
        table[:, 5::2] = self.amplitudes.real
        table[:, 6::2] = self.amplitudes.imag
        return table.tolist()
