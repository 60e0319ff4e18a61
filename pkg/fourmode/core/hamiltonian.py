"""Nearest-neighbor four-mode Hamiltonian, Bell transform and SU(2) x SU(2) split.

Levels are 1..4 in every public signature and 0..3 in array storage.
"""

from typing import Tuple

import numpy as np

from ..errors import InvalidArgumentError
from ..schemas.couplings import CouplingSet, Su2Generator

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_SQRT_HALF = 1.0 / np.sqrt(2.0)

# W is real, symmetric and its own inverse, so W^dagger = W throughout.
_BELL = _SQRT_HALF * np.array(
    [
        [1.0, 0.0, 0.0, 1.0],
        [0.0, 1.0, 1.0, 0.0],
        [0.0, 1.0, -1.0, 0.0],
        [1.0, 0.0, 0.0, -1.0],
    ]
)
_BELL.setflags(write=False)


def _require_finite(c: CouplingSet) -> None:
    if not np.all(np.isfinite(c.as_array())):
        raise InvalidArgumentError(f"couplings must be finite, got {c.as_tuple()}")


def build_hamiltonian(c: CouplingSet) -> np.ndarray:
    """Real symmetric 4x4 matrix with the couplings on the nearest-neighbor ring."""
    _require_finite(c)
    h = np.zeros((4, 4))
    h[0, 1] = h[1, 0] = c.v12
    h[1, 2] = h[2, 1] = c.v23
    h[2, 3] = h[3, 2] = c.v34
    h[0, 3] = h[3, 0] = c.v14
    return h


def bell_transform() -> np.ndarray:
    """The constant Bell-basis transform W (a fresh, writable copy)."""
    return _BELL.copy()


def decompose(c: CouplingSet) -> Tuple[Su2Generator, Su2Generator]:
    """Split H into h1 (x) I + I (x) h2 in the Bell basis.

    h1 acts on the row index of the 2x2 amplitude matrix (the most significant
    qubit in ``numpy.kron`` ordering), h2 on the column index.
    """
    _require_finite(c)
    h1 = Su2Generator(cx=(c.v12 - c.v34) / 2.0, cz=(c.v23 + c.v14) / 2.0)
    h2 = Su2Generator(cx=(c.v12 + c.v34) / 2.0, cz=-(c.v23 - c.v14) / 2.0)
    return h1, h2


def generator_matrix(g: Su2Generator) -> np.ndarray:
    """cx * sigma_x + cz * sigma_z."""
    return g.cx * SIGMA_X + g.cz * SIGMA_Z


def bell_block_form(c: CouplingSet) -> np.ndarray:
    """h1 (x) I + I (x) h2, the right-hand side of the decomposition identity."""
    h1, h2 = decompose(c)
    return np.kron(generator_matrix(h1), IDENTITY2) + np.kron(IDENTITY2, generator_matrix(h2))


def spectrum_from_generators(c: CouplingSet) -> np.ndarray:
    """Eigenvalues of H in ascending order, from the two generator magnitudes."""
    h1, h2 = decompose(c)
    m1, m2 = h1.magnitude, h2.magnitude
    return np.sort(np.array([m1 + m2, m1 - m2, -(m1 - m2), -(m1 + m2)]))
