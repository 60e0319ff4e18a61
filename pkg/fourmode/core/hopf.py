"""Hopf map from coupling space onto the xi cone, and its ladder inverse."""

import math

import numpy as np

from ..errors import (
    DegenerateInputError,
    InvalidArgumentError,
    InvalidCoordinatesError,
    NotInvertibleAsLadderError,
)
from ..schemas.couplings import CouplingSet, HopfCoordinates
from ..utils.logging import get_logger
from .constants import DEFAULT_CONE_TOLERANCE

logger = get_logger("hopf")


def hopf_map_many(values: np.ndarray) -> np.ndarray:
    """Row-wise Hopf map of an (n, 4) array of (v12, v23, v34, v14)."""
    v = np.asarray(values, dtype=float)
    if v.ndim != 2 or v.shape[1] != 4:
        raise InvalidArgumentError(f"expected an (n, 4) array, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InvalidArgumentError("couplings must be finite")
    v12, v23, v34, v14 = v.T
    xi = np.empty_like(v)
    xi[:, 0] = 0.5 * (v12**2 + v14**2 + v23**2 + v34**2)
    xi[:, 1] = v12 * v23 + v14 * v34
    xi[:, 2] = v12 * v34 - v23 * v14
    xi[:, 3] = 0.5 * (v12**2 + v14**2 - v23**2 - v34**2)
    return xi


def hopf_map(c: CouplingSet) -> HopfCoordinates:
    xi = hopf_map_many(c.as_array()[np.newaxis, :])[0]
    return HopfCoordinates(xi0=xi[0], xi1=xi[1], xi2=xi[2], xi3=xi[3])


def cone_residual(x: HopfCoordinates) -> float:
    """(xi0^2 - xi1^2 - xi2^2 - xi3^2) / max(xi0^2, 1)."""
    return (x.xi0**2 - x.xi1**2 - x.xi2**2 - x.xi3**2) / max(x.xi0**2, 1.0)


def ladder_from_hopf(x: HopfCoordinates, tol: float = DEFAULT_CONE_TOLERANCE) -> CouplingSet:
    """Ladder representative (v14 = 0, v12 > 0) of coordinates on the xi3 = 0 slice."""
    if tol <= 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    if x.xi0 <= 0:
        raise DegenerateInputError(f"xi0 must be positive, got {x.xi0}")
    if abs(x.xi3) > tol * x.xi0:
        raise NotInvertibleAsLadderError(
            f"xi3 = {x.xi3} is not zero relative to xi0 = {x.xi0}; no ladder coupling exists"
        )
    residual = (x.xi0**2 - x.xi1**2 - x.xi2**2 - x.xi3**2) / x.xi0**2
    if abs(residual) > tol:
        raise InvalidCoordinatesError(
            f"coordinates are off the cone (relative residual {residual:.3e})"
        )

    root = math.sqrt(x.xi0)
    logger.debug(f"Ladder inversion of {x.as_tuple()} (cone residual {residual:.2e})")
    return CouplingSet(v12=root, v23=x.xi1 / root, v34=x.xi2 / root, v14=0.0)


def gauge_rotate(c: CouplingSet, theta: float) -> CouplingSet:
    """Rotate (v12 + i v14) and (v23 + i v34) by the common phase e^{i theta}.

    This is a basis rotation in the span of |psi_2> and |psi_4>; the Hopf
    coordinates and the 1 <-> 3 dynamics are unchanged.
    """
    phase = complex(math.cos(theta), math.sin(theta))
    z1 = complex(c.v12, c.v14) * phase
    z2 = complex(c.v23, c.v34) * phase
    return CouplingSet(v12=z1.real, v23=z2.real, v34=z2.imag, v14=z1.imag)
