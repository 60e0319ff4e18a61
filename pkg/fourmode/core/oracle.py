"""Brute-force ground truth: Jacobi eigensolver and exp(-iHt) propagation.

Nothing here knows about the Bell factorization; every closed form in the
package is checked against these routines.
"""

import math
from dataclasses import dataclass
from typing import Literal, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from ..errors import InvalidArgumentError, InvalidStateError, NumericalFailureError
from ..schemas.states import StateAmplitudes
from ..utils.logging import get_logger
from .constants import NORM_TOLERANCE

logger = get_logger("oracle")

MAX_SWEEPS = 50
OFF_DIAGONAL_TOLERANCE = 1e-14
SYMMETRY_TOLERANCE = 1e-12
RK4_PHASE_STEP = 0.01

PropagationMethod = Literal["spectral", "rk4"]


@dataclass(frozen=True)
class EigenSystem4:
    """Ascending eigenvalues; eigenvectors are the columns of ``eigenvectors``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int


def _as_real_symmetric(h: np.ndarray) -> np.ndarray:
    h = np.asarray(h)
    if h.shape != (4, 4):
        raise InvalidArgumentError(f"expected a 4x4 matrix, got shape {h.shape}")
    if np.iscomplexobj(h):
        if np.any(np.abs(h.imag) > 0):
            raise InvalidArgumentError("complex Hamiltonians are not supported")
        h = h.real
    h = h.astype(float)
    if not np.all(np.isfinite(h)):
        raise InvalidArgumentError("matrix entries must be finite")
    scale = max(np.linalg.norm(h), 1.0)
    if np.max(np.abs(h - h.T)) > SYMMETRY_TOLERANCE * scale:
        raise InvalidArgumentError("matrix is not symmetric")
    return 0.5 * (h + h.T)


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off**2)))


def jacobi_eigs(h: np.ndarray) -> EigenSystem4:
    """Cyclic Jacobi diagonalization of a real symmetric 4x4 matrix.

    Each eigenvector is signed so that its largest-magnitude component is
    positive (first such index on ties).
    """
    a = _as_real_symmetric(h)
    n = a.shape[0]
    v = np.eye(n)
    threshold = OFF_DIAGONAL_TOLERANCE * np.linalg.norm(a)

    sweeps = 0
    while _off_norm(a) > threshold:
        if sweeps >= MAX_SWEEPS:
            raise NumericalFailureError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                cos = 1.0 / math.sqrt(t * t + 1.0)
                sin = t * cos

                rotation = np.eye(n)
                rotation[p, p] = rotation[q, q] = cos
                rotation[p, q] = sin
                rotation[q, p] = -sin
                a = rotation.T @ a @ rotation
                a[p, q] = a[q, p] = 0.0
                v = v @ rotation

    order = np.argsort(np.diag(a), kind="stable")
    eigenvalues = np.diag(a)[order]
    eigenvectors = v[:, order]
    for k in range(n):
        pivot = int(np.argmax(np.abs(eigenvectors[:, k])))
        if eigenvectors[pivot, k] < 0:
            eigenvectors[:, k] = -eigenvectors[:, k]

    logger.debug(f"Jacobi converged after {sweeps} sweeps")
    return EigenSystem4(eigenvalues=eigenvalues, eigenvectors=eigenvectors, sweeps=sweeps)


def oracle_propagator(h: np.ndarray, t: float) -> np.ndarray:
    """exp(-iHt) by spectral decomposition."""
    eig = jacobi_eigs(h)
    vecs = eig.eigenvectors
    return (vecs * np.exp(-1j * eig.eigenvalues * t)) @ vecs.T


def _rk4(h: np.ndarray, psi: np.ndarray, t: float) -> np.ndarray:
    scale = max(np.linalg.norm(h, 2), 1e-300)
    n_steps = max(1, math.ceil(abs(t) * scale / RK4_PHASE_STEP))
    dt = t / n_steps
    generator = -1j * h
    for _ in range(n_steps):
        k1 = generator @ psi
        k2 = generator @ (psi + 0.5 * dt * k1)
        k3 = generator @ (psi + 0.5 * dt * k2)
        k4 = generator @ (psi + dt * k3)
        psi = psi + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return psi


def oracle_propagate(
    h: np.ndarray,
    psi0: StateAmplitudes,
    t: float,
    method: PropagationMethod = "spectral",
) -> StateAmplitudes:
    """psi(t) = exp(-iHt) psi0, spectrally or by fixed-step RK4."""
    if abs(psi0.norm - 1.0) > NORM_TOLERANCE:
        raise InvalidStateError(f"initial state must be normalized, norm = {psi0.norm}")
    if not math.isfinite(t):
        raise InvalidArgumentError(f"time must be finite, got {t}")
    if method == "spectral":
        return StateAmplitudes(oracle_propagator(h, t) @ psi0.vector)
    if method == "rk4":
        return StateAmplitudes(_rk4(_as_real_symmetric(h), psi0.vector.copy(), t))
    raise InvalidArgumentError(f"unknown propagation method {method!r}")


def oracle_series(h: np.ndarray, psi0: StateAmplitudes, times: np.ndarray) -> np.ndarray:
    """Amplitudes at every time, shape (n, 4), from one eigendecomposition."""
    if abs(psi0.norm - 1.0) > NORM_TOLERANCE:
        raise InvalidStateError(f"initial state must be normalized, norm = {psi0.norm}")
    eig = jacobi_eigs(h)
    vecs = eig.eigenvectors
    coefficients = vecs.T @ psi0.vector
    phases = np.exp(-1j * np.outer(np.asarray(times, dtype=float), eig.eigenvalues))
    return (phases * coefficients) @ vecs.T


def oracle_max_transfer(
    h: np.ndarray, source: int, target: int, t_max: float, n: int = 1000
) -> Tuple[float, float]:
    """Largest |<target|psi(t)>|^2 on [0, t_max] starting from |source>.

    Grid scan, then a bounded scalar refinement around the best grid point.
    Ties on the grid go to the smaller time.
    """
    if n < 100:
        raise InvalidArgumentError(f"grid needs at least 100 points, got {n}")
    if not (math.isfinite(t_max) and t_max > 0):
        raise InvalidArgumentError(f"t_max must be positive and finite, got {t_max}")
    if source not in (1, 2, 3, 4) or target not in (1, 2, 3, 4):
        raise InvalidArgumentError("levels must be in 1..4")

    eig = jacobi_eigs(h)
    vecs = eig.eigenvectors
    coefficients = vecs[source - 1, :]
    row = vecs[target - 1, :]
    weights = row * coefficients

    def fidelity(t: float) -> float:
        return float(abs(np.sum(weights * np.exp(-1j * eig.eigenvalues * t))) ** 2)

    grid = np.linspace(0.0, t_max, n)
    values = np.abs(np.exp(-1j * np.outer(grid, eig.eigenvalues)) @ weights) ** 2
    best = int(np.argmax(values))
    t_best, f_best = float(grid[best]), float(values[best])

    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, n - 1)]
    if hi > lo:
        refined = minimize_scalar(
            lambda t: -fidelity(t), bounds=(lo, hi), method="bounded", options={"xatol": 1e-13}
        )
        if -refined.fun > f_best:
            t_best, f_best = float(refined.x), float(-refined.fun)

    logger.debug(f"Max transfer {source}->{target}: {f_best:.12f} at t = {t_best:.10f}")
    return t_best, f_best
