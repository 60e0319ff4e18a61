"""Factored evolution, closed-form amplitudes, transfer times and the Rabi reference.

States evolve as exp(-iHt). In the Bell basis that evolution is u1 (x) u2 with
u_k = exp(-i t h_k); on the 2x2 amplitude matrix it reads A(t) = u1 A(0) u2^T.
"""

import math
from typing import Optional, Tuple, Union

import numpy as np

from ..errors import (
    DegenerateSectorError,
    InvalidArgumentError,
    InvalidCoordinatesError,
    InvalidStateError,
    NoDynamicsError,
)
from ..schemas.couplings import CouplingSet, HopfCoordinates, Su2Generator
from ..schemas.states import StateAmplitudes, TimeSeries
from ..schemas.transfer import FrequencyPair, ReferenceTimes, TransferSolution, TwoLevelParams
from ..utils.logging import get_logger
from .constants import (
    DEFAULT_CONE_TOLERANCE,
    DEFAULT_MAX_DENOMINATOR,
    DEFAULT_TRANSFER_TOLERANCE,
    NORM_TOLERANCE,
)
from .hamiltonian import IDENTITY2, SIGMA_X, SIGMA_Z, bell_transform, decompose
from .hopf import hopf_map

logger = get_logger("dynamics")

TimeLike = Union[float, np.ndarray]

# hypot(xi1, xi3) below this fraction of xi0 counts as the disconnected sector
_SECTOR_EPS = 1e-15


def _sin_over(magnitude: float, t: TimeLike) -> np.ndarray:
    """sin(t * magnitude) / magnitude, continuous at magnitude = 0."""
    return np.asarray(t) * np.sinc(np.asarray(t) * magnitude / np.pi)


def _rotations(g: Su2Generator, times: np.ndarray) -> np.ndarray:
    """exp(-i t (cx sx + cz sz)) for each t, shape (n, 2, 2)."""
    times = np.asarray(times, dtype=float).reshape(-1)
    cos = np.cos(times * g.magnitude)[:, None, None]
    sin_over = _sin_over(g.magnitude, times)[:, None, None]
    generator = g.cx * SIGMA_X + g.cz * SIGMA_Z
    return cos * IDENTITY2 - 1j * sin_over * generator


def su2_rotation(g: Su2Generator, t: float) -> np.ndarray:
    """exp(-i t (cx sigma_x + cz sigma_z)) in closed form; identity when |g| = 0."""
    if not math.isfinite(t):
        raise InvalidArgumentError(f"time must be finite, got {t}")
    return _rotations(g, np.array([t]))[0]


def encode_amplitudes(psi: StateAmplitudes) -> np.ndarray:
    """A = a1 I + a2 sx + i a3 sy + a4 sz."""
    a1, a2, a3, a4 = psi.vector
    return np.array([[a1 + a4, a2 + a3], [a2 - a3, a1 - a4]], dtype=complex)


def decode_amplitudes(a: np.ndarray) -> np.ndarray:
    """Inverse of encode_amplitudes; works on (..., 2, 2) stacks."""
    a = np.asarray(a)
    return 0.5 * np.stack(
        [
            a[..., 0, 0] + a[..., 1, 1],
            a[..., 0, 1] + a[..., 1, 0],
            a[..., 0, 1] - a[..., 1, 0],
            a[..., 0, 0] - a[..., 1, 1],
        ],
        axis=-1,
    )


def _check_state(psi0: StateAmplitudes) -> None:
    if abs(psi0.norm - 1.0) > NORM_TOLERANCE:
        raise InvalidStateError(f"initial state must be normalized, norm = {psi0.norm}")


def _evolve(c: CouplingSet, psi0: StateAmplitudes, times: np.ndarray) -> np.ndarray:
    h1, h2 = decompose(c)
    u1 = _rotations(h1, times)
    u2 = _rotations(h2, times)
    a_t = u1 @ encode_amplitudes(psi0) @ np.swapaxes(u2, -1, -2)
    return decode_amplitudes(a_t)


def propagate_factored(c: CouplingSet, psi0: StateAmplitudes, t: float) -> StateAmplitudes:
    """Evolve psi0 for time t through the two SU(2) factors."""
    _check_state(psi0)
    if not math.isfinite(t):
        raise InvalidArgumentError(f"time must be finite, got {t}")
    return StateAmplitudes(_evolve(c, psi0, np.array([t]))[0])


def factored_propagator(c: CouplingSet, t: float) -> np.ndarray:
    """W (u1 (x) u2) W, the full 4x4 evolution operator built from the factors."""
    h1, h2 = decompose(c)
    w = bell_transform()
    return w @ np.kron(su2_rotation(h1, t), su2_rotation(h2, t)) @ w


def _disconnected(x: HopfCoordinates) -> bool:
    return math.hypot(x.xi1, x.xi3) <= _SECTOR_EPS * x.xi0 or x.xi0 == 0.0


def amplitudes_closed_form(c: CouplingSet, t: TimeLike) -> Tuple[TimeLike, TimeLike]:
    """Real amplitudes (a1, a3) at time(s) t, starting from |psi_1>.

    Raises DegenerateSectorError when xi1 = xi3 = 0; the exception carries
    a1 = cos(vL t) cos(vR t) and a3 = 0.
    """
    x = hopf_map(c)
    h1, h2 = decompose(c)
    v_left, v_right = h1.magnitude, h2.magnitude
    t_arr = np.asarray(t, dtype=float)

    cos_cos = np.cos(v_left * t_arr) * np.cos(v_right * t_arr)
    sin_sin = np.sin(v_left * t_arr) * np.sin(v_right * t_arr)

    if _disconnected(x):
        a1 = cos_cos if t_arr.ndim else float(cos_cos)
        a3 = np.zeros_like(t_arr) if t_arr.ndim else 0.0
        raise DegenerateSectorError(
            "levels 1 and 3 are disconnected (xi1 = xi3 = 0)", a1=a1, a3=a3
        )

    denom = math.hypot(x.xi1, x.xi3)
    a1 = cos_cos - (x.xi3 / denom) * sin_sin
    a3 = -(x.xi1 / denom) * sin_sin
    if t_arr.ndim == 0:
        return float(a1), float(a3)
    return a1, a3


def frequencies(x: HopfCoordinates, tol: float = DEFAULT_CONE_TOLERANCE) -> FrequencyPair:
    """vL, vR = sqrt((xi0 -/+ xi2) / 2)."""
    if abs(x.xi2) - x.xi0 > tol * max(abs(x.xi0), 1.0):
        raise InvalidCoordinatesError(f"xi0 = {x.xi0} is smaller than |xi2| = {abs(x.xi2)}")
    return FrequencyPair(
        vL=math.sqrt(max(0.0, 0.5 * (x.xi0 - x.xi2))),
        vR=math.sqrt(max(0.0, 0.5 * (x.xi0 + x.xi2))),
    )


def torque_vector(x: HopfCoordinates) -> np.ndarray:
    """Omega_P = (xi1, xi2, xi3) / sqrt(xi0); its length is sqrt(xi0) on the cone."""
    if x.xi0 <= 0:
        return np.zeros(3)
    return np.array([x.xi1, x.xi2, x.xi3]) / math.sqrt(x.xi0)


def reference_times(x: HopfCoordinates, certified: Optional[float] = None) -> ReferenceTimes:
    """pi / |Omega_P| and pi / sqrt(2 xi0), next to the certified transfer time."""
    if x.xi0 <= 0:
        raise NoDynamicsError("xi0 = 0: all couplings vanish")
    return ReferenceTimes(
        torque_time=math.pi / math.sqrt(x.xi0),
        half_scale_time=math.pi / math.sqrt(2.0 * x.xi0),
        certified_time=certified,
    )


def odd_ratio(
    ratio: float, tol: float, max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> Optional[Tuple[int, int]]:
    """Approximate ratio in (0, 1] by a continued-fraction convergent q/p.

    The first convergent within tol decides: it is returned only if q and p are
    both odd. Returns None past max_denominator.
    """
    if not (0 < ratio <= 1 + tol):
        return None
    h_prev, h = 1, math.floor(ratio)
    k_prev, k = 0, 1
    remainder = ratio - math.floor(ratio)
    while k <= max_denominator:
        if h > 0 and abs(ratio - h / k) <= tol:
            if h % 2 == 1 and k % 2 == 1:
                return h, k
            logger.debug(f"Ratio {ratio} matches {h}/{k}, which is not odd/odd")
            return None
        if remainder <= 0:
            return None
        inverse = 1.0 / remainder
        step = math.floor(inverse)
        remainder = inverse - step
        h_prev, h = h, step * h + h_prev
        k_prev, k = k, step * k + k_prev
    return None


def transfer_time(
    c: CouplingSet,
    tol: float = DEFAULT_TRANSFER_TOLERANCE,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
) -> Optional[TransferSolution]:
    """Minimal tau with |a3(tau)| = 1, or None when no complete transfer exists."""
    if tol <= 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    x = hopf_map(c)
    if x.xi0 == 0.0:
        raise NoDynamicsError("xi0 = 0: all couplings vanish")
    if abs(x.xi3) > tol * x.xi0:
        logger.debug(f"No transfer: xi3/xi0 = {x.xi3 / x.xi0:.3e}")
        return None

    h1, h2 = decompose(c)
    v_left, v_right = h1.magnitude, h2.magnitude
    slow, fast = min(v_left, v_right), max(v_left, v_right)
    if slow <= tol * fast:
        logger.debug("No transfer: one SU(2) factor is frozen")
        return None

    found = odd_ratio(slow / fast, tol, max_denominator)
    if found is None:
        logger.debug(f"No transfer: ratio {slow / fast} is not odd/odd within {tol}")
        return None
    q, p = found

    # least-squares fit of slow*tau = q*pi/2 and fast*tau = p*pi/2
    tau = 0.5 * math.pi * (q * slow + p * fast) / (slow**2 + fast**2)
    return TransferSolution(tau=tau, p=p, q=q, omega=math.pi / tau, vL=v_left, vR=v_right)


def population_series(
    c: CouplingSet, t_max: float, n_steps: int, initial_level: int = 1
) -> TimeSeries:
    """Amplitudes on the uniform grid 0..t_max with n_steps intervals."""
    if not isinstance(n_steps, (int, np.integer)) or n_steps < 2:
        raise InvalidArgumentError(f"n_steps must be an integer >= 2, got {n_steps}")
    if not (math.isfinite(t_max) and t_max > 0):
        raise InvalidArgumentError(f"t_max must be positive and finite, got {t_max}")

    times = np.linspace(0.0, t_max, int(n_steps) + 1)
    amplitudes = _evolve(c, StateAmplitudes.basis(initial_level), times)
    disconnected = _disconnected(hopf_map(c))
    if disconnected:
        logger.debug("Series computed in the disconnected sector (a3 identically 0)")
    return TimeSeries(times=times, amplitudes=amplitudes, disconnected=disconnected)


def two_level_hamiltonian(p: TwoLevelParams) -> np.ndarray:
    """[[delta, v], [v, -delta]], the convention of two_level_amplitudes."""
    return np.array([[p.delta, p.v], [p.v, -p.delta]], dtype=float)


def two_level_amplitudes(p: TwoLevelParams, t: TimeLike) -> Tuple[TimeLike, TimeLike]:
    """Rabi amplitudes (ag, ae) from the ground state.

    ag = cos(Vt) - i (delta/V) sin(Vt), ae = -i (v/V) sin(Vt), V = sqrt(v^2 + delta^2).
    """
    rate = math.hypot(p.v, p.delta)
    t_arr = np.asarray(t, dtype=float)
    sin_over = _sin_over(rate, t_arr)
    ag = np.cos(rate * t_arr) - 1j * p.delta * sin_over
    ae = -1j * p.v * sin_over
    if t_arr.ndim == 0:
        return complex(ag), complex(ae)
    return ag, ae


def two_level_inversion_time(p: TwoLevelParams) -> Optional[float]:
    """pi / (2|v|) on resonance; None when detuned (inversion is never complete)."""
    if p.delta != 0.0 or p.v == 0.0:
        return None
    return math.pi / (2.0 * abs(p.v))
