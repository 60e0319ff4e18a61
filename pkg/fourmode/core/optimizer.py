"""Derivative-free inverse design of transfer-capable couplings.

The objective is the closed-form infidelity 1 - |a3(tau)|^2 at a fixed target
time. Optima of that objective satisfy the Pythagorean condition, which the
search checks after the fact.
"""

import math
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..errors import InvalidArgumentError
from ..schemas.couplings import CouplingSet
from ..schemas.design import DesignProblem, DesignResult, NelderMeadOptions, NelderMeadResult
from ..utils.logging import get_logger
from .hopf import hopf_map
from .triples import detect_transfer_condition

logger = get_logger("optimizer")

Objective = Callable[[np.ndarray], float]

DEFAULT_MATCH_TOLERANCE = 1e-5
DEFAULT_SUCCESS_INFIDELITY = 1e-8


def _infidelity_values(v12: float, v23: float, v34: float, v14: float, tau: float) -> float:
    xi1 = v12 * v23 + v14 * v34
    xi3 = 0.5 * (v12 * v12 + v14 * v14 - v23 * v23 - v34 * v34)
    weight = xi1 * xi1 + xi3 * xi3
    xi0 = 0.5 * (v12 * v12 + v14 * v14 + v23 * v23 + v34 * v34)
    if weight <= (1e-15 * xi0) ** 2 or xi0 == 0.0:
        return 1.0
    v_left = 0.5 * math.hypot(v12 - v34, v23 + v14)
    v_right = 0.5 * math.hypot(v12 + v34, v23 - v14)
    a3_squared = (xi1 * xi1 / weight) * (math.sin(v_left * tau) * math.sin(v_right * tau)) ** 2
    return min(1.0, max(0.0, 1.0 - a3_squared))


def infidelity(c: CouplingSet, tau: float) -> float:
    """1 - |a3(tau)|^2 from |psi_1>; 1 in the disconnected sector."""
    if not (math.isfinite(tau) and tau > 0):
        raise InvalidArgumentError(f"tau must be positive and finite, got {tau}")
    return _infidelity_values(c.v12, c.v23, c.v34, c.v14, tau)


def _project(x: np.ndarray, bounds: Optional[np.ndarray]) -> np.ndarray:
    if bounds is None:
        return x
    return np.clip(x, bounds[:, 0], bounds[:, 1])


def _initial_simplex(
    x0: np.ndarray, steps: np.ndarray, bounds: Optional[np.ndarray]
) -> np.ndarray:
    simplex = [x0]
    for i in range(x0.size):
        vertex = x0.copy()
        vertex[i] += steps[i]
        vertex = _project(vertex, bounds)
        if vertex[i] == x0[i]:
            vertex[i] = x0[i] - steps[i]
            vertex = _project(vertex, bounds)
        simplex.append(vertex)
    return np.array(simplex)


def nelder_mead(
    f: Objective,
    x0: Sequence[float],
    options: Optional[NelderMeadOptions] = None,
    bounds: Optional[Sequence[Tuple[float, float]]] = None,
    steps: Optional[Sequence[float]] = None,
) -> NelderMeadResult:
    """Bounded Nelder-Mead simplex search; bounds are enforced by projection.

    Stops when the simplex diameter drops below ``xatol`` or the objective
    spread below ``fatol``; on budget exhaustion returns the best point with
    ``converged=False``.
    """
    options = options or NelderMeadOptions()
    x0 = np.asarray(x0, dtype=float).reshape(-1)
    if not np.all(np.isfinite(x0)):
        raise InvalidArgumentError("starting point must be finite")
    box = None if bounds is None else np.asarray(bounds, dtype=float).reshape(-1, 2)
    if box is not None and box.shape[0] != x0.size:
        raise InvalidArgumentError(f"expected {x0.size} bounds, got {box.shape[0]}")
    if box is not None and np.any((x0 < box[:, 0]) | (x0 > box[:, 1])):
        raise InvalidArgumentError("starting point lies outside the bounds")
    step_sizes = (
        np.full(x0.size, options.initial_step) if steps is None else np.asarray(steps, float)
    )

    alpha, gamma = options.reflection, options.expansion
    rho, sigma = options.contraction, options.shrink

    simplex = _initial_simplex(x0, step_sizes, box)
    values = np.array([f(x) for x in simplex])
    evaluations = len(values)
    converged = False

    while True:
        order = np.argsort(values, kind="stable")
        simplex, values = simplex[order], values[order]

        diameter = np.max(np.linalg.norm(simplex[1:] - simplex[0], axis=1))
        if diameter < options.xatol or values[-1] - values[0] < options.fatol:
            converged = True
            break
        if evaluations >= options.max_evaluations:
            break

        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]

        reflected = _project(centroid + alpha * (centroid - worst), box)
        f_reflected = f(reflected)
        evaluations += 1

        if f_reflected < values[0]:
            expanded = _project(centroid + gamma * (reflected - centroid), box)
            f_expanded = f(expanded)
            evaluations += 1
            if f_expanded < f_reflected:
                simplex[-1], values[-1] = expanded, f_expanded
            else:
                simplex[-1], values[-1] = reflected, f_reflected
            continue

        if f_reflected < values[-2]:
            simplex[-1], values[-1] = reflected, f_reflected
            continue

        if f_reflected < values[-1]:
            contracted = _project(centroid + rho * (reflected - centroid), box)
        else:
            contracted = _project(centroid + rho * (worst - centroid), box)
        f_contracted = f(contracted)
        evaluations += 1
        if f_contracted < min(f_reflected, values[-1]):
            simplex[-1], values[-1] = contracted, f_contracted
            continue

        # shrink towards the best vertex
        simplex[1:] = simplex[0] + sigma * (simplex[1:] - simplex[0])
        values[1:] = [f(x) for x in simplex[1:]]
        evaluations += len(simplex) - 1

    best = int(np.argmin(values))
    return NelderMeadResult(
        x=tuple(float(v) for v in simplex[best]),
        fun=float(values[best]),
        evaluations=evaluations,
        converged=converged,
    )


def _couplings(x: np.ndarray, ladder_only: bool) -> CouplingSet:
    values = list(x) + ([0.0] if ladder_only else [])
    return CouplingSet.from_values(values)


def design_search(
    prob: DesignProblem,
    match_tolerance: float = DEFAULT_MATCH_TOLERANCE,
    success_infidelity: float = DEFAULT_SUCCESS_INFIDELITY,
) -> DesignResult:
    """Seeded multistart Nelder-Mead on the infidelity at prob.tau_target.

    Starts that reach ``success_infidelity`` and pass Pythagorean detection
    rank first, then lower infidelity, then the lower start index.
    """
    tau = prob.tau_target
    ladder_only = prob.ladder_only
    box = np.array(prob.bounds, dtype=float)
    widths = box[:, 1] - box[:, 0]
    steps = np.where(widths > 0, 0.1 * widths, prob.options.initial_step)
    rng = np.random.default_rng(prob.seed)

    if ladder_only:
        def objective(x: np.ndarray) -> float:
            return _infidelity_values(x[0], x[1], x[2], 0.0, tau)
    else:
        def objective(x: np.ndarray) -> float:
            return _infidelity_values(x[0], x[1], x[2], x[3], tau)

    ranked = []
    total_evaluations = 0
    for index in range(prob.n_starts):
        start = rng.uniform(box[:, 0], box[:, 1])
        run = nelder_mead(objective, start, prob.options, bounds=box, steps=steps)
        total_evaluations += run.evaluations

        couplings = _couplings(np.array(run.x), ladder_only)
        matched = None
        if run.fun <= success_infidelity:
            matched = detect_transfer_condition(couplings, tol=match_tolerance)
        logger.debug(
            f"Start {index}: infidelity {run.fun:.3e} after {run.evaluations} evaluations"
            f"{' (matched)' if matched else ''}"
        )
        rank = (0 if matched is not None else 1, run.fun, index)
        ranked.append((rank, couplings, run, matched))

    rank, couplings, run, matched = min(ranked, key=lambda item: item[0])
    logger.info(
        f"Design search at tau={tau}: best infidelity {run.fun:.3e} from start {rank[2]}"
    )
    return DesignResult(
        tau_target=tau,
        couplings=couplings,
        infidelity=run.fun,
        hopf=hopf_map(couplings),
        matched=matched,
        evaluations=total_evaluations,
        converged=run.converged,
        start_index=rank[2],
    )
