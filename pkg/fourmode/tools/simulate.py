"""Simulate tool: level populations over time."""

import time

import numpy as np

from ..config import get_settings
from ..core.dynamics import population_series
from ..core.hamiltonian import build_hamiltonian
from ..core.oracle import oracle_series
from ..errors import NumericalFailureError
from ..schemas.simulate import SimulateInput, SimulateOutput
from ..schemas.states import AMPLITUDE_COLUMNS, StateAmplitudes
from ..utils.logging import get_logger, log_tool_call

logger = get_logger("simulate_tool")

VERIFY_TOLERANCE = 1e-9


class SimulateTool:
    """Tool for computing population time series from the factored propagator."""

    def __init__(self):
        self.settings = get_settings()

    def simulate(self, input_data: SimulateInput) -> SimulateOutput:
        """
        Propagate |psi_initial> over a uniform grid.

        Args:
            input_data: SimulateInput with couplings, grid and options

        Returns:
            SimulateOutput with one row per grid point
        """
        start_time = time.perf_counter()
        steps = input_data.steps or self.settings.default_steps

        try:
            logger.info(
                f"Simulating {input_data.couplings.as_tuple()} to t={input_data.t_max} "
                f"in {steps} steps"
            )
            series = population_series(
                input_data.couplings, input_data.t_max, steps, input_data.initial_level
            )

            deviation = None
            if input_data.verify:
                deviation = self._verify(input_data, series.times, series.amplitudes)

            result = SimulateOutput(
                couplings=input_data.couplings,
                initial_level=input_data.initial_level,
                disconnected=series.disconnected,
                columns=list(AMPLITUDE_COLUMNS),
                rows=series.rows(),
                max_oracle_deviation=deviation,
            )

            duration_ms = (time.perf_counter() - start_time) * 1000
            log_tool_call("simulate", input_data.model_dump(), duration_ms)
            return result

        except Exception as e:
            duration_ms = (time.perf_counter() - start_time) * 1000
            log_tool_call("simulate", input_data.model_dump(), duration_ms)
            logger.error(f"Error simulating: {e}")
            raise

    def _verify(
        self, input_data: SimulateInput, times: np.ndarray, amplitudes: np.ndarray
    ) -> float:
        """Largest amplitude deviation from the oracle over the grid."""
        h = build_hamiltonian(input_data.couplings)
        reference = oracle_series(h, StateAmplitudes.basis(input_data.initial_level), times)
        deviation = float(np.max(np.abs(reference - amplitudes)))
        logger.info(f"Oracle deviation over {len(times)} points: {deviation:.3e}")
        if deviation > VERIFY_TOLERANCE:
            raise NumericalFailureError(
                f"factored propagation deviates from the oracle by {deviation:.3e}"
            )
        return deviation
