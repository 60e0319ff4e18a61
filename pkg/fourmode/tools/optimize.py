"""Optimize tool: multistart design search at a target transfer time."""

import time

from ..config import get_settings
from ..core.hamiltonian import build_hamiltonian
from ..core.optimizer import design_search
from ..core.oracle import oracle_propagate
from ..schemas.design import DesignProblem, NelderMeadOptions, OptimizeInput, OptimizeOutput
from ..schemas.states import StateAmplitudes
from ..utils.logging import get_logger, log_tool_call

logger = get_logger("optimize_tool")


class OptimizeTool:
    """Tool for searching coupling space for complete 1 -> 3 transfer."""

    def __init__(self):
        self.settings = get_settings()

    def optimize(self, input_data: OptimizeInput) -> OptimizeOutput:
        """
        Run the seeded multistart search and re-check the winner with the oracle.

        Args:
            input_data: OptimizeInput with tau, bounds, seed and search space

        Returns:
            OptimizeOutput with the DesignResult and the oracle infidelity
        """
        start_time = time.perf_counter()

        try:
            problem = DesignProblem.uniform(
                input_data.tau,
                input_data.lo,
                input_data.hi,
                ladder_only=not input_data.diamond,
                seed=input_data.seed,
                n_starts=input_data.starts or self.settings.optimizer_starts,
                options=NelderMeadOptions(
                    max_evaluations=self.settings.optimizer_max_evaluations
                ),
            )
            logger.info(
                f"Optimizing at tau={problem.tau_target} over [{input_data.lo}, {input_data.hi}] "
                f"with {problem.n_starts} starts (seed {problem.seed})"
            )
            result = design_search(
                problem,
                match_tolerance=self.settings.match_tolerance,
                success_infidelity=self.settings.success_infidelity,
            )

            final = oracle_propagate(
                build_hamiltonian(result.couplings),
                StateAmplitudes.basis(1),
                problem.tau_target,
                method=self.settings.oracle_method,
            )
            output = OptimizeOutput(
                result=result, oracle_infidelity=max(0.0, 1.0 - float(final.populations[2]))
            )

            duration_ms = (time.perf_counter() - start_time) * 1000
            log_tool_call("optimize", input_data.model_dump(), duration_ms)
            return output

        except Exception as e:
            duration_ms = (time.perf_counter() - start_time) * 1000
            log_tool_call("optimize", input_data.model_dump(), duration_ms)
            logger.error(f"Error in design search: {e}")
            raise
