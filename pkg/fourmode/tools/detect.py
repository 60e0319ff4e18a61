"""Detect tool: Hopf coordinates and Pythagorean transfer condition of a coupling set."""

import time

from ..config import get_settings
from ..core.dynamics import frequencies, reference_times, transfer_time
from ..core.hopf import hopf_map
from ..core.triples import detect_transfer_condition
from ..schemas.simulate import DetectInput, DetectOutput, MatchSummary
from ..utils.logging import get_logger, log_tool_call

logger = get_logger("detect_tool")


class DetectTool:
    """Tool for recognising transfer-capable coupling sets."""

    def __init__(self):
        self.settings = get_settings()

    def detect(self, input_data: DetectInput) -> DetectOutput:
        """Report xi, frequencies, reference times and the matched triple (if any)."""
        start_time = time.perf_counter()
        tol = input_data.tol or self.settings.transfer_tolerance

        try:
            couplings = input_data.couplings
            hopf = hopf_map(couplings)
            logger.info(f"Detecting transfer condition for {couplings.as_tuple()} (tol={tol})")

            if hopf.xi0 == 0.0:
                result = DetectOutput(hopf=hopf)
            else:
                solution = transfer_time(
                    couplings, tol=tol, max_denominator=self.settings.max_denominator
                )
                match = detect_transfer_condition(
                    couplings, tol=tol, max_denominator=self.settings.max_denominator
                )
                summary = None
                if match is not None:
                    summary = MatchSummary(
                        triple=match.triple,
                        pair=match.pair,
                        tau=match.solution.tau,
                        omega=match.solution.omega,
                        vL=match.solution.vL,
                        vR=match.solution.vR,
                    )
                result = DetectOutput(
                    hopf=hopf,
                    frequencies=frequencies(hopf, tol=self.settings.cone_tolerance),
                    reference_times=reference_times(
                        hopf, certified=solution.tau if solution else None
                    ),
                    match=summary,
                )

            duration_ms = (time.perf_counter() - start_time) * 1000
            log_tool_call("detect", input_data.model_dump(), duration_ms)
            return result

        except Exception as e:
            duration_ms = (time.perf_counter() - start_time) * 1000
            log_tool_call("detect", input_data.model_dump(), duration_ms)
            logger.error(f"Error detecting transfer condition: {e}")
            raise
