"""Design tool: couplings realizing complete transfer for a given odd pair or triple."""

import time

from pydantic import ValidationError

from ..config import get_settings
from ..core.hamiltonian import build_hamiltonian
from ..core.oracle import oracle_propagate
from ..core.triples import couplings_from_pair, euclid_triple, make_pair, pair_from_triple
from ..errors import InvalidPairError
from ..schemas.states import StateAmplitudes
from ..schemas.triples import DesignInput, DesignOutput, OddPair, PythTriple
from ..utils.logging import get_logger, log_tool_call

logger = get_logger("design_tool")


class DesignTool:
    """Tool for turning a Pythagorean triple into a ladder coupling set."""

    def __init__(self):
        self.settings = get_settings()

    def design(self, input_data: DesignInput) -> DesignOutput:
        """
        Build ladder couplings that transfer 1 -> 3 completely at input_data.tau.

        The result is verified with the oracle propagator.
        """
        start_time = time.perf_counter()

        try:
            pair = self._resolve_pair(input_data)
            logger.info(
                f"Designing couplings for (p, q) = ({pair.p}, {pair.q}), tau={input_data.tau}"
            )

            tolerance = input_data.cone_tolerance or self.settings.cone_tolerance
            couplings, solution = couplings_from_pair(pair, input_data.tau, tol=tolerance)

            final = oracle_propagate(
                build_hamiltonian(couplings),
                StateAmplitudes.basis(1),
                solution.tau,
                method=self.settings.oracle_method,
            )

            result = DesignOutput(
                couplings=couplings,
                triple=euclid_triple(pair),
                pair=pair,
                tau=solution.tau,
                omega=solution.omega,
                vL=solution.vL,
                vR=solution.vR,
                fidelity=float(final.populations[2]),
            )

            duration_ms = (time.perf_counter() - start_time) * 1000
            log_tool_call("design", input_data.model_dump(), duration_ms)
            return result

        except Exception as e:
            duration_ms = (time.perf_counter() - start_time) * 1000
            log_tool_call("design", input_data.model_dump(), duration_ms)
            logger.error(f"Error designing couplings: {e}")
            raise

    def _resolve_pair(self, input_data: DesignInput) -> OddPair:
        if input_data.triple is None:
            return make_pair(input_data.p, input_data.q)
        a, b, c = input_data.triple
        try:
            triple = PythTriple(a=a, b=b, c=c)
        except ValidationError as e:
            raise InvalidPairError(f"({a}, {b}, {c}) is not a Pythagorean triple") from e
        return pair_from_triple(triple)
