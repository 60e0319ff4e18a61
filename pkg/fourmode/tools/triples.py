"""Triples tool: enumerate primitive Pythagorean triples."""

import time

from ..core.triples import enumerate_primitive
from ..schemas.triples import TriplesInput, TriplesOutput
from ..utils.logging import get_logger, log_tool_call

logger = get_logger("triples_tool")


class TriplesTool:
    """Tool for listing primitive triples from the Euclid odd-pair generator."""

    def list_triples(self, input_data: TriplesInput) -> TriplesOutput:
        start_time = time.perf_counter()
        triples = enumerate_primitive(input_data.c_max)
        duration_ms = (time.perf_counter() - start_time) * 1000
        log_tool_call("triples", input_data.model_dump(), duration_ms)
        return TriplesOutput(c_max=input_data.c_max, triples=triples, count=len(triples))
