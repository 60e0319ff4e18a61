"""Tools exposed by the four-mode toolkit (CLI subcommands and HTTP endpoints)."""

from .design import DesignTool
from .detect import DetectTool
from .optimize import OptimizeTool
from .simulate import SimulateTool
from .triples import TriplesTool

__all__ = [
    "SimulateTool",
    "DesignTool",
    "DetectTool",
    "TriplesTool",
    "OptimizeTool",
]
