"""Tool registry shared by the CLI and the HTTP surface.

Tools are looked up by name, fed a validated pydantic input, and their
pydantic output is returned as plain JSON-compatible data.
"""

from typing import Any, Dict

from . import __version__
from .schemas import (
    DesignInput,
    DesignOutput,
    DetectInput,
    DetectOutput,
    OptimizeInput,
    OptimizeOutput,
    SimulateInput,
    SimulateOutput,
    TriplesInput,
    TriplesOutput,
)
from .tools import DesignTool, DetectTool, OptimizeTool, SimulateTool, TriplesTool
from .utils.logging import get_logger

logger = get_logger("tool_server")


class ToolServer:
    """Named registry of the four-mode tools."""

    def __init__(self):
        """Initialize the registry with the available tools."""
        self.tools = {
            "simulate": {
                "tool": SimulateTool(),
                "input_schema": SimulateInput,
                "output_schema": SimulateOutput,
                "description": "Level populations and amplitudes on a uniform time grid",
                "method": "simulate",
            },
            "design": {
                "tool": DesignTool(),
                "input_schema": DesignInput,
                "output_schema": DesignOutput,
                "description": "Ladder couplings for complete 1 -> 3 transfer",
                "method": "design",
            },
            "detect": {
                "tool": DetectTool(),
                "input_schema": DetectInput,
                "output_schema": DetectOutput,
                "description": "Hopf coordinates and Pythagorean transfer condition",
                "method": "detect",
            },
            "triples": {
                "tool": TriplesTool(),
                "input_schema": TriplesInput,
                "output_schema": TriplesOutput,
                "description": "Primitive Pythagorean triples up to a hypotenuse bound",
                "method": "list_triples",
            },
            "optimize": {
                "tool": OptimizeTool(),
                "input_schema": OptimizeInput,
                "output_schema": OptimizeOutput,
                "description": "Multistart Nelder-Mead search for transfer at a target time",
                "method": "optimize",
            },
        }

    def list_tools(self) -> Dict[str, Any]:
        """
        List all available tools with their schemas.

        Returns:
            Dictionary of available tools and their metadata
        """
        tools_info = {}

        for tool_name, tool_info in self.tools.items():
            tools_info[tool_name] = {
                "description": tool_info["description"],
                "input_schema": tool_info["input_schema"].model_json_schema(),
                "output_schema": tool_info["output_schema"].__name__,
            }

        return {
            "tools": tools_info,
            "server_info": {
                "name": "fourmode",
                "version": __version__,
                "description": "Four-mode population transfer: simulation, design and detection",
            },
        }

    def call_tool(self, tool_name: str, input_data: Dict[str, Any]) -> Any:
        """
        Validate input_data and run the named tool.

        Returns:
            The tool's pydantic output model

        Raises:
            ValueError: If the tool is unknown or the input is invalid
        """
        if tool_name not in self.tools:
            available_tools = list(self.tools.keys())
            raise ValueError(f"Tool '{tool_name}' not found. Available tools: {available_tools}")

        tool_info = self.tools[tool_name]

        try:
            validated_input = tool_info["input_schema"](**input_data)
            method = getattr(tool_info["tool"], tool_info["method"])

            logger.info(f"Calling tool {tool_name}")
            result = method(validated_input)

            logger.info(f"Tool {tool_name} completed successfully")
            return result

        except Exception as e:
            logger.error(f"Error calling tool {tool_name}: {e}")
            raise

    def get_tool_schema(self, tool_name: str) -> Dict[str, Any]:
        """Input and output JSON schema of one tool."""
        if tool_name not in self.tools:
            raise ValueError(f"Tool '{tool_name}' not found")

        tool_info = self.tools[tool_name]
        return {
            "tool_name": tool_name,
            "description": tool_info["description"],
            "input_schema": tool_info["input_schema"].model_json_schema(),
            "output_schema": tool_info["output_schema"].model_json_schema(),
        }


# Global registry instance
tool_server = ToolServer()


def get_tool_server() -> ToolServer:
    """Get the global tool registry."""
    return tool_server
