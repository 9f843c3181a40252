"""Net and filter convergence on graphs, with exhaustive theorem checks."""

from .errors import InputError, ParseError, SizeError
from .graph_core import Graph, VertexFunction, VertexSet

__all__ = ["Graph", "InputError", "ParseError", "SizeError", "VertexFunction", "VertexSet"]
__version__ = "0.1.0"
