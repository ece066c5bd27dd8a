# Command-line interface components
from .report import RunReport
from .commands import load_graph
