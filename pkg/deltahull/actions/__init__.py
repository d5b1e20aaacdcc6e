"""Actions are functions that used only in commands
"""

# app
from ._graph import get_graph, get_vertex_set, read_source
from ._json import make_json
from ._report import emit_report


__all__ = [
    'emit_report',
    'get_graph',
    'get_vertex_set',
    'make_json',
    'read_source',
]
