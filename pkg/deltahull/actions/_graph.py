# built-in
import sys
from logging import getLogger
from pathlib import Path
from typing import Optional

# app
from ..converters import detect_converter, get_converter
from ..exceptions import GraphFormatError
from ..models import Graph, VertexSet


logger = getLogger('deltahull.actions')


def read_source(path: str) -> str:
    """Read text from a file, `-` means stdin.
    """
    if path == '-':
        return sys.stdin.read()
    return Path(path).read_text(encoding='utf8')


def get_graph(path: str, fmt: Optional[str] = None) -> Graph:
    content = read_source(path)
    if not content.strip():
        raise GraphFormatError('empty input', path=path)
    if fmt:
        converter = get_converter(fmt)
    else:
        converter = detect_converter(content)
        logger.debug('graph format detected', extra=dict(format=converter.name, path=path))
    return converter.loads(content)


def get_vertex_set(text: str, graph: Graph) -> VertexSet:
    return VertexSet.parse(text or '', n=graph.n)
