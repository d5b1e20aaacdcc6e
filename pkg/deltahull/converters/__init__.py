# built-in
from typing import Dict

# app
from ..constants import FORMAT_ALIASES
from ..exceptions import GraphFormatError
from .base import BaseConverter
from .edgelist import EdgeListConverter
from .graph6 import Graph6Converter


__all__ = [
    'CONVERTERS',
    'detect_converter',
    'get_converter',

    'BaseConverter',
    'EdgeListConverter',
    'Graph6Converter',
]


# order matters for detection: graph6 if the first line decodes, else edge list
CONVERTERS = dict(
    graph6=Graph6Converter(),
    edgelist=EdgeListConverter(),
)  # type: Dict[str, BaseConverter]


def get_converter(fmt: str) -> BaseConverter:
    return CONVERTERS[FORMAT_ALIASES[fmt]]


def detect_converter(content: str) -> BaseConverter:
    for converter in CONVERTERS.values():
        if converter.can_parse(content):
            return converter
    raise GraphFormatError('cannot determine graph format')
