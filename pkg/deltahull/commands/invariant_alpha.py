# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import independence_number
from .base import BaseCommand


class InvariantAlphaCommand(BaseCommand):
    """Independence number and a maximum independent set.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        builders.build_input(parser)
        builders.build_output(parser)
        return parser

    def __call__(self) -> bool:
        graph = self._get_graph()
        self._print_invariant(independence_number(graph))
        return True
