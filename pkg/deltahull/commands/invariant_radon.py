# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import radon_number
from .base import BaseCommand


class InvariantRadonCommand(BaseCommand):
    """Radon number: the largest set with no Radon partition.

    Prints the value, then a lexicographically smallest witness set.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        builders.build_input(parser)
        builders.build_caps(parser)
        builders.build_output(parser)
        return parser

    def __call__(self) -> bool:
        graph = self._get_graph()
        value = radon_number(graph, cap=self.config.caps['partial'], force=self.config['force'])
        self._print_invariant(value)
        return True
