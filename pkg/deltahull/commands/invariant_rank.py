# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import rank
from .base import BaseCommand


class InvariantRankCommand(BaseCommand):
    """Rank: the largest convexly independent set.

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
        value = rank(graph, cap=self.config.caps['partial'], force=self.config['force'])
        self._print_invariant(value)
        return True
