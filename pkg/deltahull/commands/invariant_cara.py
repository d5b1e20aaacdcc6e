# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import caratheodory_number
from .base import BaseCommand


class InvariantCaraCommand(BaseCommand):
    """Caratheodory number: the largest set with a hull point outside every leave-one-out hull.

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
        value = caratheodory_number(graph, cap=self.config.caps['cara'], force=self.config['force'])
        self._print_invariant(value)
        return True
