# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import is_chordal
from .base import BaseCommand


class ChordalCommand(BaseCommand):
    """Check chordality of the graph.

    Prints `true` and a perfect elimination ordering,
    or `false` and a chordless cycle.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        builders.build_input(parser)
        builders.build_output(parser)
        return parser

    def __call__(self) -> bool:
        graph = self._get_graph()
        witness = is_chordal(graph)
        if self.config['json']:
            self._print_json(data=witness.as_dict())
            return True
        if witness.chordal:
            print('true')
            print('ordering', ' '.join(map(str, witness.ordering)))
        else:
            print('false')
            print('cycle', ' '.join(map(str, witness.cycle)))
        return True
