# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import delta_hull
from .base import BaseCommand


class HullCommand(BaseCommand):
    """Compute the Delta-convex hull of a vertex set.

    Prints hull vertex ids in ascending order, separated by spaces.
    With `--trace` prints every closure round, one line per round.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        builders.build_input(parser, vertex_set=True)
        parser.add_argument('--trace', action='store_true', help='print every closure round.')
        builders.build_output(parser)
        return parser

    def __call__(self) -> bool:
        graph = self._get_graph()
        vertices = self._get_vertex_set(graph)
        trace = delta_hull(graph, vertices)
        self.logger.debug('hull computed', extra=dict(rounds=len(trace.rounds)))

        if self.config['json']:
            self._print_json(data=trace.as_dict())
            return True
        if self.config['trace']:
            for part in trace.rounds:
                print(part)
            return True
        print(trace.final)
        return True
