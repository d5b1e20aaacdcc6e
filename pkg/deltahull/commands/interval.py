# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import delta_interval
from .base import BaseCommand


class IntervalCommand(BaseCommand):
    """Apply one Delta-interval step to a vertex set.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        builders.build_input(parser, vertex_set=True)
        builders.build_output(parser)
        return parser

    def __call__(self) -> bool:
        graph = self._get_graph()
        vertices = self._get_vertex_set(graph)
        result = delta_interval(graph, vertices)
        if self.config['json']:
            self._print_json(data=dict(set=vertices.as_list(), interval=result.as_list()))
            return True
        print(result)
        return True
