# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import is_convex
from .base import BaseCommand


class ConvexCommand(BaseCommand):
    """Check that a vertex set is Delta-convex. Prints `true` or `false`.
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
        convex = is_convex(graph, vertices)
        if self.config['json']:
            self._print_json(data=dict(set=vertices.as_list(), convex=convex))
            return True
        print('true' if convex else 'false')
        return True
