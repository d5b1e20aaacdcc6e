# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..controllers import block_decomposition, is_block_graph
from .base import BaseCommand


class BlocksCommand(BaseCommand):
    """Show blocks and cut vertices of the graph.

    One block per line, then the cut vertices on the `cut` line.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        builders.build_input(parser)
        builders.build_output(parser)
        return parser

    def __call__(self) -> bool:
        graph = self._get_graph()
        decomposition = block_decomposition(graph)
        if self.config['json']:
            data = decomposition.as_dict()
            data['block_graph'] = is_block_graph(graph)
            self._print_json(data=data)
            return True
        for block in decomposition.blocks:
            print('block', block)
        print('cut {}'.format(decomposition.cut_vertices).rstrip())
        return True
