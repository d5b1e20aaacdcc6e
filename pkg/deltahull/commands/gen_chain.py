# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..models import GeneratorSpec
from ._gen import GenBaseCommand


def _lengths(string):
    return [int(item) for item in builders.comma_list(string)]


class GenChainCommand(GenBaseCommand):
    """Generate a chain of `k` triangles joined by paths.

    `--paths` gives the number of internal vertices of each of the `k - 1` paths.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        parser.add_argument('--k', type=int, required=True, help='number of triangles.')
        parser.add_argument('--paths', type=_lengths, default=[],
                            help='comma-separated internal path lengths, like `1,2`.')
        return GenBaseCommand.build_parser(parser)

    def get_spec(self) -> GeneratorSpec:
        return GeneratorSpec.chain(self.args.k, self.args.paths)
