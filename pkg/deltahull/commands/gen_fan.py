# built-in
from argparse import ArgumentParser

# app
from ..models import GeneratorSpec
from ._gen import GenBaseCommand


class GenFanCommand(GenBaseCommand):
    """Generate the triangle fan with target value `n`.

    The fan has `2n - 1` vertices and `n - 1` triangles.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        parser.add_argument('--n', type=int, required=True, help='target value, at least 3.')
        return GenBaseCommand.build_parser(parser)

    def get_spec(self) -> GeneratorSpec:
        return GeneratorSpec.fan(self.args.n)
