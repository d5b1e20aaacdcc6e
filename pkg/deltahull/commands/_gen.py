# built-in
from argparse import ArgumentParser

# app
from ..config import builders
from ..constants import FORMATS
from ..controllers import family_value, generate
from ..converters import get_converter
from ..models import GeneratorSpec
from .base import BaseCommand


class GenBaseCommand(BaseCommand):
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        parser.add_argument('--format', choices=FORMATS, help='output format, graph6 by default.')
        parser.add_argument('--roles', action='store_true', help='print `id label` line per vertex.')
        builders.build_output(parser)
        return parser

    def get_spec(self) -> GeneratorSpec:
        raise NotImplementedError

    def __call__(self) -> bool:
        spec = self.get_spec()
        generated = generate(spec)
        converter = get_converter(self.config.get('format') or 'graph6')
        content = converter.dumps(generated.graph)
        self.logger.debug('graph generated', extra=dict(spec=str(spec), n=generated.graph.n))

        if self.config['json']:
            self._print_json(data=dict(
                family=spec.family,
                value=family_value(spec),
                n=generated.graph.n,
                edges=generated.graph.edge_count,
                graph=content,
                roles={label: vertex for vertex, label in enumerate(generated.roles)},
            ))
            return True

        print(content.rstrip('\n'))
        if self.config['roles']:
            for vertex, label in enumerate(generated.roles):
                print(vertex, label)
        return True
