# built-in
from argparse import ArgumentParser

# app
from ..actions import emit_report, read_source
from ..config import builders
from ..controllers import scan_stream
from .base import BaseCommand


class ScanCommand(BaseCommand):
    """Audit every graph of a graph6 stream.

    Reports are written in input order as JSON (default) or CSV.
    Totals are logged. Fails when any check fails.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        parser.add_argument('--graph', help='path to graph6 stream, `-` for stdin.',
                            type=builders.source_path)
        builders.build_caps(parser)
        builders.build_report(parser, workers=True)
        builders.build_output(parser)
        return parser

    def __call__(self) -> bool:
        content = read_source(self.config['graph'])
        summary = scan_stream(
            content.splitlines(),
            checks=self.config.get('check'),
            caps=self.config.caps,
            force=self.config['force'],
            workers=self.config['workers'],
        )

        reports = summary.failing if self.config['failing'] else summary.reports
        fmt = 'csv' if self.config['csv'] else 'json'
        output = emit_report(reports, fmt=fmt)
        print(output, end='' if fmt == 'csv' else '\n')

        return not summary.failing
