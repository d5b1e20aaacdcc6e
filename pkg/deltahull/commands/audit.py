# built-in
from argparse import ArgumentParser

# app
from ..actions import emit_report
from ..config import builders
from ..constants import CHECK_NAMES
from ..controllers import audit_graph
from .base import BaseCommand


class AuditCommand(BaseCommand):
    """Compute every invariant of one graph and evaluate the audit checks.

    Fails when any evaluated check fails.
    """
    @staticmethod
    def build_parser(parser) -> ArgumentParser:
        builders.build_config(parser)
        builders.build_input(parser)
        builders.build_caps(parser)
        builders.build_report(parser)
        builders.build_output(parser)
        return parser

    def __call__(self) -> bool:
        graph = self._get_graph()
        report = audit_graph(
            graph,
            checks=self.config.get('check'),
            caps=self.config.caps,
            force=self.config['force'],
        )

        if self.config['csv']:
            print(emit_report(report, fmt='csv'), end='')
        elif self.config['json']:
            self._print_json(data=report.as_dict())
        else:
            self._print_text(report)

        if report.failed:
            self.logger.warning('checks failed', extra=dict(checks=report.failed_checks))
            return False
        return True

    @staticmethod
    def _print_text(report) -> None:
        if report.skipped:
            print('skipped', report.skipped)
            return
        for name in ('graph6', 'n', 'edge_count', 'triangle_count', 'off_triangle_count',
                     'alpha', 'h', 'r', 'c', 'd'):
            value = getattr(report, name)
            print(name, '-' if value is None else value)
        for name in CHECK_NAMES:
            print(name, report.check(name))
