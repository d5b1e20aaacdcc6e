# built-in
from pathlib import Path

# external
from dephell_argparse._parser import Parser

# app
from ..constants import FORMATS, LOG_FORMATTERS, LOG_LEVELS


# helper function for path values
def expanded_path(string):
    return Path(string).expanduser().resolve().as_posix()


# helper function for `-` (stdin) or path values
def source_path(string):
    if string == '-':
        return string
    return expanded_path(string)


# helper function for comma-separated lists
def comma_list(string):
    return [item.strip() for item in string.split(',') if item.strip()]


def build_config(parser: Parser) -> None:
    config_group = parser.add_argument_group('Configuration file')
    config_group.add_argument('-c', '--config', help='path to config file.', type=expanded_path)
    config_group.add_argument('-e', '--env', help='environment in config.')


def build_input(parser: Parser, vertex_set: bool = False) -> None:
    input_group = parser.add_argument_group('Input graph')
    input_group.add_argument('--graph', help='path to graph file, `-` for stdin.', type=source_path)
    input_group.add_argument('--format', choices=FORMATS,
                             help='graph format. Detected from content if not specified.')
    if vertex_set:
        input_group.add_argument('--set', help='comma-separated vertex ids, like `0,1,4`.')


def build_caps(parser: Parser) -> None:
    caps_group = parser.add_argument_group('Search limits')
    caps_group.add_argument('--cap', type=int, help='override every size cap with one value.')
    caps_group.add_argument('--caps-full', type=int,
                            help='max vertices for a full audit (Caratheodory included).')
    caps_group.add_argument('--caps-partial', type=int,
                            help='max vertices for Helly, Radon and rank searches.')
    caps_group.add_argument('--caps-cara', type=int, help='max vertices for the Caratheodory search.')
    caps_group.add_argument('--force', action='store_true', help='ignore size caps.')


def build_report(parser: Parser, workers: bool = False) -> None:
    report_group = parser.add_argument_group('Audit report')
    report_group.add_argument('--check', type=comma_list, help='comma-separated check names to evaluate.')
    report_group.add_argument('--csv', action='store_true', help='write reports as CSV.')
    report_group.add_argument('--failing', action='store_true',
                              help='write only reports with failed checks.')
    if workers:
        report_group.add_argument('--workers', type=int, help='worker processes for auditing.')


def build_output(parser: Parser) -> None:
    output_group = parser.add_argument_group('Console output')
    output_group.add_argument('--json', action='store_true', help='write result as JSON.')
    output_group.add_argument('--logformat', choices=LOG_FORMATTERS, help='format for log messages.')
    output_group.add_argument('--level', choices=LOG_LEVELS, help='minimal level for log messages.')

    output_group.add_argument('--nocolors', action='store_true', help='do not color output.')
    output_group.add_argument('--table', action='store_true', help='use table for JSON output.')
    output_group.add_argument('--silent', action='store_true',
                              help='suppress any log messages except errors.')
    output_group.add_argument('--filter', help='filter for JSON output.')

    output_group.add_argument('--traceback', action='store_true', help='show traceback for exceptions.')
    output_group.add_argument('--pdb', action='store_true', help='run pdb for critical exceptions.')
