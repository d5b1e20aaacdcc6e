# built-in
import csv
from io import StringIO
from typing import Iterable, List, Union

# app
from ..constants import CHECK_NAMES, CHECK_SKIPPED, CSV_COLUMNS
from ..models import InvariantReport, ScanSummary
from ._json import make_json


Reports = Union[ScanSummary, InvariantReport, Iterable[InvariantReport]]


def _as_list(data: Reports) -> List[InvariantReport]:
    if isinstance(data, ScanSummary):
        return list(data.reports)
    if isinstance(data, InvariantReport):
        return [data]
    return list(data)


def _csv_row(report: InvariantReport) -> list:
    row = [
        report.graph_id, report.graph6, report.n, report.edge_count,
        report.triangle_count, report.off_triangle_count,
        report.alpha, report.h, report.r, report.c, report.d,
    ]
    row.extend(report.checks.get(name, CHECK_SKIPPED) for name in CHECK_NAMES)
    return ['' if value is None else value for value in row]


def emit_report(data: Reports, fmt: str = 'json') -> str:
    """Serialize reports as JSON or CSV.

    A single report becomes a JSON object, anything else a JSON list.
    CSV always has the header row.
    """
    if fmt == 'json':
        if isinstance(data, InvariantReport):
            return make_json(data.as_dict(), colors=False)
        return make_json([report.as_dict() for report in _as_list(data)], colors=False)

    if fmt == 'csv':
        stream = StringIO()
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for report in _as_list(data):
            writer.writerow(_csv_row(report))
        return stream.getvalue()

    raise ValueError('unknown report format: ' + str(fmt))
