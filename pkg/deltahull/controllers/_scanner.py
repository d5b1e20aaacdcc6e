# built-in
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from logging import getLogger
from typing import Dict, Iterable, Iterator, Optional, Tuple

# app
from ..constants import CHECK_NAMES, DEFAULT_CAPS, GRAPH6_HEADER
from ..converters import Graph6Converter
from ..exceptions import CapExceededError, GraphError, SelfTestError
from ..models import InvariantReport, InvariantValue, ScanSummary, VertexSet
from ._auditor import Auditor
from ._invariants import verify_value


logger = getLogger('deltahull.controllers')


def read_stream(lines: Iterable[str]) -> Iterator[Tuple[int, str]]:
    """Yield `(graph_id, graph6)` for graph lines.

    Blank lines and the `>>graph6<<` header do not consume ids.
    """
    graph_id = 0
    for line in lines:
        line = line.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            continue
        yield graph_id, line
        graph_id += 1


def _audit_line(item: Tuple[int, str], auditor: Auditor) -> InvariantReport:
    graph_id, line = item
    try:
        graph = Graph6Converter().parse_line(line)
    except GraphError as exc:
        return InvariantReport(graph_id=graph_id, graph6=line, skipped='parse error: {}'.format(exc))
    try:
        return auditor.audit(graph, graph_id=graph_id, graph6=line)
    except CapExceededError as exc:
        return InvariantReport(
            graph_id=graph_id, graph6=line, n=graph.n, edge_count=graph.edge_count,
            skipped='{} (cap {})'.format(exc, exc.extra['cap']),
        )


def _check_witnesses(report: InvariantReport) -> bool:
    graph = Graph6Converter().parse_line(report.graph6)
    for name, ids in report.witnesses.items():
        value = InvariantValue(name=name, value=len(ids), witness_set=VertexSet.from_ids(ids, n=graph.n))
        if getattr(report, name) != value.value or not verify_value(graph, value):
            return False
    return True


def scan_stream(lines: Iterable[str], checks: Optional[Iterable[str]] = None,
                caps: Optional[Dict[str, int]] = None, force: bool = False,
                workers: int = 1) -> ScanSummary:
    """Audit every graph6 line of the stream.

    Reports keep input order for any number of workers.
    Raises `SelfTestError` when a proven inequality fails.
    """
    auditor = Auditor(
        checks=CHECK_NAMES if checks is None else tuple(checks),
        caps=dict(DEFAULT_CAPS, **(caps or {})),
        force=force,
    )
    items = list(read_stream(lines))
    audit = partial(_audit_line, auditor=auditor)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            reports = list(executor.map(audit, items, chunksize=max(1, len(items) // (workers * 4))))
    else:
        reports = [audit(item) for item in items]

    summary = ScanSummary(reports=reports)
    for report in summary.failing:
        if report.self_test_failures:
            raise SelfTestError(
                graph_id=report.graph_id,
                graph6=report.graph6,
                checks=report.self_test_failures,
            )
    for report in summary.reports:
        if report.skipped is None and not _check_witnesses(report):
            raise SelfTestError('witness does not verify', graph_id=report.graph_id, graph6=report.graph6)

    logger.info('scan finished', extra=summary.totals())
    return summary
