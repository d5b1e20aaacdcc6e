# built-in
from collections import OrderedDict
from logging import getLogger
from typing import Dict, Iterable, Optional

# external
import attr

# app
from ..constants import CHECK_FAIL, CHECK_NAMES, CHECK_PASS, CHECK_SKIPPED, DEFAULT_CAPS, GRAPH6_MAX_N
from ..converters import Graph6Converter
from ..exceptions import CapExceededError
from ..models import Graph, InvariantReport
from ._closed_forms import cross_validate
from ._convexity import HullOperator
from ._invariants import caratheodory_number, helly_number, radon_number, rank
from ._structure import independence_number, is_connected, triangle_bound


logger = getLogger('deltahull.controllers')

# invariants each check reads
REQUIRES = dict(
    levi=('h', 'r'),
    eckhoff_jamison=('h', 'r', 'c'),
    rank_dominates=('h', 'r', 'c', 'd'),
    alpha_lower_bounds=('alpha', 'h', 'r', 'd'),
    m2k_upper_bounds=('h', 'r', 'd'),
    closed_form_match=('h', 'r', 'd'),
    conjecture_h_eq_r=('h', 'r'),
)


def _verdict(value: bool) -> str:
    return CHECK_PASS if value else CHECK_FAIL


@attr.s()
class Auditor:
    """Computes invariants of one graph and evaluates the selected checks.
    """
    checks = attr.ib(type=tuple, default=CHECK_NAMES, converter=tuple)
    caps = attr.ib(type=dict, factory=lambda: dict(DEFAULT_CAPS))
    force = attr.ib(type=bool, default=False)

    def __attrs_post_init__(self) -> None:
        unknown = set(self.checks) - set(CHECK_NAMES)
        if unknown:
            raise ValueError('unknown checks: ' + ', '.join(sorted(unknown)))

    @property
    def required(self) -> set:
        result = set()
        for name in self.checks:
            result.update(REQUIRES[name])
        return result

    def audit(self, graph: Graph, graph_id: int = 0, graph6: Optional[str] = None) -> InvariantReport:
        if graph6 is None and graph.n <= GRAPH6_MAX_N:
            graph6 = Graph6Converter().dumps(graph)

        report = InvariantReport(graph_id=graph_id, graph6=graph6, n=graph.n, edge_count=graph.edge_count)
        if graph.n == 0:
            report.skipped = 'empty graph'
            return report
        if not is_connected(graph):
            report.skipped = 'disconnected'
            logger.debug('skip disconnected graph', extra=dict(graph_id=graph_id, graph6=graph6))
            return report
        if graph.n > self.caps['partial'] and not self.force:
            raise CapExceededError(graph_id=graph_id, n=graph.n, cap=self.caps['partial'])

        logger.debug('audit graph', extra=dict(graph_id=graph_id, graph6=graph6, n=graph.n))
        report.off_triangle_count, report.triangle_count = triangle_bound(graph)
        operator = self._compute(graph, report)
        report.checks = self._evaluate(graph, report, operator)

        if report.counterexample:
            logger.warning('h differs from r', extra=dict(
                graph_id=graph_id, graph6=graph6, h=report.h, r=report.r,
            ))
        return report

    def _compute(self, graph: Graph, report: InvariantReport) -> HullOperator:
        operator = HullOperator(graph=graph)
        required = self.required
        values = []
        if 'alpha' in required:
            values.append(independence_number(graph))
        if 'h' in required:
            values.append(helly_number(graph, operator=operator))
        if 'r' in required:
            values.append(radon_number(graph, operator=operator))
        if 'c' in required and (graph.n <= min(self.caps['full'], self.caps['cara']) or self.force):
            value = caratheodory_number(graph, operator=operator, cap=self.caps['cara'], force=self.force)
            values.append(value)
        if 'd' in required:
            values.append(rank(graph, operator=operator))

        for value in values:
            setattr(report, value.name, value.value)
            report.witnesses[value.name] = value.witness_set.as_list()
        return operator

    def _evaluate(self, graph: Graph, report: InvariantReport, operator: HullOperator) -> Dict[str, str]:
        h, r, c, d, alpha = report.h, report.r, report.c, report.d, report.alpha
        results = OrderedDict()     # type: Dict[str, str]
        for name in CHECK_NAMES:
            results[name] = CHECK_SKIPPED
            if name not in self.checks:
                continue

            if name == 'levi':
                results[name] = _verdict(h <= r)
            elif name == 'eckhoff_jamison':
                if c is not None and h != 1:
                    results[name] = _verdict(r <= c * (h - 1) + 1)
            elif name == 'rank_dominates':
                if c is not None:
                    results[name] = _verdict(d >= max(h, c, r))
            elif name == 'alpha_lower_bounds':
                results[name] = _verdict(min(h, r, d) >= alpha)
            elif name == 'm2k_upper_bounds':
                bound = report.off_triangle_count + 2 * report.triangle_count
                results[name] = _verdict(max(h, r, d) <= bound)
            elif name == 'closed_form_match':
                validation = cross_validate(
                    graph,
                    values=dict(h=h, r=r, d=d, alpha=alpha),
                    operator=operator,
                    graph6=report.graph6,
                )
                closed = validation.chordal
                if validation.block_rank.applicable:
                    closed = attr.evolve(closed, d_closed=validation.block_rank.d_closed)
                report.closed_form = closed
                if validation.comparisons:
                    results[name] = _verdict(validation.matched)
            elif name == 'conjecture_h_eq_r':
                if graph.n >= 2:
                    results[name] = _verdict(h == r)
        return results


def audit_graph(graph: Graph, graph_id: int = 0, graph6: Optional[str] = None,
                checks: Optional[Iterable[str]] = None, caps: Optional[Dict[str, int]] = None,
                force: bool = False) -> InvariantReport:
    auditor = Auditor(
        checks=CHECK_NAMES if checks is None else tuple(checks),
        caps=dict(DEFAULT_CAPS, **(caps or {})),
        force=force,
    )
    return auditor.audit(graph, graph_id=graph_id, graph6=graph6)
