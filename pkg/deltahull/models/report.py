# built-in
from collections import OrderedDict
from typing import Any, Dict, List, Optional

# external
import attr

# app
from ..constants import CHECK_FAIL, CHECK_NAMES, CHECK_SKIPPED, SELF_TEST_CHECKS
from .closed_form import ClosedFormResult


@attr.s()
class InvariantReport:
    """Everything audited for one graph.

    Skipped reports carry `skipped` with the reason and no invariants.
    """
    graph_id = attr.ib(type=int)
    graph6 = attr.ib(type=str)
    n = attr.ib(type=Optional[int], default=None)
    edge_count = attr.ib(type=Optional[int], default=None)
    triangle_count = attr.ib(type=Optional[int], default=None)
    off_triangle_count = attr.ib(type=Optional[int], default=None)

    alpha = attr.ib(type=Optional[int], default=None)
    h = attr.ib(type=Optional[int], default=None)
    r = attr.ib(type=Optional[int], default=None)
    c = attr.ib(type=Optional[int], default=None)
    d = attr.ib(type=Optional[int], default=None)

    closed_form = attr.ib(type=Optional[ClosedFormResult], default=None)
    checks = attr.ib(type=dict, factory=OrderedDict)
    witnesses = attr.ib(type=dict, factory=dict)
    skipped = attr.ib(type=Optional[str], default=None)

    @property
    def failed_checks(self) -> List[str]:
        return [name for name in CHECK_NAMES if self.checks.get(name) == CHECK_FAIL]

    @property
    def failed(self) -> bool:
        return bool(self.failed_checks)

    @property
    def self_test_failures(self) -> List[str]:
        return [name for name in self.failed_checks if name in SELF_TEST_CHECKS]

    @property
    def counterexample(self) -> bool:
        return self.checks.get('conjecture_h_eq_r') == CHECK_FAIL

    def check(self, name: str) -> str:
        return self.checks.get(name, CHECK_SKIPPED)

    def as_dict(self) -> Dict[str, Any]:
        return dict(
            graph_id=self.graph_id,
            graph6=self.graph6,
            n=self.n,
            edge_count=self.edge_count,
            triangle_count=self.triangle_count,
            off_triangle_count=self.off_triangle_count,
            alpha=self.alpha,
            h=self.h,
            r=self.r,
            c=self.c,
            d=self.d,
            closed_form=None if self.closed_form is None else self.closed_form.as_dict(),
            checks=dict(self.checks),
            witnesses={name: list(ids) for name, ids in self.witnesses.items()},
            skipped=self.skipped,
        )


@attr.s()
class ScanSummary:
    """Aggregate of a stream audit. Reports keep input order.
    """
    reports = attr.ib(type=list, factory=list)

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def audited(self) -> int:
        return sum(1 for report in self.reports if report.skipped is None)

    @property
    def skipped(self) -> int:
        return self.total - self.audited

    @property
    def failures(self) -> Dict[str, int]:
        result = OrderedDict((name, 0) for name in CHECK_NAMES)
        for report in self.reports:
            for name in report.failed_checks:
                result[name] += 1
        return dict(result)

    @property
    def failing(self) -> list:
        return [report for report in self.reports if report.failed]

    @property
    def counterexamples(self) -> list:
        return [report for report in self.reports if report.counterexample]

    def totals(self) -> Dict[str, Any]:
        return dict(
            total=self.total,
            audited=self.audited,
            skipped=self.skipped,
            failures=self.failures,
            counterexamples=len(self.counterexamples),
        )
