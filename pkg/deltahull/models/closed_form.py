# built-in
from typing import Any, Dict, Optional

# external
import attr


@attr.s(frozen=True)
class ClosedFormResult:
    """Exact values predicted for chordal and block graphs.

    `theorem` is `block_graph` (every block complete, values are `l+1`),
    `chordal` (values are `alpha(G') + l` with `l` complete blocks)
    or None when the graph is outside both classes.
    """
    applicable = attr.ib(type=bool)
    theorem = attr.ib(type=Optional[str], default=None)
    h_closed = attr.ib(type=Optional[int], default=None)
    r_closed = attr.ib(type=Optional[int], default=None)
    d_closed = attr.ib(type=Optional[int], default=None)

    # ingredients
    block_count = attr.ib(type=Optional[int], default=None)
    complete_block_count = attr.ib(type=Optional[int], default=None)
    noncomplete_block_count = attr.ib(type=Optional[int], default=None)
    alpha_prime = attr.ib(type=Optional[int], default=None)

    reason = attr.ib(type=Optional[str], default=None)

    def as_dict(self) -> Dict[str, Any]:
        return attr.asdict(self)


@attr.s(frozen=True)
class Comparison:
    """A closed-form or corollary value next to the brute-force value.
    """
    invariant = attr.ib(type=str)
    source = attr.ib(type=str)      # block_graph, chordal, block_rank, pair_hull
    closed = attr.ib(type=int)
    brute = attr.ib(type=int)

    @property
    def match(self) -> bool:
        return self.closed == self.brute

    def as_dict(self) -> Dict[str, Any]:
        result = attr.asdict(self)
        result['match'] = self.match
        return result


@attr.s(frozen=True)
class CrossValidation:
    chordal = attr.ib(type=ClosedFormResult)
    block_rank = attr.ib(type=ClosedFormResult)
    pair_hull = attr.ib(type=Optional[bool])
    comparisons = attr.ib(type=tuple)

    @property
    def mismatches(self) -> tuple:
        return tuple(item for item in self.comparisons if not item.match)

    @property
    def matched(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> Dict[str, Any]:
        return dict(
            chordal=self.chordal.as_dict(),
            block_rank=self.block_rank.as_dict(),
            pair_hull=self.pair_hull,
            comparisons=[item.as_dict() for item in self.comparisons],
            matched=self.matched,
        )
