# built-in
from typing import Any, Dict

# external
import attr

# app
from .vertex_set import VertexSet


@attr.s(frozen=True, eq=False)
class HullTrace:
    """Closure rounds of a hull computation.

    `rounds[0]` is the starting set, every next round is one interval step,
    the last round is the hull. Traces are not part of equality.
    """
    rounds = attr.ib(type=tuple)

    @property
    def final(self) -> VertexSet:
        return self.rounds[-1]

    @property
    def start(self) -> VertexSet:
        return self.rounds[0]

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.final == other.final

    def __hash__(self) -> int:
        return hash(self.final)

    def as_dict(self) -> Dict[str, Any]:
        return dict(
            rounds=[part.as_list() for part in self.rounds],
            final=self.final.as_list(),
        )
