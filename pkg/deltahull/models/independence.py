# built-in
from typing import Any, Dict, Optional, Tuple

# external
import attr

# app
from ..constants import INDEPENDENCE_KINDS
from .vertex_set import VertexSet


@attr.s(frozen=True)
class IndependenceVerdict:
    """Outcome of an independence test on a vertex set.

    `point` meaning depends on `kind` and outcome:

    + helly, dependent: a common point of all hulls of one-deleted subsets.
    + radon, dependent: a common point of both partition hulls.
    + caratheodory, independent: a hull point outside every one-deleted hull.
    + convex, dependent: a member lying in the hull of the others.
    """
    independent = attr.ib(type=bool)
    kind = attr.ib(type=str, validator=attr.validators.in_(INDEPENDENCE_KINDS))
    vertices = attr.ib(type=VertexSet)
    point = attr.ib(type=Optional[int], default=None)
    partition = attr.ib(type=Optional[Tuple[VertexSet, VertexSet]], default=None)

    def __bool__(self) -> bool:
        return self.independent

    def as_dict(self) -> Dict[str, Any]:
        partition = None
        if self.partition is not None:
            partition = [part.as_list() for part in self.partition]
        return dict(
            independent=self.independent,
            kind=self.kind,
            vertices=self.vertices.as_list(),
            point=self.point,
            partition=partition,
        )


@attr.s(frozen=True)
class InvariantValue:
    """Value of an invariant with a maximum witness set.
    """
    name = attr.ib(type=str)
    value = attr.ib(type=int)
    witness_set = attr.ib(type=VertexSet)

    def as_dict(self) -> Dict[str, Any]:
        return dict(name=self.name, value=self.value, witness=self.witness_set.as_list())
