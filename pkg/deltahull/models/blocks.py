# built-in
from typing import Any, Dict, Optional, Tuple

# external
import attr

# app
from .vertex_set import VertexSet


@attr.s(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs, bridges included) and cut vertices.
    """
    blocks = attr.ib(type=tuple)                # Tuple[VertexSet, ...], ordered by member ids
    cut_vertices = attr.ib(type=VertexSet)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def blocks_of(self, vertex: int) -> Tuple[VertexSet, ...]:
        return tuple(block for block in self.blocks if vertex in block)

    def as_dict(self) -> Dict[str, Any]:
        return dict(
            blocks=[block.as_list() for block in self.blocks],
            cut_vertices=self.cut_vertices.as_list(),
            block_count=self.block_count,
        )


@attr.s(frozen=True)
class ChordalityWitness:
    """Result of chordality recognition.

    Chordal graphs carry a perfect elimination ordering,
    others carry a chordless cycle of length 4 or more.
    """
    chordal = attr.ib(type=bool)
    ordering = attr.ib(type=Optional[tuple], default=None)
    cycle = attr.ib(type=Optional[tuple], default=None)

    def __bool__(self) -> bool:
        return self.chordal

    def as_dict(self) -> Dict[str, Any]:
        return dict(
            chordal=self.chordal,
            ordering=None if self.ordering is None else list(self.ordering),
            cycle=None if self.cycle is None else list(self.cycle),
        )
