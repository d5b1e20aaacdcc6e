# built-in
from typing import Dict, List, Sequence

# external
import attr

# app
from ..exceptions import VertexSetError
from ..models import Graph, HullTrace, VertexSet, iter_bits


def interval_mask(adjacency: Sequence[int], mask: int) -> int:
    """One closure step: add every vertex adjacent to both ends of an edge inside `mask`.
    """
    result = mask
    for u in iter_bits(mask):
        for w in iter_bits(adjacency[u] & mask):
            if w > u:
                result |= adjacency[u] & adjacency[w]
    return result


def hull_rounds(adjacency: Sequence[int], mask: int) -> List[int]:
    rounds = [mask]
    while True:
        extended = interval_mask(adjacency, rounds[-1])
        if extended == rounds[-1]:
            return rounds
        rounds.append(extended)


@attr.s()
class HullOperator:
    """Memoized hull over bitmasks for one graph.
    """
    graph = attr.ib(type=Graph)
    _cache = attr.ib(type=dict, factory=dict, init=False, repr=False)  # type: Dict[int, int]

    def interval(self, mask: int) -> int:
        return interval_mask(self.graph.adjacency, mask)

    def hull(self, mask: int) -> int:
        result = self._cache.get(mask)
        if result is None:
            result = hull_rounds(self.graph.adjacency, mask)[-1]
            self._cache[mask] = result
        return result

    def hull_without(self, mask: int, vertex: int) -> int:
        return self.hull(mask & ~(1 << vertex))

    @property
    def cached(self) -> int:
        return len(self._cache)


def _check(graph: Graph, vertices: VertexSet) -> None:
    if vertices.n != graph.n:
        raise VertexSetError('vertex set belongs to another graph', n=vertices.n, graph_n=graph.n)


def delta_interval(graph: Graph, vertices: VertexSet) -> VertexSet:
    _check(graph, vertices)
    return VertexSet(mask=interval_mask(graph.adjacency, vertices.mask), n=graph.n)


def delta_hull(graph: Graph, vertices: VertexSet) -> HullTrace:
    """Iterate the interval step to its fixpoint, keeping every round.
    """
    _check(graph, vertices)
    rounds = hull_rounds(graph.adjacency, vertices.mask)
    return HullTrace(rounds=tuple(VertexSet(mask=mask, n=graph.n) for mask in rounds))


def is_convex(graph: Graph, vertices: VertexSet) -> bool:
    _check(graph, vertices)
    return interval_mask(graph.adjacency, vertices.mask) == vertices.mask


def is_hull_set(graph: Graph, vertices: VertexSet) -> bool:
    _check(graph, vertices)
    return hull_rounds(graph.adjacency, vertices.mask)[-1] == (1 << graph.n) - 1
