# built-in
from functools import cached_property
from typing import Iterable, Tuple

# external
import attr
import networkx as nx

# app
from ..exceptions import GraphError
from .vertex_set import VertexSet, iter_bits


Edge = Tuple[int, int]


def _normalize_edges(edges: Iterable[Iterable[int]]) -> Tuple[Edge, ...]:
    return tuple(sorted(tuple(sorted(edge)) for edge in edges))


def _check_edges(instance, attribute, value: Tuple[Edge, ...]) -> None:
    if instance.n < 0:
        raise GraphError('negative vertex count', n=instance.n)
    for index, (u, v) in enumerate(value):
        if u == v:
            raise GraphError('self-loop', edge=(u, v))
        if u < 0 or v >= instance.n:
            raise GraphError('endpoint out of range', edge=(u, v), n=instance.n)
        if index and value[index - 1] == (u, v):
            raise GraphError('duplicate edge', edge=(u, v))


@attr.s(frozen=True, eq=True, hash=True, order=False)
class Graph:
    """Simple undirected graph on vertices `0..n-1`.

    Edges are stored sorted as `(u, v)` with `u < v`.
    Adjacency is kept as one neighbour bitmask per vertex.
    """
    n = attr.ib(type=int)
    edges = attr.ib(type=tuple, converter=_normalize_edges, validator=_check_edges)
    adjacency = attr.ib(type=tuple, init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        adjacency = [0] * self.n
        for u, v in self.edges:
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        object.__setattr__(self, 'adjacency', tuple(adjacency))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        """Build from a networkx graph whose nodes are `0..n-1`.
        """
        n = graph.number_of_nodes()
        if set(graph.nodes) != set(range(n)):
            graph = nx.convert_node_labels_to_integers(graph, ordering='sorted')
        return cls(n=n, edges=graph.edges())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    # queries

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, vertex: int) -> VertexSet:
        return VertexSet(mask=self.adjacency[vertex], n=self.n)

    def degree(self, vertex: int) -> int:
        return len(self.neighbors(vertex))

    def vertex_set(self, ids: Iterable[int]) -> VertexSet:
        return VertexSet.from_ids(ids, n=self.n)

    @cached_property
    def triangles(self) -> Tuple[Tuple[int, int, int], ...]:
        """All 3-cliques as ascending triples, in lexicographic order.
        """
        result = []
        for u, v in self.edges:
            common = self.adjacency[u] & self.adjacency[v] & ~((1 << (v + 1)) - 1)
            for w in iter_bits(common):
                result.append((u, v, w))
        return tuple(sorted(result))

    def is_triangle_free(self) -> bool:
        return not self.triangles

    def __str__(self) -> str:
        return 'Graph(n={}, edges={})'.format(self.n, len(self.edges))
