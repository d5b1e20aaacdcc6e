# built-in
from itertools import combinations
from typing import List, Tuple

# external
import networkx as nx

# app
from ..exceptions import DisconnectedGraphError, GraphError, VertexSetError
from ..models import (
    BlockDecomposition, ChordalityWitness, Graph, InvariantValue, VertexSet, iter_bits, popcount,
)


def is_connected(graph: Graph) -> bool:
    if graph.n <= 1:
        return True
    return nx.is_connected(graph.to_networkx())


def require_connected(graph: Graph) -> None:
    if not is_connected(graph):
        raise DisconnectedGraphError(n=graph.n, edges=graph.edge_count)


def block_decomposition(graph: Graph) -> BlockDecomposition:
    """Blocks and cut vertices of a connected graph.

    Bridges are 2-vertex blocks. K1 has no blocks.
    """
    require_connected(graph)
    nx_graph = graph.to_networkx()
    blocks = [graph.vertex_set(component) for component in nx.biconnected_components(nx_graph)]
    blocks.sort(key=lambda block: block.as_list())
    cut_vertices = graph.vertex_set(nx.articulation_points(nx_graph))
    return BlockDecomposition(blocks=tuple(blocks), cut_vertices=cut_vertices)


def is_complete(graph: Graph, vertices: VertexSet) -> bool:
    for vertex in vertices:
        others = vertices.mask & ~(1 << vertex)
        if graph.adjacency[vertex] & others != others:
            return False
    return True


def is_block_graph(graph: Graph) -> bool:
    decomposition = block_decomposition(graph)
    return all(is_complete(graph, block) for block in decomposition.blocks)


# chordality


def _maximum_cardinality_search(graph: Graph) -> List[int]:
    """Elimination ordering candidate: reverse of the visit order.

    Ties go to the smallest id.
    """
    weights = [0] * graph.n
    numbered = 0
    visited = []
    for _ in range(graph.n):
        vertex = max(
            (v for v in range(graph.n) if not numbered >> v & 1),
            key=lambda v: (weights[v], -v),
        )
        visited.append(vertex)
        numbered |= 1 << vertex
        for neighbor in iter_bits(graph.adjacency[vertex] & ~numbered):
            weights[neighbor] += 1
    visited.reverse()
    return visited


def is_perfect_elimination_ordering(graph: Graph, ordering: List[int]) -> bool:
    """Every vertex's later neighbors form a clique.
    """
    later = 0
    for vertex in reversed(ordering):
        if not is_complete(graph, VertexSet(mask=graph.adjacency[vertex] & later, n=graph.n)):
            return False
        later |= 1 << vertex
    return True


def _chordless_cycle(graph: Graph) -> Tuple[int, ...]:
    """Find a chordless cycle of length 4 or more in a non-chordal graph.

    For a vertex `v` with nonadjacent neighbors `x`, `y`, a shortest x-y path
    avoiding the rest of the closed neighborhood of `v` closes such a cycle.
    """
    nx_graph = graph.to_networkx()
    for vertex in range(graph.n):
        neighbors = list(graph.neighbors(vertex))
        closed = set(neighbors) | {vertex}
        for x, y in combinations(neighbors, 2):
            if graph.adjacent(x, y):
                continue
            allowed = [v for v in range(graph.n) if v not in closed or v in (x, y)]
            subgraph = nx_graph.subgraph(allowed)
            try:
                path = nx.shortest_path(subgraph, x, y)
            except nx.NetworkXNoPath:
                continue
            return (vertex, ) + tuple(path)
    raise GraphError('graph has no chordless cycle')


def is_chordal(graph: Graph) -> ChordalityWitness:
    ordering = _maximum_cardinality_search(graph)
    if is_perfect_elimination_ordering(graph, ordering):
        return ChordalityWitness(chordal=True, ordering=tuple(ordering))
    return ChordalityWitness(chordal=False, cycle=_chordless_cycle(graph))


def is_chordless_cycle(graph: Graph, cycle: Tuple[int, ...]) -> bool:
    size = len(cycle)
    if size < 4 or len(set(cycle)) != size:
        return False
    for i, j in combinations(range(size), 2):
        consecutive = j - i == 1 or (i == 0 and j == size - 1)
        if graph.adjacent(cycle[i], cycle[j]) != consecutive:
            return False
    return True


# independence


def _max_independent_mask(adjacency, candidates: int) -> int:
    best = 0
    best_size = 0

    def search(chosen: int, size: int, left: int) -> None:
        nonlocal best, best_size
        if size + popcount(left) <= best_size:
            return
        if not left:
            best, best_size = chosen, size
            return
        # branch on the vertex with most neighbors among candidates
        vertex = max(iter_bits(left), key=lambda v: (popcount(adjacency[v] & left), -v))
        if not adjacency[vertex] & left:
            best, best_size = chosen | left, size + popcount(left)
            return
        bit = 1 << vertex
        search(chosen | bit, size + 1, left & ~adjacency[vertex] & ~bit)
        search(chosen, size, left & ~bit)

    search(0, 0, candidates)
    return best


def independence_number(graph: Graph) -> InvariantValue:
    """Exact independence number by branch and bound.
    """
    mask = _max_independent_mask(graph.adjacency, (1 << graph.n) - 1)
    witness = VertexSet(mask=mask, n=graph.n)
    return InvariantValue(name='alpha', value=len(witness), witness_set=witness)


def is_independent_set(graph: Graph, vertices: VertexSet) -> bool:
    return all(not graph.adjacency[v] & vertices.mask for v in vertices)


def induced_subgraph(graph: Graph, vertices: VertexSet) -> Tuple[Graph, Tuple[int, ...]]:
    """Subgraph on `vertices` relabeled `0..|vertices|-1`.

    Returns the graph and the mapping: new id -> original id.
    """
    if vertices.n != graph.n:
        raise VertexSetError('vertex set belongs to another graph', n=vertices.n, graph_n=graph.n)
    mapping = tuple(vertices)
    new_ids = {old: new for new, old in enumerate(mapping)}
    edges = [(new_ids[u], new_ids[v]) for u, v in graph.edges if u in new_ids and v in new_ids]
    return Graph(n=len(mapping), edges=edges), mapping


# triangles


def triangle_bound(graph: Graph) -> Tuple[int, int]:
    """`(m, k)`: vertices on no triangle and number of triangles.
    """
    covered = 0
    for triangle in graph.triangles:
        for vertex in triangle:
            covered |= 1 << vertex
    return graph.n - popcount(covered), len(graph.triangles)
