# built-in
from functools import reduce
from itertools import combinations
from random import Random
from typing import FrozenSet, Iterable, Iterator, List

# external
import networkx as nx

# project
from deltahull.converters import Graph6Converter
from deltahull.models import Graph


def atlas_graphs(max_n: int = 7, connected: bool = True) -> Iterator[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism, from the networkx atlas.
    """
    for nx_graph in nx.graph_atlas_g():
        n = nx_graph.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected and not nx.is_connected(nx_graph):
            continue
        yield Graph.from_networkx(nx_graph)


def atlas_stream(max_n: int = 7) -> List[str]:
    converter = Graph6Converter()
    return [converter.dumps(graph) for graph in atlas_graphs(max_n=max_n)]


def random_chordal_graph(n: int, seed: int) -> Graph:
    """Connected chordal graph: each new vertex joins a clique of the earlier ones.
    """
    rnd = Random(seed)
    adjacency = [set() for _ in range(n)]
    for vertex in range(1, n):
        anchor = rnd.randrange(vertex)
        clique = {anchor}
        for other in rnd.sample(sorted(adjacency[anchor]), len(adjacency[anchor])):
            if rnd.random() < 0.5 and all(other in adjacency[member] for member in clique):
                clique.add(other)
        for member in clique:
            adjacency[vertex].add(member)
            adjacency[member].add(vertex)
    edges = [(u, v) for u in range(n) for v in adjacency[u] if u < v]
    return Graph(n=n, edges=edges)


def random_graph(n: int, seed: int, density: float = 0.4) -> Graph:
    rnd = Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rnd.random() < density]
    return Graph(n=n, edges=edges)


# brute-force oracles on plain python sets


def brute_hull(graph: Graph, vertices: Iterable[int]) -> FrozenSet[int]:
    result = set(vertices)
    changed = True
    while changed:
        changed = False
        for u, v in graph.edges:
            if u not in result or v not in result:
                continue
            for w in range(graph.n):
                if w not in result and graph.adjacent(u, w) and graph.adjacent(v, w):
                    result.add(w)
                    changed = True
    return frozenset(result)


def _leave_one_out(graph: Graph, vertices: FrozenSet[int]) -> List[FrozenSet[int]]:
    return [brute_hull(graph, vertices - {a}) for a in vertices]


def brute_helly_independent(graph: Graph, vertices: FrozenSet[int]) -> bool:
    return not reduce(frozenset.intersection, _leave_one_out(graph, vertices))


def brute_radon_independent(graph: Graph, vertices: FrozenSet[int]) -> bool:
    members = sorted(vertices)
    for size in range(1, len(members)):
        for part in combinations(members, size):
            first = brute_hull(graph, part)
            second = brute_hull(graph, vertices - set(part))
            if first & second:
                return False
    return True


def brute_convexly_independent(graph: Graph, vertices: FrozenSet[int]) -> bool:
    return all(a not in brute_hull(graph, vertices - {a}) for a in vertices)


def brute_caratheodory_independent(graph: Graph, vertices: FrozenSet[int]) -> bool:
    covered = frozenset().union(*_leave_one_out(graph, vertices))
    return bool(brute_hull(graph, vertices) - covered)


def brute_invariant(graph: Graph, predicate) -> int:
    """Largest nonempty set passing the predicate, checking every subset.
    """
    best = 0
    for size in range(1, graph.n + 1):
        for vertices in combinations(range(graph.n), size):
            if predicate(graph, frozenset(vertices)):
                best = size
                break
    return best
