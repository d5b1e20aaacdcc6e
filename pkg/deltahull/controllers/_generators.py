# built-in
from typing import List, Tuple

# app
from ..models import GeneratedGraph, GeneratorSpec, Graph


def _triangle_chain(spec: GeneratorSpec) -> Tuple[List[str], List[Tuple[int, int]]]:
    roles = []          # type: List[str]
    edges = []          # type: List[Tuple[int, int]]
    apexes = []         # type: List[int]
    path_label = 0
    for index in range(1, spec.k + 1):
        a, b, c = len(roles), len(roles) + 1, len(roles) + 2
        roles.extend(('a{}'.format(index), 'b{}'.format(index), 'c{}'.format(index)))
        edges.extend(((a, b), (a, c), (b, c)))
        apexes.append(c)
        if index == spec.k:
            break
        # internal path vertices towards the next apex
        previous = c
        for _ in range(spec.path_lengths[index - 1]):
            path_label += 1
            vertex = len(roles)
            roles.append('d{}'.format(path_label))
            edges.append((previous, vertex))
            previous = vertex
        # the next triangle starts at len(roles), its apex is two ids later
        edges.append((previous, len(roles) + 2))
    return roles, edges


def _triangle_fan(spec: GeneratorSpec) -> Tuple[List[str], List[Tuple[int, int]]]:
    n = spec.n
    roles = ['a{}'.format(i) for i in range(1, n + 1)]
    roles.extend('b{}'.format(i) for i in range(1, n - 1))
    roles.append('b')

    def a(i: int) -> int:
        return i - 1

    def b(i: int) -> int:
        return n + i - 1

    last = 2 * n - 2
    triangles = [(a(1), a(2), b(1))]
    for i in range(2, n - 1):
        triangles.append((b(i - 1), a(i + 1), b(i)))
    triangles.append((b(n - 2), a(n), last))

    edges = []
    for x, y, z in triangles:
        edges.extend(((x, y), (x, z), (y, z)))
    return roles, edges


def generate(spec: GeneratorSpec) -> GeneratedGraph:
    """Build a triangle family member with its vertex labels.

    Chains: triangles `a_i b_i c_i` in order, each followed by the `d` vertices
    of the path towards the next apex. Fans: `a_1..a_n`, then `b_1..b_{n-2}`, then `b`.
    """
    if spec.family == 'triangle_chain':
        roles, edges = _triangle_chain(spec)
    else:
        roles, edges = _triangle_fan(spec)
    graph = Graph(n=len(roles), edges=edges)
    return GeneratedGraph(spec=spec, graph=graph, roles=tuple(roles))


def family_value(spec: GeneratorSpec) -> int:
    """Common value of h, r and d on the family member.
    """
    if spec.family == 'triangle_chain':
        return spec.m + 2 * spec.k
    return spec.n
