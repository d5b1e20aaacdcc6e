# built-in
from logging import getLogger
from typing import Callable, Optional, Tuple

# app
from ..constants import DEFAULT_CAPS
from ..exceptions import CapExceededError, GraphError, VertexSetError
from ..models import Graph, IndependenceVerdict, InvariantValue, VertexSet, iter_bits
from ._convexity import HullOperator


logger = getLogger('deltahull.controllers')

Outcome = Tuple[bool, Optional[int], Optional[Tuple[int, int]]]


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _prepare(graph: Graph, vertices: VertexSet, operator: Optional[HullOperator]) -> HullOperator:
    if vertices.n != graph.n:
        raise VertexSetError('vertex set belongs to another graph', n=vertices.n, graph_n=graph.n)
    if not vertices:
        raise VertexSetError('independence is defined for nonempty sets')
    if operator is None:
        return HullOperator(graph=graph)
    return operator


def _self_generated(operator: HullOperator, mask: int) -> Optional[int]:
    for vertex in iter_bits(mask):
        if operator.hull_without(mask, vertex) >> vertex & 1:
            return vertex
    return None


def self_generated_member(graph: Graph, vertices: VertexSet,
                          operator: Optional[HullOperator] = None) -> Optional[int]:
    """Smallest member lying in the hull of the other members.

    Such a member makes the set Helly, Radon, Caratheodory and convexly dependent.
    """
    operator = _prepare(graph, vertices, operator)
    return _self_generated(operator, vertices.mask)


# mask-level tests: (independent, point, partition)


def _helly(operator: HullOperator, mask: int) -> Outcome:
    member = _self_generated(operator, mask)
    if member is not None:
        return False, member, None
    common = (1 << operator.graph.n) - 1
    for vertex in iter_bits(mask):
        common &= operator.hull_without(mask, vertex)
        if not common:
            return True, None, None
    return False, _lowest(common), None


def _radon(operator: HullOperator, mask: int) -> Outcome:
    members = list(iter_bits(mask))
    if len(members) == 1:
        return True, None, None

    member = _self_generated(operator, mask)
    if member is not None:
        single, rest = 1 << member, mask & ~(1 << member)
        if member == members[0]:
            return False, member, (single, rest)
        return False, member, (rest, single)

    # the smallest member always goes to the first part
    first, rest = 1 << members[0], members[1:]
    for choice in range(2 ** len(rest) - 1):
        part = first
        for index, vertex in enumerate(rest):
            if choice >> index & 1:
                part |= 1 << vertex
        common = operator.hull(part) & operator.hull(mask & ~part)
        if common:
            return False, _lowest(common), (part, mask & ~part)
    return True, None, None


def _convex(operator: HullOperator, mask: int) -> Outcome:
    member = _self_generated(operator, mask)
    if member is not None:
        return False, member, None
    return True, None, None


def _caratheodory(operator: HullOperator, mask: int) -> Outcome:
    if _self_generated(operator, mask) is not None:
        return False, None, None
    covered = 0
    for vertex in iter_bits(mask):
        covered |= operator.hull_without(mask, vertex)
    uncovered = operator.hull(mask) & ~covered
    if uncovered:
        return True, _lowest(uncovered), None
    return False, None, None


TESTS = dict(
    helly=_helly,
    radon=_radon,
    caratheodory=_caratheodory,
    convex=_convex,
)


def _verdict(kind: str, graph: Graph, vertices: VertexSet,
             operator: Optional[HullOperator]) -> IndependenceVerdict:
    operator = _prepare(graph, vertices, operator)
    independent, point, partition = TESTS[kind](operator, vertices.mask)
    if partition is not None:
        partition = tuple(VertexSet(mask=part, n=graph.n) for part in partition)
    return IndependenceVerdict(
        independent=independent,
        kind=kind,
        vertices=vertices,
        point=point,
        partition=partition,
    )


def is_helly_independent(graph: Graph, vertices: VertexSet,
                         operator: Optional[HullOperator] = None) -> IndependenceVerdict:
    return _verdict('helly', graph, vertices, operator)


def is_radon_independent(graph: Graph, vertices: VertexSet,
                         operator: Optional[HullOperator] = None) -> IndependenceVerdict:
    return _verdict('radon', graph, vertices, operator)


def is_convexly_independent(graph: Graph, vertices: VertexSet,
                            operator: Optional[HullOperator] = None) -> IndependenceVerdict:
    return _verdict('convex', graph, vertices, operator)


def is_caratheodory_independent(graph: Graph, vertices: VertexSet,
                                operator: Optional[HullOperator] = None) -> IndependenceVerdict:
    return _verdict('caratheodory', graph, vertices, operator)


def verify_verdict(graph: Graph, verdict: IndependenceVerdict) -> bool:
    """Re-check a verdict and its witness with a fresh hull operator.
    """
    operator = HullOperator(graph=graph)
    mask = verdict.vertices.mask
    members = list(verdict.vertices)
    point = verdict.point

    if verdict.kind == 'helly':
        if verdict.independent:
            common = (1 << graph.n) - 1
            for vertex in members:
                common &= operator.hull_without(mask, vertex)
            return common == 0
        return point is not None and all(operator.hull_without(mask, v) >> point & 1 for v in members)

    if verdict.kind == 'radon':
        if verdict.independent:
            return _radon(HullOperator(graph=graph), mask)[0]
        if verdict.partition is None or point is None:
            return False
        first, second = (part.mask for part in verdict.partition)
        if not first or not second or first & second or first | second != mask:
            return False
        common = operator.hull(first) & operator.hull(second)
        return bool(common >> point & 1)

    if verdict.kind == 'caratheodory':
        covered = 0
        for vertex in members:
            covered |= operator.hull_without(mask, vertex)
        if verdict.independent:
            return point is not None and bool(operator.hull(mask) >> point & 1) and not covered >> point & 1
        return operator.hull(mask) & ~covered == 0

    # convex
    if verdict.independent:
        return not any(operator.hull_without(mask, v) >> v & 1 for v in members)
    return point in verdict.vertices and bool(operator.hull_without(mask, point) >> point & 1)


# exhaustive searches


def _extends_triangle_free(adjacency, mask: int, vertex: int) -> bool:
    common = adjacency[vertex] & mask
    for other in iter_bits(common):
        if adjacency[other] & common:
            return False
    return True


def _search(graph: Graph, name: str, test: Callable[[int], bool], *,
            triangle_free: bool, note_parents: bool = False) -> InvariantValue:
    """Largest set passing `test`, lexicographically smallest among the largest.

    Sets are visited in lexicographic order along the extension tree
    and only sets larger than the current best are tested.
    Independence is not assumed hereditary: every candidate is tested.
    """
    if graph.n == 0:
        raise GraphError('invariant is undefined for the empty graph')
    n = graph.n
    adjacency = graph.adjacency
    best_mask = 0
    best_size = 0

    def visit(mask: int, size: int, start: int, parent: Optional[bool]) -> None:
        nonlocal best_mask, best_size
        independent = None
        if size > best_size:
            independent = test(mask)
            if independent:
                if note_parents and parent is False:
                    logger.debug('independent set with a dependent parent', extra=dict(
                        invariant=name,
                        vertices=list(iter_bits(mask)),
                    ))
                best_mask, best_size = mask, size
        for vertex in range(start, n):
            if size + n - vertex <= best_size:
                break
            if triangle_free and not _extends_triangle_free(adjacency, mask, vertex):
                continue
            visit(mask | 1 << vertex, size + 1, vertex + 1, independent)

    visit(0, 0, 0, None)
    return InvariantValue(name=name, value=best_size, witness_set=VertexSet(mask=best_mask, n=n))


def _check_cap(graph: Graph, name: str, cap: Optional[int], force: bool) -> None:
    if cap is not None and graph.n > cap and not force:
        raise CapExceededError(invariant=name, n=graph.n, cap=cap)


def helly_number(graph: Graph, operator: Optional[HullOperator] = None,
                 cap: Optional[int] = None, force: bool = False) -> InvariantValue:
    _check_cap(graph, 'h', cap, force)
    operator = operator or HullOperator(graph=graph)
    return _search(
        graph, 'h',
        test=lambda mask: _helly(operator, mask)[0],
        triangle_free=True,
        note_parents=True,
    )


def radon_number(graph: Graph, operator: Optional[HullOperator] = None,
                 cap: Optional[int] = None, force: bool = False) -> InvariantValue:
    _check_cap(graph, 'r', cap, force)
    operator = operator or HullOperator(graph=graph)
    return _search(
        graph, 'r',
        test=lambda mask: _radon(operator, mask)[0],
        triangle_free=True,
        note_parents=True,
    )


def rank(graph: Graph, operator: Optional[HullOperator] = None,
         cap: Optional[int] = None, force: bool = False) -> InvariantValue:
    _check_cap(graph, 'd', cap, force)
    operator = operator or HullOperator(graph=graph)
    return _search(
        graph, 'd',
        test=lambda mask: _convex(operator, mask)[0],
        triangle_free=True,
    )


def caratheodory_number(graph: Graph, operator: Optional[HullOperator] = None,
                        cap: Optional[int] = DEFAULT_CAPS['cara'], force: bool = False) -> InvariantValue:
    """Caratheodory number over all subsets, no triangle pruning.
    """
    _check_cap(graph, 'c', cap, force)
    operator = operator or HullOperator(graph=graph)
    return _search(
        graph, 'c',
        test=lambda mask: _caratheodory(operator, mask)[0],
        triangle_free=False,
    )


PREDICATES = dict(
    h='helly',
    r='radon',
    c='caratheodory',
    d='convex',
)


def verify_value(graph: Graph, value: InvariantValue) -> bool:
    """The witness has the reported size and passes its independence test.
    """
    if len(value.witness_set) != value.value:
        return False
    if value.name == 'alpha':
        return all(not graph.adjacency[v] & value.witness_set.mask for v in value.witness_set)
    verdict = _verdict(PREDICATES[value.name], graph, value.witness_set, None)
    return verdict.independent and verify_verdict(graph, verdict)
