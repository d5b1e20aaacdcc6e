# built-in
from logging import getLogger
from typing import Dict, List, Optional

# app
from ..exceptions import GraphError
from ..models import ClosedFormResult, Comparison, CrossValidation, Graph, VertexSet
from ._convexity import HullOperator
from ._invariants import helly_number, radon_number, rank
from ._structure import (
    block_decomposition, independence_number, induced_subgraph, is_chordal, is_complete, require_connected,
)


logger = getLogger('deltahull.controllers')


def closed_form_chordal(graph: Graph) -> ClosedFormResult:
    """Exact Helly and Radon numbers of a connected chordal graph.

    + block graph with `l` blocks: `h = r = l + 1`.
    + otherwise: `h = r = alpha(G') + l`, where `l` counts complete blocks
      and `G'` is induced by the union of non-complete blocks.
    """
    require_connected(graph)
    if graph.n == 1:
        return ClosedFormResult(
            applicable=True, theorem='block_graph',
            h_closed=1, r_closed=1,
            block_count=0, complete_block_count=0, noncomplete_block_count=0,
        )
    if not is_chordal(graph):
        return ClosedFormResult(applicable=False, reason='not chordal')

    decomposition = block_decomposition(graph)
    complete = [block for block in decomposition.blocks if is_complete(graph, block)]
    noncomplete = [block for block in decomposition.blocks if not is_complete(graph, block)]
    if not noncomplete:
        value = decomposition.block_count + 1
        return ClosedFormResult(
            applicable=True, theorem='block_graph',
            h_closed=value, r_closed=value,
            block_count=decomposition.block_count,
            complete_block_count=len(complete),
            noncomplete_block_count=0,
        )

    # shared cut vertices belong to G' too
    union = VertexSet.empty(graph.n)
    for block in noncomplete:
        union = union | block
    subgraph, _mapping = induced_subgraph(graph, union)
    alpha_prime = independence_number(subgraph).value
    value = alpha_prime + len(complete)
    return ClosedFormResult(
        applicable=True, theorem='chordal',
        h_closed=value, r_closed=value,
        block_count=decomposition.block_count,
        complete_block_count=len(complete),
        noncomplete_block_count=len(noncomplete),
        alpha_prime=alpha_prime,
    )


def closed_form_block_rank(graph: Graph) -> ClosedFormResult:
    """Exact rank of a connected block graph: `d = l + 1`.
    """
    require_connected(graph)
    if graph.n == 1:
        return ClosedFormResult(applicable=True, theorem='block_graph', d_closed=1, block_count=0)
    decomposition = block_decomposition(graph)
    if not all(is_complete(graph, block) for block in decomposition.blocks):
        return ClosedFormResult(
            applicable=False, reason='not a block graph', block_count=decomposition.block_count,
        )
    return ClosedFormResult(
        applicable=True, theorem='block_graph',
        d_closed=decomposition.block_count + 1,
        block_count=decomposition.block_count,
        complete_block_count=decomposition.block_count,
        noncomplete_block_count=0,
    )


def check_pair_hull_property(graph: Graph, operator: Optional[HullOperator] = None) -> bool:
    """Every edge is a hull set.
    """
    require_connected(graph)
    if graph.n < 2:
        raise GraphError('pair hull property needs at least two vertices', n=graph.n)
    operator = operator or HullOperator(graph=graph)
    full = (1 << graph.n) - 1
    return all(operator.hull(1 << u | 1 << v) == full for u, v in graph.edges)


def cross_validate(graph: Graph, values: Optional[Dict[str, int]] = None,
                   operator: Optional[HullOperator] = None, graph6: str = None) -> CrossValidation:
    """Compare closed forms and corollaries with brute-force values.

    `values` may carry already computed `h`, `r`, `d` and `alpha`;
    missing ones are computed here. Mismatches are logged, never reconciled.
    """
    require_connected(graph)
    operator = operator or HullOperator(graph=graph)
    values = dict(values or {})
    if values.get('h') is None:
        values['h'] = helly_number(graph, operator=operator).value
    if values.get('r') is None:
        values['r'] = radon_number(graph, operator=operator).value
    if values.get('d') is None:
        values['d'] = rank(graph, operator=operator).value

    chordal = closed_form_chordal(graph)
    block_rank = closed_form_block_rank(graph)
    comparisons = []    # type: List[Comparison]
    if chordal.applicable:
        for name, closed in (('h', chordal.h_closed), ('r', chordal.r_closed)):
            item = Comparison(invariant=name, source=chordal.theorem, closed=closed, brute=values[name])
            comparisons.append(item)
    if block_rank.applicable:
        comparisons.append(Comparison(
            invariant='d', source='block_rank', closed=block_rank.d_closed, brute=values['d'],
        ))

    pair_hull = None
    if graph.n >= 2:
        pair_hull = check_pair_hull_property(graph, operator=operator)
    if pair_hull:
        if values.get('alpha') is None:
            values['alpha'] = independence_number(graph).value
        expected = max(2, values['alpha'])
        for name in ('h', 'r', 'd'):
            item = Comparison(invariant=name, source='pair_hull', closed=expected, brute=values[name])
            comparisons.append(item)

    result = CrossValidation(
        chordal=chordal,
        block_rank=block_rank,
        pair_hull=pair_hull,
        comparisons=tuple(comparisons),
    )
    for item in result.mismatches:
        logger.warning('closed form mismatch', extra=dict(
            graph6=graph6,
            invariant=item.invariant,
            source=item.source,
            closed=item.closed,
            brute=item.brute,
        ))
    return result
