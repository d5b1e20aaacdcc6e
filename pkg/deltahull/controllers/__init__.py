# app
from ._auditor import REQUIRES, Auditor, audit_graph
from ._closed_forms import (
    check_pair_hull_property, closed_form_block_rank, closed_form_chordal, cross_validate,
)
from ._convexity import HullOperator, delta_hull, delta_interval, is_convex, is_hull_set
from ._generators import family_value, generate
from ._invariants import (
    caratheodory_number, helly_number, is_caratheodory_independent, is_convexly_independent,
    is_helly_independent, is_radon_independent, radon_number, rank, self_generated_member,
    verify_value, verify_verdict,
)
from ._scanner import read_stream, scan_stream
from ._structure import (
    block_decomposition, independence_number, induced_subgraph, is_block_graph, is_chordal,
    is_chordless_cycle, is_complete, is_connected, is_independent_set, is_perfect_elimination_ordering,
    require_connected, triangle_bound,
)


__all__ = [
    'REQUIRES',
    'Auditor',
    'HullOperator',
    'audit_graph',
    'block_decomposition',
    'caratheodory_number',
    'check_pair_hull_property',
    'closed_form_block_rank',
    'closed_form_chordal',
    'cross_validate',
    'delta_hull',
    'delta_interval',
    'family_value',
    'generate',
    'helly_number',
    'independence_number',
    'induced_subgraph',
    'is_block_graph',
    'is_caratheodory_independent',
    'is_chordal',
    'is_chordless_cycle',
    'is_complete',
    'is_connected',
    'is_convex',
    'is_convexly_independent',
    'is_helly_independent',
    'is_hull_set',
    'is_independent_set',
    'is_perfect_elimination_ordering',
    'is_radon_independent',
    'radon_number',
    'rank',
    'read_stream',
    'require_connected',
    'scan_stream',
    'self_generated_member',
    'triangle_bound',
    'verify_value',
    'verify_verdict',
]
