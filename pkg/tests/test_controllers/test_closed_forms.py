# built-in
from pathlib import Path

# external
import pytest

# project
from deltahull.controllers import (
    block_decomposition, check_pair_hull_property, closed_form_block_rank, closed_form_chordal,
    cross_validate, helly_number, independence_number, is_block_graph, is_chordal, is_connected,
    radon_number, rank, read_stream,
)
from deltahull.converters import Graph6Converter
from deltahull.exceptions import DisconnectedGraphError, GraphError
from deltahull.models import Graph

# app
from ..helpers import atlas_graphs, brute_helly_independent, brute_invariant


def test_block_graph_form(bowtie: Graph, p4: Graph):
    result = closed_form_chordal(bowtie)
    assert result.applicable
    assert result.theorem == 'block_graph'
    assert (result.h_closed, result.r_closed) == (3, 3)
    assert result.block_count == 2

    result = closed_form_chordal(p4)
    assert result.h_closed == 4


def test_chordal_form(diamond: Graph):
    result = closed_form_chordal(diamond)
    assert result.theorem == 'chordal'
    assert result.alpha_prime == 2
    assert result.complete_block_count == 0
    assert result.h_closed == 2


def test_chordal_form_with_pendant_block():
    # diamond with a pendant vertex on 0
    graph = Graph(n=5, edges=[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4)])
    result = closed_form_chordal(graph)
    assert result.theorem == 'chordal'
    assert result.complete_block_count == 1
    assert result.noncomplete_block_count == 1
    assert result.alpha_prime == 2
    assert result.h_closed == 3
    assert helly_number(graph).value == 3
    assert radon_number(graph).value == 3


def test_not_chordal(c5: Graph):
    result = closed_form_chordal(c5)
    assert not result.applicable
    assert result.reason == 'not chordal'
    assert result.h_closed is None


def test_single_vertex():
    graph = Graph(n=1, edges=[])
    assert closed_form_chordal(graph).h_closed == 1
    assert closed_form_block_rank(graph).d_closed == 1


def test_disconnected():
    with pytest.raises(DisconnectedGraphError):
        closed_form_chordal(Graph(n=3, edges=[(0, 1)]))


def test_block_rank(p4: Graph, diamond: Graph):
    assert closed_form_block_rank(p4).d_closed == 4
    result = closed_form_block_rank(diamond)
    assert not result.applicable
    assert result.reason == 'not a block graph'


def test_pair_hull_property(k3: Graph, diamond: Graph, bowtie: Graph, p4: Graph):
    assert check_pair_hull_property(k3)
    assert check_pair_hull_property(diamond)
    assert not check_pair_hull_property(bowtie)
    assert not check_pair_hull_property(p4)
    with pytest.raises(GraphError):
        check_pair_hull_property(Graph(n=1, edges=[]))


def test_cross_validate(bowtie: Graph, diamond: Graph, c5: Graph):
    result = cross_validate(bowtie)
    assert [(item.invariant, item.source) for item in result.comparisons] == [
        ('h', 'block_graph'), ('r', 'block_graph'), ('d', 'block_rank'),
    ]
    assert result.matched
    assert result.pair_hull is False

    result = cross_validate(diamond)
    assert len(result.comparisons) == 5
    assert result.pair_hull is True
    assert result.matched

    result = cross_validate(c5)
    assert result.comparisons == ()
    assert result.as_dict()['matched'] is True


def test_cross_validate_reports_mismatch(bowtie: Graph):
    result = cross_validate(bowtie, values=dict(h=4, r=3, d=3))
    assert not result.matched
    assert [item.invariant for item in result.mismatches] == ['h']


def test_two_diamonds_joined_by_bridge():
    # the bridge joins a degree-2 vertex of one diamond to a degree-3 vertex of the other
    graph = Graph6Converter().parse_line('GeGipO')
    assert is_chordal(graph)
    result = closed_form_chordal(graph)
    assert result.theorem == 'chordal'
    assert result.h_closed == 5
    assert helly_number(graph).value == 4
    assert radon_number(graph).value == 4
    assert brute_invariant(graph, brute_helly_independent) == 4

    validation = cross_validate(graph, graph6='GeGipO')
    assert not validation.matched
    mismatches = [(item.invariant, item.source, item.closed, item.brute) for item in validation.mismatches]
    assert mismatches == [('h', 'chordal', 5, 4), ('r', 'chordal', 5, 4)]


@pytest.mark.slow
def test_chordal_forms_on_atlas():
    for graph in atlas_graphs(max_n=7):
        if not is_chordal(graph):
            continue
        result = closed_form_chordal(graph)
        assert result.h_closed == helly_number(graph).value, graph
        assert result.r_closed == radon_number(graph).value, graph
        if is_block_graph(graph):
            assert closed_form_block_rank(graph).d_closed == rank(graph).value, graph


@pytest.mark.slow
def test_two_connected_chordal_graphs():
    for graph in atlas_graphs(max_n=7):
        if graph.n < 3 or not is_chordal(graph) or block_decomposition(graph).block_count != 1:
            continue
        assert check_pair_hull_property(graph), graph
        expected = max(2, independence_number(graph).value)
        for search in (helly_number, radon_number, rank):
            assert search(graph).value == expected, graph


@pytest.mark.slow
def test_complete_graphs():
    for n in range(3, 8):
        graph = Graph(n=n, edges=[(u, v) for u in range(n) for v in range(u + 1, n)])
        for search in (helly_number, radon_number, rank):
            assert search(graph).value == 2


# every connected chordal graph on 8 vertices, canonical graph6, one per line
CHORDAL_8_MISMATCHES = {
    ('Gqiaa_', 'h', 'chordal', 5, 4),
    ('Gqiaa_', 'r', 'chordal', 5, 4),
    ('GqUd?o', 'h', 'chordal', 5, 4),
    ('GqUd?o', 'r', 'chordal', 5, 4),
}


def _chordal_8(fixtures_path: Path):
    converter = Graph6Converter()
    lines = (fixtures_path / 'chordal8.g6').read_text().splitlines()
    return [(line, converter.parse_line(line)) for _, line in read_stream(lines)]


@pytest.mark.slow
def test_chordal_forms_on_all_8_vertex_graphs(fixtures_path: Path):
    graphs = _chordal_8(fixtures_path)
    assert len(graphs) == 1614
    assert len({line for line, _ in graphs}) == 1614

    mismatches = set()
    two_connected = 0
    for line, graph in graphs:
        assert graph.n == 8
        assert is_connected(graph), line
        assert is_chordal(graph), line
        validation = cross_validate(graph, graph6=line)
        if validation.pair_hull:
            two_connected += 1
        for item in validation.mismatches:
            mismatches.add((line, item.invariant, item.source, item.closed, item.brute))
    assert mismatches == CHORDAL_8_MISMATCHES
    assert two_connected == 497


@pytest.mark.slow
def test_two_connected_8_vertex_chordal_graphs(fixtures_path: Path):
    for line, graph in _chordal_8(fixtures_path):
        if block_decomposition(graph).block_count != 1:
            continue
        assert check_pair_hull_property(graph), line
        expected = max(2, independence_number(graph).value)
        for search in (helly_number, radon_number, rank):
            assert search(graph).value == expected, line
