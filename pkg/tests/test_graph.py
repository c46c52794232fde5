import pytest

from equisplit import (
    Graph,
    GraphParseError,
    compute_degree_stats,
    gen_random_graph,
    parse_graph,
    serialize_graph,
    strip_isolated,
)
from helpers import all_graphs, complete, path, with_isolated


def test_parse_path_graph():
    g = parse_graph("3 2\n1 2\n2 3")
    assert (g.n, g.m) == (3, 2)
    assert g.adj[2] == (1, 3)
    assert g.degrees[1:] == (1, 2, 1)


def test_parse_complete_graph():
    g = parse_graph("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4")
    assert g.degrees[1:] == (3, 3, 3, 3)


def test_parse_rejects_self_loop_with_line_number():
    with pytest.raises(GraphParseError, match="line 2.*self-loop"):
        parse_graph("2 1\n1 1")


def test_parse_rejects_duplicate_edge_even_reversed():
    with pytest.raises(GraphParseError, match="line 3.*duplicate"):
        parse_graph("3 2\n1 2\n2 1")


def test_parse_rejects_out_of_range_vertex():
    with pytest.raises(GraphParseError, match="line 2.*out of range"):
        parse_graph("3 1\n1 4")
    with pytest.raises(GraphParseError, match="out of range"):
        parse_graph("3 1\n0 2")


def test_parse_rejects_malformed_header():
    with pytest.raises(GraphParseError, match="header"):
        parse_graph("three 2\n1 2")
    with pytest.raises(GraphParseError, match="header"):
        parse_graph("3\n1 2")


def test_parse_rejects_edge_count_mismatch():
    with pytest.raises(GraphParseError, match="expected 3 edges, found 2"):
        parse_graph("4 3\n1 2\n2 3")
    with pytest.raises(GraphParseError, match="line 4.*more than the declared"):
        parse_graph("4 2\n1 2\n2 3\n3 4")


def test_parse_rejects_malformed_edge_line():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_graph("3 2\n1 2 3\n2 3")


def test_parse_accepts_comments_crlf_and_missing_final_newline():
    text = "# a path\r\n3 2\r\n# middle comment\r\n1 2\r\n3 2"
    g = parse_graph(text)
    assert list(g.edges()) == [(1, 2), (2, 3)]


def test_parse_canonicalizes_reversed_edges():
    g = parse_graph("3 2\n2 1\n3 2\n")
    assert list(g.edges()) == [(1, 2), (2, 3)]


def test_serialize_round_trip_exact():
    text = "4 3\n1 2\n1 4\n2 3\n"
    assert serialize_graph(parse_graph(text)) == text


@pytest.mark.parametrize("seed", range(20))
def test_round_trip_random_graphs(seed):
    g = gen_random_graph(9, 0.4, seed)
    assert parse_graph(serialize_graph(g)) == g


def test_from_edges_validation():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(3, [(2, 2)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph.from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError, match="out of range"):
        Graph.from_edges(3, [(1, 5)])


def test_adjacent_basic():
    k4 = complete(4)
    assert k4.adjacent(1, 3)
    p3 = path(3)
    assert not p3.adjacent(1, 3)
    assert not p3.adjacent(2, 2)
    with pytest.raises(ValueError, match="out of range"):
        p3.adjacent(1, 7)


@pytest.mark.parametrize("seed", range(10))
def test_adjacent_symmetric_and_degree_sum(seed):
    g = gen_random_graph(8, 0.5, seed)
    for u in range(1, g.n + 1):
        for v in range(1, g.n + 1):
            assert g.adjacent(u, v) == g.adjacent(v, u)
    assert sum(g.degrees) == 2 * g.m


def test_degree_stats_complete_graph():
    stats = compute_degree_stats(complete(4))
    assert (stats.p, stats.r) == (4, 0)
    assert stats.ordering == (1, 2, 3, 4)  # all degrees equal: id order


def test_degree_stats_star():
    g = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    stats = compute_degree_stats(g)
    assert (stats.p, stats.r, stats.q) == (1, 3, 0)  # nobody has degree n-r-1 = 0


def test_degree_stats_family_iii_instance():
    from equisplit import gen_family_iii

    stats = compute_degree_stats(gen_family_iii(6, 2))
    assert (stats.p, stats.r, stats.q) == (1, 2, 3)


def test_degree_ordering_is_sorted_permutation_with_id_ties():
    for g in all_graphs(4):
        stats = compute_degree_stats(g)
        assert sorted(stats.ordering) == list(range(1, g.n + 1))
        pairs = [(g.degrees[v], v) for v in stats.ordering]
        assert pairs == sorted(pairs)


def test_strip_isolated_examples():
    k4_plus = with_isolated(complete(4), 1)
    stripped, removed = strip_isolated(k4_plus)
    assert removed == 1
    assert stripped == complete(4)

    empty, removed = strip_isolated(Graph.from_edges(3, []))
    assert removed == 3
    assert empty.n == 0

    p3 = path(3)
    same, removed = strip_isolated(p3)
    assert removed == 0
    assert same == p3


def test_strip_isolated_relabels_preserving_order():
    # isolated vertex in the middle: 1-2 edge, 3 isolated, 4-5 edge
    g = Graph.from_edges(5, [(1, 2), (4, 5)])
    stripped, removed = strip_isolated(g)
    assert removed == 1
    assert list(stripped.edges()) == [(1, 2), (3, 4)]
