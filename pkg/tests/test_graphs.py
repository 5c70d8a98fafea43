"""Graph core: canonical codes, extensions, containment, embeddings.

The canonical-form tests compare against an exhaustive enumeration of all DFS
traversals (tests/oracles.py), so they hold regardless of how the incremental
builder is implemented.
"""

import numpy as np
import pytest

from sidemine.graphs import (
    DFSCode,
    DFSEdge,
    Graph,
    GraphDataset,
    GraphError,
    Pattern,
    contains,
    is_min,
    min_dfs_code,
    rightmost_extensions,
    single_edge_patterns,
    support,
)

from oracles import (
    brute_contains,
    connected_edge_subsets,
    min_code_by_enumeration,
    random_connected_graph,
    subgraph_from_eids,
)


def code_from_tuples(tuples):
    return DFSCode([DFSEdge(*t) for t in tuples])


# -- frozen canonical-form examples -------------------------------------------


def test_min_code_single_edge():
    g = Graph([0, 1], [(0, 1, 0)])
    assert min_dfs_code(g).key == ((0, 1, 0, 0, 1),)


def test_min_code_single_edge_orientation():
    # The smaller node label must come first regardless of input order.
    g = Graph([1, 0], [(0, 1, 0)])
    assert min_dfs_code(g).key == ((0, 1, 0, 0, 1),)


def test_min_code_uniform_triangle():
    g = Graph([7, 7, 7], [(0, 1, 0), (1, 2, 0), (2, 0, 0)])
    assert min_dfs_code(g).key == (
        (0, 1, 7, 0, 7),
        (1, 2, 7, 0, 7),
        (2, 0, 7, 0, 7),
    )


def test_min_code_labelled_path():
    # Path 2 - 0 - 1 (labels): traversal starts at the smallest label.
    g = Graph([2, 0, 1], [(0, 1, 0), (1, 2, 0)])
    assert min_dfs_code(g).key == ((0, 1, 0, 0, 1), (0, 2, 0, 0, 2))


def test_is_min_single_edge_orientations():
    assert is_min(code_from_tuples([(0, 1, 0, 0, 1)]))
    assert not is_min(code_from_tuples([(0, 1, 1, 0, 0)]))
    assert is_min(code_from_tuples([(0, 1, 5, 2, 5)]))


def test_min_code_rejects_disconnected_or_empty():
    with pytest.raises(GraphError):
        min_dfs_code(Graph([0, 1], []))
    with pytest.raises(GraphError):
        min_dfs_code(Graph([0, 0, 0, 0], [(0, 1, 0), (2, 3, 0)]))


# -- oracle equivalence --------------------------------------------------------


ORACLE_SHAPES = [
    (3, 3, 1, 1),
    (4, 4, 2, 1),
    (4, 5, 1, 2),
    (4, 6, 1, 1),  # K4, uniform labels: the classic symmetry stress case
    (5, 5, 3, 1),
    (5, 6, 2, 2),
    (6, 6, 2, 1),
    (6, 7, 3, 2),
]


def test_min_code_matches_traversal_enumeration():
    rng = np.random.default_rng(7)
    for rep in range(3):
        for n_nodes, n_edges, n_vl, n_el in ORACLE_SHAPES:
            g = random_connected_graph(rng, n_nodes, n_edges, n_vl, n_el)
            assert min_dfs_code(g).key == min_code_by_enumeration(g), (
                f"shape={(n_nodes, n_edges, n_vl, n_el)} rep={rep}"
            )


def test_is_min_true_only_for_the_canonical_traversal():
    from oracles import all_traversal_codes

    rng = np.random.default_rng(11)
    for n_nodes, n_edges, n_vl, n_el in [(4, 4, 2, 1), (4, 5, 1, 1), (5, 5, 2, 2)]:
        g = random_connected_graph(rng, n_nodes, n_edges, n_vl, n_el)
        codes = all_traversal_codes(g)
        best = min_code_by_enumeration(g)
        for c in codes:
            assert is_min(code_from_tuples(c)) == (c == best)


# -- extension enumeration -----------------------------------------------------


def enumerate_patterns(dataset, max_edges):
    """All canonical patterns up to max_edges, asserting each appears once."""
    seen = {}

    def visit(p):
        assert p.code.key not in seen, f"duplicate enumeration of {p.code}"
        seen[p.code.key] = p
        if len(p.code) < max_edges:
            for _, child in rightmost_extensions(p, dataset):
                visit(child)

    for p in single_edge_patterns(dataset):
        visit(p)
    return seen


def test_extension_enumeration_is_complete_and_duplicate_free():
    rng = np.random.default_rng(23)
    graphs = [random_connected_graph(rng, 5, 6, 2, 1) for _ in range(5)]
    dataset = GraphDataset(graphs, [1, 1, -1, -1, 1])
    max_edges = 4

    mined = enumerate_patterns(dataset, max_edges)

    expected = set()
    for g in graphs:
        for eids in connected_edge_subsets(g, max_edges):
            sub = subgraph_from_eids(g, eids)
            expected.add(min_code_by_enumeration(sub))
    assert set(mined) == expected

    # Indicators must agree with from-scratch containment on every graph.
    for key, p in mined.items():
        pg = p.code.to_graph()
        for gid, g in enumerate(graphs):
            assert bool(p.indicator[gid]) == brute_contains(g, pg)


def test_extensions_report_backward_closure_first():
    # Host: a labelled triangle. Growing the 2-edge path must offer the
    # closing backward edge before any forward edge.
    g = Graph([0, 0, 0], [(0, 1, 0), (1, 2, 0), (0, 2, 0)])
    dataset = GraphDataset([g, g], [1, -1])
    roots = single_edge_patterns(dataset)
    assert len(roots) == 1
    exts = rightmost_extensions(roots[0], dataset)
    assert exts, "a single edge in a triangle must extend"
    two_edge = exts[0][1]
    exts2 = rightmost_extensions(two_edge, dataset)
    first_edge = exts2[0][0]
    assert not first_edge.is_forward
    assert first_edge.astuple == (2, 0, 0, 0, 0)


# -- containment ---------------------------------------------------------------


def test_contains_non_induced_subgraph():
    # A path is contained in a triangle even though the closing edge exists.
    tri = Graph([0, 1, 2], [(0, 1, 0), (1, 2, 0), (0, 2, 0)])
    path = min_dfs_code(Graph([0, 1, 2], [(0, 1, 0), (1, 2, 0)]))
    assert contains(tri, path)


def test_contains_respects_edge_labels():
    host = Graph([0, 0], [(0, 1, 1)])
    same = min_dfs_code(Graph([0, 0], [(0, 1, 1)]))
    other = min_dfs_code(Graph([0, 0], [(0, 1, 2)]))
    assert contains(host, same)
    assert not contains(host, other)


def test_contains_matches_permutation_search():
    rng = np.random.default_rng(41)
    hosts = [random_connected_graph(rng, 6, 8, 2, 2) for _ in range(6)]
    pattern_graphs = [random_connected_graph(rng, 3, 3, 2, 2) for _ in range(8)]
    pattern_graphs += [random_connected_graph(rng, 4, 4, 2, 1) for _ in range(4)]
    for pg in pattern_graphs:
        code = min_dfs_code(pg)
        for host in hosts:
            assert contains(host, code) == brute_contains(host, pg)


# -- embeddings and support ----------------------------------------------------


def check_embedding(host, pattern_graph, emb):
    assert len(set(emb)) == len(emb), "embedding must be injective"
    for v in range(pattern_graph.n_nodes):
        assert host.label(emb[v]) == pattern_graph.label(v)
    for u, v, el in pattern_graph.edges():
        assert host.edge_label(emb[u], emb[v]) == el


def test_embeddings_are_valid_node_maps():
    rng = np.random.default_rng(5)
    graphs = [random_connected_graph(rng, 5, 6, 2, 1) for _ in range(4)]
    dataset = GraphDataset(graphs, [1, -1, 1, -1])
    for p in enumerate_patterns(dataset, 3).values():
        pg = p.code.to_graph()
        emb = p.embeddings
        assert sorted(emb) == list(p.support_ids)
        for gid, maps in emb.items():
            assert maps
            for m in maps:
                check_embedding(graphs[gid], pg, m)


def test_support_counts_and_indicator():
    g_with = Graph([0, 1], [(0, 1, 0)])
    g_without = Graph([0, 0], [(0, 1, 0)])
    dataset = GraphDataset([g_with, g_without, g_with], [1, -1, -1])
    pats = single_edge_patterns(dataset)
    by_key = {p.code.key: p for p in pats}
    target = by_key[((0, 1, 0, 0, 1),)]
    count, vec = support(target)
    assert count == 2
    assert vec.tolist() == [1, 0, 1]


def test_indicator_pattern_without_chains_has_no_embeddings():
    code = code_from_tuples([(0, 1, 0, 0, 1)])
    p = Pattern(code, 3, indicator=np.array([1, 0, 1]))
    assert p.support_ids == (0, 2)
    with pytest.raises(GraphError):
        _ = p.embeddings


# -- validation ----------------------------------------------------------------


def test_graph_rejects_malformed_input():
    with pytest.raises(GraphError):
        Graph([0, 1], [(0, 0, 0)])  # self-loop
    with pytest.raises(GraphError):
        Graph([0, 1], [(0, 1, 0), (1, 0, 0)])  # duplicate edge
    with pytest.raises(GraphError):
        Graph([0, 1], [(0, 2, 0)])  # undeclared node
    with pytest.raises(GraphError):
        Graph([0, -1], [(0, 1, 0)])  # negative label


def test_dfs_code_rejects_malformed_sequences():
    with pytest.raises(GraphError):
        DFSCode([])
    with pytest.raises(GraphError):
        code_from_tuples([(1, 2, 0, 0, 0)])  # must start at (0, 1)
    with pytest.raises(GraphError):
        code_from_tuples([(0, 1, 0, 0, 1), (1, 3, 1, 0, 0)])  # skips index 2
    with pytest.raises(GraphError):
        # Vertex 2 leaves the rightmost path once (1, 3) branches off.
        code_from_tuples(
            [(0, 1, 0, 0, 0), (1, 2, 0, 0, 0), (1, 3, 0, 0, 0), (2, 4, 0, 0, 0)]
        )
    with pytest.raises(GraphError):
        code_from_tuples([(0, 1, 0, 0, 1), (0, 2, 1, 0, 0)])  # wrong frm label
    with pytest.raises(GraphError):
        code_from_tuples([(0, 1, 0, 0, 1), (1, 0, 1, 0, 0)])  # duplicate edge


def test_dataset_label_validation():
    g = Graph([0], [])
    with pytest.raises(GraphError):
        GraphDataset([g, g], [1, 0])
    with pytest.raises(GraphError):
        GraphDataset([g, g], [1])
    d = GraphDataset([g, g, g], [1, -1, 1])
    assert d.has_both_classes
    sub = d.subset([0, 2])
    assert sub.n == 2 and not sub.has_both_classes
