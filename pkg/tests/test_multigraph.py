import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schreier_tutte.multigraph import (
    GraphError,
    add_edge,
    block_decompose,
    build,
    canonical_text,
    contract_edge,
    delete_edge,
    parse_edge_list,
    stats,
    strip_loops,
    to_dot,
    to_edge_list,
)
from schreier_tutte.schreier import BASILICA, GRIGORCHUK, schreier_graph

from conftest import complete_graph, random_cactus

C2 = build(2, [(0, 1), (0, 1)])
LOOP = build(1, [(0, 0)])
E2 = build(2, [])
PATH2 = build(3, [(0, 1), (1, 2)])
K3 = complete_graph(3)


def test_build_examples():
    assert LOOP.vertex_count == 1 and LOOP.edges[0].is_loop
    assert [(e.u, e.v) for e in C2.edges] == [(0, 1), (0, 1)]
    assert [e.id for e in C2.edges] == [0, 1]
    assert stats(E2).k == 2


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError):
        build(2, [(0, 2)])


@pytest.mark.parametrize("g, expected", [(C2, (1, 1, 1)), (LOOP, (1, 0, 1)), (E2, (2, 0, 0))])
def test_stats(g, expected):
    assert tuple(stats(g)) == expected


def test_delete_edge():
    single = delete_edge(C2, 0)
    assert len(single.edges) == 1 and single.edges[0].id == 1
    assert stats(delete_edge(LOOP, 0)).k == 1
    assert stats(PATH2).k == 1
    assert stats(delete_edge(PATH2, 0)).k == 2
    with pytest.raises(GraphError):
        delete_edge(C2, 7)


def test_contract_edge():
    merged = contract_edge(C2, 0)
    assert merged.vertex_count == 1 and len(merged.edges) == 1 and merged.edges[0].is_loop
    assert contract_edge(PATH2, 0).vertex_count == 2
    assert canonical_text(contract_edge(K3, 0)) == canonical_text(C2)
    with pytest.raises(GraphError):
        contract_edge(LOOP, 0)


def test_block_decompose_examples():
    g2 = schreier_graph(GRIGORCHUK, 2).graph
    d = block_decompose(g2)
    assert (d.count("loop"), d.count("bridge"), d.cycle_spectrum()) == (8, 2, {2: 1})

    b3 = strip_loops(schreier_graph(BASILICA, 3).graph)
    d = block_decompose(b3)
    assert d.cycle_spectrum() == {2: 4, 4: 1} and len(d.blocks) == 5

    d = block_decompose(complete_graph(4))
    assert [(b.kind, len(b.edge_ids)) for b in d.blocks] == [("core", 6)]
    assert not d.is_cactus


def test_strip_loops():
    g1 = strip_loops(schreier_graph(GRIGORCHUK, 1).graph)
    assert len(g1.edges) == 1 == 3 * 2 ** 0 - 2
    b1 = strip_loops(schreier_graph(BASILICA, 1).graph)
    # B1 keeps its parallel pair: 2 edges, not the 3 that 3*2^(n-1) would give.
    assert canonical_text(b1) == canonical_text(C2)
    assert strip_loops(C2) == C2


def test_canonical_text():
    assert canonical_text(C2) == "2\n0 1\n0 1\n"
    assert canonical_text(LOOP) == "1\n0 0\n"
    assert canonical_text(E2) == "2\n"


def test_edge_list_round_trip():
    g = schreier_graph(BASILICA, 3).graph
    back = parse_edge_list(to_edge_list(g))
    assert canonical_text(back) == canonical_text(g)
    assert parse_edge_list("2\n0 1\n0 1\n") == C2
    with pytest.raises(GraphError):
        parse_edge_list("vertices x\n")
    with pytest.raises(GraphError):
        parse_edge_list("vertices 2\n0 5\n")


def test_dot_export_keeps_multiplicity():
    dot = to_dot(schreier_graph(GRIGORCHUK, 1).graph)
    assert dot.count("0 -- 0") == 3 and dot.count("1 -- 1") == 3 and dot.count("0 -- 1") == 1


# -- properties -------------------------------------------------------------------

graphs = st.builds(
    lambda n, pairs: build(n, [(u % n, v % n) for u, v in pairs]),
    st.integers(1, 6),
    st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=10),
)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_contraction_lowers_rank(g):
    s = stats(g)
    for e in g.edges:
        if not e.is_loop:
            h = contract_edge(g, e.id)
            assert stats(h).rank == s.rank - 1
            assert len(h.edges) == len(g.edges) - 1


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_deletion_nullity(g):
    s = stats(g)
    d = block_decompose(g)
    on_cycle = {eid for b in d.blocks if b.kind in ("loop", "cycle", "core") for eid in b.edge_ids}
    for e in g.edges:
        n_after = stats(delete_edge(g, e.id)).nullity
        assert n_after == (s.nullity - 1 if e.id in on_cycle else s.nullity)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_blocks_partition_edges(g):
    d = block_decompose(g)
    ids = [eid for b in d.blocks for eid in b.edge_ids]
    assert sorted(ids) == sorted(e.id for e in g.edges)
    for b in d.blocks:
        if b.kind == "bridge":
            assert stats(delete_edge(g, b.edge_ids[0])).k == stats(g).k + 1
        if b.kind == "cycle":
            assert len(b.edge_ids) == b.length == len(b.vertices)


@settings(max_examples=100, deadline=None)
@given(graphs, st.data())
def test_delete_then_readd(g, data):
    if not g.edges:
        return
    e = data.draw(st.sampled_from(g.edges))
    again = add_edge(delete_edge(g, e.id), e.u, e.v)
    assert canonical_text(again) == canonical_text(g)


def test_random_cacti_are_cacti(cacti):
    for g in cacti:
        assert block_decompose(g).is_cactus


@pytest.mark.parametrize("spec", [GRIGORCHUK, BASILICA])
def test_schreier_graphs_are_cacti(spec):
    for n in range(1, 11):
        assert block_decompose(schreier_graph(spec, n).graph).is_cactus
