import pytest

from schreier_tutte.multigraph import block_decompose, is_connected, strip_loops
from schreier_tutte.schreier import (
    BASILICA,
    GRIGORCHUK,
    LevelCapExceeded,
    UnknownGenerator,
    apply_generator,
    apply_word,
    basilica_max_cycle,
    schreier_graph,
    verify_structure,
)


def claims(spec, n):
    return {c.name: c for c in verify_structure(schreier_graph(spec, n))}


def test_apply_examples():
    assert apply_word(GRIGORCHUK, "a", "01") == "11"
    assert apply_word(GRIGORCHUK, "b", "00") == "01"
    # b = eps(a, id): b(0w) = 1 a(w)
    for w in ("0", "1", "00", "01", "10", "11"):
        assert apply_word(BASILICA, "b", "0" + w) == "1" + apply_word(BASILICA, "a", w)
    with pytest.raises(UnknownGenerator):
        apply_word(GRIGORCHUK, "z", "0")


@pytest.mark.parametrize("gen", "abcd")
def test_grigorchuk_involutions(gen):
    for n in range(1, 8):
        for w in range(2 ** n):
            assert apply_generator(GRIGORCHUK, gen, apply_generator(GRIGORCHUK, gen, w, n), n) == w


def test_basilica_generators_are_permutations():
    for n in range(1, 8):
        for gen in "ab":
            assert sorted(apply_generator(BASILICA, gen, w, n) for w in range(2 ** n)) == list(range(2 ** n))


def test_level_examples():
    g1 = schreier_graph(GRIGORCHUK, 1).graph
    d = block_decompose(g1)
    assert (g1.vertex_count, len(g1.edges), g1.loop_count, d.count("bridge")) == (2, 7, 6, 1)

    b3 = schreier_graph(BASILICA, 3).graph
    d = block_decompose(b3)
    assert (b3.vertex_count, len(b3.edges), b3.loop_count) == (8, 16, 4)
    assert d.cycle_spectrum() == {2: 4, 4: 1}

    assert block_decompose(schreier_graph(BASILICA, 4).graph).cycle_spectrum() == {2: 6, 4: 3}


def test_edges_carry_generator_labels():
    g = schreier_graph(GRIGORCHUK, 3).graph
    assert {e.label for e in g.edges} == set("abcd")
    b = schreier_graph(BASILICA, 3)
    assert {e.label for e in b.graph.edges} == set("ab")


def test_structure_examples():
    c = claims(GRIGORCHUK, 5)
    observed = {name: claim.observed for name, claim in c.items()}
    assert 82 in observed.values()
    g5 = schreier_graph(GRIGORCHUK, 5).graph
    d = block_decompose(g5)
    assert (d.count("bridge"), d.cycle_spectrum(), g5.loop_count, len(g5.edges)) == (16, {2: 15}, 36, 82)

    # 3 * 2^(n-2i-1) at n=6, i=1 is 24; the loopless edge total 2*24 + 4*6 + 8*3 = 96 = 2^7 - 32 agrees
    assert block_decompose(schreier_graph(BASILICA, 6).graph).cycle_spectrum() == {2: 24, 4: 6, 8: 3}
    d5 = block_decompose(schreier_graph(BASILICA, 5).graph)
    assert d5.cycle_spectrum() == {2: 12, 4: 4, 8: 1}
    assert max(d5.cycle_spectrum()) == basilica_max_cycle(5) == 8


@pytest.mark.parametrize("spec", [GRIGORCHUK, BASILICA])
@pytest.mark.parametrize("n", range(1, 11))
def test_structure_claims_pass(spec, n):
    for claim in verify_structure(schreier_graph(spec, n)):
        assert claim.ok, (claim.name, claim.expected, claim.observed)


@pytest.mark.parametrize("spec", [GRIGORCHUK, BASILICA])
def test_connected_with_power_of_two_vertices(spec):
    for n in range(1, 11):
        g = schreier_graph(spec, n).graph
        assert g.vertex_count == 2 ** n and is_connected(g)
        assert is_connected(strip_loops(g))


def test_basilica_cycles_are_powers_of_two():
    for n in range(1, 11):
        for length in block_decompose(schreier_graph(BASILICA, n).graph).cycle_spectrum():
            assert length & (length - 1) == 0


def test_degree_matches_generator_action():
    # Basilica: one edge per (vertex, generator), so 4-regular with loops counted twice.
    # Grigorchuk: one edge per orbit pair, so a moved vertex gains 1 and a fixed vertex 2 per generator.
    n = 6
    for spec in (GRIGORCHUK, BASILICA):
        g = schreier_graph(spec, n).graph
        deg = [0] * g.vertex_count
        for e in g.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        for w in range(2 ** n):
            if spec is BASILICA:
                assert deg[w] == 4
            else:
                fixed = sum(apply_generator(spec, s, w, n) == w for s in "abcd")
                assert deg[w] == 4 + fixed


def test_level_cap():
    with pytest.raises(LevelCapExceeded):
        schreier_graph(GRIGORCHUK, 5, cap=4)
    with pytest.raises(LevelCapExceeded):
        schreier_graph(GRIGORCHUK, 21)
    with pytest.raises(ValueError):
        schreier_graph(BASILICA, 0)


def test_labels_are_binary_words():
    level = schreier_graph(BASILICA, 3)
    assert sorted(level.graph.labels) == sorted(format(i, "03b") for i in range(8))
