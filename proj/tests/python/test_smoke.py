import _bnsync as bn


def example_graph():
    g = bn.SignedDigraph(3)
    g.add_arc(0, 0, -1)
    g.add_arc(2, 0, +1)
    g.add_arc(0, 1, +1)
    g.add_arc(1, 2, -1)
    return g


def test_graph_roundtrip():
    g = example_graph()
    h = bn.parse_sdg(str(g))
    assert h.size() == 3
    assert bn.is_strong(h)
    pos, neg = bn.cycle_signs(h)
    assert pos == 0 and neg == 2
    assert not bn.is_cycle_graph(h)


def test_golden_word():
    f = bn.and_net(example_graph())
    w = bn.word_from_string("2 3 1 1 2 3")
    assert bn.apply_word_all(f, w) == [bn.config_from_string("001")]
    assert bn.is_synchronizing(f)
    assert bn.shortest_sync_word(f) is not None
    assert bn.apply_word_all(bn.or_net(example_graph()), w) == [bn.config_from_string("110")]


def test_constructions():
    g = example_graph()
    f = bn.and_net(g)
    w = bn.global_sync_word(f)
    assert len(bn.apply_word_all(f, w)) == 1
    net, word = bn.fast_sync(g)
    assert len(bn.apply_word_all(net, word)) == 1
    t = bn.tau1_word(g)
    assert len(t) <= 3 * 3 - 1
    for h in bn.enumerate_and_or_nets(g):
        assert len(bn.apply_word_all(h, t)) == 1


def test_switch_transport():
    g = example_graph()
    f = bn.and_net(g)
    h = bn.bn_switch(f, [1, 2])
    w = bn.word_from_string("2 3 1 1 2 3")
    m = 0b110
    for x in range(8):
        assert h.apply_word(w, x ^ m) == f.apply_word(w, x) ^ m


def test_complete_words():
    w = bn.n_complete_word(3)
    assert len(w) == 9
    assert bn.is_n_complete(w, 3)
    assert not bn.is_n_complete([0, 1, 2], 3)


def test_reduction():
    psi = bn.parse_dimacs_string("p cnf 3 1\n1 2 3 0\n")
    assert bn.sat_solve(psi) is not None
    assert bn.strong_reduction_graph(psi).size() == 3 * 3 + 3 * 1 + 3
    assert len(bn.strong_universal_word(psi)) == 12 * 3 + 12 * 1 + 11
    rep = bn.reduction_equivalence_check(psi, sample=1, seed=5)
    assert rep["satisfiable"] and rep["consistent"]


def test_suite_registry():
    assert "dichotomy" in bn.suite_names()
    rep = bn.run_suite("dichotomy", n=2)
    assert rep["passed"] and rep["checked"] > 0
