import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_force_td_subsets, graphs
from totaldom import (
    Graph,
    NoATDSetError,
    NoTDSetError,
    gamma_t,
    gamma_t_almost,
    gamma_t_oracle,
    gamma_t_path_cycle,
    gen_complete,
    gen_cycle,
    gen_F,
    gen_G,
    gen_GP16,
    gen_L,
    gen_path,
    enumerate_connected,
    is_almost_total_dominating,
    is_total_dominating,
    two_corona,
)


def test_is_total_dominating_examples():
    c6 = gen_cycle(6)
    assert is_total_dominating(c6, {0, 1, 3, 4})
    assert not is_total_dominating(c6, {0, 3})
    assert is_total_dominating(gen_complete(4), {0, 1})


def test_oracle_examples():
    assert gamma_t_oracle(gen_cycle(6)).value == 4
    assert gamma_t_oracle(gen_complete(4)).value == 2
    cert = gamma_t_oracle(gen_path(3))
    assert cert.value == 2 and 1 in cert.witness  # the center is in every TD-set


def test_oracle_preconditions():
    with pytest.raises(NoTDSetError):
        gamma_t_oracle(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(ValueError):
        gamma_t_oracle(Graph.from_edges(25, [(i, (i + 1) % 25) for i in range(25)]))


def test_solver_family_values():
    assert gamma_t(gen_G(2).graph).value == 4
    assert gamma_t(gen_F(1).graph).value == 4
    assert gamma_t(gen_L(1).graph).value == 6
    assert gamma_t(two_corona(gen_cycle(3)).graph).value == 6
    assert gamma_t(gen_GP16().graph).value == 8


def test_solver_rejects_isolated_vertex():
    with pytest.raises(NoTDSetError):
        gamma_t(Graph.from_edges(4, [(0, 1)]))


def test_empty_graph():
    cert = gamma_t(Graph.from_edges(0, []))
    assert cert.value == 0 and cert.witness == frozenset()


def test_disconnected_sum():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    cert = gamma_t(g)
    assert cert.value == 4
    assert is_total_dominating(g, cert.witness)


def test_atd_examples():
    f1 = gen_F(1)
    cert = gamma_t_almost(f1.graph, f1.vertex("v2"))
    assert cert.value == 3
    assert gamma_t_almost(gen_complete(4), 0).value == 1
    assert gamma_t_almost(gen_cycle(6), 0).value == 3


def test_atd_matches_brute_force_on_c6():
    g = gen_cycle(6)
    for v in range(6):
        best = None
        for size, s in brute_force_td_subsets_atd(g, v):
            best = size
            break
        assert gamma_t_almost(g, v).value == best


def brute_force_td_subsets_atd(g, anchor):
    # smallest-first enumeration of ATD-sets for the anchor
    import itertools

    others = [v for v in range(g.n) if v != anchor]
    for k in range(g.n + 1):
        for extra in itertools.combinations(others, k):
            s = frozenset(extra) | {anchor}
            if is_almost_total_dominating(g, anchor, s):
                yield len(s), s


def test_atd_infeasible():
    with pytest.raises(NoATDSetError):
        gamma_t_almost(gen_cycle(4), 0)


def test_atd_certificate_clauses():
    g = gen_L(2).graph
    for v in range(g.n):
        try:
            cert = gamma_t_almost(g, v)
        except NoATDSetError:
            continue
        assert v in cert.witness
        assert is_almost_total_dominating(g, v, cert.witness)
        assert gamma_t(g).value <= cert.value + 1


def test_formula_values():
    assert gamma_t_path_cycle(6) == 4
    assert gamma_t_path_cycle(7) == 4
    assert gamma_t_path_cycle(8) == 4
    with pytest.raises(ValueError):
        gamma_t_path_cycle(2)


def test_formula_matches_solver():
    for n in range(3, 15):
        want = gamma_t_path_cycle(n)
        assert gamma_t(gen_path(n)).value == want
        assert gamma_t(gen_cycle(n)).value == want


def test_solver_agrees_with_oracle_through_order_6():
    for n in range(2, 7):
        for g in enumerate_connected(n):
            fast = gamma_t(g)
            slow = gamma_t_oracle(g)
            assert fast.value == slow.value
            assert fast.witness == slow.witness  # both pick the lex-least witness
            assert is_total_dominating(g, fast.witness)


def test_witness_is_lexicographically_least():
    for g in enumerate_connected(6)[::7]:
        cert = gamma_t(g)
        best = min(
            (tuple(sorted(s)) for k, s in brute_force_td_subsets(g) if k == cert.value),
        )
        assert tuple(sorted(cert.witness)) == best


@settings(deadline=None, max_examples=60)
@given(graphs(min_n=2, max_n=9, connected=True), st.data())
def test_adding_an_edge_never_increases_gamma_t(g, data):
    non_edges = [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
    ]
    if not non_edges:
        return
    u, v = data.draw(st.sampled_from(non_edges))
    assert gamma_t(g.with_edge(u, v)).value <= gamma_t(g).value


@settings(deadline=None, max_examples=40)
@given(graphs(min_n=3, max_n=9, connected=True))
def test_atd_relation_holds(g):
    base = gamma_t(g).value
    for v in range(g.n):
        try:
            atd = gamma_t_almost(g, v)
        except NoATDSetError:
            continue
        assert base <= atd.value + 1
