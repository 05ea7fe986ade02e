from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from szl.boundary import BoundarySpec, enumerate_boundaries, gamma_candidates
from szl.graph import Multigraph, W1, W2, aK2, cut_degree, triangle
from szl.orient import (
    Orientation,
    achievable_imbalances,
    brute_force_beta_orientation,
    construct_orientation,
    find_beta_orientation,
    hakimi_check,
    imbalance,
    imbalances,
    lex_subsets,
    solve_three_vertex,
    verify_beta_orientation,
)


def arc_count_imbalance(G, D, v):
    """Expand every pair into individual arcs and count heads and tails."""
    arcs = []
    for (a, b), f, m in zip(G.pairs(), D.forward, G.upper):
        arcs += [(a, b)] * f + [(b, a)] * (m - f)
    return sum(1 for t, _ in arcs if t == v) - sum(1 for _, h in arcs if h == v)


graphs4 = st.lists(st.integers(0, 3), min_size=6, max_size=6).map(lambda u: Multigraph(4, tuple(u)))


def test_imbalance_examples():
    assert imbalances(aK2(4), Orientation.all_forward(aK2(4))) == (4, -4)
    G = Multigraph(3, (2, 4, 0))
    assert imbalances(G, Orientation(3, (1, 2, 0))) == (0, 0, 0)
    D = Orientation(4, (3, 1, 1, 0, 0, 1))
    for v in range(4):
        assert imbalance(W1(), D, v) == arc_count_imbalance(W1(), D, v)
    assert imbalance(W1(), D, 0) == 1
    with pytest.raises(ValueError):
        imbalances(W1(), Orientation(4, (4, 0, 0, 0, 0, 0)))


@given(graphs4, st.data())
def test_imbalances_sum_to_zero(G, data):
    fwd = tuple(data.draw(st.integers(0, m)) for m in G.upper)
    D = Orientation(4, fwd)
    imb = imbalances(G, D)
    assert sum(imb) == 0
    assert list(imb) == [arc_count_imbalance(G, D, v) for v in range(4)]


def test_verify_beta_orientation_examples():
    assert verify_beta_orientation(aK2(4), BoundarySpec(5, (4, 6)), Orientation(2, (4,)))
    G = triangle(2, 2, 2)
    assert verify_beta_orientation(G, BoundarySpec(3, (0, 0, 0)), Orientation(3, (1, 1, 1)))
    beta = BoundarySpec(5, (5, 5, 5, 5))
    assert not any(
        verify_beta_orientation(W1(), beta, Orientation(4, f)) for f in product(*(range(m + 1) for m in W1().upper))
    )


def test_hakimi_check_examples():
    bad = hakimi_check(W1(), (5, 5, -5, -5))
    assert (bad.subset, bad.gamma_sum, bad.cut) == ((0, 1), 10, 8)
    assert hakimi_check(W2(), (1, 1, -1, -1)) is None
    assert hakimi_check(triangle(2, 2, 2), (0, 0, 0)) is None
    G = triangle(2, 2, 2)
    assert hakimi_check(G, (4, -2, -2)) is None
    assert (4, -2, -2) in achievable_imbalances(G)
    with pytest.raises(ValueError):
        hakimi_check(G, (1, -1, 0))
    with pytest.raises(ValueError):
        hakimi_check(G, (2, 2, 2))


def test_lex_subsets_order():
    assert lex_subsets(3) == ((), (0,), (0, 1), (0, 1, 2), (0, 2), (1,), (1, 2), (2,))


@given(graphs4, st.data())
def test_bad_sets_come_in_complement_pairs(G, data):
    beta = data.draw(st.sampled_from(list(enumerate_boundaries(G, 3))))
    for gamma in gamma_candidates(G, beta):
        bad = hakimi_check(G, gamma)
        if bad is None:
            continue
        comp = [v for v in range(4) if v not in bad.subset]
        assert abs(sum(gamma[v] for v in comp)) > cut_degree(G, comp)


@given(st.lists(st.integers(0, 3), min_size=6, max_size=6))
def test_hakimi_matches_exhaustive_search(upper):
    G = Multigraph(4, tuple(upper))
    reachable = achievable_imbalances(G)
    for gamma in product(*(range(-d, d + 1, 2) for d in G.degrees)):
        if sum(gamma) == 0:
            assert (hakimi_check(G, gamma) is None) == (gamma in reachable)


def test_construct_orientation_examples():
    assert construct_orientation(aK2(4), (4, -4)).forward == (4,)
    assert construct_orientation(aK2(4), (0, 0)).forward == (2,)
    assert hakimi_check(W1(), (3, -1, -1, -1)) is None
    D = construct_orientation(W1(), (3, -1, -1, -1))
    assert imbalances(W1(), D) == (3, -1, -1, -1)
    with pytest.raises(ValueError):
        construct_orientation(W1(), (5, 5, -5, -5))


@given(graphs4, st.data())
def test_construct_orientation_hits_every_reachable_vector(G, data):
    gamma = data.draw(st.sampled_from(sorted(achievable_imbalances(G))))
    assert imbalances(G, construct_orientation(G, gamma)) == gamma


def test_find_beta_orientation_w1_exception():
    out = find_beta_orientation(W1(), BoundarySpec(5, (5, 5, 5, 5)))
    assert not out.feasible
    assert len(out.witnesses) == 6
    for w in out.witnesses:
        assert len(w.subset) == 2 and abs(w.gamma_sum) == 10 and w.cut == 8


def test_find_beta_orientation_w1_other_boundaries():
    for beta in enumerate_boundaries(W1(), 5):
        out = find_beta_orientation(W1(), beta)
        assert out.feasible == (beta.values != (5, 5, 5, 5))
        if out.feasible:
            assert verify_beta_orientation(W1(), beta, out.orientation)
            assert imbalances(W1(), out.orientation) == out.gamma


def test_k1_is_trivially_orientable():
    out = find_beta_orientation(Multigraph(1, ()), BoundarySpec(3, (0,)))
    assert out.feasible and out.orientation.forward == ()


def test_brute_agrees_on_w1_w2():
    for G in (W1(), W2()):
        for beta in enumerate_boundaries(G, 5):
            fast, brute = find_beta_orientation(G, beta), brute_force_beta_orientation(G, beta)
            assert fast.feasible == brute.feasible
            if brute.feasible:
                assert verify_beta_orientation(G, beta, brute.orientation)


def test_brute_agrees_on_triangles():
    for a, b, c in product(range(7), repeat=3):
        G = triangle(a, b, c)
        for beta in enumerate_boundaries(G, 3):
            assert find_beta_orientation(G, beta).feasible == brute_force_beta_orientation(G, beta).feasible


def test_parity_violating_boundary_has_no_orientation():
    beta = BoundarySpec(5, (4, 6))
    assert not brute_force_beta_orientation(aK2(3), beta).feasible
    out = find_beta_orientation(aK2(3), beta)
    assert not out.feasible and out.witnesses == ()


def test_brute_guard():
    with pytest.raises(ValueError):
        brute_force_beta_orientation(Multigraph(4, (40,) * 6), BoundarySpec(3, (0, 0, 0, 0)))


def test_solve_three_vertex_examples():
    G = triangle(4, 4, 4)
    for beta in enumerate_boundaries(G, 5):
        out = solve_three_vertex(G, beta)
        assert out.feasible and verify_beta_orientation(G, beta, out.orientation)
    H = triangle(1, 1, 2)
    for beta in enumerate_boundaries(H, 3):
        assert solve_three_vertex(H, beta).feasible == brute_force_beta_orientation(H, beta).feasible
    even = triangle(2, 2, 2)
    out = solve_three_vertex(even, BoundarySpec(3, (0, 0, 0)))
    assert imbalances(even, out.orientation) == (0, 0, 0)
    with pytest.raises(ValueError):
        solve_three_vertex(W1(), BoundarySpec(5, (5, 5, 5, 5)))


@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9), st.integers(3, 5))
def test_solve_three_vertex_matches_hakimi(a, b, c, ell):
    G = triangle(a, b, c)
    for beta in enumerate_boundaries(G, ell):
        out = solve_three_vertex(G, beta)
        assert out.feasible == find_beta_orientation(G, beta).feasible
        if out.feasible:
            assert verify_beta_orientation(G, beta, out.orientation)
