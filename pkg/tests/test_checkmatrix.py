import random

import pytest

from redgreen.checkmatrix import (CheckMatrix, NotMaximal,
                                  SearchBoundExceeded, graph_check,
                                  is_local, is_rank_deficient, is_symplectic,
                                  is_valid, lc_adj, lc_orbit, lc_orbit_equal,
                                  symplectic_form, to_graph_form, _local_h,
                                  _local_s, _matmul)


def random_graph(rng, n):
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < .5:
                adj[i][j] = adj[j][i] = 1
    return adj


def scrambled_check(rng, adj):
    n = len(adj)
    gc = graph_check(adj).bits
    for _ in range(6):
        op = _local_h(n, rng.randrange(n)) if rng.random() < .5 \
            else _local_s(n, rng.randrange(n))
        gc = _matmul(op, gc)
    for _ in range(4):
        c1, c2 = rng.randrange(n), rng.randrange(n)
        if c1 != c2:
            for r in range(2 * n):
                gc[r][c1] ^= gc[r][c2]
    return CheckMatrix.from_rows(gc)


def test_bell_examples():
    b1 = CheckMatrix.from_rows([[1, 0], [1, 0], [0, 1], [0, 1]])
    b2 = CheckMatrix.from_rows([[1, 1], [1, 1], [0, 1], [0, 1]])
    assert is_valid(b1) and is_valid(b2)
    k2 = [[0, 1], [1, 0]]
    assert to_graph_form(b1)[0] == k2
    assert to_graph_form(b2)[0] == k2


def test_rank_deficiency_flagged():
    s = CheckMatrix.from_rows([[0, 0], [0, 0], [0, 0], [0, 0]])
    assert is_valid(s) and is_rank_deficient(s)
    with pytest.raises(NotMaximal):
        to_graph_form(s)


def test_invalid_matrix_detected():
    # columns Z1 and X1: anticommuting pair
    s = CheckMatrix.from_rows([[1, 0], [0, 0], [0, 1], [0, 0]])
    assert not is_valid(s)


def test_symplectic_and_local():
    j = symplectic_form(3)
    assert is_symplectic(j)
    assert is_local(_local_h(3, 1)) and is_symplectic(_local_h(3, 1))
    assert is_local(_local_s(2, 0)) and is_symplectic(_local_s(2, 0))
    nonlocal_cx = [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]]
    assert is_symplectic(nonlocal_cx) and not is_local(nonlocal_cx)
    singular = [[0, 0], [0, 0]]
    assert not is_symplectic(singular)


def test_graph_check_validity(rng):
    for _ in range(20):
        adj = random_graph(rng, rng.randint(1, 5))
        assert is_valid(graph_check(adj))


def test_to_graph_form_random(rng):
    for _ in range(40):
        n = rng.randint(1, 5)
        s = scrambled_check(rng, random_graph(rng, n))
        assert is_valid(s)
        theta, q = to_graph_form(s)
        assert is_local(q) and is_symplectic(q)
        # the defining relation: Q.S reduces to the same graph again
        again, _ = to_graph_form(CheckMatrix.from_rows(_matmul(q, s.bits)))
        assert again == theta


def test_lc_adj_line_graph_example():
    line = [[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]]
    g1 = lc_adj(line, 2)
    assert g1[1][3] == 1
    g2 = lc_adj(g1, 1)
    assert g2[0][2] == 1 and g2[0][3] == 1 and g2[2][3] == 0
    assert lc_adj(lc_adj(line, 2), 2) == line
    with pytest.raises(ValueError):
        lc_adj(line, 9)


def test_orbit_equal():
    k3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    star = [[0, 1, 1], [1, 0, 0], [1, 0, 0]]
    assert lc_orbit_equal(k3, star)
    assert not lc_orbit_equal(k3, [[0] * 3 for _ in range(3)])
    assert not lc_orbit_equal(k3, [[0, 1], [1, 0]])


def test_orbit_bound():
    k3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    with pytest.raises(SearchBoundExceeded):
        lc_orbit(k3, bound=1)
