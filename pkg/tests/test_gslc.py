import pytest

import conftest
from redgreen import clifford as cl
from redgreen import diagram as dg
from redgreen.diagram import Diagram, FragmentViolation
from redgreen.gslc import (GsLc, VerdictKind, _adjacent_red_pair,
                           diagram_to_gslc, equal_stabilizer, fixpoint,
                           graph_state_diagram, gslc_add_qubit, gslc_join,
                           gslc_post_select, gslc_split, gslc_to_diagram,
                           local_complement, local_complement_edge,
                           nonscalar_node_count, reduce_to_rgslc,
                           simplify_pair, EdgeRequired, ZeroDiagram)
from redgreen.matrix import ExactMatrix, proportional_equal
from redgreen.ring import ONE, RingScalar
from redgreen.semantics import interpret


def rand_gslc(rng, n):
    g = GsLc()
    for _ in range(n):
        g.add_vertex()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < .5:
                g.toggle_edge(g.order[i], g.order[j])
    for v in g.order:
        g.vops[v] = rng.randrange(24)
    return g


def test_single_vertex_graph_state_is_plus():
    m = interpret(graph_state_diagram([[0]]))
    assert m.entries[0][0] == m.entries[1][0]
    assert m.entries[0][0] == cl.INV_SQRT2


def test_k2_graph_state_is_cz_plus_plus():
    m = interpret(graph_state_diagram([[0, 1], [1, 0]]))
    half = RingScalar(1, 0, 0, 0, 1)
    assert m.flat() == [half, half, half, -half]


def test_star_graph_stabilizer_eigenstate():
    """The 4-vertex star graph state is fixed by X (x) Z (x) Z (x) Z."""
    adj = [[0, 1, 1, 1], [1, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0]]
    gs = graph_state_diagram(adj)
    layer = dg.compose_par(
        dg.compose_par(dg.spider(dg.X, 4, 1, 1), dg.spider(dg.Z, 4, 1, 1)),
        dg.compose_par(dg.spider(dg.Z, 4, 1, 1), dg.spider(dg.Z, 4, 1, 1)))
    assert interpret(dg.compose_seq(gs, layer)) == interpret(gs)
    for v in range(4):
        gens = [dg.spider(dg.X if i == v else dg.Z, 4, 1, 1)
                if (i == v or adj[v][i]) else dg.wire() for i in range(4)]
        lay = gens[0]
        for gd in gens[1:]:
            lay = dg.compose_par(lay, gd)
        assert interpret(dg.compose_seq(gs, lay)) == interpret(gs)


def test_local_complement_line_graph():
    g = GsLc()
    for _ in range(4):
        g.add_vertex()
    for a, b in ((0, 1), (1, 2), (2, 3)):
        g.toggle_edge(a, b)
    before = interpret(gslc_to_diagram(g))
    g2 = local_complement(g, 2)
    assert 3 in g2.adj[1] and 1 in g2.adj[3]
    assert interpret(gslc_to_diagram(g2)) == before


def test_local_complement_isolated_vertex():
    g = GsLc()
    g.add_vertex()
    g.vops[0] = cl.IDX_S
    before = interpret(gslc_to_diagram(g))
    g2 = local_complement(g, 0)
    assert not g2.adj[0]
    assert interpret(gslc_to_diagram(g2)) == before


def test_lc_invariance_random(rng):
    for _ in range(25):
        g = rand_gslc(rng, rng.randint(1, 4))
        v = rng.choice(g.order)
        assert interpret(gslc_to_diagram(local_complement(g, v))) == \
            interpret(gslc_to_diagram(g))


def test_fixpoint_brings_adj_and_words_back(rng):
    g = rand_gslc(rng, 3)
    v = g.order[0]
    g2 = fixpoint(fixpoint(g, v), v)
    assert g2.adj == g.adj
    assert g2.vops == g.vops  # canonical words return after two fixpoints
    assert interpret(gslc_to_diagram(g2)) == interpret(gslc_to_diagram(g))


def test_edge_complement_properties(rng):
    g = rand_gslc(rng, 4)
    v, w = g.order[0], g.order[1]
    if w not in g.adj[v]:
        g.toggle_edge(v, w)
    before = interpret(gslc_to_diagram(g))
    g2 = local_complement_edge(g, v, w)
    assert w in g2.adj[v]
    for j in g.order:
        if j in (v, w):
            continue
        assert (j in g2.adj[v]) == (j in g.adj[w])
        assert (j in g2.adj[w]) == (j in g.adj[v])
    assert interpret(gslc_to_diagram(g2)) == before
    with pytest.raises(EdgeRequired):
        g3 = g.copy()
        if w in g3.adj[v]:
            g3.toggle_edge(v, w)
        g3.local_complement_edge(v, w)


def test_generator_fold_ops(rng):
    g = GsLc()
    q = gslc_add_qubit(g)
    assert interpret(gslc_to_diagram(g)).flat() == [ONE, ONE]
    b = gslc_split(g, q)
    m = interpret(gslc_to_diagram(g))
    assert m.flat() == [ONE, RingScalar.zero(), RingScalar.zero(), ONE]
    merged = gslc_join(g, q, b)
    assert merged is not None
    gslc_post_select(g, merged)
    assert g.scalar == RingScalar.from_int(2)


def test_post_select_on_plus_vertex():
    g = GsLc()
    q = gslc_add_qubit(g)
    gslc_post_select(g, q)
    # <effect| green-state = sqrt(2) * sqrt(2) / sqrt(2) ... exact oracle:
    d = dg.compose_seq(dg.spider(dg.Z, 0, 0, 1), dg.spider(dg.Z, 0, 1, 0))
    assert g.scalar == interpret(d).entries[0][0]


def test_split_on_connected_vertex_adds_vertex_and_edge(rng):
    g = GsLc()
    a = g.add_vertex()
    b = g.add_vertex()
    g.toggle_edge(a, b)
    before = interpret(gslc_to_diagram(g))
    new = gslc_split(g, a)
    assert new in g.adj[a]
    # oracle: splitter applied to output 0
    lay = Diagram()
    i0 = lay.add_boundary(False)
    i1 = lay.add_boundary(False)
    sp = lay.add_node(dg.Z, 0)
    o0 = lay.add_boundary(True)
    o1 = lay.add_boundary(True)
    o2 = lay.add_boundary(True)
    lay.add_edge(i0, sp)
    lay.add_edge(sp, o0)
    lay.add_edge(sp, o1)
    lay.add_edge(i1, o2)
    want_d = Diagram()
    g2 = g.copy()
    g2.order = [a, new, g.order[1]]
    got = interpret(gslc_to_diagram(g2))
    gs0 = GsLc()
    x = gs0.add_vertex()
    y = gs0.add_vertex()
    gs0.toggle_edge(x, y)
    want = interpret(dg.compose_seq(gslc_to_diagram(gs0), lay))
    assert got == want


def test_join_zero_case():
    """Merging the two halves of an X-twisted pair annihilates."""
    g = GsLc()
    a = g.add_vertex()
    b = g.add_vertex()
    g.toggle_edge(a, b)
    g.vops[a] = cl.IDX_H
    g.vops[b] = cl.IDX_X
    assert interpret(gslc_to_diagram(g)).entries[0][0].is_zero()  # <00| amp
    out = gslc_join(g, a, b)
    assert out is None and g.zero


def test_fold_matches_oracle(rng):
    zeros = 0
    for _ in range(60):
        d = conftest.random_stabilizer_diagram(rng, steps=9)
        g = diagram_to_gslc(d)
        zeros += g.zero
        assert interpret(gslc_to_diagram(g)) == interpret(dg.bend_inputs(d))
    assert zeros > 0


def test_fold_rejects_odd_phases():
    with pytest.raises(FragmentViolation):
        diagram_to_gslc(dg.spider(dg.Z, 1, 0, 1))


def test_fold_examples():
    g = diagram_to_gslc(dg.spider(dg.Z, 0, 0, 1))
    assert g.n == 1 and not g.zero
    g = diagram_to_gslc(dg.cup())
    assert g.n == 2
    assert interpret(gslc_to_diagram(g)) == interpret(dg.cup())


def test_reduce_to_rgslc(rng):
    for _ in range(30):
        g = rand_gslc(rng, rng.randint(1, 4))
        r = reduce_to_rgslc(g)
        assert all(r.vops[v] in cl.R_SET for v in r.order)
        assert _adjacent_red_pair(r) is None
        assert interpret(gslc_to_diagram(r)) == interpret(gslc_to_diagram(g))
    with pytest.raises(ZeroDiagram):
        z = GsLc()
        z.mark_zero()
        reduce_to_rgslc(z)


def test_reduce_identity_vops_untouched():
    g = GsLc()
    for _ in range(3):
        g.add_vertex()
    g.toggle_edge(0, 1)
    r = reduce_to_rgslc(g)
    assert r.adj == g.adj and r.vops == g.vops


def test_single_qubit_reduced_forms():
    for vop in range(24):
        g = GsLc()
        g.add_vertex()
        g.vops[0] = vop
        r = reduce_to_rgslc(g)
        assert r.vops[0] in cl.R_SET
        ratio = proportional_equal(interpret(gslc_to_diagram(r)),
                                   interpret(gslc_to_diagram(g)))
        assert ratio == ONE


def test_simplify_pair_noop_when_clean(rng):
    g = reduce_to_rgslc(rand_gslc(rng, 3))
    a, b = simplify_pair(g, g)
    assert a.adj == b.adj and a.vops == b.vops


def test_node_count_bound(rng):
    for _ in range(25):
        d = conftest.random_stabilizer_diagram(rng, steps=9)
        g = diagram_to_gslc(d)
        if g.zero:
            continue
        n = g.n
        rendered = gslc_to_diagram(g)
        assert nonscalar_node_count(rendered) <= (n * n + 7 * n) / 2


def test_equal_stabilizer_trivia(rng):
    d = conftest.random_stabilizer_diagram(rng, steps=6)
    assert equal_stabilizer(d, d.relabel(777)).kind is VerdictKind.EQUAL
    s1 = dg.compose_seq(dg.compose_par(dg.spider(dg.X, 0, 0, 1),
                                       dg.star_scalar()), dg.wire())
    s2 = dg.spider(dg.Z, 0, 0, 1)
    v = equal_stabilizer(s1, s2)  # |0>-ish vs |+>-ish
    assert v.kind is VerdictKind.UNEQUAL


def test_equal_stabilizer_scalar_tier(rng):
    from redgreen.scalars import ScalarNF, scalar_diagram
    d = conftest.random_stabilizer_diagram(rng, steps=6)
    g = diagram_to_gslc(d)
    if g.zero:
        d = dg.spider(dg.Z, 2, 0, 1)
    c = ScalarNF.make(3, 1)
    d2 = dg.compose_par(d.relabel(900), scalar_diagram(c.value()))
    v = equal_stabilizer(d2, d)
    assert v.kind is VerdictKind.PROPORTIONAL
    assert v.ratio == c.value()


def test_cz_worked_example():
    cz_a, cz_b = conftest.cz_decompositions()
    CZ = ExactMatrix.identity(4)
    CZ.entries[3][3] = -ONE
    assert interpret(cz_a) == CZ
    assert interpret(cz_b) == CZ
    v = equal_stabilizer(cz_a, cz_b)
    assert v.kind is VerdictKind.EQUAL
    assert proportional_equal(interpret(cz_a), interpret(cz_b)) == ONE
