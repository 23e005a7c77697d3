"""Acceptance suite: one test per criterion, each printing a PASS line.

Every expected value is exact; there are no tolerances anywhere.
"""

import itertools
import random
import time

import pytest

import conftest
from redgreen import clifford as cl
from redgreen import cliffordt as ct
from redgreen import diagram as dg
from redgreen import rules
from redgreen.checkmatrix import (CheckMatrix, graph_check, is_valid,
                                  lc_adj, lc_orbit_equal, to_graph_form)
from redgreen.diagram import Diagram, structurally_equal
from redgreen.gslc import (GsLc, VerdictKind, diagram_to_gslc,
                           equal_stabilizer, gslc_to_diagram,
                           nonscalar_node_count, reduce_to_rgslc,
                           simplify_pair, _identical)
from redgreen.matrix import ExactMatrix, proportional_equal
from redgreen.ring import HALF, INV_SQRT2, ONE, RingScalar
from redgreen.scalars import (ScalarNF, decompose_scalar_subdiagrams,
                              diagram_is_zero_by_segments, nf_inverse, nf_mul,
                              nf_to_diagram, ring_to_nf, scalar_diagram,
                              zero_nf_diagram)
from redgreen.semantics import interpret
from redgreen.toy import audit_soundness_toy, interpret_toy
from redgreen.toynf import diagram_to_gslo, equal_toy, gslo_to_diagram


def _report(number: int, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number}: {detail}"


def test_criterion_1_rule_soundness_sweep():
    t0 = time.time()
    rows = rules.audit_soundness(3, dg.CLIFFORD_T, js=(1, 3, 5, 7))
    elapsed = time.time() - t0
    bad = [r for r in rows if not r.ok]
    checked = sum(r.checked for r in rows)
    _report(1, not bad and elapsed < 120,
            f"all rules, both directions, Z8 phases, arities <= 3: "
            f"{checked} checks, {len(bad)} violations, {elapsed:.1f}s")


def test_criterion_2_normalization_preserves_semantics():
    rng = random.Random(20260801)
    done = 0
    while done < 500:
        d = conftest.random_stabilizer_diagram(rng, max_wires=4,
                                               steps=rng.randint(4, 11))
        if len(d.nodes) > 25 or len(d.inputs) + len(d.outputs) > 4:
            continue
        original = interpret(d)
        n_in = len(d.inputs)
        g = diagram_to_gslc(d)
        rendered = gslc_to_diagram(g)
        assert interpret(dg.unbend_outputs(rendered, n_in)) == original
        if not g.zero:
            n = g.n
            assert nonscalar_node_count(rendered) <= (n * n + 7 * n) / 2
            r = reduce_to_rgslc(g)
            rr = gslc_to_diagram(r)
            assert interpret(dg.unbend_outputs(rr, n_in)) == original
            assert nonscalar_node_count(rr) <= (n * n + 7 * n) / 2
        done += 1
    _report(2, True, "500 random diagrams: GS-LC and rGS-LC renderings "
            "interpret identically to the original; node bound holds")


def _oracle_verdict(d1: Diagram, d2: Diagram):
    m1, m2 = interpret(d1), interpret(d2)
    if m1 == m2:
        return VerdictKind.EQUAL, None
    ratio = proportional_equal(m1, m2)
    if ratio is not None and not m1.is_zero():
        return VerdictKind.PROPORTIONAL, ratio
    return VerdictKind.UNEQUAL, None


def _random_zero_diagram(rng):
    kind = rng.randrange(3)
    if kind == 0:
        d = conftest.random_stabilizer_diagram(rng, steps=6)
        killer = Diagram()
        killer.add_node(dg.Z, 4)
        return dg.compose_par(d, killer)
    if kind == 1:
        return zero_nf_diagram(rng.randrange(2), rng.randrange(3))
    # orthogonal post-selection
    state = dg.spider(dg.Z, 0, 0, 1)
    effect = dg.spider(dg.Z, 4, 1, 0)
    d = dg.compose_seq(state, effect)
    pad = dg.identity(rng.randrange(2))
    return dg.compose_par(d, pad)


def test_criterion_3_equality_completeness():
    rng = random.Random(20260802)
    checked = 0

    def check(d1, d2):
        nonlocal checked
        want_kind, want_ratio = _oracle_verdict(d1, d2)
        v = equal_stabilizer(d1, d2)
        assert v.kind == want_kind, (v.kind, want_kind)
        if want_kind is VerdictKind.PROPORTIONAL:
            assert v.ratio == want_ratio
        checked += 1

    # (a) independent random pairs
    while checked < 50:
        d1 = conftest.random_stabilizer_diagram(rng, steps=7)
        d2 = conftest.random_stabilizer_diagram(rng, steps=7)
        if (len(d1.inputs), len(d1.outputs)) != \
                (len(d2.inputs), len(d2.outputs)):
            continue
        check(d1, d2)
    # (b) pairs related by random chains of sound rewrites (staying in
    # the stabilizer fragment)
    while checked < 100:
        d1 = conftest.random_stabilizer_diagram(rng, steps=6)
        d2 = d1
        for _ in range(rng.randint(1, 15)):
            redexes = []
            for rule in rules.ALL_RULES:
                redexes += rules.find_redexes(d2, rule)
            if not redexes:
                break
            try:
                trial = rules.apply(d2, rng.choice(redexes))
            except rules.RedexInvalid:
                continue
            if trial.fragment() == dg.STABILIZER:
                d2 = trial
        check(d1, d2)
    # (c) pairs differing by a known nonzero scalar
    while checked < 150:
        d1 = conftest.random_stabilizer_diagram(rng, steps=6)
        c = ScalarNF.make(rng.randrange(8), rng.randint(-3, 3))
        d2 = dg.compose_par(d1.relabel(1000), scalar_diagram(c.value()))
        check(d1, d2)
    # (d) zero diagrams
    while checked < 200:
        d1 = _random_zero_diagram(rng)
        if rng.random() < .5:
            d2 = _random_zero_diagram(rng)
        else:
            d2 = conftest.random_stabilizer_diagram(rng, steps=6)
        if (len(d1.inputs), len(d1.outputs)) != \
                (len(d2.inputs), len(d2.outputs)):
            continue
        check(d1, d2)
    _report(3, checked == 200,
            f"{checked}/200 constructed pairs: verdicts match the "
            "exact-matrix oracle, ratios included")


def test_criterion_4_cz_worked_example():
    cz_a, cz_b = conftest.cz_decompositions()
    v = equal_stabilizer(cz_a, cz_b)
    oracle = proportional_equal(interpret(cz_a), interpret(cz_b))
    ok = v.proportional and oracle is not None
    ratio = ONE if v.kind is VerdictKind.EQUAL else v.ratio
    ok = ok and ratio == oracle
    _report(4, ok, f"the two controlled-Z decompositions are equal up to "
            f"scalar with exact ratio {ratio} (oracle agrees)")


def test_criterion_5_qkd_example():
    amp00 = interpret(conftest.bell_overlap(dg.X, 0, dg.X, 0)).entries[0][0]
    assert amp00 == INV_SQRT2
    prob00 = amp00 * amp00.conjugate()
    assert prob00 == HALF
    amp01 = interpret(conftest.bell_overlap(dg.X, 0, dg.X, 4)).entries[0][0]
    assert amp01.is_zero()
    cross = interpret(conftest.bell_overlap(dg.X, 0, dg.Z, 0)).entries[0][0]
    assert cross * cross.conjugate() == HALF * HALF
    _report(5, True, "key-distribution amplitudes: <00| = 1/sqrt2, "
            "p = 1/2, <01| = 0, cross-basis p = 1/4, all exact")


def test_criterion_6_scalar_group():
    rng = random.Random(20260803)
    for _ in range(1000):
        a = ScalarNF.make(rng.randrange(8), rng.randint(-10, 10))
        b = ScalarNF.make(rng.randrange(8), rng.randint(-10, 10))
        c = ScalarNF.make(rng.randrange(8), rng.randint(-10, 10))
        e = ScalarNF.make(0, 0)
        assert nf_mul(a, b) == nf_mul(b, a)
        assert nf_mul(nf_mul(a, b), c) == nf_mul(a, nf_mul(b, c))
        assert nf_mul(a, e) == a
        assert nf_mul(a, nf_inverse(a)) == e
        assert ring_to_nf(a.value() * b.value()) == nf_mul(a, b)
        assert ring_to_nf(interpret(nf_to_diagram(a)).entries[0][0]) == a
    _report(6, True, "1000 scalar pairs: Z8 x Z group axioms, ring "
            "homomorphism, and diagram round-trips, all exact")


def test_criterion_7_zero_normal_form():
    rng = random.Random(20260804)
    zeros = nonzeros = 0
    for trial in range(120):
        if trial % 2 == 0:
            d = _random_zero_diagram(rng)
        else:
            d = conftest.random_stabilizer_diagram(rng, steps=7)
        is_zero_oracle = interpret(d).is_zero()
        g = diagram_to_gslc(d)
        assert g.zero == is_zero_oracle
        # graphical recognition on the rendered, scalar-decomposed form
        rendered = decompose_scalar_subdiagrams(gslc_to_diagram(g))
        assert diagram_is_zero_by_segments(rendered) == is_zero_oracle
        if is_zero_oracle:
            zeros += 1
            state = gslc_to_diagram(g)
            want = zero_nf_diagram(0, len(d.inputs) + len(d.outputs))
            assert structurally_equal(state, want)
            op = dg.unbend_outputs(state, len(d.inputs))
            assert structurally_equal(
                op, zero_nf_diagram(len(d.inputs), len(d.outputs)))
        else:
            nonzeros += 1
    _report(7, zeros >= 40 and nonzeros >= 20,
            f"zero recognition matched the oracle on {zeros} zero and "
            f"{nonzeros} nonzero diagrams; zeros normalize to the unique "
            "zero form of their arity")


def test_criterion_8_clifford_t_uniqueness():
    t0 = time.time()
    corpus = []
    for n in range(11):
        for bits in itertools.product("HT", repeat=n):
            corpus.append([("H", 0) if b == "H" else ("Z", 1) for b in bits])
    rng = random.Random(20260805)
    for _ in range(500):
        corpus.append([rng.choice([("H", 0), ("Z", 1), ("Z", 2)])
                       for _ in range(rng.randint(0, 14))])

    def mkey(m):
        flat = m.flat()
        e0 = next(e for e in flat if not e.is_zero())
        c = e0.conjugate()
        return tuple((c * e).reduce() for e in flat)

    nf_to_key = {}
    key_to_nf = {}
    ident = ExactMatrix.identity(2)
    nontrivial = 0
    for word in corpus:
        nf = ct.normalize_ct(word)
        key = mkey(ct.word_matrix(word))
        nfk = (nf.pure, nf.w, nf.syllables, nf.u_clifford)
        assert nf_to_key.setdefault(nfk, key) == key
        assert key_to_nf.setdefault(key, nfk) == nfk
        if not nf.pure:
            nontrivial += 1
            assert not ct.is_identity_witness(nf)
            assert proportional_equal(ct.word_matrix(nf.word()), ident) is None
    elapsed = time.time() - t0
    _report(8, elapsed < 300,
            f"{len(corpus)} words ({nontrivial} non-Clifford): normal form "
            f"equality is exactly proportional matrix equality; no "
            f"non-trivial form is the identity (oracle and certificate); "
            f"{elapsed:.0f}s")


def _all_graphs(n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        adj = [[0] * n for _ in range(n)]
        for (i, j), b in zip(pairs, bits):
            adj[i][j] = adj[j][i] = b
        yield adj


def _layer_equal(g1: GsLc, g2: GsLc) -> bool:
    r1 = reduce_to_rgslc(g1.copy())
    r2 = reduce_to_rgslc(g2.copy())
    s1, s2 = simplify_pair(r1, r2)
    return _identical(s1, s2)


def _gslc_of(adj) -> GsLc:
    g = GsLc()
    for _ in range(len(adj)):
        g.add_vertex()
    for i in range(len(adj)):
        for j in range(i + 1, len(adj)):
            if adj[i][j]:
                g.toggle_edge(i, j)
    return g


def _diagram_equiv_under_layers(a1, a2, layers) -> bool:
    r1 = reduce_to_rgslc(_gslc_of(a1))
    for layer in layers:
        g2 = _gslc_of(a2)
        for q, c in enumerate(layer):
            g2.vops[q] = c
        r2 = reduce_to_rgslc(g2)
        s1, s2 = simplify_pair(r1, r2)
        if _identical(s1, s2):
            return True
    return False


def _witness_layer(a1, a2):
    """A local layer mapping |a2> to |a1>, from a complementation path."""
    from redgreen.checkmatrix import _key
    n = len(a1)
    start = tuple(tuple(r) for r in a2)
    goal = tuple(tuple(r) for r in a1)
    prev = {start: None}
    frontier = [start]
    while frontier and goal not in prev:
        nxt = []
        for gk in frontier:
            g = [list(r) for r in gk]
            for v in range(n):
                hk = tuple(tuple(r) for r in lc_adj(g, v))
                if hk not in prev:
                    prev[hk] = (gk, v)
                    nxt.append(hk)
        frontier = nxt
    mats = [ExactMatrix.identity(2) for _ in range(n)]
    cur = goal
    steps = []
    while prev[cur] is not None:
        gk, v = prev[cur]
        steps.append((gk, v))
        cur = gk
    for gk, v in reversed(steps):
        mats[v] = cl.SQRT_IX_DG @ mats[v]
        for u in range(n):
            if gk[v][u]:
                mats[u] = cl.SQRT_MINUS_IZ_DG @ mats[u]
    return [cl.class_of(m)[0] for m in mats]


def test_criterion_9_check_matrix_cross_oracle():
    b1 = CheckMatrix.from_rows([[1, 0], [1, 0], [0, 1], [0, 1]])
    b2 = CheckMatrix.from_rows([[1, 1], [1, 1], [0, 1], [0, 1]])
    k2 = [[0, 1], [1, 0]]
    assert is_valid(b1) and is_valid(b2)
    assert to_graph_form(b1)[0] == k2 and to_graph_form(b2)[0] == k2

    pairs = agreements = 0
    for n in (2, 3):
        graphs = list(_all_graphs(n))
        layers = list(itertools.product(range(24), repeat=n))
        for i, a1 in enumerate(graphs):
            for a2 in graphs[i:]:
                orbit = lc_orbit_equal(a1, a2)
                if orbit:
                    layer = _witness_layer(a1, a2)
                    d1 = gslc_to_diagram(_gslc_of(a1))
                    g2 = _gslc_of(a2)
                    for q, c in enumerate(layer):
                        g2.vops[q] = c
                    v = equal_stabilizer(d1, gslc_to_diagram(g2))
                    equiv = v.proportional
                else:
                    equiv = _diagram_equiv_under_layers(a1, a2, layers)
                assert orbit == equiv, (a1, a2)
                pairs += 1
                agreements += 1
    # n = 4: sampled layers plus constructed witnesses
    rng = random.Random(20260806)
    graphs4 = list(_all_graphs(4))
    sampled_layers = [tuple(rng.randrange(24) for _ in range(4))
                      for _ in range(400)]
    for _ in range(12):
        a1, a2 = rng.choice(graphs4), rng.choice(graphs4)
        orbit = lc_orbit_equal(a1, a2)
        if orbit:
            layer = _witness_layer(a1, a2)
            d1 = gslc_to_diagram(_gslc_of(a1))
            g2 = _gslc_of(a2)
            for q, c in enumerate(layer):
                g2.vops[q] = c
            equiv = equal_stabilizer(d1, gslc_to_diagram(g2)).proportional
        else:
            equiv = _diagram_equiv_under_layers(a1, a2, sampled_layers)
        assert orbit == equiv
        pairs += 1
        agreements += 1
    _report(9, agreements == pairs,
            f"Bell matrices reduce to the two-vertex graph; orbit "
            f"equivalence and layered diagram equivalence agreed on "
            f"{agreements}/{pairs} graph pairs")


def test_criterion_10_toy_theory():
    rows = audit_soundness_toy(3)
    bad = [r for r in rows if not r.ok]
    assert not bad

    rng = random.Random(20260807)
    checked = 0
    while checked < 200:
        d1 = conftest.random_stabilizer_diagram(
            rng, max_wires=3, steps=7, toy=True)
        mode = rng.randrange(3)
        if mode == 0:
            d2 = conftest.random_stabilizer_diagram(
                rng, max_wires=3, steps=7, toy=True)
            if (len(d1.inputs), len(d1.outputs)) != \
                    (len(d2.inputs), len(d2.outputs)):
                continue
        elif mode == 1:
            d2 = d1.relabel(900)
            for _ in range(rng.randint(1, 6)):
                redexes = []
                for rule in rules.ALL_RULES:
                    redexes += rules.find_redexes(d2, rule)
                if not redexes:
                    break
                try:
                    d2 = rules.apply(d2, rng.choice(redexes))
                except rules.RedexInvalid:
                    continue
        else:
            killer = Diagram(toy=True)
            killer.add_node(dg.Z, (1, 1))
            d2 = dg.compose_par(d1.relabel(900), killer)
        assert equal_toy(d1, d2) == (interpret_toy(d1) == interpret_toy(d2))
        checked += 1

    singles = [dg.spider(dg.Z, ab, 0, 1, toy=True)
               for ab in ((0, 0), (0, 1), (1, 0), (1, 1))]
    singles += [dg.spider(dg.X, ab, 0, 1, toy=True)
                for ab in ((0, 0), (1, 1))]
    for i in range(6):
        for j in range(6):
            assert equal_toy(singles[i], singles[j]) == (i == j)

    for n_in, extra_outs in ((0, 1), (1, 0), (2, 0)):
        killer = Diagram(toy=True)
        killer.add_node(dg.Z, (1, 1))
        z = dg.compose_par(dg.identity(n_in, toy=True), killer)
        for _ in range(extra_outs):
            z = dg.compose_par(z, dg.spider(dg.Z, (0, 0), 0, 1, toy=True))
        g = diagram_to_gslo(z)
        assert g.zero
        state = gslo_to_diagram(g)
        want = zero_nf_diagram(0, len(z.inputs) + len(z.outputs), toy=True)
        assert structurally_equal(state, want)
    _report(10, True, "toy rule sweep exact; 200 equality verdicts match "
            "the relation oracle; the six single-bit states are pairwise "
            "distinct; toy zeros reach the zero normal form")
