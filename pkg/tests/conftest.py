import random

import pytest

from redgreen import diagram as dg


def _czlayer(k, wires):
    czd = dg.Diagram()
    i0 = czd.add_boundary(False)
    i1 = czd.add_boundary(False)
    o0 = czd.add_boundary(True)
    o1 = czd.add_boundary(True)
    a = czd.add_node(dg.Z, 0)
    b = czd.add_node(dg.Z, 0)
    h = czd.add_node(dg.H)
    czd.add_edge(i0, a)
    czd.add_edge(a, o0)
    czd.add_edge(i1, b)
    czd.add_edge(b, o1)
    czd.add_edge(a, h)
    czd.add_edge(h, b)
    ip = dg.Diagram()
    gn = ip.add_node(dg.Z, 0)
    rn = ip.add_node(dg.X, 0)
    ip.add_edge(gn, rn)
    layer = dg.compose_par(dg.identity(k), czd)
    layer = dg.compose_par(layer, dg.identity(wires - k - 2))
    return dg.compose_par(layer, ip)


def random_stabilizer_diagram(rng: random.Random, max_wires: int = 4,
                              steps: int = 10, toy: bool = False):
    """A random diagram built as a layered circuit with caps/cups/scalars."""
    def rphase():
        if toy:
            return (rng.randrange(2), rng.randrange(2))
        return rng.randrange(0, 8, 2)

    def colour():
        return rng.choice([dg.Z, dg.X])

    d = dg.identity(rng.randint(0, max_wires), toy=toy)
    wires = len(d.outputs)
    for _ in range(steps):
        ops = []
        if wires < max_wires:
            ops += ["state", "cup"]
        if wires >= 1:
            ops += ["phase", "h", "effect"]
            if wires < max_wires:
                ops.append("split")
        if wires >= 2:
            ops += ["merge", "cap"]
            if not toy:
                ops.append("cz")
        ops.append("scalar")
        if not toy:
            ops.append("star")
        op = rng.choice(ops)
        if op == "state":
            layer = dg.compose_par(dg.identity(wires, toy),
                                   dg.spider(colour(), rphase(), 0, 1, toy))
        elif op == "cup":
            layer = dg.compose_par(dg.identity(wires, toy), dg.cup(toy))
        elif op == "phase":
            k = rng.randrange(wires)
            layer = dg.compose_par(
                dg.compose_par(dg.identity(k, toy),
                               dg.spider(colour(), rphase(), 1, 1, toy)),
                dg.identity(wires - k - 1, toy))
        elif op == "h":
            k = rng.randrange(wires)
            layer = dg.compose_par(
                dg.compose_par(dg.identity(k, toy), dg.hadamard(toy)),
                dg.identity(wires - k - 1, toy))
        elif op == "effect":
            k = rng.randrange(wires)
            layer = dg.compose_par(
                dg.compose_par(dg.identity(k, toy),
                               dg.spider(colour(), rphase(), 1, 0, toy)),
                dg.identity(wires - k - 1, toy))
        elif op == "split":
            k = rng.randrange(wires)
            layer = dg.compose_par(
                dg.compose_par(dg.identity(k, toy),
                               dg.spider(colour(), rphase(), 1, 2, toy)),
                dg.identity(wires - k - 1, toy))
        elif op == "merge":
            k = rng.randrange(wires - 1)
            layer = dg.compose_par(
                dg.compose_par(dg.identity(k, toy),
                               dg.spider(colour(), rphase(), 2, 1, toy)),
                dg.identity(wires - k - 2, toy))
        elif op == "cap":
            k = rng.randrange(wires - 1)
            layer = dg.compose_par(
                dg.compose_par(dg.identity(k, toy), dg.cap(toy)),
                dg.identity(wires - k - 2, toy))
        elif op == "cz":
            layer = _czlayer(rng.randrange(wires - 1), wires)
        elif op == "star":
            layer = dg.compose_par(dg.identity(wires), dg.star_scalar())
        else:
            sc = dg.Diagram(toy=toy)
            sc.add_node(colour(), rphase())
            layer = dg.compose_par(dg.identity(wires, toy), sc)
        d = dg.compose_seq(d, layer)
        wires = len(d.outputs)
    return d


@pytest.fixture
def rng():
    return random.Random(20260809)


def ip_pair(toy=False):
    d = dg.Diagram(toy=toy)
    g = d.add_node(dg.Z, (0, 0) if toy else 0)
    r = d.add_node(dg.X, (0, 0) if toy else 0)
    d.add_edge(g, r)
    return d


def bare_cnot():
    d = dg.Diagram()
    i0 = d.add_boundary(False)
    i1 = d.add_boundary(False)
    o0 = d.add_boundary(True)
    o1 = d.add_boundary(True)
    g = d.add_node(dg.Z, 0)
    r = d.add_node(dg.X, 0)
    d.add_edge(i0, g)
    d.add_edge(g, o0)
    d.add_edge(i1, r)
    d.add_edge(r, o1)
    d.add_edge(g, r)
    return d


def cz_decompositions():
    """The two controlled-Z circuit translations: via phase gates with two
    normalizers, and via Hadamards with one."""
    def phase_layer(k0, k1):
        lhs = dg.spider(dg.Z, k0, 1, 1) if k0 is not None else dg.wire()
        rhs = dg.spider(dg.Z, k1, 1, 1) if k1 is not None else dg.wire()
        return dg.compose_par(lhs, rhs)

    cz_a = bare_cnot()
    cz_a = dg.compose_seq(cz_a, phase_layer(None, 6))
    cz_a = dg.compose_seq(cz_a, bare_cnot())
    cz_a = dg.compose_seq(cz_a, phase_layer(2, 2))
    cz_a = dg.compose_par(dg.compose_par(cz_a, ip_pair()), ip_pair())

    hlayer = dg.compose_par(dg.wire(), dg.hadamard())
    cz_b = dg.compose_seq(hlayer, dg.compose_seq(bare_cnot(), hlayer))
    cz_b = dg.compose_par(cz_b, ip_pair())
    return cz_a, cz_b


def bell_overlap(eff_a_kind, eff_a_phase, eff_b_kind, eff_b_phase):
    """The normalized Bell state composed with two normalized effects."""
    d = dg.compose_par(dg.compose_par(dg.cup(), dg.star_scalar()), ip_pair())
    effs = dg.compose_par(
        _normalized_effect(eff_a_kind, eff_a_phase),
        _normalized_effect(eff_b_kind, eff_b_phase))
    return dg.compose_seq(d, effs)


def _normalized_effect(kind, phase):
    eff = dg.compose_par(dg.compose_par(dg.spider(kind, phase, 1, 0),
                                        dg.star_scalar()), ip_pair())
    return eff
