"""Canonical forms for stabilizer scalars and the scalar group law.

A nonzero stabilizer scalar has the value sqrt(2)^r * w^s and is rendered
canonically as one fixed two-node representative of the complex phase w^s
combined with the shortest encoding of the leftover sqrt(2) power (copies
of the green-red inner product for positive powers, star nodes for
negative ones).  Zero is rendered as a single green pi node.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import diagram as dg
from .diagram import Diagram
from .ring import RingScalar
from .semantics import interpret


class NotStabilizerScalar(ValueError):
    pass


class ZeroInverseError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class ScalarNF:
    """zero, or the value sqrt(2)^r * e^(i*s*pi/4)."""

    zero: bool
    s: int
    r: int

    def __post_init__(self):
        if self.zero and (self.s or self.r):
            raise ValueError("the zero form carries s = r = 0")
        if not 0 <= self.s <= 7:
            raise ValueError("phase index out of range")

    @staticmethod
    def make(s: int, r: int) -> "ScalarNF":
        return ScalarNF(False, s % 8, r)

    @staticmethod
    def make_zero() -> "ScalarNF":
        return ScalarNF(True, 0, 0)

    def value(self) -> RingScalar:
        if self.zero:
            return RingScalar.zero()
        return RingScalar.omega_power(self.s) * RingScalar.sqrt2_power(self.r)

    def __str__(self) -> str:
        if self.zero:
            return "zero"
        return f"sqrt2^{self.r} * w^{self.s}"


def ring_to_nf(x: RingScalar) -> ScalarNF:
    if x.is_zero():
        return ScalarNF.make_zero()
    unit = x.as_unit_form()
    if unit is None:
        raise NotStabilizerScalar(f"{x} is not of the form sqrt(2)^r * w^s")
    s, r = unit
    return ScalarNF.make(s, r)


def nf_mul(a: ScalarNF, b: ScalarNF) -> ScalarNF:
    if a.zero or b.zero:
        return ScalarNF.make_zero()
    return ScalarNF.make(a.s + b.s, a.r + b.r)


def nf_inverse(a: ScalarNF) -> ScalarNF:
    if a.zero:
        raise ZeroInverseError("the zero scalar has no inverse")
    return ScalarNF.make(-a.s, -a.r)


# One two-node representative per complex phase w^s (s = 1..7), stored as
# (green phase, red phase) pairs of connected node pairs; each carries its
# own modulus sqrt(2)^m which the rendering compensates for.
_PHASE_SEGMENTS: dict[int, list[tuple[int, int]]] = {
    0: [],
    1: [(2, 2)],
    2: [(2, 4)],
    3: [(2, 4), (2, 2)],
    4: [(4, 4)],
    5: [(6, 4), (6, 6)],
    6: [(6, 4)],
    7: [(6, 6)],
}
_PHASE_MODULUS = {0: 0, 1: 2, 2: 1, 3: 3, 4: 1, 5: 3, 6: 1, 7: 2}


def _scalar_pair(d: Diagram, green_phase: int, red_phase: int) -> None:
    g = d.add_node(dg.Z, green_phase)
    r = d.add_node(dg.X, red_phase)
    d.add_edge(g, r)


def nf_to_diagram(nf: ScalarNF) -> Diagram:
    d = Diagram()
    if nf.zero:
        d.add_node(dg.Z, 4)
        return d
    for gp, rp in _PHASE_SEGMENTS[nf.s]:
        _scalar_pair(d, gp, rp)
    t = nf.r - _PHASE_MODULUS[nf.s]
    if t > 0:
        for _ in range(t):
            _scalar_pair(d, 0, 0)
    elif t < 0:
        if t % 2 == 0:
            for _ in range(-t // 2):
                d.add_node(dg.STAR)
        else:
            _scalar_pair(d, 0, 0)
            for _ in range((1 - t) // 2):
                d.add_node(dg.STAR)
    return d


def scalar_diagram(value: RingScalar) -> Diagram:
    """Canonical diagram for any stabilizer-scalar ring value."""
    return nf_to_diagram(ring_to_nf(value))


def is_zero_segment(d: Diagram, comp: set[int]) -> bool:
    """Zero test for a scalar segment of at most two nodes.

    The zero segments are a lone pi spider of either colour, and the
    green/red pairs with opposite pi/2 phases.
    """
    nodes = sorted(comp)
    if len(nodes) == 1:
        kind, phase = d.nodes[nodes[0]]
        return kind in dg.SPIDER_KINDS and phase == 4
    if len(nodes) == 2:
        (k1, p1), (k2, p2) = d.nodes[nodes[0]], d.nodes[nodes[1]]
        if {k1, k2} != {dg.Z, dg.X}:
            return False
        if k1 == dg.X:
            (k1, p1), (k2, p2) = (k2, p2), (k1, p1)
        return (p1, p2) in ((2, 6), (6, 2))
    return False


def decompose_scalar_subdiagrams(d: Diagram) -> Diagram:
    """Rewrite every scalar component into canonical <= 2-node segments.

    The value of each component is computed exactly and re-rendered from
    its normal form; the non-scalar part is untouched.
    """
    comps = d.scalar_component_nodes()
    if not comps:
        return d.copy()
    out = d.copy()
    value = RingScalar.one()
    drop: set[int] = set()
    for comp in comps:
        drop |= comp
        sub = Diagram(toy=d.toy)
        sub.nodes = {v: d.nodes[v] for v in comp}
        sub.edges = [e for e in d.edges if e[0] in comp and e[1] in comp]
        value = value * interpret(sub).entries[0][0]
    out.nodes = {v: nk for v, nk in out.nodes.items() if v not in drop}
    out.edges = [e for e in out.edges if e[0] not in drop and e[1] not in drop]
    rendered = scalar_diagram(value)
    return dg.compose_par(out, rendered)


def diagram_is_zero_by_segments(d: Diagram) -> bool:
    """Zero recognition on a diagram whose scalars are decomposed."""
    return any(is_zero_segment(d, comp) for comp in d.scalar_component_nodes())


def zero_nf_diagram(n_in: int, n_out: int, toy: bool = False) -> Diagram:
    """The unique zero diagram: bare green caps and states plus one zero
    scalar (green pi, or the 11 phase in the toy calculus)."""
    if n_in < 0 or n_out < 0:
        raise ValueError("arities must be non-negative")
    d = Diagram(toy=toy)
    for _ in range(n_in):
        b = d.add_boundary(output=False)
        v = d.add_node(dg.Z, (0, 0) if toy else 0)
        d.add_edge(b, v)
    for _ in range(n_out):
        b = d.add_boundary(output=True)
        v = d.add_node(dg.Z, (0, 0) if toy else 0)
        d.add_edge(b, v)
    d.add_node(dg.Z, (1, 1) if toy else 4)
    return d
