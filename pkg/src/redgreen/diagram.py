"""Open multigraphs of phased spiders, Hadamard boxes and star nodes.

A diagram is an undirected multigraph.  Node ids and boundary ids share one
integer id space; boundary ids appear in ``inputs``/``outputs`` and occur
exactly once as an edge endpoint.  Edges are stored as a list of unordered
id pairs; repeated pairs encode parallel edges and ``(v, v)`` encodes a
self-loop.  An edge between two boundary ids is a bare wire (and a cup or
cap, depending on which boundary lists the ids sit in).

Spiders carry a phase: an integer 0..7 in units of pi/4 for the quantum
calculus, or a pair of bits for the toy calculus.  ``H`` (degree exactly 2)
and ``STAR`` (degree 0) carry no phase; ``HS`` is the toy counterpart of H.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

Z = "Z"
X = "X"
H = "H"
STAR = "STAR"
HS = "HS"

SPIDER_KINDS = (Z, X)
ZX_KINDS = (Z, X, H, STAR)
TOY_KINDS = (Z, X, HS)

STABILIZER = "stabilizer"
CLIFFORD_T = "clifford+t"


class DiagramError(ValueError):
    pass


class ArityMismatch(DiagramError):
    pass


class FragmentViolation(DiagramError):
    pass


def _norm_edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


@dataclass
class Diagram:
    """Immutable by convention: operations return new diagrams."""

    nodes: dict[int, tuple[str, object]] = field(default_factory=dict)
    edges: list[tuple[int, int]] = field(default_factory=list)
    inputs: list[int] = field(default_factory=list)
    outputs: list[int] = field(default_factory=list)
    toy: bool = False

    # -- construction -------------------------------------------------

    @staticmethod
    def empty(toy: bool = False) -> "Diagram":
        return Diagram(toy=toy)

    def copy(self) -> "Diagram":
        return Diagram(dict(self.nodes), list(self.edges), list(self.inputs),
                       list(self.outputs), self.toy)

    def fresh_id(self) -> int:
        used = set(self.nodes) | set(self.inputs) | set(self.outputs)
        for a, b in self.edges:
            used.add(a)
            used.add(b)
        return max(used, default=-1) + 1

    def add_node(self, kind: str, phase: object = None) -> int:
        v = self.fresh_id()
        if kind in SPIDER_KINDS and phase is None:
            phase = (0, 0) if self.toy else 0
        if kind in SPIDER_KINDS:
            phase = self._norm_phase(phase)
        elif phase is not None:
            raise DiagramError(f"{kind} nodes carry no phase")
        self.nodes[v] = (kind, phase)
        return v

    def _norm_phase(self, phase: object) -> object:
        if self.toy:
            a, b = phase  # type: ignore[misc]
            return (int(a) & 1, int(b) & 1)
        return int(phase) % 8  # type: ignore[call-overload]

    def add_edge(self, a: int, b: int) -> None:
        self.edges.append(_norm_edge(a, b))

    def remove_edge(self, a: int, b: int) -> None:
        self.edges.remove(_norm_edge(a, b))

    def add_boundary(self, output: bool = True) -> int:
        v = self.fresh_id()
        (self.outputs if output else self.inputs).append(v)
        return v

    # -- queries -------------------------------------------------------

    def boundary_ids(self) -> set[int]:
        return set(self.inputs) | set(self.outputs)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def incident(self, v: int) -> list[tuple[int, int]]:
        return [e for e in self.edges if v in e]

    def neighbours(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out

    def kind(self, v: int) -> str:
        return self.nodes[v][0]

    def phase(self, v: int):
        return self.nodes[v][1]

    def set_phase(self, v: int, phase) -> None:
        self.nodes[v] = (self.nodes[v][0], self._norm_phase(phase))

    def validate(self) -> None:
        bids = self.boundary_ids()
        if len(bids) != len(self.inputs) + len(self.outputs):
            raise DiagramError("duplicate boundary id")
        if bids & set(self.nodes):
            raise DiagramError("boundary id collides with a node id")
        counts: dict[int, int] = {}
        for a, b in self.edges:
            for v in (a, b):
                if v not in self.nodes and v not in bids:
                    raise DiagramError(f"edge endpoint {v} is not declared")
                counts[v] = counts.get(v, 0) + 1
        for b in bids:
            if counts.get(b, 0) != 1:
                raise DiagramError(f"boundary {b} must have exactly one edge")
        for v, (kind, _) in self.nodes.items():
            if kind in (H, HS) and counts.get(v, 0) != 2:
                raise DiagramError(f"{kind} node {v} must have degree 2")
            if kind == STAR and counts.get(v, 0) != 0:
                raise DiagramError("STAR nodes have degree 0")
            if kind == STAR and self.toy:
                raise DiagramError("the toy calculus has no STAR node")
            if kind == HS and not self.toy:
                raise DiagramError("HS is a toy-calculus node")
            if kind == H and self.toy:
                raise DiagramError("H is a quantum-calculus node")

    def fragment(self) -> str:
        """STABILIZER when all phases are even multiples of pi/4."""
        if self.toy:
            raise DiagramError("fragments apply to the quantum calculus only")
        for kind, phase in self.nodes.values():
            if kind in SPIDER_KINDS and phase % 2 == 1:
                return CLIFFORD_T
        return STABILIZER

    def require_stabilizer(self) -> None:
        if self.fragment() != STABILIZER:
            raise FragmentViolation("diagram contains odd (pi/4) phases")

    def scalar_component_nodes(self) -> list[set[int]]:
        """Connected components of nodes not linked to any boundary."""
        adj: dict[int, set[int]] = {v: set() for v in self.nodes}
        for v in self.boundary_ids():
            adj[v] = set()
        for a, b in self.edges:
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        seen: set[int] = set()
        comps = []
        for start in sorted(self.nodes):
            if start in seen:
                continue
            comp = {start}
            queue = [start]
            seen.add(start)
            while queue:
                v = queue.pop()
                for u in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        comp.add(u)
                        queue.append(u)
            if not comp & self.boundary_ids():
                comps.append({v for v in comp if v in self.nodes})
        return comps

    # -- relabeling ----------------------------------------------------

    def relabel(self, offset: int) -> "Diagram":
        m = {v: v + offset for v in self.nodes}
        for b in self.boundary_ids():
            m[b] = b + offset
        return Diagram(
            {m[v]: nk for v, nk in self.nodes.items()},
            [_norm_edge(m[a], m[b]) for a, b in self.edges],
            [m[v] for v in self.inputs],
            [m[v] for v in self.outputs],
            self.toy,
        )

    def compact(self) -> "Diagram":
        """Renumber ids densely (deterministic, sorted order)."""
        ids = sorted(set(self.nodes) | self.boundary_ids())
        m = {v: i for i, v in enumerate(ids)}
        return Diagram(
            {m[v]: nk for v, nk in self.nodes.items()},
            sorted(_norm_edge(m[a], m[b]) for a, b in self.edges),
            [m[v] for v in self.inputs],
            [m[v] for v in self.outputs],
            self.toy,
        )


# -- generators ---------------------------------------------------------


def wire(toy: bool = False) -> Diagram:
    d = Diagram(toy=toy)
    i = d.add_boundary(output=False)
    o = d.add_boundary(output=True)
    d.add_edge(i, o)
    return d


def identity(n: int, toy: bool = False) -> Diagram:
    out = Diagram(toy=toy)
    for _ in range(n):
        out = compose_par(out, wire(toy))
    return out


def cup(toy: bool = False) -> Diagram:
    d = Diagram(toy=toy)
    a = d.add_boundary(output=True)
    b = d.add_boundary(output=True)
    d.add_edge(a, b)
    return d


def cap(toy: bool = False) -> Diagram:
    d = Diagram(toy=toy)
    a = d.add_boundary(output=False)
    b = d.add_boundary(output=False)
    d.add_edge(a, b)
    return d


def swap(toy: bool = False) -> Diagram:
    d = Diagram(toy=toy)
    i0 = d.add_boundary(output=False)
    i1 = d.add_boundary(output=False)
    o0 = d.add_boundary(output=True)
    o1 = d.add_boundary(output=True)
    d.add_edge(i0, o1)
    d.add_edge(i1, o0)
    return d


def spider(kind: str, phase, n_in: int, n_out: int, toy: bool = False) -> Diagram:
    d = Diagram(toy=toy)
    v = d.add_node(kind, phase)
    for _ in range(n_in):
        b = d.add_boundary(output=False)
        d.add_edge(b, v)
    for _ in range(n_out):
        b = d.add_boundary(output=True)
        d.add_edge(b, v)
    return d


def hadamard(toy: bool = False) -> Diagram:
    d = Diagram(toy=toy)
    v = d.add_node(HS if toy else H)
    i = d.add_boundary(output=False)
    o = d.add_boundary(output=True)
    d.add_edge(i, v)
    d.add_edge(v, o)
    return d


def star_scalar() -> Diagram:
    d = Diagram()
    d.add_node(STAR)
    return d


# -- composition ----------------------------------------------------------


def compose_par(d1: Diagram, d2: Diagram) -> Diagram:
    if d1.toy != d2.toy:
        raise DiagramError("cannot mix quantum and toy diagrams")
    off = d1.fresh_id()
    d2r = d2.relabel(off)
    return Diagram(
        {**d1.nodes, **d2r.nodes},
        list(d1.edges) + list(d2r.edges),
        list(d1.inputs) + list(d2r.inputs),
        list(d1.outputs) + list(d2r.outputs),
        d1.toy,
    )


def compose_seq(d1: Diagram, d2: Diagram) -> Diagram:
    """Plug d1's outputs into d2's inputs, in order."""
    if d1.toy != d2.toy:
        raise DiagramError("cannot mix quantum and toy diagrams")
    if len(d1.outputs) != len(d2.inputs):
        raise ArityMismatch(
            f"cannot compose: {len(d1.outputs)} outputs vs {len(d2.inputs)} inputs")
    off = d1.fresh_id()
    d2r = d2.relabel(off)
    out = Diagram(
        {**d1.nodes, **d2r.nodes},
        list(d1.edges) + list(d2r.edges),
        list(d1.inputs),
        list(d2r.outputs),
        d1.toy,
    )
    # Each fused pair becomes a degree-2 junction; splice the junctions away.
    junctions = set(d1.outputs) | set(d2r.inputs)
    for o, i in zip(d1.outputs, d2r.inputs):
        out.edges.append(_norm_edge(o, i))
    pending = sorted(junctions, reverse=True)
    while pending:
        j = pending.pop()
        if j not in junctions:
            continue
        junctions.discard(j)
        inc = [k for k, e in enumerate(out.edges) if j in e]
        if len(inc) == 1:
            # a closed loop consisting of junctions only: it carries the
            # value 2, realized here as a phase-0 spider with a self-loop
            if out.edges[inc[0]] != (j, j):
                raise DiagramError("junction wiring is inconsistent")
            out.edges.pop(inc[0])
            v = out.add_node(Z, (0, 0) if out.toy else 0)
            out.edges.append((v, v))
            continue
        k1, k2 = inc
        (a1, b1), (a2, b2) = out.edges[k1], out.edges[k2]
        x = a1 if b1 == j else b1
        y = a2 if b2 == j else b2
        for k in sorted((k1, k2), reverse=True):
            out.edges.pop(k)
        out.edges.append(_norm_edge(x, y))
    return out


def adjoint(d: Diagram) -> Diagram:
    out = d.copy()
    out.inputs, out.outputs = list(d.outputs), list(d.inputs)
    for v, (kind, phase) in d.nodes.items():
        if kind in SPIDER_KINDS:
            if d.toy:
                out.nodes[v] = (kind, phase)  # every toy phase is self-inverse
            else:
                out.nodes[v] = (kind, (8 - phase) % 8)
    return out


def bend_inputs(d: Diagram) -> Diagram:
    """Turn every input into an output (map-state duality).

    The former inputs are appended in reversed order ahead of the original
    outputs, so that nested caps recover the original diagram.
    """
    out = d.copy()
    out.inputs = []
    out.outputs = list(reversed(d.inputs)) + list(d.outputs)
    return out


def unbend_outputs(d: Diagram, n: int) -> Diagram:
    """Inverse of ``bend_inputs``: the first n outputs become inputs again."""
    if len(d.outputs) < n:
        raise ArityMismatch("not enough outputs to bend back")
    out = d.copy()
    out.inputs = list(reversed(d.outputs[:n]))
    out.outputs = list(d.outputs[n:])
    return out


# -- structural equality --------------------------------------------------


def structurally_equal(d1: Diagram, d2: Diagram) -> bool:
    """Boundary-order-preserving isomorphism matching kinds and phases."""
    if d1.toy != d2.toy:
        return False
    if len(d1.inputs) != len(d2.inputs) or len(d1.outputs) != len(d2.outputs):
        return False
    if len(d1.nodes) != len(d2.nodes) or len(d1.edges) != len(d2.edges):
        return False
    labels1 = sorted((k, str(p)) for k, p in d1.nodes.values())
    labels2 = sorted((k, str(p)) for k, p in d2.nodes.values())
    if labels1 != labels2:
        return False

    m: dict[int, int] = {}
    for a, b in zip(d1.inputs + d1.outputs, d2.inputs + d2.outputs):
        m[a] = b

    def loops(d: Diagram, v: int) -> int:
        return sum(1 for e in d.edges if e == (v, v))

    def adj_counts(d: Diagram, v: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in d.edges:
            if a == b:
                continue
            if a == v:
                out[b] = out.get(b, 0) + 1
            elif b == v:
                out[a] = out.get(a, 0) + 1
        return out

    n1 = sorted(d1.nodes)
    n2 = sorted(d2.nodes)

    def compatible(v: int, w: int) -> bool:
        if d1.nodes[v] != d2.nodes[w]:
            return False
        if loops(d1, v) != loops(d2, w):
            return False
        c1 = adj_counts(d1, v)
        c2 = adj_counts(d2, w)
        if sorted(c1.values()) != sorted(c2.values()):
            return False
        for u, k in c1.items():
            if u in m and c2.get(m[u], 0) != k:
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(n1):
            # verify the full edge multiset
            e1 = sorted(_norm_edge(m[a], m[b]) for a, b in d1.edges)
            e2 = sorted(_norm_edge(a, b) for a, b in d2.edges)
            return e1 == e2
        v = n1[i]
        for w in n2:
            if w in m.values():
                continue
            if not compatible(v, w):
                continue
            m[v] = w
            if backtrack(i + 1):
                return True
            del m[v]
        return False

    return backtrack(0)


# -- decomposition into basic generators ----------------------------------


def decompose_to_generators(d: Diagram) -> Diagram:
    """Rewrite so every spider is a phase shift or a 0-phase Z spider with
    at most 3 legs; X spiders are eliminated by colour change.

    Preserves the interpretation exactly.  Self-loops are removed first
    (spider loops drop; an H box closed on itself is the zero scalar).
    """
    out = Diagram(toy=d.toy)
    out.inputs = list(d.inputs)
    out.outputs = list(d.outputs)
    used = set(d.nodes) | d.boundary_ids()
    counter = itertools.count(max(used, default=-1) + 1)

    def new_node(kind: str, phase=None) -> int:
        v = next(counter)
        if kind in SPIDER_KINDS and phase is None:
            phase = (0, 0) if d.toy else 0
        out.nodes[v] = (kind, phase)
        return v

    zero_phase = (0, 0) if d.toy else 0
    pi_phase = (1, 1) if d.toy else 4
    had_kind = HS if d.toy else H

    def is_zero_phase(p) -> bool:
        return p == zero_phase

    # ports: for every (edge index, side) where a node occurs, the
    # decomposition produces a replacement endpoint id.
    port_map: dict[tuple[int, int], int] = {}

    for idx, (a, b) in enumerate(d.edges):
        if a == b and a in d.nodes:
            kind, phase = d.nodes[a]
            if kind in SPIDER_KINDS:
                continue  # spider self-loops drop (loop rule)
            # a closed quantum H box is the zero scalar; the toy one
            # disappears (its relation has fixed points)
            if not d.toy:
                new_node(Z, pi_phase)
            port_map[(idx, 0)] = port_map[(idx, 1)] = -1

    def spider_tree(phase, legs: list[tuple[int, int]], kind_out: str) -> None:
        """Emit a tree of small Z spiders covering the given ports."""
        deg = len(legs)
        colourised = kind_out == X
        def attach(port: tuple[int, int], node: int) -> None:
            if colourised:
                hbox = new_node(had_kind)
                out.add_edge(hbox, node)
                port_map[port] = hbox
            else:
                port_map[port] = node

        if deg == 0:
            if is_zero_phase(phase):
                sv = new_node(Z, zero_phase)
                ev = new_node(Z, zero_phase)
                out.add_edge(sv, ev)
            else:
                sv = new_node(Z, zero_phase)
                pv = new_node(Z, phase)
                ev = new_node(Z, zero_phase)
                out.add_edge(sv, pv)
                out.add_edge(pv, ev)
            return
        if deg == 1:
            tip = new_node(Z, zero_phase)
            if is_zero_phase(phase):
                attach(legs[0], tip)
            else:
                pv = new_node(Z, phase)
                out.add_edge(tip, pv)
                attach(legs[0], pv)
            return
        if deg == 2:
            pv = new_node(Z, phase)
            attach(legs[0], pv)
            attach(legs[1], pv)
            return
        chain = [new_node(Z, zero_phase) for _ in range(deg - 2)]
        for u, v in zip(chain, chain[1:]):
            out.add_edge(u, v)
        # Free slots: two on each end of the chain, one on each middle node
        # (a single chain node exposes three).
        if len(chain) == 1:
            slots = [chain[0]] * 3
        else:
            slots = [chain[0], chain[0]] + chain[1:-1] + [chain[-1], chain[-1]]
        rest = legs
        if not is_zero_phase(phase):
            pv = new_node(Z, phase)
            out.add_edge(pv, slots[0])
            attach(legs[0], pv)
            slots = slots[1:]
            rest = legs[1:]
        for leg, slot in zip(rest, slots):
            attach(leg, slot)

    for v in sorted(d.nodes):
        kind, phase = d.nodes[v]
        ports = []
        for idx, (a, b) in enumerate(d.edges):
            if a == b:
                continue
            if a == v:
                ports.append((idx, 0))
            if b == v:
                ports.append((idx, 1))
        if kind in SPIDER_KINDS:
            spider_tree(phase, ports, kind)
        elif kind in (H, HS):
            if ports:  # a box closed on itself became a scalar already
                nv = new_node(kind)
                for p in ports:
                    port_map[p] = nv
        elif kind == STAR:
            new_node(STAR)

    for idx, (a, b) in enumerate(d.edges):
        if a == b:
            continue
        ea = port_map.get((idx, 0), a if a in d.boundary_ids() else None)
        eb = port_map.get((idx, 1), b if b in d.boundary_ids() else None)
        if ea is None or eb is None:
            raise DiagramError("decomposition lost an edge endpoint")
        out.add_edge(ea, eb)
    out.validate()
    return out
