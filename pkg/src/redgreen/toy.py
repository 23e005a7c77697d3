"""The red-green calculus for the toy bit theory: relation semantics.

A toy bit has four ontic states, written 1..4 externally and 0..3
internally; state s decomposes as (h, l) with s = 2h + l.  Diagrams reuse
the shared open-graph type with toy=True: spiders carry two-bit phases and
the box node HS swaps h and l.  The interpretation of a diagram is a
relation, stored as a boolean matrix over 4^outputs x 4^inputs.

A green spider with phase (a, b) relates exactly the leg assignments that
share one h value and whose l values sum to a + (a+b)h mod 2; red spiders
are green ones conjugated by HS on every leg.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import diagram as dg
from . import rules
from .diagram import Diagram

IV = (0, 1, 2, 3)

HS_PERM = (0, 2, 1, 3)
GREEN_PHASE_PERMS = {
    (0, 0): (0, 1, 2, 3),
    (0, 1): (0, 1, 3, 2),
    (1, 0): (1, 0, 2, 3),
    (1, 1): (1, 0, 3, 2),
}

TOY_RULES = (
    rules.RuleId.SPIDER, rules.RuleId.LOOP, rules.RuleId.CUP,
    rules.RuleId.BIALGEBRA, rules.RuleId.COPY, rules.RuleId.PI_COPY,
    rules.RuleId.PI_COMMUTE, rules.RuleId.COLOUR_CHANGE, rules.RuleId.EULER,
    rules.RuleId.TOY_SCALAR, rules.RuleId.ZERO,
    rules.RuleId.IDENTITY, rules.RuleId.HADAMARD_SELF_INVERSE,
    rules.RuleId.HOPF,
)


def hl(s: int) -> tuple[int, int]:
    return divmod(s, 2)


def mk(h: int, l: int) -> int:
    return 2 * h + l


@dataclass(frozen=True)
class ToyRelation:
    n_in: int
    n_out: int
    pairs: frozenset  # (row, col) with row over outputs, col over inputs

    @property
    def rows(self) -> int:
        return 4 ** self.n_out

    @property
    def cols(self) -> int:
        return 4 ** self.n_in

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def contains(self, row: int, col: int) -> bool:
        return (row, col) in self.pairs

    def grid(self) -> list[list[int]]:
        return [[1 if (r, c) in self.pairs else 0 for c in range(self.cols)]
                for r in range(self.rows)]

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in row) for row in self.grid())


def _spider_entries(kind: str, phase: tuple[int, int], deg: int):
    """Assignments of a toy spider's legs; one tuple per allowed state."""
    a, b = phase
    out = []
    if deg == 0:
        for h in (0, 1):
            if (a ^ ((a ^ b) & h)) == 0:
                out.append(())
                break
        return out
    for h in (0, 1):
        want = a ^ ((a ^ b) & h)
        for ls in itertools.product((0, 1), repeat=deg):
            if sum(ls) % 2 == want:
                states = tuple(mk(h, l) for l in ls)
                if kind == dg.X:
                    states = tuple(HS_PERM[s] for s in states)
                out.append(states)
    return out


def _node_entries(d: Diagram, v: int, deg: int):
    kind, phase = d.nodes[v]
    if kind in dg.SPIDER_KINDS:
        return _spider_entries(kind, phase, deg)
    if kind == dg.HS:
        return [(s, HS_PERM[s]) for s in IV]
    raise dg.DiagramError(f"cannot interpret toy node {kind}")


def interpret_toy(d: Diagram) -> ToyRelation:
    """Relational contraction over four-valued wires."""
    if not d.toy:
        raise dg.DiagramError("expected a toy diagram")
    d.validate()
    boundary = list(d.inputs) + list(d.outputs)
    slot_edge = [-1] * len(boundary)
    node_legs: dict[int, list[int]] = {v: [] for v in d.nodes}
    for idx, (a, b) in enumerate(d.edges):
        for v in (a, b):
            if v in node_legs:
                node_legs[v].append(idx)
        for s, bid in enumerate(boundary):
            if a == bid or b == bid:
                slot_edge[s] = idx

    tensors = []
    for v in sorted(d.nodes):
        legs = tuple(node_legs[v])
        entries = set(_node_entries(d, v, len(legs)))
        legs, entries = _trace_repeated(legs, entries)
        tensors.append((legs, entries))
    bids = d.boundary_ids()
    for idx, (a, b) in enumerate(d.edges):
        if a in bids and b in bids:
            tensors.append(((idx,), {(s,) for s in IV}))

    while True:
        best = None
        for i in range(len(tensors)):
            for k in range(i + 1, len(tensors)):
                shared = set(tensors[i][0]) & set(tensors[k][0])
                if not shared:
                    continue
                rank = len(set(tensors[i][0]) | set(tensors[k][0])) - len(shared)
                if best is None or rank < best[0]:
                    best = (rank, i, k)
        if best is None:
            break
        _, i, k = best
        merged = _join_pair(tensors[i], tensors[k])
        tensors = [t for idx, t in enumerate(tensors) if idx not in (i, k)]
        tensors.append(_trace_repeated(*merged))

    legs: tuple[int, ...] = ()
    entries = {()}
    for tl, te in tensors:
        if not te:
            entries = set()
        entries = {e1 + e2 for e1 in entries for e2 in te}
        legs = legs + tl
    pos = {l: i for i, l in enumerate(legs)}
    pairs = set()
    n_in, n_out = len(d.inputs), len(d.outputs)
    for e in entries:
        col = 0
        for s in range(n_in):
            col = col * 4 + e[pos[slot_edge[s]]]
        row = 0
        for s in range(n_in, n_in + n_out):
            row = row * 4 + e[pos[slot_edge[s]]]
        pairs.add((row, col))
    return ToyRelation(n_in, n_out, frozenset(pairs))


def _trace_repeated(legs, entries):
    seen: dict[int, int] = {}
    dup = None
    for i, leg in enumerate(legs):
        if leg in seen:
            dup = (seen[leg], i)
            break
        seen[leg] = i
    if dup is None:
        return legs, set(entries)
    i, k = dup
    new_legs = tuple(l for idx, l in enumerate(legs) if idx not in (i, k))
    new_entries = {tuple(x for idx, x in enumerate(e) if idx not in (i, k))
                   for e in entries if e[i] == e[k]}
    return _trace_repeated(new_legs, new_entries)


def _join_pair(t1, t2):
    legs1, e1 = t1
    legs2, e2 = t2
    shared = [l for l in legs1 if l in legs2]
    keep1 = [i for i, l in enumerate(legs1) if l not in shared]
    keep2 = [i for i, l in enumerate(legs2) if l not in shared]
    pos1 = {l: i for i, l in enumerate(legs1)}
    pos2 = {l: i for i, l in enumerate(legs2)}
    out_legs = tuple(legs1[i] for i in keep1) + tuple(legs2[i] for i in keep2)
    buckets: dict[tuple, list[tuple]] = {}
    for e in e2:
        key = tuple(e[pos2[l]] for l in shared)
        buckets.setdefault(key, []).append(tuple(e[i] for i in keep2))
    out = set()
    for e in e1:
        key = tuple(e[pos1[l]] for l in shared)
        rest1 = tuple(e[i] for i in keep1)
        for rest2 in buckets.get(key, ()):
            out.add(rest1 + rest2)
    return out_legs, out


def relations_equal(d1: Diagram, d2: Diagram) -> bool:
    if len(d1.inputs) != len(d2.inputs) or len(d1.outputs) != len(d2.outputs):
        return False
    return interpret_toy(d1) == interpret_toy(d2)


# -- rewriting ----------------------------------------------------------------


def find_redexes_toy(d: Diagram, rule: rules.RuleId,
                     direction: rules.Direction | None = None):
    if not d.toy:
        raise dg.DiagramError("expected a toy diagram")
    return rules.find_redexes(d, rule, direction)


def apply_toy(d: Diagram, redex: rules.Redex) -> Diagram:
    if not d.toy:
        raise dg.DiagramError("expected a toy diagram")
    return rules.apply(d, redex)


def audit_soundness_toy(max_arity: int) -> list:
    return rules.audit_soundness(max_arity, rules=TOY_RULES, toy=True)
