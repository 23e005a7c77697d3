"""The rewrite-rule catalog: parametric schemas, redex matching, and the
soundness audit.

Every rule is represented twice:

* as a *schema* - a builder producing standalone left/right diagrams for
  each parameter assignment, used by the soundness audit;
* as a *graph rewrite* - a matcher enumerating redexes on a host diagram
  and an applier that performs the replacement in place.

Scalar side conditions are not transcribed from pictures: each rule's
right-hand side carries the canonical scalar subdiagram that makes the two
sides interpret identically (the factors are derived in closed form below
and verified exhaustively by the audit).  Appliers insert the net scalar
as explicit nodes, so applications are always possible and always exact.

Reverse redexes returned by ``apply_with_reverse`` restore the host
diagram node for node, which makes rule invertibility directly testable.
For rules whose right-to-left pattern is not locally enumerable (copy,
pi-copy, supplementarity) ``find_redexes`` returns no right-to-left
anchors; reversals of forward applications cover that direction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from . import diagram as dg
from .diagram import Diagram
from .ring import RingScalar
from .scalars import ScalarNF, nf_to_diagram
from .semantics import interpretations_equal


class RuleId(Enum):
    SPIDER = "spider"
    LOOP = "loop"
    CUP = "cup"
    BIALGEBRA = "bialgebra"
    COPY = "copy"
    PI_COPY = "pi-copy"
    PI_COMMUTE = "pi-commutation"
    COLOUR_CHANGE = "colour-change"
    EULER = "euler-decomposition"
    STAR = "star"
    ZERO = "zero"
    ZERO_SCALAR = "zero-scalar"
    IDENTITY = "identity"
    HADAMARD_SELF_INVERSE = "hadamard-self-inverse"
    HOPF = "hopf"
    VARIANT_STAR = "variant-star"
    SUPPLEMENTARITY = "supplementarity"
    TOY_SCALAR = "toy-scalar"


PRIMITIVE_RULES = (
    RuleId.SPIDER, RuleId.LOOP, RuleId.CUP, RuleId.BIALGEBRA, RuleId.COPY,
    RuleId.PI_COPY, RuleId.PI_COMMUTE, RuleId.COLOUR_CHANGE, RuleId.EULER,
    RuleId.STAR, RuleId.ZERO, RuleId.ZERO_SCALAR,
)
DERIVED_RULES = (RuleId.IDENTITY, RuleId.HADAMARD_SELF_INVERSE, RuleId.HOPF,
                 RuleId.VARIANT_STAR)
OPTIONAL_RULES = (RuleId.SUPPLEMENTARITY,)
ALL_RULES = PRIMITIVE_RULES + DERIVED_RULES + OPTIONAL_RULES


class Direction(Enum):
    LR = "l2r"
    RL = "r2l"


@dataclass(frozen=True)
class Redex:
    rule: RuleId
    direction: Direction
    anchor: tuple


class RedexInvalid(ValueError):
    pass


def _other(kind: str) -> str:
    return dg.X if kind == dg.Z else dg.Z


def _phase_gadget_nodes(d: Diagram, alpha: int) -> list[int]:
    """Insert a scalar subdiagram of value e^(i*alpha*pi/4) that remains
    sound under the phase-multiplying interpretations: an <alpha|pi> pair
    with a star and a plain inner-product pair as normalizers."""
    if alpha % 8 == 0:
        return []
    g = d.add_node(dg.Z, alpha % 8)
    r = d.add_node(dg.X, 4)
    d.add_edge(g, r)
    s = d.add_node(dg.STAR)
    g2 = d.add_node(dg.Z, 0)
    r2 = d.add_node(dg.X, 0)
    d.add_edge(g2, r2)
    return [g, r, s, g2, r2]


def _phase_gadget_diagram(alpha: int) -> Diagram:
    d = Diagram()
    _phase_gadget_nodes(d, alpha)
    return d


def _nf_nodes(d: Diagram, s: int, r: int = 0) -> list[int]:
    """Insert the canonical scalar diagram for sqrt(2)^r w^s; returns ids."""
    if s % 8 == 0 and r == 0:
        return []
    piece = nf_to_diagram(ScalarNF.make(s, r))
    mapping = {}
    for v in sorted(piece.nodes):
        kind, phase = piece.nodes[v]
        mapping[v] = d.add_node(kind, phase)
    for a, b in piece.edges:
        d.add_edge(mapping[a], mapping[b])
    return sorted(mapping.values())


def _remove_nodes(d: Diagram, ids: tuple[int, ...]) -> None:
    for v in ids:
        if v not in d.nodes:
            raise RedexInvalid(f"node {v} is gone")
    idset = set(ids)
    d.nodes = {v: nk for v, nk in d.nodes.items() if v not in idset}
    d.edges = [e for e in d.edges if e[0] not in idset and e[1] not in idset]


def _spider_ids(d: Diagram) -> list[int]:
    return [v for v in sorted(d.nodes) if d.kind(v) in dg.SPIDER_KINDS]


def _shared_edges(d: Diagram, u: int, v: int) -> list[int]:
    uv = dg._norm_edge(u, v)
    return [i for i, e in enumerate(d.edges) if e == uv]


# --------------------------------------------------------------------------
# matching


def find_redexes(d: Diagram, rule: RuleId,
                 direction: Direction | None = None) -> list[Redex]:
    """Enumerate applicable redexes, deterministically ordered."""
    out: list[Redex] = []
    dirs = (Direction.LR, Direction.RL) if direction is None else (direction,)
    for dr in dirs:
        fn = _MATCHERS.get((rule, dr))
        if fn is None:
            continue
        out.extend(Redex(rule, dr, a) for a in fn(d))
    return out


def _match_spider_lr(d: Diagram):
    out = []
    for u in _spider_ids(d):
        for v in _spider_ids(d):
            if v <= u or d.kind(v) != d.kind(u):
                continue
            if _shared_edges(d, u, v):
                out.append((u, v))
    return out


def _match_spider_rl(d: Diagram):
    out = []
    for u in _spider_ids(d):
        inc = [i for i, e in enumerate(d.edges) if u in e and e[0] != e[1]]
        for i in inc:
            for beta in range(8):
                out.append((u, beta, (i,), 0))
    return out


def _match_loop_lr(d: Diagram):
    return [(u,) for u in _spider_ids(d) if (u, u) in d.edges]


def _match_loop_rl(d: Diagram):
    return [(u,) for u in _spider_ids(d)]


def _match_identity_lr(d: Diagram):
    out = []
    for u in _spider_ids(d):
        if d.phase(u) not in (0, (0, 0)):
            continue
        inc = [i for i, e in enumerate(d.edges) if u in e]
        if len(inc) == 2 and all(d.edges[i] != (u, u) for i in inc):
            out.append((u,))
    return out


def _match_identity_rl(d: Diagram):
    out = []
    for i in range(len(d.edges)):
        for kind in dg.SPIDER_KINDS:
            out.append((i, kind))
    return out


def _match_had_lr(d: Diagram):
    out = []
    hk = dg.HS if d.toy else dg.H
    for u in sorted(d.nodes):
        if d.kind(u) != hk:
            continue
        for v in sorted(d.nodes):
            if v <= u or d.kind(v) != hk:
                continue
            if _shared_edges(d, u, v):
                out.append((u, v))
    return out


def _match_had_rl(d: Diagram):
    return [(i,) for i in range(len(d.edges))]


def _match_colour_lr(d: Diagram):
    return [(u,) for u in _spider_ids(d)]


def _match_colour_rl(d: Diagram):
    hk = dg.HS if d.toy else dg.H
    out = []
    for u in _spider_ids(d):
        inc = [i for i, e in enumerate(d.edges) if u in e]
        boxes = []
        ok = bool(inc)
        for i in inc:
            a, b = d.edges[i]
            w = b if a == u else a
            if a == b or w not in d.nodes or d.kind(w) != hk:
                ok = False
                break
            boxes.append(w)
        if ok and len(set(boxes)) == len(boxes):
            out.append((u,))
    return out


def _match_hopf_lr(d: Diagram):
    out = []
    for u in _spider_ids(d):
        for v in _spider_ids(d):
            if v <= u or d.kind(v) == d.kind(u):
                continue
            if len(_shared_edges(d, u, v)) == 2:
                out.append((u, v) if d.kind(u) == dg.Z else (v, u))
    return out


def _match_hopf_rl(d: Diagram):
    stars = [v for v in sorted(d.nodes) if d.kind(v) == dg.STAR]
    if not stars:
        return []
    out = []
    for u in _spider_ids(d):
        for v in _spider_ids(d):
            if v <= u or d.kind(v) == d.kind(u):
                continue
            if _shared_edges(d, u, v):
                continue
            a, b = (u, v) if d.kind(u) == dg.Z else (v, u)
            out.append((a, b, stars[0]))
    return out


def _match_pi_copy_lr(d: Diagram):
    pi = (1, 1) if d.toy else 4
    out = []
    for r in _spider_ids(d):
        if d.phase(r) != pi or d.degree(r) != 2 or (r, r) in d.edges:
            continue
        for i, e in enumerate(d.edges):
            if r not in e:
                continue
            g = e[0] if e[1] == r else e[1]
            if g in d.nodes and d.kind(g) == _other(d.kind(r)):
                if len(_shared_edges(d, r, g)) == 1:
                    out.append((r, g))
    return sorted(set(out))


def _match_pi_commute_lr(d: Diagram):
    pi = (1, 1) if d.toy else 4
    out = []
    for p in _spider_ids(d):
        if d.phase(p) != pi or d.degree(p) != 2 or (p, p) in d.edges:
            continue
        for u in _spider_ids(d):
            if u == p or d.kind(u) == d.kind(p):
                continue
            if d.degree(u) != 2 or (u, u) in d.edges:
                continue
            if len(_shared_edges(d, u, p)) == 1:
                out.append((u, p))
    return out


def _match_copy_lr(d: Diagram):
    basis = ((0, 0), (1, 1)) if d.toy else (0, 4)
    out = []
    for s in _spider_ids(d):
        if d.degree(s) != 1 or d.phase(s) not in basis:
            continue
        e = next(i for i, ed in enumerate(d.edges) if s in ed)
        a, b = d.edges[e]
        g = b if a == s else a
        if g in d.nodes and d.kind(g) == _other(d.kind(s)) \
                and d.phase(g) in (0, (0, 0)):
            out.append((s, g))
    return out


def _match_bialgebra_lr(d: Diagram):
    out = []
    zero = (0, 0) if d.toy else 0
    for g1 in _spider_ids(d):
        if d.phase(g1) != zero or d.degree(g1) != 3:
            continue
        kz = d.kind(g1)
        for g2 in _spider_ids(d):
            if g2 <= g1 or d.kind(g2) != kz or d.phase(g2) != zero \
                    or d.degree(g2) != 3:
                continue
            reds = set()
            ok = True
            for g in (g1, g2):
                for w in d.neighbours(g):
                    if w in d.nodes and d.kind(w) == _other(kz) \
                            and d.phase(w) == zero and d.degree(w) == 3:
                        reds.add(w)
            if len(reds) != 2:
                continue
            r1, r2 = sorted(reds)
            for g in (g1, g2):
                for r in (r1, r2):
                    if len(_shared_edges(d, g, r)) != 1:
                        ok = False
            if ok and kz == dg.Z:
                out.append((g1, g2, r1, r2))
            elif ok:
                out.append((r1, r2, g1, g2))
    return sorted(set(out))


def _match_bialgebra_rl(d: Diagram):
    zero = (0, 0) if d.toy else 0
    out = []
    for g in _spider_ids(d):
        if d.phase(g) != zero or d.degree(g) != 3:
            continue
        for r in d.neighbours(g):
            if r in d.nodes and d.kind(r) == _other(d.kind(g)) \
                    and d.phase(r) == zero and d.degree(r) == 3 \
                    and len(_shared_edges(d, g, r)) == 1:
                pair = (g, r) if d.kind(g) == dg.Z else (r, g)
                out.append(pair)
    return sorted(set(out))


def _zero_scalar_nodes(d: Diagram):
    pi = (1, 1) if d.toy else 4
    return [v for v in _spider_ids(d)
            if d.degree(v) == 0 and d.phase(v) == pi]


def _match_zero_lr(d: Diagram):
    zs = _zero_scalar_nodes(d)
    if not zs:
        return []
    out = []
    for i, (a, b) in enumerate(d.edges):
        if a != b and a in d.nodes and b in d.nodes \
                and d.kind(a) in dg.SPIDER_KINDS and d.kind(b) in dg.SPIDER_KINDS:
            out.append((zs[0], i))
    return out


def _match_zero_rl(d: Diagram):
    zs = _zero_scalar_nodes(d)
    if not zs:
        return []
    out = []
    for u in _spider_ids(d):
        for v in _spider_ids(d):
            if u < v and zs[0] not in (u, v):
                out.append((zs[0], u, v))
    return out


def _match_zero_scalar_lr(d: Diagram):
    zs = _zero_scalar_nodes(d)
    if not zs:
        return []
    out = []
    for v in _spider_ids(d):
        if v != zs[0] and d.degree(v) == 0:
            out.append((zs[0], v))
    return out


def _match_zero_scalar_rl(d: Diagram):
    zs = _zero_scalar_nodes(d)
    if not zs:
        return []
    phases = [(a, b) for a in (0, 1) for b in (0, 1)] if d.toy else list(range(8))
    return [(zs[0], kind, ph) for kind in dg.SPIDER_KINDS for ph in phases]


def _match_star_lr(d: Diagram):
    if d.toy:
        return []
    stars = [v for v in sorted(d.nodes) if d.kind(v) == dg.STAR]
    greens = [v for v in _spider_ids(d) if d.degree(v) == 0 and d.phase(v) == 0]
    return [(s, g) for s in stars for g in greens]


def _match_star_rl(d: Diagram):
    return [] if d.toy else [()]


def _ip_pairs(d: Diagram):
    """Two-node green-red components with both phases zero."""
    out = []
    for g in _spider_ids(d):
        if d.kind(g) != dg.Z or d.phase(g) != 0 or d.degree(g) != 1:
            continue
        e = next(ed for ed in d.edges if g in ed)
        r = e[0] if e[1] == g else e[1]
        if r in d.nodes and d.kind(r) == dg.X and d.phase(r) == 0 \
                and d.degree(r) == 1:
            out.append((g, r))
    return out


def _match_variant_star_lr(d: Diagram):
    if d.toy:
        return []
    stars = [v for v in sorted(d.nodes) if d.kind(v) == dg.STAR]
    pairs = _ip_pairs(d)
    out = []
    for s in stars:
        for i, p1 in enumerate(pairs):
            for p2 in pairs[i + 1:]:
                out.append((s,) + p1 + p2)
    return out


def _match_variant_star_rl(d: Diagram):
    return [] if d.toy else [()]


def _match_euler_lr(d: Diagram):
    hk = dg.HS if d.toy else dg.H
    return [(v,) for v in sorted(d.nodes) if d.kind(v) == hk]


def _match_euler_rl(d: Diagram):
    if d.toy:
        signs = ((0, 1),)
    else:
        signs = ((2,), (6,))
    out = []
    for b in _spider_ids(d):
        if d.degree(b) != 2 or (b, b) in d.edges:
            continue
        nbrs = d.neighbours(b)
        if len(nbrs) != 2:
            continue
        a, c = sorted(nbrs)
        if a == c or a not in d.nodes or c not in d.nodes:
            continue
        for k in signs:
            kk = k if d.toy else k[0]
            if d.kind(a) == d.kind(c) == _other(d.kind(b)) \
                    and d.phase(a) == d.phase(b) == d.phase(c) == kk \
                    and d.degree(a) == 2 and d.degree(c) == 2 \
                    and (a, a) not in d.edges and (c, c) not in d.edges:
                out.append((a, b, c))
    return sorted(set(out))


def _match_supp_lr(d: Diagram):
    if d.toy:
        return []
    out = []
    for w in _spider_ids(d):
        if d.kind(w) != dg.X or d.phase(w) != 0 or d.degree(w) != 3:
            continue
        ones = [u for u in d.neighbours(w)
                if u in d.nodes and d.kind(u) == dg.Z and d.degree(u) == 1]
        for u in ones:
            for v in ones:
                if v <= u:
                    continue
                if (d.phase(u) + 4) % 8 == d.phase(v):
                    out.append((u, v, w))
    return out


def _toy_scalar_zero(pa: tuple[int, int], pb: tuple[int, int]) -> bool:
    (a, b), (c, d) = pa, pb
    return a != b and c != d and a != c


def _match_toy_scalar_lr(d: Diagram):
    if not d.toy:
        return []
    out = []
    for g in _spider_ids(d):
        if d.kind(g) != dg.Z or d.degree(g) != 1:
            continue
        e = next(ed for ed in d.edges if g in ed)
        r = e[0] if e[1] == g else e[1]
        if r in d.nodes and d.kind(r) == dg.X and d.degree(r) == 1:
            out.append((g, r))
    return out


def _apply_toy_scalar_lr(d: Diagram, g: int, r: int) -> Redex:
    pa, pb = d.phase(g), d.phase(r)
    zero = _toy_scalar_zero(pa, pb)
    _remove_nodes(d, (g, r))
    z = d.add_node(dg.Z, (1, 1)) if zero else None
    return Redex(RuleId.TOY_SCALAR, Direction.RL, (pa, pb, z))


def _apply_toy_scalar_rl(d: Diagram, pa, pb, z: int | None) -> Redex:
    if z is not None:
        _remove_nodes(d, (z,))
    g = d.add_node(dg.Z, pa)
    r = d.add_node(dg.X, pb)
    d.add_edge(g, r)
    return Redex(RuleId.TOY_SCALAR, Direction.LR, (g, r))


def _match_cup_lr(d: Diagram):
    # structurally the same move as the identity rule (a two-legged
    # phase-free spider is a bent wire)
    return _match_identity_lr(d)


_MATCHERS = {
    (RuleId.SPIDER, Direction.LR): _match_spider_lr,
    (RuleId.SPIDER, Direction.RL): _match_spider_rl,
    (RuleId.LOOP, Direction.LR): _match_loop_lr,
    (RuleId.LOOP, Direction.RL): _match_loop_rl,
    (RuleId.CUP, Direction.LR): _match_cup_lr,
    (RuleId.CUP, Direction.RL): _match_identity_rl,
    (RuleId.IDENTITY, Direction.LR): _match_identity_lr,
    (RuleId.IDENTITY, Direction.RL): _match_identity_rl,
    (RuleId.HADAMARD_SELF_INVERSE, Direction.LR): _match_had_lr,
    (RuleId.HADAMARD_SELF_INVERSE, Direction.RL): _match_had_rl,
    (RuleId.COLOUR_CHANGE, Direction.LR): _match_colour_lr,
    (RuleId.COLOUR_CHANGE, Direction.RL): _match_colour_rl,
    (RuleId.HOPF, Direction.LR): _match_hopf_lr,
    (RuleId.HOPF, Direction.RL): _match_hopf_rl,
    (RuleId.PI_COPY, Direction.LR): _match_pi_copy_lr,
    (RuleId.PI_COMMUTE, Direction.LR): _match_pi_commute_lr,
    (RuleId.COPY, Direction.LR): _match_copy_lr,
    (RuleId.BIALGEBRA, Direction.LR): _match_bialgebra_lr,
    (RuleId.BIALGEBRA, Direction.RL): _match_bialgebra_rl,
    (RuleId.ZERO, Direction.LR): _match_zero_lr,
    (RuleId.ZERO, Direction.RL): _match_zero_rl,
    (RuleId.ZERO_SCALAR, Direction.LR): _match_zero_scalar_lr,
    (RuleId.ZERO_SCALAR, Direction.RL): _match_zero_scalar_rl,
    (RuleId.STAR, Direction.LR): _match_star_lr,
    (RuleId.STAR, Direction.RL): _match_star_rl,
    (RuleId.VARIANT_STAR, Direction.LR): _match_variant_star_lr,
    (RuleId.VARIANT_STAR, Direction.RL): _match_variant_star_rl,
    (RuleId.EULER, Direction.LR): _match_euler_lr,
    (RuleId.EULER, Direction.RL): _match_euler_rl,
    (RuleId.SUPPLEMENTARITY, Direction.LR): _match_supp_lr,
    (RuleId.TOY_SCALAR, Direction.LR): _match_toy_scalar_lr,
}


# --------------------------------------------------------------------------
# application


def apply(d: Diagram, r: Redex) -> Diagram:
    return apply_with_reverse(d, r)[0]


def apply_with_reverse(d: Diagram, r: Redex) -> tuple[Diagram, Redex]:
    fn = _APPLIERS.get((r.rule, r.direction))
    if fn is None:
        raise RedexInvalid(f"no applier for {r.rule} {r.direction}")
    out = d.copy()
    try:
        rev = fn(out, *r.anchor)
    except (KeyError, ValueError, IndexError) as exc:
        raise RedexInvalid(str(exc)) from exc
    out.validate()
    return out, rev


def _move_endpoint(d: Diagram, edge_idx: int, old: int, new: int) -> None:
    a, b = d.edges[edge_idx]
    if a == old:
        a = new
    elif b == old:
        b = new
    else:
        raise RedexInvalid("edge does not touch the expected node")
    d.edges[edge_idx] = dg._norm_edge(a, b)


def _phase_add(d: Diagram, p, q):
    if d.toy:
        return ((p[0] + q[0]) & 1, (p[1] + q[1]) & 1)
    return (p + q) % 8


def _phase_neg(d: Diagram, p):
    return p if d.toy else (8 - p) % 8


def _apply_spider_lr(d: Diagram, u: int, v: int) -> Redex:
    if u not in d.nodes or v not in d.nodes or d.kind(u) != d.kind(v):
        raise RedexInvalid("spider pair is gone")
    shared = _shared_edges(d, u, v)
    if not shared:
        raise RedexInvalid("spiders are no longer adjacent")
    pb = d.phase(v)
    loops = len(shared) - 1
    moved = []
    for i, (a, b) in enumerate(d.edges):
        if i in shared:
            continue
        if a == v or b == v:
            moved.append(i)
    d.edges = [e for i, e in enumerate(d.edges) if i not in shared]
    moved_after = []
    for i, (a, b) in enumerate(d.edges):
        if a == v and b == v:
            d.edges[i] = (u, u)
            moved_after.append(i)
        elif a == v or b == v:
            _move_endpoint(d, i, v, u)
            moved_after.append(i)
    for _ in range(loops):
        d.edges.append((u, u))
    del d.nodes[v]
    d.set_phase(u, _phase_add(d, d.phase(u), pb))
    return Redex(RuleId.SPIDER, Direction.RL,
                 (u, pb, tuple(moved_after), loops))


def _apply_spider_rl(d: Diagram, u: int, beta, edge_idxs: tuple[int, ...],
                     loops: int) -> Redex:
    if u not in d.nodes:
        raise RedexInvalid("spider is gone")
    kind = d.kind(u)
    if d.toy and not isinstance(beta, tuple):
        raise RedexInvalid("toy phases are bit pairs")
    v = d.add_node(kind, beta)
    for i in edge_idxs:
        a, b = d.edges[i]
        if a == u and b == u:
            d.edges[i] = (v, v)
        else:
            _move_endpoint(d, i, u, v)
    removed = 0
    for _ in range(loops):
        d.edges.remove((u, u))
        removed += 1
    d.add_edge(u, v)
    for _ in range(loops):
        d.add_edge(u, v)
    d.set_phase(u, _phase_add(d, d.phase(u), _phase_neg(d, beta)))
    return Redex(RuleId.SPIDER, Direction.LR, (min(u, v), max(u, v)))


def _apply_loop_lr(d: Diagram, u: int) -> Redex:
    d.edges.remove((u, u))
    return Redex(RuleId.LOOP, Direction.RL, (u,))


def _apply_loop_rl(d: Diagram, u: int) -> Redex:
    if u not in d.nodes or d.kind(u) not in dg.SPIDER_KINDS:
        raise RedexInvalid("no spider to loop")
    d.add_edge(u, u)
    return Redex(RuleId.LOOP, Direction.LR, (u,))


def _splice_two_legs(d: Diagram, u: int) -> int:
    inc = [i for i, e in enumerate(d.edges) if u in e]
    if len(inc) != 2:
        raise RedexInvalid("node does not have two distinct legs")
    (a1, b1), (a2, b2) = d.edges[inc[0]], d.edges[inc[1]]
    x = a1 if b1 == u else b1
    y = a2 if b2 == u else b2
    for i in sorted(inc, reverse=True):
        d.edges.pop(i)
    del d.nodes[u]
    d.add_edge(x, y)
    return len(d.edges) - 1


def _apply_identity_lr(d: Diagram, u: int, rule: RuleId = RuleId.IDENTITY) -> Redex:
    kind = d.kind(u)
    idx = _splice_two_legs(d, u)
    return Redex(rule, Direction.RL, (idx, kind))


def _apply_identity_rl(d: Diagram, edge_idx: int, kind: str,
                       rule: RuleId = RuleId.IDENTITY) -> Redex:
    a, b = d.edges[edge_idx]
    v = d.add_node(kind, (0, 0) if d.toy else 0)
    d.edges.pop(edge_idx)
    d.add_edge(a, v)
    d.add_edge(v, b)
    return Redex(rule, Direction.LR, (v,))


def _apply_cup_lr(d: Diagram, u: int) -> Redex:
    return _apply_identity_lr(d, u, RuleId.CUP)


def _apply_cup_rl(d: Diagram, edge_idx: int, kind: str) -> Redex:
    return _apply_identity_rl(d, edge_idx, kind, RuleId.CUP)


def _apply_had_lr(d: Diagram, u: int, v: int) -> Redex:
    shared = _shared_edges(d, u, v)
    if len(shared) != 1:
        raise RedexInvalid("boxes are not joined by one wire")
    d.edges.pop(shared[0])
    legs = []
    for w in (u, v):
        inc = [i for i, e in enumerate(d.edges) if w in e]
        if len(inc) != 1:
            raise RedexInvalid("box degree changed")
        a, b = d.edges[inc[0]]
        legs.append(a if b == w else b)
        d.edges.pop(inc[0])
        del d.nodes[w]
    d.add_edge(legs[0], legs[1])
    return Redex(RuleId.HADAMARD_SELF_INVERSE, Direction.RL,
                 (len(d.edges) - 1,))


def _apply_had_rl(d: Diagram, edge_idx: int) -> Redex:
    a, b = d.edges[edge_idx]
    hk = dg.HS if d.toy else dg.H
    h1 = d.add_node(hk)
    h2 = d.add_node(hk)
    d.edges.pop(edge_idx)
    d.add_edge(a, h1)
    d.add_edge(h1, h2)
    d.add_edge(h2, b)
    return Redex(RuleId.HADAMARD_SELF_INVERSE, Direction.LR, (h1, h2))


def _apply_colour_lr(d: Diagram, u: int) -> Redex:
    kind, phase = d.nodes[u]
    hk = dg.HS if d.toy else dg.H
    d.nodes[u] = (_other(kind), phase)
    inc = [i for i, e in enumerate(d.edges) if u in e]
    created = []
    for i in inc:
        a, b = d.edges[i]
        if a == b:
            h1 = d.add_node(hk)
            h2 = d.add_node(hk)
            d.edges[i] = dg._norm_edge(u, h1)
            d.add_edge(h1, h2)
            d.add_edge(h2, u)
            created += [h1, h2]
        else:
            h = d.add_node(hk)
            _move_endpoint(d, i, u, h)
            d.add_edge(h, u)
            created.append(h)
    return Redex(RuleId.COLOUR_CHANGE, Direction.RL, (u, tuple(created)))


def _apply_colour_rl(d: Diagram, u: int,
                     boxes: tuple[int, ...] | None = None) -> Redex:
    kind, phase = d.nodes[u]
    d.nodes[u] = (_other(kind), phase)
    if boxes is None:
        hk = dg.HS if d.toy else dg.H
        boxes = []
        for i, e in enumerate(d.edges):
            if u in e and e[0] != e[1]:
                w = e[0] if e[1] == u else e[1]
                if w in d.nodes and d.kind(w) == hk:
                    boxes.append(w)
        boxes = tuple(dict.fromkeys(boxes))
    for w in boxes:
        _splice_two_legs(d, w)
    return Redex(RuleId.COLOUR_CHANGE, Direction.LR, (u,))


def _apply_hopf_lr(d: Diagram, u: int, v: int) -> Redex:
    shared = _shared_edges(d, u, v)
    if len(shared) != 2:
        raise RedexInvalid("pair is not doubly connected")
    d.edges = [e for i, e in enumerate(d.edges) if i not in shared]
    s = d.add_node(dg.STAR) if not d.toy else None
    return Redex(RuleId.HOPF, Direction.RL, (u, v, s))


def _apply_hopf_rl(d: Diagram, u: int, v: int, star: int | None) -> Redex:
    if not d.toy:
        if star not in d.nodes or d.kind(star) != dg.STAR:
            raise RedexInvalid("no star node to consume")
        del d.nodes[star]
    d.add_edge(u, v)
    d.add_edge(u, v)
    return Redex(RuleId.HOPF, Direction.LR, (u, v))


def _apply_pi_copy_lr(d: Diagram, r: int, g: int) -> Redex:
    pi = (1, 1) if d.toy else 4
    alpha = d.phase(g)
    shared = _shared_edges(d, r, g)
    if len(shared) != 1:
        raise RedexInvalid("pattern changed")
    rkind = d.kind(r)
    outer = [i for i, e in enumerate(d.edges) if r in e and i != shared[0]]
    if len(outer) != 1:
        raise RedexInvalid("pattern changed")
    # the wire that entered the pi shift now enters the spider directly
    _move_endpoint(d, outer[0], r, g)
    wire_idx = outer[0] - (1 if outer[0] > shared[0] else 0)
    d.edges.pop(shared[0])
    del d.nodes[r]
    created = []
    legs = [i for i, e in enumerate(d.edges) if g in e and e[0] != e[1]]
    for i in legs:
        if i == wire_idx:
            continue
        p = d.add_node(rkind, pi)
        _move_endpoint(d, i, g, p)
        d.add_edge(p, g)
        created.append(p)
    a, b = d.edges[wire_idx]
    wend = a if b == g else b
    if d.toy:
        x, y = alpha
        d.set_phase(g, (y, x))
        scal: tuple[int, ...] = ()
    else:
        d.set_phase(g, (8 - alpha) % 8)
        scal = tuple(_phase_gadget_nodes(d, alpha))
    return Redex(RuleId.PI_COPY, Direction.RL,
                 (g, wend, tuple(created), scal, rkind))


def _apply_pi_copy_rl(d: Diagram, g: int, wend: int,
                      created: tuple[int, ...], scal: tuple[int, ...],
                      rkind: str) -> Redex:
    pi = (1, 1) if d.toy else 4
    _remove_nodes(d, scal)
    for p in created:
        _splice_two_legs(d, p)
    r = d.add_node(rkind, pi)
    target = next(i for i, e in enumerate(d.edges)
                  if e == dg._norm_edge(g, wend))
    _move_endpoint(d, target, g, r)
    d.add_edge(r, g)
    if d.toy:
        x, y = d.phase(g)
        d.set_phase(g, (y, x))
    else:
        d.set_phase(g, (8 - d.phase(g)) % 8)
    return Redex(RuleId.PI_COPY, Direction.LR, (r, g))


def _apply_pi_commute_lr(d: Diagram, u: int, p: int) -> Redex:
    alpha = d.phase(u)
    ukind = d.kind(u)
    pi = (1, 1) if d.toy else 4
    d.nodes[u] = (d.kind(p), pi)
    d.nodes[p] = (ukind, _phase_neg(d, alpha))
    if d.toy:
        a, b = alpha
        d.nodes[p] = (ukind, (b, a))
        scal: tuple[int, ...] = ()
    else:
        scal = tuple(_phase_gadget_nodes(d, alpha))
    return Redex(RuleId.PI_COMMUTE, Direction.RL, (u, p, scal))


def _apply_pi_commute_rl(d: Diagram, u: int, p: int,
                         scal: tuple[int, ...]) -> Redex:
    _remove_nodes(d, scal)
    pkind, pphase = d.nodes[p]
    pi = (1, 1) if d.toy else 4
    if d.toy:
        a, b = pphase
        d.nodes[u] = (pkind, (b, a))
    else:
        d.nodes[u] = (pkind, _phase_neg(d, pphase))
    d.nodes[p] = (_other(pkind), pi)
    return Redex(RuleId.PI_COMMUTE, Direction.LR, (u, p))


def _apply_copy_lr(d: Diagram, s: int, g: int) -> Redex:
    c = d.phase(s)
    skind = d.kind(s)
    _remove_nodes(d, (s,))
    legs = [i for i, e in enumerate(d.edges) if g in e and e[0] != e[1]]
    created = []
    for i in legs:
        st = d.add_node(skind, c)
        _move_endpoint(d, i, g, st)
        created.append(st)
    n = len(legs)
    _remove_nodes(d, (g,))
    scal = tuple(_nf_nodes(d, 0, 1 - n)) if not d.toy else ()
    return Redex(RuleId.COPY, Direction.RL, (tuple(created), scal, skind))


def _apply_copy_rl(d: Diagram, created: tuple[int, ...],
                   scal: tuple[int, ...], skind: str) -> Redex:
    _remove_nodes(d, scal)
    c = d.phase(created[0]) if created else ((0, 0) if d.toy else 0)
    g = d.add_node(_other(skind), (0, 0) if d.toy else 0)
    for st in created:
        inc = [i for i, e in enumerate(d.edges) if st in e]
        if len(inc) != 1:
            raise RedexInvalid("copied state grew extra legs")
        _move_endpoint(d, inc[0], st, g)
        del d.nodes[st]
    s = d.add_node(skind, c)
    d.add_edge(s, g)
    return Redex(RuleId.COPY, Direction.LR, (s, g))


def _apply_bialgebra_lr(d: Diagram, g1: int, g2: int, r1: int, r2: int,
                        scal_to_remove: tuple[int, ...] = ()) -> Redex:
    zkind = d.kind(g1)
    xkind = d.kind(r1)
    ext = {}
    for w in (g1, g2, r1, r2):
        outer = [i for i, e in enumerate(d.edges)
                 if w in e
                 and (e[0] if e[1] == w else e[1]) not in (g1, g2, r1, r2)]
        if len(outer) != 1:
            raise RedexInvalid("bialgebra pattern changed")
        a, b = d.edges[outer[0]]
        ext[w] = a if b == w else b
    _remove_nodes(d, (g1, g2, r1, r2))
    g = d.add_node(zkind, (0, 0) if d.toy else 0)
    r = d.add_node(xkind, (0, 0) if d.toy else 0)
    d.add_edge(ext[r1], g)
    d.add_edge(ext[r2], g)
    d.add_edge(g, r)
    d.add_edge(r, ext[g1])
    d.add_edge(r, ext[g2])
    if scal_to_remove:
        _remove_nodes(d, scal_to_remove)
        scal: tuple[int, ...] = ()
    else:
        scal = tuple(_nf_nodes(d, 0, -1)) if not d.toy else ()
    return Redex(RuleId.BIALGEBRA, Direction.RL, (g, r, scal))


def _apply_bialgebra_rl(d: Diagram, g: int, r: int,
                        scal_to_remove: tuple[int, ...] = ()) -> Redex:
    zkind = d.kind(g)
    xkind = d.kind(r)
    gx = [i for i, e in enumerate(d.edges)
          if g in e and r not in e and e[0] != e[1]]
    rx = [i for i, e in enumerate(d.edges)
          if r in e and g not in e and e[0] != e[1]]
    if len(gx) != 2 or len(rx) != 2 or len(_shared_edges(d, g, r)) != 1:
        raise RedexInvalid("pair pattern changed")
    gext = [d.edges[i][0] if d.edges[i][1] == g else d.edges[i][1] for i in gx]
    rext = [d.edges[i][0] if d.edges[i][1] == r else d.edges[i][1] for i in rx]
    _remove_nodes(d, (g, r))
    g1 = d.add_node(zkind, (0, 0) if d.toy else 0)
    g2 = d.add_node(zkind, (0, 0) if d.toy else 0)
    r1 = d.add_node(xkind, (0, 0) if d.toy else 0)
    r2 = d.add_node(xkind, (0, 0) if d.toy else 0)
    d.add_edge(rext[0], g1)
    d.add_edge(rext[1], g2)
    d.add_edge(gext[0], r1)
    d.add_edge(gext[1], r2)
    for gg in (g1, g2):
        for rr in (r1, r2):
            d.add_edge(gg, rr)
    if scal_to_remove:
        _remove_nodes(d, scal_to_remove)
        scal: tuple[int, ...] = ()
    else:
        scal = tuple(_nf_nodes(d, 0, 1)) if not d.toy else ()
    return Redex(RuleId.BIALGEBRA, Direction.LR, (g1, g2, r1, r2, scal))


def _apply_zero_lr(d: Diagram, zs: int, edge_idx: int) -> Redex:
    pi = (1, 1) if d.toy else 4
    if zs not in d.nodes or d.phase(zs) != pi or d.degree(zs) != 0:
        raise RedexInvalid("no zero scalar present")
    a, b = d.edges[edge_idx]
    d.edges.pop(edge_idx)
    return Redex(RuleId.ZERO, Direction.RL, (zs, a, b))


def _apply_zero_rl(d: Diagram, zs: int, u: int, v: int) -> Redex:
    pi = (1, 1) if d.toy else 4
    if zs not in d.nodes or d.phase(zs) != pi or d.degree(zs) != 0:
        raise RedexInvalid("no zero scalar present")
    d.add_edge(u, v)
    return Redex(RuleId.ZERO, Direction.LR, (zs, len(d.edges) - 1))


def _apply_zero_scalar_lr(d: Diagram, zs: int, v: int) -> Redex:
    kind, phase = d.nodes[v]
    _remove_nodes(d, (v,))
    return Redex(RuleId.ZERO_SCALAR, Direction.RL, (zs, kind, phase))


def _apply_zero_scalar_rl(d: Diagram, zs: int, kind: str, phase) -> Redex:
    pi = (1, 1) if d.toy else 4
    if zs not in d.nodes or d.phase(zs) != pi or d.degree(zs) != 0:
        raise RedexInvalid("no zero scalar present")
    v = d.add_node(kind, phase)
    return Redex(RuleId.ZERO_SCALAR, Direction.LR, (zs, v))


def _apply_star_lr(d: Diagram, s: int, g: int) -> Redex:
    kind = d.kind(g)
    _remove_nodes(d, (s, g))
    return Redex(RuleId.STAR, Direction.RL, (kind,))


def _apply_star_rl(d: Diagram, kind: str = dg.Z) -> Redex:
    s = d.add_node(dg.STAR)
    g = d.add_node(kind, 0)
    return Redex(RuleId.STAR, Direction.LR, (s, g))


def _apply_variant_star_lr(d: Diagram, s: int, g1: int, r1: int,
                           g2: int, r2: int) -> Redex:
    _remove_nodes(d, (s, g1, r1, g2, r2))
    return Redex(RuleId.VARIANT_STAR, Direction.RL, ())


def _apply_variant_star_rl(d: Diagram) -> Redex:
    s = d.add_node(dg.STAR)
    ids = []
    for _ in range(2):
        g = d.add_node(dg.Z, 0)
        r = d.add_node(dg.X, 0)
        d.add_edge(g, r)
        ids += [g, r]
    return Redex(RuleId.VARIANT_STAR, Direction.LR, (s, *ids))


def _apply_euler_lr(d: Diagram, h: int,
                    scal_to_remove: tuple[int, ...] = (),
                    k=None) -> Redex:
    inc = [i for i, e in enumerate(d.edges) if h in e]
    if len(inc) != 2 or any(d.edges[i] == (h, h) for i in inc):
        raise RedexInvalid("box pattern changed")
    if k is None:
        k = (0, 1) if d.toy else 2
    a = d.add_node(dg.Z, k)
    b = d.add_node(dg.X, k)
    c = d.add_node(dg.Z, k)
    _move_endpoint(d, inc[0], h, a)
    _move_endpoint(d, inc[1], h, c)
    del d.nodes[h]
    d.add_edge(a, b)
    d.add_edge(b, c)
    if scal_to_remove:
        _remove_nodes(d, scal_to_remove)
        scal: tuple[int, ...] = ()
    elif d.toy:
        scal = ()
    else:
        scal = tuple(_nf_nodes(d, 7 if k == 2 else 1))
    return Redex(RuleId.EULER, Direction.RL, (a, b, c, scal))


def _apply_euler_rl(d: Diagram, a: int, b: int, c: int,
                    scal_to_remove: tuple[int, ...] = ()) -> Redex:
    k = d.phase(b)
    hk = dg.HS if d.toy else dg.H
    h = d.add_node(hk)
    for node in (a, c):
        inc = [i for i, e in enumerate(d.edges)
               if node in e and b not in e]
        if len(inc) != 1:
            raise RedexInvalid("chain pattern changed")
        _move_endpoint(d, inc[0], node, h)
    _remove_nodes(d, (a, b, c))
    if scal_to_remove:
        _remove_nodes(d, scal_to_remove)
        scal: tuple[int, ...] = ()
    elif d.toy:
        scal = ()
    else:
        scal = tuple(_nf_nodes(d, 1 if k == 2 else 7))
    return Redex(RuleId.EULER, Direction.LR, (h, scal, k))


def _apply_supp_lr(d: Diagram, u: int, v: int, w: int) -> Redex:
    alpha = d.phase(u)
    _remove_nodes(d, (u, v))
    s = d.add_node(dg.STAR)
    z = d.add_node(dg.Z, (2 * alpha + 4) % 8)
    return Redex(RuleId.SUPPLEMENTARITY, Direction.RL, (w, alpha, s, z))


def _apply_supp_rl(d: Diagram, w: int, alpha: int, s: int, z: int) -> Redex:
    _remove_nodes(d, (s, z))
    u = d.add_node(dg.Z, alpha)
    v = d.add_node(dg.Z, (alpha + 4) % 8)
    d.add_edge(u, w)
    d.add_edge(v, w)
    return Redex(RuleId.SUPPLEMENTARITY, Direction.LR, (u, v, w))


_APPLIERS = {
    (RuleId.SPIDER, Direction.LR): _apply_spider_lr,
    (RuleId.SPIDER, Direction.RL): _apply_spider_rl,
    (RuleId.LOOP, Direction.LR): _apply_loop_lr,
    (RuleId.LOOP, Direction.RL): _apply_loop_rl,
    (RuleId.CUP, Direction.LR): _apply_cup_lr,
    (RuleId.CUP, Direction.RL): _apply_cup_rl,
    (RuleId.IDENTITY, Direction.LR): _apply_identity_lr,
    (RuleId.IDENTITY, Direction.RL): _apply_identity_rl,
    (RuleId.HADAMARD_SELF_INVERSE, Direction.LR): _apply_had_lr,
    (RuleId.HADAMARD_SELF_INVERSE, Direction.RL): _apply_had_rl,
    (RuleId.COLOUR_CHANGE, Direction.LR): _apply_colour_lr,
    (RuleId.COLOUR_CHANGE, Direction.RL): _apply_colour_rl,
    (RuleId.HOPF, Direction.LR): _apply_hopf_lr,
    (RuleId.HOPF, Direction.RL): _apply_hopf_rl,
    (RuleId.PI_COPY, Direction.LR): _apply_pi_copy_lr,
    (RuleId.PI_COPY, Direction.RL): _apply_pi_copy_rl,
    (RuleId.PI_COMMUTE, Direction.LR): _apply_pi_commute_lr,
    (RuleId.PI_COMMUTE, Direction.RL): _apply_pi_commute_rl,
    (RuleId.COPY, Direction.LR): _apply_copy_lr,
    (RuleId.COPY, Direction.RL): _apply_copy_rl,
    (RuleId.BIALGEBRA, Direction.LR): _apply_bialgebra_lr,
    (RuleId.BIALGEBRA, Direction.RL): _apply_bialgebra_rl,
    (RuleId.ZERO, Direction.LR): _apply_zero_lr,
    (RuleId.ZERO, Direction.RL): _apply_zero_rl,
    (RuleId.ZERO_SCALAR, Direction.LR): _apply_zero_scalar_lr,
    (RuleId.ZERO_SCALAR, Direction.RL): _apply_zero_scalar_rl,
    (RuleId.STAR, Direction.LR): _apply_star_lr,
    (RuleId.STAR, Direction.RL): _apply_star_rl,
    (RuleId.VARIANT_STAR, Direction.LR): _apply_variant_star_lr,
    (RuleId.VARIANT_STAR, Direction.RL): _apply_variant_star_rl,
    (RuleId.EULER, Direction.LR): _apply_euler_lr,
    (RuleId.EULER, Direction.RL): _apply_euler_rl,
    (RuleId.SUPPLEMENTARITY, Direction.LR): _apply_supp_lr,
    (RuleId.SUPPLEMENTARITY, Direction.RL): _apply_supp_rl,
    (RuleId.TOY_SCALAR, Direction.LR): _apply_toy_scalar_lr,
    (RuleId.TOY_SCALAR, Direction.RL): _apply_toy_scalar_rl,
}


# --------------------------------------------------------------------------
# schemas for the soundness audit


@dataclass(frozen=True)
class RuleVariant:
    rule: RuleId
    colour_swapped: bool = False
    flipped: bool = False

    def __str__(self) -> str:
        tags = []
        if self.colour_swapped:
            tags.append("colour-swapped")
        if self.flipped:
            tags.append("upside-down")
        return self.rule.value + (" (" + ", ".join(tags) + ")" if tags else "")


def colour_swap_rule(rule: RuleId) -> RuleVariant:
    return RuleVariant(rule, colour_swapped=True)


def upside_down_rule(rule: RuleId) -> RuleVariant:
    return RuleVariant(rule, flipped=True)


def colour_swap_diagram(d: Diagram) -> Diagram:
    out = d.copy()
    for v, (kind, phase) in d.nodes.items():
        if kind in dg.SPIDER_KINDS:
            out.nodes[v] = (_other(kind), phase)
    return out


def _variant(d: Diagram, var: RuleVariant) -> Diagram:
    if var.colour_swapped:
        d = colour_swap_diagram(d)
    if var.flipped:
        d = dg.adjoint(d)
    return d


def _schema(builder):
    """Attach boundary wires for a leg-count spec.

    Builders yield (params, lhs, rhs) where diagrams already carry their
    boundaries.
    """
    return builder


def _spider_with_legs(d: Diagram, kind: str, phase, n_in: int, n_out: int) -> int:
    v = d.add_node(kind, phase)
    for _ in range(n_in):
        b = d.add_boundary(output=False)
        d.add_edge(b, v)
    for _ in range(n_out):
        b = d.add_boundary(output=True)
        d.add_edge(b, v)
    return v


def _phases(fragment: str, toy: bool):
    if toy:
        return [(a, b) for a in (0, 1) for b in (0, 1)]
    if fragment == dg.STABILIZER:
        return [0, 2, 4, 6]
    return list(range(8))


def _pi(toy: bool):
    return (1, 1) if toy else 4


def rule_instances(rule: RuleId, max_arity: int, fragment: str,
                   toy: bool = False):
    """Yield (params, lhs, rhs) for every instance of the rule."""
    phases = _phases(fragment, toy)
    zero = (0, 0) if toy else 0
    ar = range(max_arity + 1)

    if rule is RuleId.SPIDER:
        for n, m, k, l in itertools.product(ar, repeat=4):
            for a, b in itertools.product(phases, repeat=2):
                lhs = Diagram(toy=toy)
                u = _spider_with_legs(lhs, dg.Z, a, n, m)
                v = _spider_with_legs(lhs, dg.Z, b, k, l)
                lhs.add_edge(u, v)
                rhs = Diagram(toy=toy)
                s = rhs.add_node(dg.Z, _phase_add(rhs, a, b))
                for _ in range(n + k):
                    bb = rhs.add_boundary(output=False)
                    rhs.add_edge(bb, s)
                for _ in range(m + l):
                    bb = rhs.add_boundary(output=True)
                    rhs.add_edge(bb, s)
                yield ((n, m, k, l), (a, b)), lhs, rhs
    elif rule is RuleId.LOOP:
        for n, m in itertools.product(ar, repeat=2):
            for a in phases:
                lhs = Diagram(toy=toy)
                u = _spider_with_legs(lhs, dg.Z, a, n, m)
                lhs.add_edge(u, u)
                rhs = Diagram(toy=toy)
                _spider_with_legs(rhs, dg.Z, a, n, m)
                yield ((n, m), (a,)), lhs, rhs
    elif rule is RuleId.CUP:
        lhs = Diagram(toy=toy)
        _spider_with_legs(lhs, dg.Z, zero, 0, 2)
        yield ((), ()), lhs, dg.cup(toy)
    elif rule is RuleId.IDENTITY:
        lhs = Diagram(toy=toy)
        _spider_with_legs(lhs, dg.Z, zero, 1, 1)
        yield ((), ()), lhs, dg.wire(toy)
    elif rule is RuleId.HADAMARD_SELF_INVERSE:
        yield ((), ()), dg.compose_seq(dg.hadamard(toy), dg.hadamard(toy)), \
            dg.wire(toy)
    elif rule is RuleId.COLOUR_CHANGE:
        for n, m in itertools.product(ar, repeat=2):
            for a in phases:
                lhs = Diagram(toy=toy)
                _spider_with_legs(lhs, dg.X, a, n, m)
                rhs = Diagram(toy=toy)
                v = _spider_with_legs(rhs, dg.Z, a, 0, 0)
                for _ in range(n):
                    b = rhs.add_boundary(output=False)
                    h = rhs.add_node(dg.HS if toy else dg.H)
                    rhs.add_edge(b, h)
                    rhs.add_edge(h, v)
                for _ in range(m):
                    b = rhs.add_boundary(output=True)
                    h = rhs.add_node(dg.HS if toy else dg.H)
                    rhs.add_edge(v, h)
                    rhs.add_edge(h, b)
                yield ((n, m), (a,)), lhs, rhs
    elif rule is RuleId.BIALGEBRA:
        lhs = Diagram(toy=toy)
        g1 = _spider_with_legs(lhs, dg.Z, zero, 0, 1)
        g2 = _spider_with_legs(lhs, dg.Z, zero, 0, 1)
        r1 = _spider_with_legs(lhs, dg.X, zero, 1, 0)
        r2 = _spider_with_legs(lhs, dg.X, zero, 1, 0)
        for g in (g1, g2):
            for r in (r1, r2):
                lhs.add_edge(g, r)
        rhs = Diagram(toy=toy)
        g = _spider_with_legs(rhs, dg.Z, zero, 2, 0)
        r = _spider_with_legs(rhs, dg.X, zero, 0, 2)
        rhs.add_edge(g, r)
        if not toy:
            rhs = dg.compose_par(rhs, nf_to_diagram(ScalarNF.make(0, -1)))
        # match boundary layout: inputs feed the red merges, outputs leave
        # the green copies
        yield ((), ()), _rewire_bialgebra(lhs), _rewire_bialgebra(rhs)
    elif rule is RuleId.COPY:
        basis = ((0, 0), (1, 1)) if toy else (0, 4)
        for n in ar:
            for c in basis:
                lhs = Diagram(toy=toy)
                g = _spider_with_legs(lhs, dg.Z, zero, 0, n)
                s = lhs.add_node(dg.X, c)
                lhs.add_edge(s, g)
                rhs = Diagram(toy=toy)
                for _ in range(n):
                    st = rhs.add_node(dg.X, c)
                    b = rhs.add_boundary(output=True)
                    rhs.add_edge(st, b)
                if not toy:
                    rhs = dg.compose_par(rhs, nf_to_diagram(ScalarNF.make(0, 1 - n)))
                yield ((n,), (c,)), lhs, rhs
    elif rule is RuleId.PI_COPY:
        for m in ar:
            for a in phases:
                lhs = Diagram(toy=toy)
                g = _spider_with_legs(lhs, dg.Z, a, 0, m)
                p = lhs.add_node(dg.X, _pi(toy))
                b = lhs.add_boundary(output=False)
                lhs.add_edge(b, p)
                lhs.add_edge(p, g)
                rhs = Diagram(toy=toy)
                neg = (a[1], a[0]) if toy else (8 - a) % 8
                g2 = rhs.add_node(dg.Z, neg)
                b = rhs.add_boundary(output=False)
                rhs.add_edge(b, g2)
                for _ in range(m):
                    p2 = rhs.add_node(dg.X, _pi(toy))
                    bb = rhs.add_boundary(output=True)
                    rhs.add_edge(g2, p2)
                    rhs.add_edge(p2, bb)
                if not toy:
                    rhs = dg.compose_par(rhs, _phase_gadget_diagram(a))
                yield ((m,), (a,)), lhs, rhs
    elif rule is RuleId.PI_COMMUTE:
        for a in phases:
            lhs = dg.compose_seq(dg.spider(dg.Z, a, 1, 1, toy),
                                 dg.spider(dg.X, _pi(toy), 1, 1, toy))
            neg = (a[1], a[0]) if toy else (8 - a) % 8
            rhs = dg.compose_seq(dg.spider(dg.X, _pi(toy), 1, 1, toy),
                                 dg.spider(dg.Z, neg, 1, 1, toy))
            if not toy:
                rhs = dg.compose_par(rhs, _phase_gadget_diagram(a))
            yield ((), (a,)), lhs, rhs
    elif rule is RuleId.EULER:
        variants = [(0, 1)] if toy else [2, 6]
        for k in variants:
            lhs = dg.hadamard(toy)
            rhs = dg.compose_seq(
                dg.spider(dg.Z, k, 1, 1, toy),
                dg.compose_seq(dg.spider(dg.X, k, 1, 1, toy),
                               dg.spider(dg.Z, k, 1, 1, toy)))
            if not toy:
                rhs = dg.compose_par(rhs, nf_to_diagram(
                    ScalarNF.make(7 if k == 2 else 1, 0)))
            yield ((), (k,)), lhs, rhs
    elif rule is RuleId.STAR:
        if toy:
            return
        lhs = dg.compose_par(dg.star_scalar(), dg.spider(dg.Z, 0, 0, 0))
        yield ((), ()), lhs, Diagram()
    elif rule is RuleId.VARIANT_STAR:
        if toy:
            return
        lhs = dg.star_scalar()
        for _ in range(2):
            ip = Diagram()
            g = ip.add_node(dg.Z, 0)
            r = ip.add_node(dg.X, 0)
            ip.add_edge(g, r)
            lhs = dg.compose_par(lhs, ip)
        yield ((), ()), lhs, Diagram()
    elif rule is RuleId.ZERO:
        for na, nb in itertools.product(range(min(max_arity, 2) + 1), repeat=2):
            for a, b in itertools.product(phases, repeat=2):
                lhs = Diagram(toy=toy)
                zs = lhs.add_node(dg.Z, _pi(toy))
                u = _spider_with_legs(lhs, dg.Z, a, 0, na)
                v = _spider_with_legs(lhs, dg.X, b, nb, 0)
                lhs.add_edge(u, v)
                rhs = Diagram(toy=toy)
                rhs.add_node(dg.Z, _pi(toy))
                _spider_with_legs(rhs, dg.Z, a, 0, na)
                _spider_with_legs(rhs, dg.X, b, nb, 0)
                yield ((na, nb), (a, b)), lhs, rhs
    elif rule is RuleId.ZERO_SCALAR:
        for a in phases:
            lhs = Diagram(toy=toy)
            lhs.add_node(dg.Z, _pi(toy))
            lhs.add_node(dg.Z, a)
            rhs = Diagram(toy=toy)
            rhs.add_node(dg.Z, _pi(toy))
            yield ((), (a,)), lhs, rhs
    elif rule is RuleId.HOPF:
        for a, b in itertools.product(phases, repeat=2):
            lhs = Diagram(toy=toy)
            u = _spider_with_legs(lhs, dg.Z, a, 0, 1)
            v = _spider_with_legs(lhs, dg.X, b, 1, 0)
            lhs.add_edge(u, v)
            lhs.add_edge(u, v)
            rhs = Diagram(toy=toy)
            _spider_with_legs(rhs, dg.Z, a, 0, 1)
            _spider_with_legs(rhs, dg.X, b, 1, 0)
            if not toy:
                rhs = dg.compose_par(rhs, dg.star_scalar())
            yield ((), (a, b)), lhs, rhs
    elif rule is RuleId.TOY_SCALAR:
        if not toy:
            return
        for pa in phases:
            for pb in phases:
                lhs = Diagram(toy=True)
                g = lhs.add_node(dg.Z, pa)
                r = lhs.add_node(dg.X, pb)
                lhs.add_edge(g, r)
                rhs = Diagram(toy=True)
                if _toy_scalar_zero(pa, pb):
                    rhs.add_node(dg.Z, (1, 1))
                yield ((), (pa, pb)), lhs, rhs
    elif rule is RuleId.SUPPLEMENTARITY:
        if toy:
            return
        for a in phases:
            lhs = Diagram()
            u = lhs.add_node(dg.Z, a)
            v = lhs.add_node(dg.Z, (a + 4) % 8)
            w = lhs.add_node(dg.X, 0)
            bb = lhs.add_boundary(output=True)
            lhs.add_edge(u, w)
            lhs.add_edge(v, w)
            lhs.add_edge(w, bb)
            rhs = Diagram()
            st = rhs.add_node(dg.X, 0)
            bb = rhs.add_boundary(output=True)
            rhs.add_edge(st, bb)
            rhs.add_node(dg.STAR)
            rhs.add_node(dg.Z, (2 * a + 4) % 8)
            yield ((), (a,)), lhs, rhs


def _rewire_bialgebra(d: Diagram) -> Diagram:
    """Normalize bialgebra boundary ordering: inputs first, then outputs."""
    out = d.copy()
    out.inputs = sorted(out.inputs)
    out.outputs = sorted(out.outputs)
    return out


@dataclass
class AuditRow:
    variant: RuleVariant
    direction: str
    arities: tuple
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def audit_soundness(max_arity: int, fragment: str = dg.CLIFFORD_T,
                    rules: tuple[RuleId, ...] = ALL_RULES,
                    js: tuple[int, ...] = (1, 3, 5, 7),
                    toy: bool = False,
                    variant_arity: int | None = None) -> list[AuditRow]:
    """Check interpret- and interpret_j-equality of every rule instance.

    The equality of the two sides is direction-independent, so each row
    covers both rewrite directions.  Base rules sweep the full arity range;
    the colour-swapped and upside-down meta-variants (whose soundness is
    equivalent to the base rule's by exact Hadamard conjugation and by
    taking adjoints) are exercised up to ``variant_arity`` (default 2).
    """
    if toy:
        from .toy import interpret_toy

        def equal(lhs, rhs, j):
            return interpret_toy(lhs) == interpret_toy(rhs)
        js = (1,)
    else:
        def equal(lhs, rhs, j):
            return interpretations_equal(lhs, rhs, j)

    if variant_arity is None:
        variant_arity = min(2, max_arity)
    rows: dict[tuple, AuditRow] = {}
    for rule in rules:
        for swapped, flipped in itertools.product((False, True), repeat=2):
            v2 = RuleVariant(rule, swapped, flipped)
            arity = max_arity if not (swapped or flipped) else variant_arity
            for (arities, params), lhs, rhs in rule_instances(
                    rule, arity, fragment, toy):
                lhs = _variant(lhs, v2)
                rhs = _variant(rhs, v2)
                key = (rule, swapped, flipped, arities)
                row = rows.get(key)
                if row is None:
                    row = AuditRow(v2, "both", arities, 0, [])
                    rows[key] = row
                for j in js:
                    row.checked += 1
                    if not equal(lhs, rhs, j):
                        row.failures.append((params, j))
    return [rows[k] for k in sorted(rows, key=lambda k: (k[0].value, k[1:]))]
