"""The exact interpretation of diagrams as matrices over Z[1/2, w].

Interpretation is computed by sparse tensor-network contraction.  Every
node contributes a tensor with one leg per incident edge (spiders and the
Hadamard box are leg-symmetric, so unordered edges suffice); every edge is
a summation index; boundary ids name the free legs.  Row indices of the
resulting matrix run over the outputs (first output most significant) and
column indices over the inputs.
"""

from __future__ import annotations

from . import diagram as dg
from .diagram import Diagram
from .matrix import ExactMatrix
from .ring import INV_SQRT2, ONE, ZERO, HALF, RingScalar

# A sparse tensor: legs is a tuple of edge indices, data maps assignments
# (tuples of 0/1 values, one per leg) to nonzero ring elements.
_Tensor = tuple[tuple[int, ...], dict[tuple[int, ...], RingScalar]]


def _spider_tensor(kind: str, phase: int, legs: tuple[int, ...], j: int) -> _Tensor:
    k = (phase * j) % 8
    omega = RingScalar.omega_power(k)
    n = len(legs)
    if kind == dg.Z:
        data = {(0,) * n: ONE}
        top = (1,) * n
        data[top] = data.get(top, ZERO) + omega
        if data[top].is_zero():
            del data[top]
        return legs, data
    # X spider: entries <x...|X-spider|...> = (|+..><+..| + w^k |-..><-..|)
    # in the computational basis: (1 + w^k * (-1)^parity) / sqrt(2)^n
    scale = RingScalar.sqrt2_power(-n)
    data = {}
    for bits in _all_bits(n):
        parity = sum(bits) & 1
        val = (ONE - omega if parity else ONE + omega) * scale
        if not val.is_zero():
            data[bits] = val
    return legs, data


def _all_bits(n: int):
    if n == 0:
        yield ()
        return
    for rest in _all_bits(n - 1):
        yield (0,) + rest
        yield (1,) + rest


def _node_tensor(d: Diagram, v: int, legs: tuple[int, ...], j: int) -> _Tensor:
    kind, phase = d.nodes[v]
    if kind in dg.SPIDER_KINDS:
        return _spider_tensor(kind, phase, legs, j)
    if kind == dg.H:
        data = {
            (0, 0): INV_SQRT2,
            (0, 1): INV_SQRT2,
            (1, 0): INV_SQRT2,
            (1, 1): -INV_SQRT2,
        }
        return legs, data
    if kind == dg.STAR:
        return (), {(): HALF}
    raise dg.DiagramError(f"cannot interpret node kind {kind}")


def _trace_repeated(t: _Tensor) -> _Tensor:
    """Contract legs that appear twice within one tensor (self-loops)."""
    legs, data = t
    seen: dict[int, int] = {}
    dup = None
    for i, leg in enumerate(legs):
        if leg in seen:
            dup = (seen[leg], i)
            break
        seen[leg] = i
    if dup is None:
        return t
    i, k = dup
    new_legs = tuple(l for idx, l in enumerate(legs) if idx not in (i, k))
    new_data: dict[tuple[int, ...], RingScalar] = {}
    for assign, val in data.items():
        if assign[i] != assign[k]:
            continue
        key = tuple(x for idx, x in enumerate(assign) if idx not in (i, k))
        acc = new_data.get(key, ZERO) + val
        if acc.is_zero():
            new_data.pop(key, None)
        else:
            new_data[key] = acc
    return _trace_repeated((new_legs, new_data))


def _contract_pair(t1: _Tensor, t2: _Tensor) -> _Tensor:
    legs1, data1 = t1
    legs2, data2 = t2
    shared = [l for l in legs1 if l in legs2]
    keep1 = [i for i, l in enumerate(legs1) if l not in shared]
    keep2 = [i for i, l in enumerate(legs2) if l not in shared]
    pos1 = {l: i for i, l in enumerate(legs1)}
    pos2 = {l: i for i, l in enumerate(legs2)}
    out_legs = tuple(legs1[i] for i in keep1) + tuple(legs2[i] for i in keep2)
    out: dict[tuple[int, ...], RingScalar] = {}
    # bucket t2 entries by shared-leg assignment
    buckets: dict[tuple[int, ...], list[tuple[tuple[int, ...], RingScalar]]] = {}
    for assign, val in data2.items():
        key = tuple(assign[pos2[l]] for l in shared)
        buckets.setdefault(key, []).append(
            (tuple(assign[i] for i in keep2), val))
    for assign, val in data1.items():
        key = tuple(assign[pos1[l]] for l in shared)
        rest1 = tuple(assign[i] for i in keep1)
        for rest2, val2 in buckets.get(key, ()):
            full = rest1 + rest2
            acc = out.get(full, ZERO) + val * val2
            if acc.is_zero():
                out.pop(full, None)
            else:
                out[full] = acc
    return out_legs, out


def _contract(d: Diagram, j: int = 1) -> tuple[dict[tuple[int, ...], RingScalar], list[int]]:
    """Contract all internal edges.

    Returns a sparse map from assignments of the diagram's boundary slots
    (inputs then outputs, in boundary-list order) to ring values, plus the
    list of edge indices serving each boundary slot.
    """
    d.validate()
    boundary = list(d.inputs) + list(d.outputs)
    slot_edge: list[int] = [-1] * len(boundary)
    node_legs: dict[int, list[int]] = {v: [] for v in d.nodes}
    for idx, (a, b) in enumerate(d.edges):
        for v in (a, b):
            if v in node_legs:
                node_legs[v].append(idx)
        for s, bid in enumerate(boundary):
            if a == bid or b == bid:
                slot_edge[s] = idx

    tensors: list[_Tensor] = []
    for v in sorted(d.nodes):
        t = _node_tensor(d, v, tuple(node_legs[v]), j)
        tensors.append(_trace_repeated(t))
    # bare wires (boundary-to-boundary edges) are identity tensors
    bids = d.boundary_ids()
    for idx, (a, b) in enumerate(d.edges):
        if a in bids and b in bids:
            tensors.append(((idx,), {(0,): ONE, (1,): ONE}))
    # contract greedily: repeatedly merge the pair sharing an edge that
    # minimizes the resulting tensor rank
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
        t = _contract_pair(tensors[i], tensors[k])
        tensors = [x for idx, x in enumerate(tensors) if idx not in (i, k)]
        tensors.append(_trace_repeated(t))

    # outer product of the disconnected remainder
    total: _Tensor = ((), {(): ONE})
    for t in tensors:
        legs1, data1 = total
        legs2, data2 = t
        merged: dict[tuple[int, ...], RingScalar] = {}
        for a1, v1 in data1.items():
            if v1.is_zero():
                continue
            for a2, v2 in data2.items():
                val = v1 * v2
                if not val.is_zero():
                    merged[a1 + a2] = val
        total = (legs1 + legs2, merged)

    legs, data = total
    leg_pos = {l: i for i, l in enumerate(legs)}
    out: dict[tuple[int, ...], RingScalar] = {}
    for assign, val in data.items():
        # a boundary-boundary edge serves two slots with one shared index
        key = tuple(assign[leg_pos[e]] for e in slot_edge)
        acc = out.get(key, ZERO) + val
        if acc.is_zero():
            out.pop(key, None)
        else:
            out[key] = acc
    return out, slot_edge


def interpret_j(d: Diagram, j: int) -> ExactMatrix:
    """The alternative interpretation multiplying all phases by odd j."""
    if j % 2 == 0:
        raise ValueError("the alternative interpretation requires odd j")
    if d.toy:
        raise dg.DiagramError("toy diagrams have a relational semantics")
    n_in, n_out = len(d.inputs), len(d.outputs)
    sparse, _ = _contract(d, j)
    m = ExactMatrix.zeros(1 << n_out, 1 << n_in)
    for assign, val in sparse.items():
        col = 0
        for b in assign[:n_in]:
            col = (col << 1) | b
        row = 0
        for b in assign[n_in:]:
            row = (row << 1) | b
        m.entries[row][col] = m.entries[row][col] + val
    return m


def interpret(d: Diagram) -> ExactMatrix:
    return interpret_j(d, 1)


def interpretations_equal(d1: Diagram, d2: Diagram, j: int = 1) -> bool:
    """Exact equality of interpretations without materializing matrices."""
    if len(d1.inputs) != len(d2.inputs) or len(d1.outputs) != len(d2.outputs):
        return False
    s1, _ = _contract(d1, j)
    s2, _ = _contract(d2, j)
    return s1 == s2
