"""Graph states with local Cliffords: normalization and equality decisions.

A ``GsLc`` value represents  scalar * (U_1 x ... x U_n) |G>  where |G> is
the normalized graph state of a simple graph and each U_q is a canonical
single-qubit Clifford matrix (see ``clifford``).  All transformations keep
that interpretation exactly; whenever an operator is replaced by its
canonical class representative, the leftover w^k ratio is multiplied into
the scalar.

Local complementation uses the exact relation

    |G * v> = w^(1-d) * exp(i pi X_v/4)^dagger ... (see ``local_complement``)

with d the degree of v, so no floating point or phase guesswork enters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import clifford as cl
from . import diagram as dg
from .diagram import Diagram, FragmentViolation
from .matrix import ExactMatrix
from .ring import HALF, ONE, SQRT2, RingScalar
from .scalars import scalar_diagram, zero_nf_diagram


class ZeroDiagram(ValueError):
    pass


class EdgeRequired(ValueError):
    pass


_X_PAULI = ExactMatrix.from_rows(
    [[RingScalar.zero(), ONE], [ONE, RingScalar.zero()]])
_Z_PAULI = ExactMatrix.from_rows(
    [[ONE, RingScalar.zero()], [RingScalar.zero(), -ONE]])
_H_REAL = ExactMatrix.from_rows(
    [[cl.INV_SQRT2, cl.INV_SQRT2], [cl.INV_SQRT2, -cl.INV_SQRT2]])


def _zphase(k: int) -> ExactMatrix:
    return cl.phase_shift_matrix("Z", k % 8)


@dataclass
class GsLc:
    order: list[int] = field(default_factory=list)
    adj: dict[int, set[int]] = field(default_factory=dict)
    vops: dict[int, int] = field(default_factory=dict)
    scalar: RingScalar = field(default_factory=RingScalar.one)
    zero_arity: int | None = None

    @property
    def n(self) -> int:
        return len(self.order) if self.zero_arity is None else self.zero_arity

    @property
    def zero(self) -> bool:
        return self.zero_arity is not None

    def copy(self) -> "GsLc":
        return GsLc(list(self.order), {v: set(s) for v, s in self.adj.items()},
                    dict(self.vops), self.scalar, self.zero_arity)

    def add_vertex(self) -> int:
        v = max(self.order, default=-1) + 1
        self.order.append(v)
        self.adj[v] = set()
        self.vops[v] = cl.IDX_I
        return v

    def remove_vertex(self, v: int) -> None:
        for u in self.adj[v]:
            self.adj[u].discard(v)
        del self.adj[v]
        del self.vops[v]
        self.order.remove(v)

    def toggle_edge(self, a: int, b: int) -> None:
        if b in self.adj[a]:
            self.adj[a].discard(b)
            self.adj[b].discard(a)
        else:
            self.adj[a].add(b)
            self.adj[b].add(a)

    def mark_zero(self) -> None:
        self.zero_arity = len(self.order)
        self.order = []
        self.adj = {}
        self.vops = {}
        self.scalar = RingScalar.zero()

    # -- exact vertex-operator bookkeeping --------------------------------

    def set_vop_matrix(self, q: int, m: ExactMatrix) -> None:
        c, rho = cl.class_of(m)
        self.vops[q] = c
        self.scalar = self.scalar * rho

    def pre_apply(self, q: int, m: ExactMatrix) -> None:
        """Multiply the vertex operator from below (applied first)."""
        self.set_vop_matrix(q, cl.c1_matrix(self.vops[q]) @ m)

    def post_apply(self, q: int, m: ExactMatrix) -> None:
        """Multiply the vertex operator from above (applied last)."""
        self.set_vop_matrix(q, m @ cl.c1_matrix(self.vops[q]))

    # -- equivalence transformations --------------------------------------

    def local_complement(self, v: int) -> None:
        """Complement the neighbourhood of v; the state is unchanged."""
        nbrs = sorted(self.adj[v])
        d = len(nbrs)
        self.scalar = self.scalar * RingScalar.omega_power(d - 1)
        self.pre_apply(v, cl.SQRT_IX)
        for u in nbrs:
            self.pre_apply(u, cl.SQRT_MINUS_IZ)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                self.toggle_edge(a, b)

    def fixpoint(self, v: int) -> None:
        self.local_complement(v)
        self.local_complement(v)

    def local_complement_edge(self, v: int, w: int) -> None:
        if w not in self.adj[v]:
            raise EdgeRequired(f"{{{v},{w}}} is not an edge")
        self.local_complement(v)
        self.local_complement(w)
        self.local_complement(v)


def local_complement(g: GsLc, v: int) -> GsLc:
    out = g.copy()
    out.local_complement(v)
    return out


def fixpoint(g: GsLc, v: int) -> GsLc:
    out = g.copy()
    out.fixpoint(v)
    return out


def local_complement_edge(g: GsLc, v: int, w: int) -> GsLc:
    out = g.copy()
    out.local_complement_edge(v, w)
    return out


# -- clearing tables -------------------------------------------------------
#
# Vertex operators are steered by two moves: a local complementation about
# the vertex itself multiplies its operator by sqrt(iX) from below ("A"),
# one about a fixed neighbour multiplies by sqrt(-iZ) ("B").  The tables
# give a shortest move word into a target set of classes.


def _steer_table(target: frozenset[int]) -> dict[int, tuple[str, ...]]:
    table: dict[int, tuple[str, ...]] = {c: () for c in target}
    frontier = list(target)
    while frontier:
        nxt = []
        for c in frontier:
            for op, m in (("A", cl.SQRT_IX), ("B", cl.SQRT_MINUS_IZ)):
                # pre(c2, m) lands on c: c2 = class(M(c) @ m^-1)
                c2 = cl.class_of(cl.c1_matrix(c) @ m.dagger())[0]
                if c2 not in table:
                    table[c2] = (op,) + table[c]
                    nxt.append(c2)
        frontier = nxt
    if len(table) != 24:
        raise AssertionError("steering moves do not reach every class")
    return table


_BASIS_EFFECT = frozenset(
    c for c in range(24)
    if any(x.is_zero() for x in cl.effect_after(c)))
_DIAGONALISH = frozenset(
    c for c in range(24) if cl.is_diagonal_or_antidiagonal(c))

_EFFECT_TABLE = _steer_table(_BASIS_EFFECT)
_DIAG_TABLE = _steer_table(_DIAGONALISH)


def _steer(g: GsLc, q: int, table: dict[int, tuple[str, ...]],
           avoid: frozenset[int] = frozenset()) -> None:
    word = table[g.vops[q]]
    if not word:
        return
    partner = min(g.adj[q] - avoid)
    for op in word:
        g.local_complement(q if op == "A" else partner)


# -- generator application -------------------------------------------------


def gslc_add_qubit(g: GsLc) -> int:
    """Apply the one-legged green state (value sqrt(2)|+>)."""
    v = g.add_vertex()
    g.scalar = g.scalar * SQRT2
    return v


def gslc_apply_local(g: GsLc, q: int, m: ExactMatrix) -> None:
    g.post_apply(q, m)


def gslc_scalar_mul(g: GsLc, c: RingScalar) -> None:
    g.scalar = g.scalar * c
    if g.scalar.is_zero():
        g.mark_zero()


def _project_basis(g: GsLc, q: int, x: int) -> None:
    """Project the bare graph qubit q onto <x| (vop already absorbed)."""
    for u in sorted(g.adj[q]):
        if x:
            g.pre_apply(u, _Z_PAULI)
    g.remove_vertex(q)
    g.scalar = g.scalar * cl.INV_SQRT2


def gslc_post_select(g: GsLc, q: int) -> None:
    """Apply the one-legged green effect (<0| + <1|) to qubit q."""
    if not g.adj[q]:
        m = cl.c1_matrix(g.vops[q])
        amp = (m.entries[0][0] + m.entries[0][1]
               + m.entries[1][0] + m.entries[1][1]) * cl.INV_SQRT2
        g.remove_vertex(q)
        gslc_scalar_mul(g, amp)
        return
    _steer(g, q, _EFFECT_TABLE)
    e0, e1 = cl.effect_after(g.vops[q])
    x = 1 if e0.is_zero() else 0
    g.scalar = g.scalar * (e1 if x else e0)
    _project_basis(g, q, x)


def _classify_state(g: GsLc, psi0: RingScalar, psi1: RingScalar, q: int) -> bool:
    """Install a single-qubit state psi on the fresh isolated vertex q.

    Returns False if psi is exactly zero (the caller must zero out).
    """
    if psi0.is_zero() and psi1.is_zero():
        return False
    if psi1.is_zero():
        g.set_vop_matrix(q, _H_REAL)
        gslc_scalar_mul(g, psi0)
        return True
    if psi0.is_zero():
        g.set_vop_matrix(q, _X_PAULI @ _H_REAL)
        gslc_scalar_mul(g, psi1)
        return True
    ratio = psi1 * psi0.inverse()
    unit = ratio.as_unit_form()
    if unit is None or unit[1] != 0 or unit[0] % 2:
        raise FragmentViolation("state outside the stabilizer fragment")
    g.vops[q] = cl.zphase_class(unit[0])
    gslc_scalar_mul(g, psi0 * SQRT2)
    return True


def gslc_split(g: GsLc, q: int) -> int:
    """Apply the green splitter (1 wire in, 2 out) to qubit q."""
    if not g.adj[q]:
        m = cl.c1_matrix(g.vops[q])
        psi0 = (m.entries[0][0] + m.entries[0][1]) * cl.INV_SQRT2
        psi1 = (m.entries[1][0] + m.entries[1][1]) * cl.INV_SQRT2
        b = g.add_vertex()
        if not psi0.is_zero() and not psi1.is_zero():
            # a phased pair: re-attach as an edge with a Hadamard
            ratio = psi1 * psi0.inverse()
            unit = ratio.as_unit_form()
            if unit is None or unit[1] != 0 or unit[0] % 2:
                raise FragmentViolation("state outside the stabilizer fragment")
            g.toggle_edge(q, b)
            g.vops[q] = cl.zphase_class(unit[0])
            g.set_vop_matrix(b, _H_REAL)
            gslc_scalar_mul(g, psi0 * SQRT2)
        elif psi1.is_zero() and not psi0.is_zero():
            g.set_vop_matrix(q, _H_REAL)
            g.set_vop_matrix(b, _H_REAL)
            gslc_scalar_mul(g, psi0)
        elif psi0.is_zero() and not psi1.is_zero():
            g.set_vop_matrix(q, _X_PAULI @ _H_REAL)
            g.set_vop_matrix(b, _X_PAULI @ _H_REAL)
            gslc_scalar_mul(g, psi1)
        else:
            g.mark_zero()
            return b
        return b
    _steer(g, q, _DIAG_TABLE)
    m = cl.c1_matrix(g.vops[q])
    antidiag = m.entries[0][0].is_zero()
    b = g.add_vertex()
    g.toggle_edge(q, b)
    mat = (_X_PAULI @ _H_REAL) if antidiag else _H_REAL
    g.set_vop_matrix(b, mat)
    return b


def gslc_join(g: GsLc, a: int, b: int) -> int | None:
    """Apply the green merger (2 wires in, 1 out) to qubits a and b.

    Returns the merged qubit id, or None if the state became zero.
    """
    if a == b:
        raise ValueError("join needs two distinct qubits")
    # steer both operand operators into the (anti)diagonal group; the dirt
    # each steering deposits on the other operand is diagonal, so this
    # stabilizes after at most one pass per side
    guard = 8
    while True:
        na = g.adj[a] - {b}
        nb = g.adj[b] - {a}
        if na and g.vops[a] not in _DIAGONALISH:
            _steer(g, a, _DIAG_TABLE, avoid=frozenset((b,)))
            guard -= 1
        elif nb and g.vops[b] not in _DIAGONALISH:
            _steer(g, b, _DIAG_TABLE, avoid=frozenset((a,)))
            guard -= 1
        else:
            break
        if guard < 0:
            raise AssertionError("join steering did not stabilize")

    if not na and not nb:
        ma = cl.c1_matrix(g.vops[a])
        mb = cl.c1_matrix(g.vops[b])
        if b in g.adj[a]:
            # amplitudes <yy| (Ma x Mb) CZ |++> for y = 0, 1
            amps = []
            for y in (0, 1):
                acc = RingScalar.zero()
                for wa in (0, 1):
                    for wb in (0, 1):
                        term = ma.entries[y][wa] * mb.entries[y][wb]
                        acc = acc + (-term if wa and wb else term)
                amps.append(acc * HALF)
            psi0, psi1 = amps
        else:
            psi0 = (ma.entries[0][0] + ma.entries[0][1]) * \
                (mb.entries[0][0] + mb.entries[0][1]) * HALF
            psi1 = (ma.entries[1][0] + ma.entries[1][1]) * \
                (mb.entries[1][0] + mb.entries[1][1]) * HALF
        g.remove_vertex(a)
        g.remove_vertex(b)
        m = g.add_vertex()
        if not _classify_state(g, psi0, psi1, m):
            g.mark_zero()
            return None
        return m

    if not na or not nb:
        keep, drop = (b, a) if not na else (a, b)
        # The merge leaves an operator on ``keep`` with a single nonzero
        # entry per column:  Q[y^x][y] = Mk[y^x][y] * <y^x| Md Z^(theta*y) |+>
        # where x marks an antidiagonal Mk and theta the operand edge.
        mk = cl.c1_matrix(g.vops[keep])
        x = 1 if mk.entries[0][0].is_zero() else 0
        theta = 1 if drop in g.adj[keep] else 0
        md = cl.c1_matrix(g.vops[drop])
        entries = []
        for y in (0, 1):
            z = y ^ x
            sgn = -ONE if (theta and y) else ONE
            w = (md.entries[z][0] + sgn * md.entries[z][1]) * cl.INV_SQRT2
            entries.append(mk.entries[z][y] * w)
        q0, q1 = entries
        if drop in g.adj[keep]:
            g.toggle_edge(keep, drop)
        g.remove_vertex(drop)
        if q0.is_zero() and q1.is_zero():
            g.mark_zero()
            return None
        if not q0.is_zero() and not q1.is_zero():
            qmat = ExactMatrix.zeros(2, 2)
            qmat.entries[x][0] = q0
            qmat.entries[1 ^ x][1] = q1
            g.set_vop_matrix(keep, qmat)
            return keep
        # a projector q * |y^x><y| : post-select, then re-prepare
        y = 0 if q1.is_zero() else 1
        z = y ^ x
        g.scalar = g.scalar * (q0 if y == 0 else q1)
        g.vops[keep] = cl.IDX_I
        _project_basis(g, keep, y)
        m = g.add_vertex()
        g.set_vop_matrix(m, (_X_PAULI @ _H_REAL) if z else _H_REAL)
        if g.scalar.is_zero():
            g.mark_zero()
            return None
        return m

    # both operands keep non-operand neighbours: a genuine graph merge
    ma = cl.c1_matrix(g.vops[a])
    mb = cl.c1_matrix(g.vops[b])
    xa = 1 if ma.entries[0][0].is_zero() else 0
    xb = 1 if mb.entries[0][0].is_zero() else 0
    da = ma @ _X_PAULI if xa else ma
    db = mb @ _X_PAULI if xb else mb
    dprime = ExactMatrix.from_rows([
        [da.entries[0][0] * db.entries[0][0], RingScalar.zero()],
        [RingScalar.zero(), da.entries[1][1] * db.entries[1][1]],
    ])
    t = xa ^ xb
    theta = 1 if b in g.adj[a] else 0
    if t:
        for u in sorted(nb):
            g.pre_apply(u, _Z_PAULI)
    new_nbrs = na ^ nb
    g.remove_vertex(a)
    g.remove_vertex(b)
    m = g.add_vertex()
    for u in sorted(new_nbrs):
        g.toggle_edge(m, u)
    mat = dprime
    if xa:
        mat = mat @ _X_PAULI
    if ((t + 1) * theta) % 2:
        mat = mat @ _Z_PAULI
    g.set_vop_matrix(m, mat)
    g.scalar = g.scalar * cl.INV_SQRT2
    if g.scalar.is_zero():
        g.mark_zero()
        return None
    return m


# -- rendering --------------------------------------------------------------


def graph_state_diagram(adj: list[list[int]]) -> Diagram:
    """The normalized graph state: one green vertex node per qubit with a
    star + inner-product normalizer, one Hadamard per edge with an
    inner-product normalizer."""
    n = len(adj)
    d = Diagram()
    verts = []
    for _ in range(n):
        v = d.add_node(dg.Z, 0)
        verts.append(v)
        d.add_node(dg.STAR)
        _ip_pair(d)
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i][j]:
                h = d.add_node(dg.H)
                d.add_edge(verts[i], h)
                d.add_edge(h, verts[j])
                _ip_pair(d)
    for v in verts:
        b = d.add_boundary(output=True)
        d.add_edge(v, b)
    return d


def _ip_pair(d: Diagram) -> None:
    gnode = d.add_node(dg.Z, 0)
    rnode = d.add_node(dg.X, 0)
    d.add_edge(gnode, rnode)


def gslc_to_diagram(g: GsLc) -> Diagram:
    """Render as a state diagram: graph state + vertex-operator words +
    canonical scalar subdiagram."""
    if g.zero:
        return zero_nf_diagram(0, g.zero_arity)
    pos = {v: i for i, v in enumerate(g.order)}
    adj = [[0] * g.n for _ in range(g.n)]
    for v, nbrs in g.adj.items():
        for u in nbrs:
            adj[pos[v]][pos[u]] = 1
    d = Diagram()
    verts = []
    for _ in range(g.n):
        v = d.add_node(dg.Z, 0)
        verts.append(v)
        d.add_node(dg.STAR)
        _ip_pair(d)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if adj[i][j]:
                h = d.add_node(dg.H)
                d.add_edge(verts[i], h)
                d.add_edge(h, verts[j])
                _ip_pair(d)
    for q in g.order:
        wire_end = verts[pos[q]]
        for kind, k in cl.c1_word(g.vops[q]):
            node = d.add_node(dg.Z if kind == "Z" else dg.X, k)
            d.add_edge(wire_end, node)
            wire_end = node
        b = d.add_boundary(output=True)
        d.add_edge(wire_end, b)
    return dg.compose_par(d, scalar_diagram(g.scalar))


def nonscalar_node_count(d: Diagram) -> int:
    bids = d.boundary_ids()
    reach: set[int] = set()
    frontier = list(bids)
    adj: dict[int, set[int]] = {}
    for a, b in d.edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    while frontier:
        v = frontier.pop()
        for u in adj.get(v, ()):
            if u not in reach:
                reach.add(u)
                frontier.append(u)
    return len(reach & set(d.nodes))


# -- folding a diagram into GS-LC form --------------------------------------


def diagram_to_gslc(d: Diagram) -> GsLc:
    """Bend, decompose into basic generators, and fold one generator at a
    time onto a growing GS-LC value.  Aborts to the zero form as soon as
    the tracked scalar vanishes."""
    d.require_stabilizer()
    bent = dg.bend_inputs(d)
    dec = dg.decompose_to_generators(bent)
    g = GsLc()
    n_out = len(bent.outputs)
    wire_q: dict[int, int] = {}
    boundary_q: dict[int, int] = {}
    bids = dec.boundary_ids()

    def fail_zero() -> GsLc:
        z = GsLc()
        z.zero_arity = n_out
        z.scalar = RingScalar.zero()
        return z

    # bare cups between two boundaries
    for idx, (x, y) in enumerate(dec.edges):
        if x in bids and y in bids:
            q = gslc_add_qubit(g)
            q2 = gslc_split(g, q)
            boundary_q[x] = q
            boundary_q[y] = q2

    for v in sorted(dec.nodes):
        kind, phase = dec.nodes[v]
        ready: list[int] = []
        waiting: list[int] = []
        for idx, (x, y) in enumerate(dec.edges):
            if v not in (x, y):
                continue
            (ready if idx in wire_q else waiting).append(idx)
        if kind == dg.STAR:
            gslc_scalar_mul(g, HALF)
        elif kind == dg.Z:
            if not ready:
                q = gslc_add_qubit(g)
            else:
                q = wire_q.pop(ready[0])
                for idx in ready[1:]:
                    q2 = wire_q.pop(idx)
                    q = gslc_join(g, q, q2)
                    if q is None:
                        return fail_zero()
            if phase:
                gslc_apply_local(g, q, _zphase(phase))
            if not waiting:
                gslc_post_select(g, q)
            else:
                wire_q[waiting[0]] = q
                for idx in waiting[1:]:
                    if g.zero:
                        break
                    wire_q[idx] = gslc_split(g, q)
            if g.zero:
                return fail_zero()
        elif kind == dg.H:
            if len(ready) == 0:
                q = gslc_add_qubit(g)
                q2 = gslc_split(g, q)
                gslc_apply_local(g, q, _H_REAL)
                wire_q[waiting[0]] = q
                wire_q[waiting[1]] = q2
            elif len(ready) == 1:
                q = wire_q.pop(ready[0])
                gslc_apply_local(g, q, _H_REAL)
                wire_q[waiting[0]] = q
            else:
                q = wire_q.pop(ready[0])
                q2 = wire_q.pop(ready[1])
                gslc_apply_local(g, q, _H_REAL)
                q = gslc_join(g, q, q2)
                if q is None:
                    return fail_zero()
                gslc_post_select(g, q)
            if g.zero:
                return fail_zero()
        else:
            raise dg.DiagramError(f"unexpected {kind} node after decomposition")

    for idx, (x, y) in enumerate(dec.edges):
        if idx in wire_q:
            end = x if x in bids else y
            boundary_q[end] = wire_q[idx]
    g.order = [boundary_q[b] for b in bent.outputs]
    if len(g.order) != len(g.adj):
        raise dg.DiagramError("fold left internal wires open")
    return g


# -- reduced GS-LC form ------------------------------------------------------


def reduce_to_rgslc(g: GsLc) -> GsLc:
    """Bring all vertex operators into the six-element set R, then clear
    adjacent red pairs; the interpretation is unchanged."""
    if g.zero:
        raise ZeroDiagram("zero diagrams reduce to the zero normal form")
    out = g.copy()
    guard = 16 * (len(out.order) + 2) ** 2
    while True:
        dirty = [v for v in out.order if out.vops[v] not in cl.R_SET]
        if not dirty:
            break
        out.local_complement(dirty[0])
        guard -= 1
        if guard < 0:
            raise AssertionError("vertex-operator reduction did not terminate")
    guard = 4 * (len(out.order) + 2)
    while True:
        pair = _adjacent_red_pair(out)
        if pair is None:
            break
        _clear_red_pair(out, *pair)
        guard -= 1
        if guard < 0:
            raise AssertionError("red-pair clearing did not terminate")
    return out


def _adjacent_red_pair(g: GsLc) -> tuple[int, int] | None:
    for v in g.order:
        if g.vops[v] in cl.R_SET and cl.red_bearing(g.vops[v]):
            for u in sorted(g.adj[v]):
                if g.vops[u] in cl.R_SET and cl.red_bearing(g.vops[u]):
                    return (v, u) if v < u else (u, v)
    return None


def _restore_r(g: GsLc, focus: tuple[int, ...]) -> bool:
    """Fix the focused vertices into R with at most one fixpoint each."""
    for w in focus:
        if g.vops[w] not in cl.R_SET:
            g.fixpoint(w)
        if g.vops[w] not in cl.R_SET:
            return False
    return all(g.vops[v] in cl.R_SET for v in g.order)


def _clear_red_pair(g: GsLc, u: int, v: int) -> None:
    for moves in (("edge",), ("lc2",), ("lc1",),
                  ("fp0", "edge"), ("fp1", "edge")):
        trial = g.copy()
        for mv in moves:
            if mv == "edge":
                trial.local_complement_edge(u, v)
            elif mv == "lc1":
                trial.local_complement(u)
                trial.local_complement(v)
            elif mv == "lc2":
                trial.local_complement(v)
                trial.local_complement(u)
            elif mv == "fp0":
                trial.fixpoint(u)
            else:
                trial.fixpoint(v)
        if not _restore_r(trial, (u, v)):
            continue
        if cl.red_bearing(trial.vops[u]) or cl.red_bearing(trial.vops[v]):
            continue
        g.order = trial.order
        g.adj = trial.adj
        g.vops = trial.vops
        g.scalar = trial.scalar
        return
    raise AssertionError("no transformation clears the adjacent red pair")


# -- pair simplification and equality ---------------------------------------


def _red_flags(g: GsLc) -> dict[int, bool]:
    return {v: cl.red_bearing(g.vops[v]) for v in g.order}


def simplify_pair(g1: GsLc, g2: GsLc) -> tuple[GsLc, GsLc]:
    """Pair up red vertex operators between two rGS-LC diagrams."""
    if g1.n != g2.n:
        raise ValueError("qubit counts differ")
    a, b = g1.copy(), g2.copy()
    guard = 4 * (a.n + 2)
    while True:
        off = _offending_pair(a, b)
        if off is None:
            return a, b
        p, q, which = off
        target = a if which == 0 else b
        red = p if _red_flags(target)[p] else q
        green = q if red == p else p
        _transfer_red(target, red, green)
        guard -= 1
        if guard < 0:
            raise AssertionError("pair simplification did not terminate")


def _offending_pair(a: GsLc, b: GsLc) -> tuple[int, int, int] | None:
    ra, rb = _red_flags(a), _red_flags(b)
    pos_a = {v: i for i, v in enumerate(a.order)}
    pos_b = {v: i for i, v in enumerate(b.order)}
    for i, p in enumerate(a.order):
        for j, q in enumerate(a.order):
            if i == j:
                continue
            pb, qb = b.order[i], b.order[j]
            if ra[p] and not rb[pb] and rb[qb] and not ra[q]:
                if q in a.adj[p]:
                    return p, q, 0
                if qb in b.adj[pb]:
                    return pb, qb, 1
    return None


def _transfer_red(g: GsLc, red: int, green: int) -> None:
    """Move the red vertex operator from ``red`` to its neighbour."""
    for moves in (("edge",), ("lc_gr",), ("lc_rg",),
                  ("fp_r", "edge"), ("fp_g", "edge")):
        trial = g.copy()
        for mv in moves:
            if mv == "edge":
                trial.local_complement_edge(red, green)
            elif mv == "lc_gr":
                trial.local_complement(green)
                trial.local_complement(red)
            elif mv == "lc_rg":
                trial.local_complement(red)
                trial.local_complement(green)
            elif mv == "fp_r":
                trial.fixpoint(red)
            else:
                trial.fixpoint(green)
        if not _restore_r(trial, (red, green)):
            continue
        flags = _red_flags(trial)
        if flags[red] or not flags[green]:
            continue
        base = _red_flags(g)
        if any(flags[w] != base[w] for w in g.order if w not in (red, green)):
            continue
        if _adjacent_red_pair(trial) is not None:
            continue
        g.order = trial.order
        g.adj = trial.adj
        g.vops = trial.vops
        g.scalar = trial.scalar
        return
    raise AssertionError("no transformation transfers the red operator")


# -- the decision procedure --------------------------------------------------


class VerdictKind(Enum):
    EQUAL = "equal"
    PROPORTIONAL = "proportional"
    UNEQUAL = "unequal"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    ratio: RingScalar | None = None

    @property
    def equal(self) -> bool:
        return self.kind is VerdictKind.EQUAL

    @property
    def proportional(self) -> bool:
        return self.kind in (VerdictKind.EQUAL, VerdictKind.PROPORTIONAL)

    def __str__(self) -> str:
        if self.kind is VerdictKind.PROPORTIONAL:
            return f"proportional ratio={self.ratio}"
        return self.kind.value


def _identical(a: GsLc, b: GsLc) -> bool:
    pos_a = {v: i for i, v in enumerate(a.order)}
    pos_b = {v: i for i, v in enumerate(b.order)}
    if [a.vops[v] for v in a.order] != [b.vops[v] for v in b.order]:
        return False
    ea = {frozenset((pos_a[u], pos_a[v])) for u in a.adj for v in a.adj[u]}
    eb = {frozenset((pos_b[u], pos_b[v])) for u in b.adj for v in b.adj[u]}
    return ea == eb


def equal_stabilizer(d1: Diagram, d2: Diagram) -> Verdict:
    """Complete equality decision for stabilizer diagrams."""
    if (len(d1.inputs) != len(d2.inputs)
            or len(d1.outputs) != len(d2.outputs)):
        return Verdict(VerdictKind.UNEQUAL)
    g1 = diagram_to_gslc(d1)
    g2 = diagram_to_gslc(d2)
    if g1.zero and g2.zero:
        return Verdict(VerdictKind.EQUAL)
    if g1.zero or g2.zero:
        return Verdict(VerdictKind.UNEQUAL)
    r1 = reduce_to_rgslc(g1)
    r2 = reduce_to_rgslc(g2)
    s1, s2 = simplify_pair(r1, r2)
    if not _identical(s1, s2):
        return Verdict(VerdictKind.UNEQUAL)
    if s1.scalar == s2.scalar:
        return Verdict(VerdictKind.EQUAL)
    ratio = s1.scalar * s2.scalar.inverse()
    return Verdict(VerdictKind.PROPORTIONAL, ratio)
