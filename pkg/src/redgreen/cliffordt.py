"""A unique normal form for single-qubit Clifford+T words.

Every word over pi/4-granular phase shifts and Hadamard boxes normalizes,
up to a nonzero scalar, to either a pure Clifford operator or

    W . V_n ... V_1 . U

where U = T C with C in the 24-element Clifford group, each V_i is one of
the two T-bearing syllables {T R, T S R} (R the red pi/2 shift), and W is
one of three coset representatives {I, H, S H}.  The syllable count is the
T-count.  Normalization absorbs generators one at a time from the bottom;
the absorption steps use small product tables that are derived from exact
matrices at import time.

A matrix-free certificate that no non-Clifford normal form is the
identity tracks the stabilizer direction of the evolving state as integer
combinations (x1 + x2 sqrt2, y1 + y2 sqrt2, z1 + z2 sqrt2)/sqrt(2)^m.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import clifford as cl
from . import diagram as dg
from .diagram import Diagram
from .matrix import ExactMatrix
from .ring import RingScalar

Token = tuple[str, int]  # ("Z", k) | ("X", k) | ("H", 0)


class WordError(ValueError):
    pass


def parse_word(text: str) -> list[Token]:
    """Parse whitespace-separated tokens Z<k>, X<k>, H."""
    out: list[Token] = []
    for raw in text.split():
        t = raw.strip().upper()
        if t == "H":
            out.append(("H", 0))
        elif t[0] in ("Z", "X") and t[1:].lstrip("-").isdigit():
            out.append((t[0], int(t[1:]) % 8))
        else:
            raise WordError(f"unrecognized token {raw!r}")
    return out


def format_word(word: list[Token]) -> str:
    return " ".join("H" if k == "H" else f"{k}{v}" for k, v in word)


def word_to_diagram(word: list[Token]) -> Diagram:
    d = dg.wire()
    for kind, k in word:
        gate = dg.hadamard() if kind == "H" else dg.spider(
            dg.Z if kind == "Z" else dg.X, k, 1, 1)
        d = dg.compose_seq(d, gate)
    return d


def diagram_to_word(d: Diagram) -> list[Token]:
    """Extract the generator word from a line diagram (1 input, 1 output,
    all nodes of degree 2 forming a single chain)."""
    if len(d.inputs) != 1 or len(d.outputs) != 1:
        raise WordError("line diagrams have one input and one output")
    word: list[Token] = []
    prev = d.inputs[0]
    cur = None
    edges = list(d.edges)
    for a, b in edges:
        if prev in (a, b):
            cur = b if a == prev else a
            edges.remove((a, b))
            break
    else:
        raise WordError("input wire is not connected")
    while cur != d.outputs[0]:
        if cur not in d.nodes:
            raise WordError("line diagram contains a stray boundary")
        kind, phase = d.nodes[cur]
        if kind == dg.H:
            word.append(("H", 0))
        elif kind in dg.SPIDER_KINDS:
            if phase:
                word.append((kind, phase))
        else:
            raise WordError(f"not a line-diagram node: {kind}")
        nxt = None
        for a, b in edges:
            if cur in (a, b):
                nxt = b if a == cur else a
                edges.remove((a, b))
                break
        if nxt is None:
            raise WordError("line diagram is not a single chain")
        cur = nxt
    if edges or any(v for v in d.nodes if d.degree(v) != 2):
        raise WordError("diagram has parts outside the line")
    return word


def _token_matrix(tok: Token) -> ExactMatrix:
    kind, k = tok
    if kind == "H":
        from .gslc import _H_REAL
        return _H_REAL
    return cl.phase_shift_matrix(kind, k)


def word_matrix(word: list[Token]) -> ExactMatrix:
    m = ExactMatrix.identity(2)
    for tok in word:
        m = _token_matrix(tok) @ m
    return m


# -- the alphabet -----------------------------------------------------------

_T = cl.phase_shift_matrix("Z", 1)
_R = cl.phase_shift_matrix("X", 2)
_S = cl.phase_shift_matrix("Z", 2)
_X_P = cl.phase_shift_matrix("X", 4)
_Z_P = cl.phase_shift_matrix("Z", 4)

V_WORDS: tuple[tuple[Token, ...], ...] = ((("X", 2), ("Z", 1)),
                                          (("X", 2), ("Z", 2), ("Z", 1)))
V_MATRICES = (_T @ _R, _T @ _S @ _R)

# W ranges over coset representatives of the diagonal-and-antidiagonal
# Clifford subgroup D8 = {C : T C T^dagger Clifford}; any Clifford then
# factors uniquely as W * D with D in D8, which is what pushing a Clifford
# past the leading T of U requires.
W_WORDS: tuple[tuple[Token, ...], ...] = ((),
                                          (("Z", 2), ("X", 2), ("Z", 2)),
                                          (("Z", 2), ("X", 2), ("Z", 2), ("Z", 2)))


def _build_w_tables():
    w_cls = []
    for w in W_WORDS:
        m = ExactMatrix.identity(2)
        for tok in w:
            m = _token_matrix(tok) @ m
        w_cls.append(cl.class_of(m)[0])
    if len(set(w_cls)) != 3:
        raise AssertionError("W representatives collide")
    # coset split: for each Clifford class c find w with w^dagger c in D8
    d8 = frozenset(c for c in range(24) if cl.is_diagonal_or_antidiagonal(c))
    split = {}
    for c in range(24):
        hits = []
        for wi, wc in enumerate(w_cls):
            prod = cl.c1_matrix(wc).dagger() @ cl.c1_matrix(c)
            if cl.class_of(prod)[0] in d8:
                hits.append(wi)
        if len(hits) != 1:
            raise AssertionError("W is not a transversal of C1/D8")
        split[c] = hits[0]
    return tuple(w_cls), split


W_CLASSES, _W_SPLIT = _build_w_tables()

# pushing tables, derived from exact matrices:
#   CV:  C . V  =  rho . W . V' . X^a Z^b          (C Clifford)
#   key: projective class of the product matrix
_PAULIS = (ExactMatrix.identity(2), _X_P, _Z_P, _X_P @ _Z_P)
_PAULI_BITS = ((0, 0), (1, 0), (0, 1), (1, 1))


def _phase_free_key(m: ExactMatrix) -> tuple:
    """A key invariant under multiplication by w^s, valid for any ring
    matrix: every entry times the conjugate of the first nonzero one."""
    flat = m.flat()
    e0 = next(e for e in flat if not e.is_zero())
    c = e0.conjugate()
    return tuple((c * e).reduce() for e in flat)


def _build_cv_table():
    table = {}
    for wi in range(3):
        wm = cl.c1_matrix(W_CLASSES[wi])
        for vi, vm in enumerate(V_MATRICES):
            for (a, b), pm in zip(_PAULI_BITS, _PAULIS):
                m = wm @ vm @ pm
                key = _phase_free_key(m)
                if key not in table:
                    table[key] = (wi, vi, a, b, m)
    if len(table) != 24:
        raise AssertionError("the W.V.P forms do not tile the coset")
    return table


_CV_TABLE = _build_cv_table()


def _cv_decompose(m: ExactMatrix) -> tuple[int, int, int, int, RingScalar]:
    """m = rho * W . V . X^a Z^b, for m in the coset C1 * (T R)."""
    key = _phase_free_key(m)
    if key not in _CV_TABLE:
        raise WordError("matrix is not in the T-syllable coset")
    wi, vi, a, b, ref = _CV_TABLE[key]
    for s in range(8):
        rho = RingScalar.omega_power(s)
        if ref.scale(rho) == m:
            return wi, vi, a, b, rho
    raise WordError("matrix is not a phase multiple of its class")


def _in_syllable_coset(m: ExactMatrix) -> bool:
    return _phase_free_key(m) in _CV_TABLE


# -- the normal form --------------------------------------------------------


@dataclass(frozen=True)
class CtNormalForm:
    """Either a pure Clifford (clifford set, syllables empty, w = 0) or
    W V_n..V_1 (T C) with u_clifford = C."""

    pure: bool
    w: int               # index into W_WORDS
    syllables: tuple[int, ...]  # indices into V_WORDS, top first
    u_clifford: int      # C1 class index

    @property
    def t_count(self) -> int:
        return 0 if self.pure else len(self.syllables) + 1

    def word(self) -> list[Token]:
        if self.pure:
            return list(cl.c1_word(self.u_clifford))
        out = list(cl.c1_word(self.u_clifford)) + [("Z", 1)]
        for vi in reversed(self.syllables):
            out += list(V_WORDS[vi])
        out += list(W_WORDS[self.w])
        return out

    def __str__(self) -> str:
        if self.pure:
            return (f"W= ; V= ; U={format_word(list(cl.c1_word(self.u_clifford)))}"
                    " (clifford)")
        wtxt = format_word(list(W_WORDS[self.w]))
        vtxt = ", ".join(format_word(list(V_WORDS[vi]))
                         for vi in self.syllables)
        utxt = format_word(list(cl.c1_word(self.u_clifford)) + [("Z", 1)])
        return f"W={wtxt} ; V=[{vtxt}] ; U={utxt}"


def _pauli_matrix(a: int, b: int) -> ExactMatrix:
    m = ExactMatrix.identity(2)
    if a:
        m = m @ _X_P
    if b:
        m = m @ _Z_P
    return m


def _push_pauli(a: int, b: int, syllables: tuple[int, ...],
                u: int) -> tuple[list[int], int]:
    """Commute X^a Z^b downward through syllables and absorb it into U."""
    out = []
    for vi in syllables:
        _, v2, a, b, _ = _cv_decompose(_pauli_matrix(a, b) @ V_MATRICES[vi])
        out.append(v2)
    # X^a Z^b . T C = phase . T . (T^dag X^a Z^b T) C
    inner = _T.dagger() @ _pauli_matrix(a, b) @ _T
    dcls = cl.class_of(inner)[0]
    return out, cl.c1_mul(dcls, u)[0]


def _absorb_clifford(nf: CtNormalForm, c: int) -> CtNormalForm:
    if nf.pure:
        return CtNormalForm(True, 0, (), cl.c1_mul(c, nf.u_clifford)[0])
    combined = cl.c1_mul(c, W_CLASSES[nf.w])[0]
    if not nf.syllables:
        # C . T C2 = W . T . (T^dag D T) C2  with C = W D, D in D8
        wi = _W_SPLIT[combined]
        dmat = cl.c1_matrix(W_CLASSES[wi]).dagger() @ cl.c1_matrix(combined)
        inner = _T.dagger() @ dmat @ _T
        dcls = cl.class_of(inner)[0]
        return CtNormalForm(False, wi, (),
                            cl.c1_mul(dcls, nf.u_clifford)[0])
    # push the Clifford through the top syllable, then the leftover Pauli
    # through the rest, and absorb it into U
    m = cl.c1_matrix(combined) @ V_MATRICES[nf.syllables[0]]
    wi, v0, a, b, _ = _cv_decompose(m)
    rest, u = _push_pauli(a, b, nf.syllables[1:], nf.u_clifford)
    return CtNormalForm(False, wi, tuple([v0] + rest), u)


_T_MERGE = {0: cl.class_of(_S @ _R)[0], 1: cl.class_of(_Z_P @ _R)[0]}
_RDG_CLS = cl.class_of(_R.dagger())[0]


def _absorb_t(nf: CtNormalForm) -> CtNormalForm:
    if nf.pure:
        return CtNormalForm(False, 0, (), nf.u_clifford)
    if nf.w == 0:
        if not nf.syllables:
            # T . T C = S C: back to a pure Clifford
            return CtNormalForm(
                True, 0, (), cl.c1_mul(cl.IDX_S, nf.u_clifford)[0])
        # T . (T R)-style syllable merges to a Clifford
        merged = _T_MERGE[nf.syllables[0]]
        return _absorb_clifford(
            CtNormalForm(False, 0, nf.syllables[1:], nf.u_clifford), merged)
    # T . W = (T R) . (R^dag W): absorb the Clifford part first, then
    # prepend the fresh syllable
    c = cl.c1_mul(_RDG_CLS, W_CLASSES[nf.w])[0]
    inner = _absorb_clifford(
        CtNormalForm(False, 0, nf.syllables, nf.u_clifford), c)
    if inner.w == 0:
        return CtNormalForm(False, 0, (0,) + inner.syllables,
                            inner.u_clifford)
    m = V_MATRICES[0] @ cl.c1_matrix(W_CLASSES[inner.w])
    wi, v0, a, b, _ = _cv_decompose(m)
    rest, u = _push_pauli(a, b, inner.syllables, inner.u_clifford)
    return CtNormalForm(False, wi, tuple([v0] + rest), u)


def normalize_ct(word: list[Token]) -> CtNormalForm:
    """Absorb the word's generators one at a time, first applied first."""
    nf = CtNormalForm(True, 0, (), cl.IDX_I)
    for kind, k in word:
        if kind == "H":
            nf = _absorb_clifford(nf, cl.IDX_H)
            continue
        k %= 8
        if k == 0:
            continue
        if kind == "Z" and k % 2 == 1:
            nf = _absorb_t(nf)
            k -= 1
        elif kind == "X" and k % 2 == 1:
            # odd red shifts factor as H T^odd H
            nf = _absorb_clifford(nf, cl.IDX_H)
            nf = _absorb_t(nf)
            nf = _absorb_clifford(nf, cl.zphase_class(k - 1))
            nf = _absorb_clifford(nf, cl.IDX_H)
            continue
        if k:
            cls = cl.zphase_class(k) if kind == "Z" else \
                cl.class_of(cl.phase_shift_matrix("X", k))[0]
            nf = _absorb_clifford(nf, cls)
    return nf


def ct_equal(w1: list[Token], w2: list[Token]) -> bool:
    """Scalar-free equality of Clifford+T words."""
    return normalize_ct(w1) == normalize_ct(w2)


def ct_adjoint_nf(nf: CtNormalForm) -> CtNormalForm:
    word = nf.word()
    adj = [(k, 0 if k == "H" else (8 - v) % 8) for k, v in reversed(word)]
    out = normalize_ct(adj)
    if not nf.pure and len(out.syllables) != len(nf.syllables):
        raise AssertionError("adjoint changed the T-count")
    return out


# -- the stabilizer-vector certificate ---------------------------------------


@dataclass(frozen=True)
class StabVector:
    """(x1 + x2 sqrt2, y1 + y2 sqrt2, z1 + z2 sqrt2) / sqrt(2)^m."""

    m: int
    x1: int = 0
    x2: int = 0
    y1: int = 0
    y2: int = 0
    z1: int = 0
    z2: int = 0

    @staticmethod
    def ket0() -> "StabVector":
        return StabVector(0, z1=1)

    def components(self):
        return ((self.x1, self.x2), (self.y1, self.y2), (self.z1, self.z2))


def stab_evolve(v: StabVector, gate: str) -> StabVector:
    """Exact update for gate in {"T", "TR", "TSR"} or a Clifford class
    index given as "C<i>"."""
    (x1, x2), (y1, y2), (z1, z2) = v.components()
    if gate == "T":
        return StabVector(v.m + 1, x1 - y1, x2 - y2, x1 + y1, x2 + y2,
                          2 * z2, z1)
    if gate == "TR":
        return StabVector(v.m + 1, x1 + z1, x2 + z2, x1 - z1, x2 - z2,
                          2 * y2, y1)
    if gate == "TSR":
        return StabVector(v.m + 1, z1 - x1, z2 - x2, x1 + z1, x2 + z2,
                          2 * y2, y1)
    if gate.startswith("C"):
        action = cl.PAULI_ACTIONS[int(gate[1:])]
        comps = {"X": (x1, x2), "Y": (y1, y2), "Z": (z1, z2)}
        out = {}
        for name in ("X", "Y", "Z"):
            tgt, sign = action[name]
            c1, c2 = comps[name]
            out[tgt] = (sign * c1, sign * c2)
        return StabVector(v.m, *out["X"], *out["Y"], *out["Z"])
    raise ValueError(f"unknown gate {gate}")


def nf_stab_vector(nf: CtNormalForm) -> StabVector:
    v = StabVector.ket0()
    if nf.pure:
        return stab_evolve(v, f"C{nf.u_clifford}")
    v = stab_evolve(v, f"C{nf.u_clifford}")
    v = stab_evolve(v, "T")
    for vi in reversed(nf.syllables):
        v = stab_evolve(v, "TR" if vi == 0 else "TSR")
    return stab_evolve(v, f"C{W_CLASSES[nf.w]}")


def is_identity_witness(nf: CtNormalForm) -> bool:
    """True only when the normal form can be the (scalar-multiplied)
    identity; certified without building any matrix."""
    if nf.pure:
        return nf.u_clifford == cl.IDX_I
    if not nf.syllables:
        # W T C proportional to the identity would make T projectively
        # Clifford, which it is not
        return False
    # with at least one syllable, the tracked direction keeps odd integer
    # parts on two axes, so it can never align with the |0> axis
    v = nf_stab_vector(nf)
    return (v.x1 == v.x2 == v.y1 == v.y2 == 0
            and not (v.z1 == v.z2 == 0))
