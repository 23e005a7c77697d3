"""The 24-element single-qubit Clifford group, backed by exact matrices.

Each projective group element is identified by an index 0..23 and carries a
canonical word of at most three phase shifts (alternating colours, Euler
style).  The canonical matrix of an element is the exact interpretation of
its word, so rendering a word into a diagram reproduces the matrix with no
leftover phase.  Multiplication works on the matrices; the w^k ratio
between a product and the canonical representative of its class is
returned alongside the result so callers can track scalars exactly.
"""

from __future__ import annotations

import itertools

from .matrix import ExactMatrix
from .ring import INV_SQRT2, ONE, RingScalar

Token = tuple[str, int]  # ("Z", k) or ("X", k), k in units of pi/4


def phase_shift_matrix(kind: str, k: int) -> ExactMatrix:
    w = RingScalar.omega_power(k)
    if kind == "Z":
        return ExactMatrix.from_rows([[ONE, RingScalar.zero()],
                                      [RingScalar.zero(), w]])
    a = (ONE + w).halve()
    b = (ONE - w).halve()
    return ExactMatrix.from_rows([[a, b], [b, a]])


def word_matrix(word: tuple[Token, ...]) -> ExactMatrix:
    m = ExactMatrix.identity(2)
    for kind, k in word:  # first token acts first
        m = phase_shift_matrix(kind, k) @ m
    return m


def _first_entry(m: ExactMatrix) -> RingScalar:
    for e in m.flat():
        if not e.is_zero():
            return e
    raise ValueError("zero matrix has no projective key")


def projective_key(m: ExactMatrix) -> tuple:
    inv = _first_entry(m).inverse()
    return tuple((inv * e).reduce() for e in m.flat())


def _build_group():
    classes: dict[tuple, tuple[tuple[Token, ...], ExactMatrix]] = {}
    shapes = []
    for a, b, c in itertools.product((0, 2, 4, 6), repeat=3):
        word = tuple(t for t in (("Z", a), ("X", b), ("Z", c)) if t[1])
        shapes.append((word, 0))
        word = tuple(t for t in (("X", a), ("Z", b), ("X", c)) if t[1])
        shapes.append((word, 1))
    ranked = sorted(shapes, key=lambda ws: (len(ws[0]), ws[1], ws[0]))
    for word, _ in ranked:
        m = word_matrix(word)
        key = projective_key(m)
        if key not in classes:
            classes[key] = (word, m)
    if len(classes) != 24:
        raise AssertionError(f"expected 24 Clifford classes, got {len(classes)}")
    words, mats, keys = [], [], {}
    items = sorted(classes.items(), key=lambda kv: (len(kv[1][0]), kv[1][0]))
    for i, (key, (word, m)) in enumerate(items):
        words.append(word)
        mats.append(m)
        keys[key] = i
    return words, mats, keys


C1_WORDS, C1_MATRICES, _KEY_TO_CLASS = _build_group()


def c1_word(i: int) -> tuple[Token, ...]:
    return C1_WORDS[i]


def c1_matrix(i: int) -> ExactMatrix:
    return C1_MATRICES[i]


def class_of(m: ExactMatrix) -> tuple[int, RingScalar]:
    """Index c and exact ratio rho with m == rho * c1_matrix(c)."""
    c = _KEY_TO_CLASS[projective_key(m)]
    rho = _first_entry(m) * _first_entry(C1_MATRICES[c]).inverse()
    return c, rho


def c1_mul(a: int, b: int) -> tuple[int, RingScalar]:
    """Product in C1 with the exact scalar ratio of the canonical words."""
    return class_of(C1_MATRICES[a] @ C1_MATRICES[b])


def c1_adjoint(a: int) -> tuple[int, RingScalar]:
    return class_of(C1_MATRICES[a].dagger())


def _cls(word: tuple[Token, ...]) -> int:
    return class_of(word_matrix(word))[0]


IDX_I = _cls(())
IDX_S = _cls((("Z", 2),))
IDX_Z = _cls((("Z", 4),))
IDX_SDG = _cls((("Z", 6),))
IDX_X = _cls((("X", 4),))
IDX_RX = _cls((("X", 2),))
IDX_H = class_of(
    ExactMatrix.from_rows([[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]]))[0]
IDX_HZ = c1_mul(IDX_H, IDX_Z)[0]  # maps |+> to |1>

# Exact correction matrices used by local complementation:
#   sqrt(iX)  = exp(+i pi X / 4) = (I + iX)/sqrt(2)
#   sqrt(-iZ) = exp(-i pi Z / 4) = diag(w^-1, w)
_I_IMAG = RingScalar.omega_power(2)
SQRT_IX = ExactMatrix.from_rows(
    [[INV_SQRT2, _I_IMAG * INV_SQRT2], [_I_IMAG * INV_SQRT2, INV_SQRT2]])
SQRT_IX_DG = SQRT_IX.dagger()
SQRT_MINUS_IZ = ExactMatrix.from_rows(
    [[RingScalar.omega_power(-1), RingScalar.zero()],
     [RingScalar.zero(), RingScalar.omega_power(1)]])
SQRT_MINUS_IZ_DG = SQRT_MINUS_IZ.dagger()

# The reduced vertex-operator set R: the four green phases plus the two
# red-bearing forms (a green +-pi/2 phase followed by a red pi/2 shift).
R_GREEN = (IDX_I, IDX_S, IDX_Z, IDX_SDG)
R_RED = (_cls((("Z", 2), ("X", 2))), _cls((("Z", 6), ("X", 2))))
R_SET = frozenset(R_GREEN + R_RED)


def red_bearing(i: int) -> bool:
    if i not in R_SET:
        raise ValueError("red-node accounting applies to R members only")
    return i in R_RED


def zphase_class(k: int) -> int:
    """Class of the diagonal phase diag(1, w^k) for even k."""
    return _cls((("Z", k % 8),)) if k % 8 else IDX_I


def is_diagonal_or_antidiagonal(i: int) -> bool:
    m = C1_MATRICES[i]
    diag = m.entries[0][1].is_zero() and m.entries[1][0].is_zero()
    anti = m.entries[0][0].is_zero() and m.entries[1][1].is_zero()
    return diag or anti


def effect_after(i: int) -> tuple[RingScalar, RingScalar]:
    """The row (<0| + <1|) . c1_matrix(i), the green effect seen through a
    vertex operator."""
    m = C1_MATRICES[i]
    return (m.entries[0][0] + m.entries[1][0],
            m.entries[0][1] + m.entries[1][1])


def plus_state(i: int) -> tuple[RingScalar, RingScalar]:
    """c1_matrix(i) . |+>, unnormalized by sqrt(2): returns M.(1,1)^T."""
    m = C1_MATRICES[i]
    return (m.entries[0][0] + m.entries[0][1],
            m.entries[1][0] + m.entries[1][1])


# Signed Pauli action: conjugation by a Clifford permutes {X, Y, Z} with
# signs; used by the Clifford+T stabilizer-vector certificate.
_PAULIS = {
    "X": ExactMatrix.from_rows([[RingScalar.zero(), ONE], [ONE, RingScalar.zero()]]),
    "Y": ExactMatrix.from_rows([[RingScalar.zero(), -_I_IMAG], [_I_IMAG, RingScalar.zero()]]),
    "Z": ExactMatrix.from_rows([[ONE, RingScalar.zero()], [RingScalar.zero(), -ONE]]),
}


def pauli_action(i: int) -> dict[str, tuple[str, int]]:
    """For each P, the (P', sign) with  C P C^dagger = sign * P'."""
    m = C1_MATRICES[i]
    md = m.dagger()
    out = {}
    for name, p in _PAULIS.items():
        conj = m @ p @ md
        for name2, p2 in _PAULIS.items():
            if conj == p2:
                out[name] = (name2, 1)
                break
            if conj == p2.scale(-ONE):
                out[name] = (name2, -1)
                break
        else:
            raise AssertionError("conjugation left the Pauli frame")
    return out


PAULI_ACTIONS = [pauli_action(i) for i in range(24)]
