import itertools

import pytest

from redgreen import clifford as cl
from redgreen import cliffordt as ct
from redgreen.matrix import ExactMatrix, proportional_equal
from redgreen.semantics import interpret


def pkey(m):
    flat = m.flat()
    e0 = next(e for e in flat if not e.is_zero())
    c = e0.conjugate()
    return tuple((c * e).reduce() for e in flat)


def test_parse_and_format():
    w = ct.parse_word("Z1 H X2 Z-1")
    assert w == [("Z", 1), ("H", 0), ("X", 2), ("Z", 7)]
    assert ct.format_word(w) == "Z1 H X2 Z7"
    with pytest.raises(ct.WordError):
        ct.parse_word("Q3")


def test_word_diagram_round_trip():
    w = ct.parse_word("Z1 H X2")
    d = ct.word_to_diagram(w)
    assert ct.diagram_to_word(d) == w
    assert interpret(d) == ct.word_matrix(w)


def test_diagram_to_word_rejects_non_lines():
    from redgreen import diagram as dg
    with pytest.raises(ct.WordError):
        ct.diagram_to_word(dg.cup())
    d = dg.compose_par(dg.wire(), dg.star_scalar())
    with pytest.raises(ct.WordError):
        ct.diagram_to_word(d)


def test_basic_normal_forms():
    nf = ct.normalize_ct(ct.parse_word("Z1"))
    assert not nf.pure and nf.w == 0 and nf.syllables == () \
        and nf.u_clifford == cl.IDX_I
    assert nf.t_count == 1
    nf = ct.normalize_ct(ct.parse_word("Z1 Z1"))
    assert nf.pure and nf.u_clifford == cl.IDX_S
    nf = ct.normalize_ct(ct.parse_word("H H"))
    assert nf.pure and nf.u_clifford == cl.IDX_I
    assert nf.t_count == 0


def test_soundness_random_words(rng):
    for _ in range(150):
        word = [rng.choice([("H", 0), ("Z", 2), ("Z", 1), ("X", 2),
                            ("X", 3), ("Z", 5)])
                for _ in range(rng.randint(0, 14))]
        nf = ct.normalize_ct(word)
        assert proportional_equal(ct.word_matrix(word),
                                  ct.word_matrix(nf.word())) is not None


def test_uniqueness_ht_words_up_to_seven():
    groups = {}
    for n in range(8):
        for bits in itertools.product("HT", repeat=n):
            word = [("H", 0) if b == "H" else ("Z", 1) for b in bits]
            nf = ct.normalize_ct(word)
            key = (nf.pure, nf.w, nf.syllables, nf.u_clifford)
            mk = pkey(ct.word_matrix(word))
            assert groups.setdefault(key, mk) == mk
    seen = {}
    for key, mk in groups.items():
        assert mk not in seen
        seen[mk] = key


def test_not_identity_certificate():
    assert ct.is_identity_witness(ct.normalize_ct([]))
    assert not ct.is_identity_witness(ct.normalize_ct([("Z", 1)]))
    nf = ct.normalize_ct(ct.parse_word("Z1 H Z1 H Z1"))
    assert nf.t_count >= 1
    assert not ct.is_identity_witness(nf)
    assert proportional_equal(ct.word_matrix(nf.word()),
                              ExactMatrix.identity(2)) is None


def test_parity_cycle():
    v = ct.StabVector(1, x1=1, y1=1)
    v = ct.stab_evolve(v, "TR")
    assert v.x1 % 2 == 1 and v.y1 % 2 == 1 and v.z2 % 2 == 1
    v2 = ct.stab_evolve(v, "TSR")
    assert all(c % 2 == 1 for c in (v2.x1, v2.x2, v2.y1, v2.y2, v2.z2))
    assert v2.z1 % 2 == 0


def test_stab_evolve_t_from_ket0():
    v = ct.stab_evolve(ct.StabVector.ket0(), "T")
    assert (v.x1, v.x2, v.y1, v.y2) == (0, 0, 0, 0)
    assert (v.z1, v.z2, v.m) == (0, 1, 1)


def test_ct_equal_matches_oracle(rng):
    for _ in range(120):
        w1 = [rng.choice([("H", 0), ("Z", 1), ("Z", 2)])
              for _ in range(rng.randint(0, 9))]
        w2 = [rng.choice([("H", 0), ("Z", 1), ("Z", 2)])
              for _ in range(rng.randint(0, 9))]
        oracle = proportional_equal(ct.word_matrix(w1),
                                    ct.word_matrix(w2)) is not None
        assert ct.ct_equal(w1, w2) == oracle
    assert not ct.ct_equal([("Z", 2)], [("Z", 1)])


def test_adjoint_preserves_t_count(rng):
    for _ in range(80):
        word = [rng.choice([("H", 0), ("Z", 1), ("Z", 2)])
                for _ in range(rng.randint(0, 10))]
        nf = ct.normalize_ct(word)
        adj = ct.ct_adjoint_nf(nf)
        assert adj.t_count == nf.t_count
        assert ct.ct_adjoint_nf(adj) == nf


def test_w_set_is_a_transversal():
    assert len(set(ct.W_CLASSES)) == 3
