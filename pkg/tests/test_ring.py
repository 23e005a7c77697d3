import pytest
from hypothesis import given, strategies as st

from redgreen.ring import (HALF, IMAG, INV_SQRT2, OMEGA, ONE, SQRT2, ZERO,
                           NotInvertible, RingScalar, ZeroInverse)

small = st.integers(min_value=-8, max_value=8)
elements = st.builds(RingScalar, small, small, small, small,
                     st.integers(min_value=0, max_value=4))


def test_defining_relations():
    assert SQRT2 * SQRT2 == RingScalar.from_int(2)
    assert OMEGA * OMEGA == IMAG
    assert RingScalar.omega_power(4) == RingScalar.from_int(-1)
    assert HALF * RingScalar.from_int(2) == ONE
    assert INV_SQRT2 * SQRT2 == ONE


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a + (-a) == ZERO


@given(elements, elements)
def test_conjugation_is_a_homomorphism(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.conjugate().conjugate() == a


@given(elements)
def test_norm_squared_is_real_and_nonnegative(a):
    n = a.norm_squared().reduce()
    assert n.a2 == 0 and n.a1 == -n.a3
    assert complex(n).imag == pytest.approx(0)
    assert complex(n).real >= -1e-9


def test_unit_forms():
    for s in range(8):
        for r in range(-6, 7):
            x = RingScalar.omega_power(s) * RingScalar.sqrt2_power(r)
            assert x.as_unit_form() == (s, r)
    assert (ONE + OMEGA).as_unit_form() is None
    # |1 + w|^2 = 2 + sqrt(2) is not a power of two
    n = (ONE + OMEGA).norm_squared().reduce()
    assert n.a1 != 0


def test_inverse():
    assert SQRT2.inverse() == INV_SQRT2
    assert HALF.inverse() == RingScalar.from_int(2)
    for s in range(8):
        x = RingScalar.omega_power(s) * RingScalar.sqrt2_power(3)
        assert x * x.inverse() == ONE
    with pytest.raises(ZeroInverse):
        ZERO.inverse()
    with pytest.raises(NotInvertible):
        (ONE + OMEGA).inverse()


def test_canonical_reduction():
    x = RingScalar(2, 4, 6, 8, 3)
    r = x.reduce()
    assert r == x and (r.h == 0 or r.a0 % 2 or r.a1 % 2 or r.a2 % 2
                       or r.a3 % 2)


def test_complex_embedding():
    z = complex(OMEGA)
    assert z.real == pytest.approx(2 ** -0.5)
    assert z.imag == pytest.approx(2 ** -0.5)
