"""Exact arithmetic in Z[1/2, w] where w = exp(i*pi/4).

Every matrix entry and every scalar produced anywhere in this package lives
in this ring.  An element is stored as four integer coefficients (a0, a1,
a2, a3) for the basis (1, w, w^2, w^3) together with a power-of-two
denominator exponent h, so the value is

    (a0 + a1*w + a2*w^2 + a3*w^3) / 2^h.

The defining relation is w^4 = -1.  Useful identities:

    sqrt(2)   = w - w^3
    i         = w^2
    1/sqrt(2) = (w - w^3) / 2
"""

from __future__ import annotations

from dataclasses import dataclass


class ZeroInverse(ZeroDivisionError):
    """Inversion of an exactly-zero scalar."""


class NotInvertible(ValueError):
    """Inversion of a ring element that is not of the form ±sqrt(2)^r * w^s."""


@dataclass(frozen=True, slots=True)
class RingScalar:
    a0: int = 0
    a1: int = 0
    a2: int = 0
    a3: int = 0
    h: int = 0

    def __post_init__(self):
        if self.h < 0:
            raise ValueError("denominator exponent must be non-negative")

    @staticmethod
    def from_int(n: int) -> "RingScalar":
        return RingScalar(n, 0, 0, 0, 0)

    @staticmethod
    def zero() -> "RingScalar":
        return RingScalar()

    @staticmethod
    def one() -> "RingScalar":
        return RingScalar(1)

    @staticmethod
    def omega_power(k: int) -> "RingScalar":
        """w^k, for any integer k (w^4 = -1, so w has order 8)."""
        k %= 8
        sign = 1 if k < 4 else -1
        coeffs = [0, 0, 0, 0]
        coeffs[k % 4] = sign
        return RingScalar(*coeffs, 0).reduce()

    @staticmethod
    def sqrt2_power(r: int) -> "RingScalar":
        """sqrt(2)^r, for any integer r (negative r allowed)."""
        if r >= 0:
            out = RingScalar.one()
            for _ in range(r):
                out = out * SQRT2
            return out
        # 1/sqrt(2) = (w - w^3)/2
        out = RingScalar.one()
        for _ in range(-r):
            out = out * RingScalar(0, 1, 0, -1, 1)
        return out

    def reduce(self) -> "RingScalar":
        """Canonical form: h = 0 or at least one coefficient odd."""
        a0, a1, a2, a3, h = self.a0, self.a1, self.a2, self.a3, self.h
        while h > 0 and a0 % 2 == 0 and a1 % 2 == 0 and a2 % 2 == 0 and a3 % 2 == 0:
            a0 //= 2
            a1 //= 2
            a2 //= 2
            a3 //= 2
            h -= 1
        return RingScalar(a0, a1, a2, a3, h)

    def __add__(self, other: "RingScalar") -> "RingScalar":
        h = max(self.h, other.h)
        sa = 1 << (h - self.h)
        sb = 1 << (h - other.h)
        return RingScalar(
            self.a0 * sa + other.a0 * sb,
            self.a1 * sa + other.a1 * sb,
            self.a2 * sa + other.a2 * sb,
            self.a3 * sa + other.a3 * sb,
            h,
        ).reduce()

    def __neg__(self) -> "RingScalar":
        return RingScalar(-self.a0, -self.a1, -self.a2, -self.a3, self.h)

    def __sub__(self, other: "RingScalar") -> "RingScalar":
        return self + (-other)

    def __mul__(self, other: "RingScalar") -> "RingScalar":
        x = (self.a0, self.a1, self.a2, self.a3)
        y = (other.a0, other.a1, other.a2, other.a3)
        out = [0, 0, 0, 0]
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                k = i + j
                if k < 4:
                    out[k] += xi * yj
                else:
                    out[k - 4] -= xi * yj
        return RingScalar(*out, self.h + other.h).reduce()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingScalar):
            return NotImplemented
        a = self.reduce()
        b = other.reduce()
        return (a.a0, a.a1, a.a2, a.a3, a.h) == (b.a0, b.a1, b.a2, b.a3, b.h)

    def __hash__(self) -> int:
        a = self.reduce()
        return hash((a.a0, a.a1, a.a2, a.a3, a.h))

    def is_zero(self) -> bool:
        return self.a0 == 0 and self.a1 == 0 and self.a2 == 0 and self.a3 == 0

    def conjugate(self) -> "RingScalar":
        """Complex conjugation, fixed by w -> w^7 = -w^3."""
        return RingScalar(self.a0, -self.a3, -self.a2, -self.a1, self.h)

    def norm_squared(self) -> "RingScalar":
        """|x|^2 = x * conj(x); always real, i.e. of the form a + b*sqrt(2)."""
        return self * self.conjugate()

    def halve(self) -> "RingScalar":
        """Exact division by 2."""
        return RingScalar(self.a0, self.a1, self.a2, self.a3, self.h + 1).reduce()

    def as_unit_form(self) -> tuple[int, int] | None:
        """Return (s, r) with self == sqrt(2)^r * w^s, or None.

        The decomposition is found by matching |x|^2 against a power of two
        and then scanning the eight phases.
        """
        if self.is_zero():
            return None
        n = self.norm_squared().reduce()
        # n = 2^r requires integer part only: coefficients (c, 0, 0, 0) with
        # c = 2^r * 2^h.
        if n.a1 != 0 or n.a2 != 0 or n.a3 != 0 or n.a0 <= 0:
            return None
        c, h = n.a0, n.h
        if c & (c - 1) != 0:
            return None
        r = c.bit_length() - 1 - h
        for s in range(8):
            if RingScalar.omega_power(s) * RingScalar.sqrt2_power(r) == self:
                return (s, r)
        return None

    def inverse(self) -> "RingScalar":
        """Exact inverse; defined only for elements ±sqrt(2)^r * w^s."""
        if self.is_zero():
            raise ZeroInverse("0 has no inverse")
        unit = self.as_unit_form()
        if unit is None:
            raise NotInvertible(f"{self} is not of the form sqrt(2)^r * w^s")
        s, r = unit
        return RingScalar.omega_power(-s) * RingScalar.sqrt2_power(-r)

    def __complex__(self) -> complex:
        w = complex(2 ** -0.5, 2 ** -0.5)
        return (self.a0 + self.a1 * w + self.a2 * w ** 2 + self.a3 * w ** 3) / 2 ** self.h

    def __str__(self) -> str:
        a = self.reduce()
        return f"({a.a0},{a.a1},{a.a2},{a.a3})/2^{a.h}"

    def __repr__(self) -> str:
        return f"RingScalar{(self.a0, self.a1, self.a2, self.a3, self.h)}"


ZERO = RingScalar.zero()
ONE = RingScalar.one()
TWO = RingScalar.from_int(2)
HALF = RingScalar(1, 0, 0, 0, 1)
OMEGA = RingScalar.omega_power(1)
IMAG = RingScalar.omega_power(2)
SQRT2 = RingScalar(0, 1, 0, -1, 0)
INV_SQRT2 = RingScalar(0, 1, 0, -1, 1)


def ring_add(x: RingScalar, y: RingScalar) -> RingScalar:
    return x + y


def ring_mul(x: RingScalar, y: RingScalar) -> RingScalar:
    return x * y


def ring_neg(x: RingScalar) -> RingScalar:
    return -x


def ring_eq(x: RingScalar, y: RingScalar) -> bool:
    return x == y


def ring_is_zero(x: RingScalar) -> bool:
    return x.is_zero()


def ring_inverse(x: RingScalar) -> RingScalar:
    return x.inverse()
