"""Dense matrices over Z[1/2, w] with exact equality and proportionality."""

from __future__ import annotations

from dataclasses import dataclass

from .ring import ONE, ZERO, RingScalar


class DimensionMismatch(ValueError):
    pass


@dataclass
class ExactMatrix:
    rows: int
    cols: int
    entries: list[list[RingScalar]]

    @staticmethod
    def zeros(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        m = ExactMatrix.zeros(n, n)
        for i in range(n):
            m.entries[i][i] = ONE
        return m

    @staticmethod
    def from_rows(rows: list[list[RingScalar]]) -> "ExactMatrix":
        return ExactMatrix(len(rows), len(rows[0]) if rows else 0, rows)

    def __getitem__(self, idx: tuple[int, int]) -> RingScalar:
        return self.entries[idx[0]][idx[1]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and all(a == b for ra, rb in zip(self.entries, other.entries)
                        for a, b in zip(ra, rb)))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.cols} != {other.rows}")
        out = ExactMatrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                x = self.entries[i][k]
                if x.is_zero():
                    continue
                for j in range(other.cols):
                    y = other.entries[k][j]
                    if not y.is_zero():
                        out.entries[i][j] = out.entries[i][j] + x * y
        return out

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        out = ExactMatrix.zeros(self.rows * other.rows, self.cols * other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                x = self.entries[i][j]
                if x.is_zero():
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        out.entries[i * other.rows + k][j * other.cols + l] = \
                            x * other.entries[k][l]
        return out

    def scale(self, c: RingScalar) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols,
                           [[c * x for x in row] for row in self.entries])

    def dagger(self) -> "ExactMatrix":
        out = ExactMatrix.zeros(self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out.entries[j][i] = self.entries[i][j].conjugate()
        return out

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def flat(self) -> list[RingScalar]:
        return [x for row in self.entries for x in row]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def proportional_equal(m1: ExactMatrix, m2: ExactMatrix) -> RingScalar | None:
    """Return c with m1 == c*m2 for c = ±sqrt(2)^r * w^s, if one exists.

    Two zero matrices count as proportional with c = 1.
    """
    if m1.rows != m2.rows or m1.cols != m2.cols:
        raise DimensionMismatch("matrices have different shapes")
    f1, f2 = m1.flat(), m2.flat()
    i = next((k for k, x in enumerate(f2) if not x.is_zero()), None)
    if i is None:
        return ONE if m1.is_zero() else None
    if f1[i].is_zero():
        return None
    # pairwise cross-multiplication settles proportionality exactly
    for j in range(len(f1)):
        if f1[j] * f2[i] != f1[i] * f2[j]:
            return None
    return _unit_ratio(f1[i], f2[i])


def _unit_ratio(x: RingScalar, y: RingScalar) -> RingScalar | None:
    """Solve x == c*y for c = ±sqrt(2)^r * w^s, exactly."""
    nx = x.norm_squared().reduce()
    ny = y.norm_squared().reduce()
    # Norms are real, i.e. (a0 + a1*sqrt(2))/2^h; the quotient must be a
    # power of two, which can be read off componentwise.
    from fractions import Fraction

    def component_ratio(a: int, b: int) -> Fraction | None:
        if b == 0:
            return None
        return Fraction(a * (1 << ny.h), b * (1 << nx.h))

    q = component_ratio(nx.a0, ny.a0) or component_ratio(nx.a1, ny.a1)
    if q is None or q <= 0:
        return None
    num, den = q.numerator, q.denominator
    if num & (num - 1) or den & (den - 1):
        return None
    t = num.bit_length() - den.bit_length()
    root = RingScalar.sqrt2_power(t)
    for s in range(8):
        c = RingScalar.omega_power(s) * root
        if c * y == x:
            return c
    return None
