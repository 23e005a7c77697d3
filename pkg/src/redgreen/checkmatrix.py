"""GF(2) check matrices: an independent oracle for the graph-state
theorems, shared by the quantum and toy pipelines.

A check matrix for n systems is a 2n x n binary matrix whose columns are
the (Z-block over X-block) encodings of stabilizer generators, phases
dropped.  Validity is self-orthogonality under the symplectic form J; a
state is graph-equivalent iff a local symplectic operation brings its
check matrix to (theta over I) column-equivalently.
"""

from __future__ import annotations

from dataclasses import dataclass


class NotMaximal(ValueError):
    pass


class SearchBoundExceeded(RuntimeError):
    pass


Bits = list[list[int]]


def _zeros(r: int, c: int) -> Bits:
    return [[0] * c for _ in range(r)]


def _eye(n: int) -> Bits:
    m = _zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def _matmul(a: Bits, b: Bits) -> Bits:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = _zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            if ai[k]:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] ^= bk[j]
    return out


def _transpose(a: Bits) -> Bits:
    return [list(col) for col in zip(*a)] if a else []


def _rank(a: Bits) -> int:
    m = [row[:] for row in a]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                m[r] = [x ^ y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


@dataclass
class CheckMatrix:
    n: int
    bits: Bits  # 2n rows, n columns; Z block on top of X block

    @staticmethod
    def from_rows(rows: Bits) -> "CheckMatrix":
        if len(rows) % 2:
            raise ValueError("check matrices have 2n rows")
        n = len(rows) // 2
        if any(len(r) != n for r in rows):
            raise ValueError("check matrices have n columns")
        return CheckMatrix(n, [r[:] for r in rows])

    def z_block(self) -> Bits:
        return [r[:] for r in self.bits[:self.n]]

    def x_block(self) -> Bits:
        return [r[:] for r in self.bits[self.n:]]

    def column_rank(self) -> int:
        return _rank(self.bits)


def symplectic_form(n: int) -> Bits:
    j = _zeros(2 * n, 2 * n)
    for i in range(n):
        j[i][n + i] = 1
        j[n + i][i] = 1
    return j


def is_valid(s: CheckMatrix) -> bool:
    """Self-orthogonality S^T J S = 0."""
    j = symplectic_form(s.n)
    prod = _matmul(_matmul(_transpose(s.bits), j), s.bits)
    return all(all(x == 0 for x in row) for row in prod)


def is_rank_deficient(s: CheckMatrix) -> bool:
    return s.column_rank() < s.n


def graph_check(adj: Bits) -> CheckMatrix:
    """(theta over I) for an adjacency matrix theta."""
    n = len(adj)
    return CheckMatrix(n, [row[:] for row in adj] + _eye(n))


def is_symplectic(q: Bits) -> bool:
    if len(q) % 2 or any(len(r) != len(q) for r in q):
        raise ValueError("symplectic matrices are square and even-sized")
    n = len(q) // 2
    j = symplectic_form(n)
    return _matmul(_matmul(_transpose(q), j), q) == j


def is_local(q: Bits) -> bool:
    """All four n x n blocks diagonal."""
    if len(q) % 2:
        raise ValueError("expected a 2n x 2n matrix")
    n = len(q) // 2
    for i in range(2 * n):
        for k in range(2 * n):
            if q[i][k] and (i % n) != (k % n):
                return False
    return True


def _local_h(n: int, qubit: int) -> Bits:
    """Swap the Z and X rows of one system."""
    q = _zeros(2 * n, 2 * n)
    for i in range(n):
        if i == qubit:
            q[i][n + i] = 1
            q[n + i][i] = 1
        else:
            q[i][i] = 1
            q[n + i][n + i] = 1
    return q


def _local_s(n: int, qubit: int) -> Bits:
    """Add the X row into the Z row of one system."""
    q = _zeros(2 * n, 2 * n)
    for i in range(n):
        q[i][i] = 1
        q[n + i][n + i] = 1
    q[qubit][n + qubit] = 1
    return q


def _inverse(a: Bits) -> Bits:
    n = len(a)
    m = [row[:] + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c]:
                m[r] = [x ^ y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def to_graph_form(s: CheckMatrix) -> tuple[Bits, Bits]:
    """A local symplectic Q and adjacency theta with Q.S column-equivalent
    to (theta over I).

    Gaussian elimination with local pivoting: Hadamard swaps fix X-block
    rank deficiencies, column operations normalize the X block to the
    identity, and local S operations clear the diagonal of the Z block.
    """
    if not is_valid(s):
        raise ValueError("not a valid check matrix")
    if is_rank_deficient(s):
        raise NotMaximal("check matrix does not have full column rank")
    n = s.n
    q = _zeros(2 * n, 2 * n)
    for i in range(2 * n):
        q[i][i] = 1
    cur = [row[:] for row in s.bits]
    for _ in range(n + 1):
        xr = _rank(cur[n:])
        if xr == n:
            break
        improved = False
        for qubit in range(n):
            h = _local_h(n, qubit)
            trial = _matmul(h, cur)
            if _rank(trial[n:]) > xr:
                cur = trial
                q = _matmul(h, q)
                improved = True
                break
        if not improved:
            raise NotMaximal("X block rank cannot be completed locally")
    # column operations: right-multiply by the inverse of the X block
    xinv = _inverse(cur[n:])
    cur = _matmul(cur, xinv)
    if cur[n:] != _eye(n):
        raise AssertionError("column reduction did not reach the identity")
    theta = [row[:] for row in cur[:n]]
    # self-orthogonality makes theta symmetric; clear its diagonal locally
    for i in range(n):
        if theta[i][i]:
            sq = _local_s(n, i)
            cur = _matmul(sq, cur)
            q = _matmul(sq, q)
            theta = [row[:] for row in cur[:n]]
    if theta != _transpose(theta) or any(theta[i][i] for i in range(n)):
        raise AssertionError("reduction did not produce an adjacency matrix")
    return theta, q


def lc_adj(adj: Bits, v: int) -> Bits:
    """Graph local complementation about v."""
    n = len(adj)
    if not 0 <= v < n:
        raise ValueError("vertex out of range")
    out = [row[:] for row in adj]
    nbrs = [u for u in range(n) if adj[v][u]]
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            out[a][b] ^= 1
            out[b][a] ^= 1
    return out


def lc_orbit(adj: Bits, bound: int = 20000) -> set[tuple]:
    """All graphs reachable by local complementations (labeled vertices)."""
    n = len(adj)
    start = _key(adj)
    seen = {start}
    frontier = [adj]
    while frontier:
        nxt = []
        for g in frontier:
            for v in range(n):
                h = lc_adj(g, v)
                k = _key(h)
                if k not in seen:
                    seen.add(k)
                    nxt.append(h)
                    if len(seen) > bound:
                        raise SearchBoundExceeded(
                            f"orbit exceeded {bound} graphs")
        frontier = nxt
    return seen


def _key(adj: Bits) -> tuple:
    return tuple(tuple(row) for row in adj)


def lc_orbit_equal(a1: Bits, a2: Bits, bound: int = 20000) -> bool:
    """Whether two labeled graphs are joined by local complementations."""
    if len(a1) != len(a2):
        return False
    return _key(a2) in lc_orbit(a1, bound)
