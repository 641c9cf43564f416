"""Small exact matrix and span helpers over Z_n.

Matrices are row-major lists of lists of ints.  Everything is integer-exact;
determinants are computed over Z (Bareiss) and reduced afterwards.  Z_n is
not a field, so span membership uses a Howell-style normal form whose pivots
divide n and which carries the annihilator rows needed to make greedy
reduction sound in the presence of zero divisors.
"""

from __future__ import annotations

import math

from .errors import NotUnit


def identity(k: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def mat_mod(a, n: int) -> list[list[int]]:
    return [[x % n for x in row] for row in a]


def mat_mul(a, b, n: int) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            t = ai[k]
            if t == 0:
                continue
            bk = b[k]
            for j in range(cols):
                oi[j] += t * bk[j]
        out[i] = [x % n for x in oi]
    return out


def mat_vec(a, v, n: int) -> list[int]:
    """A @ v with v a column vector."""
    return [sum(x * y for x, y in zip(row, v)) % n for row in a]


def vec_mat(v, a, n: int) -> list[int]:
    """v @ A with v a row vector."""
    cols = len(a[0])
    return [sum(v[i] * a[i][j] for i in range(len(v))) % n for j in range(cols)]


def mat_add(a, b, n: int) -> list[list[int]]:
    return [[(x + y) % n for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b, n: int) -> list[list[int]]:
    return [[(x - y) % n for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: int, a, n: int) -> list[list[int]]:
    return [[c * x % n for x in row] for row in a]


def transpose(a) -> list[list[int]]:
    return [list(col) for col in zip(*a)]


def columns(a) -> list[list[int]]:
    return transpose(a)


def det(a) -> int:
    """Exact determinant over Z (Bareiss fraction-free elimination)."""
    k = len(a)
    m = [row[:] for row in a]
    sign, prev = 1, 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[-1][-1]


def mat_inv(a, n: int) -> list[list[int]]:
    """Inverse mod n via the adjugate; raises NotUnit when det is not a unit."""
    k = len(a)
    d = det(a) % n
    if math.gcd(d, n) != 1:
        raise NotUnit(f"matrix determinant {d} is not a unit mod {n}")
    d_inv = pow(d, -1, n)
    if k == 1:
        return [[d_inv % n]]
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            minor = [row[:j] + row[j + 1 :] for r, row in enumerate(a) if r != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return [[x * d_inv % n for x in row] for row in adj]


def unit_multiplier(b: int, n: int) -> int:
    """A unit u mod n with u*b = gcd(b, n) mod n."""
    b %= n
    g = math.gcd(b, n)
    c, d = b // g, n // g
    u = pow(c, -1, d) if d > 1 else 1
    while math.gcd(u, n) != 1:
        u += d
    return u


class Span:
    """Row span of vectors over Z_n with sound membership tests.

    Rows are kept in a Howell-style form: one row per pivot column, pivot
    entries divide n, and for every stored row the annihilator multiple
    (n // pivot) * row is folded back in.  That closure is what makes the
    greedy left-to-right reduction in `contains` correct over zero divisors.
    """

    def __init__(self, n: int, width: int):
        self.n = n
        self.width = width
        self.rows: dict[int, list[int]] = {}

    def _install(self, j: int, v: list[int], work: list[list[int]]) -> None:
        """Make v the pivot row of column j and queue its annihilator."""
        n = self.n
        u = unit_multiplier(v[j], n)
        new = [u * x % n for x in v]
        self.rows[j] = new
        k = n // new[j]
        ann = [k * x % n for x in new]
        ann[j] = 0
        if any(ann):
            work.append(ann)

    def add(self, vec) -> None:
        n = self.n
        work = [[x % n for x in vec]]
        while work:
            v = work.pop()
            for j in range(self.width):
                if v[j] == 0:
                    continue
                row = self.rows.get(j)
                if row is None:
                    self._install(j, v, work)
                    break
                a = row[j]
                if v[j] % a == 0:
                    t = v[j] // a
                    v = [(x - t * y) % n for x, y in zip(v, row)]
                    continue
                # shrink the pivot: install the gcd combination right away
                # (its pivot strictly divides a, so column pivots only descend)
                _, s, t = _xgcd(a, v[j])
                combined = [(s * x + t * y) % n for x, y in zip(row, v)]
                self._install(j, combined, work)
                work.extend((row, v))
                break

    def contains(self, vec) -> bool:
        n = self.n
        v = [x % n for x in vec]
        for j in range(self.width):
            if v[j] == 0:
                continue
            row = self.rows.get(j)
            if row is None or v[j] % row[j] != 0:
                return False
            t = v[j] // row[j]
            v = [(x - t * y) % n for x, y in zip(v, row)]
        return not any(v)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b)."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def extract_basis(vectors, n: int) -> tuple[list[list[int]], bool]:
    """Greedy spanning set for the given vectors, preferring unit pivots.

    Selected vectors are scaled so their pivot entry is 1 and mutually
    reduced.  A residual with no unit entry cannot be normalized that way
    (the span need not be a free module); it is kept raw and the second
    return value goes False unless the unit-pivot rows absorb it after all.
    """
    unit_rows: list[tuple[int, list[int]]] = []
    stuck: list[list[int]] = []
    for vec in vectors:
        v = [x % n for x in vec]
        for col, b in unit_rows:
            if v[col]:
                t = v[col]
                v = [(x - t * y) % n for x, y in zip(v, b)]
        if not any(v):
            continue
        piv = next((i for i, x in enumerate(v) if math.gcd(x, n) == 1), None)
        if piv is None:
            stuck.append(v)
            continue
        inv = pow(v[piv], -1, n)
        v = [x * inv % n for x in v]
        for idx, (col, b) in enumerate(unit_rows):
            if b[piv]:
                t = b[piv]
                unit_rows[idx] = (col, [(x - t * y) % n for x, y in zip(b, v)])
        unit_rows.append((piv, v))
    if stuck:
        span = Span(n, len(stuck[0]))
        for _, b in unit_rows:
            span.add(b)
        stuck = [v for v in stuck if not span.contains(v)]
    return [b for _, b in unit_rows] + stuck, not stuck
