"""Exact integer linear algebra: Smith normal form and ranks over Q or F_p.

All arithmetic uses Python's arbitrary-precision integers; intermediate
values of an elimination are allowed to grow without any overflow semantics.
"""

from dataclasses import dataclass
from math import gcd, isqrt


class IntegerMatrix:
    """Dense exact-integer matrix stored as a list of row lists."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix data does not match declared shape")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, data):
        data = [list(r) for r in data]
        cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def is_zero(self):
        return all(not v for row in self.data for v in row)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("incompatible shapes for multiplication")
        ot = list(zip(*other.data)) if other.data else []
        out = []
        for row in self.data:
            out.append([sum(a * b for a, b in zip(row, col)) for col in ot]
                       if ot else [0] * other.cols)
        return IntegerMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        return (isinstance(other, IntegerMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __repr__(self):
        return f"IntegerMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SNFResult:
    """Rank and invariant factors d_1 | d_2 | ... | d_r, all positive.

    Factors equal to 1 are kept so that ``len(invariant_factors) == rank``;
    callers building torsion strip them.
    """

    rank: int
    invariant_factors: tuple


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _divisibility_chain(values):
    """Normalize a multiset of nonzero moduli into d_1 | d_2 | ... order.

    Repeatedly replaces a non-dividing pair (a, b) with (gcd, lcm); this is
    exact on isomorphism classes (CRT) and terminates.
    """
    vals = [abs(v) for v in values]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a // g * b
                    changed = True
    vals.sort()
    return vals


def _round_div(a, b):
    """Quotient with minimal-magnitude remainder: |a - qb| <= |b| / 2."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def smith_normal_form(M):
    """Invariant factors of an integer matrix, in divisibility order."""
    m, n = M.rows, M.cols
    D = [row[:] for row in M.data]

    for k in range(min(m, n)):
        while True:
            # Pivot on the smallest remaining entry; rounded-quotient
            # reductions then shrink the pivot like the Euclidean algorithm,
            # which keeps intermediate entries from exploding.
            best = None
            for i in range(k, m):
                Di = D[i]
                for j in range(k, n):
                    v = Di[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, bi, bj = best
            if bi != k:
                D[k], D[bi] = D[bi], D[k]
            if bj != k:
                for row in D:
                    row[k], row[bj] = row[bj], row[k]
            p = D[k][k]
            clean = True
            Dk = D[k]
            for i in range(k + 1, m):
                a = D[i][k]
                if a:
                    q = _round_div(a, p)
                    if q:
                        D[i] = [vi - q * vk for vi, vk in zip(D[i], Dk)]
                    if D[i][k]:
                        clean = False
            for j in range(k + 1, n):
                a = Dk[j]
                if a:
                    q = _round_div(a, p)
                    if q:
                        for row in D:
                            row[j] -= q * row[k]
                    if Dk[j]:
                        clean = False
            if clean:
                break
        if D[k][k] == 0:
            break

    diag = [D[i][i] for i in range(min(m, n)) if D[i][i] != 0]
    factors = _divisibility_chain(diag)
    return SNFResult(rank=len(factors), invariant_factors=tuple(factors))


def _strip_content(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for j in row:
            row[j] //= g
    return row


def _rank_rational(data):
    """Rank over Q by integer-preserving sparse elimination.

    Rows are kept as {column: value} dicts with their content divided out;
    the row update (pv/g)*row - (rv/g)*pivot is an invertible operation over
    Q, so the rank is exact.
    """
    rows = []
    for r in data:
        d = {j: v for j, v in enumerate(r) if v}
        if d:
            rows.append(_strip_content(d))
    rank = 0
    while rows:
        pi = min(range(len(rows)),
                 key=lambda i: (len(rows[i]), min(map(abs, rows[i].values()))))
        prow = rows.pop(pi)
        pc, pv = min(prow.items(), key=lambda it: (abs(it[1]), it[0]))
        rank += 1
        nxt = []
        for row in rows:
            rv = row.pop(pc, None)
            if rv is None:
                nxt.append(row)
                continue
            g = gcd(pv, rv)
            a, c = pv // g, rv // g
            new = {j: a * v for j, v in row.items()}
            for j, v in prow.items():
                if j == pc:
                    continue
                w = new.get(j, 0) - c * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            if new:
                nxt.append(_strip_content(new))
        rows = nxt
    return rank


def _rank_mod_p(data, p):
    rows = []
    for r in data:
        d = {}
        for j, v in enumerate(r):
            v %= p
            if v:
                d[j] = v
        if d:
            rows.append(d)
    rank = 0
    while rows:
        pi = min(range(len(rows)), key=lambda i: len(rows[i]))
        prow = rows.pop(pi)
        pc, pv = min(prow.items())
        inv = pow(pv, -1, p)
        rank += 1
        nxt = []
        for row in rows:
            rv = row.pop(pc, None)
            if rv is None:
                nxt.append(row)
                continue
            c = rv * inv % p
            for j, v in prow.items():
                if j == pc:
                    continue
                w = (row.get(j, 0) - c * v) % p
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
            if row:
                nxt.append(row)
        rows = nxt
    return rank


def rank_over_field(M, characteristic):
    """Rank of M over Q (characteristic 0) or over F_p (characteristic p)."""
    if characteristic == 0:
        return _rank_rational(M.data)
    if not is_prime(characteristic):
        raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
    return _rank_mod_p(M.data, characteristic)
