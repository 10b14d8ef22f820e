"""Dense matrices over a polynomial ring: products, determinants, minors.

Determinants use cofactor expansion below size 4 and fraction-free Bareiss
elimination from size 4 up; Bareiss's intermediate divisions are exact over
the polynomial ring, so everything stays in exact arithmetic. Minor index
sets follow the ascending-indices convention.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from .poly import Polynomial


def _worker_count() -> int:
    raw = os.environ.get("IDEALKIT_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def parallel_map(fn, items):
    """Map fn over items, fanning out when IDEALKIT_THREADS asks for it."""
    items = list(items)
    workers = _worker_count()
    if workers == 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


class PolyMatrix:
    """Immutable rectangular matrix with polynomial entries."""

    def __init__(self, ring, rows):
        self.ring = ring
        conv = []
        width = None
        for row in rows:
            out = []
            for v in row:
                if isinstance(v, Polynomial):
                    out.append(ring.convert(v))
                else:
                    out.append(ring.const(v))
            if width is None:
                width = len(out)
            elif len(out) != width:
                raise ValueError("ragged matrix rows")
            conv.append(tuple(out))
        if not conv or width == 0:
            raise ValueError("matrix needs at least one row and column")
        self.rows = tuple(conv)
        self.nrows = len(conv)
        self.ncols = width

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, list(zip(*self.rows)))

    def mul(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.ring != self.ring:
            raise ValueError("matrix product over mismatched rings")
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        zero = self.ring.zero
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def __mul__(self, other):
        return self.mul(other)

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            return self.ring == other.ring and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.rows))

    def submatrix(self, row_idx, col_idx) -> "PolyMatrix":
        rows = sorted(row_idx)
        cols = sorted(col_idx)
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("repeated index in submatrix selection")
        return PolyMatrix(
            self.ring, [[self.rows[i][j] for j in cols] for i in rows]
        )

    def det(self) -> Polynomial:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n < 4:
            return self._det_cofactor()
        return self._det_bareiss()

    def _det_cofactor(self) -> Polynomial:
        n = self.nrows
        r = self.rows
        if n == 1:
            return r[0][0]
        if n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def _det_bareiss(self) -> Polynomial:
        n = self.nrows
        m = [list(row) for row in self.rows]
        sign = 1
        prev = self.ring.one
        for k in range(n - 1):
            pivot_row = None
            for r in range(k, n):
                if not m[r][k].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                return self.ring.zero
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            pk = m[k][k]
            for i in range(k + 1, n):
                mik = m[i][k]
                for j in range(k + 1, n):
                    num = m[i][j] * pk - mik * m[k][j]
                    m[i][j] = num.divexact(prev)
                m[i][k] = self.ring.zero
            prev = pk
        d = m[n - 1][n - 1]
        return -d if sign < 0 else d

    def minor(self, row_idx, col_idx) -> Polynomial:
        """Determinant of the submatrix on the given rows and columns."""
        sub = self.submatrix(row_idx, col_idx)
        if sub.nrows != sub.ncols:
            raise ValueError("minor index sets must have equal size")
        return sub.det()

    def minors(self, size: int):
        """All size x size minors, keyed by (rows, cols) ascending tuples."""
        if size < 1 or size > min(self.nrows, self.ncols):
            raise ValueError("minor size out of range")
        keys = [
            (r, c)
            for r in combinations(range(self.nrows), size)
            for c in combinations(range(self.ncols), size)
        ]
        vals = parallel_map(lambda rc: self.minor(*rc), keys)
        return dict(zip(keys, vals))

    def maximal_minors(self):
        """Minors of maximal size, deduplicated up to sign.

        Returns a list in scan order; each nonzero value is sign-normalized
        (lead coefficient positive over the rationals, least residue not
        above p // 2 over a prime field). Zero appears at most once.
        """
        size = min(self.nrows, self.ncols)
        seen = set()
        out = []
        for val in self.minors(size).values():
            canon = canonical_sign(val)
            h = frozenset(canon.terms.items())
            if h not in seen:
                seen.add(h)
                out.append(canon)
        return out

    def entries(self):
        return [e for row in self.rows for e in row]

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols} over {self.ring!r})"

    def __str__(self):
        cells = [[str(e) for e in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(
            "[ " + "  ".join(c.rjust(width) for c in row) + " ]"
            for row in cells
        )


def canonical_sign(p: Polynomial) -> Polynomial:
    """Pick the canonical representative of {p, -p}."""
    if p.is_zero():
        return p
    lc = p.lead_coeff()
    field = p.ring.field
    if field.char == 0:
        return p if lc > 0 else -p
    return p if lc <= field.char // 2 else -p
