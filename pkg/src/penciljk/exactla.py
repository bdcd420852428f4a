"""Exact linear algebra over the rationals.

Matrices are dense, row major, with ``fractions.Fraction`` entries.  All
rank-revealing routines go through a fraction-free (Bareiss) integer
elimination: each row is scaled by the lcm of its denominators first, which
changes neither the rank nor the right kernel.  Kernel vectors are returned
as primitive integer vectors (content removed, first nonzero entry positive)
so that results are canonical and cheap to feed back into integer
elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Mat:
    """Immutable rational matrix.  Zero row or column counts are allowed."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, rows: Sequence[Sequence], n: int | None = None):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if n is not None and n != width:
                raise ValueError("explicit width disagrees with rows")
            self.n = width
        else:
            if n is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.n = n
        self.m = len(data)
        self.rows = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, m: int, n: int) -> "Mat":
        return cls([[0] * n for _ in range(m)], n=n)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n=n)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence], m: int | None = None) -> "Mat":
        cols = [tuple(_frac(x) for x in c) for c in cols]
        if cols:
            m = len(cols[0])
            if any(len(c) != m for c in cols):
                raise ValueError("ragged columns")
        elif m is None:
            raise ValueError("empty column list needs an explicit row count")
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(m)], n=len(cols))

    # -- basic structure ----------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    def row(self, i: int) -> Vec:
        return self.rows[i]

    def col(self, j: int) -> Vec:
        return tuple(r[j] for r in self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def transpose(self) -> "Mat":
        return Mat([[self.rows[i][j] for i in range(self.m)] for j in range(self.n)], n=self.m)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Mat":
        return Mat([[self.rows[i][j] for j in col_idx] for i in row_idx], n=len(col_idx))

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_square(self) -> bool:
        return self.m == self.n

    def is_skew(self) -> bool:
        if self.m != self.n:
            return False
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(self.m) for j in range(i, self.n))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], n=self.n)

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], n=self.n)

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self.rows], n=self.n)

    def scale(self, c) -> "Mat":
        c = _frac(c)
        return Mat([[c * a for a in r] for r in self.rows], n=self.n)

    def __mul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.n != other.m:
            raise ValueError(f"shape mismatch {self.m}x{self.n} * {other.m}x{other.n}")
        ot = other.transpose().rows
        return Mat(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.rows],
            n=other.n,
        )

    def apply(self, v: Sequence) -> Vec:
        v = [_frac(x) for x in v]
        if len(v) != self.n:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def _same_shape(self, other: "Mat") -> None:
        if self.m != other.m or self.n != other.n:
            raise ValueError(f"shape mismatch {self.m}x{self.n} vs {other.m}x{other.n}")

    # -- block assembly -----------------------------------------------

    @staticmethod
    def hstack(blocks: Sequence["Mat"]) -> "Mat":
        if not blocks:
            raise ValueError("nothing to stack")
        m = blocks[0].m
        if any(b.m != m for b in blocks):
            raise ValueError("row count mismatch")
        return Mat(
            [[x for b in blocks for x in b.rows[i]] for i in range(m)],
            n=sum(b.n for b in blocks),
        )

    @staticmethod
    def vstack(blocks: Sequence["Mat"]) -> "Mat":
        if not blocks:
            raise ValueError("nothing to stack")
        n = blocks[0].n
        if any(b.n != n for b in blocks):
            raise ValueError("column count mismatch")
        rows: list[Sequence] = []
        for b in blocks:
            rows.extend(b.rows)
        return Mat(rows, n=n)

    @staticmethod
    def block_diag(blocks: Sequence["Mat"]) -> "Mat":
        m = sum(b.m for b in blocks)
        n = sum(b.n for b in blocks)
        out = [[Fraction(0)] * n for _ in range(m)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.m):
                for j in range(b.n):
                    out[i0 + i][j0 + j] = b.rows[i][j]
            i0 += b.m
            j0 += b.n
        return Mat(out, n=n)

    # -- misc ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.m == other.m and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.rows))

    def __repr__(self) -> str:
        return f"Mat({[[str(x) for x in r] for r in self.rows]})"


# ---------------------------------------------------------------------------
# integer elimination core


def _int_rows(mat: Mat) -> list[list[int]]:
    """Scale each row to integers.  Row scalings preserve rank and kernel."""
    out = []
    for row in mat.rows:
        mult = 1
        for x in row:
            mult = lcm(mult, x.denominator)
        out.append([int(x * mult) for x in row])
    return out


def _bareiss_echelon(rows: list[list[int]], n: int) -> tuple[int, list[int]]:
    """In-place fraction-free row echelon form.

    Returns (rank, pivot column list).  Entries stay integral: every
    intermediate value is a minor of the scaled input (Sylvester identity),
    so the division by the previous pivot is exact.
    """
    m = len(rows)
    r = 0
    prev = 1
    piv_cols: list[int] = []
    for c in range(n):
        best = -1
        for i in range(r, m):
            if rows[i][c]:
                if best < 0 or abs(rows[i][c]) < abs(rows[best][c]):
                    best = i
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        pivot = rows[r][c]
        # every remaining row picks up a factor of the pivot, even where the
        # leading entry is zero; dropping it would break the exact divisions
        for i in range(r + 1, m):
            head = rows[i][c]
            ri = rows[i]
            rr = rows[r]
            for j in range(c + 1, n):
                ri[j] = (ri[j] * pivot - head * rr[j]) // prev
            ri[c] = 0
        prev = pivot
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    return r, piv_cols


def rank(mat: Mat) -> int:
    if mat.m == 0 or mat.n == 0:
        return 0
    rows = _int_rows(mat)
    r, _ = _bareiss_echelon(rows, mat.n)
    return r


def det(mat: Mat) -> Fraction:
    if not mat.is_square():
        raise ValueError("determinant of a non-square matrix")
    if mat.m == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in mat.rows:
        mult = 1
        for x in row:
            mult = lcm(mult, x.denominator)
        scale *= mult
        rows.append([int(x * mult) for x in row])
    # track row swaps through a signed Bareiss pass
    n = mat.n
    sign = 1
    prev = 1
    r = 0
    for c in range(n):
        best = -1
        for i in range(r, n):
            if rows[i][c]:
                best = i
                break
        if best < 0:
            return Fraction(0)
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
            sign = -sign
        pivot = rows[r][c]
        for i in range(r + 1, n):
            head = rows[i][c]
            ri = rows[i]
            rr = rows[r]
            for j in range(c + 1, n):
                ri[j] = (ri[j] * pivot - head * rr[j]) // prev
            ri[c] = 0
        prev = pivot
        r += 1
    return Fraction(sign * prev, 1) / scale


def _primitive(vec: Iterable[Fraction]) -> Vec:
    """Clear denominators, remove content, make first nonzero entry positive."""
    vec = list(vec)
    mult = 1
    for x in vec:
        mult = lcm(mult, x.denominator)
    ints = [int(x * mult) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(Fraction(0) for _ in ints)
    for v in ints:
        if v:
            if v < 0:
                g = -g
            break
    return tuple(Fraction(v // g) for v in ints)


def kernel_basis(mat: Mat) -> list[Vec]:
    """Exact basis of the right kernel, as primitive integer vectors."""
    if mat.n == 0:
        return []
    if mat.m == 0:
        return [tuple(Fraction(1 if i == j else 0) for i in range(mat.n)) for j in range(mat.n)]
    rows = _int_rows(mat)
    r, piv_cols = _bareiss_echelon(rows, mat.n)
    piv_set = set(piv_cols)
    free_cols = [j for j in range(mat.n) if j not in piv_set]
    basis: list[Vec] = []
    for f in free_cols:
        x = [Fraction(0)] * mat.n
        x[f] = Fraction(1)
        for k in range(r - 1, -1, -1):
            c = piv_cols[k]
            s = sum((Fraction(rows[k][j]) * x[j] for j in range(c + 1, mat.n) if x[j]), Fraction(0))
            x[c] = -s / rows[k][c]
        basis.append(_primitive(x))
    return basis


def row_space_basis(vectors: Sequence[Sequence[Fraction]], n: int) -> list[Vec]:
    """Primitive basis of the span of the given row vectors."""
    rows = []
    for v in vectors:
        mult = 1
        for x in v:
            mult = lcm(mult, _frac(x).denominator)
        rows.append([int(_frac(x) * mult) for x in v])
    r, _ = _bareiss_echelon(rows, n)
    return [_primitive(Fraction(x) for x in rows[k]) for k in range(r)]


def solve_unique(a: Mat, b: Sequence) -> Vec:
    """Solve a x = b when the solution exists and is unique."""
    b = [_frac(x) for x in b]
    if len(b) != a.m:
        raise ValueError("right-hand side length mismatch")
    aug = Mat([list(row) + [-bv] for row, bv in zip(a.rows, b)], n=a.n + 1)
    if a.m == 0:
        if a.n == 0:
            return ()
        raise ValueError("underdetermined system")
    ker = kernel_basis(aug)
    sols = [v for v in ker if v[a.n] != 0]
    if not sols:
        raise ValueError("inconsistent linear system")
    if len(ker) != 1:
        raise ValueError("underdetermined system")
    v = sols[0]
    t = v[a.n]
    return tuple(x / t for x in v[: a.n])


def pfaffian(mat: Mat) -> Fraction:
    """Pfaffian of a skew-symmetric matrix of even size.

    Congruence reduction: transvections have determinant one and leave the
    pfaffian unchanged, a row/column pair swap flips its sign.
    """
    if not mat.is_square():
        raise ValueError("pfaffian of a non-square matrix")
    if mat.m % 2 != 0:
        raise ValueError("pfaffian needs even size")
    if not mat.is_skew():
        raise ValueError("pfaffian of a non-skew matrix")
    n = mat.m
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in mat.rows]
    result = Fraction(1)
    for k in range(0, n, 2):
        piv = -1
        for j in range(k + 1, n):
            if a[k][j]:
                piv = j
                break
        if piv < 0:
            return Fraction(0)
        if piv != k + 1:
            a[k + 1], a[piv] = a[piv], a[k + 1]
            for row in a:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            result = -result
        p = a[k][k + 1]
        for j in range(k + 2, n):
            c = a[k][j] / p
            if c:
                for i in range(n):
                    a[i][j] -= c * a[i][k + 1]
                for jj in range(n):
                    a[j][jj] -= c * a[k + 1][jj]
        q = a[k + 1][k]
        for j in range(k + 2, n):
            c = a[k + 1][j] / q
            if c:
                for i in range(n):
                    a[i][j] -= c * a[i][k]
                for jj in range(n):
                    a[j][jj] -= c * a[k][jj]
        result *= p
    return result
