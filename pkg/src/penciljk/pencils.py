"""Kronecker-form invariants of matrix pencils, computed exactly.

A pencil is a pair of rational matrices (A, B) of a common shape, thought
of as the one-parameter family A + t*B.  Its complete strict-equivalence
datum consists of

* the normal rank (the maximum of rank(A + t*B) over all t),
* minimal column indices, recorded as widths of horizontal singular
  blocks (width w block occupies w-1 rows and w columns),
* minimal row indices, recorded as heights of vertical singular blocks,
* eigenvalue classes with their block size multisets.  A class is either
  a monic irreducible polynomial q with q(t0) = 0 exactly when the rank
  of A + t0*B drops, or the infinite class, detected on the reversed
  pencil B + s*A at s = 0.

Everything here is exact.  Ranks at specific parameter values are exact
by construction; the normal rank is obtained by sampling min(m, n) + 1
integer values, which is provably sufficient because every minor of
A + t*B is a polynomial in t of degree at most min(m, n).

Minimal indices come from a nested-kernel chain at a regular parameter
value mu: with M = A + mu*B,

    W_1 = ker M,   W_{k+1} = preimage under M of B(W_k).

At a regular value only horizontal blocks feed this chain, and a block
of width w contributes min(k, w) to dim W_k, so consecutive differences
count blocks of width >= k.  Eigenvalue data deliberately does not use
chains (at a singular value the chain over-counts); it comes from ranks
of constant matrices instead: candidate classes are the irreducible
factors shared by two full-rank minors of A + t*B, and block sizes at a
class are decoded from rank defects of block bidiagonal resolvents (see
``_sizes_at_class``).  Eliminating A + t*B as a polynomial matrix would
give the same answers but suffers badly from coefficient growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InternalConsistencyError
from .exactla import (
    Mat,
    _bareiss_echelon,
    _frac,
    _int_rows,
    det,
    kernel_basis,
    rank,
    row_space_basis,
)
from .polys import (
    BinForm,
    Poly,
    coprime_basis,
    format_poly,
    poly_gcd,
    poly_sort_key,
)


@dataclass(frozen=True)
class Pencil:
    a: Mat
    b: Mat

    def __post_init__(self):
        if (self.a.m, self.a.n) != (self.b.m, self.b.n):
            raise ValueError("pencil parts must share a shape")

    @property
    def m(self) -> int:
        return self.a.m

    @property
    def n(self) -> int:
        return self.a.n

    @property
    def shape(self) -> tuple[int, int]:
        return (self.a.m, self.a.n)

    def at(self, t) -> Mat:
        """The matrix A + t*B."""
        return self.a + self.b.scale(_frac(t))

    def transposed(self) -> "Pencil":
        return Pencil(self.a.transpose(), self.b.transpose())

    def reversed(self) -> "Pencil":
        """The pencil B + s*A; its eigenvalue at 0 is this pencil's infinity."""
        return Pencil(self.b, self.a)

    def entries(self) -> list[list[Poly]]:
        """Entries of A + t*B as degree <= 1 polynomials in t."""
        return [
            [Poly([self.a.entry(i, j), self.b.entry(i, j)]) for j in range(self.n)]
            for i in range(self.m)
        ]

    def __repr__(self) -> str:
        return f"Pencil(a={self.a.tolist()}, b={self.b.tolist()})"


def pencil_from_lists(a_rows, b_rows) -> Pencil:
    return Pencil(Mat(a_rows), Mat(b_rows))


@dataclass(frozen=True)
class EigClass:
    """An eigenvalue class: a monic irreducible polynomial, or infinity."""

    poly: Poly | None = None

    def __post_init__(self):
        if self.poly is not None:
            if self.poly.degree() < 1 or self.poly.leading() != 1:
                raise ValueError("finite class needs a monic nonconstant polynomial")

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def root_count(self) -> int:
        """Number of complex points in the class (degree, or 1 for infinity)."""
        return 1 if self.poly is None else self.poly.degree()

    def sort_key(self):
        if self.poly is None:
            return (1, ())
        return (0,) + poly_sort_key(self.poly)

    def label(self) -> str:
        return "inf" if self.poly is None else format_poly(self.poly, "t")

    @classmethod
    def infinite(cls) -> "EigClass":
        return cls(None)

    @classmethod
    def at_root(cls, root) -> "EigClass":
        return cls(Poly.linear_root(root))


@dataclass(frozen=True)
class StrictInvariants:
    """Complete strict-equivalence datum of an m x n pencil.

    ``horizontal`` and ``vertical`` are block widths/heights sorted
    descending; ``jordan`` maps each eigenvalue class to its block sizes,
    sorted descending, stored as a tuple sorted by class.  Construction
    checks the dimension bookkeeping, so an instance is always coherent.
    """

    m: int
    n: int
    rank: int
    horizontal: tuple[int, ...]
    vertical: tuple[int, ...]
    jordan: tuple[tuple[EigClass, tuple[int, ...]], ...]

    def __post_init__(self):
        h, v = self.horizontal, self.vertical
        if list(h) != sorted(h, reverse=True) or list(v) != sorted(v, reverse=True):
            raise InternalConsistencyError("block lists must be sorted descending")
        if any(w < 1 for w in h) or any(u < 1 for u in v):
            raise InternalConsistencyError("block sizes must be positive")
        classes = [c for c, _ in self.jordan]
        if classes != sorted(classes, key=EigClass.sort_key) or len(set(classes)) != len(classes):
            raise InternalConsistencyError("eigenvalue classes must be sorted and distinct")
        for _, sizes in self.jordan:
            if not sizes or any(s < 1 for s in sizes) or list(sizes) != sorted(sizes, reverse=True):
                raise InternalConsistencyError("class sizes must be positive, sorted descending")
        j = self.jordan_dimension()
        if len(h) != self.n - self.rank:
            raise InternalConsistencyError("horizontal block count must be n - rank")
        if len(v) != self.m - self.rank:
            raise InternalConsistencyError("vertical block count must be m - rank")
        if sum(h) + sum(u - 1 for u in v) + j != self.n:
            raise InternalConsistencyError("column bookkeeping failed")
        if sum(w - 1 for w in h) + sum(v) + j != self.m:
            raise InternalConsistencyError("row bookkeeping failed")
        if sum(w - 1 for w in h) + sum(u - 1 for u in v) + j != self.rank:
            raise InternalConsistencyError("rank bookkeeping failed")

    def jordan_dimension(self) -> int:
        """Total dimension occupied by eigenvalue blocks, counting conjugates."""
        return sum(c.root_count * sum(sizes) for c, sizes in self.jordan)

    def finite_classes(self) -> list[tuple[EigClass, tuple[int, ...]]]:
        return [(c, s) for c, s in self.jordan if not c.is_infinite]

    def infinite_sizes(self) -> tuple[int, ...]:
        for c, s in self.jordan:
            if c.is_infinite:
                return s
        return ()


# ---------------------------------------------------------------------------
# rank and regular values


@lru_cache(maxsize=None)
def pencil_rank(p: Pencil) -> int:
    """Normal rank, via ranks at min(m, n) + 1 integer parameter values.

    An r x r minor of A + t*B has degree at most min(m, n) in t, so it
    cannot vanish at all sampled values unless it is identically zero.
    """
    best = 0
    bound = min(p.m, p.n)
    for t in range(bound + 1):
        best = max(best, rank(p.at(t)))
        if best == bound:
            break
    return best


class _Infinity:
    """Sentinel for the parameter value at infinity."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "inf"


INFINITY = _Infinity()


def is_regular_value(p: Pencil, t) -> bool:
    """True when the pencil attains its normal rank at parameter t.

    t may be INFINITY, in which case the degree-one coefficient alone is
    tested.
    """
    mat = p.b if t is INFINITY else p.at(t)
    return rank(mat) == pencil_rank(p)


def regular_value(p: Pencil) -> Fraction:
    """Smallest non-negative integer at which the pencil has full normal rank."""
    r = pencil_rank(p)
    t = 0
    while True:
        if rank(p.at(t)) == r:
            return Fraction(t)
        t += 1


# ---------------------------------------------------------------------------
# minimal indices


def _chain_dims(m_at_mu: Mat, b: Mat) -> list[int]:
    """Dimensions of the nested kernel chain W_1 <= W_2 <= ... until stable."""
    basis = kernel_basis(m_at_mu)
    dims = [len(basis)]
    if not basis:
        return dims
    while True:
        bw = Mat.from_cols([b.apply(v) for v in basis], m_at_mu.m)
        stacked = Mat.hstack([m_at_mu, bw.scale(-1)])
        projected = [vec[: m_at_mu.n] for vec in kernel_basis(stacked)]
        new_basis = row_space_basis(projected, m_at_mu.n)
        if len(new_basis) == len(basis):
            return dims
        dims.append(len(new_basis))
        basis = new_basis


def _widths_from_dims(dims: list[int]) -> tuple[int, ...]:
    # dims[k-1] = sum over blocks of min(k, width); differences count widths >= k
    counts = [dims[0]] + [dims[k] - dims[k - 1] for k in range(1, len(dims))]
    counts.append(0)
    widths: list[int] = []
    for k in range(len(counts) - 1, 0, -1):
        widths.extend([k] * (counts[k - 1] - counts[k]))
    return tuple(widths)


def minimal_indices(p: Pencil) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(horizontal widths, vertical heights), each sorted descending."""
    mu = regular_value(p)
    widths = _widths_from_dims(_chain_dims(p.at(mu), p.b))
    pt = p.transposed()
    heights = _widths_from_dims(_chain_dims(pt.at(mu), pt.b))
    return widths, heights


# ---------------------------------------------------------------------------
# eigenvalue structure
#
# Strategy: every finite eigenvalue class divides every maximal minor of
# A + t*B, so factoring the gcd of two such minors yields a candidate
# superset of the classes.  The sizes at each candidate then come from
# exact ranks of constant matrices, which is far cheaper than polynomial
# elimination; candidates whose size list is empty are discarded.


def _invertible_profile(mat: Mat, from_end: bool) -> tuple[list[int], list[int]]:
    """Row and column indices of an invertible rank(mat) x rank(mat) submatrix.

    Rows are chosen first (pivots of the transposed echelon form), then
    columns inside those rows, which makes the intersection invertible.
    ``from_end`` flips the scan order so a second call can find a
    different witness.
    """
    row_order = list(range(mat.m))
    col_order = list(range(mat.n))
    if from_end:
        row_order.reverse()
        col_order.reverse()
    flipped = mat.submatrix(row_order, col_order)
    _, piv = _bareiss_echelon(_int_rows(flipped.transpose()), flipped.m)
    rows = sorted(row_order[i] for i in piv)
    _, piv = _bareiss_echelon(_int_rows(mat.submatrix(rows, col_order)), mat.n)
    cols = sorted(col_order[j] for j in piv)
    return rows, cols


def _interpolated_minor(p: Pencil, rows: list[int], cols: list[int]) -> Poly:
    """det of the (rows, cols) submatrix of A + t*B, degree <= len(rows)."""
    k = len(rows)
    points = [Fraction(t) for t in range(k + 1)]
    values = [det(p.at(t).submatrix(rows, cols)) for t in points]
    out = Poly()
    for i, (xi, yi) in enumerate(zip(points, values)):
        if yi == 0:
            continue
        basis = Poly([1])
        weight = Fraction(1)
        for j, xj in enumerate(points):
            if j != i:
                basis = basis * Poly([-xj, 1])
                weight *= xi - xj
        out = out + basis * (yi / weight)
    return out


def _candidate_classes(p: Pencil, r: int) -> list[Poly]:
    """Monic irreducible polynomials covering every finite eigenvalue class."""
    base = p.at(regular_value(p))
    rows, cols = _invertible_profile(base, from_end=False)
    g = _interpolated_minor(p, rows, cols)
    rows2, cols2 = _invertible_profile(base, from_end=True)
    if (rows2, cols2) != (rows, cols):
        g = poly_gcd(g, _interpolated_minor(p, rows2, cols2))
    if g.degree() < 1:
        return []
    return coprime_basis([g])


def _kron(mat: Mat, block: Mat) -> Mat:
    rows = [
        Mat.hstack([block.scale(mat.entry(i, j)) for j in range(mat.n)])
        for i in range(mat.m)
    ]
    return Mat.vstack(rows)


def _block_bidiagonal(diag: Mat, sup: Mat, k: int) -> Mat:
    """k x k block matrix with diag on the diagonal, sup above it."""
    zero = Mat.zeros(diag.m, diag.n)
    rows = []
    for i in range(k):
        blocks = [zero] * k
        blocks[i] = diag
        if i + 1 < k:
            blocks[i + 1] = sup
        rows.append(Mat.hstack(blocks))
    return Mat.vstack(rows)


def _sizes_at_class(p: Pencil, cls: Poly, r: int) -> tuple[int, ...]:
    """Jordan block sizes of the pencil at a monic irreducible class.

    With alpha a root of cls, the k-fold block bidiagonal matrix T_k
    built from diag = A + alpha*B and sup = B satisfies

        k*r - rank(T_k) = sum over blocks at alpha of min(k, size),

    while singular blocks and other classes contribute full rank.  For
    deg cls > 1 the root is adjoined by substituting the companion
    matrix of cls, which multiplies all ranks by the degree.
    """
    d = cls.degree()
    if d == 1:
        diag = p.at(-cls.coeffs[0] / cls.coeffs[1])
        sup = p.b
    else:
        monic = cls.monic()
        comp = Mat.from_cols(
            [
                [1 if i == j + 1 else 0 for i in range(d)]
                for j in range(d - 1)
            ]
            + [[-c for c in monic.coeffs[:d]]],
            d,
        )
        diag = _kron(p.a, Mat.identity(d)) + _kron(p.b, comp)
        sup = _kron(p.b, Mat.identity(d))
    defects: list[int] = []
    cap = min(p.m, p.n)
    k = 1
    while True:
        scaled = rank(_block_bidiagonal(diag, sup, k))
        if scaled % d:
            raise InternalConsistencyError(
                "resolvent rank not divisible by the class degree"
            )
        defect = k * r - scaled // d
        if defect == (defects[-1] if defects else 0):
            break
        if defect > cap or (defects and defect < defects[-1]):
            raise InternalConsistencyError("resolvent rank defects not monotone")
        defects.append(defect)
        k += 1
    if not defects:
        return ()
    return _widths_from_dims(defects)


@lru_cache(maxsize=None)
def _jordan_structure(
    p: Pencil,
) -> tuple[tuple[tuple[Poly, tuple[int, ...]], ...], tuple[int, ...]]:
    """Finite classes with size multisets, plus infinite block sizes."""
    r = pencil_rank(p)
    if r == 0:
        return (), ()
    finite = []
    for cls in _candidate_classes(p, r):
        sizes = _sizes_at_class(p, cls, r)
        if sizes:
            finite.append((cls, sizes))
    inf_sizes = _sizes_at_class(p.reversed(), Poly.x(), r)
    return tuple(finite), inf_sizes


@lru_cache(maxsize=None)
def invariant_factors(p: Pencil) -> tuple[Poly, ...]:
    """Monic invariant factors of A + t*B over the polynomial ring."""
    r = pencil_rank(p)
    finite, _ = _jordan_structure(p)
    out = [Poly([1]) for _ in range(r)]
    for cls, sizes in finite:
        for i, s in enumerate(sizes):
            # largest sizes land in the last factor: d_1 | d_2 | ... | d_r
            out[r - 1 - i] = out[r - 1 - i] * cls**s
    return tuple(out)


def elementary_divisors(
    p: Pencil,
) -> tuple[list[tuple[Poly, tuple[int, ...]]], tuple[int, ...]]:
    """Finite classes with size multisets, plus infinite block sizes.

    A finite class is a monic irreducible polynomial whose roots are
    eigenvalues; infinite sizes are read off the reversed pencil B + s*A
    at s = 0.
    """
    finite, inf_sizes = _jordan_structure(p)
    return [(cls, sizes) for cls, sizes in finite], inf_sizes


def characteristic_polynomial(p: Pencil) -> BinForm:
    """Gcd of the top-rank minors of the homogenized pencil u*A + t*B.

    Equals u**e times the homogenization of the product of the invariant
    factors of A + t*B, where e is the total size of infinite blocks.
    """
    finite, inf_sizes = elementary_divisors(p)
    prod = Poly([1])
    for f in invariant_factors(p):
        if f.degree() >= 1:
            prod = prod * f
    return BinForm.from_parts(sum(inf_sizes), prod.monic())


# ---------------------------------------------------------------------------
# the full datum


def strict_invariants(p: Pencil) -> StrictInvariants:
    r = pencil_rank(p)
    widths, heights = minimal_indices(p)
    finite, inf_sizes = elementary_divisors(p)
    jordan = [(EigClass(poly), sizes) for poly, sizes in finite]
    if inf_sizes:
        jordan.append((EigClass.infinite(), inf_sizes))
    jordan.sort(key=lambda cs: cs[0].sort_key())
    inv = StrictInvariants(
        m=p.m,
        n=p.n,
        rank=r,
        horizontal=widths,
        vertical=heights,
        jordan=tuple(jordan),
    )
    # cross-check: the finite part comes from A + t*B, the infinite part
    # from B + s*A; their degrees must add up to the total Jordan size
    if characteristic_polynomial(p).degree != inv.jordan_dimension():
        raise InternalConsistencyError(
            "characteristic form degree disagrees with the Jordan dimension"
        )
    return inv


def are_strictly_equivalent(p: Pencil, q: Pencil) -> bool:
    if p.shape != q.shape:
        return False
    return strict_invariants(p) == strict_invariants(q)


# ---------------------------------------------------------------------------
# canonical representatives


def _horizontal_block(width: int) -> tuple[Mat, Mat]:
    rows = width - 1
    a = [[1 if j == i + 1 else 0 for j in range(width)] for i in range(rows)]
    b = [[1 if j == i else 0 for j in range(width)] for i in range(rows)]
    return Mat(a, n=width), Mat(b, n=width)


def _vertical_block(height: int) -> tuple[Mat, Mat]:
    cols = height - 1
    a = [[1 if i == j + 1 else 0 for j in range(cols)] for i in range(height)]
    b = [[1 if i == j else 0 for j in range(cols)] for i in range(height)]
    return Mat(a, n=cols), Mat(b, n=cols)


def _companion(f: Poly) -> Mat:
    k = f.degree()
    rows = [[Fraction(0)] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = Fraction(1)
    for i in range(k):
        rows[i][k - 1] = -f.coeffs[i]
    return Mat(rows)


def _finite_block(cls: Poly, size: int) -> tuple[Mat, Mat]:
    # invariant factors of t*I - M are those of M, so M = -A must have the
    # single invariant factor cls**size
    if cls.degree() == 1:
        root = -cls.coeffs[0]
        dim = size
        rows = [[Fraction(0)] * dim for _ in range(dim)]
        for i in range(dim):
            rows[i][i] = -root
            if i + 1 < dim:
                rows[i][i + 1] = Fraction(1)
        a = Mat(rows)
    else:
        a = _companion(cls**size).scale(-1)
    return a, Mat.identity(a.m)


def _infinite_block(size: int) -> tuple[Mat, Mat]:
    rows = [
        [Fraction(1) if j == i + 1 else Fraction(0) for j in range(size)]
        for i in range(size)
    ]
    return Mat.identity(size), Mat(rows)


def _assemble_canonical(inv: StrictInvariants, jordan) -> Pencil:
    ablocks: list[Mat] = []
    bblocks: list[Mat] = []
    for w in inv.horizontal:
        a, b = _horizontal_block(w)
        ablocks.append(a)
        bblocks.append(b)
    for u in inv.vertical:
        a, b = _vertical_block(u)
        ablocks.append(a)
        bblocks.append(b)
    for cls, sizes in jordan:
        for s in sizes:
            if cls.is_infinite:
                a, b = _infinite_block(s)
            else:
                a, b = _finite_block(cls.poly, s)
            ablocks.append(a)
            bblocks.append(b)
    p = Pencil(Mat.block_diag(ablocks), Mat.block_diag(bblocks))
    if p.shape != (inv.m, inv.n):
        raise InternalConsistencyError("canonical pencil has the wrong shape")
    return p


def _canonical_pencil_any(inv: StrictInvariants) -> Pencil:
    """Canonical pencil for arbitrary classes, via companion blocks.

    Accepts classes of any degree; test-support path with no eigenvalue
    relabeling.
    """
    return _assemble_canonical(inv, inv.jordan)


def canonical_pencil(inv: StrictInvariants, assignment=None) -> Pencil:
    """Block-diagonal pencil realizing ``inv`` with explicit eigenvalues.

    Every finite class of ``inv`` must carry a single rational root.
    ``assignment`` optionally relabels those roots: a mapping from each
    finite class to the rational eigenvalue its Jordan blocks should use,
    required to be injective.  By default each class keeps its own root,
    and then ``strict_invariants`` of the result is exactly ``inv``.
    """
    finite = [(cls, sizes) for cls, sizes in inv.jordan if not cls.is_infinite]
    for cls, _ in finite:
        if cls.root_count != 1:
            raise ValueError(
                "class %s has %d conjugate roots; explicit construction "
                "needs one rational eigenvalue per class" % (cls.label(), cls.root_count)
            )
    if assignment is None:
        values = {cls: -cls.poly.coeffs[0] for cls, _ in finite}
    else:
        values = {}
        for cls, _ in finite:
            if cls not in assignment:
                raise ValueError("assignment missing class %s" % cls.label())
            values[cls] = Fraction(assignment[cls])
    if len(set(values.values())) != len(values):
        raise ValueError("assignment is not injective")
    jordan = []
    for cls, sizes in inv.jordan:
        if cls.is_infinite:
            jordan.append((cls, sizes))
        else:
            mu = values[cls]
            jordan.append((EigClass(Poly((-mu, Fraction(1)))), sizes))
    return _assemble_canonical(inv, jordan)
