"""Invariants of pencils of skew-symmetric bilinear forms.

A skew pencil is classified up to congruence by the same data as up to
strict equivalence, and skewness forces that data to pair up: minimal
column and row indices coincide, and within each eigenvalue class every
Jordan size occurs an even number of times.  The folded record keeps one
Kronecker index per index pair (a pair of minimal indices k, k spans a
block of dimension 2k-1) and one even size per Jordan pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import (
    ConstantRankHypothesisError,
    InternalConsistencyError,
    RegularPointHypothesisError,
    SparsityPatternError,
)
from .exactla import Mat, Vec, kernel_basis, row_space_basis
from .pencils import (
    EigClass,
    Pencil,
    _finite_block,
    _infinite_block,
    is_regular_value,
    pencil_rank,
    strict_invariants,
)


def _require_skew(p: Pencil) -> None:
    if p.m != p.n or not (p.a.is_skew() and p.b.is_skew()):
        raise ValueError("both coefficient matrices must be skew-symmetric")


def _check_desc(values) -> bool:
    return all(values[i] >= values[i + 1] for i in range(len(values) - 1))


@dataclass(frozen=True)
class SkewJK:
    """Folded invariants of a skew pencil.

    kronecker: one index k >= 1 per pair of minimal indices, descending.
    jordan: per eigenvalue class, the even dimensions of the skew Jordan
    blocks, descending; classes sorted and distinct.
    """

    dim: int
    kronecker: tuple[int, ...]
    jordan: tuple[tuple[EigClass, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        if not _check_desc(self.kronecker) or any(k < 1 for k in self.kronecker):
            raise InternalConsistencyError("kronecker indices must be positive descending")
        classes = [cls for cls, _ in self.jordan]
        keys = [cls.sort_key() for cls in classes]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise InternalConsistencyError("eigenvalue classes must be sorted and distinct")
        for _, sizes in self.jordan:
            if not sizes or not _check_desc(sizes):
                raise InternalConsistencyError("jordan sizes must be non-empty descending")
            if any(s < 2 or s % 2 for s in sizes):
                raise InternalConsistencyError("skew jordan sizes must be even and >= 2")
        if sum(2 * k - 1 for k in self.kronecker) + self.jordan_dimension() != self.dim:
            raise InternalConsistencyError("dimension bookkeeping failed")

    def jordan_dimension(self) -> int:
        return sum(cls.root_count * sum(sizes) for cls, sizes in self.jordan)

    def slot_totals(self) -> tuple[int, ...]:
        """Sum of block dimensions per slot, one entry per class root, sorted."""
        totals: list[int] = []
        for cls, sizes in self.jordan:
            totals.extend([sum(sizes)] * cls.root_count)
        return tuple(sorted(totals, reverse=True))


def skew_jk_invariants(p: Pencil) -> SkewJK:
    """Fold the strict invariants of a skew pencil into congruence data."""
    _require_skew(p)
    inv = strict_invariants(p)
    if inv.horizontal != inv.vertical:
        raise InternalConsistencyError("index pairing failed on a skew pencil")
    jordan = []
    for cls, sizes in inv.jordan:
        counts = Counter(sizes)
        if any(c % 2 for c in counts.values()):
            raise InternalConsistencyError("jordan pairing failed on a skew pencil")
        folded = sorted(
            (2 * s for s, c in counts.items() for _ in range(c // 2)), reverse=True
        )
        jordan.append((cls, tuple(folded)))
    return SkewJK(dim=p.m, kronecker=inv.horizontal, jordan=tuple(jordan))


# ---------------------------------------------------------------------------
# core and mantle


def _regular_integers(p: Pencil, count: int) -> list[int]:
    vals: list[int] = []
    t = 0
    while len(vals) < count:
        if is_regular_value(p, t):
            vals.append(t)
        t += 1
    return vals


def core_subspace(p: Pencil) -> list[Vec]:
    """Span of the kernels of A + tB over regular values t.

    Kernel vectors depend polynomially on t with degree below dim, so
    dim + 1 regular sample points exhaust the span.
    """
    _require_skew(p)
    vectors: list[Vec] = []
    for t in _regular_integers(p, p.n + 1):
        vectors.extend(kernel_basis(p.at(t)))
    return row_space_basis(vectors, p.n)


def mantle_subspace(p: Pencil) -> list[Vec]:
    """Orthogonal complement of the core with respect to a regular form."""
    _require_skew(p)
    core = core_subspace(p)
    mu = _regular_integers(p, 1)[0]
    form = p.at(mu)
    constraints = Mat([form.transpose().apply(k) for k in core], n=p.n)
    return kernel_basis(constraints)


# ---------------------------------------------------------------------------
# canonical skew pencils


def _skew_double(block: tuple[Mat, Mat]) -> tuple[Mat, Mat]:
    # X -> [[0, X], [-X^T, 0]]
    out = []
    for x in block:
        top = Mat.hstack([Mat.zeros(x.m, x.m), x])
        bottom = Mat.hstack([x.transpose().scale(-1), Mat.zeros(x.n, x.n)])
        out.append(Mat.vstack([top, bottom]))
    return out[0], out[1]


def canonical_skew_pencil(jk: SkewJK) -> Pencil:
    """Block-diagonal skew pencil whose folded invariants are ``jk``."""
    ablocks: list[Mat] = []
    bblocks: list[Mat] = []
    for k in jk.kronecker:
        rows = k - 1
        xa = Mat([[1 if j == i + 1 else 0 for j in range(k)] for i in range(rows)], n=k)
        xb = Mat([[1 if j == i else 0 for j in range(k)] for i in range(rows)], n=k)
        a, b = _skew_double((xa, xb))
        ablocks.append(a)
        bblocks.append(b)
    for cls, sizes in jk.jordan:
        for s2 in sizes:
            s = s2 // 2
            if cls.is_infinite:
                a, b = _skew_double(_infinite_block(s))
            else:
                a, b = _skew_double(_finite_block(cls.poly, s))
            ablocks.append(a)
            bblocks.append(b)
    p = Pencil(Mat.block_diag(ablocks), Mat.block_diag(bblocks))
    if p.n != jk.dim:
        raise InternalConsistencyError("canonical skew pencil has the wrong dimension")
    return p


# ---------------------------------------------------------------------------
# block-structured pencils


def jk_of_block_pencil(p: Pencil, partition: tuple[int, int, int]) -> SkewJK:
    """Invariants of a skew pencil with a three-group coordinate split.

    The coordinates are grouped x, s, y in order.  The couplings
    (s, y), (y, s) and (y, y) must vanish in both coefficients.  Two
    hypotheses are checked and reported distinctly: the x-to-y coupling
    sub-pencil must have full row rank at every parameter value including
    infinity, and the s-to-s sub-pencil must be nondegenerate at some
    parameter value.  The result combines the Kronecker part of the
    former with the Jordan part of the latter.
    """
    _require_skew(p)
    nx, ns, ny = partition
    if min(nx, ns, ny) < 0 or nx + ns + ny != p.n:
        raise ValueError("partition does not split the coordinates")
    xi = list(range(nx))
    si = list(range(nx, nx + ns))
    yi = list(range(nx + ns, p.n))
    for rows, cols, name in ((si, yi, "(s, y)"), (yi, si, "(y, s)"), (yi, yi, "(y, y)")):
        for mat in (p.a, p.b):
            if not mat.submatrix(rows, cols).is_zero():
                raise SparsityPatternError("coupling block %s must vanish" % name)

    xy = Pencil(p.a.submatrix(xi, yi), p.b.submatrix(xi, yi))
    inv_xy = strict_invariants(xy)
    if inv_xy.vertical or inv_xy.jordan:
        raise ConstantRankHypothesisError(
            "x-to-y coupling is not of full row rank at every parameter value"
        )

    ss = Pencil(p.a.submatrix(si, si), p.b.submatrix(si, si))
    if pencil_rank(ss) != ns:
        raise RegularPointHypothesisError(
            "s-to-s sub-pencil is degenerate at every parameter value"
        )
    jordan = skew_jk_invariants(ss).jordan
    return SkewJK(dim=p.n, kronecker=inv_xy.horizontal, jordan=jordan)
