"""Shared generators for the test suite.

Random objects are always drawn from a seeded random.Random so every test
run sees the same data.  Canonical skew pencils are built here from
scratch rather than through the package's own assemblers, so recovery
tests do not depend on the code they are checking.
"""

from __future__ import annotations

import random
from fractions import Fraction

from penciljk.exactla import Mat, det, solve_unique
from penciljk.lie import LieAlgebra, Representation, check_homomorphism, check_jacobi
from penciljk.pencils import (
    EigClass,
    Pencil,
    StrictInvariants,
    _canonical_pencil_any,
)
from penciljk.polys import Poly
from penciljk.skewjk import SkewJK

SEED = 20250825

CLASS_POOL = (
    EigClass(Poly((0, 1))),               # t
    EigClass(Poly((-1, 1))),              # t - 1
    EigClass(Poly((1, 1))),               # t + 1
    EigClass(Poly((-3, 1))),              # t - 3
    EigClass(Poly((Fraction(1, 2), 1))),  # t + 1/2
    EigClass(Poly((1, 0, 1))),            # t^2 + 1
    EigClass(Poly((-2, 0, 1))),           # t^2 - 2
    EigClass(Poly((-1, -1, 1))),          # t^2 - t - 1
    EigClass(Poly((-2, 0, 0, 1))),        # t^3 - 2
    EigClass(None),                       # infinity
)


def random_invertible(rng: random.Random, k: int, bound: int = 5) -> Mat:
    """Integer matrix with entries in [-bound, bound] and nonzero determinant."""
    while True:
        mat = Mat([[rng.randint(-bound, bound) for _ in range(k)] for _ in range(k)])
        if det(mat) != 0:
            return mat


def scramble(p: Pencil, rng: random.Random, bound: int = 5) -> Pencil:
    """A random strictly equivalent pencil."""
    left = random_invertible(rng, p.m, bound)
    right = random_invertible(rng, p.n, bound)
    return Pencil(left * p.a * right, left * p.b * right)


def random_strict_invariants(
    rng: random.Random, max_m: int = 10, max_n: int = 12
) -> StrictInvariants:
    while True:
        horizontal = tuple(
            sorted((rng.randint(1, 4) for _ in range(rng.randint(0, 2))), reverse=True)
        )
        vertical = tuple(
            sorted((rng.randint(1, 4) for _ in range(rng.randint(0, 2))), reverse=True)
        )
        classes = rng.sample(CLASS_POOL, rng.randint(0, 3))
        jordan = []
        for cls in classes:
            sizes = tuple(
                sorted(
                    (rng.randint(1, 3) for _ in range(rng.randint(1, 2))), reverse=True
                )
            )
            jordan.append((cls, sizes))
        jordan.sort(key=lambda cs: cs[0].sort_key())
        jdim = sum(cls.root_count * sum(sizes) for cls, sizes in jordan)
        n = sum(horizontal) + sum(v - 1 for v in vertical) + jdim
        m = sum(w - 1 for w in horizontal) + sum(vertical) + jdim
        r = sum(w - 1 for w in horizontal) + sum(v - 1 for v in vertical) + jdim
        if not (1 <= m <= max_m and 1 <= n <= max_n):
            continue
        return StrictInvariants(
            m=m,
            n=n,
            rank=r,
            horizontal=horizontal,
            vertical=vertical,
            jordan=tuple(jordan),
        )


def canonical_of(inv: StrictInvariants) -> Pencil:
    return _canonical_pencil_any(inv)


# ---------------------------------------------------------------------------
# skew pencils, built independently of the package assemblers


def _embed_skew(fa: Mat, fb: Mat) -> Pencil:
    """[[0, F], [-F^T, 0]] for both coefficients; always a skew pair."""
    p, q = fa.m, fa.n
    za = Mat.zeros(p, p)
    zb = Mat.zeros(q, q)
    a = Mat.vstack([Mat.hstack([za, fa]), Mat.hstack([fa.transpose().scale(-1), zb])])
    b = Mat.vstack([Mat.hstack([za, fb]), Mat.hstack([fb.transpose().scale(-1), zb])])
    return Pencil(a, b)


def _chain_pair(width: int) -> tuple[Mat, Mat]:
    """A (width-1) x width pair whose only invariant is one width index."""
    a = Mat([[1 if j == i else 0 for j in range(width)] for i in range(width - 1)])
    b = Mat([[1 if j == i + 1 else 0 for j in range(width)] for i in range(width - 1)])
    return a, b


def _jordan_pair(cls: EigClass, size: int) -> tuple[Mat, Mat]:
    """A square pair with the single elementary divisor cls**size.

    The companion matrix of cls**size has that power as its one invariant
    factor, so A = -companion, B = identity realizes it as det(A + tB).
    """
    if cls.is_infinite:
        a = Mat.identity(size)
        b = Mat(
            [[1 if j == i + 1 else 0 for j in range(size)] for i in range(size)]
        )
        return a, b
    power = cls.poly**size
    dim = power.degree()
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(1, dim):
        rows[i][i - 1] = Fraction(-1)
    for i in range(dim):
        rows[i][dim - 1] += power.coeffs[i]
    return Mat(rows), Mat.identity(dim)


def skew_canonical(jk: SkewJK) -> Pencil:
    """A skew pencil whose folded invariants are exactly ``jk``."""
    pieces: list[Pencil] = []
    for k in jk.kronecker:
        if k == 1:
            pieces.append(Pencil(Mat.zeros(1, 1), Mat.zeros(1, 1)))
        else:
            fa, fb = _chain_pair(k)
            pieces.append(_embed_skew(fa, fb))
    for cls, sizes in jk.jordan:
        for s2 in sizes:
            fa, fb = _jordan_pair(cls, s2 // 2)
            pieces.append(_embed_skew(fa, fb))
    if not pieces:
        return Pencil(Mat.zeros(0, 0), Mat.zeros(0, 0))
    a = Mat.block_diag([p.a for p in pieces])
    b = Mat.block_diag([p.b for p in pieces])
    return Pencil(a, b)


def congruent(p: Pencil, rng: random.Random, bound: int = 5) -> Pencil:
    t = random_invertible(rng, p.m, bound)
    tt = t.transpose()
    return Pencil(tt * p.a * t, tt * p.b * t)


def random_skew_jk(rng: random.Random, max_dim: int = 12) -> SkewJK:
    while True:
        kron = tuple(
            sorted((rng.randint(1, 3) for _ in range(rng.randint(0, 3))), reverse=True)
        )
        classes = rng.sample(CLASS_POOL, rng.randint(0, 2))
        jordan = []
        for cls in classes:
            sizes = tuple(
                sorted(
                    (2 * rng.randint(1, 2) for _ in range(rng.randint(1, 2))),
                    reverse=True,
                )
            )
            jordan.append((cls, sizes))
        jordan.sort(key=lambda cs: cs[0].sort_key())
        dim = sum(2 * k - 1 for k in kron) + sum(
            cls.root_count * sum(sizes) for cls, sizes in jordan
        )
        if not (1 <= dim <= max_dim):
            continue
        return SkewJK(dim=dim, kronecker=kron, jordan=tuple(jordan))


# ---------------------------------------------------------------------------
# small algebra/representation pairs


def inverse(mat: Mat) -> Mat:
    cols = [
        solve_unique(mat, [1 if i == j else 0 for i in range(mat.m)])
        for j in range(mat.m)
    ]
    return Mat.from_cols(cols, mat.m)


def change_basis(
    g: LieAlgebra, rho: Representation, pg: Mat, pv: Mat
) -> tuple[LieAlgebra, Representation]:
    """The same pair written on new bases of the algebra and the space."""
    n = g.dim
    pg_inv = inverse(pg)
    entries = []
    for a in range(n):
        for b in range(a + 1, n):
            w = [Fraction(0)] * n
            for i in range(n):
                ca = pg.entry(i, a)
                if not ca:
                    continue
                for j in range(n):
                    cb = pg.entry(j, b)
                    if not cb:
                        continue
                    for k, c in enumerate(g.bracket_basis(i, j)):
                        if c:
                            w[k] += ca * cb * c
            coords = pg_inv.apply(w)
            for k, c in enumerate(coords):
                if c:
                    entries.append((a, b, k, c))
    g2 = LieAlgebra(n, entries)
    assert not check_jacobi(g2)
    pv_inv = inverse(pv)
    mats = []
    for a in range(n):
        acc = Mat.zeros(rho.dim_v, rho.dim_v)
        for i in range(n):
            c = pg.entry(i, a)
            if c:
                acc = acc + rho.mats[i].scale(c)
        mats.append(pv_inv * acc * pv)
    rho2 = Representation(g2, rho.dim_v, tuple(mats))
    assert not check_homomorphism(rho2)
    return g2, rho2


def _diag(values) -> Mat:
    k = len(values)
    return Mat([[values[i] if i == j else 0 for j in range(k)] for i in range(k)])


def _sl2() -> LieAlgebra:
    return LieAlgebra(3, [(0, 1, 2, 1), (0, 2, 0, -2), (1, 2, 1, 2)])


def pair_pool() -> list[tuple[str, LieAlgebra, Representation]]:
    """Pairs (g, rho) with dim g <= 4, dim V <= 4.

    The first nine have a free generic vector under the dual action, which
    makes the semi-direct comparison applicable; the rest exist to stress
    the block-structure check.
    """
    out = []

    g = LieAlgebra(1, [])
    out.append(("scalar", g, Representation(g, 1, (Mat([[2]]),))))

    g = LieAlgebra(2, [])
    out.append(
        ("abelian2", g, Representation(g, 2, (Mat.identity(2), _diag([1, 2]))))
    )
    g = LieAlgebra(3, [])
    out.append(
        (
            "abelian3",
            g,
            Representation(g, 3, (Mat.identity(3), _diag([1, 2, 3]), _diag([1, 4, 9]))),
        )
    )
    g = LieAlgebra(4, [])
    out.append(
        (
            "abelian4",
            g,
            Representation(
                g,
                4,
                (
                    Mat.identity(4),
                    _diag([1, 2, 3, 4]),
                    _diag([1, 4, 9, 16]),
                    _diag([1, 8, 27, 64]),
                ),
            ),
        )
    )

    g = LieAlgebra(2, [(0, 1, 1, 1)])  # affine line: [e0, e1] = e1
    out.append(
        (
            "affine",
            g,
            Representation(g, 2, (Mat([[1, 0], [0, 0]]), Mat([[0, 1], [0, 0]]))),
        )
    )

    g = LieAlgebra(3, [(0, 1, 1, 1)])  # affine line plus a scalar
    z = Mat.zeros(3, 3)
    e0 = Mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    e1 = Mat([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    e2 = Mat([[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    out.append(("affine+scalar", g, Representation(g, 3, (e0, e1, e2))))

    g = _sl2()
    e = Mat([[0, 1], [0, 0]])
    f = Mat([[0, 0], [1, 0]])
    h = _diag([1, -1])
    two = tuple(Mat.block_diag([x, x]) for x in (e, f, h))
    out.append(("sl2 twice", g, Representation(g, 4, two)))

    g = _sl2()
    e3 = Mat([[0, 3, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    f3 = Mat([[0, 0, 0, 0], [1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0]])
    h3 = _diag([3, 1, -1, -3])
    out.append(("sl2 cubic forms", g, Representation(g, 4, (e3, f3, h3))))

    g = LieAlgebra(4, [(0, 1, 2, 1), (0, 2, 0, -2), (1, 2, 1, 2)])  # gl2 = sl2 + center
    gl = (e, f, h, Mat.identity(2))
    two = tuple(Mat.block_diag([x, x]) for x in gl)
    out.append(("gl2 twice", g, Representation(g, 4, two)))

    # pairs below have a nontrivial generic stabilizer under the dual action
    g = LieAlgebra(3, [(0, 1, 2, 1), (1, 2, 0, 1), (0, 2, 1, -1)])  # rotations
    l1 = Mat([[0, 0, 0], [0, 0, -1], [0, 1, 0]])
    l2 = Mat([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
    l3 = Mat([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    out.append(("rotations3", g, Representation(g, 3, (l1, l2, l3))))

    g = LieAlgebra(3, [(0, 1, 2, 1)])  # heisenberg
    x = Mat([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    y = Mat([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    zc = Mat([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    out.append(("heisenberg", g, Representation(g, 3, (x, y, zc))))

    for _, g, rho in out:
        assert not check_jacobi(g)
        assert not check_homomorphism(rho)
    return out


APPLICABLE_POOL_SIZE = 9
