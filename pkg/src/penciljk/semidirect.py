"""Semi-direct sums q = g acting on an abelian ideal V, and the relation
between invariants of q and invariants of the dual representation.

The Poisson matrix of q at a point (x, a) splits into blocks: the g-part
at x, a coupling given by the contraction operator of the dual
representation at a, and a zero V-corner.  That block shape makes the
Kronecker part of q computable from the dual representation alone, and
constrains its Jordan part to doubled totals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HomomorphismError, JacobiError
from .exactla import Mat
from .lie import (
    LieAlgebra,
    RepJK,
    Representation,
    Sampler,
    SkewJKReport,
    check_homomorphism,
    check_jacobi,
    jk_invariants_of_lie,
    jk_invariants_of_rep,
    lie_poisson_matrix,
    rep_operator,
)

MATCH = "match"
MISMATCH = "mismatch"
NOT_APPLICABLE = "not-applicable"


def dual_representation(rho: Representation) -> Representation:
    """The contragredient action: each operator becomes its negative transpose."""
    dual = Representation(
        rho.algebra, rho.dim_v, tuple(m.transpose().scale(-1) for m in rho.mats)
    )
    bad = check_homomorphism(dual)
    if bad:
        raise HomomorphismError("dual operators fail the bracket at pairs %r" % bad)
    return dual


def direct_sum(rho: Representation, copies: int) -> Representation:
    """Block-diagonal sum of ``copies`` copies of the representation."""
    if copies < 1:
        raise ValueError("at least one copy is required")
    mats = tuple(Mat.block_diag([m] * copies) for m in rho.mats)
    return Representation(rho.algebra, rho.dim_v * copies, mats)


@dataclass(frozen=True)
class SemidirectSum:
    g: LieAlgebra
    rho: Representation
    q: LieAlgebra


def semidirect(g: LieAlgebra, rho: Representation) -> SemidirectSum:
    """The algebra on g + V with V abelian and [xi, v] = rho(xi) v."""
    if rho.algebra is not g and rho.algebra.table != g.table:
        raise ValueError("representation must act for the given algebra")
    bad = check_homomorphism(rho)
    if bad:
        raise HomomorphismError("operators fail the bracket at pairs %r" % bad)
    n = g.dim
    entries = []
    for i in range(n):
        for j in range(i + 1, n):
            for k, c in enumerate(g.bracket_basis(i, j)):
                if c:
                    entries.append((i, j, k, c))
        for b in range(rho.dim_v):
            col = rho.mats[i].col(b)
            for a, c in enumerate(col):
                if c:
                    entries.append((i, n + b, n + a, c))
    q = LieAlgebra(n + rho.dim_v, entries)
    if check_jacobi(q):
        raise JacobiError("semi-direct structure constants fail the Jacobi identity")
    return SemidirectSum(g=g, rho=rho, q=q)


def verify_block_structure(sd: SemidirectSum, x, a) -> bool:
    """Entrywise check of the Poisson matrix block shape at (x, a).

    The q-Poisson matrix at (x, a) must equal
    [[P_x, L^T], [-L, 0]] with L the negated contraction operator of the
    dual representation at a.
    """
    full = lie_poisson_matrix(sd.q, tuple(x) + tuple(a))
    top = lie_poisson_matrix(sd.g, x)
    coupling = rep_operator(dual_representation(sd.rho), a).scale(-1)
    expected = Mat.vstack(
        [
            Mat.hstack([top, coupling.transpose()]),
            Mat.hstack([coupling.scale(-1), Mat.zeros(sd.rho.dim_v, sd.rho.dim_v)]),
        ]
    )
    return full == expected


def predict_semidirect_jk(jk_dual: RepJK):
    """Invariants of the semi-direct sum predicted from the dual representation.

    Returns (kronecker indices, per-slot Jordan totals), or None when the
    dual invariants contain horizontal indices, which the prediction does
    not cover.  Slot totals are anonymous: one total per eigenvalue root.
    """
    inv = jk_dual.invariants
    if inv.horizontal:
        return None
    totals = []
    for cls, sizes in inv.jordan:
        totals.extend([sum(sizes)] * cls.root_count)
    return inv.vertical, tuple(sorted(totals, reverse=True))


@dataclass(frozen=True)
class DualTheoremReport:
    dual: RepJK
    lie: SkewJKReport
    predicted_kronecker: tuple[int, ...] | None
    computed_kronecker: tuple[int, ...]
    jordan_totals_predicted: tuple[int, ...] | None
    jordan_totals_computed: tuple[int, ...]
    verdict: str


def check_dual_theorem(
    g: LieAlgebra, rho: Representation, sampler: Sampler, samples: int = 25
) -> DualTheoremReport:
    """Compare sampled invariants of q with the dual-representation prediction.

    Kronecker multisets must agree exactly.  Jordan slots are matched by
    sorted totals only: the sum of sizes in each computed slot, halved,
    against the predicted slot total.  Eigenvalue values are never
    compared; the correspondence relabels them.
    """
    jk_dual = jk_invariants_of_rep(dual_representation(rho), sampler, samples)
    jk_lie = jk_invariants_of_lie(semidirect(g, rho).q, sampler, samples)
    computed_kron = jk_lie.invariants.kronecker
    computed_totals = tuple(
        t // 2 for t in jk_lie.invariants.slot_totals()
    )
    prediction = predict_semidirect_jk(jk_dual)
    if prediction is None:
        return DualTheoremReport(
            dual=jk_dual,
            lie=jk_lie,
            predicted_kronecker=None,
            computed_kronecker=computed_kron,
            jordan_totals_predicted=None,
            jordan_totals_computed=computed_totals,
            verdict=NOT_APPLICABLE,
        )
    predicted_kron, predicted_totals = prediction
    ok = predicted_kron == computed_kron and predicted_totals == computed_totals
    return DualTheoremReport(
        dual=jk_dual,
        lie=jk_lie,
        predicted_kronecker=predicted_kron,
        computed_kronecker=computed_kron,
        jordan_totals_predicted=predicted_totals,
        jordan_totals_computed=computed_totals,
        verdict=MATCH if ok else MISMATCH,
    )
