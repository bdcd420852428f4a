"""Rational polynomials, factor bases, and the Smith chain."""

import random
from fractions import Fraction

import pytest

from penciljk.polys import (
    BinForm,
    Poly,
    coprime_basis,
    format_poly,
    parse_poly,
    poly_gcd,
    poly_lcm,
    smith_invariant_factors,
    squarefree_decomposition,
    squarefree_part,
)


def P(*coeffs):
    return Poly(coeffs)


def test_poly_basic_structure():
    assert P().is_zero()
    assert P().degree() == -1
    assert P(0, 0).is_zero()
    assert P(2).is_constant()
    assert Poly.x() == P(0, 1)
    assert Poly.linear_root(3) == P(-3, 1)
    assert P(1, 2, 1).leading() == 1


def test_poly_arithmetic():
    f = P(1, 1)
    g = P(-1, 1)
    assert f * g == P(-1, 0, 1)
    assert f + g == P(0, 2)
    assert f - f == P()
    assert f**3 == P(1, 3, 3, 1)
    assert (f * 2).coeffs == (2, 2)


def test_poly_eval_and_roots():
    f = P(-6, 1, 1)  # (t+3)(t-2)
    assert f.eval(2) == 0
    assert f.eval(-3) == 0
    assert f.eval(0) == -6


def test_gcd_and_lcm():
    f = P(-1, 1) * P(1, 1)
    g = P(-1, 1) * P(2, 1)
    assert poly_gcd(f, g) == P(-1, 1)
    assert poly_lcm(f, g).degree() == 3
    assert poly_gcd(P(), f) == f.monic()
    assert poly_gcd(f, P(3)).is_constant()


def test_gcd_distributes_over_common_factor():
    rng = random.Random(11)
    for _ in range(20):
        f = Poly([rng.randint(-3, 3) for _ in range(3)] + [1])
        g = Poly([rng.randint(-3, 3) for _ in range(2)] + [1])
        h = Poly([rng.randint(-3, 3) for _ in range(2)] + [1])
        left = poly_gcd(f * g, f * h)
        right = (f.monic() * poly_gcd(g, h)).monic()
        assert left == right


def test_squarefree_decomposition():
    f = P(-1, 1) ** 3 * P(1, 1)
    parts = dict(squarefree_decomposition(f))
    assert parts == {P(1, 1): 1, P(-1, 1): 3}
    assert squarefree_part(f) == (P(-1, 1) * P(1, 1)).monic()


def test_coprime_basis_splits_shared_factors():
    f = P(-1, 1) * P(1, 0, 1)
    g = P(-1, 1) * P(-2, 0, 1)
    basis = coprime_basis([f, g])
    assert P(-1, 1) in basis
    assert P(1, 0, 1) in basis
    assert P(-2, 0, 1) in basis
    for i, a in enumerate(basis):
        for b in basis[i + 1 :]:
            assert poly_gcd(a, b).is_constant()


def test_coprime_basis_handles_powers_and_fractions():
    f = P(Fraction(1, 2), 1) ** 2
    basis = coprime_basis([f])
    assert basis == [P(Fraction(1, 2), 1)]


def test_format_and_parse_roundtrip():
    samples = [
        P(0, 1),
        P(-1, 1),
        P(Fraction(1, 2), 1),
        P(1, 0, 1),
        P(-2, 0, 0, 1),
        P(-1, -1, 1),
    ]
    for f in samples:
        assert parse_poly(format_poly(f, "t"), "t") == f


def test_parse_poly_rejects_garbage():
    with pytest.raises(ValueError):
        parse_poly("t^", "t")
    with pytest.raises(ValueError):
        parse_poly("", "t")


def test_binform_parts():
    bf = BinForm.from_parts(2, P(-1, 1))
    assert bf.degree == 3
    assert bf.alpha_valuation() == 2
    assert bf.dehomogenized() == P(-1, 1)
    with pytest.raises(ValueError):
        BinForm.from_parts(1, P())


def test_smith_chain_divisibility_and_content():
    # entries of t*I - companion(f) for f = (t-1)^2 (t+2)
    f = P(-1, 1) ** 2 * P(2, 1)
    k = f.degree()
    entries = [[Poly() for _ in range(k)] for _ in range(k)]
    for j in range(k):
        for i in range(k):
            entries[i][j] = Poly([0, 1]) if i == j else Poly()
    for i in range(1, k):
        entries[i][i - 1] = entries[i][i - 1] - P(1)
    for i in range(k):
        entries[i][k - 1] = entries[i][k - 1] + P(f.coeffs[i])
    factors = smith_invariant_factors(entries)
    nontrivial = [g for g in factors if g.degree() >= 1]
    assert nontrivial == [f.monic()]
    for a, b in zip(factors, factors[1:]):
        assert a.divides(b)


def test_smith_of_diagonal_mixes():
    entries = [
        [P(-1, 1), P()],
        [P(), P(-1, 1) * P(1, 1)],
    ]
    factors = smith_invariant_factors(entries)
    assert factors[0] == P(-1, 1)
    assert factors[1] == (P(-1, 1) * P(1, 1)).monic()
