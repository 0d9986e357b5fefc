"""Hasse derivatives, multiplicities, vanishing spaces and bounds."""

import math
import random
from fractions import Fraction

import pytest

from kakeya.errors import (
    DimensionMismatch,
    HypothesisViolation,
    NotHomogeneous,
    UnsupportedField,
    ZeroPolynomial,
)
from kakeya.polymethod import (
    Poly,
    bound_best,
    bound_grid,
    certify,
    direction_multiplicity,
    grid_generator,
    hasse_derivative,
    monomial_basis,
    multiplicity_at,
    restrict_to_line,
    top_part,
    vanishing_space,
)
from kakeya.projgeom import ProjPoint
from kakeya.scalar import PrimeField, RationalField, binomial

QQ = RationalField()
F2 = PrimeField(2)
F5 = PrimeField(5)


def _random_poly(fld, nvars, rng, max_deg=3, max_terms=4):
    while True:
        terms = {}
        for _ in range(rng.randrange(1, max_terms + 1)):
            e = tuple(rng.randrange(max_deg + 1) for _ in range(nvars))
            terms[e] = fld(rng.randrange(1, 7))
        f = Poly(fld, nvars, terms)
        if not f.is_zero:
            return f


def test_poly_drops_zero_coefficients():
    f = Poly(F5, 2, {(1, 0): 5, (0, 1): 2})
    assert (1, 0) not in f.terms
    assert f.degree == 1


def test_poly_degree_and_zero():
    assert Poly.zero(QQ, 3).degree == -1
    assert Poly.zero(QQ, 3).is_zero
    assert Poly.constant(QQ, 3, 4).degree == 0


def test_poly_arithmetic_basics():
    x = Poly.variable(QQ, 2, 0)
    y = Poly.variable(QQ, 2, 1)
    f = (x + y) * (x - y)
    assert f == x * x - y * y
    assert (f - f).is_zero
    assert (x * 3).coefficient((1, 0)).value == 3


def test_poly_evaluate():
    x = Poly.variable(QQ, 2, 0)
    y = Poly.variable(QQ, 2, 1)
    f = x**2 + y * 2 + Poly.constant(QQ, 2, 1)
    assert f.evaluate([QQ(3), QQ(5)]).value == Fraction(20)


def test_hasse_identity_weight_zero():
    rng = random.Random(0)
    f = _random_poly(QQ, 3, rng)
    assert hasse_derivative(f, (0, 0, 0)) == f


def test_hasse_monomial_rule_rationals():
    x = Poly.variable(QQ, 1, 0)
    f = x**3
    assert hasse_derivative(f, (1,)) == x**2 * 3
    assert hasse_derivative(f, (2,)) == x * 3
    assert hasse_derivative(f, (3,)) == Poly.constant(QQ, 1, 1)


def test_hasse_characteristic_two():
    x = Poly.variable(F2, 1, 0)
    f = x**2
    assert hasse_derivative(f, (1,)).is_zero
    assert hasse_derivative(f, (2,)) == Poly.constant(F2, 1, 1)


def test_hasse_dimension_guard():
    f = Poly.variable(QQ, 2, 0)
    with pytest.raises(DimensionMismatch):
        hasse_derivative(f, (1,))


def test_hasse_composition_identity():
    # d^i d^j = prod binomial(i+j, i) d^(i+j)
    rng = random.Random(31)
    for fld in (F2, F5, PrimeField(101), QQ):
        for _ in range(30):
            f = _random_poly(fld, 2, rng)
            i = tuple(rng.randrange(3) for _ in range(2))
            j = tuple(rng.randrange(3) for _ in range(2))
            left = hasse_derivative(hasse_derivative(f, j), i)
            coeff = 1
            for a, b in zip(i, j):
                coeff *= binomial(a + b, a)
            ij = tuple(a + b for a, b in zip(i, j))
            right = hasse_derivative(f, ij) * fld(coeff)
            assert left == right


def test_multiplicity_simple_cases():
    x = Poly.variable(QQ, 2, 0)
    y = Poly.variable(QQ, 2, 1)
    origin = [QQ(0), QQ(0)]
    assert multiplicity_at(x, origin) == 1
    assert multiplicity_at(x**2 * y, origin) == 3
    assert multiplicity_at(x + Poly.constant(QQ, 2, 1), origin) == 0
    with pytest.raises(ZeroPolynomial):
        multiplicity_at(Poly.zero(QQ, 2), origin)


def test_multiplicity_downgrade():
    rng = random.Random(5)
    for _ in range(40):
        f = _random_poly(F5, 2, rng)
        u = [F5(rng.randrange(5)) for _ in range(2)]
        m = multiplicity_at(f, u)
        w = rng.randrange(m + 1) if m else 0
        for j in [(w, 0), (0, w)]:
            g = hasse_derivative(f, j)
            if g.is_zero:
                continue
            assert multiplicity_at(g, u) >= m - w


def test_homogeneity_preserved_by_hasse():
    rng = random.Random(23)
    for _ in range(40):
        # build a random homogeneous polynomial of degree 4
        terms = {}
        for _ in range(3):
            a = rng.randrange(5)
            terms[(a, 4 - a)] = F5(rng.randrange(1, 5))
        f = Poly(F5, 2, terms)
        j = (rng.randrange(3), rng.randrange(3))
        g = hasse_derivative(f, j)
        assert g.is_zero or (
            g.is_homogeneous() and g.degree == f.degree - sum(j)
        )


def test_top_part_examples():
    x = Poly.variable(QQ, 2, 0)
    y = Poly.variable(QQ, 2, 1)
    f = x**2 + y + Poly.constant(QQ, 2, 1)
    assert top_part(f) == x**2
    g = x * y + x + y
    assert top_part(g) == x * y
    assert top_part(x * y) == x * y
    with pytest.raises(ZeroPolynomial):
        top_part(Poly.zero(QQ, 2))


def test_top_part_multiplicative():
    rng = random.Random(17)
    for _ in range(50):
        f = _random_poly(QQ, 2, rng)
        g = _random_poly(QQ, 2, rng)
        assert top_part(f * g) == top_part(f) * top_part(g)


def test_restrict_to_line_matches_pointwise():
    rng = random.Random(3)
    f = _random_poly(F5, 3, rng)
    base = [F5(1), F5(2), F5(0)]
    step = [F5(1), F5(4), F5(3)]
    g = restrict_to_line(f, base, step)
    assert g.nvars == 1
    for lam in range(5):
        pt = [b + F5(lam) * s for b, s in zip(base, step)]
        assert g.evaluate([F5(lam)]) == f.evaluate(pt)


def test_monomial_basis_counts():
    for n in (1, 2, 3):
        for d in (0, 1, 2, 5):
            assert len(monomial_basis(n, d)) == binomial(n + d, n)


def test_vanishing_space_single_point():
    basis = vanishing_space([[QQ(0), QQ(0)]], 1, 1, 2, QQ)
    assert len(basis) == 2
    for f in basis:
        assert f.evaluate([QQ(0), QQ(0)]).is_zero
        assert f.degree == 1


def test_vanishing_space_no_constraints():
    basis = vanishing_space([], 2, 1, 2, QQ)
    assert len(basis) == binomial(4, 2)


def test_vanishing_space_respects_multiplicity():
    rng = random.Random(41)
    pts = [[F5(rng.randrange(5)), F5(rng.randrange(5))] for _ in range(3)]
    basis = vanishing_space(pts, 5, 2, 2, F5)
    dim_lower = binomial(2 + 5, 2) - binomial(2 + 1, 2) * len(pts)
    assert len(basis) >= dim_lower
    for f in basis:
        for u in pts:
            assert multiplicity_at(f, u) >= 2


def test_vanishing_space_dimension_via_independent_elimination():
    # cross-check the nullspace dimension with a plain gaussian elimination
    pts = [[F5(x), F5((x * x) % 5)] for x in range(5)]
    deg_bound, mult = 3, 1
    basis = vanishing_space(pts, deg_bound, mult, 2, F5)

    monos = monomial_basis(2, deg_bound)
    matrix = []
    for u in pts:
        row = []
        for e in monos:
            v = 1
            for c, k in zip(u, e):
                v = (v * pow(c.value, k, 5)) % 5
            row.append(v)
        matrix.append(row)
    # row reduce mod 5 without the library
    rank = 0
    ncols = len(monos)
    col = 0
    rows = [list(r) for r in matrix]
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % 5), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, 5)
        rows[rank] = [(x * inv) % 5 for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % 5:
                f = rows[i][col]
                rows[i] = [(a - f * b) % 5 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    assert len(basis) == ncols - rank


def test_direction_multiplicity_grid_generator():
    values = [F5(v) for v in range(5)]
    g = grid_generator(F5, 3, 0, values)
    assert g.is_homogeneous() and g.degree == 5
    grid_points = [
        ProjPoint([F5(a), F5(b), F5(1), F5(0)]) for a in range(5) for b in range(5)
    ]
    # directions for the polynomial live in 3 variables: strip nothing,
    # the projective points above already carry a trailing zero
    assert direction_multiplicity(g, grid_points) >= 1
    gg = g * g
    assert direction_multiplicity(gg, grid_points) >= 2


def test_direction_multiplicity_nonvanishing():
    f = Poly.variable(F5, 3, 2)
    pts = [ProjPoint([F5(a), F5(0), F5(1), F5(0)]) for a in range(5)]
    assert direction_multiplicity(f, pts) == 0


def test_direction_multiplicity_guards():
    x = Poly.variable(QQ, 2, 0)
    inhom = x + Poly.constant(QQ, 2, 1)
    with pytest.raises(NotHomogeneous):
        direction_multiplicity(inhom, [ProjPoint([QQ(1), QQ(0), QQ(0)])])
    with pytest.raises(ZeroPolynomial):
        direction_multiplicity(Poly.zero(QQ, 2), [])
    with pytest.raises(ValueError):
        direction_multiplicity(x, [ProjPoint([QQ(1), QQ(0), QQ(1)])])


def _factorial_ratio(a, n):
    return Fraction(math.factorial(a), math.factorial(n) * math.factorial(a - n))


def test_bound_grid_frozen_values():
    assert bound_grid(7, 3, 1).bound == 84
    assert bound_grid(16, 4, 1).bound == 3876
    assert bound_grid(16, 4, 2).bound == Fraction(10472, 3)
    assert bound_grid(8, 2, 1).bound == 36


def test_bound_grid_factorial_oracle():
    rng = random.Random(6)
    for _ in range(30):
        N = rng.randrange(2, 20)
        n = rng.randrange(1, 6)
        r = rng.randrange(1, 6)
        expected = _factorial_ratio(r * N + n - 1, n) / _factorial_ratio(
            2 * r + n - 2, n
        )
        rep = bound_grid(N, n, r)
        assert rep.bound == expected
        assert rep.limit == Fraction(N, 2) ** n


def test_bound_best_stops_at_first_drop():
    rep = bound_best(8, 2, 8)
    assert rep.best_r == 1 and rep.bound == 36
    rep = bound_best(16, 4, 64)
    assert rep.best_r == 1 and rep.bound == 3876
    assert rep.limit == 4096


def test_bound_reports_serialize():
    doc = bound_grid(7, 3, 1).to_json()
    assert doc["bound"] == "84"
    assert doc["limit"] == "343/8"
    doc = bound_best(16, 4, 64).to_json()
    assert doc["best_r"] == 1 and doc["r_max"] == 64


def test_bound_input_validation():
    for bad in ((0, 3, 1), (7, 0, 1), (7, 3, 0)):
        with pytest.raises(ValueError):
            bound_grid(*bad)


def test_certify_rejects_real_sets():
    from kakeya.construction import assemble
    from kakeya.seeds import regular_ngon_seed

    K = assemble(regular_ngon_seed(8), 2)
    with pytest.raises(UnsupportedField):
        certify(K, 1)


def test_certify_flags_starved_line():
    from kakeya.construction import assemble
    from kakeya.seeds import dual_conic_seed

    K = assemble(dual_conic_seed(5), 2)
    K.points = K.points[:4]
    with pytest.raises(HypothesisViolation):
        certify(K, 1)


def test_certify_vacuous_on_full_conic_seed():
    from kakeya.construction import assemble
    from kakeya.seeds import dual_conic_seed

    K = assemble(dual_conic_seed(5), 2)
    cert = certify(K, 1)
    assert cert.verdict == "pass-vacuous"
    assert cert.f is None and not cert.guaranteed
    doc = cert.to_json()
    assert doc["f"] is None and doc["verdict"] == "pass-vacuous"


def test_certify_forced_polynomial_single_line():
    # one line with N points: few enough constraints to force a nonzero f,
    # whose top part must then vanish at the line's direction
    from kakeya.construction import KakeyaSet, assemble
    from kakeya.seeds import dual_conic_seed

    K = assemble(dual_conic_seed(7), 2)
    kl = K.lines[0]
    pts = [kp for kp in K.points if kl.line.contains(kp.point)]
    small = KakeyaSet(K.field, 2, 7, K.grid, [kl], pts, {})
    cert = certify(small, 1)
    assert cert.guaranteed
    assert cert.verdict == "pass"
    assert cert.f is not None and cert.f.degree <= 6
    assert all(a["ok"] for a in cert.s_attestations)
    assert all(a["ok"] for a in cert.d_attestations)
