import random
from fractions import Fraction

import pytest

from helpers import det_frac, in_cone_oracle, random_int_matrix
from monostack.errors import DimensionMismatch, UnboundedRegion
from monostack.lattice import (
    cone_contains,
    cone_from_generators,
    enumerate_points,
    facet_inequalities,
    lattice_basis,
    lattice_contains,
    lattice_contains_int,
    smith_normal_form,
    dot,
)


def mat_mul_int(a, b):
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in zip(*b)) for row in a
    )


def test_snf_identity():
    snf = smith_normal_form(((1, 0), (0, 1)))
    assert snf.divisors == (1, 1)
    assert snf.d == ((1, 0), (0, 1))


def test_snf_diag_2_3():
    a = ((2, 0), (0, 3))
    snf = smith_normal_form(a)
    assert snf.divisors == (1, 6)
    assert mat_mul_int(mat_mul_int(snf.u, a), snf.v) == snf.d
    assert snf.divisors[1] % snf.divisors[0] == 0


def test_snf_scaled_identity_has_repeated_divisors():
    for r in (1, 2, 3):
        for n in (2, 3, 4, 6):
            a = tuple(
                tuple(n if i == j else 0 for j in range(r)) for i in range(r)
            )
            assert smith_normal_form(a).divisors == (n,) * r


def test_snf_roundtrip_random():
    rng = random.Random(7)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = random_int_matrix(rng, rows, cols)
        snf = smith_normal_form(a)
        assert mat_mul_int(mat_mul_int(snf.u, a), snf.v) == snf.d
        assert abs(det_frac(snf.u)) == 1
        assert abs(det_frac(snf.v)) == 1
        divs = [d for d in snf.divisors if d]
        for x, y in zip(divs, divs[1:]):
            assert y % x == 0
        # zeros trail
        seen_zero = False
        for d in snf.divisors:
            if d == 0:
                seen_zero = True
            else:
                assert not seen_zero


def test_facets_quadrant():
    assert facet_inequalities([(1, 0), (0, 1)]) == [(0, 1), (1, 0)]


def test_facets_nonsimplicial_cone_match_inequalities():
    facets = facet_inequalities([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
    assert sorted(facets) == [(0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1)]


def test_facets_mixed_dimension_rejected():
    with pytest.raises(DimensionMismatch):
        facet_inequalities([(1, 0), (0, 1, 0)])


def test_facets_single_ray_cuts_exactly_the_ray():
    cone = cone_from_generators([(2, 1)])
    rng = random.Random(3)
    for _ in range(200):
        x = (Fraction(rng.randint(-8, 8), rng.randint(1, 4)),
             Fraction(rng.randint(-8, 8), rng.randint(1, 4)))
        assert cone_contains(cone, x) == in_cone_oracle([(2, 1)], x)


def test_facet_generator_duality_random():
    rng = random.Random(11)
    for _ in range(12):
        dim = rng.randint(1, 4)
        gens = [
            tuple(rng.randint(-3, 3) for _ in range(dim))
            for _ in range(rng.randint(1, 6))
        ]
        if all(all(a == 0 for a in g) for g in gens):
            continue
        cone = cone_from_generators(gens)
        for _ in range(100):
            x = tuple(
                Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(dim)
            )
            assert cone_contains(cone, x) == in_cone_oracle(gens, x)


def test_cone_contains_examples():
    quadrant = cone_from_generators([(1, 0), (0, 1)])
    assert cone_contains(quadrant, (0, 0))
    assert not cone_contains(quadrant, (1, -1))
    cone = cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
    # violates a1 + a3 >= 0
    assert not cone_contains(cone, (0, 0, -1))
    assert dot((1, 0, 1), (0, 0, -1)) == -1


def test_cone_contains_dimension_mismatch():
    quadrant = cone_from_generators([(1, 0), (0, 1)])
    with pytest.raises(DimensionMismatch):
        cone_contains(quadrant, (1, 2, 3))


def test_enumerate_segment():
    cone = cone_from_generators([(1,)])
    pts = enumerate_points(cone, 3, (1,), 1)
    assert pts == [(Fraction(0),), (Fraction(1, 3),), (Fraction(2, 3),), (Fraction(1),)]


def test_enumerate_simplex():
    cone = cone_from_generators([(1, 0), (0, 1)])
    pts = enumerate_points(cone, 1, (1, 1), 1)
    assert pts == [
        (Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(0)),
    ]


def test_enumerate_nonsimplicial_contains_generators():
    gens = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)]
    cone = cone_from_generators(gens)
    ell = tuple(sum(f[i] for f in cone.facets) for i in range(3))
    bound = sum(dot(ell, g) for g in gens)
    pts = enumerate_points(cone, 1, ell, bound)
    for g in gens:
        assert tuple(Fraction(a) for a in g) in pts
    # independent brute-force box scan
    cap = bound
    brute = []
    for x in range(-cap, cap + 1):
        for y in range(-cap, cap + 1):
            for z in range(-cap, cap + 1):
                v = (x, y, z)
                if dot(ell, v) <= cap and all(dot(f, v) >= 0 for f in cone.facets):
                    brute.append((Fraction(x), Fraction(y), Fraction(z)))
    assert sorted(brute) == pts


def test_enumerate_closed_under_predicate():
    gens = [(2, 1), (1, 2)]
    cone = cone_from_generators(gens)
    ell = tuple(sum(f[i] for f in cone.facets) for i in range(2))
    pts = enumerate_points(cone, 2, ell, 5)
    assert pts
    for p in pts:
        assert cone_contains(cone, p)
        assert dot(ell, p) <= 5
        assert all((2 * a).denominator == 1 for a in p)


def test_enumerate_unbounded_rejected():
    cone = cone_from_generators([(1, 0), (0, 1)])
    with pytest.raises(UnboundedRegion):
        enumerate_points(cone, 1, (1, -1), 3)


def test_lattice_basis_membership():
    basis = lattice_basis([(2, 0), (1, 1), (0, 2)])
    assert lattice_contains(basis, (3, 1))
    assert not lattice_contains(basis, (1, 0))
    assert lattice_contains_int(basis, (4, 2))
    assert not lattice_contains_int(basis, (0, 1))
    rng = random.Random(5)
    for _ in range(50):
        coeffs = [rng.randint(-4, 4) for _ in basis]
        v = tuple(
            sum(c * row[i] for c, row in zip(coeffs, basis)) for i in range(2)
        )
        assert lattice_contains_int(basis, v)
