import random
from fractions import Fraction

import pytest

from monostack.errors import IncompatibleFamily, NotSharp
from monostack.infquot import (
    TruncatedProfiniteElement,
    delta_bound,
    delta_points,
    delta0_points,
    divisors,
    in_delta,
    is_infinite_quotient,
    positive_functional,
)
from monostack.kummer import coset_label
from monostack.lattice import cone_contains, dot, vadd, vsub
from monostack.monoid import MonoidPresentation, monoid_points, validate


def fr(*vals):
    return tuple(Fraction(v) for v in vals)


def test_positive_functional_examples(nat, nat2, nonsimplicial):
    assert positive_functional(nat) == (1,)
    assert positive_functional(nat2) == (1, 1)
    ell = positive_functional(nonsimplicial)
    assert ell == (2, 2, 2)
    for v in nonsimplicial.hilbert_basis:
        assert dot(ell, v) > 0


def test_positive_functional_requires_sharp():
    raw = MonoidPresentation(1, ((1,), (-1,)))
    with pytest.raises(NotSharp):
        positive_functional(raw)


def test_delta_nat_level3(nat):
    ds = delta_points(nat, 3)
    assert ds.points == (fr(0), fr(Fraction(1, 3)), fr(Fraction(2, 3)))
    assert ds.delta0_points == ds.points


def test_delta_quadrant_level2(nat2):
    ds = delta_points(nat2, 2)
    assert ds.points == (
        fr(0, 0),
        fr(0, Fraction(1, 2)),
        fr(Fraction(1, 2), 0),
        fr(Fraction(1, 2), Fraction(1, 2)),
    )


def test_delta_contains_zero_and_zero_in_delta0(nat, nat2, nat3, nonsimplicial):
    for pres in (nat, nat2, nat3, nonsimplicial):
        for n in (1, 2, 3, 4):
            ds = delta_points(pres, n)
            zero = tuple(Fraction(0) for _ in range(pres.ambient_rank))
            assert zero in ds.points
            assert zero in ds.delta0_points


def test_delta_level1_of_sharp_monoid_is_origin(nonsimplicial):
    assert delta_points(nonsimplicial, 1).points == (fr(0, 0, 0),)


def test_delta_boundedness(nat, nat2, nat3, nonsimplicial):
    for pres in (nat, nat2, nat3, nonsimplicial):
        ell = positive_functional(pres)
        bound = delta_bound(pres)
        for n in (1, 2, 3, 4):
            for p in delta_points(pres, n):
                assert dot(ell, p) <= bound


def test_delta_divisor_closure_exhaustive(nat, nat2, nat3, nonsimplicial):
    for pres in (nat, nat2, nat3, nonsimplicial):
        bound = delta_bound(pres)
        for n in (1, 2, 3, 4):
            ds = delta_points(pres, n)
            region = monoid_points(pres, n, bound)
            for z in ds.points:
                for gamma in region:
                    rest = vsub(z, gamma)
                    if not cone_contains(pres.cone, rest):
                        continue
                    assert in_delta(pres, gamma)
                    assert in_delta(pres, rest)


def test_delta0_nat_every_class(nat):
    for n in (1, 2, 3, 4, 5):
        ds = delta_points(nat, n)
        assert len(ds.delta0_points) == n


def test_delta0_single_representative_property(nat2, nonsimplicial):
    for pres in (nat2, nonsimplicial):
        for n in (1, 2, 3, 4):
            ds = delta_points(pres, n)
            for gamma in ds.delta0_points:
                lab = coset_label(pres, n, gamma)
                assert ds.points_in_class(lab) == (gamma,)


def test_delta0_nonsimplicial_level2_has_crowded_classes(nonsimplicial):
    ds = delta_points(nonsimplicial, 2)
    crowded = [p for p, flag in zip(ds.points, ds.delta0_mask) if not flag]
    assert crowded, "some class should meet Delta more than once"
    for p in crowded:
        lab = coset_label(nonsimplicial, 2, p)
        assert len(ds.points_in_class(lab)) > 1


def test_delta0_sum_stability_near_zero(nat, nat2, nat3, nonsimplicial):
    """Sums of Delta0 points close to the origin stay alone in their class.

    The safe radius is the smallest functional value over the Hilbert
    basis: every class with two or more Delta representatives starts at or
    above that value, so sums strictly below it have a unique
    representative (exhaustive over levels <= 4).
    """
    for pres in (nat, nat2, nat3, nonsimplicial):
        ell = positive_functional(pres)
        radius = min(dot(ell, v) for v in pres.hilbert_basis)
        checked = 0
        for n in (1, 2, 3, 4):
            ds = delta_points(pres, n)
            small = ds.delta0_points
            for a in small:
                for b in small:
                    if dot(ell, a) + dot(ell, b) >= radius:
                        continue
                    lab = coset_label(pres, n, vadd(a, b))
                    assert len(ds.points_in_class(lab)) == 1
                    checked += 1
        assert checked > 0


def test_delta_crowded_classes_sit_above_min_generator_level(
    nat, nat2, nat3, nonsimplicial
):
    """Classes meeting Delta more than once only appear at or above the
    smallest Hilbert-generator functional value."""
    for pres in (nat, nat2, nat3, nonsimplicial):
        ell = positive_functional(pres)
        radius = min(dot(ell, v) for v in pres.hilbert_basis)
        for n in (1, 2, 3, 4):
            ds = delta_points(pres, n)
            for p, flag in zip(ds.points, ds.delta0_mask):
                if not flag:
                    assert dot(ell, p) >= radius


def test_family_from_element_and_compatibility(nat2):
    fam = TruncatedProfiniteElement.from_element(nat2, (1, 2), 6)
    assert sorted(fam.labels) == [1, 2, 3, 6]
    for m in divisors(6):
        assert fam.labels[m] == coset_label(
            nat2, m, (Fraction(1, m), Fraction(2, m))
        )


def test_family_rejects_incompatible(nat):
    labels = {
        1: coset_label(nat, 1, (0,)),
        2: coset_label(nat, 2, (Fraction(1, 2),)),
        4: coset_label(nat, 4, (Fraction(1, 2),)),
    }
    with pytest.raises(IncompatibleFamily):
        TruncatedProfiniteElement(nat, 4, labels)
    with pytest.raises(IncompatibleFamily):
        TruncatedProfiniteElement(nat, 4, {1: labels[1], 2: labels[2]})


def test_recognition_zero_family(nat):
    fam = TruncatedProfiniteElement.from_element(nat, (0,), 4)
    verdict = is_infinite_quotient(fam)
    assert verdict.is_confirmed
    assert verdict.element.vector == fr(0)


def test_recognition_generator_nonsimplicial(nonsimplicial):
    fam = TruncatedProfiniteElement.from_element(nonsimplicial, (1, 0, 0), 4)
    verdict = is_infinite_quotient(fam)
    assert verdict.is_confirmed
    assert verdict.element.vector == fr(1, 0, 0)


def test_recognition_soundness_strict_bound(nat, nat2, nat3, nonsimplicial):
    """Every actual element strictly inside the sweep region is recognized
    exactly at truncation level 12."""
    for pres in (nat, nat2, nat3, nonsimplicial):
        ell = positive_functional(pres)
        bound = 3 * delta_bound(pres)
        for p in monoid_points(pres, 1, bound):
            if dot(ell, p) >= bound:
                continue
            fam = TruncatedProfiniteElement.from_element(pres, p, 12)
            verdict = is_infinite_quotient(fam, depth=4)
            assert verdict.is_confirmed, (pres.generators, p, str(verdict))
            assert verdict.element.vector == p


def test_compatible_family_over_nat_is_realized(nat):
    """The compatible level-4 family with labels [1/2] and [3/4] is the
    truncation of the element 3, and exact recognition returns it."""
    labels = {
        1: coset_label(nat, 1, (0,)),
        2: coset_label(nat, 2, (Fraction(1, 2),)),
        4: coset_label(nat, 4, (Fraction(3, 4),)),
    }
    fam = TruncatedProfiniteElement(nat, 4, labels)
    verdict = is_infinite_quotient(fam, depth=4)
    assert verdict.is_confirmed
    assert verdict.element.vector == fr(3)


def test_deep_element_is_inconclusive_not_refuted(nonsimplicial):
    """At the closed sweep boundary some families have no Delta0 divisor
    level; the truncated test must answer inconclusive, never refuted."""
    fam = TruncatedProfiniteElement.from_element(nonsimplicial, (0, 1, 11), 12)
    verdict = is_infinite_quotient(fam, depth=4)
    assert verdict.is_inconclusive
    assert verdict.level == 12


def test_confirmed_element_matches_all_labels(nat3):
    rng = random.Random(5)
    for _ in range(10):
        p = tuple(rng.randint(0, 2) for _ in range(3))
        fam = TruncatedProfiniteElement.from_element(nat3, p, 6)
        verdict = is_infinite_quotient(fam)
        assert verdict.is_confirmed
        q = verdict.element.vector
        for m in divisors(6):
            assert fam.labels[m] == coset_label(
                nat3, m, tuple(a / m for a in q)
            )
