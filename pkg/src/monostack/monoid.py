"""Sharp fine saturated affine monoids.

A presentation stores integer generators in an ambient lattice Z^d plus a
scale denominator s >= 1; the monoid it presents is generated by the
rational vectors g/s.  Root extensions keep all arithmetic integral by
bumping the denominator, so the same integer data serves every level.

Derived data (cone, group lattice, Hilbert basis, flags) is always
recomputed from the generators and never trusted from serialized input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from . import lattice
from .errors import DimensionMismatch, EmptyGenerators, NotSaturated, NotSharp
from .lattice import (
    RationalCone,
    as_fractions,
    cone_from_generators,
    dot,
    is_zero_vector,
    lattice_basis,
    lattice_coords,
    vsub,
)


@dataclass(frozen=True)
class MonoidPresentation:
    """A finitely generated submonoid of (1/denominator) * Z^d.

    Use `validate` to construct one; it normalizes the generator list and
    rejects non-sharp input.
    """

    ambient_rank: int
    generators: tuple
    denominator: int = 1

    # -- basic derived data -------------------------------------------------

    @cached_property
    def cone(self) -> RationalCone:
        return cone_from_generators(self.generators)

    @cached_property
    def group_basis(self):
        """Hermite row basis of the integer lattice spanned by generators."""
        return lattice_basis(self.generators)

    @property
    def group_rank(self):
        return len(self.group_basis)

    @cached_property
    def rational_generators(self):
        s = self.denominator
        return tuple(tuple(Fraction(a, s) for a in g) for g in self.generators)

    @cached_property
    def positive_functional(self):
        """Integer functional strictly positive on the cone minus 0 (sharp)."""
        return lattice.positive_functional_of(self.cone)

    # -- flags ---------------------------------------------------------------

    @cached_property
    def is_sharp(self):
        ell = self.positive_functional
        return all(dot(ell, g) > 0 for g in self.generators)

    @cached_property
    def is_saturated(self):
        return all(
            self._in_generated_int(v) for v in self._saturation_hilbert_basis
        )

    @cached_property
    def is_simplicial(self):
        return len(self.cone.rays) == self.group_rank

    # -- integer-model helpers ----------------------------------------------

    def _group_contains_int(self, x):
        return lattice.lattice_contains_int(self.group_basis, x)

    @cached_property
    def _in_generated_memo(self):
        return {}

    def _in_generated_int(self, x):
        """Exact N-combination membership in the integer generator model."""
        x = tuple(int(a) for a in x)
        if is_zero_vector(x):
            return True
        memo = self._in_generated_memo
        hit = memo.get(x)
        if hit is not None:
            return hit
        memo[x] = False  # cycle guard; generators have positive functional
        ok = False
        for g in self.generators:
            y = vsub(x, g)
            if lattice.cone_contains(self.cone, y) and self._in_generated_int(y):
                ok = True
                break
        memo[x] = ok
        return ok

    @cached_property
    def _saturation_hilbert_basis(self):
        """Hilbert basis of group lattice and cone, in the integer model.

        Every indecomposable of L cap cone satisfies l(x) < sum of l over
        the primitive-in-L ray generators, so one bounded enumeration plus
        a reduction pass is exhaustive.
        """
        ell = self.positive_functional
        rays = []
        for r in self.cone.rays:
            coords = lattice_coords(self.group_basis, r)
            if coords is None:
                raise NotSharp("extreme ray outside the generated group")
            k = 1
            for c in coords:
                k = lcm(k, c.denominator)
            rays.append(tuple(k * a for a in r))
        bound = sum(Fraction(dot(ell, r)) for r in rays)
        region = lattice.enumerate_points(self.cone, 1, ell, bound)
        candidates = []
        for x in region:
            xi = tuple(int(a) for a in x)
            if not is_zero_vector(xi) and self._group_contains_int(xi):
                candidates.append(xi)
        basis = []
        cand_set = set(candidates)
        for x in candidates:
            # x = y + z with y, z nonzero forces z into the enumerated region
            if not any(y != x and vsub(x, y) in cand_set for y in candidates):
                basis.append(x)
        return tuple(sorted(basis))

    # -- public operations ----------------------------------------------------

    @cached_property
    def hilbert_basis(self):
        """Minimal generating set, as rational vectors; needs saturation."""
        if not self.is_saturated:
            raise NotSaturated("Hilbert basis is computed for saturated monoids")
        s = self.denominator
        return tuple(
            tuple(Fraction(a, s) for a in v) for v in self._saturation_hilbert_basis
        )

    def contains(self, x):
        """Membership x in P for saturated P: group and cone membership."""
        if not self.is_saturated:
            raise NotSaturated("membership test requires a saturated monoid")
        x = as_fractions(x)
        scaled = tuple(a * self.denominator for a in x)
        if any(c.denominator != 1 for c in scaled):
            return False
        xi = tuple(int(c) for c in scaled)
        return self._group_contains_int(xi) and lattice.cone_contains(self.cone, xi)

    def contains_generated(self, x):
        """Membership in the generated (possibly unsaturated) monoid."""
        x = as_fractions(x)
        scaled = tuple(a * self.denominator for a in x)
        if any(c.denominator != 1 for c in scaled):
            return False
        xi = tuple(int(c) for c in scaled)
        return lattice.cone_contains(self.cone, xi) and self._in_generated_int(xi)

    def group_contains(self, x):
        """Membership in the group generated by the monoid."""
        x = as_fractions(x)
        scaled = tuple(a * self.denominator for a in x)
        if any(c.denominator != 1 for c in scaled):
            return False
        return self._group_contains_int(tuple(int(c) for c in scaled))


@dataclass(frozen=True)
class MonoidElement:
    owner: MonoidPresentation
    vector: tuple

    def __post_init__(self):
        object.__setattr__(self, "vector", as_fractions(self.vector))
        if not self.owner.contains(self.vector):
            raise ValueError(f"{self.vector} is not an element of the monoid")


def validate(generators, ambient_rank=None, denominator=1):
    """Build a sharp monoid presentation from integer generators.

    Zero vectors are dropped and duplicates folded; the generator list is
    sorted so equal monoid input yields byte-equal presentations.  Raises
    EmptyGenerators when nothing is left and NotSharp when the generated
    cone contains a line.
    """
    gens = []
    for g in generators:
        t = tuple(int(a) for a in g)
        if ambient_rank is None:
            ambient_rank = len(t)
        if len(t) != ambient_rank:
            raise DimensionMismatch("generators of mixed ambient rank")
        if not is_zero_vector(t) and t not in gens:
            gens.append(t)
    if not gens:
        raise EmptyGenerators("a monoid presentation needs a nonzero generator")
    pres = MonoidPresentation(
        ambient_rank=ambient_rank,
        generators=tuple(sorted(gens)),
        denominator=int(denominator),
    )
    if not pres.is_sharp:
        raise NotSharp("the generated cone contains a line")
    return pres


def saturate(pres):
    """Saturation P^gp cap P_Q, presented by its Hilbert basis."""
    if not pres.is_sharp:
        raise NotSharp("saturation is implemented for sharp monoids")
    return MonoidPresentation(
        ambient_rank=pres.ambient_rank,
        generators=pres._saturation_hilbert_basis,
        denominator=pres.denominator,
    )


def hilbert_basis(pres):
    return pres.hilbert_basis


def contains(pres, x):
    return pres.contains(x)


def is_simplicial(pres):
    return pres.is_simplicial


def monoid_equal(p, q):
    """Equality of the presented rational monoids (not presentations)."""
    if p.ambient_rank != q.ambient_rank:
        return False
    return all(q.contains_generated(g) for g in p.rational_generators) and all(
        p.contains_generated(g) for g in q.rational_generators
    )


def monoid_points_scaled(pres, level, bound):
    """Integer vectors y = level*denominator*x over x in (1/level)*P, l(x) <= bound.

    Exact: enumerates ambient lattice candidates and filters by the group
    lattice, so sublattices (e.g. index > 1 groups) are handled.
    """
    from math import floor

    ell = pres.positive_functional
    denom = level * pres.denominator
    cap = floor(Fraction(bound) * denom)
    raw = lattice.enumerate_integer_points(pres.cone, ell, cap)
    return [y for y in raw if lattice.lattice_contains_int(pres.group_basis, y)]


def monoid_points(pres, level, bound):
    """Points of (1/level)*P with positive-functional value <= bound."""
    denom = level * pres.denominator
    return [
        tuple(Fraction(c, denom) for c in y)
        for y in monoid_points_scaled(pres, level, bound)
    ]
