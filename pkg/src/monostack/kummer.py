"""Monoid homomorphisms, Kummer tests, root extensions and coset labels.

The n-th root extension (1/n)P reuses the integer generator data of P and
only bumps the stored denominator, so P and all its root extensions share
one cone and one integer lattice.  Finite quotients like (1/n)P^gp / P^gp
are handled through Smith normal forms; coset labels carry a canonical
normal form (fractional coordinates against the group basis) that makes
grading keys stable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm, prod

from . import fields, lattice
from .errors import InfiniteCokernel, LevelMismatch, NotSaturated
from .fields import QQ
from .lattice import as_fractions, lattice_coords, smith_normal_form
from .monoid import MonoidPresentation


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant factor form d_1 | d_2 | ... with trivial factors dropped."""

    invariant_factors: tuple

    def __post_init__(self):
        facs = tuple(int(d) for d in self.invariant_factors if int(d) != 1)
        for a, b in zip(facs, facs[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisor chain")
        object.__setattr__(self, "invariant_factors", facs)

    @property
    def order(self):
        return prod(self.invariant_factors)

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


@dataclass(frozen=True)
class MonoidHom:
    """Lattice map between monoid presentations, on rational coordinates.

    The integer matrix acts on the underlying rational vectors (rows of
    shape target.ambient_rank x source.ambient_rank); every source
    generator must land in the target monoid.
    """

    source: MonoidPresentation
    target: MonoidPresentation
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(int(a) for a in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.target.ambient_rank or any(
            len(row) != self.source.ambient_rank for row in m
        ):
            raise ValueError("matrix shape does not match ambient ranks")
        for g in self.source.rational_generators:
            if not self.target.contains_generated(self.apply(g)):
                raise ValueError(
                    f"generator {g} does not map into the target monoid"
                )

    def apply(self, x):
        x = as_fractions(x)
        return tuple(lattice.dot(row, x) for row in self.matrix)


def identity_hom(pres):
    n = pres.ambient_rank
    eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return MonoidHom(pres, pres, eye)


def compose(g, f):
    """g after f."""
    if f.target != g.source:
        raise LevelMismatch("homomorphisms do not compose")
    m = fields.matrix_to_int(
        fields.mat_mul(QQ, _frac_matrix(g.matrix), _frac_matrix(f.matrix))
    )
    return MonoidHom(f.source, g.target, m)


def _frac_matrix(m):
    return tuple(tuple(Fraction(a) for a in row) for row in m)


# ---------------------------------------------------------------------------
# root extensions


def root_extension(pres, n):
    """The monoid (1/n)P on the same integer data."""
    if n < 1:
        raise ValueError("root level must be a positive integer")
    return MonoidPresentation(
        ambient_rank=pres.ambient_rank,
        generators=pres.generators,
        denominator=pres.denominator * n,
    )


def root_inclusion(pres, n):
    """The canonical Kummer inclusion P -> (1/n)P."""
    d = pres.ambient_rank
    eye = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
    return MonoidHom(pres, root_extension(pres, n), eye)


# ---------------------------------------------------------------------------
# Kummer test and cokernels


def _rational_group_basis(pres):
    s = pres.denominator
    return tuple(
        tuple(Fraction(a, s) for a in row) for row in pres.group_basis
    )


def _group_coords(pres, x):
    """Coordinates of rational x against the rational group basis, or None."""
    scaled = tuple(Fraction(a) * pres.denominator for a in x)
    return lattice_coords(pres.group_basis, scaled)


def is_kummer(hom):
    """Injective on groups, and every target element has a multiple in the image.

    Exact decision: the multiple condition holds for all of Q iff it holds
    on the target Hilbert basis, iff each basis element lies in the rational
    span of the image group and its unique rational preimage lies in the
    source cone.
    """
    src, tgt = hom.source, hom.target
    if not (src.is_saturated and tgt.is_saturated):
        raise NotSaturated("the Kummer test requires saturated monoids")
    basis = _rational_group_basis(src)
    images = tuple(hom.apply(b) for b in basis)
    if fields.rank(QQ, images) != len(basis):
        return False
    # f(x) = q solved inside the source group span
    amat = tuple(zip(*images))  # ambient x r, columns are images
    for q in tgt.hilbert_basis:
        coeffs = fields.solve(QQ, amat, as_fractions(q))
        if coeffs is None:
            return False
        preimage = tuple(
            sum(c * b[i] for c, b in zip(coeffs, basis))
            for i in range(src.ambient_rank)
        )
        if not lattice.cone_contains(src.cone, preimage):
            return False
    return True


def cokernel(hom):
    """Invariant factors of Q^gp / f(P^gp); requires a finite quotient."""
    src, tgt = hom.source, hom.target
    cols = []
    for b in _rational_group_basis(src):
        y = hom.apply(b)
        coords = _group_coords(tgt, y)
        if coords is None:
            raise InfiniteCokernel("image leaves the target group lattice")
        if any(c.denominator != 1 for c in coords):
            raise InfiniteCokernel("image is not contained in the target group")
        cols.append(tuple(int(c) for c in coords))
    if len(cols) != tgt.group_rank:
        raise InfiniteCokernel("group ranks differ")
    mat = tuple(zip(*cols))  # r_target x r_source
    snf = smith_normal_form(mat)
    if any(d == 0 for d in snf.divisors) or len(snf.divisors) < tgt.group_rank:
        raise InfiniteCokernel("the homomorphism is not injective with finite index")
    return FiniteAbelianGroup(snf.divisors)


def picard_group(pres, n):
    """(1/n)P^gp / P^gp, the character group of the level-n quotient."""
    return cokernel(root_inclusion(pres, n))


# ---------------------------------------------------------------------------
# coset labels


@dataclass(frozen=True)
class CosetLabel:
    """A class in (1/n)P^gp / P^gp with a canonical normal form.

    The normal form is the tuple of fractional parts of the coordinates
    against the group basis, so two labels are equal exactly when their
    representatives differ by a group element; the level is bookkeeping
    and does not enter equality.
    """

    monoid: MonoidPresentation
    level: int = field(compare=False)
    normal_form: tuple

    @property
    def representative(self):
        """The unique representative with all coordinates in [0, 1)."""
        s = self.monoid.denominator
        rep = [Fraction(0)] * self.monoid.ambient_rank
        for c, row in zip(self.normal_form, self.monoid.group_basis):
            for i, a in enumerate(row):
                rep[i] += c * Fraction(a, s)
        return tuple(rep)

    @property
    def residues(self):
        """Integer residues against the level-n quotient, in [0, n)."""
        return tuple(int(c * self.level) for c in self.normal_form)

    def is_zero(self):
        return all(c == 0 for c in self.normal_form)


def coset_label(pres, n, x):
    """Label of a rational vector x in (1/n)P^gp."""
    coords = _group_coords(pres, x)
    if coords is None:
        raise ValueError(f"{x} is not in the rational span of the group")
    nf = []
    for c in coords:
        if (c * n).denominator != 1:
            raise ValueError(f"{x} is not in the level-{n} group lattice")
        nf.append(c - floor(c))
    return CosetLabel(monoid=pres, level=n, normal_form=tuple(nf))


def zero_label(pres, n=1):
    return CosetLabel(
        monoid=pres, level=n, normal_form=tuple(Fraction(0) for _ in pres.group_basis)
    )


def enumerate_labels(pres, n):
    """All n^r coset labels at level n, in lexicographic residue order."""
    r = pres.group_rank
    labels = []
    idx = [0] * r
    while True:
        labels.append(
            CosetLabel(
                monoid=pres,
                level=n,
                normal_form=tuple(Fraction(a, n) for a in idx),
            )
        )
        i = r - 1
        while i >= 0:
            idx[i] += 1
            if idx[i] < n:
                break
            idx[i] = 0
            i -= 1
        else:
            break
        if r == 0:
            break
    return labels


def label_add(a, b):
    if a.monoid != b.monoid:
        raise LevelMismatch("labels over different monoids")
    n = lcm(a.level, b.level)
    nf = tuple((x + y) % 1 for x, y in zip(a.normal_form, b.normal_form))
    return CosetLabel(monoid=a.monoid, level=n, normal_form=nf)


def label_scale(k, a):
    nf = tuple((k * x) % 1 for x in a.normal_form)
    return CosetLabel(monoid=a.monoid, level=a.level, normal_form=nf)


def label_at_level(a, n):
    """Reinterpret a label at level n (its denominators must divide n)."""
    for c in a.normal_form:
        if (c * n).denominator != 1:
            raise LevelMismatch(f"label {a.normal_form} does not live at level {n}")
    return CosetLabel(monoid=a.monoid, level=n, normal_form=a.normal_form)


def label_level_divides(a, m):
    """True when the label comes from level m (denominators divide m)."""
    return all((c * m).denominator == 1 for c in a.normal_form)
