"""Delta geometry and the infinite-quotient decision procedure.

Delta(P) is the set of rational cone points that are not (nonzero monoid
element) + (cone point); its level-n slice is finite because every Delta
point x satisfies l(x) < sum of l over the Hilbert basis for any l that is
positive on the basis.  Delta0(P) keeps the points that are alone in their
class modulo the group; at a fixed level this is decided exactly by the
level-n enumeration, since congruent Delta points share denominators.

A truncated profinite element is a compatible family of coset labels over
the divisors of a level N.  Recognition of actual monoid elements through
Delta0 representatives is exact; the refutation scan implements the
documented finite obstruction and `InconclusiveAtLevel` is the fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import lattice
from .errors import IncompatibleFamily, NotSharp
from .kummer import CosetLabel, coset_label, label_scale, zero_label
from .lattice import vadd, vscale
from .monoid import MonoidElement, MonoidPresentation, monoid_points


def divisors(n):
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def positive_functional(pres):
    """Integer functional strictly positive on every Hilbert basis element."""
    if not pres.is_sharp:
        raise NotSharp("a positive functional needs a sharp cone")
    return pres.positive_functional


def delta_bound(pres):
    """Sum of the positive functional over the Hilbert basis; Delta lives below it."""
    ell = positive_functional(pres)
    return sum(
        (Fraction(lattice.dot(ell, v)) for v in pres.hilbert_basis), Fraction(0)
    )


def in_delta(pres, x):
    """Exact membership of a rational vector in Delta(P)."""
    x = lattice.as_fractions(x)
    if not lattice.cone_contains(pres.cone, x):
        return False
    return all(
        not lattice.cone_contains(pres.cone, lattice.vsub(x, v))
        for v in pres.hilbert_basis
    )


class DeltaSet:
    """Delta(P) intersected with (1/n)P, with per-point Delta0 flags."""

    def __init__(self, monoid, level, points, delta0_mask):
        self.monoid = monoid
        self.level = level
        self.points = points
        self.delta0_mask = delta0_mask
        self._by_label = {}
        for p in points:
            nf = coset_label(monoid, level, p).normal_form
            self._by_label.setdefault(nf, []).append(p)

    @property
    def delta0_points(self):
        return tuple(
            p for p, flag in zip(self.points, self.delta0_mask) if flag
        )

    def points_in_class(self, label):
        return tuple(self._by_label.get(label.normal_form, ()))

    def delta0_point_in_class(self, label):
        pts = self._by_label.get(label.normal_form, ())
        if len(pts) == 1:
            return pts[0]
        return None

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


@lru_cache(maxsize=None)
def delta_points(pres, level):
    """Delta(P) cap (1/level)P, lex-sorted, with Delta0 flags."""
    from .monoid import monoid_points_scaled

    bound = delta_bound(pres)
    denom = level * pres.denominator
    scaled_basis = [
        tuple(int(a * denom) for a in v) for v in pres.hilbert_basis
    ]
    facets = pres.cone.facets
    pts = []
    for y in monoid_points_scaled(pres, level, bound):
        in_shifted_cone = False
        for v in scaled_basis:
            z = lattice.vsub(y, v)
            if all(lattice.dot(f, z) >= 0 for f in facets):
                in_shifted_cone = True
                break
        if not in_shifted_cone:
            pts.append(tuple(Fraction(c, denom) for c in y))
    pts.sort()
    class_size = {}
    nfs = []
    for p in pts:
        nf = coset_label(pres, level, p).normal_form
        nfs.append(nf)
        class_size[nf] = class_size.get(nf, 0) + 1
    mask = tuple(class_size[nf] == 1 for nf in nfs)
    return DeltaSet(pres, level, tuple(pts), mask)


def delta0_points(pres, level):
    return delta_points(pres, level).delta0_points


# ---------------------------------------------------------------------------
# truncated profinite elements


class TruncatedProfiniteElement:
    """Compatible coset labels over all divisors of a level N."""

    def __init__(self, monoid, level, labels):
        self.monoid = monoid
        self.level = int(level)
        divs = divisors(self.level)
        if sorted(labels) != list(divs):
            raise IncompatibleFamily(
                f"labels must cover exactly the divisors of {self.level}"
            )
        self.labels = {n: labels[n] for n in divs}
        for n, lab in self.labels.items():
            if lab.monoid != monoid:
                raise IncompatibleFamily("label over a foreign monoid")
            if not all((c * n).denominator == 1 for c in lab.normal_form):
                raise IncompatibleFamily(f"label at level {n} has a finer denominator")
        if not self.labels[1].is_zero():
            raise IncompatibleFamily("the level-1 label must vanish")
        for m in divs:
            for n in divs:
                if n % m == 0 and label_scale(n // m, self.labels[n]) != self.labels[m]:
                    raise IncompatibleFamily(
                        f"labels at levels {n} and {m} are incompatible"
                    )

    @classmethod
    def from_element(cls, monoid, p, level):
        p = lattice.as_fractions(p)
        labels = {
            n: coset_label(monoid, n, vscale(Fraction(1, n), p))
            for n in divisors(level)
        }
        return cls(monoid, level, labels)


@dataclass(frozen=True)
class InfquotVerdict:
    kind: str
    element: MonoidElement = None
    level: int = None

    @property
    def is_confirmed(self):
        return self.kind == "confirmed"

    @property
    def is_refuted(self):
        return self.kind == "not-an-infinite-quotient"

    @property
    def is_inconclusive(self):
        return self.kind == "inconclusive"

    def __str__(self):
        if self.is_confirmed:
            return f"ConfirmedElement({self.element.vector})"
        if self.is_refuted:
            return "NotAnInfiniteQuotient"
        return f"InconclusiveAtLevel({self.level})"


def confirmed(element):
    return InfquotVerdict(kind="confirmed", element=element)


def not_an_infinite_quotient():
    return InfquotVerdict(kind="not-an-infinite-quotient")


def inconclusive(level):
    return InfquotVerdict(kind="inconclusive", level=level)


def _sequence_exists(pres, reps, j):
    """Is there a j-term sequence from `reps` whose sum stays in Delta?

    Partial sums of any witness sequence lie in Delta because Delta is the
    complement of an ideal, so pruning on partial sums is complete.  Only
    non-decreasing index sequences are scanned (the sum is order-free).
    """
    if not reps:
        return False

    def extend(start, partial, depth):
        if depth == j:
            return True
        for i in range(start, len(reps)):
            nxt = vadd(partial, reps[i])
            if in_delta(pres, nxt) and extend(i, nxt, depth + 1):
                return True
        return False

    zero = tuple(Fraction(0) for _ in range(pres.ambient_rank))
    return extend(0, zero, 0)


def is_infinite_quotient(element, depth=4):
    """Three-valued decision for a truncated profinite element.

    Recognition: if some divisor level n has the label represented by a
    Delta0 point gamma and the family matches the element n*gamma at every
    divisor, that element is returned; this direction is exact.  Otherwise
    the finite obstruction is scanned: the verdict is refuted only when
    every candidate characteristic integer m0 | N has a testable j <= depth
    (with j*m0 | N) admitting no Delta sequence.  Anything else is
    inconclusive at this truncation level.
    """
    pres = element.monoid
    n_total = element.level
    divs = divisors(n_total)
    # exact recognition through Delta0 representatives
    for n in divs:
        ds = delta_points(pres, n)
        gamma = ds.delta0_point_in_class(element.labels[n])
        if gamma is None:
            continue
        p = vscale(Fraction(n), gamma)
        if not pres.contains(p):
            continue
        if all(
            element.labels[m]
            == coset_label(pres, m, vscale(Fraction(1, m), p))
            for m in divs
        ):
            return confirmed(MonoidElement(pres, p))
    # documented finite obstruction
    all_refuted = True
    for m0 in divs:
        refuted = False
        for j in range(1, depth + 1):
            n = j * m0
            if n_total % n != 0:
                continue
            reps = delta_points(pres, n).points_in_class(element.labels[n])
            if not _sequence_exists(pres, reps, j):
                refuted = True
                break
        if not refuted:
            all_refuted = False
            break
    if all_refuted:
        return not_an_infinite_quotient()
    return inconclusive(n_total)
