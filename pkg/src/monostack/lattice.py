"""Exact integer and rational lattice geometry.

Vectors are tuples of ints or Fractions; no floating point enters any code
path.  This module provides Smith normal forms with transform matrices,
integer lattice bases and membership, facet enumeration for rational
polyhedral cones, cone membership, and bounded enumeration of points with
a prescribed denominator.

A cone is stored by generators together with its derived H-description.
The facet list always cuts out the cone exactly, including the linear-span
constraints (which appear as +/- pairs of functionals when the cone is not
full dimensional).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from . import fields
from .errors import DimensionMismatch, UnboundedRegion
from .fields import QQ


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def is_zero_vector(u):
    return all(a == 0 for a in u)


def as_fractions(u):
    return tuple(Fraction(a) for a in u)


def lcm(a, b):
    return a * b // gcd(a, b)


def common_denominator(u):
    d = 1
    for a in u:
        d = lcm(d, Fraction(a).denominator)
    return d


def primitive(u):
    """Scale a nonzero rational vector to a primitive integer vector.

    The direction is preserved (only positive scaling), so sign conventions
    of oriented functionals survive.
    """
    d = common_denominator(u)
    w = [int(a * d) for a in as_fractions(u)]
    g = 0
    for a in w:
        g = gcd(g, abs(a))
    return tuple(a // g for a in w)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFDecomposition:
    """U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}."""

    u: tuple
    d: tuple
    v: tuple
    divisors: tuple


def smith_normal_form(a):
    """Smith normal form with transforms, for an integer matrix (rows)."""
    m = len(a)
    n = len(a[0]) if m else 0
    s = [[int(x) for x in row] for row in a]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):
        s[i] = [x + c * y for x, y in zip(s[i], s[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, c):
        for row in s:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] != 0 and (pivot is None or abs(s[i][j]) < abs(s[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])
        if s[t][t] < 0:
            negate_row(t)
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    add_row(i, t, -q)
                    if s[i][t]:
                        swap_rows(t, i)
                        if s[t][t] < 0:
                            negate_row(t)
                        dirty = True
            for j in range(t + 1, n):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    add_col(j, t, -q)
                    if s[t][j]:
                        swap_cols(t, j)
                        dirty = True
        d = s[t][t]
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if s[i][j] % d != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(t, bad, 1)
            continue
        t += 1
    divisors = tuple(abs(s[i][i]) for i in range(min(m, n)))
    return SNFDecomposition(
        u=tuple(tuple(r) for r in u),
        d=tuple(tuple(r) for r in s),
        v=tuple(tuple(r) for r in v),
        divisors=divisors,
    )


# ---------------------------------------------------------------------------
# integer lattices (given by spanning vectors)


def lattice_basis(vectors):
    """Hermite-style row basis of the integer lattice spanned by `vectors`."""
    work = [list(v) for v in vectors if not is_zero_vector(v)]
    if not work:
        return ()
    dim = len(work[0])
    r = 0
    for col in range(dim):
        idxs = [i for i in range(r, len(work)) if work[i][col] != 0]
        if not idxs:
            continue
        while len(idxs) > 1:
            idxs.sort(key=lambda i: abs(work[i][col]))
            i0 = idxs[0]
            for i in idxs[1:]:
                q = work[i][col] // work[i0][col]
                work[i] = [a - q * b for a, b in zip(work[i], work[i0])]
            idxs = [i for i in idxs if work[i][col] != 0]
        i0 = idxs[0]
        work[r], work[i0] = work[i0], work[r]
        if work[r][col] < 0:
            work[r] = [-a for a in work[r]]
        for i in range(r):
            q = work[i][col] // work[r][col]
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[r])]
        r += 1
    return tuple(tuple(row) for row in work[:r])


def lattice_coords(basis_rows, x):
    """Coordinates of x in a Hermite row basis, or None if x not in span.

    The coordinates are Fractions; x lies in the lattice iff all of them
    are integers (use `lattice_contains`).
    """
    y = list(as_fractions(x))
    coords = []
    for row in basis_rows:
        p = next(i for i, a in enumerate(row) if a != 0)
        c = y[p] / row[p]
        coords.append(c)
        y = [a - c * b for a, b in zip(y, row)]
    if any(a != 0 for a in y):
        return None
    return tuple(coords)


def lattice_contains(basis_rows, x):
    coords = lattice_coords(basis_rows, x)
    return coords is not None and all(c.denominator == 1 for c in coords)


def lattice_contains_int(basis_rows, x):
    """Integer-only membership test against a Hermite row basis."""
    y = list(x)
    for row in basis_rows:
        p = next(i for i, a in enumerate(row) if a != 0)
        q, r = divmod(y[p], row[p])
        if r:
            return False
        if q:
            y = [a - q * b for a, b in zip(y, row)]
    return not any(y)


# ---------------------------------------------------------------------------
# rational polyhedral cones


@dataclass(frozen=True)
class RationalCone:
    """Q>=0-span of finitely many rational generators.

    `facets` are primitive integer functionals with x in cone iff every
    facet is >= 0 on x; span constraints contribute +/- pairs.  `rays` are
    the primitive extreme ray directions (meaningful for pointed cones).
    """

    dim: int
    generators: tuple
    facets: tuple
    rays: tuple

    def contains(self, x):
        return cone_contains(self, x)


def _span_data(prim_gens, dim):
    """Independent generator subset spanning the cone, plus projection.

    Returns (basis list, coords function) where coords maps any vector in
    the span to its coefficient tuple w.r.t. the basis; the map is linear
    on all of Q^dim via the rational pseudo-inverse.
    """
    basis = []
    rows = []
    for g in prim_gens:
        cand = rows + [list(map(Fraction, g))]
        if fields.rank(QQ, tuple(map(tuple, cand))) > len(rows):
            rows = cand
            basis.append(g)
    bt = tuple(tuple(Fraction(x) for x in g) for g in basis)  # s rows of dim
    gram = fields.mat_mul(QQ, bt, tuple(zip(*bt)))
    gram_inv = fields.invert(QQ, gram)
    proj = fields.mat_mul(QQ, gram_inv, bt)  # s x dim

    def coords(x):
        return fields.mat_vec(QQ, proj, as_fractions(x))

    return basis, coords, proj


def facet_inequalities(generators):
    """Primitive integer functionals cutting out the cone of `generators`.

    The returned list satisfies {x : l(x) >= 0 for all l} = Q>=0-span of
    the generators; when the span is a proper subspace the list contains
    +/- pairs pinning the span.
    """
    gens = [as_fractions(g) for g in generators]
    if not gens:
        raise DimensionMismatch("no generators")
    dim = len(gens[0])
    if any(len(g) != dim for g in gens):
        raise DimensionMismatch("generators of mixed dimension")
    prim = []
    for g in gens:
        if not is_zero_vector(g):
            p = primitive(g)
            if p not in prim:
                prim.append(p)
    facets = []
    if not prim:
        for i in range(dim):
            e = tuple(1 if j == i else 0 for j in range(dim))
            facets.append(e)
            facets.append(vneg(e))
        return sorted(facets)
    null = fields.nullspace(QQ, tuple(tuple(map(Fraction, g)) for g in prim))
    for ell in null:
        p = primitive(ell)
        facets.append(p)
        facets.append(vneg(p))
    s = dim - len(null)
    basis, coords, proj = _span_data(prim, dim)
    cg = [coords(g) for g in prim]
    span_facets = []
    if s == 1:
        signs = {1 if c[0] > 0 else -1 for c in cg}
        if len(signs) == 1:
            span_facets.append((Fraction(signs.pop()),))
    else:
        from itertools import combinations

        seen = set()
        for subset in combinations(range(len(cg)), s - 1):
            rows = tuple(cg[i] for i in subset)
            kernel = fields.nullspace(QQ, rows)
            if len(kernel) != 1:
                continue
            normal = kernel[0]
            vals = [dot(normal, c) for c in cg]
            if all(v >= 0 for v in vals):
                cand = primitive(normal)
            elif all(v <= 0 for v in vals):
                cand = primitive(vneg(normal))
            else:
                continue
            if cand not in seen:
                seen.add(cand)
                span_facets.append(as_fractions(cand))
    if span_facets:
        for ell in span_facets:
            ambient = fields.mat_vec(QQ, tuple(zip(*proj)), ell)
            facets.append(primitive(ambient))
    unique = sorted(set(facets))
    return unique


def cone_from_generators(generators):
    gens = [as_fractions(g) for g in generators]
    dim = len(gens[0])
    prim = []
    for g in gens:
        if not is_zero_vector(g):
            p = primitive(g)
            if p not in prim:
                prim.append(p)
    facets = tuple(facet_inequalities(generators))
    rays = _extreme_rays(prim, facets, dim)
    return RationalCone(
        dim=dim, generators=tuple(sorted(prim)), facets=facets, rays=rays
    )


def _extreme_rays(prim_gens, facets, dim):
    rays = []
    for g in prim_gens:
        zero_rows = tuple(
            as_fractions(f) for f in facets if dot(f, g) == 0
        )
        rk = fields.rank(QQ, zero_rows) if zero_rows else 0
        if rk == dim - 1 and g not in rays:
            rays.append(g)
    return tuple(sorted(rays))


def cone_contains(cone, x):
    x = as_fractions(x)
    if len(x) != cone.dim:
        raise DimensionMismatch(
            f"point of dim {len(x)} against cone of dim {cone.dim}"
        )
    return all(dot(f, x) >= 0 for f in cone.facets)


def is_pointed(cone):
    """True iff the cone contains no line."""
    total = tuple(sum(f[i] for f in cone.facets) for i in range(cone.dim))
    return all(
        dot(total, g) > 0 for g in cone.generators
    )


def positive_functional_of(cone):
    """Sum of all facet functionals; strictly positive on a pointed cone."""
    return tuple(sum(f[i] for f in cone.facets) for i in range(cone.dim))


def enumerate_integer_points(cone, bound_functional, cap):
    """Integer points y in the cone with l(y) <= cap, in lex order.

    All arithmetic is plain int; `cap` must be an integer (callers floor a
    rational bound first, which is lossless for integer-valued l on Z^d).
    """
    ell = tuple(int(c) for c in bound_functional)
    if len(ell) != cone.dim:
        raise DimensionMismatch("functional dimension mismatch")
    for g in cone.generators:
        if dot(ell, g) <= 0:
            raise UnboundedRegion(f"functional not positive on generator {g}")
    if cap < 0:
        return []
    if not cone.generators:
        return [tuple(0 for _ in range(cone.dim))]
    los = [Fraction(0)] * cone.dim
    his = [Fraction(0)] * cone.dim
    for r in cone.rays or cone.generators:
        t = Fraction(cap, dot(ell, r))
        for i, c in enumerate(r):
            v = t * c
            los[i] = min(los[i], v)
            his[i] = max(his[i], v)
    lo = [ceil(v) for v in los]
    hi = [floor(v) for v in his]
    facets = cone.facets
    nfac = len(facets)
    # per-coordinate contribution bounds for pruning
    fmax = [[max(f[i] * lo[i], f[i] * hi[i]) for f in facets] for i in range(cone.dim)]
    lmin = [min(ell[i] * lo[i], ell[i] * hi[i]) for i in range(cone.dim)]
    suffix_fmax = [[0] * nfac for _ in range(cone.dim + 1)]
    suffix_lmin = [0] * (cone.dim + 1)
    for i in range(cone.dim - 1, -1, -1):
        suffix_fmax[i] = [a + b for a, b in zip(suffix_fmax[i + 1], fmax[i])]
        suffix_lmin[i] = suffix_lmin[i + 1] + lmin[i]
    out = []
    y = [0] * cone.dim

    def scan(i, fsums, lsum):
        if i == cone.dim:
            if all(v >= 0 for v in fsums) and lsum <= cap:
                out.append(tuple(y))
            return
        for c in range(lo[i], hi[i] + 1):
            y[i] = c
            nf = [fs + facets[k][i] * c for k, fs in enumerate(fsums)]
            nl = lsum + ell[i] * c
            if nl + suffix_lmin[i + 1] > cap:
                continue
            if any(v + m < 0 for v, m in zip(nf, suffix_fmax[i + 1])):
                continue
            scan(i + 1, nf, nl)
        y[i] = 0

    scan(0, [0] * nfac, 0)
    out.sort()
    return out


def enumerate_points(cone, denominator, bound_functional, bound):
    """All x with denominator*x integral, x in cone and l(x) <= bound.

    The bounding functional must be strictly positive on the cone away
    from the origin; this is checked on the generators and violated input
    raises UnboundedRegion.  Points come back in lexicographic order.
    """
    bound = Fraction(bound)
    if bound < 0:
        return []
    cap = floor(bound * denominator)
    ys = enumerate_integer_points(cone, bound_functional, cap)
    return [tuple(Fraction(c, denominator) for c in y) for y in ys]
