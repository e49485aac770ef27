"""Independent oracles and seeded random generators for the test suite.

Everything here deliberately avoids the library's own geometry paths:
cone membership is decided by Fourier-Motzkin feasibility of the
nonnegative-combination system, monoid membership by bounded brute-force
coefficient search, determinants by fraction Gaussian elimination.
"""

from fractions import Fraction

from monostack import fields
from monostack.errors import EmptyGenerators, NotSharp
from monostack.fields import QQ
from monostack.graded import (
    GradedModule,
    algebra_as_module,
    corestrict_to_image,
    direct_sum,
    image,
    kernel,
    twist,
)
from monostack.kummer import MonoidHom
from monostack.monoid import saturate, validate
from monostack.parabolic import from_graded, hom_space


def in_cone_oracle(generators, x):
    """x in the Q>=0-span of the generators, decided exactly.

    Caratheodory: membership holds iff some linearly independent generator
    subset admits a nonnegative exact solution, so all subsets up to the
    rank are solved by rational elimination.
    """
    from itertools import combinations

    from monostack.fields import QQ
    from monostack import fields as flds

    gens = [tuple(Fraction(a) for a in g) for g in generators]
    x = tuple(Fraction(a) for a in x)
    if all(a == 0 for a in x):
        return True
    rank = flds.rank(QQ, tuple(gens))
    for size in range(1, rank + 1):
        for subset in combinations(range(len(gens)), size):
            cols = tuple(gens[i] for i in subset)
            if flds.rank(QQ, cols) != size:
                continue
            a = tuple(zip(*cols))  # dim x size
            t = flds.solve(QQ, a, x)
            if t is not None and all(c >= 0 for c in t):
                return True
    return False


def nat_combination_oracle(generators, x, coeff_bound=10):
    """Brute-force: is x a sum of generators with coefficients <= coeff_bound?"""
    x = tuple(Fraction(a) for a in x)

    def search(rem, idx):
        if all(a == 0 for a in rem):
            return True
        if idx == len(generators):
            return False
        g = generators[idx]
        for c in range(coeff_bound + 1):
            cand = tuple(a - c * Fraction(b) for a, b in zip(rem, g))
            if search(cand, idx + 1):
                return True
        return False

    return search(x, 0)


def det_frac(matrix):
    """Exact determinant by fraction Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def random_int_matrix(rng, rows, cols, lo=-9, hi=9):
    return tuple(
        tuple(rng.randint(lo, hi) for _ in range(cols)) for _ in range(rows)
    )


def random_unimodular(rng, n, steps=6):
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return tuple(tuple(row) for row in m)


def random_sharp_saturated(rng, rank=2, tries=100):
    for _ in range(tries):
        gens = [
            tuple(rng.randint(-2, 3) for _ in range(rank))
            for _ in range(rng.randint(2, 4))
        ]
        try:
            pres = validate(gens)
        except (NotSharp, EmptyGenerators):
            continue
        return saturate(pres)
    raise RuntimeError("could not draw a sharp monoid")


def random_kummer_hom(pres, rng):
    """A random Kummer map: unimodular relabel into a root-extended saturation."""
    u = random_unimodular(rng, pres.ambient_rank)
    d = rng.choice([1, 2, 3])
    imgs = [
        tuple(sum(u[i][j] * g[j] for j in range(pres.ambient_rank))
              for i in range(pres.ambient_rank))
        for g in pres.generators
    ]
    target = saturate(validate(imgs, denominator=pres.denominator * d))
    return MonoidHom(pres, target, u)


# -- random graded data -------------------------------------------------------


def random_twist_sum(algebra, rng, max_summands=2):
    labels = algebra.labels
    parts = [
        twist(algebra, labels[rng.randrange(len(labels))])
        for _ in range(rng.randint(1, max_summands))
    ]
    return direct_sum(parts)


def graded_hom_basis(m, n):
    dim, maps = hom_space(from_graded(m), from_graded(n))
    return [p.gmap for p in maps]


def random_graded_map(m, n, rng):
    basis = graded_hom_basis(m, n)
    field = m.algebra.field
    from monostack.graded import GradedMap

    blocks = {}
    coeffs = [field.of_int(rng.randint(-2, 2)) for _ in basis]
    for lab in m.dims:
        acc = None
        for c, b in zip(coeffs, basis):
            mat = b.block(lab)
            scaled = fields.mat_scale(field, c, mat)
            acc = scaled if acc is None else fields.mat_add(field, acc, scaled)
        if acc is None:
            continue
        blocks[lab] = acc
    return GradedMap(m, n, blocks, check=False)


def random_module(algebra, rng, max_summands=2):
    m = random_twist_sum(algebra, rng, max_summands)
    roll = rng.random()
    if roll < 0.34:
        return m
    t = random_twist_sum(algebra, rng, max_summands)
    f = random_graded_map(m, t, rng)
    if roll < 0.67:
        k, _ = kernel(f)
        return k if k.total_dim else m
    img, _ = image(f)
    return img if img.total_dim else m


def random_ses(algebra, rng):
    """0 -> ker f -> M -> im f -> 0 for a random twist-sum map f."""
    m = random_twist_sum(algebra, rng)
    t = random_twist_sum(algebra, rng)
    f = random_graded_map(m, t, rng)
    img, incl = image(f)
    proj = corestrict_to_image(f, img, incl)
    ker, kincl = kernel(f)
    return ker, m, img, kincl, proj
