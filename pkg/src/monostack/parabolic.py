"""Parabolic sheaves with rational weights over a log point.

Components are indexed by the canonical coset representatives at level n;
structure matrices are stored for every Hilbert generator u of (1/n)P and
record the weight-raising maps E_a -> E_(a+u) after pseudo-period
normalization.  Over a log point the line bundle sections vanish away from
weight zero, which forces the zero law: any composite whose total weight
gain is a nonzero integral monoid element is the zero map.  Concretely a
parabolic sheaf is therefore the same data as a graded module over
k[(1/n)P]/(P+), and the conversion functors below are the finite-level
form of the parabolic/quasi-coherent equivalence.

Induction along m | N is the left adjoint of weight restriction.  It is
computed as the colimit of the weight diagram below each class, presented
as a direct sum of source components modulo the arrow identifications
(evaluated in the stable gauge where the diagram has settled, which is
what makes the pseudo-period normalization the identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fields, graded, lattice
from .errors import LevelMismatch, NotADivisor, NotAMultiple
from .graded import GradedModule, graded_algebra
from .infquot import in_delta
from .kummer import label_add, label_at_level, label_level_divides
from .lattice import vadd, vscale


class ParabolicSheaf:
    """Weight-indexed spaces with commuting structure maps and the zero law."""

    def __init__(self, monoid, level, field, components, structure, check=True):
        algebra = graded_algebra(monoid, level, field)
        dims = dict(components)
        action = {}
        zero_gens = {}
        for (u, label), mat in structure.items():
            u = lattice.as_fractions(u)
            if in_delta(monoid, u):
                action[(u, label)] = mat
            else:
                zero_gens[(u, label)] = fields.mat_from_rows(mat)
        self.module = GradedModule(algebra, dims, action, check=check)
        if check:
            for (u, label), mat in zero_gens.items():
                if not fields.mat_eq_zero(field, mat):
                    raise ValueError(
                        f"structure matrix for {u} violates the zero law"
                    )

    @classmethod
    def _wrap(cls, module):
        obj = cls.__new__(cls)
        obj.module = module
        return obj

    # -- accessors ------------------------------------------------------------

    @property
    def monoid(self):
        return self.module.algebra.monoid

    @property
    def level(self):
        return self.module.algebra.level

    @property
    def field(self):
        return self.module.algebra.field

    @property
    def components(self):
        return dict(self.module.dims)

    def dim(self, label):
        return self.module.dim(label)

    @property
    def total_dim(self):
        return self.module.total_dim

    def structure_matrix(self, u, label):
        """Structure map for a Hilbert generator of (1/n)P; zero off Delta."""
        u = lattice.as_fractions(u)
        if in_delta(self.monoid, u):
            return self.module.gen_matrix(u, label)
        tgt = self.module._target_label(u, label)
        return fields.zero_matrix(self.field, self.dim(tgt), self.dim(label))

    def structure_generators(self):
        return self.module.algebra.generators

    def __eq__(self, other):
        return (
            isinstance(other, ParabolicSheaf)
            and self.module.algebra == other.module.algebra
            and self.module.dims == other.module.dims
            and all(
                self.module.gen_matrix(g, lab) == other.module.gen_matrix(g, lab)
                for g in self.module.algebra.generators
                for lab in self.module.dims
            )
        )


def to_graded(sheaf):
    """The graded module with the same components and monomial action."""
    return sheaf.module


def from_graded(module):
    """The parabolic sheaf whose structure maps realize the module action."""
    return ParabolicSheaf._wrap(module)


class ParabolicMap:
    """Weightwise map commuting with all structure matrices."""

    def __init__(self, source, target, blocks, check=True):
        if source.module.algebra != target.module.algebra:
            raise LevelMismatch("parabolic map between different levels or fields")
        self.source = source
        self.target = target
        self.gmap = graded.GradedMap(
            source.module, target.module, blocks, check=check
        )

    @property
    def blocks(self):
        return self.gmap.blocks

    def block(self, label):
        return self.gmap.block(label)

    def is_isomorphism(self):
        return self.gmap.is_isomorphism()


def compose(g, f):
    inner = graded.compose_maps(g.gmap, f.gmap)
    out = ParabolicMap.__new__(ParabolicMap)
    out.source, out.target, out.gmap = f.source, g.target, inner
    return out


def identity_parabolic_map(sheaf):
    out = ParabolicMap.__new__(ParabolicMap)
    out.source = out.target = sheaf
    out.gmap = graded.identity_map(sheaf.module)
    return out


def is_identity(pmap):
    field = pmap.source.field
    for lab, d in pmap.source.module.dims.items():
        if pmap.block(lab) != fields.identity_matrix(field, d):
            return False
    return all(
        pmap.target.dim(lab) == pmap.source.dim(lab)
        for lab in pmap.target.module.dims
    )


def kernel(pmap):
    ker, incl = graded.kernel(pmap.gmap)
    ksheaf = from_graded(ker)
    out = ParabolicMap.__new__(ParabolicMap)
    out.source, out.target, out.gmap = ksheaf, pmap.source, incl
    return ksheaf, out


def cokernel(pmap):
    """Quotient of the target by the image, with the projection."""
    alg = pmap.source.module.algebra
    field = alg.field
    img, incl = graded.image(pmap.gmap)
    dims = {}
    proj_blocks = {}
    spaces = {}
    for lab in set(pmap.target.module.dims):
        amb = pmap.target.dim(lab)
        cols = []
        if img.dim(lab):
            mat = incl.block(lab)
            cols = [tuple(mat[i][j] for i in range(amb)) for j in range(img.dim(lab))]
        sp = graded.PresentedSpace(field, amb, [c for c in cols])
        spaces[lab] = sp
        if sp.dim:
            dims[lab] = sp.dim
            proj_blocks[lab] = tuple(
                zip(*[sp.unit(k) for k in range(amb)])
            )
    action = {}
    for lab in dims:
        sp = spaces[lab]
        for g in alg.generators:
            tgt = pmap.target.module._target_label(g, lab)
            tsp = spaces.get(tgt)
            if tsp is None or tsp.dim == 0:
                continue
            gmat = pmap.target.module.gen_matrix(g, lab)
            cols = []
            for k in range(sp.dim):
                amb_idx = sp.free[k]
                col = tuple(gmat[i][amb_idx] for i in range(len(gmat)))
                cols.append(tsp.reduce(col))
            action[(g, lab)] = tuple(zip(*cols))
    coker = from_graded(GradedModule(alg, dims, action, check=False))
    out = ParabolicMap.__new__(ParabolicMap)
    out.source, out.target = pmap.target, coker
    out.gmap = graded.GradedMap(
        pmap.target.module, coker.module, proj_blocks, check=False
    )
    return coker, out


# ---------------------------------------------------------------------------
# restriction


def restrict(sheaf, sublevel):
    """Weight restriction to (1/m)P; the right adjoint of induction."""
    if sheaf.level % sublevel != 0:
        raise NotADivisor(f"{sublevel} does not divide level {sheaf.level}")
    return from_graded(graded.degree_zero_part(sheaf.module, sublevel))


def restrict_parabolic_map(pmap, sublevel):
    inner = graded.restrict_map(pmap.gmap, sublevel)
    out = ParabolicMap.__new__(ParabolicMap)
    out.source = restrict(pmap.source, sublevel)
    out.target = restrict(pmap.target, sublevel)
    out.gmap = graded.GradedMap(
        out.source.module, out.target.module, inner.blocks, check=False
    )
    return out


# ---------------------------------------------------------------------------
# induction


@dataclass
class InductionData:
    source_level: int
    gens_per_label: dict
    pair_index: dict
    spaces: dict


def _induce_with_data(sheaf, level):
    """Colimit-of-weights construction of the induced sheaf, with its
    presentation kept for building the adjunction maps."""
    if level % sheaf.level != 0:
        raise NotAMultiple(f"{level} is not a multiple of level {sheaf.level}")
    monoid = sheaf.monoid
    field = sheaf.field
    src = sheaf.module
    alg_m = src.algebra
    alg_n = graded_algebra(monoid, level, field)
    gens_per_label = {}
    pair_index = {}
    for nu, dm in src.dims.items():
        nu_big = label_at_level(nu, level)
        for gamma in alg_n.basis:
            lab = label_add(nu_big, alg_n.label_of(gamma))
            lst = gens_per_label.setdefault(lab, [])
            for i in range(dm):
                pair_index[(nu, gamma, i)] = (lab, len(lst))
                lst.append((nu, gamma, i))
    spaces = {}
    for lab, gens in gens_per_label.items():
        relations = []
        for w in alg_m.delta_generators:
            for nu, dm in src.dims.items():
                act = src.act(w, nu)
                tnu = src._target_label(w, nu)
                for gamma in alg_n.basis:
                    glab = label_add(
                        label_at_level(nu, level), alg_n.label_of(gamma)
                    )
                    wlab = label_add(glab, label_at_level(alg_m.label_of(w), level))
                    if wlab != lab:
                        continue
                    shifted = vadd(w, gamma)
                    shifted_key = (
                        pair_index.get((nu, shifted, 0))
                        if in_delta(monoid, shifted)
                        else None
                    )
                    for i in range(dm):
                        row = [field.zero] * len(gens)
                        for k in range(src.dim(tnu)):
                            key = pair_index.get((tnu, gamma, k))
                            if key is not None:
                                row[key[1]] = field.add(row[key[1]], act[k][i])
                        if shifted_key is not None:
                            idx = pair_index[(nu, shifted, i)][1]
                            row[idx] = field.sub(row[idx], field.one)
                        if any(not field.is_zero(c) for c in row):
                            relations.append(tuple(row))
        spaces[lab] = graded.PresentedSpace(field, len(gens), relations)
    dims = {lab: sp.dim for lab, sp in spaces.items() if sp.dim}
    action = {}
    for lab, gens in gens_per_label.items():
        sp = spaces[lab]
        if sp.dim == 0:
            continue
        for h in alg_n.delta_generators:
            tlab = label_add(lab, alg_n.label_of(h))
            tsp = spaces.get(tlab)
            if tsp is None or tsp.dim == 0:
                continue
            cols = []
            for k in range(sp.dim):
                nu, gamma, i = gens[sp.free[k]]
                shifted = vadd(gamma, h)
                if in_delta(monoid, shifted):
                    vec = [field.zero] * tsp.ngens
                    vec[pair_index[(nu, shifted, i)][1]] = field.one
                    cols.append(tsp.reduce(vec))
                else:
                    cols.append(tuple(field.zero for _ in range(tsp.dim)))
            action[(h, lab)] = tuple(zip(*cols))
    module = GradedModule(alg_n, dims, action, check=False)
    data = InductionData(
        source_level=sheaf.level,
        gens_per_label=gens_per_label,
        pair_index=pair_index,
        spaces=spaces,
    )
    return from_graded(module), data


def induce(sheaf, level):
    """Left adjoint of restrict along sheaf.level | level."""
    return _induce_with_data(sheaf, level)[0]


def induce_parabolic_map(pmap, level, src_ind=None, tgt_ind=None):
    """The induced map between induced sheaves (functoriality of induction)."""
    if src_ind is None:
        src_ind = _induce_with_data(pmap.source, level)
    if tgt_ind is None:
        tgt_ind = _induce_with_data(pmap.target, level)
    s_sheaf, s_data = src_ind
    t_sheaf, t_data = tgt_ind
    field = pmap.source.field
    blocks = {}
    for lab, d in s_sheaf.module.dims.items():
        sp = s_data.spaces[lab]
        tsp = t_data.spaces.get(lab)
        tdim = t_sheaf.dim(lab)
        cols = []
        for k in range(d):
            nu, gamma, i = s_data.gens_per_label[lab][sp.free[k]]
            vec = [field.zero] * (tsp.ngens if tsp else 0)
            fb = pmap.block(nu)
            for k2 in range(pmap.target.dim(nu)):
                key = t_data.pair_index.get((nu, gamma, k2))
                if key is not None:
                    vec[key[1]] = field.add(vec[key[1]], fb[k2][i])
            cols.append(tsp.reduce(vec) if tsp else tuple())
        if tdim:
            blocks[lab] = tuple(zip(*cols))
    out = ParabolicMap.__new__(ParabolicMap)
    out.source, out.target = s_sheaf, t_sheaf
    out.gmap = graded.GradedMap(
        s_sheaf.module, t_sheaf.module, blocks, check=False
    )
    return out


def unit_map(sheaf, level, ind=None):
    """eta: E -> restrict(induce(E, level), E.level)."""
    if ind is None:
        ind = _induce_with_data(sheaf, level)
    ind_sheaf, data = ind
    res = restrict(ind_sheaf, sheaf.level)
    field = sheaf.field
    zero = tuple(Fraction(0) for _ in range(sheaf.monoid.ambient_rank))
    blocks = {}
    for nu, d in sheaf.module.dims.items():
        lab_big = label_at_level(nu, level)
        sp = data.spaces.get(lab_big)
        if sp is None or sp.dim == 0:
            continue
        cols = []
        for i in range(d):
            vec = [field.zero] * sp.ngens
            vec[data.pair_index[(nu, zero, i)][1]] = field.one
            cols.append(sp.reduce(vec))
        blocks[nu] = tuple(zip(*cols))
    out = ParabolicMap.__new__(ParabolicMap)
    out.source, out.target = sheaf, res
    out.gmap = graded.GradedMap(sheaf.module, res.module, blocks, check=False)
    return out


def counit_map(sheaf, sublevel, ind=None):
    """eps: induce(restrict(E, sublevel), E.level) -> E."""
    if sheaf.level % sublevel != 0:
        raise NotADivisor(f"{sublevel} does not divide level {sheaf.level}")
    res = restrict(sheaf, sublevel)
    if ind is None:
        ind = _induce_with_data(res, sheaf.level)
    ind_sheaf, data = ind
    field = sheaf.field
    blocks = {}
    for lab, d in ind_sheaf.module.dims.items():
        sp = data.spaces[lab]
        tdim = sheaf.dim(lab)
        if tdim == 0:
            continue
        cols = []
        for k in range(d):
            nu, gamma, i = data.gens_per_label[lab][sp.free[k]]
            big = label_at_level(nu, sheaf.level)
            act = sheaf.module.act(gamma, big)
            cols.append(tuple(act[t][i] for t in range(tdim)))
        blocks[lab] = tuple(zip(*cols))
    out = ParabolicMap.__new__(ParabolicMap)
    out.source, out.target = ind_sheaf, sheaf
    out.gmap = graded.GradedMap(
        ind_sheaf.module, sheaf.module, blocks, check=False
    )
    return out


def is_induced_from(sheaf, divisor):
    """Finite-presentation test: the counit at `divisor` is an isomorphism.

    Componentwise finite presentation is automatic for finite-dimensional
    components over a field, so this single check decides the criterion at
    the stored level.
    """
    if sheaf.level % divisor != 0:
        raise NotADivisor(f"{divisor} does not divide level {sheaf.level}")
    eps = counit_map(sheaf, divisor)
    return eps.is_isomorphism()


def minimal_inducing_level(sheaf):
    """Smallest divisor n of the level passing is_induced_from, or None."""
    from .infquot import divisors

    for n in divisors(sheaf.level):
        if is_induced_from(sheaf, n):
            return n
    return None


# ---------------------------------------------------------------------------
# hom spaces


def hom_space(source, target):
    """Dimension and basis of the space of parabolic maps source -> target."""
    if source.module.algebra != target.module.algebra:
        raise LevelMismatch("hom between different levels or fields")
    alg = source.module.algebra
    field = alg.field
    var_index = {}
    for lab, d in source.module.dims.items():
        td = target.dim(lab)
        for r in range(td):
            for c in range(d):
                var_index[(lab, r, c)] = len(var_index)
    nvars = len(var_index)
    rows = []
    for g in alg.delta_generators:
        for lab, d in source.module.dims.items():
            tgt = source.module._target_label(g, lab)
            a1 = source.module.gen_matrix(g, lab)  # dim(tgt_src) x d
            a2 = target.module.gen_matrix(g, lab)
            rows_out = target.dim(tgt)
            for r in range(rows_out):
                for c in range(d):
                    row = [field.zero] * nvars
                    # (f_{tgt} . a1)[r][c]
                    for k in range(source.dim(tgt)):
                        key = var_index.get((tgt, r, k))
                        if key is not None:
                            row[key] = field.add(row[key], a1[k][c])
                    # (a2 . f_lab)[r][c]
                    for k in range(target.dim(lab)):
                        key = var_index.get((lab, k, c))
                        if key is not None:
                            row[key] = field.sub(row[key], a2[r][k])
                    if any(not field.is_zero(x) for x in row):
                        rows.append(tuple(row))
    if nvars == 0:
        return 0, []
    basis = fields.nullspace(field, tuple(rows)) if rows else fields.identity_matrix(field, nvars)
    maps = []
    for vec in basis:
        blocks = {}
        for lab, d in source.module.dims.items():
            td = target.dim(lab)
            mat = [[field.zero] * d for _ in range(td)]
            for r in range(td):
                for c in range(d):
                    mat[r][c] = vec[var_index[(lab, r, c)]]
            blocks[lab] = tuple(tuple(r) for r in mat)
        maps.append(ParabolicMap(source, target, blocks, check=False))
    return len(maps), maps
