"""Truncated simplicial groups and their invariants.

A :class:`TruncatedSimplicialGroup` holds levels ``0..K`` with face maps
``d_i: level k -> level k-1`` and degeneracies ``s_i: level k -> level k+1``.
Face and degeneracy maps are ordinary functions here, so ``d_i d_j`` means
"apply ``d_j`` first".
"""

from dataclasses import dataclass

import numpy as np

from xmod.errors import ComponentNotNormal, NotAHomomorphism, RestrictionEscapesKernel, TruncationTooShallow
from xmod.groups import (
    FiniteGroup,
    Homomorphism,
    Subgroup,
    closure_mask,
    commutator_witness,
    identity_hom,
    normality_witness,
    quotient,
)
from xmod.report import AxiomReport, Violation


class TruncatedSimplicialGroup:
    def __init__(self, levels, faces, degens, label=""):
        self.levels = list(levels)
        self.faces = dict(faces)
        self.degens = dict(degens)
        self.label = label
        self.inclusion = None
        if self.K < 1:
            raise TruncationTooShallow("truncation level must be at least 1")
        for k in range(1, self.K + 1):
            for i in range(k + 1):
                if (k, i) not in self.faces:
                    raise ValueError(f"missing face d_{i} at level {k}")
        for k in range(self.K):
            for i in range(k + 1):
                if (k, i) not in self.degens:
                    raise ValueError(f"missing degeneracy s_{i} at level {k}")

    @property
    def K(self):
        return len(self.levels) - 1

    def face(self, k, i):
        return self.faces[(k, i)]

    def degen(self, k, i):
        return self.degens[(k, i)]

    def structure_maps(self):
        for (k, i), f in sorted(self.faces.items()):
            yield f"d{i}@{k}", f
        for (k, i), s in sorted(self.degens.items()):
            yield f"s{i}@{k}", s

    def __repr__(self):
        orders = [g.order for g in self.levels]
        return f"<TruncatedSimplicialGroup {self.label} K={self.K} orders={orders}>"


@dataclass
class SimplicialHom:
    source: TruncatedSimplicialGroup
    target: TruncatedSimplicialGroup
    maps: list
    label: str = ""


@dataclass
class ComponentGroup:
    group: FiniteGroup
    projection: Homomorphism
    component: Subgroup


def constant_simplicial(group, K=3, label=""):
    ident = identity_hom(group)
    faces = {(k, i): ident for k in range(1, K + 1) for i in range(k + 1)}
    degens = {(k, i): ident for k in range(K) for i in range(k + 1)}
    return TruncatedSimplicialGroup([group] * (K + 1), faces, degens, label or f"const({group.label})")


# ------------------------------------------------------------------- checks


def _compare(tag, lhs, rhs, xs):
    bad = np.nonzero(lhs != rhs)[0]
    if bad.size:
        return [Violation(tag, (int(xs[bad[0]]),), f"{bad.size} elements differ")]
    return []


def check_simplicial_identities(S):
    """Every simplicial identity instance inside the truncation, on every element."""
    rep = AxiomReport()
    d = lambda k, i, xs: S.face(k, i).apply(xs)
    s = lambda k, i, xs: S.degen(k, i).apply(xs)
    K = S.K
    for k in range(2, K + 1):
        xs = S.levels[k].elements()
        for j in range(k + 1):
            dj = d(k, j, xs)
            for i in range(j):
                # d_i d_j = d_{j-1} d_i
                tag = f"d{i}d{j}=d{j - 1}d{i}@{k}"
                rep.record(tag, _compare(tag, d(k - 1, i, dj), d(k - 1, j - 1, d(k, i, xs)), xs))
    for k in range(K - 1):
        xs = S.levels[k].elements()
        for j in range(k + 1):
            sj = s(k, j, xs)
            for i in range(j + 1):
                # s_i s_j = s_{j+1} s_i
                tag = f"s{i}s{j}=s{j + 1}s{i}@{k}"
                rep.record(tag, _compare(tag, s(k + 1, i, sj), s(k + 1, j + 1, s(k, i, xs)), xs))
    for k in range(K):
        xs = S.levels[k].elements()
        for j in range(k + 1):
            sj = s(k, j, xs)
            for i in range(k + 2):
                lhs = d(k + 1, i, sj)
                if i < j:
                    tag = f"d{i}s{j}=s{j - 1}d{i}@{k}"
                    rhs = s(k - 1, j - 1, d(k, i, xs))
                elif i in (j, j + 1):
                    tag = f"d{i}s{j}=id@{k}"
                    rhs = xs
                else:
                    tag = f"d{i}s{j}=s{j}d{i - 1}@{k}"
                    rhs = s(k - 1, j, d(k, i - 1, xs))
                rep.record(tag, _compare(tag, lhs, rhs, xs))
    return rep


def check_structure_maps(S):
    """Each face and degeneracy is a group homomorphism (elements × generators)."""
    rep = AxiomReport()
    for name, f in S.structure_maps():
        w = f.first_violation()
        rep.record(f"hom:{name}", [Violation(f"hom:{name}", w)] if w else [])
    return rep


def check_simplicial_group(S):
    return check_structure_maps(S).merge(check_simplicial_identities(S))


def check_simplicial_hom(f):
    rep = AxiomReport()
    src, tgt = f.source, f.target
    if src.K != tgt.K or len(f.maps) != src.K + 1:
        rep.add("truncation_mismatch", (src.K, tgt.K))
        return rep
    for k, m in enumerate(f.maps):
        w = m.first_violation()
        rep.record(f"hom@{k}", [Violation(f"hom@{k}", w)] if w else [])
    for (k, i), d in sorted(src.faces.items()):
        xs = src.levels[k].elements()
        tag = f"f.d{i}=d{i}.f@{k}"
        lhs = f.maps[k - 1].apply(d.apply(xs))
        rhs = tgt.face(k, i).apply(f.maps[k].apply(xs))
        rep.record(tag, _compare(tag, lhs, rhs, xs))
    for (k, i), s in sorted(src.degens.items()):
        xs = src.levels[k].elements()
        tag = f"f.s{i}=s{i}.f@{k}"
        lhs = f.maps[k + 1].apply(s.apply(xs))
        rhs = tgt.degen(k, i).apply(f.maps[k].apply(xs))
        rep.record(tag, _compare(tag, lhs, rhs, xs))
    return rep


# ------------------------------------------------------- subobjects, kernels


def restrict(S, subgroups, label="", error=RestrictionEscapesKernel):
    """Simplicial subgroup on levelwise ``subgroups``; sets ``.inclusion``."""
    views = [sub.as_group() for sub in subgroups]
    faces, degens = {}, {}
    for (k, i), d in S.faces.items():
        img = d.apply(subgroups[k].members)
        bad = np.nonzero(~subgroups[k - 1].mask[img])[0]
        if bad.size:
            raise error(f"d{i} leaves the subgroup at level {k}", witness=(k, i, int(subgroups[k].members[bad[0]])))
        faces[(k, i)] = Homomorphism(views[k], views[k - 1], images=views[k - 1].local(img))
    for (k, i), s in S.degens.items():
        img = s.apply(subgroups[k].members)
        bad = np.nonzero(~subgroups[k + 1].mask[img])[0]
        if bad.size:
            raise error(f"s{i} leaves the subgroup at level {k}", witness=(k, i, int(subgroups[k].members[bad[0]])))
        degens[(k, i)] = Homomorphism(views[k], views[k + 1], images=views[k + 1].local(img))
    T = TruncatedSimplicialGroup(views, faces, degens, label)
    T.inclusion = SimplicialHom(T, S, [v.inclusion for v in views], "inclusion")
    return T


def levelwise_kernel(f, label=""):
    kernels = [m.kernel() for m in f.maps]
    for k, ker in enumerate(kernels):
        w = normality_witness(f.source.levels[k], ker)
        if w is not None:
            raise RestrictionEscapesKernel(f"kernel at level {k} is not normal", witness=(k,) + w)
    return restrict(f.source, kernels, label or f"ker({f.label})")


def identity_component(S):
    """Subgroup of level 0 generated by ``d0(y)^-1 d1(y)`` over all of level 1."""
    L0 = S.levels[0]
    ys = S.levels[1].elements()
    rel = L0.mul_many(L0.inv_many(S.face(1, 0).apply(ys)), S.face(1, 1).apply(ys))
    V = Subgroup(L0, np.nonzero(closure_mask(L0, np.unique(rel)))[0])
    w = normality_witness(L0, V)
    if w is not None:
        raise ComponentNotNormal("identity component is not normal", witness=w)
    return V


def pi0(S):
    V = identity_component(S)
    group, proj = quotient(S.levels[0], V, f"pi0({S.label})")
    return ComponentGroup(group, proj, V)


def is_discrete_at_level1(S):
    ys = S.levels[1].elements()
    return bool(np.array_equal(S.face(1, 0).apply(ys), S.face(1, 1).apply(ys)))


# ------------------------------------------------------------------ Moore


def moore_subgroup(S, k):
    """``∩_{i>=1} ker d_i`` at level ``k`` (all of level 0 when k = 0)."""
    L = S.levels[k]
    mask = np.ones(L.order, dtype=bool)
    for i in range(1, k + 1):
        mask &= S.face(k, i).images == S.levels[k - 1].identity
    return Subgroup(L, np.nonzero(mask)[0])


def moore_cycles_boundaries(S, n):
    """``(Z_n, B_n)`` as subgroups of level ``n``: cycles ker ∂ and boundaries im ∂."""
    if n + 1 > S.K:
        raise TruncationTooShallow(f"pi_{n} needs truncation level >= {n + 1}, have {S.K}")
    L = S.levels[n]
    Mn = moore_subgroup(S, n)
    if n == 0:
        Z = Mn
    else:
        Z = Subgroup(L, Mn.members[S.face(n, 0).apply(Mn.members) == S.levels[n - 1].identity])
    B = Subgroup(L, np.unique(S.face(n + 1, 0).apply(moore_subgroup(S, n + 1).members)))
    return Z, B


def moore_quotient(S, n):
    """``(pi_n group, projection from Z_n as a group, Z_n, B_n)``."""
    Z, B = moore_cycles_boundaries(S, n)
    if not B <= Z:
        extra = B.members[~Z.mask[B.members]]
        raise ComponentNotNormal("boundaries are not cycles", witness=(int(extra[0]),))
    Zg = Z.as_group()
    Bz = Subgroup(Zg, Zg.local(B.members))
    group, proj = quotient(Zg, Bz, f"pi{n}({S.label})")
    return group, proj, Z, B


def moore_pi_n(S, n):
    return moore_quotient(S, n)[0]


def moore_pi0_iso(S, comp=None):
    """Explicit isomorphism ``moore pi_0 -> pi0(S).group``, validated.

    Returns the homomorphism; raises if it is not a well-defined bijective
    homomorphism.
    """
    comp = comp or pi0(S)
    group, proj, Z, _ = moore_quotient(S, 0)
    reps = Z.members[group.representatives]
    iso = Homomorphism(group, comp.group, images=comp.projection.apply(reps), label="moore_pi0->pi0")
    # well-defined: every level-0 element lands where its Moore class does
    lhs = comp.projection.images[Z.members]
    rhs = iso.apply(proj.images)
    if not np.array_equal(lhs, rhs):
        bad = int(Z.members[np.nonzero(lhs != rhs)[0][0]])
        raise NotAHomomorphism("moore pi_0 and pi_0 identify different elements", witness=(bad,))
    w = iso.first_violation()
    if w is not None:
        raise NotAHomomorphism("moore pi_0 comparison is not a homomorphism", witness=w)
    if not iso.is_bijective():
        raise NotAHomomorphism("moore pi_0 comparison is not bijective", witness=(group.order, comp.group.order))
    return iso


# ---------------------------------------------------------- induced pi_0 map


def induced_pi0_map(incl):
    """Normal map ``pi0(M) -> pi0(X)`` induced by a levelwise normal inclusion."""
    from xmod.crossed import quotient_normal_map
    from xmod.errors import HypothesisFailed

    M, X = incl.source, incl.target
    X0 = X.levels[0]
    for k, m in enumerate(incl.maps):
        if not m.is_injective():
            raise HypothesisFailed("inclusion_injective", (k,))
        w = m.first_violation()
        if w is not None:
            raise HypothesisFailed("inclusion_homomorphism", (k,) + w)
        img = Subgroup(X.levels[k], m.images)
        w = normality_witness(X.levels[k], img)
        if w is not None:
            raise HypothesisFailed("M_normal_in_X", (k,) + w)
    for (k, i), d in M.faces.items():
        xs = M.levels[k].elements()
        bad = np.nonzero(incl.maps[k - 1].apply(d.apply(xs)) != X.face(k, i).apply(incl.maps[k].apply(xs)))[0]
        if bad.size:
            raise HypothesisFailed("faces_restrict", (k, i, int(bad[0])))
    for (k, i), s in M.degens.items():
        xs = M.levels[k].elements()
        bad = np.nonzero(incl.maps[k + 1].apply(s.apply(xs)) != X.degen(k, i).apply(incl.maps[k].apply(xs)))[0]
        if bad.size:
            raise HypothesisFailed("degeneracies_restrict", (k, i, int(bad[0])))

    VX = identity_component(X)
    VM = Subgroup(X0, incl.maps[0].apply(identity_component(M).members))
    gamma = Subgroup(X0, incl.maps[0].images)
    if not VM <= VX:
        raise HypothesisFailed("V_M_le_V_X", (int(VM.members[~VX.mask[VM.members]][0]),))
    w = normality_witness(X0, VM)
    if w is not None:
        raise HypothesisFailed("V_M_normal_in_X0", w)
    w = commutator_witness(X0, VX, gamma, VM)
    if w is not None:
        raise HypothesisFailed("commutator_V_X_M_le_V_M", w)
    return quotient_normal_map(X0, VM, VX, gamma)
