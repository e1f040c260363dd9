"""Crossed modules ("normal maps") over finite groups.

A normal map is a homomorphism ``n: N -> G`` with a right action of G on N
satisfying

* NM1: ``(a^g)n = g^-1 (an) g``
* NM2: ``a^((b)n) = b^-1 a b``  (the Peiffer identity)
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from xmod.errors import HypothesisFailed, NotAbelian, SearchSpaceTooLarge
from xmod.groups import (
    FiniteGroup,
    GroupAction,
    Homomorphism,
    Subgroup,
    automorphisms,
    commutator_witness,
    conjugation_action,
    normality_witness,
    quotient,
    trivial_action,
    trivial_group,
    whole,
)
from xmod.report import AxiomReport, Violation

SEARCH_CAP = 200_000

QUOTIENT_HYPOTHESES = (
    "K_normal",
    "M_normal",
    "Gamma_normal",
    "K_le_M",
    "K_le_Gamma",
    "commutator_Gamma_M_le_K",
)


@dataclass
class NormalMap:
    N: FiniteGroup
    G: FiniteGroup
    n: Homomorphism
    ell: GroupAction
    label: str = ""

    @property
    def nmap(self):
        return self.n.images

    def __repr__(self):
        return f"<NormalMap {self.label} {self.N!r} -> {self.G!r}>"


@dataclass
class QuotientNormalMap(NormalMap):
    """Output of :func:`quotient_normal_map`; keeps the two projections.

    ``source_projection`` goes from Γ (as a group) onto Γ/K and
    ``target_projection`` from the ambient group onto G/M.
    """

    gamma: Subgroup = None
    source_projection: Homomorphism = None
    target_projection: Homomorphism = None


@dataclass
class NormalMapIso:
    phiN: Homomorphism
    phiG: Homomorphism


def _violations(tag, bad_pairs, limit=None):
    out = [Violation(tag, (int(a), int(b))) for a, b in bad_pairs]
    return out[:limit] if limit else out


def check_nm1(nm):
    """All ``(a, g)`` with ``(a^g)n != (an)^g``."""
    A = nm.ell.table
    nmap = nm.nmap
    lhs = nmap[A]
    rhs = nm.G.conj_table[nmap]  # [a, g] -> (an)^g
    return _report("NM1", np.argwhere(lhs != rhs))


def check_nm2(nm):
    """All ``(a, b)`` with ``a^((b)n) != a^b``."""
    A = nm.ell.table
    lhs = A[:, nm.nmap]  # [a, b] -> a^(bn)
    rhs = nm.N.conj_table
    return _report("NM2", np.argwhere(lhs != rhs))


def _report(tag, bad):
    rep = AxiomReport()
    rep.record(tag, _violations(tag, bad))
    return rep


def validate(nm):
    """Crossed-module check: structure maps first, then NM1 and NM2."""
    rep = AxiomReport()
    w = nm.n.first_violation()
    rep.record("homomorphism", [Violation("homomorphism", w)] if w else [])
    v = nm.ell.first_violation()
    rep.record("action", [Violation("action", v[1], v[0])] if v else [])
    rep.merge(check_nm1(nm))
    rep.merge(check_nm2(nm))
    return rep


# ------------------------------------------------------- quotient construction


def quotient_hypothesis_failures(G, K, M, gamma):
    """``[(name, witness), ...]`` for every violated hypothesis, in a fixed order."""
    fails = []
    for name, sub in (("K_normal", K), ("M_normal", M), ("Gamma_normal", gamma)):
        w = normality_witness(G, sub)
        if w is not None:
            fails.append((name, w))
    for name, a, b in (("K_le_M", K, M), ("K_le_Gamma", K, gamma)):
        if not a <= b:
            fails.append((name, (int(a.members[~b.mask[a.members]][0]),)))
    w = commutator_witness(G, gamma, M, K)
    if w is not None:
        fails.append(("commutator_Gamma_M_le_K", w))
    return fails


def quotient_normal_map(G, K, M, gamma, label=""):
    """The normal map ``Γ/K -> G/M``, ``Kγ -> Mγ``, with ``(Kγ)^(Mg) = K γ^g``."""
    fails = quotient_hypothesis_failures(G, K, M, gamma)
    if fails:
        which, w = fails[0]
        raise HypothesisFailed(which, w)
    Gg = gamma.as_group()
    K_in_gamma = Subgroup(Gg, Gg.local(K.members))
    src, src_proj = quotient(Gg, K_in_gamma, "Gamma/K")
    tgt, tgt_proj = quotient(G, M, "G/M")
    src_reps = gamma.members[src.representatives]          # ambient indices
    n_img = tgt_proj.apply(src_reps)
    n = Homomorphism(src, tgt, images=n_img, label="n")

    # action on representatives, then brute-force well-definedness
    a = np.repeat(src_reps, tgt.order)
    g = np.tile(tgt.representatives, src.order)
    table = src_proj.apply(Gg.local(G.conj_many(a, g))).reshape(src.order, tgt.order)
    every_a = np.repeat(gamma.members, G.order)
    every_g = np.tile(G.elements(), gamma.order)
    got = src_proj.apply(Gg.local(G.conj_many(every_a, every_g)))
    want = table[src_proj.apply(Gg.local(every_a)), tgt_proj.apply(every_g)]
    bad = np.nonzero(got != want)[0]
    if bad.size:
        raise HypothesisFailed("action_well_defined", (int(every_a[bad[0]]), int(every_g[bad[0]])))
    return QuotientNormalMap(
        src, tgt, n, GroupAction(tgt, src, table), label or "quotient",
        gamma=gamma, source_projection=src_proj, target_projection=tgt_proj,
    )


def inclusion_crossed_module(G, sub, label=""):
    ell = conjugation_action(G, sub)
    N = ell.space
    return NormalMap(N, G, N.inclusion, ell, label or f"{N.order}->{G.label}")


def identity_crossed_module(G, label=""):
    return inclusion_crossed_module(G, whole(G), label or f"id({G.label})")


def trivial_target_crossed_module(N, label=""):
    w = N.noncommuting_pair()
    if w is not None:
        raise NotAbelian("source group is not abelian", witness=w)
    one = trivial_group()
    n = Homomorphism(N, one, images=np.zeros(N.order, dtype=np.int64), label="zero")
    return NormalMap(N, one, n, trivial_action(one, N), label or f"{N.label}->1")


def normal_map_iso_check(nm, other, iso):
    """Exhaustive check that ``iso`` is an isomorphism of normal maps ``nm -> other``."""
    rep = AxiomReport()
    for tag, phi, dom, cod in (("iso_N", iso.phiN, nm.N, other.N), ("iso_G", iso.phiG, nm.G, other.G)):
        found = []
        if phi.domain.order != dom.order or phi.codomain.order != cod.order:
            found.append(Violation(tag, (dom.order, cod.order), "wrong shape"))
        else:
            w = phi.first_violation()
            if w is not None:
                found.append(Violation(tag, w, "not a homomorphism"))
            if not phi.is_bijective():
                found.append(Violation(tag, (), "not bijective"))
        rep.record(tag, found)
    if not rep.ok:
        return rep
    a = nm.N.elements()
    lhs = iso.phiG.apply(nm.n.images)
    rhs = other.n.apply(iso.phiN.images)
    rep.record("square", [Violation("square", (int(x),)) for x in a[lhs != rhs]])
    # (a^g)φN = (aφN)^(gφG)
    lhs = iso.phiN.images[nm.ell.table]
    rhs = other.ell.table[iso.phiN.images[:, None], iso.phiG.images[None, :]]
    rep.record("equivariance", _violations("equivariance", np.argwhere(lhs != rhs)))
    return rep


def search_crossed_structures(n, cap=SEARCH_CAP):
    """Every action of ``G`` on ``N`` making ``n: N -> G`` a crossed module.

    Assign an automorphism to each generator of G (pruned by NM1 on that
    generator), extend to an action along the Cayley graph of G, then keep the
    assignments that pass the full validation. Sorted by action table.
    """
    N, G = n.domain, n.codomain
    auts = automorphisms(N)
    gens = list(G.generators)
    if len(auts) ** len(gens) > cap:
        raise SearchSpaceTooLarge(f"{len(auts)}^{len(gens)} assignments exceed cap {cap}")
    nmap = n.images
    conj = G.conj_table
    per_gen = []
    for s in gens:
        per_gen.append([al for al in auts if np.array_equal(nmap[al], conj[nmap, s])])
    results = []
    for choice in product(*per_gen):
        table = _extend_action(N, G, gens, choice)
        if table is None:
            continue
        nm = NormalMap(N, G, n, GroupAction(G, N, table))
        if validate(nm).ok:
            results.append(nm.ell)
    results.sort(key=lambda act: tuple(act.table.ravel()))
    return results


def _extend_action(N, G, gens, autos):
    table = np.full((N.order, G.order), -1, dtype=np.int64)
    table[:, G.identity] = np.arange(N.order)
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, al in zip(gens, autos):
                y = G.mul(x, s)
                col = al[table[:, x]]
                if table[0, y] < 0:
                    table[:, y] = col
                    nxt.append(y)
                elif not np.array_equal(table[:, y], col):
                    return None
        frontier = nxt
    return table
