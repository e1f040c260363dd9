"""X = G ⋉ Bar(N, N), the map eta: X -> Bar(G, N), its kernel M, and the
checks that pi0(M) -> pi0(X) recovers the crossed module we started from."""

from dataclasses import dataclass, field

import numpy as np

from xmod import kernels
from xmod.bar import _assemble, bar_gn, bar_nn_level
from xmod.crossed import NormalMapIso, normal_map_iso_check, validate
from xmod.errors import (
    ClosedFormMismatch,
    HomCheckFailed,
    NotAutomorphism,
    RoundTripFailed,
    TruncationTooShallow,
    XmodError,
)
from xmod.groups import GroupAction, Homomorphism, SemidirectGroup, Subgroup, normality_witness
from xmod.report import AxiomReport, Violation
from xmod.simplicial import (
    ComponentGroup,
    SimplicialHom,
    TruncatedSimplicialGroup,
    check_simplicial_hom,
    identity_component,
    induced_pi0_map,
    is_discrete_at_level1,
    levelwise_kernel,
    moore_pi_n,
    pi0,
)

DEFAULT_LEVELS = 3

CHECK_NAMES = (
    "a_M_normal_in_X",
    "b_M_discrete",
    "c_identity_component_X",
    "d_pi0_X_iso_G",
    "e_pi0_M_iso_N",
    "f_square_commutes",
    "g_homotopically_discrete",
)


class XLevel(SemidirectGroup):
    """X_k = G ⋉ Bar(N, N)_k with G acting on every coordinate through ell."""

    def __init__(self, nm, k):
        self.nm = nm
        self.k = k
        self._act = np.ascontiguousarray(nm.ell.table, dtype=np.int64)
        inner = bar_nn_level(nm.N, k)
        q = nm.N.order
        super().__init__(
            nm.G.materialize(), inner,
            lambda a, g: kernels.coord_act(a, g, self._act, q, k + 1),
            f"X_{k}",
        )

    def decode(self, x):
        g, a = self.split(int(x))
        return (int(g), self.inner.decode(int(a)))

    def encode_tuple(self, g, coords):
        return self.encode(g, self.inner.encode(coords))

    def describe(self, x):
        return self.decode(x)

    def face(self, i):
        G = self.top.order
        f = self.inner.face(i)
        return lambda xs: np.asarray(xs) % G + G * f(np.asarray(xs) // G)

    def degen(self, i):
        G = self.top.order
        s = self.inner.degen(i)
        return lambda xs: np.asarray(xs) % G + G * s(np.asarray(xs) // G)


@dataclass
class RealizationResult:
    nm: object
    K: int
    X: TruncatedSimplicialGroup
    barGN: TruncatedSimplicialGroup
    eta: SimplicialHom
    M: TruncatedSimplicialGroup
    pi0X: ComponentGroup
    pi0M: ComponentGroup
    isoN: Homomorphism
    isoG: Homomorphism
    report: AxiomReport = field(default_factory=AxiomReport)

    def cardinalities(self):
        return {
            "pi0_X": self.pi0X.group.order if self.pi0X else None,
            "pi0_M": self.pi0M.group.order if self.pi0M else None,
            "X_k": [L.order for L in self.X.levels],
            "M_k": [L.order for L in self.M.levels] if self.M else None,
            "BarGN_k": [L.order for L in self.barGN.levels],
        }


def build_ell_k(nm, k, check=True):
    """G acting on Bar(N, N)_k coordinatewise: ``(a_0..a_k)^g = (a_0^g, ..., a_k^g)``."""
    L = bar_nn_level(nm.N, k)
    G = nm.G
    elems = L.elements()
    table = np.empty((L.order, G.order), dtype=np.int64)
    act = np.ascontiguousarray(nm.ell.table, dtype=np.int64)
    for g in range(G.order):
        table[:, g] = kernels.coord_act(elems, np.full(L.order, g), act, nm.N.order, k + 1)
    ell_k = GroupAction(G, L, table)
    if check:
        v = ell_k.first_violation()
        if v is not None:
            raise NotAutomorphism(f"ell_{k} fails: {v[0]}", witness=v[1])
    return ell_k


def build_X(nm, K=DEFAULT_LEVELS):
    levels = [XLevel(nm, k) for k in range(K + 1)]
    return _assemble(levels, f"X({nm.label})")


def _eta_fn(nm, k):
    G, q = nm.G, nm.N.order
    gq = G.order
    nmap = nm.n.images

    def eta(xs):
        xs = np.asarray(xs, dtype=np.int64)
        g = xs % gq
        inner = xs // gq
        a0 = inner % q
        return G.mul_many(g, nmap[a0]) + gq * (inner // q)

    return eta


def build_eta(nm, K=DEFAULT_LEVELS, X=None, B=None, check=True):
    """``eta(g, (a_0, ..., a_k)) = (g (a_0)n, a_1, ..., a_k)``."""
    X = X or build_X(nm, K)
    B = B or bar_gn(nm, K)
    maps = [Homomorphism(X.levels[k], B.levels[k], fn=_eta_fn(nm, k), label=f"eta_{k}") for k in range(K + 1)]
    eta = SimplicialHom(X, B, maps, "eta")
    if check:
        rep = check_simplicial_hom(eta)
        if not rep.ok:
            v = rep.violations[0]
            raise HomCheckFailed(f"eta fails {v.tag}", witness=v.witness)
    return eta


def kernel_closed_form(nm, k, level):
    """Sorted encodings of ``{(an, (a^-1, 1, ..., 1)) : a in N}`` at level ``k``."""
    N = nm.N
    one = N.identity
    return np.sort(np.array(
        [level.encode_tuple(nm.n(a), (N.inv(a),) + (one,) * k) for a in range(N.order)],
        dtype=np.int64,
    ))


def kernel_M(nm, K=DEFAULT_LEVELS, eta=None):
    eta = eta or build_eta(nm, K)
    M = levelwise_kernel(eta, f"M({nm.label})")
    for k in range(K + 1):
        want = kernel_closed_form(nm, k, eta.source.levels[k])
        got = M.levels[k].members
        if not np.array_equal(np.unique(want), got):
            diff = np.setxor1d(want, got)
            raise ClosedFormMismatch(f"ker eta differs from closed form at level {k}", witness=(k, int(diff[0])))
    return M


def _run(report, name, fn):
    """Run one named check; any exception becomes a violation with its witness."""
    try:
        found = fn()
    except XmodError as exc:
        found = [Violation(name, exc.witness or (), str(exc))]
    report.record(name, found or [])


def realize(nm, K=DEFAULT_LEVELS, check_eta=True, check_input=True):
    """Build X, eta, M and run checks (a)-(g); the report collects every outcome."""
    if K < 1:
        raise TruncationTooShallow("need at least one level above 0")
    report = AxiomReport()
    if check_input:
        pre = validate(nm)
        report.record("input_crossed_module", pre.violations)
    X = build_X(nm, K)
    B = bar_gn(nm, K)
    eta = None
    try:
        eta = build_eta(nm, K, X, B, check=check_eta)
        report.record("eta_simplicial_hom", [])
    except HomCheckFailed as exc:
        report.add("eta_simplicial_hom", exc.witness, str(exc))
        eta = build_eta(nm, K, X, B, check=False)
    M = None
    try:
        M = kernel_M(nm, K, eta)
        report.record("M_closed_form", [])
    except XmodError as exc:
        report.add("M_closed_form", exc.witness or (), str(exc))

    res = RealizationResult(nm, K, X, B, eta, M, None, None, None, None, report)
    G, N = nm.G, nm.N
    X0 = X.levels[0]

    def a_normal():
        out = []
        for k in range(K + 1):
            w = normality_witness(X.levels[k], Subgroup(X.levels[k], M.levels[k].members))
            if w is not None:
                out.append(Violation("a_M_normal_in_X", (k,) + w))
        return out

    def b_discrete():
        return [] if is_discrete_at_level1(M) else [Violation("b_M_discrete", (1,))]

    def c_component():
        V = identity_component(X)
        want = np.sort(np.array([X0.encode(G.identity, a) for a in range(N.order)]))
        if np.array_equal(V.members, want):
            return []
        return [Violation("c_identity_component_X", (int(np.setxor1d(V.members, want)[0]),))]

    def d_pi0X():
        res.pi0X = pi0(X)
        Q = res.pi0X.group
        gcoord = X0.elements() % G.order
        reps = Q.representatives
        res.isoG = Homomorphism(Q, G, images=gcoord[reps], label="isoG")
        out = []
        # well defined: every element's G-coordinate agrees with its component's image
        bad = np.nonzero(res.isoG.apply(res.pi0X.projection.images) != gcoord)[0]
        if bad.size:
            out.append(Violation("d_pi0_X_iso_G", (int(bad[0]),), "not well defined"))
        w = res.isoG.first_violation()
        if w is not None:
            out.append(Violation("d_pi0_X_iso_G", w, "not a homomorphism"))
        if not res.isoG.is_bijective():
            out.append(Violation("d_pi0_X_iso_G", (Q.order, G.order), "not bijective"))
        return out

    def e_pi0M():
        res.pi0M = pi0(M)
        Q = res.pi0M.group
        out = []
        if not res.pi0M.component.is_trivial():
            out.append(Violation("e_pi0_M_iso_N", (res.pi0M.component.order,), "pi0(M) != M_0"))
        M0 = M.levels[0]
        ncoord = M0.members[Q.representatives] // G.order       # the a^-1 coordinate
        res.isoN = Homomorphism(Q, N, images=N.inv_many(ncoord), label="isoN")
        w = res.isoN.first_violation()
        if w is not None:
            out.append(Violation("e_pi0_M_iso_N", w, "not a homomorphism"))
        if not res.isoN.is_bijective():
            out.append(Violation("e_pi0_M_iso_N", (Q.order, N.order), "not bijective"))
        return out

    def f_square():
        Q = res.pi0M.group
        reps = M.levels[0].members[Q.representatives]           # in X_0
        nbar = res.pi0X.projection.apply(reps)
        lhs = nm.n.apply(res.isoN.images)
        rhs = res.isoG.apply(nbar)
        return [Violation("f_square_commutes", (int(p),)) for p in np.nonzero(lhs != rhs)[0]]

    def g_discrete():
        out = []
        for name, S in (("X", X), ("M", M)):
            order = moore_pi_n(S, 1).order
            if order != 1:
                out.append(Violation("g_homotopically_discrete", (order,), f"pi_1({name}) nontrivial"))
        return out

    if M is None:
        for name in CHECK_NAMES:
            report.add(name, (), "kernel unavailable")
        return res
    _run(report, "a_M_normal_in_X", a_normal)
    _run(report, "b_M_discrete", b_discrete)
    _run(report, "c_identity_component_X", c_component)
    _run(report, "d_pi0_X_iso_G", d_pi0X)
    _run(report, "e_pi0_M_iso_N", e_pi0M)
    if res.isoN is not None and res.isoG is not None:
        _run(report, "f_square_commutes", f_square)
    else:
        report.add("f_square_commutes", (), "isomorphisms unavailable")
    if K >= 2:
        _run(report, "g_homotopically_discrete", g_discrete)
    else:
        report.skip("g_homotopically_discrete", "pi_1 needs K >= 2")
    return res


def roundtrip_isomorphism(res, induced):
    """Compose the realization isomorphisms with the induced map's projections."""
    M0 = res.M.levels[0]
    src, tgt = induced.N, induced.G
    gamma_reps = induced.gamma.members[src.representatives]
    phiN_img = res.isoN.apply(res.pi0M.projection.apply(M0.local(gamma_reps)))
    phiG_img = res.isoG.apply(res.pi0X.projection.apply(tgt.representatives))
    return NormalMapIso(
        Homomorphism(src, res.nm.N, images=phiN_img, label="phiN"),
        Homomorphism(tgt, res.nm.G, images=phiG_img, label="phiG"),
    )


def verify_roundtrip(nm, K=DEFAULT_LEVELS, result=None, strict=False):
    """pi0 of ``M ⊆ X`` fed back through the quotient construction must be ``nm``."""
    rep = AxiomReport()
    try:
        res = result or realize(nm, K)
        if res.M is None or res.isoN is None or res.isoG is None:
            raise RoundTripFailed("realization incomplete", witness=())
        induced = induced_pi0_map(res.M.inclusion)
        rep.merge(validate(induced))
        iso = roundtrip_isomorphism(res, induced)
        sub = normal_map_iso_check(induced, nm, iso)
        rep.record("roundtrip", sub.violations)
    except XmodError as exc:
        which = getattr(exc, "which", type(exc).__name__)
        rep.add("roundtrip", exc.witness or (), f"{which}: {exc}")
    if strict and not rep.ok:
        v = rep.violations[0]
        raise RoundTripFailed(f"round trip fails: {v.tag} {v.detail}", witness=v.witness)
    return rep
