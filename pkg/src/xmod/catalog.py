"""Built-in crossed modules and the seeded random corpus."""

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from xmod import library
from xmod.crossed import (
    NormalMap,
    identity_crossed_module,
    inclusion_crossed_module,
    quotient_hypothesis_failures,
    quotient_normal_map,
    search_crossed_structures,
    trivial_target_crossed_module,
    validate,
)
from xmod.errors import UnknownEntry
from xmod.groups import (
    GroupAction,
    Homomorphism,
    all_subgroups,
    cyclic_group,
    extend_on_generators,
    homomorphism,
    is_normal,
    subgroup_generated,
    trivial_action,
    trivial_group,
)

CORPUS_SEED = 20161
CORPUS_SIZE = 24


@dataclass(frozen=True)
class Entry:
    name: str
    build: Callable[[], NormalMap]
    positive: bool
    description: str


def _mod2():
    z4, z2 = cyclic_group(4), cyclic_group(2)
    n = homomorphism(z4, z2, [0, 1, 0, 1])
    return NormalMap(z4, z2, n, trivial_action(z2, z4), "mod2")


def _a3_in_s3():
    s3 = library.symmetric3()
    return inclusion_crossed_module(s3, subgroup_generated(s3, [2]), "incl-A3-S3")


def _trivial_source():
    s3 = library.symmetric3()
    one = trivial_group()
    return NormalMap(one, s3, Homomorphism(one, s3, images=[s3.identity]), trivial_action(s3, one), "trivial-source")


def _bad_s3_trivial():
    s3 = library.symmetric3()
    one = trivial_group()
    n = Homomorphism(s3, one, images=np.zeros(6, dtype=np.int64))
    return NormalMap(s3, one, n, trivial_action(one, s3), "bad-S3-trivial")


def _bad_scrambled():
    # A3 ⊴ S3 with the conjugation action replaced by the trivial one
    good = _a3_in_s3()
    return NormalMap(good.N, good.G, good.n, trivial_action(good.G, good.N), "bad-scrambled-action")


def _module_z3_z2():
    z3, z2 = cyclic_group(3), cyclic_group(2)
    table = np.array([[a, (-a) % 3] for a in range(3)])
    n = Homomorphism(z3, z2, images=np.zeros(3, dtype=np.int64))
    return NormalMap(z3, z2, n, GroupAction(z2, z3, table), "module-Z3-Z2")


CATALOG = {
    e.name: e
    for e in [
        Entry("identity-Zn", lambda: identity_crossed_module(cyclic_group(6), "identity-Zn"), True,
              "identity Z6 -> Z6, conjugation (trivial) action"),
        Entry("identity-S3", lambda: identity_crossed_module(library.symmetric3(), "identity-S3"), True,
              "identity S3 -> S3 with conjugation"),
        Entry("incl-A3-S3", _a3_in_s3, True, "inclusion A3 -> S3 with conjugation"),
        Entry("mod2", _mod2, True, "reduction Z4 -> Z2, trivial action"),
        Entry("trivial-target-Z4", lambda: trivial_target_crossed_module(cyclic_group(4), "trivial-target-Z4"), True,
              "Z4 -> 1, trivial action (finite analogue of Z -> 0)"),
        Entry("trivial-source", _trivial_source, True, "1 -> S3"),
        Entry("module-Z3-Z2", _module_z3_z2, True, "zero map Z3 -> Z2, Z2 acting by inversion"),
        Entry("inner-D4", lambda: library.automorphism_crossed_module(library.dihedral(4), "inner-D4"), True,
              "D4 -> Aut(D4), inner automorphisms"),
        Entry("inner-V4", lambda: library.automorphism_crossed_module(library.klein(), "inner-V4"), True,
              "V4 -> Aut(V4) = S3, zero map, evaluation action"),
        Entry("inner-Q8", lambda: library.automorphism_crossed_module(library.quaternion(), "inner-Q8"), True,
              "Q8 -> Aut(Q8) = S4, kernel the centre"),
        Entry("bad-S3-trivial", _bad_s3_trivial, False, "S3 -> 1 with trivial action; Peiffer identity fails"),
        Entry("bad-scrambled-action", _bad_scrambled, False, "A3 -> S3 with the action replaced by the trivial one"),
    ]
}


def get(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownEntry(f"no catalog entry {name!r}", witness=(name,)) from None


def positive_entries():
    return [e.build() for e in CATALOG.values() if e.positive]


def negative_entries():
    return [e.build() for e in CATALOG.values() if not e.positive]


# ----------------------------------------------------------------- random corpus


def _random_homs(rng, N, G, tries=64):
    gens = list(N.generators)
    for _ in range(tries):
        targets = [rng.randrange(G.order) for _ in gens]
        img = extend_on_generators(N, G, gens, targets)
        if img is not None:
            yield Homomorphism(N, G, images=img)


def _fam_inclusion(rng, groups):
    G = rng.choice([g for g in groups if g.order > 1])
    normals = [s for s in all_subgroups(G) if is_normal(G, s)]
    return inclusion_crossed_module(G, rng.choice(normals), f"incl-{len(normals)}-{G.label}")


def _fam_module(rng, groups):
    N = rng.choice([g for g in groups if g.is_abelian() and g.order > 1])
    G = rng.choice([g for g in groups if g.order > 1])
    zero = Homomorphism(N, G, images=np.full(N.order, G.identity))
    acts = search_crossed_structures(zero)
    return NormalMap(N, G, zero, rng.choice(acts), f"module-{N.label}-{G.label}")


def _fam_identity(rng, groups):
    G = rng.choice([g for g in groups if g.order > 1])
    return identity_crossed_module(G, f"identity-{G.label}")


def _fam_trivial_target(rng, groups):
    N = rng.choice([g for g in groups if g.is_abelian() and g.order > 1])
    return trivial_target_crossed_module(N, f"{N.label}->1")


def _fam_searched(rng, groups):
    N = rng.choice([g for g in groups if g.order > 1])
    G = rng.choice([g for g in groups if g.order > 1])
    for n in _random_homs(rng, N, G):
        acts = search_crossed_structures(n)
        if acts:
            return NormalMap(N, G, n, rng.choice(acts), f"searched-{N.label}-{G.label}")
    return None


def _fam_quotient(rng, groups):
    G = rng.choice([g for g in groups if g.order >= 4])
    normals = [s for s in all_subgroups(G) if is_normal(G, s)]
    for _ in range(64):
        K, M, gam = (rng.choice(normals) for _ in range(3))
        if K.order < gam.order and M.order < G.order and not quotient_hypothesis_failures(G, K, M, gam):
            return quotient_normal_map(G, K, M, gam, f"quotient-{G.label}")
    return None


def _fam_inner(rng, groups):
    N = rng.choice([g for g in groups if g.order > 2 and g.label in {"S3", "D4", "V4", "D6", "Dic3", "Z2xZ4"}
                    or g.label in {"Z3", "Z4", "Z5", "Z6", "Z8", "Z10", "Z12"}])
    return library.automorphism_crossed_module(N, f"inner-{N.label}")


FAMILIES = [_fam_inclusion, _fam_module, _fam_identity, _fam_trivial_target,
            _fam_searched, _fam_quotient, _fam_inner]


def random_corpus(seed=CORPUS_SEED, count=CORPUS_SIZE, max_order=12, max_x3=300_000):
    """``count`` validated crossed modules with |N|, |G| <= max_order.

    Families are cycled in order so every kind appears; ``max_x3`` bounds
    ``|G| |N|^4`` to keep level-3 checks desk-scale.
    """
    rng = random.Random(seed)
    groups = library.small_groups(max_order)
    out = []
    i = 0
    while len(out) < count:
        fam = FAMILIES[i % len(FAMILIES)]
        i += 1
        nm = fam(rng, groups)
        if nm is None or nm.N.order > max_order or nm.G.order > max_order:
            continue
        if nm.G.order * nm.N.order ** 4 > max_x3:
            continue
        assert validate(nm).ok, nm
        nm.label = f"rand{len(out):02d}-{nm.label}"
        out.append(nm)
    return out


def corpus():
    """Positive catalog entries followed by the random corpus."""
    return positive_entries() + random_corpus()
