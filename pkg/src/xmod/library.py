"""Small named groups used by the catalog and the test corpus."""

import numpy as np

from xmod.groups import (
    GroupAction,
    Homomorphism,
    TableGroup,
    automorphisms,
    cyclic_group,
    direct_product,
    group_action,
    group_from_permutations,
    semidirect_product,
    trivial_group,
)


def symmetric3():
    return group_from_permutations(3, [(1, 0, 2), (1, 2, 0)], label="S3")


def dihedral(n):
    """Symmetries of an n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return group_from_permutations(n, [rot, ref], label=f"D{n}")


def alternating4():
    return group_from_permutations(4, [(1, 2, 0, 3), (1, 0, 3, 2)], label="A4")


def quaternion():
    # units 1, i, j, k, -1, -i, -j, -k as 0..7
    unit = [[0, 1, 2, 3], [1, 4, 3, 6], [2, 7, 4, 1], [3, 2, 5, 4]]   # sign-free product index
    table = np.empty((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            sx, ux = divmod(x, 4)
            sy, uy = divmod(y, 4)
            p = unit[ux][uy]
            s, u = divmod(p, 4)
            table[x, y] = ((s + sx + sy) % 2) * 4 + u
    return TableGroup(table, 0, "Q8")


def dicyclic3():
    """Z3 ⋊ Z4 with the generator of Z4 inverting Z3; order 12."""
    z3, z4 = cyclic_group(3), cyclic_group(4)
    table = np.array([[(a * (-1) ** g) % 3 for g in range(4)] for a in range(3)])
    return semidirect_product(z4, z3, group_action(z4, z3, table)).materialize("Dic3")


def klein():
    return direct_product(cyclic_group(2), cyclic_group(2), "V4")


def small_groups(max_order=12):
    """Deterministic list of groups of order <= max_order."""
    out = [trivial_group()]
    out += [cyclic_group(n) for n in range(2, max_order + 1)]
    out += [klein(), symmetric3(), dihedral(4), quaternion(), dihedral(5), dihedral(6),
            alternating4(), dicyclic3(),
            direct_product(cyclic_group(2), cyclic_group(4), "Z2xZ4"),
            direct_product(cyclic_group(2), cyclic_group(6), "Z2xZ6"),
            direct_product(cyclic_group(3), cyclic_group(3), "Z3xZ3"),
            direct_product(klein(), cyclic_group(2), "Z2^3")]
    return [g for g in out if g.order <= max_order]


def automorphism_crossed_module(N, label=""):
    """Inner-automorphism map ``N -> Aut(N)`` with Aut(N) acting by evaluation."""
    from xmod.crossed import NormalMap

    auts = [tuple(int(v) for v in a) for a in automorphisms(N)]
    A = group_from_permutations(N.order, auts, label=f"Aut({N.label})")
    index = {p: i for i, p in enumerate(A.perms)}
    conj = N.conj_table
    inner = [index[tuple(int(v) for v in conj[:, b])] for b in range(N.order)]
    n = Homomorphism(N, A, images=inner, label="inner")
    table = np.array([[A.perms[g][a] for g in range(A.order)] for a in range(N.order)], dtype=np.int64)
    return NormalMap(N, A, n, GroupAction(A, N, table), label or f"inner-{N.label}")
