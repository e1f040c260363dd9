import numpy as np
import pytest

import oracles
from conftest import tab
from xmod import catalog, library
from xmod.bar import bar_gn, bar_gn_level, bar_nn, bar_nn_level, natural_map
from xmod.groups import closure_mask, cyclic_group
from xmod.simplicial import check_simplicial_group, moore_pi_n, pi0

SMALL = ["mod2", "incl-A3-S3", "identity-S3", "module-Z3-Z2", "trivial-target-Z4", "trivial-source",
         "identity-Zn"]


def brute_associative(T):
    T = np.asarray(T)
    n = T.shape[0]
    left = T[T]                                       # [x, y, z] -> (xy)z
    right = T[np.arange(n)[:, None, None], T[None, :, :]]
    return bool(np.array_equal(left, right))


def test_bar_z4_level1_product():
    L = bar_nn_level(cyclic_group(4), 1)
    assert L.decode(L.mul(L.encode((1, 2)), L.encode((3, 3)))) == (0, 1)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_bar_identity(k):
    L = bar_nn_level(library.symmetric3(), k)
    assert L.decode(L.identity) == (0,) * (k + 1)
    xs = L.elements()
    assert np.array_equal(L.mul_many(xs, L.identity), xs)
    assert np.array_equal(L.mul_many(xs, L.inv_many(xs)), np.full(L.order, L.identity))


def test_bar_s3_level1_all_pairs(s3):
    L = bar_nn_level(s3, 1)
    T = tab(s3)
    inv = oracles.inverse_of(T, 0)
    for x in range(36):
        a0, a1 = L.decode(x)
        for y in range(36):
            b0, b1 = L.decode(y)
            want = (T[a0][b0], T[T[T[inv[b0]][a1]][b0]][b1])
            assert L.decode(L.mul(x, y)) == want


def test_bar_gn_level0_is_G(a3s3):
    L = bar_gn_level(a3s3, 0)
    assert np.array_equal(L.table, a3s3.G.table)


def test_bar_gn_mod2_product(mod2):
    L = bar_gn_level(mod2, 1)
    assert L.decode(L.mul(L.encode((1, 3)), L.encode((1, 2)))) == (0, 1)


@pytest.mark.parametrize("name", SMALL)
def test_bar_gn_level2_associative(name):
    nm = catalog.get(name).build()
    assert nm.N.order <= 6 and nm.G.order <= 6
    T = bar_gn_level(nm, 2).table
    assert brute_associative(T)
    assert oracles.identity_of(T.tolist()) is not None


@pytest.mark.parametrize("name", SMALL + ["inner-D4", "inner-Q8", "inner-V4"])
def test_bar_suites_pass(name):
    nm = catalog.get(name).build()
    assert check_simplicial_group(bar_gn(nm, 3)).ok
    assert check_simplicial_group(bar_nn(nm.N, 3)).ok


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "S3", "V4", "Q8", "D4"])
def test_bar_nn_contractible_shadow(name):
    N = {g.label: g for g in library.small_groups(8)}[name]
    B = bar_nn(N, 3)
    assert pi0(B).group.order == 1
    assert moore_pi_n(B, 1).order == 1


@pytest.mark.parametrize("name", SMALL + ["inner-D4"])
def test_natural_map_is_a_homomorphism(name):
    nm = catalog.get(name).build()
    for k in range(4):
        f = natural_map(nm, bar_gn_level(nm, k))
        assert f.first_violation() is None and f.is_injective()


@pytest.mark.parametrize("name", ["mod2", "inner-D4", "incl-A3-S3"])
def test_generators_generate(name):
    nm = catalog.get(name).build()
    for k in range(3):
        L = bar_gn_level(nm, k)
        assert closure_mask(L, list(L.generators)).all()


def test_bar_gn_pi0_and_pi1(corpus):
    # pi0 Bar(G, N) = G / im n and pi1 Bar(G, N) = ker n
    for nm in corpus[:20]:
        if nm.G.order * nm.N.order ** 3 > 20000:
            continue
        B = bar_gn(nm, 2)
        assert pi0(B).group.order * len(np.unique(nm.n.images)) == nm.G.order, nm.label
        assert moore_pi_n(B, 1).order == nm.n.kernel().order, nm.label


def test_encode_decode_roundtrip(mod2):
    L = bar_gn_level(mod2, 3)
    assert [L.encode(L.decode(x)) for x in range(L.order)] == list(range(L.order))


@pytest.mark.parametrize("name", ["S3", "Q8", "Z4"])
def test_bar_nn_faces_match_formula(name):
    N = {g.label: g for g in library.small_groups(8)}[name]
    NT = tab(N)
    B = bar_nn(N, 2)
    for (k, i), d in B.faces.items():
        lo, hi = B.levels[k - 1], B.levels[k]
        for x in range(hi.order):
            assert lo.decode(d(x)) == oracles.bar_nn_face(NT, hi.decode(x), i)
