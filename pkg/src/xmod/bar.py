"""Bar(N, N) and Bar(G, N) as truncated simplicial groups.

Both are instances of one tuple law. A level-m element is ``(h, a_1, ..., a_m)``
with ``h`` in a head group H and ``a_j`` in N, and

    (h, a_1, ..., a_m)(h', b_1, ..., b_m) = (hh', a_1^t1 b_1, ..., a_m^tm b_m)

where ``t_1 = h'`` and ``t_{j+1} = t_j (b_j)phi``. For Bar(N, N) the head is
N itself, ``phi`` is the identity and N acts by conjugation; for Bar(G, N) the
head is G, ``phi`` is the crossed-module map and G acts through ``ell``.
"""

from functools import cached_property

import numpy as np

from xmod import kernels
from xmod.groups import FiniteGroup, Homomorphism
from xmod.simplicial import TruncatedSimplicialGroup


class BarLevel(FiniteGroup):
    def __init__(self, head, tail, act, phi, m, label=""):
        self.head = head
        self.tail = tail
        self.act = np.ascontiguousarray(act, dtype=np.int64)       # [a, h] -> a^h
        self.phi = np.ascontiguousarray(phi, dtype=np.int64)
        self.m = m
        self.hmul = np.ascontiguousarray(head.table, dtype=np.int64)
        self.nmul = np.ascontiguousarray(tail.table, dtype=np.int64)
        self.order = head.order * tail.order ** m
        self.identity = self.encode((head.identity,) + (tail.identity,) * m)
        self.label = label

    def encode(self, digits):
        idx = 0
        for a in reversed(digits[1:]):
            idx = idx * self.tail.order + int(a)
        return idx * self.head.order + int(digits[0])

    def decode(self, x):
        x = int(x)
        digits = [x % self.head.order]
        x //= self.head.order
        for _ in range(self.m):
            digits.append(x % self.tail.order)
            x //= self.tail.order
        return tuple(digits)

    def describe(self, x):
        return self.decode(x)

    def mul_many(self, xs, ys):
        return kernels.bar_mul(xs, ys, self.hmul, self.nmul, self.act, self.phi,
                               self.head.order, self.tail.order, self.m)

    def inv_many(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        H, N = self.head, self.tail
        hq, q = H.order, N.order
        a0 = xs % hq
        rest = xs // hq
        h_inv = H.inv_many(a0)
        # y = (h^-1, b_1..b_m) with a_j^{t_j} b_j = 1, t_1 = h^-1, t_{j+1} = t_j (b_j)phi
        out = h_inv.copy()
        scale = hq
        t = h_inv
        for _ in range(self.m):
            a = rest % q
            rest = rest // q
            b = N.inv_many(self.act[a, t])
            out = out + b * scale
            scale *= q
            t = H.mul_many(t, self.phi[b])
        return out

    @cached_property
    def generators(self):
        gens = [self.encode((s,) + (self.tail.identity,) * self.m) for s in self.head.generators]
        for j in range(self.m):
            for s in self.tail.generators:
                digits = [self.head.identity] + [self.tail.identity] * self.m
                digits[j + 1] = s
                gens.append(self.encode(digits))
        return tuple(gens)

    def face(self, i):
        return lambda xs: kernels.bar_face(xs, i, self.hmul, self.nmul, self.phi,
                                           self.head.order, self.tail.order, self.m)

    def degen(self, i):
        return lambda xs: kernels.bar_degen(xs, i, self.tail.identity,
                                            self.head.order, self.tail.order, self.m)


def _assemble(levels, label):
    faces, degens = {}, {}
    for k, L in enumerate(levels):
        if k >= 1:
            for i in range(k + 1):
                faces[(k, i)] = Homomorphism(L, levels[k - 1], fn=L.face(i), label=f"d{i}")
        if k < len(levels) - 1:
            for i in range(k + 1):
                degens[(k, i)] = Homomorphism(L, levels[k + 1], fn=L.degen(i), label=f"s{i}")
    return TruncatedSimplicialGroup(levels, faces, degens, label)


def bar_nn_level(N, k):
    """Bar(N, N)_k: (k+1)-tuples of N, ``(a_0..a_k)(b_0..b_k) = (a_0 b_0, a_1^{b_0} b_1, ...)``."""
    N = N.materialize()
    return BarLevel(N, N, N.conj_table, np.arange(N.order), k, f"Bar({N.label},{N.label})_{k}")


def bar_nn(N, K=3):
    return _assemble([bar_nn_level(N, k) for k in range(K + 1)], f"Bar({N.label},{N.label})")


def bar_gn_level(nm, k):
    G, N = nm.G.materialize(), nm.N.materialize()
    return BarLevel(G, N, nm.ell.table, nm.n.images, k, f"Bar({G.label},{N.label})_{k}")


def bar_gn(nm, K=3):
    """Bar(G, N) for a crossed module; level k is G × N^k."""
    return _assemble([bar_gn_level(nm, k) for k in range(K + 1)], f"Bar({nm.G.label},{nm.N.label})")


def natural_map(nm, level):
    """``g -> (g, 1, ..., 1)`` from G into ``level`` of Bar(G, N)."""
    ident = level.tail.identity
    return Homomorphism(nm.G, level, images=[level.encode((g,) + (ident,) * level.m) for g in range(nm.G.order)])
