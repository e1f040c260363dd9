"""Finite groups on dense indices, homomorphisms, subgroups, quotients and actions.

Conventions: elements of a group of order ``n`` are the integers ``0..n-1``.
Maps and actions are applied on the right and compose left to right, so
``a^(gh) = (a^g)^h`` and conjugation is ``a^g = g^-1 a g``.

Groups come in two flavours. :class:`TableGroup` stores a full Cayley table
and is used for everything small. Larger groups (the levels of the simplicial
groups) only know how to multiply arrays of elements; every check in this
package is written against the vectorised ``mul_many``/``inv_many`` pair so
that both flavours work.
"""

import os
from collections import deque
from functools import cached_property
from itertools import product

import numpy as np

from xmod import kernels
from xmod.errors import (
    ClosureTooLarge,
    NoIdentity,
    NoInverse,
    NotABijection,
    NotAHomomorphism,
    NotAnAction,
    NotAssociative,
    NotNormal,
)

DEFAULT_MAX_ORDER = int(os.environ.get("XMOD_MAX_ORDER", "10080"))
TABLE_LIMIT = 4096


def _arr(x):
    return np.asarray(x, dtype=np.int64)


class FiniteGroup:
    """Abstract finite group. Subclasses implement ``mul_many`` and ``inv_many``."""

    order: int
    identity: int
    label: str = ""

    def mul_many(self, xs, ys):
        raise NotImplementedError

    def inv_many(self, xs):
        raise NotImplementedError

    def mul(self, x, y):
        return int(self.mul_many(_arr([x]), _arr([y]))[0])

    def inv(self, x):
        return int(self.inv_many(_arr([x]))[0])

    def conj_many(self, xs, gs):
        """``g^-1 x g`` elementwise."""
        xs, gs = np.broadcast_arrays(_arr(xs), _arr(gs))
        return self.mul_many(self.mul_many(self.inv_many(gs), xs), gs)

    def conj(self, x, g):
        return int(self.conj_many(_arr([x]), _arr([g]))[0])

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def describe(self, x):
        """Human-readable form of element ``x`` (structured groups return tuples)."""
        return int(x)

    @cached_property
    def generators(self):
        """A generating set, found greedily in index order."""
        gens = []
        mask = np.zeros(self.order, dtype=bool)
        mask[self.identity] = True
        for x in range(self.order):
            if not mask[x]:
                gens.append(x)
                mask = closure_mask(self, gens)
        return tuple(gens)

    @cached_property
    def table(self):
        if self.order > TABLE_LIMIT:
            raise ClosureTooLarge(f"refusing to tabulate a group of order {self.order}")
        e = self.elements()
        xs = np.repeat(e, self.order)
        ys = np.tile(e, self.order)
        return self.mul_many(xs, ys).reshape(self.order, self.order)

    @cached_property
    def conj_table(self):
        """``conj_table[x, g] = g^-1 x g``."""
        e = self.elements()
        xs = np.repeat(e, self.order)
        gs = np.tile(e, self.order)
        return self.conj_many(xs, gs).reshape(self.order, self.order)

    def materialize(self, label=None):
        return TableGroup(self.table, self.identity, label or self.label)

    def is_abelian(self):
        return self.noncommuting_pair() is None

    def noncommuting_pair(self):
        """Lexicographically first ``(x, y)`` with ``xy != yx``, or None."""
        if self.order <= TABLE_LIMIT:
            bad = np.argwhere(self.table != self.table.T)
            return tuple(int(v) for v in bad[0]) if bad.size else None
        for s in self.generators:
            for t in self.generators:
                if self.mul(s, t) != self.mul(t, s):
                    return (s, t)
        return None

    def element_order(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def __len__(self):
        return self.order

    def __repr__(self):
        name = self.label or type(self).__name__
        return f"<{name} order={self.order}>"


class TableGroup(FiniteGroup):
    """A group given by its Cayley table. No validation; see :func:`group_from_table`."""

    def __init__(self, table, identity=0, label="", inverses=None):
        self._table = _arr(table)
        self._table.setflags(write=False)
        self.order = self._table.shape[0]
        self.identity = int(identity)
        self.label = label
        if inverses is None:
            rows, cols = np.nonzero(self._table == self.identity)
            inverses = np.empty(self.order, dtype=np.int64)
            inverses[rows] = cols
        self._inv = _arr(inverses)

    @property
    def table(self):
        return self._table

    def mul_many(self, xs, ys):
        return self._table[_arr(xs), _arr(ys)]

    def inv_many(self, xs):
        return self._inv[_arr(xs)]

    def materialize(self, label=None):
        return self


class PermutationGroup(TableGroup):
    """Table group that remembers the permutation behind each element."""

    def __init__(self, table, perms, label=""):
        super().__init__(table, 0, label)
        self.perms = tuple(perms)
        self.degree = len(self.perms[0]) if self.perms else 0

    def describe(self, x):
        return self.perms[x]


class SubgroupView(FiniteGroup):
    """A subgroup re-indexed as a group in its own right.

    Element ``j`` is ``members[j]`` of the parent; ``members`` is sorted.
    """

    def __init__(self, parent, members, label=""):
        self.parent = parent
        self.members = np.sort(_arr(members))
        self.order = len(self.members)
        self.identity = int(np.searchsorted(self.members, parent.identity))
        self.label = label

    def local(self, parent_xs):
        return np.searchsorted(self.members, _arr(parent_xs))

    def mul_many(self, xs, ys):
        return self.local(self.parent.mul_many(self.members[_arr(xs)], self.members[_arr(ys)]))

    def inv_many(self, xs):
        return self.local(self.parent.inv_many(self.members[_arr(xs)]))

    def describe(self, x):
        return self.parent.describe(int(self.members[x]))

    @cached_property
    def inclusion(self):
        return Homomorphism(self, self.parent, images=self.members.copy(), label="inclusion")


class SemidirectGroup(FiniteGroup):
    """``G ⋉ A``: pairs (g, a) with (g, a)(h, b) = (gh, a^h b), encoded ``g + |G| a``.

    ``act_many(a_array, g_array)`` gives the right action of G on A.
    """

    def __init__(self, top, inner, act_many, label=""):
        self.top = top
        self.inner = inner
        self.act_many = act_many
        self.order = top.order * inner.order
        self.identity = self.encode(top.identity, inner.identity)
        self.label = label

    def encode(self, g, a):
        return g + self.top.order * a

    def split(self, xs):
        xs = _arr(xs)
        return xs % self.top.order, xs // self.top.order

    def mul_many(self, xs, ys):
        g, a = self.split(xs)
        h, b = self.split(ys)
        g, h = np.broadcast_arrays(g, h)
        a, b = np.broadcast_arrays(a, b)
        return self.encode(self.top.mul_many(g, h), self.inner.mul_many(self.act_many(a, h), b))

    def inv_many(self, xs):
        g, a = self.split(xs)
        gi = self.top.inv_many(g)
        return self.encode(gi, self.act_many(self.inner.inv_many(a), gi))

    def describe(self, x):
        g, a = self.split(x)
        return (self.top.describe(int(g)), self.inner.describe(int(a)))

    @cached_property
    def generators(self):
        tops = [self.encode(s, self.inner.identity) for s in self.top.generators]
        inners = [self.encode(self.top.identity, t) for t in self.inner.generators]
        return tuple(int(v) for v in tops + inners)


def closure_mask(group, seed, cap=None):
    """Boolean membership mask of the subgroup generated by ``seed``."""
    seed = np.unique(_arr(list(seed))) if len(seed) else _arr([])
    mask = np.zeros(group.order, dtype=bool)
    mask[group.identity] = True
    seed = seed[seed != group.identity]
    if seed.size == 0:
        return mask
    frontier = _arr([group.identity])
    count = 1
    while frontier.size:
        xs = np.repeat(frontier, seed.size)
        ss = np.tile(seed, frontier.size)
        new = np.unique(group.mul_many(xs, ss))
        new = new[~mask[new]]
        mask[new] = True
        count += new.size
        if cap is not None and count > cap:
            raise ClosureTooLarge(f"closure exceeds order cap {cap}")
        frontier = new
    return mask


# ----------------------------------------------------------------- constructors


def group_from_table(table, identity=0, label=""):
    """Validate a Cayley table and wrap it as a :class:`TableGroup`."""
    t = _arr(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise ValueError("table must be a non-empty square array")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise ValueError("table entries out of range")
    if not 0 <= identity < n:
        raise ValueError("identity out of range")
    e = identity
    bad = np.nonzero((t[e] != np.arange(n)) | (t[:, e] != np.arange(n)))[0]
    if bad.size:
        raise NoIdentity(f"{e} is not a two-sided identity", witness=(int(bad[0]),))
    inverses = np.empty(n, dtype=np.int64)
    for x in range(n):
        cands = np.nonzero((t[x] == e) & (t[:, x] == e))[0]
        if cands.size == 0:
            raise NoInverse(f"element {x} has no two-sided inverse", witness=(x,))
        inverses[x] = cands[0]
    w = kernels.assoc_witness(t)
    if w is not None:
        raise NotAssociative("multiplication is not associative", witness=w)
    return TableGroup(t, e, label, inverses)


def _compose(p, q):
    # left to right: first p, then q
    return tuple(q[i] for i in p)


def group_from_permutations(degree, generators, max_order=None, label=""):
    """Closure of permutations of ``{0..degree-1}``, elements in BFS order.

    Index 0 is the identity; new elements are numbered as the breadth-first
    search meets them, trying generators in the given order.
    """
    cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    gens = []
    for g in generators:
        g = tuple(int(v) for v in g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise NotABijection(f"{list(g)} is not a permutation of 0..{degree - 1}", witness=g)
        gens.append(g)
    ident = tuple(range(degree))
    index = {ident: 0}
    perms = [ident]
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            r = _compose(p, g)
            if r not in index:
                if len(perms) >= cap:
                    raise ClosureTooLarge(f"closure exceeds order cap {cap}")
                index[r] = len(perms)
                perms.append(r)
                queue.append(r)
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[_compose(p, q)]
    return PermutationGroup(table, perms, label)


def trivial_group(label="1"):
    return TableGroup([[0]], 0, label)


def cyclic_group(n, label=None):
    e = np.arange(n)
    return TableGroup((e[:, None] + e[None, :]) % n, 0, label or f"Z{n}")


def direct_product(g, h, label=None):
    """G × H as a table group, element ``(x, y)`` encoded ``x + |G| y``."""
    ident = lambda a, _g: a
    return SemidirectGroup(g, h, ident, label or f"{g.label}x{h.label}").materialize()


# ------------------------------------------------------------- homomorphisms


class Homomorphism:
    """A map of finite groups given totally.

    Either ``images`` (an array indexed by domain elements) or a vectorised
    ``fn`` is supplied; the image array is computed on first use.
    """

    def __init__(self, domain, codomain, images=None, fn=None, label=""):
        if images is None and fn is None:
            raise ValueError("need images or fn")
        self.domain = domain
        self.codomain = codomain
        self._fn = fn
        self.label = label
        if images is not None:
            images = _arr(images)
            if images.shape != (domain.order,):
                raise ValueError("image map must be total on the domain")
            if images.size and (images.min() < 0 or images.max() >= codomain.order):
                raise ValueError("image out of range")
            self.__dict__["images"] = images

    @cached_property
    def images(self):
        return _arr(self._fn(self.domain.elements()))

    def apply(self, xs):
        if "images" in self.__dict__ or self._fn is None:
            return self.images[_arr(xs)]
        return _arr(self._fn(_arr(xs)))

    def __call__(self, x):
        return int(self.apply(_arr([x]))[0])

    def then(self, other, label=""):
        """Left-to-right composite: first ``self``, then ``other``."""
        return Homomorphism(self.domain, other.codomain, images=other.apply(self.images), label=label)

    def first_violation(self):
        """``(x, s)`` with ``f(xs) != f(x) f(s)`` for a generator ``s``, or None."""
        dom, cod = self.domain, self.codomain
        if self(dom.identity) != cod.identity:
            return (dom.identity, dom.identity)
        xs = dom.elements()
        fx = self.images
        for s in dom.generators:
            lhs = self.apply(dom.mul_many(xs, s))
            rhs = cod.mul_many(fx, self(s))
            bad = np.nonzero(lhs != rhs)[0]
            if bad.size:
                return (int(bad[0]), int(s))
        return None

    def kernel(self):
        return Subgroup(self.domain, np.nonzero(self.images == self.codomain.identity)[0])

    def image(self):
        return Subgroup(self.codomain, np.unique(self.images))

    def is_injective(self):
        return np.unique(self.images).size == self.domain.order

    def is_surjective(self):
        return np.unique(self.images).size == self.codomain.order

    def is_bijective(self):
        return self.domain.order == self.codomain.order and self.is_injective()

    def __repr__(self):
        return f"<Homomorphism {self.label or ''} {self.domain!r} -> {self.codomain!r}>"


def homomorphism(domain, codomain, image_map, label=""):
    """Validated homomorphism from an element-indexed image list."""
    f = Homomorphism(domain, codomain, images=image_map, label=label)
    w = f.first_violation()
    if w is not None:
        raise NotAHomomorphism(f"not a homomorphism at {w}", witness=w)
    return f


def identity_hom(group):
    return Homomorphism(group, group, images=group.elements(), label="id")


# ------------------------------------------------------------------ subgroups


class Subgroup:
    """A subgroup of ``parent``, stored as a sorted member array."""

    def __init__(self, parent, members):
        self.parent = parent
        self.members = np.unique(_arr(members))
        self.mask = np.zeros(parent.order, dtype=bool)
        self.mask[self.members] = True

    @property
    def order(self):
        return len(self.members)

    def __len__(self):
        return self.order

    def __contains__(self, x):
        return bool(self.mask[int(x)])

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and np.array_equal(self.members, other.members)
        )

    def __hash__(self):
        return hash((id(self.parent), self.members.tobytes()))

    def __le__(self, other):
        return bool(np.all(other.mask[self.members]))

    def is_trivial(self):
        return self.order == 1

    @cached_property
    def view(self):
        return SubgroupView(self.parent, self.members)

    def as_group(self):
        return self.view

    def __repr__(self):
        return f"<Subgroup of {self.parent!r} order={self.order}>"


def subgroup_generated(group, seed, cap=None):
    return Subgroup(group, np.nonzero(closure_mask(group, list(seed), cap))[0])


def whole(group):
    return Subgroup(group, group.elements())


def trivial_subgroup(group):
    return Subgroup(group, [group.identity])


def normality_witness(group, sub):
    """``(h, g)`` with ``h^g`` outside ``sub`` (g a generator), else None."""
    for g in group.generators:
        c = group.conj_many(sub.members, g)
        bad = np.nonzero(~sub.mask[c])[0]
        if bad.size:
            return (int(sub.members[bad[0]]), int(g))
    return None


def is_normal(group, sub):
    return normality_witness(group, sub) is None


def commutator_witness(group, a, b, target):
    """First ``(x, y)`` with ``[x, y] = x^-1 y^-1 x y`` outside ``target``."""
    xs = np.repeat(a.members, b.order)
    ys = np.tile(b.members, a.order)
    comm = group.mul_many(group.mul_many(group.inv_many(xs), group.inv_many(ys)), group.mul_many(xs, ys))
    bad = np.nonzero(~target.mask[comm])[0]
    if bad.size:
        return (int(xs[bad[0]]), int(ys[bad[0]]))
    return None


def coset_representatives(group, sub):
    """Array mapping each element to the least index in its coset ``sub·x``."""
    xs = group.elements()
    reps = np.full(group.order, group.order, dtype=np.int64)
    for m in sub.members:
        reps = np.minimum(reps, group.mul_many(m, xs))
    return reps


def quotient(group, sub, label=""):
    """``(G/M, projection)``; coset ``i`` has the i-th smallest representative."""
    w = normality_witness(group, sub)
    if w is not None:
        raise NotNormal("subgroup is not normal", witness=w)
    reps_of = coset_representatives(group, sub)
    reps = np.unique(reps_of)
    proj = np.searchsorted(reps, reps_of)
    k = reps.size
    table = proj[group.mul_many(np.repeat(reps, k), np.tile(reps, k))].reshape(k, k)
    q = TableGroup(table, int(proj[group.identity]), label)
    q.representatives = reps
    return q, Homomorphism(group, q, images=proj, label="projection")


def all_subgroups(group):
    """Every subgroup, as joins of cyclic subgroups. Desk-scale only."""
    found = {}

    def add(mask):
        key = mask.tobytes()
        if key not in found:
            found[key] = mask
            return True
        return False

    cyclic = []
    for x in range(group.order):
        m = closure_mask(group, [x])
        if add(m):
            cyclic.append((x, m))
    frontier = list(found.values())
    while frontier:
        nxt = []
        for m in frontier:
            for x, c in cyclic:
                if m[x]:
                    continue
                j = closure_mask(group, list(np.nonzero(m)[0]) + [x])
                if add(j):
                    nxt.append(j)
        frontier = nxt
    subs = [Subgroup(group, np.nonzero(m)[0]) for m in found.values()]
    subs.sort(key=lambda s: (s.order, tuple(s.members)))
    return subs


# -------------------------------------------------------------------- actions


class GroupAction:
    """Right action of ``actor`` on the group ``space``: ``table[a, g] = a^g``."""

    def __init__(self, actor, space, table):
        self.actor = actor
        self.space = space
        self.table = _arr(table)
        if self.table.shape != (space.order, actor.order):
            raise ValueError("action table must have shape (|space|, |actor|)")

    def act(self, a, g):
        return int(self.table[a, g])

    def act_many(self, a, g):
        return self.table[_arr(a), _arr(g)]

    def is_trivial(self):
        return bool(np.all(self.table == np.arange(self.space.order)[:, None]))

    def first_violation(self):
        """``(tag, witness)`` for the first broken action law, or None."""
        N, G = self.space, self.actor
        ident = np.arange(N.order)
        if not np.array_equal(self.table[:, G.identity], ident):
            a = int(np.nonzero(self.table[:, G.identity] != ident)[0][0])
            return ("identity_acts_trivially", (a,))
        for g in range(G.order):
            col = self.table[:, g]
            if np.unique(col).size != N.order:
                return ("not_bijective", (g,))
            for s in N.generators:
                lhs = col[N.mul_many(ident, s)]
                rhs = N.mul_many(col, col[s])
                bad = np.nonzero(lhs != rhs)[0]
                if bad.size:
                    return ("not_automorphism", (g, int(bad[0]), int(s)))
        for s in G.generators:
            lhs = self.table[:, G.mul_many(G.elements(), s)]
            rhs = self.table[self.table, s]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                a, g = bad[0]
                return ("right_action_law", (int(a), int(g), int(s)))
        return None

    def __repr__(self):
        return f"<GroupAction {self.actor!r} on {self.space!r}>"


def group_action(actor, space, table):
    act = GroupAction(actor, space, table)
    v = act.first_violation()
    if v is not None:
        raise NotAnAction(f"invalid action: {v[0]}", witness=v[1])
    return act


def trivial_action(actor, space):
    return GroupAction(actor, space, np.repeat(np.arange(space.order)[:, None], actor.order, axis=1))


def conjugation_action(group, sub):
    """Conjugation of ``group`` on the normal subgroup ``sub`` (as a group)."""
    w = normality_witness(group, sub)
    if w is not None:
        raise NotNormal("subgroup is not normal", witness=w)
    view = sub.as_group()
    a = np.repeat(sub.members, group.order)
    g = np.tile(group.elements(), sub.order)
    table = view.local(group.conj_many(a, g)).reshape(sub.order, group.order)
    return GroupAction(group, view, table)


def semidirect_product(top, space, action, label=""):
    """``top ⋉ space`` with (g, a)(h, b) = (gh, a^h b); element (g, a) is ``g + |G| a``."""
    v = action.first_violation()
    if v is not None:
        raise NotAnAction(f"invalid action: {v[0]}", witness=v[1])
    return SemidirectGroup(top, space, action.act_many, label)


def automorphisms(group):
    """All automorphisms as image arrays, sorted lexicographically."""
    gens = list(group.generators)
    if not gens:
        return [np.arange(group.order)]
    orders = [group.element_order(s) for s in gens]
    by_order = {}
    for x in range(group.order):
        by_order.setdefault(group.element_order(x), []).append(x)
    out = []
    for choice in product(*[by_order.get(o, []) for o in orders]):
        img = extend_on_generators(group, group, gens, choice)
        if img is not None and np.unique(img).size == group.order:
            out.append(img)
    out.sort(key=lambda a: tuple(a))
    return out


def extend_on_generators(dom, cod, gens, targets):
    """Extend ``gens[i] -> targets[i]`` to a homomorphism, or None if inconsistent."""
    img = np.full(dom.order, -1, dtype=np.int64)
    img[dom.identity] = cod.identity
    queue = deque([dom.identity])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, targets):
            y = dom.mul(x, s)
            v = cod.mul(int(img[x]), t)
            if img[y] < 0:
                img[y] = v
                queue.append(y)
            elif img[y] != v:
                return None
    return img
