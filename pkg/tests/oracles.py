"""Brute-force reference computations, independent of the xmod package.

Everything here works on plain lists: a group is its multiplication table
``T`` (``T[x][y] = xy``) with identity ``e``; tuple elements are Python tuples.
Nothing is vectorized and nothing is imported from xmod, so a disagreement
points at one side or the other, never at shared code.
"""

def identity_of(T):
    n = len(T)
    for e in range(n):
        if all(T[e][x] == x and T[x][e] == x for x in range(n)):
            return e
    return None


def inverse_of(T, e):
    n = len(T)
    return [next(y for y in range(n) if T[x][y] == e) for x in range(n)]


def group_axiom_failures(T):
    """Names of failing axioms for a square table, brute force."""
    n = len(T)
    out = []
    if any(T[T[x][y]][z] != T[x][T[y][z]] for x in range(n) for y in range(n) for z in range(n)):
        out.append("associativity")
    e = identity_of(T)
    if e is None:
        out.append("identity")
    elif any(all(T[x][y] != e for y in range(n)) for x in range(n)):
        out.append("inverse")
    return out


def compose(p, q):
    """Apply p, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def perm_closure(degree, gens):
    ident = tuple(range(degree))
    seen = {ident}
    todo = [ident]
    while todo:
        x = todo.pop()
        for g in gens:
            y = compose(x, tuple(g))
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def conj(T, inv, a, g):
    return T[T[inv[g]][a]][g]


def closure(T, seed):
    e = identity_of(T)
    H = {e} | set(seed)
    while True:
        new = {T[x][y] for x in H for y in H} - H
        if not new:
            return H
        H |= new


def is_normal(T, H):
    inv = inverse_of(T, identity_of(T))
    return all(conj(T, inv, h, g) in H for h in H for g in range(len(T)))


def cosets(T, H):
    return {frozenset(T[g][h] for h in H) for g in range(len(T))}


def all_subgroups(T):
    subs = {frozenset(closure(T, [x])) for x in range(len(T))}
    while True:
        new = {frozenset(closure(T, a | b)) for a in subs for b in subs} - subs
        if not new:
            return subs
        subs |= new


# --------------------------------------------------------------- crossed modules


def nm1_failures(NT, GT, n, act):
    """(a, g) with (a^g)n != (an)^g."""
    Ginv = inverse_of(GT, identity_of(GT))
    return [(a, g) for a in range(len(NT)) for g in range(len(GT))
            if n[act[a][g]] != conj(GT, Ginv, n[a], g)]


def nm2_failures(NT, GT, n, act):
    """(a, b) with a^(bn) != a^b."""
    Ninv = inverse_of(NT, identity_of(NT))
    return [(a, b) for a in range(len(NT)) for b in range(len(NT))
            if act[a][n[b]] != conj(NT, Ninv, a, b)]


def is_hom(T1, T2, f):
    return all(f[T1[x][y]] == T2[f[x]][f[y]] for x in range(len(T1)) for y in range(len(T1)))


def is_right_action(GT, NT, act):
    eG = identity_of(GT)
    ok_id = all(act[a][eG] == a for a in range(len(NT)))
    ok_law = all(act[act[a][g]][h] == act[a][GT[g][h]]
                 for a in range(len(NT)) for g in range(len(GT)) for h in range(len(GT)))
    ok_aut = all(act[NT[a][b]][g] == NT[act[a][g]][act[b][g]]
                 for a in range(len(NT)) for b in range(len(NT)) for g in range(len(GT)))
    return ok_id and ok_law and ok_aut


def quotient_hypothesis_failures(T, K, M, Gam):
    """Violated hypotheses of the quotient construction, by name, in the fixed order."""
    inv = inverse_of(T, identity_of(T))
    out = []
    for name, S in (("K_normal", K), ("M_normal", M), ("Gamma_normal", Gam)):
        if not is_normal(T, S):
            out.append(name)
    if not K <= M:
        out.append("K_le_M")
    if not K <= Gam:
        out.append("K_le_Gamma")
    if any(T[T[T[inv[c]][inv[m]]][c]][m] not in K for c in Gam for m in M):
        out.append("commutator_Gamma_M_le_K")
    return out


# ------------------------------------------------------------------ tuple laws


def bar_nn_mul(NT, x, y):
    """(a0..ak)(b0..bk) = (a0 b0, a1^{b0} b1, a2^{b0 b1} b2, ...)."""
    inv = inverse_of(NT, identity_of(NT))
    out = [NT[x[0]][y[0]]]
    t = y[0]
    for a, b in zip(x[1:], y[1:]):
        out.append(NT[conj(NT, inv, a, t)][b])
        t = NT[t][b]
    return tuple(out)


def bar_gn_mul(GT, NT, n, act, x, y):
    """(g, a1..ak)(h, b1..bk) = (gh, a1^h b1, a2^{h (b1)n} b2, ...)."""
    out = [GT[x[0]][y[0]]]
    t = y[0]
    for a, b in zip(x[1:], y[1:]):
        out.append(NT[act[a][t]][b])
        t = GT[t][n[b]]
    return tuple(out)


def bar_nn_face(NT, x, i):
    k = len(x) - 1
    if i < k:
        return x[:i] + (NT[x[i]][x[i + 1]],) + x[i + 2:]
    return x[:k]


def bar_gn_face(GT, NT, n, x, i):
    k = len(x) - 1
    if i == 0:
        return (GT[x[0]][n[x[1]]],) + x[2:] if k >= 1 else x
    if i < k:
        return x[:i] + (NT[x[i]][x[i + 1]],) + x[i + 2:]
    return x[:k]


def insert_identity(x, i, e):
    return x[:i + 1] + (e,) + x[i + 1:]


def x_mul(GT, NT, act, x, y):
    """(g, (a_i)) (h, (b_i)) = (gh, (a_i^h) * (b_i)) in G ⋉ Bar(N, N)."""
    g, a = x
    h, b = y
    return (GT[g][h], bar_nn_mul(NT, tuple(act[ai][h] for ai in a), b))


def eta(GT, n, x):
    g, a = x
    return (GT[g][n[a[0]]],) + tuple(a[1:])


# ---------------------------------------------------------------------- pi_0


def components(elements, pairs):
    """Classes of the equivalence relation generated by ``pairs`` (union-find)."""
    parent = {x: x for x in elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    classes = {}
    for x in elements:
        classes.setdefault(find(x), set()).add(x)
    return sorted(frozenset(c) for c in classes.values())
