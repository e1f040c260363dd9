"""NumPy implementations of the tuple-level kernels.

These are the reference versions. ``_ckernels`` mirrors every function here
with identical signatures; ``xmod.kernels`` picks one at import time.

Tuple levels are encoded mixed-radix: digit 0 (the head) has radix ``hord``,
digits 1..m have radix ``q``, and ``idx = d0 + hord * (d1 + q * (d2 + ...))``.
"""

import numpy as np

NAME = "numpy"


def _split(x, hord, q, m):
    digits = np.empty((m + 1, x.shape[0]), dtype=np.int64)
    digits[0] = x % hord
    rest = x // hord
    for j in range(1, m + 1):
        digits[j] = rest % q
        rest = rest // q
    return digits


def _join(digits, hord, q):
    m = digits.shape[0] - 1
    out = np.zeros(digits.shape[1], dtype=np.int64)
    for j in range(m, 0, -1):
        out = out * q + digits[j]
    return out * hord + digits[0]


def bar_mul(x, y, hmul, nmul, act, phi, hord, q, m):
    """Twisted product of tuple elements.

    Head digits multiply in H; tail digit j becomes ``act[a_j, t] * b_j``
    where ``t`` is the running product of the right factor's head and the
    ``phi``-images of its earlier tail digits.
    """
    a = _split(x, hord, q, m)
    b = _split(y, hord, q, m)
    out = np.empty_like(a)
    out[0] = hmul[a[0], b[0]]
    t = b[0]
    for j in range(1, m + 1):
        out[j] = nmul[act[a[j], t], b[j]]
        t = hmul[t, phi[b[j]]]
    return _join(out, hord, q)


def coord_act(x, g, act, q, ncoords):
    """Apply ``act[., g]`` to every base-``q`` digit of ``x``."""
    out = np.zeros(x.shape[0], dtype=np.int64)
    rest = x.copy()
    scale = 1
    for _ in range(ncoords):
        out += act[rest % q, g] * scale
        rest //= q
        scale *= q
    return out


def bar_face(x, i, hmul, nmul, phi, hord, q, m):
    d = _split(x, hord, q, m)
    if i == m:
        return _join(d[:m], hord, q)
    if i == 0:
        head = hmul[d[0], phi[d[1]]]
        return _join(np.vstack([head[None, :], d[2:]]), hord, q)
    merged = nmul[d[i], d[i + 1]]
    return _join(np.vstack([d[:i], merged[None, :], d[i + 2:]]), hord, q)


def bar_degen(x, i, nid, hord, q, m):
    d = _split(x, hord, q, m)
    fill = np.full((1, x.shape[0]), nid, dtype=np.int64)
    return _join(np.vstack([d[: i + 1], fill, d[i + 1:]]), hord, q)


def assoc_witness(table):
    """First (x, y, z) in lexicographic order with (xy)z != x(yz), else None."""
    n = table.shape[0]
    for x in range(n):
        left = table[table[x]]          # [y, z] -> (xy)z
        right = table[x][table]         # [y, z] -> x(yz)
        bad = np.argwhere(left != right)
        if bad.size:
            y, z = bad[0]
            return (x, int(y), int(z))
    return None
