"""Dense univariate polynomials as coefficient lists, lowest degree first.

The generic routines work over any field whose elements support the
arithmetic operators and ``is_zero``; the Sturm routines work over
:class:`fractions.Fraction` only.
"""
from __future__ import annotations

from fractions import Fraction


def _iszero(c):
    return c == 0 if isinstance(c, (int, Fraction)) else c.is_zero()


def trim(p):
    p = list(p)
    while p and _iszero(p[-1]):
        p.pop()
    return p


def degree(p):
    return len(trim(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        if i < len(p) and i < len(q):
            out.append(p[i] + q[i])
        elif i < len(p):
            out.append(p[i])
        else:
            out.append(q[i])
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out = [None] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if _iszero(a):
            continue
        for j, b in enumerate(q):
            t = a * b
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    zero = p[0] - p[0]
    return trim([zero if c is None else c for c in out])


def scale(p, c):
    return trim([a * c for a in p])


def divmod_(p, q):
    """Quotient and remainder; ``q`` must be nonzero."""
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if len(p) < len(q):
        return [], p
    lead_inv = 1 / q[-1]
    r = list(p)
    quot = [q[-1] - q[-1]] * (len(p) - len(q) + 1)
    for k in range(len(p) - len(q), -1, -1):
        c = r[k + len(q) - 1] * lead_inv
        quot[k] = c
        if _iszero(c):
            continue
        for i, b in enumerate(q):
            r[k + i] = r[k + i] - c * b
    return trim(quot), trim(r[: len(q) - 1])


def rem(p, q):
    return divmod_(p, q)[1]


def monic(p):
    p = trim(p)
    if not p:
        return p
    inv = 1 / p[-1]
    return [c * inv for c in p]


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def xgcd(p, q, one):
    """Return ``(g, s, t)`` with ``s*p + t*q = g`` and ``g`` monic."""
    zero = one - one
    r0, r1 = trim(p), trim(q)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        quo, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return [], [zero], [zero]
    inv = 1 / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def evaluate(p, x, zero):
    acc = zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


# --- Sturm sequences over Q -------------------------------------------------

def _fr(p):
    return trim([Fraction(c) for c in p])


def sturm_sequence(p):
    p = _fr(p)
    seq = [p, derivative(p)]
    while True:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(neg(r))
    return seq


def _sign_changes(values):
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def count_roots(p, lo, hi, seq=None):
    """Number of distinct real roots of ``p`` in the half-open ``(lo, hi]``."""
    seq = seq if seq is not None else sturm_sequence(p)
    lo, hi = Fraction(lo), Fraction(hi)
    v_lo = _sign_changes([evaluate(s, lo, Fraction(0)) for s in seq])
    v_hi = _sign_changes([evaluate(s, hi, Fraction(0)) for s in seq])
    return v_lo - v_hi


def squarefree_part(p):
    p = _fr(p)
    g = gcd(p, derivative(p))
    if len(g) <= 1:
        return p
    return divmod_(p, g)[0]
