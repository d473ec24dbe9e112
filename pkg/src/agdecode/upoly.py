"""Univariate polynomials over a GF instance.

A polynomial is a tuple of field elements, constant term first, with no
trailing zeros; ``()`` is the zero polynomial.
"""

from __future__ import annotations

ZERO = ()


def trim(c) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def deg(f) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(f) - 1


def lc(f) -> int:
    return f[-1] if f else 0


def coeff(f, k: int) -> int:
    return f[k] if 0 <= k < len(f) else 0


def add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out)


def sub(F, f, g):
    return add(F, f, neg(F, g))


def neg(F, f):
    return tuple(F.neg(c) for c in f)


def scale(F, c: int, f):
    if c == 0:
        return ZERO
    return tuple(F.mul(c, x) for x in f)


def shift(f, k: int):
    """Multiply by x^k (k >= 0)."""
    if not f or k == 0:
        return f
    return (0,) * k + tuple(f)


def mul(F, f, g):
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def evaluate(F, f, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def from_roots(F, roots):
    """The monic polynomial prod (x - r)."""
    out = (1,)
    for r in roots:
        out = mul(F, out, (F.neg(r), 1))
    return out
