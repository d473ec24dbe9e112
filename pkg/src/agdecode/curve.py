"""Miura-Kamiya plane curves and arithmetic in their coordinate rings.

The curve is

    y^a + sum_{a*i + b*j < a*b} c_{i,j} x^i y^j + c x^b = 0,   gcd(a, b) = 1,

and its coordinate ring R = F[x, y] is a free F[x]-module with basis
1, y, ..., y^(a-1).  A ring element is therefore stored as a tuple of ``a``
univariate polynomials (see :mod:`agdecode.upoly`): ``elem[j]`` is the
coefficient of y^j.  Products are reduced with the curve relation.

Elements of Rz + R (z-linear polynomials) are :class:`Pair` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple

from . import upoly
from .errors import FieldOrderMismatch, GapValue, ZeroElement
from .field import GF

NEG_INF = float("-inf")


class Pair(NamedTuple):
    """The element ``z * zpart + cpart`` of Rz + R."""

    zpart: tuple
    cpart: tuple


class Monomial(NamedTuple):
    """The monomial x^deg_x y^j z^(1 if has_z else 0)."""

    has_z: bool
    j: int
    deg_x: int


@dataclass(frozen=True, eq=False)
class PlaneCurve:
    F: GF
    a: int
    b: int
    coeffs: dict  # (i, j) -> nonzero field element
    c: int
    _yrel: tuple = dc_field(init=False, repr=False)

    def __post_init__(self):
        a, b = self.a, self.b
        if a < 1 or b < 1 or math.gcd(a, b) != 1:
            raise ValueError(f"need gcd(a, b) = 1, got a={a}, b={b}")
        if self.c == 0:
            raise ValueError("coefficient of x^b must be nonzero")
        clean = {}
        for (i, j), v in self.coeffs.items():
            self.F.check(v)
            if i < 0 or j < 0 or j >= a or a * i + b * j >= a * b:
                raise ValueError(f"term x^{i} y^{j} violates a*i + b*j < a*b")
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "coeffs", clean)
        # y^a = -sum c_ij x^i y^j - c x^b, as rows over F[x]
        F = self.F
        rows = [[0] * (b + 1) for _ in range(a)]
        for (i, j), v in clean.items():
            rows[j][i] = F.sub(rows[j][i], v)
        rows[0][b] = F.neg(self.c)
        object.__setattr__(self, "_yrel", tuple(upoly.trim(r) for r in rows))

    def __eq__(self, other):
        if not isinstance(other, PlaneCurve):
            return NotImplemented
        return (self.F, self.a, self.b, self.coeffs, self.c) == (other.F, other.a, other.b, other.coeffs, other.c)

    def __hash__(self):
        return hash((self.F, self.a, self.b, tuple(sorted(self.coeffs.items())), self.c))

    @property
    def is_hermitian(self) -> bool:
        return (
            self.b == self.a + 1
            and self.F.order == self.a * self.a
            and self.coeffs == {(0, 1): 1}
            and self.c == self.F.neg(1)
        )

    @property
    def genus(self) -> int:
        return (self.a - 1) * (self.b - 1) // 2

    # -- the curve equation -------------------------------------------------
    def equation_at(self, x: int, y: int) -> int:
        F = self.F
        acc = F.add(F.pow(y, self.a), F.mul(self.c, F.pow(x, self.b)))
        for (i, j), v in self.coeffs.items():
            acc = F.add(acc, F.mul(v, F.mul(F.pow(x, i), F.pow(y, j))))
        return acc

    def is_singular_at(self, x: int, y: int) -> bool:
        F = self.F
        dx = F.mul(F.mul(F.from_int(self.b), self.c), F.pow(x, self.b - 1))
        dy = F.mul(F.from_int(self.a), F.pow(y, self.a - 1))
        for (i, j), v in self.coeffs.items():
            if i:
                dx = F.add(dx, F.mul(F.mul(F.from_int(i), v), F.mul(F.pow(x, i - 1), F.pow(y, j))))
            if j:
                dy = F.add(dy, F.mul(F.mul(F.from_int(j), v), F.mul(F.pow(x, i), F.pow(y, j - 1))))
        return dx == 0 and dy == 0

    def contains(self, point) -> bool:
        x, y = point
        return self.equation_at(x, y) == 0 and not self.is_singular_at(x, y)

    def points(self) -> list:
        """All nonsingular affine rational points, ordered by (x, y) encoding."""
        return [(x, y) for x in self.F.elements() for y in self.F.elements() if self.contains((x, y))]

    # -- semigroup ----------------------------------------------------------
    def is_gap(self, s: int) -> bool:
        if s < 0:
            return True
        j = (s * pow(self.b, -1, self.a)) % self.a if self.a > 1 else 0
        return s - self.b * j < 0

    def nongaps_upto(self, u: int) -> list:
        return [s for s in range(u + 1) if not self.is_gap(s)]

    def phi(self, s: int) -> Monomial:
        """The unique z-free monomial x^i y^j (j < a) of weighted degree s."""
        if self.is_gap(s):
            raise GapValue(f"{s} is a gap")
        j = (s * pow(self.b, -1, self.a)) % self.a if self.a > 1 else 0
        return Monomial(False, j, (s - self.b * j) // self.a)

    # -- ring elements ------------------------------------------------------
    def zero(self) -> tuple:
        return ((),) * self.a

    def one(self) -> tuple:
        return self.constant(1)

    def constant(self, v: int) -> tuple:
        return self.monomial(0, 0, v)

    def monomial(self, i: int, j: int, coeff: int = 1) -> tuple:
        """coeff * x^i y^j, reduced when j >= a."""
        if j < self.a:
            rows = [()] * self.a
            rows[j] = upoly.shift((coeff,), i) if coeff else ()
            return tuple(rows)
        return self.mul(self.monomial(i, j - self.a + 1, coeff), self.monomial(0, self.a - 1))

    def from_rows(self, rows) -> tuple:
        rows = [upoly.trim(r) for r in rows]
        if len(rows) > self.a:
            raise ValueError(f"element has {len(rows)} rows, curve rank is {self.a}")
        return tuple(rows + [()] * (self.a - len(rows)))

    def add(self, f, g) -> tuple:
        F = self.F
        return tuple(upoly.add(F, p, r) for p, r in zip(f, g))

    def sub(self, f, g) -> tuple:
        F = self.F
        return tuple(upoly.sub(F, p, r) for p, r in zip(f, g))

    def scale(self, c: int, f) -> tuple:
        F = self.F
        return tuple(upoly.scale(F, c, p) for p in f)

    def shift(self, f, k: int) -> tuple:
        """Multiply by x^k."""
        return tuple(upoly.shift(p, k) for p in f)

    def mul(self, f, g) -> tuple:
        F, a = self.F, self.a
        prod = [()] * (2 * a - 1)
        for j1, p in enumerate(f):
            if p:
                for j2, r in enumerate(g):
                    if r:
                        prod[j1 + j2] = upoly.add(F, prod[j1 + j2], upoly.mul(F, p, r))
        for j in range(2 * a - 2, a - 1, -1):
            p = prod[j]
            if p:
                for l, r in enumerate(self._yrel):
                    if r:
                        prod[j - a + l] = upoly.add(F, prod[j - a + l], upoly.mul(F, p, r))
        return tuple(prod[:a])

    def delta(self, f):
        """Pole order at infinity; -inf for the zero element."""
        best = NEG_INF
        for j, p in enumerate(f):
            if p:
                best = max(best, self.a * (len(p) - 1) + self.b * j)
        return best

    def leading(self, f):
        """(Monomial, coefficient) of the leading term under the weighted degree order."""
        return self.lt_s(Pair(self.zero(), f), 0)

    def evaluate(self, f, point) -> int:
        F = self.F
        x, y = point
        acc = 0
        for p in reversed(f):
            acc = F.add(F.mul(acc, y), upoly.evaluate(F, p, x))
        return acc

    # -- z-linear elements --------------------------------------------------
    def pair_eval(self, P: Pair, point, z: int) -> int:
        F = self.F
        return F.add(F.mul(self.evaluate(P.zpart, point), z), self.evaluate(P.cpart, point))

    def pair_add(self, P: Pair, Q: Pair) -> Pair:
        return Pair(self.add(P.zpart, Q.zpart), self.add(P.cpart, Q.cpart))

    def pair_scale(self, c: int, P: Pair) -> Pair:
        return Pair(self.scale(c, P.zpart), self.scale(c, P.cpart))

    def pair_shift(self, P: Pair, k: int) -> Pair:
        return Pair(self.shift(P.zpart, k), self.shift(P.cpart, k))

    def pair_mul(self, f, P: Pair) -> Pair:
        """Multiply a pair by a ring element."""
        return Pair(self.mul(f, P.zpart), self.mul(f, P.cpart))

    def lt_s(self, P: Pair, s: int):
        """Leading (Monomial, coefficient) under >_s: weighted degree with z worth s,
        ties broken z > y > x."""
        best = None
        for has_z, part in ((True, P.zpart), (False, P.cpart)):
            for j, p in enumerate(part):
                if p:
                    d = len(p) - 1
                    key = (self.a * d + self.b * j + (s if has_z else 0), has_z, j, d)
                    if best is None or key > best[0]:
                        best = (key, p[-1])
        if best is None:
            raise ZeroElement("zero element has no leading term")
        _, has_z, j, d = best[0]
        return Monomial(has_z, j, d), best[1]

    def subst_z(self, P: Pair, w: int, s: int) -> Pair:
        """Substitute z -> z + w * phi_s."""
        m = self.phi(s)
        if w == 0:
            return P
        shifted = self.mul(P.zpart, self.monomial(m.deg_x, m.j, w))
        return Pair(P.zpart, self.add(P.cpart, shifted))


def hermitian_curve(F: GF, q: int | None = None) -> PlaneCurve:
    """The Hermitian curve y^q + y = x^(q+1) over GF(q^2)."""
    if q is None:
        q = math.isqrt(F.order)
    if q * q != F.order:
        raise FieldOrderMismatch(f"Hermitian curve with q={q} needs a field of order {q * q}, got {F.order}")
    return PlaneCurve(F, q, q + 1, {(0, 1): 1}, F.neg(1))
