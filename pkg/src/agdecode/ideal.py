"""Interpolation on a point set: Lagrange basis and the vanishing ideal.

The vanishing ideal J of a finite point set is a free F[x]-module of rank
``a``.  :func:`vanishing_basis` builds a Groebner basis for it whose leading
terms sit in distinct y-degrees, adding one point at a time (a Koetter /
Buchberger-Moeller style update).  For the full point set of a Hermitian
curve the closed form y^i (x^(q^2) - x) is available as :func:`hermitian_eta`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import upoly
from .curve import PlaneCurve
from .errors import DuplicatePoint, LengthMismatch


@dataclass(frozen=True)
class EtaBasis:
    """Groebner basis eta_0..eta_{a-1} of a vanishing ideal.

    ``lt_deg_x[i]`` is the x-degree of the leading term of ``etas[i]``, whose
    leading term has y-degree i.
    """

    etas: tuple
    lt_deg_x: tuple

    @property
    def colength(self) -> int:
        return sum(self.lt_deg_x)


def _check_distinct(points):
    if len(set(points)) != len(points):
        raise DuplicatePoint("point list contains duplicates")


def lagrange_basis(curve: PlaneCurve, points) -> list:
    """Functions h_i with h_i(P_j) = [i == j], one per point.

    h_i is a product of a univariate polynomial in x vanishing at every other
    x-coordinate and one in y vanishing at the other y-coordinates over the
    same x, normalised at P_i.
    """
    points = list(points)
    _check_distinct(points)
    F = curve.F
    xs = sorted({x for x, _ in points})
    ys_over = {}
    for x, y in points:
        ys_over.setdefault(x, []).append(y)
    hs = []
    for alpha, beta in points:
        hx = upoly.from_roots(F, [x for x in xs if x != alpha])
        hy = upoly.from_roots(F, [y for y in ys_over[alpha] if y != beta])
        norm = F.inv(F.mul(upoly.evaluate(F, hx, alpha), upoly.evaluate(F, hy, beta)))
        hx = upoly.scale(F, norm, hx)
        # hy has degree < a, so the product needs no curve reduction
        hs.append(tuple(upoly.scale(F, cy, hx) for cy in hy) + ((),) * (curve.a - len(hy)))
    return hs


def interpolant(curve: PlaneCurve, hs, v) -> tuple:
    """h_v = sum v_i h_i."""
    if len(v) != len(hs):
        raise LengthMismatch(f"vector has length {len(v)}, expected {len(hs)}")
    out = curve.zero()
    for vi, h in zip(v, hs):
        if vi:
            out = curve.add(out, curve.scale(vi, h))
    return out


def vanishing_basis(curve: PlaneCurve, points) -> EtaBasis:
    points = list(points)
    _check_distinct(points)
    F = curve.F
    basis = [curve.monomial(0, j) for j in range(curve.a)]
    for pt in points:
        vals = [curve.evaluate(g, pt) for g in basis]
        live = [j for j, e in enumerate(vals) if e]
        if not live:
            # cannot happen for a point not yet added; kept for safety
            continue
        piv = min(live, key=lambda j: curve.delta(basis[j]))
        ep = vals[piv]
        for j in live:
            if j != piv:
                basis[j] = curve.sub(basis[j], curve.scale(F.div(vals[j], ep), basis[piv]))
        g = basis[piv]
        basis[piv] = curve.sub(curve.shift(g, 1), curve.scale(pt[0], g))
    etas, degs = [], []
    for j, g in enumerate(basis):
        mono, lc = curve.leading(g)
        assert mono.j == j
        etas.append(curve.scale(F.inv(lc), g))
        degs.append(mono.deg_x)
    return EtaBasis(tuple(etas), tuple(degs))


def hermitian_eta(curve: PlaneCurve) -> EtaBasis:
    """eta_i = y^i (x^(q^2) - x), the basis for all affine points of a Hermitian curve."""
    if not curve.is_hermitian:
        raise ValueError("closed form only applies to Hermitian curves")
    F, q = curve.F, curve.a
    base = upoly.trim([0, F.neg(1)] + [0] * (q * q - 2) + [1])
    etas = tuple(curve.from_rows([()] * i + [base]) for i in range(q))
    return EtaBasis(etas, (q * q,) * q)
