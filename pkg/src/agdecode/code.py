"""Evaluation codes C_u on a plane curve."""

from __future__ import annotations

from functools import cached_property

from .curve import PlaneCurve
from .errors import DuplicatePoint, LengthMismatch
from .ideal import EtaBasis, hermitian_eta, lagrange_basis, vanishing_basis


class Code:
    """The code C_u: evaluations of span{phi_s : s nongap, s <= u} at ``points``.

    ``points`` defaults to every affine rational point in (x, y) encoding
    order; an explicit list fixes a different coordinate order.
    """

    def __init__(self, curve: PlaneCurve, u: int, points=None, eta: EtaBasis | None = None):
        self.curve = curve
        self.F = curve.F
        all_points = points is None
        self.points = tuple(curve.points() if all_points else (tuple(p) for p in points))
        for p in self.points:
            if not curve.contains(p):
                raise ValueError(f"{p} is not a nonsingular point of the curve")
        if len(set(self.points)) != len(self.points):
            raise DuplicatePoint("point list contains duplicates")
        self.n = len(self.points)
        if not 0 <= u < self.n:
            raise ValueError(f"need 0 <= u < n = {self.n}, got u = {u}")
        self.u = u
        self.nongaps = tuple(curve.nongaps_upto(u))
        self.k = len(self.nongaps)
        self._eta = eta

    def __repr__(self):
        return f"Code(n={self.n}, k={self.k}, u={self.u}, a={self.curve.a}, b={self.curve.b}, F={self.F.name})"

    @cached_property
    def eta(self) -> EtaBasis:
        if self._eta is not None:
            return self._eta
        if self.curve.is_hermitian and self.n == self.curve.a**3:
            return hermitian_eta(self.curve)
        return vanishing_basis(self.curve, self.points)

    @cached_property
    def lagrange(self) -> list:
        return lagrange_basis(self.curve, self.points)

    @cached_property
    def phis(self) -> list:
        """phi_{s_1}, ..., phi_{s_k} as ring elements."""
        c = self.curve
        return [c.monomial(m.deg_x, m.j) for m in map(c.phi, self.nongaps)]

    @cached_property
    def du(self) -> int:
        from .bounds import du

        return du(self)

    def evaluate(self, f) -> list:
        return [self.curve.evaluate(f, p) for p in self.points]

    def message_poly(self, message):
        if len(message) != self.k:
            raise LengthMismatch(f"message has length {len(message)}, expected {self.k}")
        c = self.curve
        mu = c.zero()
        for m, phi in zip(message, self.phis):
            if m:
                mu = c.add(mu, c.scale(self.F.check(m), phi))
        return mu

    def encode(self, message) -> list:
        return self.evaluate(self.message_poly(message))
