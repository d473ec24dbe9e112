import random

import pytest
from hypothesis import given, settings, strategies as st

from agdecode import hermitian_curve, make_field
from agdecode.curve import Monomial
from agdecode.errors import DuplicatePoint, LengthMismatch
from agdecode.ideal import hermitian_eta, interpolant, lagrange_basis, vanishing_basis


def assert_kronecker(curve, points, hs):
    for i, h in enumerate(hs):
        for j, p in enumerate(points):
            assert curve.evaluate(h, p) == (1 if i == j else 0)


def assert_eta_invariants(curve, points, eta):
    assert len(eta.etas) == curve.a
    for i, g in enumerate(eta.etas):
        mono, lc = curve.leading(g)
        assert mono.j == i and mono.deg_x == eta.lt_deg_x[i] and lc == 1
        for p in points:
            assert curve.evaluate(g, p) == 0
    assert eta.colength == len(points)


@pytest.mark.parametrize("name", ["herm2", "herm3"])
def test_lagrange_kronecker(name, request):
    c = request.getfixturevalue(name)
    pts = c.points()
    hs = lagrange_basis(c, pts)
    assert_kronecker(c, pts, hs)
    t = len({x for x, _ in pts})
    for h in hs:
        assert max(len(r) for r in h) - 1 == t - 1


def test_lagrange_single_point(herm3):
    assert lagrange_basis(herm3, [herm3.points()[4]]) == [herm3.one()]


def test_lagrange_shared_x(herm3):
    pts = [p for p in herm3.points() if p[0] == 1]
    assert len(pts) == 3
    hs = lagrange_basis(herm3, pts)
    assert_kronecker(herm3, pts, hs)
    for h in hs:
        assert all(len(r) <= 1 for r in h)  # separated by y alone


def test_lagrange_duplicates(herm3):
    p = herm3.points()[0]
    with pytest.raises(DuplicatePoint):
        lagrange_basis(herm3, [p, p])
    with pytest.raises(DuplicatePoint):
        vanishing_basis(herm3, [p, p])


def test_interpolant(herm3, worked_code, worked_v):
    c = herm3
    hs = worked_code.lagrange
    assert interpolant(c, hs, [0] * 27) == c.zero()
    ones = interpolant(c, hs, [1] * 27)
    assert all(c.evaluate(ones, p) == 1 for p in worked_code.points)
    hv = interpolant(c, hs, worked_v)
    assert [c.evaluate(hv, p) for p in worked_code.points] == worked_v
    with pytest.raises(LengthMismatch):
        interpolant(c, hs, [0] * 26)


def test_worked_example_interpolant(herm3, worked_code, worked_v, alpha):
    # coefficients as printed in the worked example, constant term first
    a = alpha
    row2 = [0, a(2), 2, a(6), a(3), a(5), a(7), 1, a(3)]
    row1 = [0, a(3), 0, a(7), a(6), a(1), 1, 1, a(6)]
    row0 = [0, 1, 0, a(2), 2, 0, a(6), a(1), 2]
    hv = interpolant(herm3, worked_code.lagrange, worked_v)
    assert hv == herm3.from_rows([row0, row1, row2])
    assert herm3.delta(hv) == 32
    assert herm3.leading(hv) == (Monomial(False, 2, 8), a(3))


@pytest.mark.parametrize("name,q", [("herm2", 2), ("herm3", 3), ("herm4", 4)])
def test_hermitian_eta(name, q, request):
    c = request.getfixturevalue(name)
    eta = hermitian_eta(c)
    assert eta.lt_deg_x == (q * q,) * q
    assert eta.colength == q**3
    x_part = eta.etas[0][0]
    assert x_part[q * q] == 1 and x_part[1] == c.F.neg(1) and sum(1 for v in x_part if v) == 2
    for i, g in enumerate(eta.etas):
        assert g == c.mul(c.monomial(0, i), eta.etas[0])
    assert_eta_invariants(c, c.points(), eta)


@pytest.mark.parametrize("name", ["herm2", "herm3", "herm4"])
def test_vanishing_basis_full_set_matches_closed_form(name, request):
    c = request.getfixturevalue(name)
    pts = c.points()
    vb = vanishing_basis(c, pts)
    assert_eta_invariants(c, pts, vb)
    he = hermitian_eta(c)
    assert [c.leading(g) for g in vb.etas] == [c.leading(g) for g in he.etas]


def test_vanishing_single_point(herm3):
    p = (3, 1)
    eta = vanishing_basis(herm3, [p])
    assert_eta_invariants(herm3, [p], eta)
    assert eta.etas[0] == herm3.from_rows([[herm3.F.neg(3), 1]])
    assert eta.lt_deg_x == (1, 0, 0)


def test_vanishing_error_support(worked_code, worked_v):
    supp = [p for p, x in zip(worked_code.points, worked_v) if x]
    eta = vanishing_basis(worked_code.curve, supp)
    assert_eta_invariants(worked_code.curve, supp, eta)
    assert eta.colength == 5


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([2, 3]))
def test_vanishing_random_subsets(seed, q):
    F = make_field(2, 2, [1, 1, 1]) if q == 2 else make_field(3, 2, [2, 2, 1])
    c = hermitian_curve(F)
    rng = random.Random(seed)
    pts = c.points()
    subset = rng.sample(pts, rng.randrange(1, len(pts) + 1))
    eta = vanishing_basis(c, subset)
    assert_eta_invariants(c, subset, eta)
    outside = [p for p in pts if p not in subset]
    if outside:
        # an individual element may be x^(q^2) - x; only the basis as a whole separates
        assert any(c.evaluate(g, p) for g in eta.etas for p in outside)
