"""Order bound on the minimum distance and the decoding radius.

nu(s) counts the votes guaranteed to the correct candidate at nongap s;
d_u = min nu(s) over nongaps s <= u, and decoding succeeds whenever
2 * wt(e) < d_u.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import GapValue, OutOfRange


def _eta_degree(curve, eta, i: int) -> int:
    return curve.a * eta.lt_deg_x[i] + curve.b * i


def nu_for(curve, eta, s: int) -> int:
    if curve.is_gap(s):
        raise GapValue(f"{s} is a gap")
    a, b = curve.a, curve.b
    binv = pow(b, -1, a) if a > 1 else 0
    total = 0
    for i in range(a):
        ip = ((b * i + s) * binv) % a
        total += max(_eta_degree(curve, eta, ip) - b * i - s, 0)
    q, r = divmod(total, a)
    if r:
        raise ArithmeticError(f"nu sum {total} not divisible by {a}")
    return q


def du_for(curve, eta, u: int) -> int:
    return min(nu_for(curve, eta, s) for s in curve.nongaps_upto(u))


def nu(code, s: int) -> int:
    return nu_for(code.curve, code.eta, s)


def du(code) -> int:
    return du_for(code.curve, code.eta, code.u)


def hermitian_nu(q: int, s: int) -> int:
    if not 0 <= s < q**3:
        raise OutOfRange(f"need 0 <= s < {q**3}")
    t, r = divmod(s, q)
    if r > t:  # s = i*q + j*(q+1) with j < q needs j = r <= t
        raise GapValue(f"{s} is a gap")
    return (q - r) * (q * q + r - t) + r * max(q * q + r - q - t - 1, 0)


def hermitian_du(q: int, u: int) -> int:
    if not 0 <= u < q**3:
        raise OutOfRange(f"need 0 <= u < {q**3}")
    a, b = divmod(u, q)
    if b <= a - (q * q - q):
        return q**3 - a * q
    return q**3 - u


@dataclass(frozen=True)
class BoundRow:
    u: int
    k: int
    d_u: int


def bound_table(code, u_values) -> list:
    """One row (u, dim L_u, d_u) per nongap u in ``u_values``."""
    curve, eta = code.curve, code.eta
    rows = []
    best = None
    last = -1
    for u in sorted(set(u_values)):
        if curve.is_gap(u):
            continue
        # d_u is a running minimum, so extend it over the new nongaps only
        for s in range(last + 1, u + 1):
            if not curve.is_gap(s):
                v = nu_for(curve, eta, s)
                best = v if best is None else min(best, v)
        last = u
        rows.append(BoundRow(u, len(curve.nongaps_upto(u)), best))
    return rows


def table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["u", "k", "d_u"])
    for r in rows:
        w.writerow([r.u, r.k, r.d_u])
    return buf.getvalue()


def parse_table_csv(text: str) -> list:
    reader = csv.DictReader(io.StringIO(text))
    return [BoundRow(int(r["u"]), int(r["k"]), int(r["d_u"])) for r in reader]
