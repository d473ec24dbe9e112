"""Interpolation-based unique decoding with majority voting.

The decoder keeps a Groebner basis {g_i, f_i : 0 <= i < a} of the module of
z-linear interpolants through the points (P_j, v_j), with respect to the
weighted order >_s, and walks s down from max(delta(h_v), u) to 0.  At each s
it pairs every f_i with a g_{i'} (pairing), extracts one candidate
coefficient per pair and weighs it by the pair's degree slack (voting), and
updates the basis so it is Groebner for >_{s-1} (rebasing).  At nongaps
s <= u the winning candidate is the message coefficient of phi_s.

Notation inside a basis element: for f_i the z-part row i is a_{i,i} and the
constant part row i' is b_{i,i'}; for g_i the constant part row i is d_{i,i}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import upoly
from .code import Code
from .curve import Pair
from .errors import InternalPivotZero, LengthMismatch
from .ideal import interpolant

KEEP, SWAP, CANCEL = "keep", "swap", "cancel"


@dataclass(frozen=True)
class DecoderState:
    s: int
    g: tuple
    f: tuple
    nu: tuple
    w: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Pairing:
    i_prime: tuple
    k: tuple
    c: tuple

    @property
    def c_bar(self) -> tuple:
        return tuple(max(ci, 0) for ci in self.c)


@dataclass(frozen=True)
class Vote:
    phase: int
    w_i: tuple
    mu: tuple
    chosen: int
    tally: dict


@dataclass(frozen=True)
class StepRecord:
    s: int
    phase: int
    i_prime: tuple
    c: tuple
    w_i: tuple
    chosen: int
    tally: dict
    cases: tuple


@dataclass(frozen=True)
class DecodeResult:
    message: list
    codeword: list
    error_weight: int
    within_guarantee: bool


def _check_length(code: Code, v):
    if len(v) != code.n:
        raise LengthMismatch(f"received vector has length {len(v)}, expected {code.n}")
    return [code.F.check(x) for x in v]


def init(code: Code, v) -> DecoderState:
    v = _check_length(code, v)
    c = code.curve
    hv = interpolant(c, code.lagrange, v)
    neg_hv = c.scale(c.F.neg(1), hv)
    g = tuple(Pair(c.zero(), eta) for eta in code.eta.etas)
    f = []
    for i in range(c.a):
        yi = c.monomial(0, i)
        f.append(Pair(yi, c.mul(yi, neg_hv)))
    nu = tuple(upoly.lc(eta[i]) for i, eta in enumerate(code.eta.etas))
    s = max(c.delta(hv), code.u)
    return DecoderState(int(s), g, tuple(f), nu, {})


def pairing(state: DecoderState, code: Code) -> Pairing:
    c = code.curve
    a, b, s = c.a, c.b, state.s
    binv = pow(b, -1, a) if a > 1 else 0
    ips, ks, cs = [], [], []
    for i, fi in enumerate(state.f):
        total = a * upoly.deg(fi.zpart[i]) + b * i + s
        ip = (total * binv) % a
        k = (total - b * ip) // a
        ips.append(ip)
        ks.append(k)
        cs.append(upoly.deg(state.g[ip].cpart[ip]) - k)
    return Pairing(tuple(ips), tuple(ks), tuple(cs))


def voting(state: DecoderState, code: Code, pair: Pairing) -> Vote:
    c, F, s = code.curve, code.F, state.s
    first_phase = s > code.u or c.is_gap(s)
    w_i, mu = [], []
    if first_phase:
        for i, fi in enumerate(state.f):
            k = pair.k[i]
            w_i.append(F.neg(upoly.coeff(fi.cpart[pair.i_prime[i]], k)) if k >= 0 else 0)
            mu.append(1)
        return Vote(1, tuple(w_i), tuple(mu), 0, {})

    phi = c.phi(s)
    for i, fi in enumerate(state.f):
        aii = fi.zpart[i]
        lead = c.monomial(upoly.deg(aii), i, upoly.lc(aii))
        _, m = c.leading(c.mul(lead, c.monomial(phi.deg_x, phi.j)))
        mu.append(m)
        coef = upoly.coeff(fi.cpart[pair.i_prime[i]], pair.k[i])
        w_i.append(F.neg(F.div(coef, m)))
    tally = {}
    for wi, cb in zip(w_i, pair.c_bar):
        tally[wi] = tally.get(wi, 0) + cb
    chosen = min(tally, key=lambda x: (-tally[x], x))
    return Vote(2, tuple(w_i), tuple(mu), chosen, tally)


def rebasing(state: DecoderState, code: Code, pair: Pairing, vote: Vote):
    """Return (state at s-1, per-i rebasing case)."""
    c, F, s = code.curve, code.F, state.s
    w = vote.chosen
    if w:
        gbar = [c.subst_z(P, w, s) for P in state.g]
        fbar = [c.subst_z(P, w, s) for P in state.f]
    else:
        gbar, fbar = list(state.g), list(state.f)
    a = c.a
    new_g, new_f, new_nu = [None] * a, [None] * a, list(state.nu)
    cases = []
    for i in range(a):
        ip, ci, wi = pair.i_prime[i], pair.c[i], vote.w_i[i]
        if wi == w:
            new_g[ip], new_f[i] = gbar[ip], fbar[i]
            cases.append(KEEP)
            continue
        if state.nu[ip] == 0:
            raise InternalPivotZero(f"nu[{ip}] vanished at s={s}")
        factor = F.mul(vote.mu[i], F.sub(w, wi))
        coef = F.neg(F.div(factor, state.nu[ip]))
        if ci > 0:
            new_g[ip] = fbar[i]
            new_f[i] = c.pair_add(c.pair_shift(fbar[i], ci), c.pair_scale(coef, gbar[ip]))
            new_nu[ip] = factor
            cases.append(SWAP)
        else:
            new_g[ip] = gbar[ip]
            new_f[i] = c.pair_add(fbar[i], c.pair_scale(coef, c.pair_shift(gbar[ip], -ci)))
            cases.append(CANCEL)
    votes = dict(state.w)
    if vote.phase == 2:
        votes[s] = w
    return DecoderState(s - 1, tuple(new_g), tuple(new_f), tuple(new_nu), votes), tuple(cases)


def step(state: DecoderState, code: Code):
    """One pairing/voting/rebasing round; returns (new state, StepRecord)."""
    pair = pairing(state, code)
    vote = voting(state, code, pair)
    new, cases = rebasing(state, code, pair, vote)
    rec = StepRecord(state.s, vote.phase, pair.i_prime, pair.c, vote.w_i, vote.chosen, vote.tally, cases)
    return new, rec


def iterate(code: Code, v):
    """Yield (state, record) after every round; the first item is (initial state, None)."""
    state = init(code, v)
    yield state, None
    while state.s >= 0:
        state, rec = step(state, code)
        yield state, rec


def _finish(code: Code, v, state: DecoderState) -> DecodeResult:
    message = [state.w[s] for s in code.nongaps]
    codeword = code.encode(message)
    dist = sum(1 for x, y in zip(v, codeword) if x != y)
    return DecodeResult(message, codeword, dist, 2 * dist < code.du)


def decode(code: Code, v) -> DecodeResult:
    state = None
    for state, _ in iterate(code, v):
        pass
    return _finish(code, v, state)


def decode_trace(code: Code, v):
    """Decode and return (DecodeResult, list of StepRecord, one per s)."""
    records = []
    state = None
    for state, rec in iterate(code, v):
        if rec is not None:
            records.append(rec)
    return _finish(code, v, state), records


# -- invariant checks ---------------------------------------------------------


def shifted_word(code: Code, v, votes: dict, s: int) -> list:
    """v^(s) = v - sum_{s' > s} ev(w_{s'} phi_{s'})."""
    c, F = code.curve, code.F
    out = list(v)
    for sp, wv in votes.items():
        if sp > s and wv:
            m = c.phi(sp)
            ev = code.evaluate(c.monomial(m.deg_x, m.j, wv))
            out = [F.sub(x, e) for x, e in zip(out, ev)]
    return out


def basis_violations(code: Code, v, state: DecoderState) -> list:
    """List the structural invariants the state breaks (empty when sound)."""
    c = code.curve
    bad = []
    vs = shifted_word(code, v, state.w, state.s)
    for name, elems in (("g", state.g), ("f", state.f)):
        for i, P in enumerate(elems):
            for j, pt in enumerate(code.points):
                if c.pair_eval(P, pt, vs[j]):
                    bad.append(f"{name}_{i} does not vanish at point {j}")
                    break
    seen = set()
    for i in range(c.a):
        mg, cg = c.lt_s(state.g[i], state.s)
        if mg.has_z or mg.j != i:
            bad.append(f"LT(g_{i}) = {mg} is not a multiple of y^{i}")
        if cg != state.nu[i]:
            bad.append(f"nu_{i} = {state.nu[i]} but LC(g_{i}) = {cg}")
        mf, _ = c.lt_s(state.f[i], state.s)
        if not mf.has_z or mf.j != i:
            bad.append(f"LT(f_{i}) = {mf} is not a multiple of y^{i} z")
        seen.update({(mg.has_z, mg.j), (mf.has_z, mf.j)})
    if len(seen) != 2 * c.a:
        bad.append("leading terms do not hit distinct module generators")
    total = sum(upoly.deg(P.zpart[i]) for i, P in enumerate(state.f))
    total += sum(upoly.deg(P.cpart[i]) for i, P in enumerate(state.g))
    if total != code.n:
        bad.append(f"degree sum {total} != n = {code.n}")
    for i, P in enumerate(state.g):
        if upoly.deg(P.cpart[i]) > code.eta.lt_deg_x[i]:
            bad.append(f"deg d_{i},{i} exceeds deg_x LT(eta_{i})")
    return bad
