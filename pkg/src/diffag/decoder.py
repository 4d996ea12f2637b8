"""Interpolation-based decoding of differential AG codes.

The decoder keeps a Groebner basis of the interpolation module as 2*gamma
rows.  Row ``g_i`` has its leading term on the differential side in position
i; row ``f_i`` has its leading term on the z side on y_i.  Each row is a pair
``(zpart, wpart)`` of gamma polynomials: ``zpart[j]`` multiplies y_j z and
``wpart[j]`` multiplies the Apery differential w_j.

Starting from weight s = delta(h_v), each iteration computes a vote for the
message coefficient of the monomial of weight s (when s is in S) and moves
the basis from weight s to s - 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from collections import Counter

from . import poly as P
from .analysis import d_omega_tau
from .codedata import CodeData, weighted_lead, zero_vec


class DecodingFailure(Exception):
    """The received word is too far from every codeword to be decoded."""

    def __init__(self, message, s=None, degree_sum=None):
        super().__init__(message)
        self.s = s
        self.degree_sum = degree_sum
        self.trace = None


class InvariantViolation(AssertionError):
    pass


@dataclass
class Vote:
    m: int
    candidates: list
    mu: list
    weights: list
    histogram: dict


@dataclass
class DecoderState:
    code: CodeData
    s: int
    G: list
    F: list
    nu: list
    tau: int
    messages: dict = field(default_factory=dict)
    finished: bool = False
    trace: list | None = None
    iterations: int = 0
    max_degree: int = 0
    stop: str = ""

    def diag_degrees(self):
        """(deg a_ii, deg d_ii) per i."""
        return ([P.deg(self.F[i][0][i]) for i in range(self.code.gamma)],
                [P.deg(self.G[i][1][i]) for i in range(self.code.gamma)])

    @property
    def codeword(self) -> list[int]:
        return message_codeword(self.code, self.messages)


def message_codeword(code: CodeData, messages) -> list[int]:
    """Codeword for message coefficients, given as a dict s -> m_s or a list in S order."""
    F = code.field
    if not isinstance(messages, dict):
        messages = dict(zip(code.S, messages))
    out = [0] * code.n
    for s, row in zip(code.S, code.gen):
        m = messages.get(s, 0)
        if m:
            out = [F.add(o, F.mul(m, r)) for o, r in zip(out, row)]
    return out


def _row_degree(row) -> int:
    return max((len(p) - 1 for half in row for p in half), default=-1)


def _track_degree(state):
    d = max(_row_degree(r) for r in state.G + state.F)
    if d > state.max_degree:
        state.max_degree = d


def lagrange_combination(code: CodeData, v) -> list:
    """h_v = sum v_i h_i."""
    F = code.field
    hv = zero_vec(code.gamma)
    for vi, hi in zip(v, code.h):
        if vi:
            hv = [P.addmul(F, a, vi, 0, b) for a, b in zip(hv, hi)]
    return hv


def decode_init(code: CodeData, v, trace: bool = False) -> DecoderState:
    if len(v) != code.n:
        raise ValueError(f"received word has length {len(v)}, expected {code.n}")
    for c in v:
        code.field.check(c)
    F = code.field
    gamma = code.gamma
    _, tau = d_omega_tau(code)
    hv = lagrange_combination(code, v)
    N = code.delta(hv)
    state = DecoderState(code=code, s=N, G=[], F=[], nu=[], tau=tau,
                         trace=[] if trace else None)
    if N <= 0:
        # h_v already lies in Omega(-D+G): read the message off directly
        state.messages = {s: 0 for s in code.S}
        for s, c in code.expand(hv).items():
            if s not in code.S_set:
                raise DecodingFailure(f"h_v has a term at {s} outside S", s=s)
            state.messages[s] = c
        state.finished = True
        state.stop = "S1"
        if state.trace is not None:
            state.trace.append({"s": N, "sum_deg_a": 0, "votes": {}, "action": "S1 shortcut"})
        return state
    for i in range(gamma):
        state.G.append((zero_vec(gamma), [list(p) for p in code.eta[i]]))
        z = zero_vec(gamma)
        z[i] = [1]
        w = [P.neg(F, p) for p in code.wmul(z, hv)]
        state.F.append((z, w))
        state.nu.append(P.lc(code.eta[i][i]))
    _track_degree(state)
    return state


def f_check(state: DecoderState):
    """Failure if the z-side delta set is larger than tau."""
    total = sum(P.deg(state.F[i][0][i]) for i in range(state.code.gamma))
    if total > state.tau:
        return DecodingFailure(
            f"Decoding Failure at s = {state.s}: sum deg a_ii = {total} > tau = {state.tau}",
            s=state.s, degree_sum=total)
    return None


def divide_differential(code: CodeData, phi, psi, s: int) -> dict:
    """Solve phi * w = -psi for w supported on monomials of weight <= s.

    Returns the coefficients of w keyed by weight; raises DecodingFailure when
    no such w exists.
    """
    F = code.field
    gamma = code.gamma
    rho_phi, ipos, lc_phi = weighted_lead(phi, code.a, gamma)
    rem = [P.neg(F, p) for p in psi]
    out = {}
    while any(rem):
        w, _, c = weighted_lead(rem, code.b, gamma)
        t = w - rho_phi
        if t > s or not code.is_nongap(t):
            raise DecodingFailure(f"Decoding Failure at s = {s}: psi not divisible by phi", s=s)
        it, kt = code.phibar_index(t)
        lead = F.mul(lc_phi, code.wmul_lc[ipos][it])
        coef = F.div(c, lead)
        out[t] = coef
        prod = code.wmul(phi, code.phibar(t, coef))
        rem = [P.sub(F, r, p) for r, p in zip(rem, prod)]
    return out


def q_check(state: DecoderState):
    """Early termination through a Q-polynomial; returns the message map or None."""
    code = state.code
    for i in range(code.gamma):
        phi, psi = state.F[i]
        wdeg = code.gamma * P.deg(phi[i]) + code.a[i] + state.s
        if wdeg + state.tau + 2 * code.genus - 1 <= code.degG:
            coeffs = divide_differential(code, phi, psi, state.s)
            for t in coeffs:
                if t not in code.S_set:
                    raise DecodingFailure(
                        f"Decoding Failure at s = {state.s}: quotient has a term at {t} outside S",
                        s=state.s)
            return i, coeffs
    return None


def pairing(state: DecoderState):
    """Per i: (i', k_i, c_i)."""
    code, s = state.code, state.s
    gamma = code.gamma
    out = []
    for i in range(gamma):
        ip = (i + s) % gamma
        num = code.a[i] + s - code.b[ip]
        k = P.deg(state.F[i][0][i]) + num // gamma
        c = P.deg(state.G[ip][1][ip]) - k
        out.append((ip, k, c))
    return out


def voting(state: DecoderState, pairs) -> Vote:
    code, s = state.code, state.s
    F = code.field
    in_S = s in code.S_set
    cands, mus, weights = [], [], []
    for i, (ip, k, c) in enumerate(pairs):
        coef = P.coeff_at(state.F[i][1][ip], k)
        if in_S:
            mu = F.mul(P.lc(state.F[i][0][i]), code.wmul_lc[i][s % code.gamma])
            cands.append(F.neg(F.div(coef, mu)))
        else:
            mu = 1
            cands.append(F.neg(coef))
        mus.append(mu)
        weights.append(max(c, 0))
    hist = Counter()
    for mi, w in zip(cands, weights):
        hist[mi] += w
    if in_S:
        best = max(hist.values())
        m = min(v for v, w in hist.items() if w == best)
        state.messages[s] = m
    else:
        m = 0
    return Vote(m, cands, mus, weights, dict(hist))


def _substitute(code: CodeData, row, m: int, s: int):
    """row with z replaced by z + m * phibar_s."""
    if m == 0:
        return row
    F = code.field
    z, w = row
    i_s, k_s = code.phibar_index(s)
    w = list(w)
    for j, zj in enumerate(z):
        if not zj:
            continue
        t = P.scale(F, m, zj)
        for pos, part in enumerate(code.wmul_table[j][i_s]):
            if part:
                w[pos] = P.add(F, w[pos], P.shift(P.mul(F, t, part), k_s))
    return (z, w)


def _combine(F, row1, c, k, row2):
    """row1 + c * x^k * row2"""
    return ([P.addmul(F, a, c, k, b) for a, b in zip(row1[0], row2[0])],
            [P.addmul(F, a, c, k, b) for a, b in zip(row1[1], row2[1])])


def _xshift(row, k):
    return ([P.shift(p, k) for p in row[0]], [P.shift(p, k) for p in row[1]])


def rebasing(state: DecoderState, pairs, vote: Vote) -> list[str]:
    code, s = state.code, state.s
    F = code.field
    m = vote.m
    G = [_substitute(code, r, m, s) for r in state.G]
    Fr = [_substitute(code, r, m, s) for r in state.F]
    newG, newF, newnu = list(G), list(Fr), list(state.nu)
    actions = []
    for i, (ip, k, c) in enumerate(pairs):
        mi = vote.candidates[i]
        if mi == m:
            actions.append("keep")
            continue
        d = F.mul(vote.mu[i], F.sub(m, mi))
        ratio = F.neg(F.div(d, state.nu[ip]))
        if c > 0:
            newG[ip] = Fr[i]
            newF[i] = _combine(F, _xshift(Fr[i], c), ratio, 0, G[ip])
            newnu[ip] = d
            actions.append(f"swap{c}")
        else:
            newF[i] = _combine(F, Fr[i], ratio, -c, G[ip])
            actions.append(f"reduce{-c}")
    state.G, state.F, state.nu = newG, newF, newnu
    state.s -= 1
    state.iterations += 1
    _track_degree(state)
    return actions


def check_invariants(state: DecoderState):
    """Structural checks on the current basis (used by the property suite)."""
    code = state.code
    gamma = code.gamma
    da, dd = state.diag_degrees()
    if sum(da) + sum(dd) != code.n:
        raise InvariantViolation(f"conservation broken at s = {state.s}: {da} {dd}")
    for i in range(gamma):
        z, w = state.G[i]
        if P.lc(w[i]) != state.nu[i] or state.nu[i] == 0:
            raise InvariantViolation(f"nu_{i} != LC(d_ii) at s = {state.s}")
        lt = leading(code, state.G[i], state.s)
        if lt[:2] != ("w", i):
            raise InvariantViolation(f"LT(g_{i}) = {lt} at s = {state.s}")
        lt = leading(code, state.F[i], state.s)
        if lt[:2] != ("z", i):
            raise InvariantViolation(f"LT(f_{i}) = {lt} at s = {state.s}")


def leading(code: CodeData, row, s: int):
    """Leading term of f z + w under >_s as (side, position, x-degree, weight).

    Ties go to the z side.
    """
    z, w = row
    wz, pz, _ = weighted_lead(z, code.a, code.gamma)
    ww, pw, _ = weighted_lead(w, code.b, code.gamma)
    wz = wz + s
    if pz is None and pw is None:
        return (None, None, None, P.NEG_INF)
    if pw is None or (pz is not None and wz >= ww):
        return ("z", pz, len(z[pz]) - 1, wz)
    return ("w", pw, len(w[pw]) - 1, ww)


def run(code: CodeData, v, trace: bool = False, check: bool = False,
        observer=None) -> DecoderState:
    """Run the decoder to completion and return the final state.

    ``observer(state)`` is called on every basis B^(s) before step F.
    Raises DecodingFailure.
    """
    state = decode_init(code, v, trace=trace)
    if state.finished:
        return state
    s0 = min(code.S)
    while state.s >= s0:
        if check:
            check_invariants(state)
        if observer is not None:
            observer(state)
        failure = f_check(state)
        if failure is not None:
            if state.trace is not None:
                state.trace.append({"s": state.s, "sum_deg_a": failure.degree_sum,
                                    "votes": {}, "action": "F failure"})
            failure.trace = state.trace
            raise failure
        sum_a = sum(state.diag_degrees()[0])
        qres = q_check(state)
        if qres is not None:
            i, coeffs = qres
            for t in code.S:
                if t <= state.s:
                    state.messages[t] = coeffs.get(t, 0)
            state.finished = True
            state.stop = f"Q at s = {state.s}"
            if state.trace is not None:
                state.trace.append({"s": state.s, "sum_deg_a": sum_a, "votes": {},
                                    "action": f"Q-polynomial f_{i}"})
            return state
        pairs = pairing(state)
        vote = voting(state, pairs)
        s_here = state.s
        actions = rebasing(state, pairs, vote)
        if state.trace is not None:
            state.trace.append({"s": s_here, "sum_deg_a": sum_a,
                                "votes": vote.histogram if s_here in code.S_set else {},
                                "action": (f"m = {vote.m}; " if s_here in code.S_set else "")
                                + ",".join(actions)})
    if check:
        check_invariants(state)
    state.finished = True
    state.stop = "S3"
    return state


def decode(code: CodeData, v) -> list[int]:
    """Decode a received word to a codeword; raises DecodingFailure."""
    return run(code, v).codeword


def format_trace(trace) -> list[str]:
    lines = []
    for t in trace:
        votes = " ".join(f"{k}:{w}" for k, w in sorted(t["votes"].items()))
        lines.append(f"s={t['s']} sum_deg_a={t['sum_deg_a']} votes=[{votes}] action={t['action']}")
    return lines
