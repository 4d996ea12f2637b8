"""Decoding capacity and minimum-distance bounds computed from code data.

Integer sets (Weierstrass semigroup, jump sets) are handled as sorted lists
truncated at an explicit horizon; beyond the default horizon
``2|G| + 4g + gamma`` every set involved is cofinite with unit steps.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import poly as P
from .codedata import CodeData, CodeDataError


class AnalysisError(ValueError):
    pass


def default_horizon(code: CodeData) -> int:
    return 2 * abs(code.degG) + 4 * code.genus + code.gamma


# -- nu and the bound ------------------------------------------------------

def nu_formal(code: CodeData, s: int) -> int:
    """(1/gamma) * sum_i max(delta(eta_i') - a_i - s, 0) with i' = (i+s) mod gamma."""
    g = code.gamma
    total = 0
    for i in range(g):
        ip = (i + s) % g
        total += max(code.eta_delta[ip] - code.a[i] - s, 0)
    if total % g:
        raise CodeDataError("eta weights are inconsistent with the Apery data")
    return total // g


def nu(code: CodeData, s: int) -> int:
    if s not in code.S_set:
        raise AnalysisError(f"{s} is not in S")
    return nu_formal(code, s)


def nu_from_delta_sets(code: CodeData, s: int) -> int:
    """|Delta(J) & Sigma(R phibar_s)|, counted monomial by monomial."""
    g = code.gamma
    count = 0
    top = max(code.eta_delta)
    for lam in range(0, top - s + 1):
        if not code.in_lambda(lam):
            continue
        t = lam + s
        i, k = code.phibar_index(t)
        if k < code.eta_degrees[i]:
            count += 1
    return count


def d_omega_tau(code: CodeData) -> tuple[int, int]:
    """(d_Omega, tau); checks d_Omega against the Goppa bound."""
    cached = code.__dict__.get("_d_omega_tau")
    if cached is not None:
        return cached
    d = min(nu_formal(code, s) for s in code.S)
    if d < code.degG - 2 * code.genus + 2:
        raise CodeDataError(f"d_Omega = {d} is below the Goppa bound")
    out = (d, (d - 1) // 2)
    code.__dict__["_d_omega_tau"] = out
    return out


def goppa_bound(code: CodeData) -> int:
    return code.degG - 2 * code.genus + 2


# -- semigroup helpers -----------------------------------------------------

def lambda_list(code: CodeData, count: int) -> list[int]:
    """The first ``count`` nongaps lambda_0 < lambda_1 < ... of the semigroup."""
    out = []
    x = 0
    while len(out) < count:
        if code.in_lambda(x):
            out.append(x)
        x += 1
    return out


def lambda_t(code: CodeData, t: int) -> int:
    return lambda_list(code, t + 1)[t]


def tau_M(code: CodeData, s: int) -> int:
    return (nu_formal(code, s) - 1) // 2


def tau_Q(code: CodeData, s: int) -> int:
    """max{t : lambda_t + s + t + 2g - 1 <= |G|}; -1 if no t qualifies."""
    t = -1
    lams = lambda_list(code, max(code.degG - s + 2, 1) if code.degG - s + 2 > 0 else 1)
    for cand, lam in enumerate(lams):
        if lam + s + cand + 2 * code.genus - 1 <= code.degG:
            t = cand
        else:
            break
    return t


def s_Q(code: CodeData, t: int) -> int:
    """Weight by which step Q has fired when t <= tau errors occurred."""
    _, tau = d_omega_tau(code)
    return code.degG - lambda_t(code, t) - tau - 2 * code.genus + 1


@dataclass
class CapacityProfile:
    rows: dict            # s in S -> (nu, tau_M, tau_Q)
    d_omega: int
    tau: int
    s_Q_tau: int
    Lambda: list
    Lambda_bar: list
    Omega_bar: list
    horizon: int
    extra: dict = field(default_factory=dict)


def tau_profiles(code: CodeData) -> dict:
    """Per s in S: (tau_M(s), tau_Q(s)); plus s_Q(t) for 0 <= t <= tau."""
    d, tau = d_omega_tau(code)
    per_s = {s: (tau_M(code, s), tau_Q(code, s)) for s in code.S}
    sq = {t: s_Q(code, t) for t in range(tau + 1)}
    return {"per_s": per_s, "s_Q": sq}


# -- checks of the capacity inequalities -----------------------------------

def _omega_range(code, lo, hi):
    return [s for s in range(lo, hi + 1) if code.is_nongap(s)]


def check_nu_lower_bound(code: CodeData) -> list[str]:
    bad = []
    for s in code.S:
        v = nu_formal(code, s)
        if v < code.degG - 2 * code.genus + 2 - s:
            bad.append(f"nu({s}) = {v} < |G| - 2g + 2 - s")
        alt = nu_from_delta_sets(code, s)
        if alt != v:
            bad.append(f"nu({s}): formula {v} != delta-set count {alt}")
    return bad


def check_capacity_sandwiches(code: CodeData, lo: int | None = None) -> list[str]:
    """Both sandwich inequalities, their equality ranges, and the gap formula."""
    G, g = code.degG, code.genus
    if lo is None:
        lo = -default_horizon(code)
    bad = []
    for s in _omega_range(code, lo, G - 2 * g + 2):
        tm = tau_M(code, s)
        low, high = (G - 2 * g + 1 - s) // 2, (G - g + 1 - s) // 2
        if not low <= tm <= high:
            bad.append(f"tau_M({s}) = {tm} outside [{low}, {high}]")
        if s <= G - 4 * g + 2 and tm != low:
            bad.append(f"tau_M({s}) = {tm} != left bound {low}")
        tq = tau_Q(code, s)
        if tq > tm:
            bad.append(f"tau_Q({s}) = {tq} > tau_M({s}) = {tm}")
        if s <= G - 5 * g + 1:
            want = (g + 1) // 2 if (G - s) % 2 else g // 2
            if tm - tq != want:
                bad.append(f"tau_M - tau_Q at {s} is {tm - tq}, expected {want}")
    for s in _omega_range(code, lo, default_horizon(code)):
        tq = tau_Q(code, s)
        low, high = (G - 3 * g + 1 - s) // 2, (G - 2 * g + 1 - s) // 2
        if not low <= tq <= high and tq >= 0:
            bad.append(f"tau_Q({s}) = {tq} outside [{low}, {high}]")
        if tq < 0 and low >= 0:
            bad.append(f"tau_Q({s}) undefined but lower bound is {low}")
        if s <= G - 5 * g + 1 and tq != low:
            bad.append(f"tau_Q({s}) = {tq} != left bound {low}")
    return bad


def check_tau_identities(code: CodeData) -> list[str]:
    d, tau = d_omega_tau(code)
    bad = []
    if min(tau_M(code, s) for s in code.S) != tau:
        bad.append("tau != min tau_M(s)")
    H = default_horizon(code)
    cands = [s for s in range(-H - code.n, H + 1) if tau_Q(code, s) >= tau]
    if not cands or max(cands) != s_Q(code, tau):
        bad.append(f"s_Q(tau) = {s_Q(code, tau)} != max{{s : tau_Q(s) >= tau}}")
    return bad


# -- jump sets -------------------------------------------------------------

def omega_bar(code: CodeData, lo: int, hi: int) -> list[int]:
    return _omega_range(code, lo, hi)


def _function_space(code: CodeData, i: int):
    """Evaluation vectors of a basis of L(G + iQ) at the points of D."""
    F = code.field
    curve = code.curve
    kind = curve.get("type")
    if kind == "hermitian":
        from .hermitian import eval_function, lbar_data
        q = curve["q"]
        basis, c, offset = _cached(code, "lbar", lambda: lbar_data(F, q, curve["gO"], curve["gQ"]))
        rows = []
        for j, psi in enumerate(basis):
            r0 = code.gamma * P.deg(psi[j]) + code.a[j]
            k = 0
            while r0 + code.gamma * k + offset <= i:
                f = [P.shift(p, k) for p in psi]
                rows.append([F.div(eval_function(F, f, pt), F.pow(pt[1], c))
                             for pt in code.points])
                k += 1
        return rows
    if kind == "line":
        g = curve["g"]
        dg = len(g) - 1
        rows = []
        for k in range(0, dg + i):
            rows.append([F.div(F.pow(x, k), P.evaluate(F, g, x)) for x in code.xs])
        return rows
    raise AnalysisError(f"unsupported curve description {curve!r}")


def _cached(code, key, make):
    store = code.__dict__.setdefault("_analysis_cache", {})
    if key not in store:
        store[key] = make()
    return store[key]


def _lbar_jumps(code: CodeData, lo: int, hi: int) -> list[int]:
    curve = code.curve
    kind = curve.get("type")
    if kind == "hermitian":
        from .hermitian import lbar_data
        basis, _, offset = _cached(code, "lbar", lambda: lbar_data(
            code.field, curve["q"], curve["gO"], curve["gQ"]))
        starts = [code.gamma * P.deg(psi[j]) + code.a[j] + offset for j, psi in enumerate(basis)]
        return [s for s in range(lo, hi + 1)
                if any(s >= st and (s - st) % code.gamma == 0 for st in starts)]
    if kind == "line":
        dg = len(curve["g"]) - 1
        return [s for s in range(lo, hi + 1) if s >= 1 - dg]
    raise AnalysisError(f"unsupported curve description {curve!r}")


def eval_rank(code: CodeData, i: int) -> int:
    """dim C_i = dim ev(L(G + iQ))."""
    ranks = _cached(code, "ranks", dict)
    if i not in ranks:
        rows = _function_space(code, i)
        ranks[i] = P.rank(code.field, rows) if rows else 0
    return ranks[i]


def jump_sets(code: CodeData, horizon: int | None = None):
    """(Lambda_bar, Omega_bar) truncated to [-horizon, horizon].

    Cross-checks Omega_bar against the jumps of the evaluation codes C_i.
    """
    H = default_horizon(code) if horizon is None else horizon
    if H < code.degG:
        raise AnalysisError(f"horizon {H} is smaller than |G| = {code.degG}")
    lbar = _lbar_jumps(code, -H, H + 1)
    obar = omega_bar(code, -H, H)
    lset = set(lbar)
    for s in range(-H, H + 1):
        rhs = (-s + 1 not in lset) or eval_rank(code, -s) != eval_rank(code, -s + 1)
        if (s in set(obar)) != rhs:
            raise AnalysisError(f"jump-set cross-check failed at s = {s}")
    return [s for s in lbar if s <= H], obar


@dataclass
class BoundComparison:
    d_omega_pairs: int
    d_L: int | None
    feng_rao: int | None


def d_bounds_compare(code: CodeData, horizon: int | None = None) -> BoundComparison:
    H = default_horizon(code) if horizon is None else horizon
    lbar, obar = jump_sets(code, H)
    lset, oset = set(lbar), set(obar)
    min_l = min(lbar)
    min_o = min(obar)
    if 1 - min_o > H or 1 - min_l > H:
        raise AnalysisError(f"horizon {H} too small for the pair counts")

    d_om = None
    for s in obar:
        if s > 0:
            break
        cnt = sum(1 for i in range(0, 1 - s - min_l + 1)
                  if code.in_lambda(i) and (1 - s - i) in lset)
        d_om = cnt if d_om is None else min(d_om, cnt)
    d_L = None
    for s in lbar:
        if s > 0:
            break
        cnt = sum(1 for i in range(0, 1 - s - min_o + 1)
                  if code.in_lambda(i) and code.is_nongap(1 - s - i))
        d_L = cnt if d_L is None else min(d_L, cnt)
    if code.degG >= 2 * code.genus - 1:
        d, _ = d_omega_tau(code)
        if d_om != d:
            raise AnalysisError(f"pair-count bound {d_om} != d_Omega = {d}")
    fr = feng_rao(code, H) if _one_point(code) else None
    return BoundComparison(d_om, d_L, fr)


def _one_point(code: CodeData) -> bool:
    c = code.curve
    return c.get("type") == "hermitian" and c.get("gO") == 0


def feng_rao(code: CodeData, horizon: int | None = None) -> int:
    """min over k in H*, k > m, of #{(i, j) in H* x H* : i + j = k} for G = mQ."""
    if not _one_point(code):
        raise AnalysisError("Feng-Rao count needs a one-point divisor G = mQ")
    m = code.curve["gQ"]
    H = default_horizon(code) if horizon is None else horizon
    top = m + H
    hstar = [i for i in range(0, top + 1)
             if eval_rank(code, i - m) != eval_rank(code, i - m - 1)]
    if len(hstar) != code.n:
        raise AnalysisError("horizon too small to see all of H*")
    hs = set(hstar)
    best = None
    for k in hstar:
        if k <= m:
            continue
        cnt = sum(1 for i in hstar if (k - i) in hs)
        best = cnt if best is None else min(best, cnt)
    return best


# -- report ----------------------------------------------------------------

def params_report(code: CodeData) -> str:
    d, tau = d_omega_tau(code)
    lines = [
        f"n = {code.n}, k = {code.k}, g = {code.genus}, gamma = {code.gamma}, |G| = {code.degG}",
        f"a = {list(code.a)}, b = {list(code.b)}",
        "",
        f"{'s':>5} {'nu(s)':>6} {'tau_M':>6} {'tau_Q':>6}",
        "-" * 26,
    ]
    for s in code.S:
        lines.append(f"{s:>5} {nu(code, s):>6} {tau_M(code, s):>6} {tau_Q(code, s):>6}")
    lines.append("")
    lines.append(f"d_Omega = {d}, tau = {tau}")
    lines.append(f"Goppa bound = {goppa_bound(code)}")
    lines.append(f"s_Q(tau) = {s_Q(code, tau)}")
    try:
        cmp = d_bounds_compare(code)
        lines.append(f"d_Omega (pair count) = {cmp.d_omega_pairs}, d_L = {cmp.d_L}")
        if cmp.feng_rao is not None:
            lines.append(f"Feng-Rao = {cmp.feng_rao}")
    except AnalysisError as exc:
        lines.append(f"jump-set bounds unavailable: {exc}")
    return "\n".join(lines)
