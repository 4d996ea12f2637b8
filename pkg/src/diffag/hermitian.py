"""Code data for differential codes on the Hermitian curve y^q + y = x^(q+1).

The curve lives over GF(q^2).  Q is the point at infinity, O the origin, and
D is the sum of the remaining q^3 - 1 affine points.  Divisors are
``G = gO*O + gQ*Q``.

Functions are kept in R = F[x, y] with basis 1, y, ..., y^(q-1) over F[x], so
rho(x^k y^j) = q*k + (q+1)*j.  Differentials are f * w_c with
``w_c = dx / (y^c (x^(q^2) - x))``; c = 0 unless G has a pole of order >= 2 at
O.  Valuations at O are read from the power series of y in the uniformizer x.
"""
from __future__ import annotations

from dataclasses import replace

from . import poly as P
from .codedata import CodeData, CodeDataError, validate, weighted_lead, zero_vec
from .field import GF, prime_power


class BuildError(CodeDataError):
    pass


# -- the ring R ------------------------------------------------------------

def reduce_power(F: GF, q: int, f):
    """Multiply a function by y, reducing with y^q = x^(q+1) - y."""
    top = f[q - 1]
    out = [[]] + [list(p) for p in f[:-1]]
    if top:
        out[0] = P.add(F, out[0], P.shift(top, q + 1))
        out[1] = P.sub(F, out[1], top)
    return out


def y_power(F: GF, q: int, j: int):
    f = zero_vec(q)
    f[0] = [1]
    for _ in range(j):
        f = reduce_power(F, q, f)
    return f


def ring_mul(F: GF, q: int, f, g):
    out = zero_vec(q)
    for j, gj in enumerate(g):
        if not gj:
            continue
        yj = f
        for _ in range(j):
            yj = reduce_power(F, q, yj)
        out = [P.add(F, o, P.mul(F, gj, p)) for o, p in zip(out, yj)]
    return out


def rho_weights(q: int) -> list[int]:
    return [(q + 1) * j for j in range(q)]


def eval_function(F: GF, f, pt) -> int:
    a, b = pt
    acc = 0
    bj = 1
    for part in f:
        if part:
            acc = F.add(acc, F.mul(P.evaluate(F, part, a), bj))
        bj = F.mul(bj, b)
    return acc


def curve_points(F: GF, q: int) -> list[tuple[int, int]]:
    """Affine points other than the origin, sorted by encoded (x, y)."""
    pts = []
    for a in F.elements():
        rhs = F.pow(a, q + 1)
        for b in F.elements():
            if F.add(F.pow(b, q), b) == rhs and (a, b) != (0, 0):
                pts.append((a, b))
    return pts


# -- local structure at O --------------------------------------------------

def _series_mul(F: GF, s, t, prec):
    out = [0] * prec
    for i, a in enumerate(s[:prec]):
        if a:
            for j, b in enumerate(t[: prec - i]):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return out


def y_series_at_origin(F: GF, q: int, prec: int) -> list[int]:
    """Power series of y in x at O, modulo x^prec."""
    xq1 = [0] * prec
    if q + 1 < prec:
        xq1[q + 1] = 1
    y = [0] * prec
    for _ in range(prec + 1):
        yq = [1] + [0] * (prec - 1) if prec else []
        for _ in range(q):
            yq = _series_mul(F, yq, y, prec)
        y = [F.sub(a, b) for a, b in zip(xq1, yq)]
    return y


def vanishing_module_basis(F: GF, q: int, e: int):
    """Apery basis of M_e = {f in R : v_O(f) >= e} over F[x].

    Returns a list indexed by class j (rho = j mod q) of reduced monic
    functions of minimal rho in that class.
    """
    bound = q * e + (q + 1) * (q - 1)
    monos = [(k, j) for j in range(q) for k in range(bound // q + 1)
             if q * k + (q + 1) * j <= bound]
    monos.sort(key=lambda kj: -(q * kj[0] + (q + 1) * kj[1]))
    if e > 0:
        ys = y_series_at_origin(F, q, e)
        ypow = [[1] + [0] * (e - 1)]
        for _ in range(1, q):
            ypow.append(_series_mul(F, ypow[-1], ys, e))
        cols = []
        for k, j in monos:
            ser = [0] * k + ypow[j][: max(0, e - k)]
            cols.append(ser[:e])
        rows = [[cols[c][t] for c in range(len(monos))] for t in range(e)]
        ker = P.kernel(F, rows, len(monos))
    else:
        ker = P.identity(len(monos))
    red, pivots = P.rref(F, ker)
    best = [None] * q
    for row, pc in zip(red, pivots):
        k, j = monos[pc]
        if best[j] is None or k < best[j][0]:
            best[j] = (k, row)
    out = []
    for j in range(q):
        row = best[j][1]
        f = zero_vec(q)
        for c, (k, jj) in zip(row, monos):
            if c:
                f[jj] = P.addmul(F, f[jj], c, k, [1])
        out.append(f)
    return out


def to_apery(F: GF, q: int, f, basis):
    """Coordinates of f in M_e over F[x] in terms of ``basis`` (by class)."""
    wts = rho_weights(q)
    lead = [weighted_lead(b, wts, q) for b in basis]
    rem = [list(p) for p in f]
    coords = [[] for _ in range(q)]
    while any(rem):
        r, pos, c = weighted_lead(rem, wts, q)
        j = pos
        rb, _, cb = lead[j]
        kk, m = divmod(r - rb, q)
        if kk < 0 or m:
            raise BuildError("function does not lie in the module")
        t = F.div(c, cb)
        coords[j] = P.addmul(F, coords[j], t, kk, [1])
        rem = [P.addmul(F, rp, F.neg(t), kk, bp) for rp, bp in zip(rem, basis[j])]
    return coords


def _ceil_div(a, b):
    return -((-a) // b)


def lbar_data(F: GF, q: int, gO: int, gQ: int):
    """Function-space data for L(G + sQ).

    Returns (basis, c, offset): L(G + sQ) is spanned by x^k basis[j] / y^c with
    rho(x^k basis[j]) + offset <= s.
    """
    c = max(0, _ceil_div(gO, q + 1))
    e = c * (q + 1) - gO
    basis = vanishing_module_basis(F, q, e)
    offset = -c * (q + 1) - gQ
    return basis, c, offset


# -- builder ---------------------------------------------------------------

def build_hermitian(q: int, gO: int, gQ: int, prim=None) -> CodeData:
    """Code data of C_Omega(D, gO*O + gQ*Q) on the Hermitian curve over GF(q^2)."""
    p, r = prime_power(q)
    F = GF(p, 2 * r, prim)
    genus = q * (q - 1) // 2
    gamma = q
    pts = curve_points(F, q)
    n = len(pts)
    degG = gO + gQ
    if degG >= n + 2 * genus - 1:
        raise BuildError(f"deg G = {degG} leaves no nonzero codewords")
    a = rho_weights(q)

    # differentials: f * w_c with v_O(f) >= e
    c = max(0, _ceil_div(-(gO + 1), q + 1))
    e = gO + 1 + c * (q + 1)
    psi = vanishing_module_basis(F, q, e)
    offset = gQ - c * (q + 1) - (q**3 + 2 * genus - 2)
    b = [None] * gamma
    pos_of_class = [None] * q
    for j, f in enumerate(psi):
        d = weighted_lead(f, a, q)[0] + offset
        pos = d % gamma
        b[pos] = d
        pos_of_class[j] = pos
    omega = [None] * gamma
    for j, pos in enumerate(pos_of_class):
        omega[pos] = psi[j]

    # residues res_P(f w_c) = f(P) / (y(P)^c u'(x(P))) with u'(a) = -1
    base_res = []
    for i in range(gamma):
        row = []
        for pt in pts:
            val = eval_function(F, omega[i], pt)
            den = F.neg(F.pow(pt[1], c))
            row.append(F.div(val, den))
        base_res.append(tuple(row))
    ring_eval = [tuple(F.pow(pt[1], j) for pt in pts) for j in range(q)]

    def as_differential(f):
        coords = to_apery(F, q, f, psi)
        out = zero_vec(gamma)
        for j, part in enumerate(coords):
            out[pos_of_class[j]] = part
        return out

    wmul_table = tuple(
        tuple(as_differential(ring_mul(F, q, y_power(F, q, i), omega[j]))
              for j in range(gamma))
        for i in range(gamma))
    rmul = tuple(tuple(y_power(F, q, i + j) for j in range(q)) for i in range(q))

    eta, delta_monos = _kernel_basis(F, gamma, b, pts, base_res, q * q)
    if len(delta_monos) != n:
        raise BuildError(f"|Delta(J)| = {len(delta_monos)} != n = {n}")
    h = _lagrange(F, gamma, b, pts, base_res, delta_monos)

    S = tuple(sorted((gamma * k + b[i] for i, k in delta_monos
                      if gamma * k + b[i] <= 0), reverse=True))
    if not S:
        raise BuildError("the code is trivial (dimension 0)")

    code = _assemble(F, n, genus, gamma, a, b, degG, S, eta, h, wmul_table,
                     pts, base_res, ring_eval, rmul,
                     {"type": "hermitian", "q": q, "gO": gO, "gQ": gQ})
    check_degree_budget(code)
    return code


def _monomial_residue(F, xs, base_res, i, k):
    return [F.mul(F.pow(x, k), r) for x, r in zip(xs, base_res[i])]


def _kernel_basis(F, gamma, b, pts, base_res, kmax):
    """Reduced Groebner basis of ker(res) and the monomials outside its span.

    Works on the delta-initial segment of monomials up to max(gamma*kmax + b_i),
    which contains x^kmax w_i for every i; since prod(x - a) over the x-values
    kills every residue, each leading position is reached within the segment.
    """
    xs = [pt[0] for pt in pts]
    top = max(gamma * kmax + bi for bi in b)
    monos = [(i, k) for i in range(gamma) for k in range((top - b[i]) // gamma + 1)]
    monos.sort(key=lambda ik: -(gamma * ik[1] + b[ik[0]]))
    cols = [_monomial_residue(F, xs, base_res, i, k) for i, k in monos]
    rows = [[col[j] for col in cols] for j in range(len(pts))]
    ker = P.kernel(F, rows, len(monos))
    red, pivots = P.rref(F, ker)
    eta = [None] * gamma
    for row, pc in zip(red, pivots):
        i, k = monos[pc]
        if eta[i] is None or k < eta[i][0]:
            eta[i] = (k, row)
    if any(e is None for e in eta):
        raise BuildError("kernel Groebner basis incomplete")
    out = []
    for i in range(gamma):
        v = zero_vec(gamma)
        for c, (ii, k) in zip(eta[i][1], monos):
            if c:
                v[ii] = P.addmul(F, v[ii], c, k, [1])
        out.append(v)
    # Delta(J): monomials x^k w_i with k < deg eta_i
    delta = [(i, k) for i in range(gamma) for k in range(eta[i][0])]
    return out, delta


def _lagrange(F, gamma, b, pts, base_res, delta_monos):
    xs = [pt[0] for pt in pts]
    n = len(pts)
    cols = [_monomial_residue(F, xs, base_res, i, k) for i, k in delta_monos]
    M = [[col[j] for col in cols] for j in range(n)]
    try:
        Minv = P.inverse(F, M)
    except P.NoSolution as exc:
        raise BuildError("singular residue matrix") from exc
    h = []
    for j in range(n):
        v = zero_vec(gamma)
        for row, (i, k) in zip(Minv, delta_monos):
            c = row[j]
            if c:
                v[i] = P.addmul(F, v[i], c, k, [1])
        h.append(v)
    return h


def _assemble(F, n, genus, gamma, a, b, degG, S, eta, h, wmul_table, pts,
              base_res, ring_eval, rmul, curve) -> CodeData:
    code = CodeData(
        field=F, n=n, genus=genus, gamma=gamma, a=tuple(a), b=tuple(b),
        degG=degG, S=tuple(S), eta=tuple(eta), h=tuple(h),
        wmul_table=tuple(wmul_table), gen=(), points=tuple(pts),
        base_res=tuple(base_res), ring_eval=tuple(ring_eval), rmul=tuple(rmul),
        curve=curve)
    gen = tuple(tuple(code.residue_vector(code.phibar(s))) for s in S)
    code = replace(code, gen=gen)
    validate(code)
    return code


def check_degree_budget(code: CodeData) -> None:
    """Lagrange differentials must fit the degree budget N_h, eta within N_eta."""
    for i, hv in enumerate(code.h):
        d = max((P.deg(p) for p in hv), default=P.NEG_INF)
        if d > code.N_h:
            raise BuildError(f"h_{i + 1} has degree {d} > N_h = {code.N_h}")
    for i, e in enumerate(code.eta):
        d = max(P.deg(p) for p in e)
        if d > code.N_eta:
            raise BuildError(f"eta_{i} has degree {d} > N_eta = {code.N_eta}")
