"""Goppa codes on the projective line and their two-row decoder.

The differential code C_Omega(D, Z - P_inf) lives over GF(q^m); the classical
Goppa code is its subfield subcode over GF(q).  Differentials are written as
f(x) * w0 with w0 = g(x) dx / prod(x - alpha_i), and the residue of f * w0 at
alpha_i is f(alpha_i) g(alpha_i) / pi'_i where pi'_i = prod_{j != i}(alpha_i - alpha_j).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import poly as P
from .codedata import CodeData, CodeDataError, validate
from .decoder import DecodingFailure
from .field import GF, field_of_order, prime_power


class GoppaBuildError(CodeDataError):
    pass


@dataclass(frozen=True, eq=False)
class GoppaCode:
    field: GF
    q: int
    m: int
    L: tuple
    gpoly: tuple
    b0: int
    eta0: tuple
    h: tuple
    pi_prime: tuple
    gsep: tuple | None = None

    @property
    def n(self) -> int:
        return len(self.L)

    @property
    def deg_g(self) -> int:
        return len(self.gpoly) - 1

    @property
    def k(self) -> int:
        """Dimension of the differential code over GF(q^m)."""
        return self.n - self.deg_g

    @property
    def tau(self) -> int:
        return self.deg_g // 2

    @cached_property
    def g_at_L(self) -> tuple:
        F = self.field
        return tuple(P.evaluate(F, list(self.gpoly), a) for a in self.L)

    @cached_property
    def res_scale(self) -> tuple:
        """g(alpha_i) / pi'_i, the residue of w0 at alpha_i."""
        F = self.field
        return tuple(F.div(ga, pp) for ga, pp in zip(self.g_at_L, self.pi_prime))

    def residues(self, f) -> list[int]:
        F = self.field
        return [F.mul(P.evaluate(F, list(f), a), r) for a, r in zip(self.L, self.res_scale)]

    def in_subfield(self, v) -> bool:
        return all(self.field.in_subfield(c, self.q) for c in v)

    @cached_property
    def parity_check(self) -> list[list[int]]:
        """Rows alpha_i^j / g(alpha_i), j < deg g: evaluations of L(Z - P_inf)."""
        F = self.field
        return [[F.div(F.pow(a, j), ga) for a, ga in zip(self.L, self.g_at_L)]
                for j in range(self.deg_g)]

    @cached_property
    def subfield_basis(self) -> tuple:
        """Reduced echelon basis of the subfield subcode over GF(q)."""
        return tuple(tuple(r) for r in subfield_subcode(self))

    @property
    def k_sub(self) -> int:
        return len(self.subfield_basis)

    def to_description(self, prim_override=None) -> dict:
        F = self.field
        g = list(self.gsep) if self.gsep is not None else list(self.gpoly)
        return {"kind": "goppa", "q": self.q, "m": self.m,
                "prim": list(prim_override or F.prim), "L": list(self.L),
                "g": g, "squared": self.gsep is not None}


def _check_subfield(F: GF, q: int):
    p, e = prime_power(q)
    if F.p != p or F.m % e:
        raise GoppaBuildError(f"GF({q}) is not a subfield of GF({F.q})")


def goppa_build(q: int, m: int, L, gpoly, prim=None, _gsep=None) -> GoppaCode:
    """Precompute eta_0, the Lagrange differentials h_i and pi'_i."""
    F = field_of_order(q ** m, prim)
    _check_subfield(F, q)
    L = [F.check(a) for a in L]
    g = P.trim([F.check(c) for c in gpoly])
    n = len(L)
    if len(set(L)) != n:
        raise GoppaBuildError("L contains repeated elements")
    if not g or P.deg(g) < 1:
        raise GoppaBuildError("g must have positive degree")
    if P.deg(g) >= n:
        raise GoppaBuildError(f"deg g = {P.deg(g)} must be smaller than n = {n}")
    for a in L:
        if P.evaluate(F, g, a) == 0:
            raise GoppaBuildError(f"L contains a root of g: {F.fmt(a)}")
    eta0 = P.from_roots(F, L)
    pi = []
    h = []
    for i, a in enumerate(L):
        rest, rem = P.divrem(F, eta0, [F.neg(a), 1])
        pp = P.evaluate(F, rest, a)
        pi.append(pp)
        # true residue of rest * w0 at alpha_i is pp * g(a) / pp = g(a)
        h.append(tuple(P.scale(F, F.inv(P.evaluate(F, g, a)), rest)))
    code = GoppaCode(field=F, q=q, m=m, L=tuple(L), gpoly=tuple(g),
                     b0=len(g) - 1 - n + 1, eta0=tuple(eta0), h=tuple(h),
                     pi_prime=tuple(pi), gsep=None if _gsep is None else tuple(_gsep))
    _validate_goppa(code)
    return code


def binary_goppa_build(m: int, L, gsep, prim=None) -> GoppaCode:
    """Binary Goppa code of a separable g, built through g^2."""
    F = field_of_order(2 ** m, prim)
    g = P.trim([F.check(c) for c in gsep])
    if P.deg(g) < 1:
        raise GoppaBuildError("g must have positive degree")
    if P.gcd(F, g, P.derivative(F, g)) != [1]:
        raise GoppaBuildError("g is not separable")
    return goppa_build(2, m, L, P.mul(F, g, g), prim=prim, _gsep=g)


def _validate_goppa(code: GoppaCode):
    n = code.n
    if P.deg(list(code.eta0)) != n or code.eta0[-1] != 1:
        raise GoppaBuildError("eta_0 is not monic of degree n")
    if any(code.residues(code.eta0)):
        raise GoppaBuildError("res(eta_0) is nonzero")
    for i, hi in enumerate(code.h):
        if P.deg(list(hi)) > n - 1:
            raise GoppaBuildError(f"h_{i + 1} has degree above n - 1")
        if code.residues(hi) != [int(j == i) for j in range(n)]:
            raise GoppaBuildError(f"res(h_{i + 1}) is not a unit vector")


def all_points(F: GF) -> list[int]:
    """0 followed by alpha^0, ..., alpha^(q-2)."""
    return [0] + [F.alpha_pow(i) for i in range(F.q - 1)]


def subfield_subcode(code: GoppaCode) -> list[list[int]]:
    """Basis of {c in GF(q)^n : H c = 0}, found as a kernel over the prime field."""
    F = code.field
    p = F.p
    Fp = GF(p, 1)
    _, e = prime_power(code.q)
    # a GF(p)-basis of GF(q) inside GF(q^m): powers of a generator of GF(q)^*
    if e == 1:
        beta = [1]
    else:
        gen = F.alpha_pow((F.q - 1) // (code.q - 1))
        beta = [F.pow(gen, t) for t in range(e)]
    H = code.parity_check
    cols = []
    for i in range(code.n):
        for b in beta:
            col = []
            for row in H:
                col.extend(F.digits(F.mul(row[i], b)))
            cols.append(col)
    nrows = len(cols[0]) if cols else 0
    mat = [[cols[j][r] for j in range(len(cols))] for r in range(nrows)]
    ker = P.kernel(Fp, mat, len(cols)) if mat else P.identity(len(cols))
    vecs = []
    for kv in ker:
        c = []
        for i in range(code.n):
            acc = 0
            for t, b in enumerate(beta):
                d = kv[i * len(beta) + t]
                for _ in range(d):
                    acc = F.add(acc, b)
            c.append(acc)
        vecs.append(c)
    basis, _ = P.rref(F, vecs)
    return basis


# -- the two-row decoder ---------------------------------------------------

@dataclass
class GoppaState:
    C: list
    D: list
    A: list
    B: list
    nu: int
    mus: dict = dc_field(default_factory=dict)
    output: list | None = None
    trace: list | None = None
    iterations: int = 0
    max_degree: int = 0

    def track(self):
        d = max(len(p) - 1 for p in (self.A, self.B, self.C, self.D))
        self.max_degree = max(self.max_degree, d)


def _snapshot(st: GoppaState, index: int):
    st.trace.append({"index": index, "G": (list(st.C), list(st.D)),
                     "F": (list(st.A), list(st.B)), "nu": st.nu})


def lagrange_combination(code: GoppaCode, v) -> list[int]:
    F = code.field
    hv = []
    for vi, hi in zip(v, code.h):
        if vi:
            hv = P.addmul(F, hv, vi, 0, list(hi))
    return hv


def goppa_run(code: GoppaCode, v, trace: bool = False, update_g: bool = False,
              check: bool = False) -> GoppaState:
    """Run the decoder and return its final state.

    ``update_g`` also applies the second-phase substitution to the G row.
    It does not change the result but reproduces the full two-row history.
    """
    F = code.field
    n = code.n
    if len(v) != n:
        raise ValueError(f"received word has length {len(v)}, expected {n}")
    for c in v:
        F.check(c)
    hv = lagrange_combination(code, v)
    st = GoppaState(C=[], D=list(code.eta0), A=[1], B=P.neg(F, hv), nu=1,
                    trace=[] if trace else None)
    st.track()
    if trace:
        _snapshot(st, n - 1)
    split = n - code.deg_g
    for s in range(n - 1, -1, -1):
        k = P.deg(st.A) + s
        if s >= split:
            c = P.deg(st.D) - k
            mval = F.neg(P.coeff_at(st.B, k))
            if mval:
                if c > 0:
                    A = P.add(F, P.shift(P.scale(F, st.nu, st.A), c), P.scale(F, mval, st.C))
                    B = P.add(F, P.shift(P.scale(F, st.nu, st.B), c), P.scale(F, mval, st.D))
                    st.C, st.D = st.A, st.B
                    st.A, st.B = A, B
                    st.nu = F.neg(mval)
                else:
                    st.A = P.add(F, P.scale(F, st.nu, st.A), P.shift(P.scale(F, mval, st.C), -c))
                    st.B = P.add(F, P.scale(F, st.nu, st.B), P.shift(P.scale(F, mval, st.D), -c))
            if check and P.deg(st.A) + P.deg(st.D) != n:
                raise AssertionError(f"conservation broken at s = {s}")
        else:
            if not st.A:
                raise DecodingFailure(f"Decoding Failure at s = {s}: A vanished", s=s)
            mu = F.neg(F.div(P.coeff_at(st.B, k), P.lc(st.A)))
            st.mus[s] = mu
            st.B = P.addmul(F, st.B, mu, s, st.A)
            if update_g:
                st.D = P.addmul(F, st.D, mu, s, st.C)
        st.iterations += 1
        st.track()
        if trace:
            _snapshot(st, s - 1)
    mu_poly = P.trim([st.mus.get(s, 0) for s in range(split)])
    r = code.residues(mu_poly)
    if not code.in_subfield(r):
        raise DecodingFailure("Decoding Failure: corrected word is not over the subfield")
    st.output = r
    return st


def format_trace(code: GoppaCode, st: GoppaState) -> str:
    F = code.field
    lines = []
    for t in st.trace or []:
        j = t["index"]
        (C, D), (A, B) = t["G"], t["F"]
        lines.append(f"G^({j}) = ({P.fmt(F, C)}) z + ({P.fmt(F, D)}) w0")
        lines.append(f"F^({j}) = ({P.fmt(F, A)}) z + ({P.fmt(F, B)}) w0")
    for s in sorted(st.mus, reverse=True):
        lines.append(f"m_{s} = {F.fmt(st.mus[s])}")
    return "\n".join(lines)


def goppa_decode(code: GoppaCode, v) -> list[int]:
    return goppa_run(code, v).output


def goppa_codeword(code: GoppaCode, mu) -> list[int]:
    """Codeword of the differential code for message polynomial mu (deg < k)."""
    if P.deg(list(mu)) >= code.k:
        raise ValueError("message polynomial degree must be below k")
    return code.residues(mu)


# -- the same code as generic code data -------------------------------------

def goppa_codedata(code: GoppaCode) -> CodeData:
    """gamma = 1 code data for the projective line, over the big field."""
    F = code.field
    n = code.n
    b0 = code.b0
    S = tuple(range(b0 + code.k - 1, b0 - 1, -1))
    cd = CodeData(
        field=F, n=n, genus=0, gamma=1, a=(0,), b=(b0,), degG=code.deg_g - 1,
        S=S, eta=((list(code.eta0),),), h=tuple((list(hi),) for hi in code.h),
        wmul_table=(((([1]),),),), gen=(), points=tuple((a, 0) for a in code.L),
        base_res=(tuple(code.res_scale),), ring_eval=(tuple([1] * n),),
        rmul=(((([1]),),),),
        curve={"type": "line", "g": list(code.gpoly)})
    from dataclasses import replace
    gen = tuple(tuple(cd.residue_vector(cd.phibar(s))) for s in S)
    cd = replace(cd, gen=gen)
    validate(cd)
    return cd


# -- description files ---------------------------------------------------

def parse_L(text, F: GF) -> list[int]:
    if isinstance(text, str):
        if text.strip() == "all":
            return all_points(F)
        return [int(t) for t in text.replace(",", " ").split()]
    return [int(t) for t in text]


def from_description(doc: dict) -> GoppaCode:
    try:
        q, m = int(doc["q"]), int(doc["m"])
        prim = doc.get("prim")
        F = field_of_order(q ** m, prim)
        L = parse_L(doc["L"], F)
        g = [int(c) for c in doc["g"]]
        squared = bool(doc.get("squared", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise GoppaBuildError(f"malformed Goppa description: {exc}") from exc
    if squared:
        if q != 2:
            raise GoppaBuildError("the squared construction is for binary codes")
        return binary_goppa_build(m, L, g, prim)
    return goppa_build(q, m, L, g, prim)


def serialize(code: GoppaCode) -> str:
    return json.dumps(code.to_description(), indent=1)
