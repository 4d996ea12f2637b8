"""Decoder input data for a differential AG code.

Functions in R and differentials in W are stored in Apery coordinates: a
length-gamma list of polynomials in x.  ``f[i]`` is the coefficient of y_i for
a function and of the basis differential w_i for a differential.

The curve itself never appears; a :class:`CodeData` carries only what the
decoder and the bound calculators need, and it can be written to and read
back from a JSON document.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from . import poly as P
from .field import GF

Vec = list  # list of gamma polynomials


class CodeDataError(ValueError):
    pass


class NotANongap(ValueError):
    pass


# -- vector helpers --------------------------------------------------------

def zero_vec(gamma: int) -> list[list[int]]:
    return [[] for _ in range(gamma)]


def unit_vec(gamma: int, i: int, k: int = 0, c: int = 1) -> list[list[int]]:
    """c * x^k in position i."""
    v = zero_vec(gamma)
    v[i] = [0] * k + [c] if c else []
    return v


def vec_add(F: GF, u, v):
    return [P.add(F, a, b) for a, b in zip(u, v)]


def vec_sub(F: GF, u, v):
    return [P.sub(F, a, b) for a, b in zip(u, v)]


def vec_scale(F: GF, c: int, v):
    return [P.scale(F, c, a) for a in v]


def vec_addmul(F: GF, u, c: int, k: int, v):
    """u + c * x^k * v"""
    if c == 0:
        return [list(a) for a in u]
    return [P.addmul(F, a, c, k, b) for a, b in zip(u, v)]


def vec_polymul(F: GF, f, v):
    """Polynomial f times each part of v."""
    return [P.mul(F, f, a) for a in v]


def is_zero(v) -> bool:
    return not any(v)


def weighted_lead(v, weights, gamma):
    """(weight, position, coefficient) of the leading monomial.

    The weight of x^k in position i is gamma*k + weights[i]; weights are
    distinct mod gamma, so the maximum is attained once.  Zero -> (-inf, None, 0).
    """
    best = (P.NEG_INF, None, 0)
    for i, part in enumerate(v):
        if part:
            w = gamma * (len(part) - 1) + weights[i]
            if w > best[0]:
                best = (w, i, part[-1])
    return best


@dataclass(frozen=True, eq=False)
class CodeData:
    """Everything the decoder consumes for one code.

    Extra tables beyond the decoder's minimum: ``base_res`` (residue vectors of
    the Apery differentials), ``ring_eval`` (y_i evaluated at the points) and
    ``rmul`` (products y_i*y_j in Apery coordinates).  ``curve`` records how
    the data was produced so that function spaces can be rebuilt for the
    jump-set calculations.
    """

    field: GF
    n: int
    genus: int
    gamma: int
    a: tuple
    b: tuple
    degG: int
    S: tuple
    eta: tuple
    h: tuple
    wmul_table: tuple
    gen: tuple
    points: tuple
    base_res: tuple
    ring_eval: tuple
    rmul: tuple
    curve: dict = dc_field(default_factory=dict)

    # -- weights ---------------------------------------------------------
    def delta(self, w) -> int | float:
        return weighted_lead(w, self.b, self.gamma)[0]

    def rho(self, f) -> int | float:
        return weighted_lead(f, self.a, self.gamma)[0]

    @property
    def k(self) -> int:
        return len(self.S)

    @cached_property
    def S_set(self) -> frozenset:
        return frozenset(self.S)

    @cached_property
    def eta_degrees(self) -> tuple:
        return tuple(P.deg(e[i]) for i, e in enumerate(self.eta))

    @cached_property
    def eta_delta(self) -> tuple:
        """delta(eta_i) = gamma*deg_x LT(eta_i) + b_i"""
        return tuple(self.gamma * d + self.b[i] for i, d in enumerate(self.eta_degrees))

    @cached_property
    def wmul_lc(self) -> tuple:
        """Leading coefficients of y_i * w_j at their delta-leading monomial."""
        return tuple(
            tuple(weighted_lead(self.wmul_table[i][j], self.b, self.gamma)[2]
                  for j in range(self.gamma))
            for i in range(self.gamma))

    @cached_property
    def xs(self) -> tuple:
        return tuple(pt[0] for pt in self.points)

    def is_nongap(self, s: int) -> bool:
        i = s % self.gamma
        return s >= self.b[i]

    def in_lambda(self, lam: int) -> bool:
        i = lam % self.gamma
        return lam >= self.a[i]

    # -- monomials -------------------------------------------------------
    def phibar_index(self, s: int) -> tuple[int, int]:
        """(position, x-degree) of the monomial of W with delta = s."""
        i = s % self.gamma
        k, r = divmod(s - self.b[i], self.gamma)
        if k < 0 or r:
            raise NotANongap(f"{s} is a gap of the differential module")
        return i, k

    def phibar(self, s: int, c: int = 1):
        i, k = self.phibar_index(s)
        return unit_vec(self.gamma, i, k, c)

    def phi(self, lam: int, c: int = 1):
        i = lam % self.gamma
        k, r = divmod(lam - self.a[i], self.gamma)
        if k < 0 or r:
            raise NotANongap(f"{lam} is a gap of the Weierstrass semigroup")
        return unit_vec(self.gamma, i, k, c)

    # -- maps ------------------------------------------------------------
    def residue_vector(self, w) -> list[int]:
        F = self.field
        out = [0] * self.n
        for i, part in enumerate(w):
            if not part:
                continue
            col = self.base_res[i]
            for j, x in enumerate(self.xs):
                val = P.evaluate(F, part, x)
                if val:
                    out[j] = F.add(out[j], F.mul(val, col[j]))
        return out

    def evaluate_function(self, f) -> list[int]:
        F = self.field
        out = [0] * self.n
        for i, part in enumerate(f):
            if not part:
                continue
            col = self.ring_eval[i]
            for j, x in enumerate(self.xs):
                val = P.evaluate(F, part, x)
                if val:
                    out[j] = F.add(out[j], F.mul(val, col[j]))
        return out

    def wmul(self, f, w):
        """The product f*w as a differential."""
        F = self.field
        out = zero_vec(self.gamma)
        for i, fi in enumerate(f):
            if not fi:
                continue
            for j, wj in enumerate(w):
                if not wj:
                    continue
                prod = P.mul(F, fi, wj)
                out = [P.add(F, o, P.mul(F, prod, t))
                       for o, t in zip(out, self.wmul_table[i][j])]
        return out

    def rmul_vec(self, f, g):
        """The product f*g in R."""
        F = self.field
        out = zero_vec(self.gamma)
        for i, fi in enumerate(f):
            if not fi:
                continue
            for j, gj in enumerate(g):
                if not gj:
                    continue
                prod = P.mul(F, fi, gj)
                out = [P.add(F, o, P.mul(F, prod, t))
                       for o, t in zip(out, self.rmul[i][j])]
        return out

    def expand(self, w) -> dict:
        """Coefficients of w on the monomials, keyed by delta."""
        out = {}
        for i, part in enumerate(w):
            for k, c in enumerate(part):
                if c:
                    out[self.gamma * k + self.b[i]] = c
        return out

    def combine(self, coeffs: dict):
        """Inverse of :meth:`expand`."""
        v = zero_vec(self.gamma)
        F = self.field
        for s, c in coeffs.items():
            if c:
                i, k = self.phibar_index(s)
                v[i] = P.addmul(F, v[i], c, k, [1])
        return v

    # -- derived bounds used by instrumentation ---------------------------
    @property
    def N_h(self) -> int:
        return (self.n + 2 * self.genus - 1) // self.gamma

    @property
    def N_eta(self) -> int:
        return (self.n + 3 * self.genus + self.gamma - 1) // self.gamma

    @property
    def N_deg(self) -> int:
        if self.genus == 0:
            return self.n
        return 1 + (self.n + 4 * self.genus - 2) // self.gamma

    @property
    def N_iter(self) -> int:
        return self.n + 2 * self.genus


# -- validation ------------------------------------------------------------

def validate(code: CodeData) -> None:
    """Check the structural invariants; raise CodeDataError naming the first failure."""
    F, g, n = code.field, code.gamma, code.n

    def fail(name, detail=""):
        raise CodeDataError(f"{name}: {detail}".rstrip(": "))

    if len(code.a) != g or len(code.b) != g:
        fail("Apery size", f"expected {g} weights")
    for i in range(g):
        if code.a[i] % g != i % g:
            fail("Apery residue", f"a_{i} = {code.a[i]} is not {i} mod {g}")
        if code.b[i] % g != i % g:
            fail("Apery residue", f"b_{i} = {code.b[i]} is not {i} mod {g}")
    if code.a[0] != 0:
        fail("Apery residue", "a_0 must be 0")
    for name, tab in (("points", code.points), ("base_res", code.base_res[0] if g else [])):
        if len(tab) != n:
            fail("shape", f"{name} has length {len(tab)}, expected {n}")
    if len(code.h) != n or len(code.eta) != g:
        fail("shape", "h or eta has the wrong length")
    for vec in list(code.h) + list(code.eta):
        for part in vec:
            for c in part:
                F.check(c)
            if part and part[-1] == 0:
                fail("shape", "polynomial with trailing zero")
    # eta: leading terms in distinct positions, degree sum n, residues zero
    for i, e in enumerate(code.eta):
        _, pos, _ = weighted_lead(e, code.b, g)
        if pos != i:
            fail("eta leading position", f"LT(eta_{i}) lies in position {pos}")
    if sum(code.eta_degrees) != n:
        fail("eta degree sum", f"{sum(code.eta_degrees)} != n = {n}")
    for i, e in enumerate(code.eta):
        if any(code.residue_vector(e)):
            fail("res(eta) nonzero", f"eta_{i}")
    for i, hv in enumerate(code.h):
        r = code.residue_vector(hv)
        if r != [int(j == i) for j in range(n)]:
            fail("res(h) not a unit vector", f"h_{i + 1}")
    # module action: leading monomial of y_i * w_j has weight a_i + b_j
    for i in range(g):
        for j in range(g):
            w, _, c = weighted_lead(code.wmul_table[i][j], code.b, g)
            if w != code.a[i] + code.b[j] or c == 0:
                fail("wmul valuation", f"delta(y_{i} w_{j}) = {w}")
            w, _, c = weighted_lead(code.rmul[i][j], code.a, g)
            if w != code.a[i] + code.a[j] or c == 0:
                fail("rmul valuation", f"rho(y_{i} y_{j}) = {w}")
    # S and generator rows
    if list(code.S) != sorted(code.S, reverse=True):
        fail("S order", "S must be descending")
    for s in code.S:
        if s > 0 or not code.is_nongap(s):
            fail("S membership", f"{s}")
    if len(code.gen) != len(code.S):
        fail("gen shape", "one generator row per element of S")
    for s, row in zip(code.S, code.gen):
        if list(row) != code.residue_vector(code.phibar(s)):
            fail("gen row mismatch", f"s = {s}")
    if P.rank(F, [list(r) for r in code.gen]) != len(code.S):
        fail("gen rank", "generator rows are dependent")


# -- serialization ---------------------------------------------------------

def _vecs(x):
    return tuple([list(map(int, p)) for p in v] for v in x)


def to_document(code: CodeData) -> dict:
    return {
        "kind": "codedata",
        "field": code.field.to_json(),
        "n": code.n,
        "genus": code.genus,
        "gamma": code.gamma,
        "a": list(code.a),
        "b": list(code.b),
        "degG": code.degG,
        "S": list(code.S),
        "eta": [[list(p) for p in v] for v in code.eta],
        "h": [[list(p) for p in v] for v in code.h],
        "wmul": [[[list(p) for p in v] for v in row] for row in code.wmul_table],
        "gen": [list(r) for r in code.gen],
        "points": [list(pt) for pt in code.points],
        "base_res": [list(r) for r in code.base_res],
        "ring_eval": [list(r) for r in code.ring_eval],
        "rmul": [[[list(p) for p in v] for v in row] for row in code.rmul],
        "curve": dict(code.curve),
    }


def from_document(doc: dict, check: bool = True) -> CodeData:
    try:
        F = GF.from_json(doc["field"])
        code = CodeData(
            field=F,
            n=int(doc["n"]),
            genus=int(doc["genus"]),
            gamma=int(doc["gamma"]),
            a=tuple(int(x) for x in doc["a"]),
            b=tuple(int(x) for x in doc["b"]),
            degG=int(doc["degG"]),
            S=tuple(int(x) for x in doc["S"]),
            eta=_vecs(doc["eta"]),
            h=_vecs(doc["h"]),
            wmul_table=tuple(_vecs(row) for row in doc["wmul"]),
            gen=tuple(tuple(int(c) for c in r) for r in doc["gen"]),
            points=tuple(tuple(int(c) for c in pt) for pt in doc["points"]),
            base_res=tuple(tuple(int(c) for c in r) for r in doc["base_res"]),
            ring_eval=tuple(tuple(int(c) for c in r) for r in doc["ring_eval"]),
            rmul=tuple(_vecs(row) for row in doc["rmul"]),
            curve=dict(doc.get("curve", {})),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CodeDataError):
            raise
        raise CodeDataError(f"malformed document: {exc}") from exc
    if check:
        validate(code)
    return code


def serialize(code: CodeData) -> str:
    return json.dumps(to_document(code), separators=(",", ":"))


def load(text: str, check: bool = True) -> CodeData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeDataError(f"malformed document: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("kind", "codedata") != "codedata":
        raise CodeDataError("malformed document: not a code-data file")
    return from_document(doc, check=check)


def same(c1: CodeData, c2: CodeData) -> bool:
    return to_document(c1) == to_document(c2)
