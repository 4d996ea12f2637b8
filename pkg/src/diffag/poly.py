"""Univariate polynomials and dense matrices over a :class:`~diffag.field.GF`.

A polynomial is a list of field elements in ascending order with no trailing
zeros; the zero polynomial is ``[]``.  Every function here returns a fresh
canonical list and never mutates its inputs.
"""
from __future__ import annotations

from .field import GF

NEG_INF = float("-inf")


class NoSolution(ArithmeticError):
    """Raised when a linear system is inconsistent."""


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f) -> int | float:
    """Degree, with ``NEG_INF`` for the zero polynomial."""
    return len(f) - 1 if f else NEG_INF


def lc(f) -> int:
    return f[-1] if f else 0


def coeff_at(f, k: int) -> int:
    """Coefficient of x^k; zero outside 0..deg f (negative k included)."""
    if 0 <= k < len(f):
        return f[k]
    return 0


def add(F: GF, f, g) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        if c:
            out[i] = F.add(out[i], c)
    return trim(out)


def sub(F: GF, f, g) -> list[int]:
    out = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        if c:
            out[i] = F.sub(out[i], c)
    return trim(out)


def neg(F: GF, f) -> list[int]:
    return [F.neg(c) for c in f]


def scale(F: GF, c: int, f) -> list[int]:
    if c == 0:
        return []
    if c == 1:
        return list(f)
    return [F.mul(c, a) for a in f]


def shift(f, k: int) -> list[int]:
    """Multiply by x^k (k >= 0)."""
    if not f:
        return []
    return [0] * k + list(f)


def addmul(F: GF, f, c: int, k: int, g) -> list[int]:
    """f + c * x^k * g."""
    if c == 0 or not g:
        return list(f)
    out = list(f) + [0] * max(0, k + len(g) - len(f))
    mul, addf = F.mul, F.add
    for i, a in enumerate(g):
        if a:
            out[i + k] = addf(out[i + k], mul(c, a))
    return trim(out)


def mul(F: GF, f, g) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    fm, fa = F.mul, F.add
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = fa(out[i + j], fm(a, b))
    return trim(out)


def divrem(F: GF, f, g) -> tuple[list[int], list[int]]:
    """Return (q, r) with f = q*g + r and deg r < deg g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) <= dg:
        return [], trim(r)
    inv_lc = F.inv(g[-1])
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            t = F.mul(c, inv_lc)
            q[i - dg] = t
            for j in range(dg + 1):
                if g[j]:
                    r[i - dg + j] = F.sub(r[i - dg + j], F.mul(t, g[j]))
    return trim(q), trim(r[:dg])


def evaluate(F: GF, f, a: int) -> int:
    """Horner evaluation f(a)."""
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, a), c)
    return acc


def from_roots(F: GF, roots) -> list[int]:
    """prod (x - r)."""
    out = [1]
    for r in roots:
        out = mul(F, out, [F.neg(r), 1])
    return out


def derivative(F: GF, f) -> list[int]:
    out = []
    for i in range(1, len(f)):
        c = 0
        for _ in range(i % F.p):
            c = F.add(c, f[i])
        out.append(c)
    return trim(out)


def gcd(F: GF, f, g) -> list[int]:
    """Monic gcd."""
    f, g = trim(list(f)), trim(list(g))
    while g:
        f, g = g, divrem(F, f, g)[1]
    if not f:
        return []
    return scale(F, F.inv(f[-1]), f)


def power(F: GF, f, e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = mul(F, out, f)
    return out


def fmt(F: GF, f, var: str = "x") -> str:
    if not f:
        return "0"
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        cs = F.fmt(c)
        if k == 0:
            terms.append(cs)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == 1 else f"{cs}*{mono}")
    return " + ".join(terms)


# -- dense linear algebra ------------------------------------------------

def rref(F: GF, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, a) for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                t = M[i][c]
                M[i] = [F.sub(a, F.mul(t, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(F: GF, rows) -> int:
    return len(rref(F, rows)[1])


def kernel(F: GF, rows, ncols: int | None = None) -> list[list[int]]:
    """Basis of {x : M x = 0}."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    R, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for row, pc in zip(R, pivots):
            if row[fc]:
                x[pc] = F.neg(row[fc])
        basis.append(x)
    return basis


def solve(F: GF, rows, b) -> list[int]:
    """Some x with M x = b; raises NoSolution if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    R, pivots = rref(F, aug)
    if ncols in pivots:
        raise NoSolution("inconsistent linear system")
    x = [0] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def inverse(F: GF, rows) -> list[list[int]]:
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise NoSolution("singular matrix")
    return [row[n:] for row in R]


def matvec(F: GF, rows, x) -> list[int]:
    out = []
    for r in rows:
        acc = 0
        for a, b in zip(r, x):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]
