"""Exact arithmetic in GF(p^m).

Elements are plain ints: the element ``c0 + c1*alpha + ... + c_{m-1}*alpha^(m-1)``
is encoded as ``c0 + c1*p + ... + c_{m-1}*p^(m-1)``.  This encoding is what
every file format in the package uses.
"""
from __future__ import annotations

import itertools

# Default defining polynomials (ascending coefficients).  GF(8) and GF(9)
# agree with the relations alpha^3 + alpha + 1 = 0 and alpha^2 - alpha - 1 = 0.
DEFAULT_PRIM = {
    (2, 1): [1, 1],
    (2, 2): [1, 1, 1],
    (2, 3): [1, 1, 0, 1],
    (2, 4): [1, 1, 0, 0, 1],
    (2, 5): [1, 0, 1, 0, 0, 1],
    (2, 6): [1, 1, 0, 1, 1, 0, 1],
    (2, 8): [1, 0, 1, 1, 1, 0, 0, 0, 1],
    (3, 1): [1, 1],
    (3, 2): [2, 2, 1],
    (3, 3): [1, 2, 0, 1],
    (5, 1): [3, 1],
    (5, 2): [2, 4, 1],
    (7, 2): [3, 6, 1],
}

MAX_ORDER = 2**16


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise FieldError."""
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1 or not is_prime(p):
                break
            return p, m
    raise FieldError(f"{q} is not a prime power")


def _polymod_p(f: list[int], g: list[int], p: int) -> list[int]:
    # remainder of f by monic g over GF(p), ascending coefficient lists
    f = [c % p for c in f]
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    f = f[:dg]
    while f and f[-1] == 0:
        f.pop()
    return f


def is_irreducible(prim: list[int], p: int) -> bool:
    """Exhaustive trial division by monic polynomials of degree <= m/2."""
    m = len(prim) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _polymod_p(list(prim), list(low) + [1], p):
                return False
    return True


class GF:
    """The finite field GF(p^m) defined by a monic primitive polynomial.

    Construction validates that ``prim`` is irreducible and that its root
    alpha generates the multiplicative group, then builds log/antilog tables.
    Instances are immutable and may be shared freely.
    """

    def __init__(self, p: int, m: int, prim: list[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be positive")
        q = p**m
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds {MAX_ORDER}")
        if prim is None:
            prim = default_primitive(p, m)
        prim = [int(c) % p for c in prim]
        if len(prim) != m + 1 or prim[-1] != 1:
            raise FieldError(f"defining polynomial must be monic of degree {m}")
        if not is_irreducible(prim, p):
            raise FieldError(f"defining polynomial {prim} is reducible over GF({p})")
        self.p, self.m, self.q = p, m, q
        self.prim = tuple(prim)
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        exp = []
        digits = [1] + [0] * (m - 1)
        seen = set()
        for _ in range(q - 1):
            e = self.from_digits(digits)
            if e in seen:
                raise FieldError(
                    f"alpha is not a generator of GF({q})^*: order {len(exp)}"
                )
            seen.add(e)
            exp.append(e)
            # multiply by alpha and reduce with alpha^m = -sum prim[i] alpha^i
            top = digits[-1]
            digits = [0] + digits[:-1]
            if top:
                digits = [(d - top * c) % p for d, c in zip(digits, self.prim)]
        if self.from_digits(digits) != 1:
            raise FieldError(f"alpha is not a generator of GF({q})^*")
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        self._exp = exp + exp  # doubled so log sums never need a modulus
        self._log = log
        self._neg = [self.from_digits([(-d) % p for d in self.digits(a)]) for a in range(q)]
        if p == 2:
            self._add = None
        else:
            self._add = [
                [self._add_digits(a, b) for b in range(q)] for a in range(q)
            ]

    # -- encoding -------------------------------------------------------
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits) -> int:
        a = 0
        for d in reversed(list(digits)):
            a = a * self.p + int(d) % self.p
        return a

    def _add_digits(self, a, b):
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element of GF({self.q})")
        return a

    # -- arithmetic -----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self._add is None:
            return a ^ b
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        if self._add is None:
            return a ^ b
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.q})")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.q})")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.q - 1]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def alpha_pow(self, e: int) -> int:
        """alpha^e"""
        return self._exp[e % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    @property
    def alpha(self) -> int:
        return self._exp[1 % (self.q - 1)] if self.q > 2 else 1

    def elements(self) -> range:
        return range(self.q)

    def in_subfield(self, a: int, q0: int) -> bool:
        """True iff a lies in the subfield of order q0."""
        p0, d = prime_power(q0)
        if p0 != self.p or self.m % d:
            raise FieldError(f"GF({q0}) is not a subfield of GF({self.q})")
        return self.pow(a, q0) == a

    # -- misc -----------------------------------------------------------
    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "prim": list(self.prim)}

    @classmethod
    def from_json(cls, doc: dict) -> "GF":
        return cls(int(doc["p"]), int(doc["m"]), [int(c) for c in doc["prim"]])

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.m, self.prim) == (
            other.p, other.m, other.prim)

    def __hash__(self):
        return hash((self.p, self.m, self.prim))

    def __repr__(self):
        return f"GF({self.p}^{self.m}, prim={list(self.prim)})"

    def fmt(self, a: int) -> str:
        """Human-readable form: 0, 1, 2, ..., or alpha^k."""
        if a < self.p:
            return str(a)
        return f"a^{self._log[a]}"


def default_primitive(p: int, m: int) -> list[int]:
    """A primitive polynomial of degree m over GF(p).

    Uses the built-in table when available, otherwise the first primitive
    polynomial in order of the integer encoding of its low coefficients.
    """
    if (p, m) in DEFAULT_PRIM:
        return list(DEFAULT_PRIM[(p, m)])
    for low in itertools.product(range(p), repeat=m):
        cand = list(reversed(low)) + [1]
        if cand[0] == 0:
            continue
        try:
            GF(p, m, cand)
        except FieldError:
            continue
        return cand
    raise FieldError(f"no primitive polynomial of degree {m} over GF({p})")


def field_of_order(q: int, prim: list[int] | None = None) -> GF:
    p, m = prime_power(q)
    return GF(p, m, prim)
