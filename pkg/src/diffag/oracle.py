"""Reference implementations used to check the decoders.

Encoding by generator rows, a portable seeded error channel, exhaustive
minimum distance and exhaustive nearest-codeword search for tiny codes.
"""
from __future__ import annotations

from .codedata import CodeData
from .goppa import GoppaCode

MASK64 = (1 << 64) - 1
MIN_DISTANCE_LIMIT = 1 << 24
NEAREST_LIMIT = 1 << 20


class OracleError(ValueError):
    pass


class SplitMix64:
    """SplitMix64 generator; fixed so that seeds reproduce across implementations."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next()
            if r < limit:
                return r % n


def _rng(seed) -> SplitMix64:
    return seed if isinstance(seed, SplitMix64) else SplitMix64(seed)


# -- generator matrices ----------------------------------------------------

def generator(code):
    """(rows, alphabet) for a code: the differential code for CodeData,
    the subfield subcode for a GoppaCode."""
    if isinstance(code, CodeData):
        return [list(r) for r in code.gen], list(code.field.elements())
    if isinstance(code, GoppaCode):
        F = code.field
        alphabet = [a for a in F.elements() if F.in_subfield(a, code.q)]
        return [list(r) for r in code.subfield_basis], alphabet
    raise TypeError(f"not a code: {type(code).__name__}")


def _field(code):
    return code.field


def _combine(F, rows, msg, n):
    out = [0] * n
    for m, row in zip(msg, rows):
        if m:
            out = [F.add(o, F.mul(m, r)) for o, r in zip(out, row)]
    return out


def message_list(code, msg) -> list[int]:
    """Normalize a message to a list aligned with the generator rows."""
    rows, alphabet = generator(code)
    if isinstance(msg, dict):
        if not isinstance(code, CodeData) or set(msg) != set(code.S):
            raise OracleError("message keys must be exactly S")
        msg = [msg[s] for s in code.S]
    msg = list(msg)
    if len(msg) != len(rows):
        raise OracleError(f"message has {len(msg)} symbols, expected {len(rows)}")
    allowed = set(alphabet)
    for m in msg:
        if m not in allowed:
            raise OracleError(f"message symbol {m} is outside the alphabet")
    return msg


def encode(code, msg) -> list[int]:
    """sum_s m_s gen_s; ``msg`` is a dict over S or a list in S order."""
    rows, _ = generator(code)
    return _combine(_field(code), rows, message_list(code, msg), code.n)


def random_message(code, seed) -> list[int]:
    rng = _rng(seed)
    rows, alphabet = generator(code)
    return [alphabet[rng.below(len(alphabet))] for _ in rows]


def add_errors(c, w: int, seed, field, values=None):
    """(v, e) with wt(e) = w; positions by Fisher-Yates, values uniform nonzero."""
    n = len(c)
    if not 0 <= w <= n:
        raise OracleError(f"error weight {w} outside 0..{n}")
    rng = _rng(seed)
    if values is None:
        values = list(range(1, field.q))
    perm = list(range(n))
    for i in range(w):
        j = i + rng.below(n - i)
        perm[i], perm[j] = perm[j], perm[i]
    e = [0] * n
    for pos in perm[:w]:
        e[pos] = values[rng.below(len(values))]
    v = [field.add(a, b) for a, b in zip(c, e)]
    return v, e


def error_values(code) -> list[int]:
    _, alphabet = generator(code)
    return [a for a in alphabet if a]


def weight(v) -> int:
    return sum(1 for a in v if a)


def distance(u, v) -> int:
    return sum(1 for a, b in zip(u, v) if a != b)


# -- exhaustive searches ---------------------------------------------------

def _guard(code, limit, what):
    rows, alphabet = generator(code)
    size = len(alphabet) ** len(rows)
    if size > limit:
        raise OracleError(f"{what} would enumerate {size} messages (limit {limit})")
    return rows, alphabet


def codewords(code):
    """Yield (message, codeword) in lexicographic message order."""
    rows, alphabet = _guard(code, MIN_DISTANCE_LIMIT, "codeword enumeration")
    F = _field(code)
    n = code.n
    k = len(rows)
    # multiples of each row, computed once
    mults = [[[F.mul(a, r) for r in row] for a in alphabet] for row in rows]

    def walk(i, prefix, acc):
        if i == k:
            yield list(prefix), acc
            return
        for t, a in enumerate(alphabet):
            prefix.append(a)
            nxt = acc if a == 0 else [F.add(x, y) for x, y in zip(acc, mults[i][t])]
            yield from walk(i + 1, prefix, nxt)
            prefix.pop()

    yield from walk(0, [], [0] * n)


def min_distance_exhaustive(code) -> int:
    _guard(code, MIN_DISTANCE_LIMIT, "min_distance_exhaustive")
    best = None
    for msg, cw in codewords(code):
        # up to scaling, only messages whose first nonzero symbol is 1
        lead = next((m for m in msg if m), None)
        if lead != 1:
            continue
        w = weight(cw)
        if best is None or w < best:
            best = w
    if best is None:
        raise OracleError("the code is zero")
    return best


def nearest_codeword(code, v) -> list[int]:
    """Closest codeword; ties go to the lexicographically smallest message."""
    _guard(code, NEAREST_LIMIT, "nearest_codeword")
    if len(v) != code.n:
        raise OracleError(f"word has length {len(v)}, expected {code.n}")
    best, best_d = None, None
    for _, cw in codewords(code):
        d = distance(cw, v)
        if best_d is None or d < best_d:
            best, best_d = cw, d
            if d == 0:
                break
    return best
