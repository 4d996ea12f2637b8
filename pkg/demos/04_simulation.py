"""Seeded decoding trials inside and beyond the correction radius.

Run with:  python demos/04_simulation.py
"""
from collections import Counter

from diffag import analysis, decoder, oracle
from diffag.hermitian import build_hermitian

code = build_hermitian(3, -1, 18)
_, tau = analysis.d_omega_tau(code)

for w in range(0, tau + 5):
    tally = Counter()
    for trial in range(100):
        rng = oracle.SplitMix64(10_000 * w + trial)
        c = oracle.encode(code, oracle.random_message(code, rng))
        v, _ = oracle.add_errors(c, w, rng, code.field)
        try:
            out = decoder.decode(code, v)
            tally["exact" if out == c else "miscorrect"] += 1
        except decoder.DecodingFailure:
            tally["failure"] += 1
    mark = "<= tau" if w <= tau else "> tau"
    print(f"wt {w:2d} ({mark:6}): " + ", ".join(f"{k} {tally[k]}" for k in ("exact", "failure", "miscorrect")))
