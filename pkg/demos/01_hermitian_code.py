"""Build a Hermitian code, look at its precomputed data, and decode a noisy word.

Run with:  python demos/01_hermitian_code.py
"""
from diffag import analysis, decoder, oracle, poly
from diffag.hermitian import build_hermitian

# The curve y^3 + y = x^4 over GF(9) has 27 affine points. Dropping the
# origin O leaves n = 26 evaluation points; G = -O + 18Q.
code = build_hermitian(3, -1, 18)
F = code.field
print(f"[{code.n}, {code.k}] code, genus {code.genus}, |G| = {code.degG}")
print("semigroup generators a =", code.a, "  differential weights b =", code.b)

# The Groebner basis of the residue kernel; each entry is a list of gamma
# polynomials, one per Apery differential.
for i, eta in enumerate(code.eta):
    parts = [poly.fmt(F, p) for p in eta]
    print(f"eta_{i} =", " | ".join(parts))

# The message lives on the monomials listed in S.
print("S =", code.S)
d, tau = analysis.d_omega_tau(code)
print(f"distance bound {d}, so up to {tau} errors are corrected")

# Encode a random message and add tau errors with the seeded channel.
rng = oracle.SplitMix64(2024)
msg = oracle.random_message(code, rng)
c = oracle.encode(code, msg)
v, e = oracle.add_errors(c, tau, rng, F)
print("error positions:", [i for i, x in enumerate(e) if x])

state = decoder.run(code, v, trace=True)
for line in decoder.format_trace(state.trace):
    print("  ", line)
print("recovered:", state.codeword == c, "after", state.iterations, "iterations,", state.stop)
