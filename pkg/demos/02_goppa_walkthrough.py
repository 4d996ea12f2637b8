"""The [8, 2, 5] binary Goppa code on all of GF(8), decoded step by step.

Run with:  python demos/02_goppa_walkthrough.py
"""
from diffag import goppa, oracle, poly
from diffag.field import field_of_order

F = field_of_order(8)            # alpha^3 + alpha + 1 = 0
L = goppa.all_points(F)          # 0, 1, alpha, ..., alpha^6
code = goppa.binary_goppa_build(3, L, [1, 1, 1])   # g = x^2 + x + 1, used squared

print("g^2 =", poly.fmt(F, list(code.gpoly)))
print("eta_0 =", poly.fmt(F, list(code.eta0)))
print("h_1 =", poly.fmt(F, list(code.h[0])))
print("h_8 =", poly.fmt(F, list(code.h[7])))
print("binary subcode basis:", code.subfield_basis)
print("minimum distance:", oracle.min_distance_exhaustive(code))

# Two errors on a codeword; the two-row iteration has n = 8 steps.
v = [1, 1, 1, 1, 1, 1, 1, 0]
st = goppa.goppa_run(code, v, trace=True, update_g=True)
print(goppa.format_trace(code, st))
print("corrected:", st.output)

# The same word through the reference nearest-codeword search
print("nearest codeword:", oracle.nearest_codeword(code, v))
