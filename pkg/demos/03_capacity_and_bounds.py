"""How the distance bounds move as the divisor G changes.

For each divisor we print the decoder's bound d_Omega, the Goppa bound,
the order-type bound d_L of the dual family, and the Feng-Rao count for
one-point divisors.

Run with:  python demos/03_capacity_and_bounds.py
"""
from diffag import analysis
from diffag.hermitian import build_hermitian

print(f"{'G':>12} {'k':>3} {'d_Omega':>8} {'Goppa':>6} {'d_L':>4} {'FR':>4}")
for gO, gQ in [(0, 6), (0, 9), (0, 12), (0, 17), (-1, 18), (2, 15), (-4, 21), (0, 25)]:
    code = build_hermitian(3, gO, gQ)
    d, _ = analysis.d_omega_tau(code)
    cmp = analysis.d_bounds_compare(code)
    fr = "-" if cmp.feng_rao is None else cmp.feng_rao
    label = f"{gO}O+{gQ}Q"
    print(f"{label:>12} {code.k:>3} {d:>8} {analysis.goppa_bound(code):>6} {cmp.d_L:>4} {fr:>4}")

# For one code, the per-s table the decoder's majority vote works with
code = build_hermitian(3, -1, 18)
print()
print(analysis.params_report(code))

# The capacity inequalities are checked numerically over a wide range of s
problems = (analysis.check_nu_lower_bound(code) + analysis.check_capacity_sandwiches(code)
            + analysis.check_tau_identities(code))
print("capacity relations:", "all hold" if not problems else problems)
