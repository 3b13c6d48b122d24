"""The maximal-corner construction, end to end.

For n = 46 variables at spread t = 3 (so n = 1 + 15*3), an ideal of initial
degree 2 carries at most 14 corners.  The witness is the Borel closure of 14
monomials: a starter, forward monomials that advance the penultimate
variable, a critic monomial, and backward monomials that shift a block back
by t.  The claim check below re-derives every one of them by explicit
search, without the closed forms.
"""

from tspread import (
    Context,
    build_omegas,
    construct_extremal_ideal,
    decompose,
    format_monomial,
    max_corners,
    omega_claim_check,
)

n, t = 46, 3
dec = decompose(n, t)
print(f"n = {n} decomposes as {dec.d} + {dec.k}*{t}")
print(f"maximal number of corners at initial degree 2: {max_corners(n, t, 2)}")
print()

report = build_omegas(n, t, 2)
print(f"j_max={report.j_max}, s={report.s}, nu_max={report.nu_max}, "
      f"critic at index {report.critic_index}")
for j, w in enumerate(report.omegas):
    tag = ""
    if j == report.critic_index:
        tag = "   <- critic"
    elif report.critic_index is not None and j > report.critic_index:
        tag = "   <- backward"
    print(f"    omega_{j:<2} = {format_monomial(w)}{tag}")
print()

print("independent claim check:",
      omega_claim_check(report.omegas, Context(n, t), 2))

ideal, _ = construct_extremal_ideal(n, t, 2)
print("corner positions (k, l) all satisfy k + t(l-1) + 1 = n:")
print("   ", report.predicted_corners.corners)
sizes = {d: len(g) for d, g in ideal.gens.items()}
print("minimal generator counts by degree:", sizes)
print()

print("the same machinery at higher initial degree (n=138, t=11, ell1=5):")
rep = build_omegas(138, 11, 5)
print(f"    j_max={rep.j_max}, s={rep.s}, nu_max={rep.nu_max}, "
      f"{rep.total} monomials; the last one is")
print("   ", format_monomial(rep.omegas[-1]))
