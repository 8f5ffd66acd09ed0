"""Restriction and induction between kA3 and kS3, a normal pair."""

from hopfcalc import catalog, ind_char, is_normal, res_char
from hopfcalc.characters import irr_data
from hopfcalc.indres import c1_c2, common_idempotents, equivalence_classes, image_of_induction, image_of_restriction
from hopfcalc.subnormal import dual_decomposition, subgroup_hopf


def show(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


H = catalog.get("S3")
K = subgroup_hopf(H, ["(123)"])
print("K spans", K.hopf.labels)
print("normality verdicts:", is_normal(K))

chars_H = irr_data(H).irr_chars
chars_K = irr_data(K.hopf).irr_chars
print("\nrestrictions:")
for name, chi in zip(("1", "sgn", "chi2"), chars_H):
    print(f"  {name:5s} -> {show(res_char(K, chi).coeffs)}")
print("inductions:")
for i, alpha in enumerate(chars_K):
    print(f"  alpha{i} -> {show(ind_char(K, alpha).coeffs)}")

ms, A, B = common_idempotents(K)
print("\ncentral idempotents of H lying in K:")
for m, a, b in zip(ms, A, B):
    print(f"  {show(m)}  H-side {a}  K-side {b}")

eq = equivalence_classes(K)
print("classes of Irr(H):", eq["C"], " classes of Irr(K):", eq["D"])

# C(H) splits into the part seen by K and the kernel of restriction.
cc = c1_c2(K)
print("C1 basis:", [show(v) for v in cc["c1_functionals"]])
print("C2 basis:", [show(v) for v in cc["c2_functionals"]])

ii = image_of_induction(K)
print("\nimage of induction: dim", ii["dim"], "; four descriptions agree:", ii["four_way_equal"])
print("eps induced =", show(ii["eps_up"]))
print("image of restriction:", image_of_restriction(K))

dec = dual_decomposition(K)
print("H* = F(K) + K-perp with dimensions", dec["dims"])
