"""Integrals, characters and the Fourier transform of the group algebra kS3.

Run with ``python walkthroughs/characters_of_s3.py``.
"""

from hopfcalc import catalog, fourier, integrals, irr_data
from hopfcalc.characters import multiplicity, regular_character
from hopfcalc.doublerep import ON_DUAL, commutant, isotypic_components


def show(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


H = catalog.get("S3")
print("basis:", H.labels)

# The normalized integral of kS3 is the average of the group elements,
# and the dual integral t is the delta function at the identity.
ints = integrals(H)
print("Lambda =", show(ints.Lambda.coeffs))
print("t      =", show(ints.t.coeffs))
print("t(Lambda) =", H.evaluate(ints.t.coeffs, ints.Lambda.coeffs))

data = irr_data(H)
print("\nirreducible characters (degree: values on the basis)")
for chi in data.irr_chars:
    print(f"  {chi.degree}: {show(chi.coeffs)}")

reg = regular_character(H)
print("regular character =", show(reg["character"].coeffs), " = |H| t:", reg["f1"])

# Multiplicities come from the bilinear form (chi, mu) = (chi mu)(Lambda).
chi2 = data.irr_chars[2].coeffs
sq = H.dual_mul(chi2, chi2)
print("chi2^2 decomposes with multiplicities",
      [multiplicity(H, sq, c.coeffs) for c in data.irr_chars])

# Fourier sends g to the delta function at g^-1.
g = H.labels.index("(123)")
print("\nF((123)) =", show(fourier(H, H.basis(g)).coeffs))

# The endomorphisms of H* commuting with the double action form a
# 3-dimensional space, matching the three irreducible characters.
print("commutant dimension on H*:", commutant(H, ON_DUAL).dim)
print("isotypic components of H*:", sorted(W.dim for W in isotypic_components(H)))
