"""The same machinery on algebras that are not group algebras.

Covers the dual k^S3, the double D(S3), and kS3 sitting inside D(S3) as a
Hopf subalgebra that is not normal. Ends with a small verification report.
"""

from hopfcalc import catalog, is_normal
from hopfcalc.characters import irr_data
from hopfcalc.hopf import double_embeddings
from hopfcalc.indres import frobenius_reciprocity, ind_vector, verify_induction_identities
from hopfcalc.report import run_suite
from hopfcalc.subnormal import SubHopf

dual = catalog.get("dual:S3")
print("k^S3: dim", dual.dim, "commutative:", dual.algebra.is_commutative())
print("  Irr degrees", irr_data(dual).degrees, " dual degrees", irr_data(dual).dual_degrees)

B = catalog.get("S3")
D = catalog.get("double:S3")
print("D(S3): dim", D.dim, " Irr degrees", irr_data(D).degrees)

of_alg, of_dual = double_embeddings(B)
for name, emb in (("kS3", of_alg), ("k^S3", of_dual)):
    K = SubHopf(D, [emb(B.basis(i)) for i in range(B.dim)])
    print(f"\n{name} inside D(S3): normal = {is_normal(K)['normal']}")
    print("  reciprocity holds:", frobenius_reciprocity(K)["pass"])
    # these identities need no normality
    ids = verify_induction_identities(K)
    print("  ", {k: v["pass"] for k, v in ids.items() if isinstance(v, dict)})
    up = ind_vector(K, K.hopf.counit)
    print("  eps induced has degree", D.evaluate(up, D.unit))

rep = run_suite("fourier", {"double:C2": catalog.get("double:C2")})
print("\nfourier suite on D(C2):", rep["summary"])
