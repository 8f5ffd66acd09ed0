from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfcalc import catalog
from hopfcalc.characters import integrals, irr_data, regular_character
from hopfcalc.indres import (
    NotInCharacterRing, NotNormalError, c1_c2, common_idempotents, equivalence_classes,
    frobenius_reciprocity, image_of_induction, image_of_restriction, ind_matrix, ind_vector,
    indres_data, normal_formulas_check, oracle_agreement, oracle_ind, res_char, res_is_algebra_map,
    res_matrix, verify_induction_identities,
)
from hopfcalc.subnormal import SubHopf, subgroup_hopf, trivial_sub, whole

from oracles import induced_class_function, s3_table


S3 = catalog.get("S3")
TRIV, SGN, CHI2 = s3_table(S3.labels)
REG = [6, 0, 0, 0, 0, 0]


@pytest.fixture(scope="module")
def a3():
    return subgroup_hopf(S3, ["(123)"])


@pytest.fixture(scope="module")
def t12():
    return subgroup_hopf(S3, ["(12)"])


def k_chars(K):
    return [c.coeffs for c in irr_data(K.hopf).irr_chars]


def add(*vs):
    return tuple(sum(xs) for xs in zip(*vs))


def scale(c, v):
    return tuple(c * x for x in v)


def all_group_pairs():
    for name in catalog.GROUP_NAMES:
        H = catalog.get(name)
        for N in H.group.subgroups:
            yield name, N


# -- restriction and induction ---------------------------------------------------------


def test_restriction_examples(a3):
    triv, omega, omega2 = k_chars(a3)
    assert res_char(a3, CHI2).coeffs == add(omega, omega2) == (2, -1, -1)
    assert res_char(a3, SGN).coeffs == triv
    assert res_char(a3, S3.counit).coeffs == a3.hopf.counit


def test_restriction_rejects_non_class_function(a3):
    with pytest.raises(NotInCharacterRing):
        res_char(a3, S3.basis(1))


def test_induction_examples(a3, t12):
    triv, omega, omega2 = k_chars(a3)
    assert ind_vector(a3, triv) == add(TRIV, SGN)
    assert ind_vector(t12, t12.hopf.counit) == add(TRIV, CHI2) == (3, 1, 1, 1, 0, 0)
    reg = regular_character(a3.hopf)["character"].coeffs
    assert ind_vector(a3, reg) == add(TRIV, SGN, scale(2, CHI2)) == tuple(REG)


def test_matrices_are_transposes(a3):
    R, I = res_matrix(a3), ind_matrix(a3)
    assert R == [[1, 0, 0], [1, 0, 0], [0, 1, 1]]
    assert I == [list(col) for col in zip(*R)]


@pytest.mark.parametrize("name, N", list(all_group_pairs()))
def test_reciprocity_and_oracles_over_all_subgroups(name, N):
    H = catalog.get(name)
    K = SubHopf(H, [H.basis(i) for i in N])
    assert frobenius_reciprocity(K)["pass"]
    assert oracle_agreement(K)["pass"]
    assert res_is_algebra_map(K)
    elems = [next(i for i, x in enumerate(v) if x) for v in K.basis]
    for alpha in k_chars(K):
        assert list(ind_vector(K, alpha)) == induced_class_function(H.group, elems, alpha)
    assert all(v["pass"] if isinstance(v, dict) else v for v in verify_induction_identities(K).values())


def test_module_oracle_is_independent_of_reciprocity(t12):
    # H (x)_K V built explicitly for the sign character of <(12)>
    sgn_idx = [c for c in k_chars(t12)].index((1, -1))
    assert oracle_ind(t12, sgn_idx) == add(SGN, CHI2)


@pytest.mark.parametrize("name", ["dual:S3", "double:C2", "double:S3"])
def test_reciprocity_beyond_group_algebras(name):
    H = catalog.get(name)
    K = trivial_sub(H)
    assert frobenius_reciprocity(K)["pass"] and oracle_agreement(K)["pass"]
    assert ind_vector(K, K.hopf.counit) == regular_character(H)["character"].coeffs


# -- m_i and the identities that hold for every K -------------------------------------


def test_common_idempotents_a3(a3):
    ms, A, B = common_idempotents(a3)
    third = Fraction(1, 3)
    assert ms == [(third, 0, 0, 0, third, third), (2 * third, 0, 0, 0, -third, -third)]
    assert A == [[0, 1], [2]] and B == [[0], [1, 2]]
    e_chi2 = irr_data(S3).central_idempotents[2].coeffs
    assert ms[1] == e_chi2


def test_common_idempotents_extremes():
    ms, A, B = common_idempotents(whole(S3))
    assert ms == [e.coeffs for e in irr_data(S3).central_idempotents]
    assert A == [[0], [1], [2]]
    ms, A, B = common_idempotents(trivial_sub(S3))
    assert ms == [S3.unit] and A == [[0, 1, 2]] and B == [[0]]


def test_induction_identities_examples(a3):
    triv, omega, omega2 = k_chars(a3)
    lhs = res_char(a3, scale(2, CHI2)).coeffs
    assert lhs == scale(Fraction(6, 3), add(omega, omega2))
    # chi2 * ind(eps) = ind(res(chi2))
    left = S3.dual_mul(CHI2, ind_vector(a3, triv))
    right = ind_vector(a3, res_char(a3, CHI2).coeffs)
    assert left == right == scale(2, CHI2)


@pytest.mark.parametrize("K", [whole(S3), trivial_sub(S3)], ids=["K=H", "K=k"])
def test_identities_in_degenerate_cases(K):
    rep = verify_induction_identities(K)
    assert all(v["pass"] if isinstance(v, dict) else v for v in rep.values())


def test_inclusions_hold_without_normality(t12):
    rep = verify_induction_identities(t12)
    assert rep["Prop-incls"]["pass"]


@given(data=st.data())
def test_reciprocity_and_projection_formula_random(data):
    K = subgroup_hopf(S3, ["(12)"])
    Kh = K.hopf
    ints = st.integers(-4, 4)
    x = data.draw(st.lists(ints, min_size=3, max_size=3))
    y = data.draw(st.lists(ints, min_size=2, max_size=2))
    chi = tuple(sum(c * t[i] for c, t in zip(x, (TRIV, SGN, CHI2))) for i in range(6))
    beta = tuple(sum(c * a[i] for c, a in zip(y, k_chars(K))) for i in range(2))
    from hopfcalc.characters import multiplicity
    assert multiplicity(S3, ind_vector(K, beta), chi) == multiplicity(Kh, beta, res_char(K, chi).coeffs)
    assert S3.dual_mul(chi, ind_vector(K, beta)) == ind_vector(K, Kh.dual_mul(res_char(K, chi).coeffs, beta))
    assert S3.dual_mul(ind_vector(K, beta), chi) == ind_vector(K, Kh.dual_mul(beta, res_char(K, chi).coeffs))


# -- normal case ------------------------------------------------------------------------


def test_equivalence_classes_a3(a3):
    eq = equivalence_classes(a3)
    assert eq["C"] == [[0, 1], [2]] and eq["D"] == [[0], [1, 2]]
    assert eq["s"] == eq["s_prime"] == 2
    assert eq["a"] == [add(TRIV, SGN), scale(2, CHI2)]
    assert eq["alpha"] == [(1, 1, 1), (2, -1, -1)]
    assert all(v for k, v in eq.items() if isinstance(v, bool))


def test_equivalence_classes_extremes():
    eq = equivalence_classes(whole(S3))
    assert eq["C"] == [[0], [1], [2]] and eq["s_prime"] == 3
    Q8 = catalog.get("Q8")
    eq = equivalence_classes(subgroup_hopf(Q8, ["-1"]))
    assert eq["s_equals_s_prime"] and eq["C_equals_A"] and eq["D_equals_B"]
    assert eq["C"] == [[0, 1, 2, 3], [4]]


def test_normal_formula_instances(a3):
    triv, omega, omega2 = k_chars(a3)
    assert res_char(a3, CHI2).coeffs == scale(Fraction(2, 2), add(omega, omega2))
    assert ind_vector(a3, omega) == scale(Fraction(1, 4) * Fraction(6, 3), scale(2, CHI2)) == tuple(CHI2)
    up = ind_vector(a3, triv)
    assert ind_vector(a3, res_char(a3, up).coeffs) == scale(2, up)
    rep = normal_formulas_check(a3)
    assert rep["Eq-restrform"] and rep["Eq-indform"] and rep["Rem-comb"] and rep["ratio"] == 2


def test_c1_c2_a3(a3):
    rep = c1_c2(a3)
    one_minus_sgn = add(TRIV, scale(-1, SGN))
    assert rep["c1_functionals"] == [add(TRIV, SGN), tuple(CHI2)]
    assert rep["c2_functionals"] == [scale(-1, one_minus_sgn)]
    assert rep["dims"] == (2, 1)
    for key in ("direct_sum", "orthogonal", "subalgebras", "c2_equals_ker_res", "c1_equals_end_K"):
        assert rep[key], key
    assert res_char(a3, one_minus_sgn).coeffs == (0, 0, 0)


def test_c1_c2_whole():
    rep = c1_c2(whole(S3))
    assert rep["dims"] == (3, 0)


def test_image_of_induction_a3(a3):
    rep = image_of_induction(a3)
    assert rep["dim"] == 2 and rep["four_way_equal"]
    assert rep["dims"] == {"ind": 2, "eps_up_C": 2, "FK_cap_C": 2, "C1": 2}
    assert rep["Lemma-formula"] and rep["Rem-onb"]
    assert rep["eps_up"] == add(TRIV, SGN)


def test_image_of_induction_extremes():
    rep = image_of_induction(whole(S3))
    assert rep["eps_up"] == S3.counit and rep["dim"] == 3
    rep = image_of_induction(trivial_sub(S3))
    assert rep["dim"] == 1
    assert rep["eps_up"] == scale(6, integrals(S3).t.coeffs) == tuple(REG)


def test_image_of_restriction_a3(a3):
    rep = image_of_restriction(a3)
    assert rep == {"dim": 2, "equal": True, "res_injective_on_C1": True, "res_onto_image": True,
                   "multiplicative": True}


@pytest.mark.parametrize("fn", [equivalence_classes, normal_formulas_check, c1_c2,
                                image_of_induction, image_of_restriction])
def test_normal_only_operations_refuse_non_normal(t12, fn):
    with pytest.raises(NotNormalError, match="skipped: K not normal"):
        fn(t12)


@pytest.mark.parametrize("name, gens", [
    ("Q8", ["-1"]), ("C4", ["g^2"]), ("D4", ["(13)", "(24)"]), ("Q8", ["i"]), ("D4", ["(1234)"]),
])
def test_normal_case_over_catalog(name, gens):
    K = subgroup_hopf(catalog.get(name), gens)
    assert all(v for k, v in equivalence_classes(K).items() if isinstance(v, bool))
    nf = normal_formulas_check(K)
    assert nf["Eq-restrform"] and nf["Eq-indform"] and nf["Rem-comb"]
    cc = c1_c2(K)
    assert all(v for k, v in cc.items() if isinstance(v, bool))
    assert sum(cc["dims"]) == len(irr_data(K.parent).irr_chars)
    ii = image_of_induction(K)
    assert ii["four_way_equal"] and ii["Lemma-formula"] and ii["Rem-onb"]
    assert image_of_restriction(K)["equal"]


def test_indres_data_json():
    doc = indres_data(subgroup_hopf(S3, ["(12)"])).to_json()
    assert doc["c1_basis"] == "skipped: K not normal"
    doc = indres_data(subgroup_hopf(S3, ["(123)"])).to_json()
    assert len(doc["c1_basis"]) == 2 and len(doc["c2_basis"]) == 1
