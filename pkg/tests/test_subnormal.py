import itertools

import pytest
from hypothesis import given, strategies as st

from hopfcalc import catalog
from hopfcalc.characters import integrals, irr_data
from hopfcalc.subnormal import (
    IdealSpec, NotASubobject, SubcoalgebraSpec, SubHopf, ad_invariance, coalgebra_character,
    conormal_test, dual_decomposition, fourier_of_subcoalgebra, is_normal, simple_subcoalgebra,
    sub_from_json, subgroup_hopf, sum_of_simple, trivial_sub, whole,
)


def normal_by_conjugation(G, N):
    inv = [next(x for x in range(G.order) if G.table[g][x] == 0) for g in range(G.order)]
    return all(G.table[G.table[g][n]][inv[g]] in N for g in range(G.order) for n in N)


def span_of(H, elems):
    return [H.basis(i) for i in elems]


def test_subgroup_dimensions():
    H = catalog.get("S3")
    assert subgroup_hopf(H, ["(123)"]).dim == 3
    assert subgroup_hopf(H, ["(12)"]).dim == 2
    K = subgroup_hopf(H, [])
    assert K.dim == 1 and K.basis == [H.unit]


def test_subgroup_rejects_unknown_generator():
    with pytest.raises(NotASubobject):
        subgroup_hopf(catalog.get("S3"), ["(1234)"])


def test_subspace_that_is_not_a_subalgebra_is_rejected():
    H = catalog.get("S3")
    with pytest.raises(NotASubobject, match="multiplication"):
        SubHopf(H, span_of(H, [0, 1, 4]))


def test_normality_examples():
    H = catalog.get("S3")
    a3 = is_normal(subgroup_hopf(H, ["(123)"]))
    assert a3["normal"] and a3["direct"] and a3["integral_central"] and a3["character_central"]
    assert not is_normal(subgroup_hopf(H, ["(12)"]))["normal"]
    assert is_normal(whole(H))["normal"] and is_normal(trivial_sub(H))["normal"]


@pytest.mark.parametrize("name", catalog.GROUP_NAMES)
def test_normality_matches_group_theory(name):
    H = catalog.get(name)
    G = H.group
    for N in G.subgroups:
        K = SubHopf(H, span_of(H, N))
        assert is_normal(K)["normal"] == normal_by_conjugation(G, N), (name, N)


def test_coalgebra_character_examples():
    H = catalog.get("S3")
    g = H.labels.index("(12)")
    assert coalgebra_character(SubcoalgebraSpec(H, [H.basis(g)])) == H.basis(g)
    a3 = [H.labels.index(x) for x in ("()", "(123)", "(132)")]
    assert coalgebra_character(SubcoalgebraSpec(H, span_of(H, a3))) == \
        tuple(1 if i in a3 else 0 for i in range(6))


def test_coalgebra_character_of_four_dimensional_block():
    H = catalog.get("dual:S3")
    data = irr_data(H)
    d = data.dual_degrees.index(2)
    C = simple_subcoalgebra(H, d)
    assert C.dim == 4
    assert coalgebra_character(C) == tuple(2 * x for x in data.dual_irr[d].coeffs)


def test_ad_invariance_examples():
    H = catalog.get("S3")
    cls = [H.labels.index(x) for x in ("(12)", "(13)", "(23)")]
    rep = ad_invariance(SubcoalgebraSpec(H, span_of(H, cls)))
    assert rep["invariant"] and rep["character_central"]
    assert not ad_invariance(SubcoalgebraSpec(H, span_of(H, cls[:1])))["invariant"]
    assert ad_invariance(SubcoalgebraSpec(H, span_of(H, range(6))))["invariant"]


def is_union_of_classes(G, S):
    return all(set(c) <= S or not (set(c) & S) for c in G.conjugacy_classes)


def test_ad_invariance_is_class_union_exhaustive_s3():
    H = catalog.get("S3")
    for r in range(1, 7):
        for S in itertools.combinations(range(6), r):
            got = ad_invariance(SubcoalgebraSpec(H, span_of(H, S)))["invariant"]
            assert got == is_union_of_classes(H.group, set(S))


@pytest.mark.parametrize("name", ["D4", "Q8"])
@given(data=st.data())
def test_ad_invariance_is_class_union_sampled(name, data):
    H = catalog.get(name)
    G = H.group
    pick = data.draw(st.sets(st.sampled_from(range(G.order)), min_size=1))
    # bias towards class unions, which are rare among random subsets
    if data.draw(st.booleans()):
        pick = set().union(*(c for c in G.conjugacy_classes if set(c) & pick))
    got = ad_invariance(SubcoalgebraSpec(H, span_of(H, sorted(pick))))["invariant"]
    assert got == is_union_of_classes(G, pick)


def test_augmentation_ideal_is_conormal():
    H = catalog.get("S3")
    aug = IdealSpec(H, [tuple(1 if i == g else (-1 if i == 0 else 0) for i in range(6)) for g in range(1, 6)])
    assert aug.dim == 5
    assert conormal_test(aug)["conormal"]


def test_ideals_of_function_algebra():
    H = catalog.get("dual:S3")
    cls = [H.labels.index(f"delta_{x}") for x in ("(12)", "(13)", "(23)")]
    rep = conormal_test(IdealSpec(H, span_of(H, cls)))
    assert rep["conormal"] and rep["character_central"] and rep["annihilator_ad_invariant"]
    assert not conormal_test(IdealSpec(H, span_of(H, cls[:1])))["conormal"]


def test_non_ideal_rejected():
    H = catalog.get("S3")
    with pytest.raises(NotASubobject, match="ideal"):
        IdealSpec(H, [H.unit])


def test_dual_decomposition_a3():
    H = catalog.get("S3")
    dec = dual_decomposition(subgroup_hopf(H, ["(123)"]))
    assert dec["dims"] == (3, 3)
    for key in ("trivial_intersection", "dimensions_add_up", "sum_is_everything",
                "restriction_compatible", "fourier_is_sum_of_blocks", "summands_commutant_stable"):
        assert dec[key], key


@pytest.mark.parametrize("name", ["S3", "Q8", "dual:S3", "double:C2"])
def test_dual_decomposition_trivial_sub(name):
    H = catalog.get(name)
    dec = dual_decomposition(trivial_sub(H))
    assert dec["dims"] == (1, H.dim - 1)
    assert dec["FK"].contains(integrals(H).t.coeffs)
    assert all(H.evaluate(f, H.unit) == 0 for f in dec["perp"].basis)


def test_dual_decomposition_non_normal_skips_commutant():
    dec = dual_decomposition(subgroup_hopf(catalog.get("S3"), ["(12)"]))
    assert dec["dims"] == (2, 4) and dec["trivial_intersection"]
    assert "summands_commutant_stable" not in dec


@pytest.mark.parametrize("name", ["S3", "dual:S3", "Q8"])
def test_fourier_of_simple_subcoalgebra_sums(name):
    H = catalog.get(name)
    k = len(irr_data(H).dual_irr)
    for r in (1, 2):
        for idx in itertools.combinations(range(k), r):
            assert fourier_of_subcoalgebra(sum_of_simple(H, idx))


def test_sub_json_roundtrip():
    H = catalog.get("S3")
    K = subgroup_hopf(H, ["(123)"])
    doc = K.to_json()
    assert doc["subgroup"] == ["()", "(123)", "(132)"]
    assert sub_from_json(H, doc).space == K.space
    assert sub_from_json(H, {"subgroup": ["(123)"]}).space == K.space
    assert sub_from_json(H, {"basis": doc["basis"]}).space == K.space


def test_sub_json_wrong_parent():
    K = subgroup_hopf(catalog.get("S3"), ["(123)"])
    with pytest.raises(NotASubobject, match="different parent"):
        sub_from_json(catalog.get("D4"), K.to_json())


def test_subhopf_structure_is_a_hopf_algebra():
    K = subgroup_hopf(catalog.get("D4"), ["(1234)"])
    Kh = K.hopf
    assert Kh.dim == 4
    assert irr_data(Kh).degrees == [1, 1, 1, 1]
