import pytest

from hopfcalc import catalog
from hopfcalc.characters import cocommutative_space, irr_data
from hopfcalc.doublerep import (
    ON_ALGEBRA, ON_DUAL, a0_actions, action, commutant, commutant_splitting, fourier_equivariance,
    isotypic_components, module_failures, sp_identity, straightening_failures, verify_commutant,
    verify_isotypic,
)
from hopfcalc.subnormal import dual_decomposition, subgroup_hopf, trivial_sub, whole


def inverse_in(G, g):
    return next(x for x in range(G.order) if G.table[g][x] == 0)


def test_group_elements_act_by_conjugation_on_algebra():
    H = catalog.get("S3")
    G = H.group
    act = action(H, ON_ALGEBRA)
    for g in range(6):
        for x in range(6):
            conj = G.table[G.table[g][x]][inverse_in(G, g)]
            assert act.act_alg(H.basis(g), H.basis(x)) == H.basis(conj)


@pytest.mark.parametrize("name", ["S3", "dual:S3", "double:C2"])
def test_unit_and_counit_act_as_identity(name):
    H = catalog.get(name)
    n = H.dim
    for act in a0_actions(H):
        for v in range(n):
            assert act.act_alg(H.unit, H.basis(v)) == H.basis(v)
            assert act.act_dual(H.counit, H.basis(v)) == H.basis(v)


def test_z2_dual_side_action_on_algebra():
    H = catalog.get("C2")
    g = 1
    assert action(H, ON_ALGEBRA).act_dual(H.basis(g), H.basis(g)) == H.basis(g)
    assert action(H, ON_ALGEBRA).act_dual(H.basis(0), H.basis(g)) == H.zero()


@pytest.mark.parametrize("name", catalog.ACCEPTANCE_CATALOG)
def test_actions_satisfy_double_relations(name):
    for act in a0_actions(catalog.get(name)):
        assert not module_failures(act)
        assert not straightening_failures(act)


@pytest.mark.parametrize("name, count", [("C2", 8), ("S3", 72)])
def test_fourier_equivariance_counts(name, count):
    rep = fourier_equivariance(catalog.get(name))
    assert rep["pass"] and rep["equations"] == count and rep["max_deviation"] == 0


@pytest.mark.parametrize("name", ["C3", "dual:S3", "Q8", "double:C2"])
def test_fourier_equivariance_holds(name):
    assert fourier_equivariance(catalog.get(name))["pass"]


@pytest.mark.parametrize("name, dim", [("S3", 3), ("dual:S3", 6), ("C4", 4), ("double:C2", 4)])
def test_commutant_dimension(name, dim):
    H = catalog.get(name)
    assert commutant(H, ON_DUAL).dim == dim
    assert commutant(H, ON_ALGEBRA).dim == dim


@pytest.mark.parametrize("name", catalog.ACCEPTANCE_CATALOG)
def test_commutant_contract(name):
    H = catalog.get(name)
    rep = verify_commutant(H)
    for carrier in (ON_DUAL, ON_ALGEBRA):
        assert all(rep[carrier].values()), rep
        assert rep[carrier]["dim"] == cocommutative_space(H).dim
    comm = commutant(H, ON_DUAL)
    assert comm.contains(sp_identity(H.dim))


def test_isotypic_components_of_s3():
    H = catalog.get("S3")
    assert sorted(W.dim for W in isotypic_components(H)) == [1, 2, 3]
    # supported on conjugacy classes
    for W in isotypic_components(H):
        supports = {frozenset(i for i, x in enumerate(v) if x) for v in W.basis}
        assert frozenset().union(*supports) in {frozenset(c) for c in H.group.conjugacy_classes}


def test_isotypic_components_of_z2():
    assert [W.dim for W in isotypic_components(catalog.get("C2"))] == [1, 1]


@pytest.mark.parametrize("name", catalog.ACCEPTANCE_CATALOG)
def test_isotypic_contract(name):
    H = catalog.get(name)
    rep = verify_isotypic(H)
    assert sum(rep["dims"]) == H.dim
    assert all(v for k, v in rep.items() if k != "dims"), rep
    assert len(rep["dims"]) == len(irr_data(H).char_ring_idempotents)


@pytest.mark.parametrize("name, sub", [
    ("S3", ["(123)"]), ("Q8", ["-1"]), ("C4", ["g^2"]), ("D4", ["(13)", "(24)"]),
])
def test_endomorphisms_split_over_normal_decomposition(name, sub):
    H = catalog.get(name)
    K = subgroup_hopf(H, sub)
    dec = dual_decomposition(K)
    split = commutant_splitting(H, dec["FK"], dec["perp"])
    assert split["direct_sum"] and split["closed"] and split["cross_products_zero"]
    assert dec["commutant_splitting"]


@pytest.mark.parametrize("name", ["S3", "dual:S3"])
def test_endomorphisms_split_extreme_cases(name):
    H = catalog.get(name)
    for K in (trivial_sub(H), whole(H)):
        assert dual_decomposition(K)["commutant_splitting"]
