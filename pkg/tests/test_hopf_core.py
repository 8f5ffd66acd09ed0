import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfcalc import catalog
from hopfcalc.groups import FiniteGroup, GroupTableError, cyclic_group, symmetric_group_3
from hopfcalc.hopf import (
    FiniteDimHopf, HopfAxiomError, ParentMismatch, double_dual_pairing_ok, double_embeddings,
    drinfeld_double, dual_hopf, group_algebra, harpoon, verify_hopf_axioms,
)


def kg(name):
    return catalog.get(name)


def test_z2_group_algebra():
    H = group_algebra([[0, 1], [1, 0]], ["e", "g"])
    g = H.basis(1)
    assert H.comul(g) == {(1, 1): 1}
    assert H.S(g) == g
    assert H.eps(g) == 1


def test_s3_passes_axioms():
    H = kg("S3")
    assert H.dim == 6
    assert H.is_cocommutative()
    assert verify_hopf_axioms(H).ok


def test_non_associative_table_is_not_a_group():
    # a Latin square with identity 0 and inverses but not associative
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupTableError, match="not a group"):
        group_algebra(table)


def test_missing_inverse_is_not_a_group():
    with pytest.raises(GroupTableError, match="not a group"):
        FiniteGroup([[0, 1], [1, 1]])


def test_dual_of_z2():
    H = dual_hopf(kg("C2"))
    assert H.labels == ["delta_1", "delta_g"]
    # pointwise product, unit = delta_e + delta_g
    assert H.mul(H.basis(0), H.basis(1)) == (0, 0)
    assert H.mul(H.basis(1), H.basis(1)) == H.basis(1)
    assert H.unit == (1, 1)


def test_dual_of_commutative_is_cocommutative():
    D = dual_hopf(kg("S3"))
    assert D.is_commutative()
    assert D.is_cocommutative() is False
    assert dual_hopf(dual_hopf(kg("S3"))).is_cocommutative()


def test_double_dual_pairing():
    for name in ("S3", "Q8", "C4"):
        assert double_dual_pairing_ok(kg(name))


def test_double_of_z2():
    D = kg("double:C2")
    assert D.dim == 4
    assert D.is_commutative() and D.is_cocommutative()


def test_double_of_s3_axioms():
    D = kg("double:S3")
    assert D.dim == 36
    assert verify_hopf_axioms(D).ok


def test_double_of_z3_is_involutive():
    D = kg("double:C3")
    rep = verify_hopf_axioms(D)
    assert rep.ok
    assert all(D.S(D.S(D.basis(i))) == D.basis(i) for i in range(D.dim))


def test_double_counit_on_unit():
    D = kg("double:S3")
    assert D.eps(D.unit) == 1


def test_antipode_inverse_matches_antipode_for_semisimple():
    for name in ("S3", "dual:S3", "double:C3"):
        H = kg(name)
        assert all(H.S_inv(H.basis(i)) == H.S(H.basis(i)) for i in range(H.dim))


def test_corrupted_multiplication_gives_associativity_witness():
    H = kg("S3")
    doc = H.to_json()
    doc["mult"][5][3] = "2"
    bad = FiniteDimHopf.from_json(doc)
    rep = verify_hopf_axioms(bad)
    assert not rep.ok
    witness = rep.failures()["associativity"]
    assert len(witness) == 3


def test_corrupted_double_construction_fails_loudly(monkeypatch):
    H = kg("S3")
    doc = H.to_json()
    doc["antipode"][1][1], doc["antipode"][2][1] = 0, 1   # S((12)) := (13)
    broken = FiniteDimHopf.from_json(doc)
    with pytest.raises(HopfAxiomError):
        drinfeld_double(broken)


@pytest.mark.parametrize("name", ["C2", "S3", "dual:S3", "double:C2", "double:C3"])
def test_json_round_trip_is_bit_exact(name):
    H = kg(name)
    text = H.to_json_str()
    again = FiniteDimHopf.from_json(json.loads(text))
    assert again.to_json_str() == text
    assert again.digest == H.digest


def test_double_embeddings_reproduce_halves():
    H = kg("S3")
    D = kg("double:S3")
    of_alg, of_dual = double_embeddings(H)
    n = H.dim
    for i, j in itertools.product(range(n), repeat=2):
        a, b = H.basis(i), H.basis(j)
        assert D.mul(of_alg(a), of_alg(b)) == of_alg(H.mul(a, b))
        assert D.mul(of_dual(a), of_dual(b)) == of_dual(H.dual_mul(a, b))
    for i in range(n):
        f = H.basis(i)
        # H^{*cop}: the two legs come out swapped
        want = {}
        for (j, k), c in H.dual_comul(f).items():
            for (p, q), x in {(j, k): c}.items():
                want[(p, q)] = x
        got = D.comul(of_dual(f))
        flipped = {}
        for (u, v), c in got.items():
            flipped[(v // n, u // n)] = flipped.get((v // n, u // n), 0) + c
        assert {k: v for k, v in flipped.items() if v} == want


def test_counit_and_antipode_identities_everywhere():
    for name in catalog.ACCEPTANCE_CATALOG:
        rep = verify_hopf_axioms(kg(name))
        for key in ("counit", "antipode_left", "antipode_right"):
            assert rep.results[key]["pass"], (name, key)


def test_harpoon_examples():
    H = kg("S3")
    eps = H.functional(H.counit)
    for i in range(H.dim):
        h = H.element(H.basis(i))
        assert harpoon(eps, h, "f⇀h").coeffs == h.coeffs
        assert harpoon(h, eps, "h↼f").coeffs == h.coeffs
    Z2 = kg("C2")
    t = Z2.functional((1, 0))
    g = Z2.element(Z2.basis(1))
    assert harpoon(g, t, "a⇀f").coeffs == (0, 1)
    assert harpoon(g, t, "a->f").coeffs == (0, 1)


def test_harpoon_module_axiom_on_z3():
    H = kg("C3")
    n = H.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        a, b, f = H.basis(i), H.basis(j), H.basis(k)
        assert H.hit_dual(H.mul(a, b), f) == H.hit_dual(a, H.hit_dual(b, f))
        # f -> (g -> t) versus (fg) -> t on the algebra side
        h = H.basis(j)
        assert H.hit_alg(H.dual_mul(a, f), h) == H.hit_alg(a, H.hit_alg(f, h))


def test_harpoon_errors():
    H, K = kg("S3"), kg("C2")
    with pytest.raises(ParentMismatch):
        harpoon(H.functional(H.counit), K.element(K.unit), "f⇀h")
    with pytest.raises(ValueError):
        harpoon(H.functional(H.counit), H.element(H.unit), "sideways")


@pytest.mark.parametrize("name", ["S3", "Q8", "dual:S3", "double:C2"])
@given(data=st.data())
def test_hit_is_a_module_action(name, data):
    H = kg(name)
    n = H.dim
    coeff = st.lists(st.integers(-2, 2), min_size=n, max_size=n).map(tuple)
    a, b, f = data.draw(coeff), data.draw(coeff), data.draw(coeff)
    assert H.hit_dual(H.mul(a, b), f) == H.hit_dual(a, H.hit_dual(b, f))
    assert H.dual_hit(f, H.mul(a, b)) == H.dual_hit(H.dual_hit(f, a), b)


@given(st.permutations(range(6)))
def test_relabelled_s3_is_still_a_hopf_algebra(perm):
    G = symmetric_group_3()
    inv = {p: i for i, p in enumerate(perm)}
    table = [[perm[G.table[inv[a]][inv[b]]] for b in range(6)] for a in range(6)]
    H = group_algebra(table)
    assert verify_hopf_axioms(H).ok
    assert H.eps(H.unit) == 1


def test_cyclic_group_labels():
    assert cyclic_group(4).labels == ["1", "g", "g^2", "g^3"]


def test_group_conductor_is_exponent():
    assert kg("Q8").conductor == 4
    assert kg("S3").conductor == 6
    assert kg("C5").conductor == 5


def test_unit_is_fraction_free_for_groups():
    H = kg("D4")
    assert all(isinstance(x, int) for x in H.unit)
    assert Fraction(1) == H.eps(H.unit)
