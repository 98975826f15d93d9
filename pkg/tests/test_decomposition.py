import random

import pytest

import oracles
from hopfkit.corpus import group_endomorphisms
from hopfkit.decomposition import (DecompositionError, EndoMatrix, endo_matrix_compose, endo_matrix_join,
                                   endo_matrix_split, enumerate_hopf_morphisms, fitting_decompose,
                                   fitting_power, group_factorization, hopf_endomorphisms_of_tensor,
                                   hopfaut_tensor, is_convolution_group, is_nilpotent_endo, krs_decompose,
                                   krs_match, matrix_normality_check, power_automorphism_check,
                                   radford_decompose, zenthom)
from hopfkit.double import tensor_form
from hopfkit.groups import cyclic, direct_product, parse_group_spec, symmetric
from hopfkit.hopf import (build_dual_group_algebra, build_group_algebra, group_hom_map, normality,
                          tensor_hopf)

kZ2 = build_group_algebra(cyclic(2))


def test_fitting_power_doubling_on_z4():
    H = build_group_algebra(cyclic(4))
    f = group_hom_map(H, H, [(2 * x) % 4 for x in range(4)])
    assert fitting_power(f) == 2
    assert fitting_power(H.identity_map()) == 1


def test_radford_on_s3_projection():
    S3 = symmetric(3)
    H = build_group_algebra(S3)
    # endo with image a subgroup of order 2
    f = next(f for f in group_endomorphisms(H) if len({next(iter(c)) for c in f.mat.columns}) == 2)
    R = radford_decompose(f)
    assert R.dims == (2, 3)
    assert R.bijective and R.idempotent
    assert R.img_p_equals_coinv
    # image subgroup is not normal so f is not normal and the split is not a tensor product
    assert not normality(f, "normal")
    with pytest.raises(DecompositionError):
        fitting_decompose(f)


def test_fitting_on_z6_idempotent():
    H = build_group_algebra(cyclic(6))
    f = group_hom_map(H, H, [(3 * x) % 6 for x in range(6)])
    TF = fitting_decompose(f)
    assert sorted(F.dim for F in TF.factors) == [2, 3]
    assert TF.certified
    assert TF.verify()["all"]


def test_fitting_conormal_only_uses_dual():
    H = build_group_algebra(symmetric(3))
    f = next(f for f in group_endomorphisms(H) if len({next(iter(c)) for c in f.mat.columns}) == 2)
    assert normality(f, "conormal") and not normality(f, "normal")
    TF = fitting_decompose(f, "conormal")
    assert TF.certified
    assert TF.certificate.startswith("on the dual: algebra isomorphism verified")


def test_nilpotent():
    H = build_group_algebra(cyclic(4))
    f = group_hom_map(H, H, [(2 * x) % 4 for x in range(4)])
    ok, n = is_nilpotent_endo(f)
    assert ok and n == 2
    assert not is_nilpotent_endo(H.identity_map())[0]


@pytest.mark.parametrize("g,k", [("cyclic:2", "cyclic:2"), ("symmetric:3", "cyclic:2"),
                                 ("cyclic:4", "cyclic:2"), ("dihedral:8", "cyclic:4")])
def test_hom_enumeration_counts(g, k):
    G, K = parse_group_spec(g), parse_group_spec(k)
    kG, kK = build_group_algebra(G, 12), build_group_algebra(K, 12)
    duG, duK = build_dual_group_algebra(G, 12), build_dual_group_algebra(K, 12)
    assert len(enumerate_hopf_morphisms(kG, kK)) == oracles.count_homs(G.table, K.table)
    assert len(enumerate_hopf_morphisms(duG, duK)) == oracles.count_homs(K.table, G.table)
    for f in enumerate_hopf_morphisms(kG, duK) + enumerate_hopf_morphisms(duG, kK):
        assert f.is_hopf


def test_zenthom_examples():
    kS3 = build_group_algebra(symmetric(3))
    Z = zenthom(kS3, kS3)
    assert len(Z) == 1 and Z[0] == kS3.trivial_map()
    Z2 = zenthom(kZ2, kZ2)
    assert len(Z2) == 2
    assert is_convolution_group(Z2)


def test_tensor_endos_match_group_oracle():
    H, K = kZ2, build_group_algebra(symmetric(3))
    mats, P = hopf_endomorphisms_of_tensor(H, K)
    T = oracles.product_table(oracles.cyclic_table(2), oracles.perm_table(oracles.dihedral_perms(3)))
    assert len(mats) == oracles.count_homs(T, T)
    for M in mats[:20]:
        assert endo_matrix_join(M, P).is_hopf


def test_z2_squared_endomorphisms():
    mats, P = hopf_endomorphisms_of_tensor(kZ2, kZ2)
    T = oracles.product_table(oracles.cyclic_table(2), oracles.cyclic_table(2))
    assert len(mats) == 16 == oracles.count_homs(T, T)
    rep = hopfaut_tensor(kZ2, kZ2)
    assert rep.order == 6 == oracles.count_auts(T)
    assert len(rep.a_set) == 4
    assert not rep.a_subset and not rep.a_group_equal
    assert rep.common_abelian_factor and rep.theorem_consistent


def test_hopfaut_z2_s3():
    rep = hopfaut_tensor(kZ2, build_group_algebra(symmetric(3)))
    T = oracles.product_table(oracles.cyclic_table(2), oracles.perm_table(oracles.dihedral_perms(3)))
    assert rep.order == 12 == oracles.count_auts(T)
    assert len(rep.a_set) == 12 and rep.a_group_equal
    assert not rep.common_factor and rep.theorem_consistent


def _swap(H):
    e, i = H.trivial_map(), H.identity_map()
    return EndoMatrix(H, H, e, i, i, e)


def test_swap_squared_is_identity():
    S = _swap(kZ2)
    SS = endo_matrix_compose(S, S)
    e, i = kZ2.trivial_map(), kZ2.identity_map()
    assert SS == EndoMatrix(kZ2, kZ2, i, e, e, i)
    P = tensor_hopf(kZ2, kZ2)
    F = endo_matrix_join(S, P)
    assert not F.mat.is_identity() and (F @ F).mat.is_identity()
    assert endo_matrix_split(F, kZ2, kZ2) == S


def test_compose_matches_join_on_random_pairs():
    H, K = kZ2, build_group_algebra(cyclic(3))
    mats, P = hopf_endomorphisms_of_tensor(H, K)
    rng = random.Random(3)
    for _ in range(25):
        g, f = rng.choice(mats), rng.choice(mats)
        lhs = endo_matrix_join(endo_matrix_compose(g, f), P)
        assert lhs == endo_matrix_join(g, P) @ endo_matrix_join(f, P)


@pytest.mark.parametrize("h,k", [("cyclic:2", "symmetric:3"), ("cyclic:2", "cyclic:2"),
                                 ("cyclic:3", "cyclic:2")])
def test_matrix_normality_characterization(h, k):
    H = build_group_algebra(parse_group_spec(h))
    K = build_group_algebra(parse_group_spec(k))
    mats, P = hopf_endomorphisms_of_tensor(H, K)
    for M in mats:
        assert matrix_normality_check(M, P)["agree"]


def test_matrix_normality_mixed_tensor():
    H = build_group_algebra(cyclic(2), 6)
    K = build_dual_group_algebra(symmetric(3), 6)
    mats, P = hopf_endomorphisms_of_tensor(H, K)
    assert mats
    for M in mats:
        assert matrix_normality_check(M, P)["agree"]


@pytest.mark.parametrize("preset", ["group:dihedral:12", "dual:product:(cyclic:2,cyclic:3)",
                                    "group:product:(symmetric:3,cyclic:4)"])
def test_krs_group_algebras(preset):
    from hopfkit.corpus import build_preset
    H = build_preset(preset)
    F1, F2 = krs_decompose(H), krs_decompose(H, reverse=True)
    assert F1.verify()["all"] and F2.verify()["all"]
    assert krs_match(F1, F2).ok


def test_two_diagonal_factorizations_of_klein_four():
    G = direct_product(cyclic(2), cyclic(2))
    H = build_group_algebra(G)
    # elements 0..3 = (0,0),(0,1),(1,0),(1,1)
    F1 = group_factorization(H, [frozenset({0, 1}), frozenset({0, 2})])
    F2 = group_factorization(H, [frozenset({0, 3}), frozenset({0, 1})])
    assert F1.verify()["all"] and F2.verify()["all"]
    m = krs_match(F1, F2)
    assert m.ok and len(m.isomorphisms) == 2


def test_krs_tensor_form_and_double():
    from hopfkit.double import drinfeld_double
    G = direct_product(cyclic(2), symmetric(3))
    TF = krs_decompose(tensor_form(symmetric(3)))
    assert TF.verify()["all"]
    D = drinfeld_double(G)
    F1, F2 = krs_decompose(D), krs_decompose(D, reverse=True)
    assert sorted(F.dim for F in F1.factors) == [2, 2, 36]
    assert F1.verify()["all"] and krs_match(F1, F2).ok


def test_power_automorphism_ratio():
    rep = power_automorphism_check(build_group_algebra(symmetric(3)))
    assert rep == {"aut_order": 72, "A2_order": 36, "ratio_ok": True}
    T = oracles.perm_table(oracles.dihedral_perms(3))
    assert rep["aut_order"] == oracles.count_auts(oracles.product_table(T, T))
