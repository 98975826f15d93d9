import pytest
from hypothesis import given, strategies as st

from hopfkit.corpus import AXIOM_CORPUS, SMALL_GROUPS, build_preset, corrupt, endo_corpus, group_endomorphisms
from hopfkit.groups import abelian_normal_with_dual_embedding, cyclic, parse_group_spec, symmetric
from hopfkit.hopf import (FinHopf, HopfError, HopfMap, build_dual_group_algebra, build_group_algebra,
                          cocomm_check, coinvariants, comm_check, conv_power, convolution, dualize,
                          eq3_check, fourier_map, grouplikes, identity, invariant_quotient, map_from_vectors,
                          normality, tensor_hopf, trivial, verify_hopf_axioms)
from hopfkit.linalg import Mat


def commutes_with_conjugation(G, images):
    return all(images[G.conj(h, x)] == G.conj(h, images[x])
               for h in G.elements() for x in G.elements())


@pytest.mark.parametrize("kind", ["group", "dual", "tensor"])
@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:3", "dihedral:6", "quaternion:8"])
def test_axioms_hold(kind, spec):
    H = build_preset(f"{kind}:{spec}")
    rep = verify_hopf_axioms(H)
    assert rep["all"], rep


@pytest.mark.parametrize("spec", ["cyclic:3", "dihedral:6"])
def test_corrupted_structure_fails(spec):
    H = corrupt(build_group_algebra(parse_group_spec(spec)))
    assert not verify_hopf_axioms(H)["all"]


def test_commutativity_flags():
    S3 = symmetric(3)
    kG, du = build_group_algebra(S3), build_dual_group_algebra(S3)
    assert kG.is_cocommutative() and not kG.is_commutative()
    assert du.is_commutative() and not du.is_cocommutative()
    Z4 = build_group_algebra(cyclic(4))
    assert Z4.is_commutative() and Z4.is_cocommutative()


def test_dual_of_dual_is_original():
    H = build_group_algebra(symmetric(3))
    DD = dualize(dualize(H))
    assert DD.same_structure(H)
    assert dualize(H).same_structure(build_dual_group_algebra(symmetric(3)))


def test_json_round_trip():
    H = build_preset("tensor:cyclic:3")
    H2 = FinHopf.from_json(H.to_json())
    assert H2.same_structure(H) and H2.name == H.name


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_grouplikes(spec):
    G = parse_group_spec(spec)
    assert len(grouplikes(build_group_algebra(G))) == G.size
    assert len(grouplikes(build_dual_group_algebra(G))) == G.abelianization[0].size


def test_group_homs_are_hopf_and_non_homs_are_not():
    S3 = symmetric(3)
    H = build_group_algebra(S3)
    for f in group_endomorphisms(H):
        assert f.is_hopf
    # a bijection of basis elements that is not a group hom
    perm = [0, 2, 1, 3, 4, 5]
    f = map_from_vectors(H, H, [{p: 1} for p in perm])
    assert f.is_coalgebra and not f.is_algebra and not f.is_hopf


def test_endo_corpus_size():
    assert len(endo_corpus(SMALL_GROUPS)) == 1340


@pytest.mark.parametrize("spec", SMALL_GROUPS)
def test_normality_matches_group_condition(spec):
    G = parse_group_spec(spec)
    kG, du = build_group_algebra(G), build_dual_group_algebra(G)
    for f in group_endomorphisms(kG):
        images = [next(iter(f.mat.col(g))) for g in G.elements()]
        assert normality(f, "normal") == commutes_with_conjugation(G, images)
        assert normality(f, "conormal")
    for f in group_endomorphisms(du):
        sigma = [next(g for g in G.elements() if k in f.mat.col(g)) for k in G.elements()]
        assert normality(f, "normal")
        assert normality(f, "conormal") == commutes_with_conjugation(G, sigma)


def test_normality_rejects_non_endo():
    f = trivial(build_group_algebra(cyclic(2)), build_group_algebra(cyclic(3)))
    with pytest.raises(HopfError):
        normality(f)


@pytest.mark.parametrize("spec", ["dihedral:6", "cyclic:4", "quaternion:8"])
def test_adjoint_identity(spec):
    assert eq3_check(build_group_algebra(parse_group_spec(spec)))
    assert eq3_check(build_dual_group_algebra(parse_group_spec(spec)))


def test_coinvariants_of_group_map_are_kernel():
    S3 = symmetric(3)
    H = build_group_algebra(S3)
    for f in group_endomorphisms(H):
        images = [next(iter(f.mat.col(g))) for g in S3.elements()]
        ker = [g for g in S3.elements() if images[g] == S3.identity]
        for side in ("left", "right"):
            sub = coinvariants(f, side)
            assert sub.dim == len(ker) and sub.closed
            assert all(sub.contains({g: 1}) for g in ker)
        assert invariant_quotient(f).dim == H.dim // len(set(images))


def test_convolution_and_antipode():
    H = build_group_algebra(symmetric(3))
    idm, S = identity(H), HopfMap(H, H, H.antipode)
    e = trivial(H)
    assert convolution(idm, S) == e and convolution(S, idm) == e
    assert convolution(e, idm) == idm
    assert conv_power(idm, 6) == e
    assert comm_check(idm, e) and cocomm_check(idm, e)
    # convolution of two non-commuting automorphisms of kS3 differs in order
    auts = [f for f in group_endomorphisms(H) if f.is_bijective()]
    assert any(not comm_check(a, b) for a in auts for b in auts)


@given(st.sampled_from(AXIOM_CORPUS[:6]), st.sampled_from(["cyclic:2", "cyclic:3"]))
def test_tensor_product_axioms(spec1, spec2):
    A = build_group_algebra(parse_group_spec(spec1))
    B = build_dual_group_algebra(parse_group_spec(spec2))
    T = tensor_hopf(A, B)
    assert T.dim == A.dim * B.dim
    assert verify_hopf_axioms(T)["all"]


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:4", "dihedral:6", "dihedral:8"])
def test_fourier_maps_are_hopf(spec):
    G = parse_group_spec(spec)
    order = 12
    du, kG = build_dual_group_algebra(G, order), build_group_algebra(G, order)
    for A, B, theta in abelian_normal_with_dual_embedding(G, G):
        if order % theta.e:
            continue
        f = HopfMap(du, kG, fourier_map(G, G, theta, order))
        assert f.is_hopf


def test_mat_shape_checked():
    H = build_group_algebra(cyclic(2))
    with pytest.raises(HopfError):
        FinHopf(3, 1, H.mult, H.unit, H.comult, H.counit, H.antipode)
    with pytest.raises((HopfError, ValueError)):
        HopfMap(H, H, Mat.identity(3))
