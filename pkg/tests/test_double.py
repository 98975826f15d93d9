import itertools
import random

import pytest

import oracles
from hopfkit.decomposition import (EndoMatrix, endo_matrix_join, enumerate_hopf_morphisms,
                                   is_convolution_group)
from hopfkit.double import (DoubleContext, Quadruple, QuadrupleError, _swap_legs, block_aut_order,
                            build_p, commutative_image_properties, dihedral_aut_order,
                            drinfeld_double, enumerate_double_auts, enumerate_double_homs, gamma_group,
                            hom_gamma_to_center, is_composition_group, map_to_quadruple,
                            purely_non_abelian_equivalences, quadruple_to_map, sigma_dual,
                            split_abelian_part, tensor_form, twistability, verify_relations,
                            zenthom_doubles)
from hopfkit.groups import (abelian_normal_with_dual_embedding, cyclic, direct_product, enumerate_homs,
                            find_isomorphism, parse_group_spec, symmetric)
from hopfkit.hopf import (HopfMap, build_dual_group_algebra, build_group_algebra, comm_check, dualize,
                          map_from_vectors, verify_hopf_axioms)

S3, Z2 = symmetric(3), cyclic(2)


@pytest.fixture(scope="module")
def s3_endos():
    return enumerate_double_homs(S3, S3)


@pytest.mark.parametrize("spec", ["cyclic:2", "cyclic:3", "symmetric:3", "dihedral:8", "quaternion:8"])
def test_double_axioms(spec):
    assert verify_hopf_axioms(drinfeld_double(parse_group_spec(spec)))["all"]


def test_double_structure_constants_s3():
    D = drinfeld_double(S3)
    n = S3.size
    for g, h, g2, h2 in itertools.product(range(n), repeat=4):
        prod = D.mul_vec({g * n + h: 1}, {g2 * n + h2: 1})
        want = {g * n + S3.mul(h, h2): 1} if g == S3.mul(S3.mul(h, g2), S3.inverse(h)) else {}
        assert prod == want
    for g, h in itertools.product(range(n), repeat=2):
        hi = S3.inverse(h)
        s = S3.mul(S3.mul(hi, S3.inverse(g)), h)
        assert D.antipode.col(g * n + h) == {s * n + hi: 1}


def test_double_and_tensor_form_share_coalgebra():
    D, T = drinfeld_double(S3), tensor_form(S3)
    assert D.comult == T.comult and D.counit == T.counit
    assert D.mult != T.mult
    assert not D.is_commutative() and not D.is_cocommutative()


@pytest.mark.parametrize("G", [Z2, S3], ids=["Z2", "S3"])
def test_embeddings_and_dual(G):
    n = G.size
    D, T = drinfeld_double(G), tensor_form(G)
    du, kG = build_dual_group_algebra(G), build_group_algebra(G)
    for P in (D, T):
        # delta_a -> delta_a # 1 and g -> sum_a delta_a # g
        assert map_from_vectors(du, P, [{a * n + G.identity: 1} for a in range(n)]).is_hopf
        assert map_from_vectors(kG, P, [{a * n + g: 1 for a in range(n)} for g in range(n)]).is_hopf
    assert verify_hopf_axioms(dualize(D))["all"]
    # du(G) (x) kG is self-dual via swapping the legs
    iso = HopfMap(dualize(T), T, _swap_legs(n, T.order))
    assert iso.is_hopf and iso.mat.is_bijective()


@pytest.mark.parametrize("g,k", [("cyclic:2", "cyclic:3"), ("cyclic:2", "cyclic:4"),
                                 ("cyclic:4", "cyclic:2"), ("cyclic:3", "cyclic:3")])
def test_abelian_doubles_match_group_oracle(g, k):
    # for abelian G, D(G) is the group algebra of G-hat x G = G x G
    G, K = parse_group_spec(g), parse_group_spec(k)
    rep = enumerate_double_homs(G, K)
    GG, KK = direct_product(G, G), direct_product(K, K)
    assert len(rep) == oracles.count_homs(GG.table, KK.table)


def test_aut_d_z2():
    rep = enumerate_double_auts(Z2)
    T = oracles.product_table(oracles.cyclic_table(2), oracles.cyclic_table(2))
    assert len(rep) == 6 == oracles.count_auts(T)
    assert is_composition_group(rep.maps)


def _all_quadruples(ctx):
    G, K = ctx.G, ctx.K
    sig = [h.images for h in enumerate_homs(K, G)]
    V = [h.images for h in enumerate_homs(G, K)]
    R = [h.images for h in enumerate_homs(G, ctx.Khat)]
    for s, t, v, r in itertools.product(sig, abelian_normal_with_dual_embedding(G, K), V, R):
        yield Quadruple(sigma_dual(ctx, s), tuple(r), build_p(ctx, t), tuple(v), s, t)


@pytest.mark.parametrize("g,k", [("cyclic:2", "cyclic:2"), ("symmetric:3", "cyclic:2"),
                                 ("cyclic:2", "symmetric:3"), ("cyclic:3", "cyclic:3")])
def test_relations_agree_with_matrix_check(g, k):
    ctx = DoubleContext.make(parse_group_spec(g), parse_group_spec(k))
    quads = list(_all_quadruples(ctx))
    random.Random(0).shuffle(quads)
    valid = 0
    for q in quads[:150]:
        rep = verify_relations(ctx, q, cross_check=True)
        assert rep["agree"], rep
        if rep["all"]:
            valid += 1
            back = map_to_quadruple(ctx, quadruple_to_map(ctx, q))
            assert back.key() == q.key()
    assert valid > 0


def test_relations_on_s3_sample():
    ctx = DoubleContext.make(S3, S3)
    quads = list(_all_quadruples(ctx))
    rng = random.Random(1)
    for q in rng.sample(quads, 40):
        assert verify_relations(ctx, q, cross_check=True)["agree"]


def test_map_to_quadruple_rejects_non_double_maps():
    ctx = DoubleContext.make(Z2, Z2)
    D = ctx.DG
    bad = map_from_vectors(D, D, [{0: 1, 1: 1}] * D.dim)
    with pytest.raises(QuadrupleError):
        map_to_quadruple(ctx, bad)


def test_aut_d_s3(s3_endos):
    auts = enumerate_double_auts(S3)
    assert len(auts) == 12
    assert all(f.is_hopf and f.mat.is_bijective() for f in auts.maps)
    assert is_composition_group(auts.maps)
    bij = [f for f in s3_endos.maps if f.mat.is_bijective()]
    assert {f.mat for f in bij} == {f.mat for f in auts.maps}


def test_zenthom_doubles():
    z = zenthom_doubles(S3, Z2)
    assert len(z) == 4 and z.complete
    assert is_convolution_group(z.maps)
    back = zenthom_doubles(Z2, S3)
    assert len(back) == 4 == back.stats["group_oracle"]


def test_hom_d_s3_to_d_z2_complete():
    rep = enumerate_double_homs(S3, Z2)
    assert len(rep) == 4 and rep.complete


def test_gamma_and_center_homs():
    assert gamma_group(S3).size == 12
    GC = gamma_group(Z2)
    assert find_isomorphism(GC, direct_product(Z2, Z2)) is not None
    assert len(hom_gamma_to_center(Z2, S3)) == 4


def test_split_abelian_part():
    C, H = split_abelian_part(parse_group_spec("dihedral:12"))
    assert C.size == 2 and find_isomorphism(H, S3) is not None


def test_dihedral_formula_domain():
    assert dihedral_aut_order(6) == 1152 and dihedral_aut_order(10) == 3840
    for bad in (2, 4, 8):
        with pytest.raises(ValueError):
            dihedral_aut_order(bad)
    with pytest.raises(ValueError):
        block_aut_order(S3, S3)
    with pytest.raises(ValueError):
        block_aut_order(Z2, parse_group_spec("dihedral:12"))


def test_identity_untwists_to_identity():
    ctx = DoubleContext.make(S3, S3)
    rep = twistability(ctx, ctx.DG.identity_map(), "untwist")
    assert rep.ok and rep.transported.mat.is_identity()
    assert rep.transported.dom.same_structure(tensor_form(S3, ctx.order))


def test_twistability_agrees_on_s3_endos(s3_endos):
    ctx = DoubleContext.make(S3, S3)
    for f in s3_endos.maps:
        for d in ("untwist", "flip"):
            assert twistability(ctx, f, d).agree


def test_twist_agrees_on_tensor_form_endos():
    from hopfkit.decomposition import hopf_endomorphisms_of_tensor
    ctx = DoubleContext.make(S3, S3)
    T = tensor_form(S3, ctx.order)
    mats, _ = hopf_endomorphisms_of_tensor(ctx.duG, ctx.kG, T)
    counts = {True: 0, False: 0}
    for M in mats:
        F = endo_matrix_join(M, T, check=False)
        rep = twistability(ctx, HopfMap(ctx.DG, ctx.DG, F.mat), "twist")
        assert rep.agree
        counts[rep.ok] += 1
    assert counts[True] and counts[False]


def test_non_twistable_tensor_endo():
    ctx = DoubleContext.make(S3, S3)
    T = tensor_form(S3, ctx.order)
    # u dual to an endo of S3 with non-normal image of order 2, v = id
    sig = next(h for h in enumerate_homs(S3, S3) if len(set(h.images)) == 2)
    du, kG = ctx.duG, ctx.kG
    u = HopfMap(du, du, sigma_dual(ctx, sig.images))
    M = EndoMatrix(du, kG, u, kG.trivial_map(du), du.trivial_map(kG), kG.identity_map())
    F = endo_matrix_join(M, T)
    assert F.is_hopf
    rep = twistability(ctx, HopfMap(ctx.DG, ctx.DG, F.mat), "twist")
    assert not rep.condition and not rep.matrix


def test_zenthom_elements_untwist_and_flip():
    ctx = DoubleContext.make(S3, Z2)
    for f in zenthom_doubles(S3, Z2).maps:
        assert twistability(ctx, f, "untwist").ok
        fl = twistability(ctx, f, "flip")
        assert fl.ok and fl.dual_quadruple is not None


def test_commutative_image_properties(s3_endos):
    ctx = DoubleContext.make(S3, S3)
    seen = 0
    for f in s3_endos.maps:
        if twistability(ctx, f, "untwist").ok and comm_check(f, f):
            rep = commutative_image_properties(ctx, f)
            assert rep["all"] and None not in rep.values()
            seen += 1
    assert seen > 0
    ctx2 = DoubleContext.make(S3, Z2)
    f = zenthom_doubles(S3, Z2).maps[-1]
    rep = commutative_image_properties(ctx2, f)
    assert rep["all"] and rep["conormal_preserved"] is None


def test_commutative_image_precondition():
    ctx = DoubleContext.make(S3, S3)
    with pytest.raises(QuadrupleError):
        commutative_image_properties(ctx, ctx.DG.identity_map())


@pytest.mark.parametrize("spec,pna", [("symmetric:3", True), ("dihedral:8", True),
                                      ("cyclic:6", False), ("product:(cyclic:2,symmetric:3)", False),
                                      ("quaternion:8", True)])
def test_purely_non_abelian_equivalences(spec, pna):
    rep = purely_non_abelian_equivalences(parse_group_spec(spec))
    assert rep["agree"]
    assert rep["group"] is pna


def test_double_hom_guard():
    from hopfkit.groups import SizeGuardError
    with pytest.raises(SizeGuardError):
        enumerate_double_homs(cyclic(13), cyclic(2))


def test_fourier_part_is_hopf_map_into_kK():
    ctx = DoubleContext.make(Z2, Z2)
    for t in abelian_normal_with_dual_embedding(Z2, Z2):
        assert HopfMap(ctx.duG, ctx.kK, build_p(ctx, t)).is_hopf
    assert len(enumerate_hopf_morphisms(ctx.duG, ctx.kK)) == 2
