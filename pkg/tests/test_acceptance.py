"""Acceptance gate: one PASS/FAIL line per criterion, each with a runtime budget."""
import time

import pytest

import oracles
from hopfkit.corpus import AXIOM_CORPUS, SMALL_GROUPS, build_preset, endo_corpus, group_endomorphisms
from hopfkit.decomposition import (endo_matrix_compose, endo_matrix_join, fitting_decompose,
                                   hopf_endomorphisms_of_tensor, is_nilpotent_endo, krs_decompose,
                                   krs_match, matrix_normality_check, power_automorphism_check,
                                   radford_decompose)
from hopfkit.double import (block_aut_order, dihedral_aut_order, enumerate_double_auts,
                            enumerate_double_homs, hom_gamma_to_center, is_composition_group,
                            purely_non_abelian_equivalences, zenthom_doubles)
from hopfkit.groups import cyclic, dihedral, parse_group_spec
from hopfkit.hopf import (HopfMap, build_dual_group_algebra, build_group_algebra, convolution,
                          normality, verify_hopf_axioms)

pytestmark = pytest.mark.acceptance

Z2, D6, D10 = cyclic(2), dihedral(6), dihedral(10)


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_criterion_1_headline_1152(report):
    res, dt = timed(lambda: block_aut_order(Z2, D6))
    parts = (res.aut_gamma_C, res.zenthom_HC, res.hom_gamma_C_center, res.aut_double_H)
    ok = res.order == 1152 and parts == (6, 4, 4, 12) and res.aut_double_H_source == "enumerated"
    ok = ok and dt <= 300
    report("1", ok, f"|Hopfaut(D(D12))| = {res.order} = {'*'.join(map(str, parts))} in {dt:.1f}s")


def test_criterion_2_dihedral_formula(report):
    res, dt = timed(lambda: block_aut_order(Z2, D10))
    f6, f10 = dihedral_aut_order(6), dihedral_aut_order(10)
    ok = f6 == 1152 and f10 == 3840 and res.order == 3840 and dt <= 600
    report("2", ok, f"formula n=6: {f6}, n=10: {f10}; block(Z2, D10) = {res.order} in {dt:.1f}s")


def test_criterion_3_aut_d_s3(report):
    rep, dt = timed(lambda: enumerate_double_auts(D6))
    verified = all(f.is_hopf and f.mat.is_bijective() for f in rep.maps)
    group = is_composition_group(rep.maps)
    # order of Z2 x Aut(S3)
    expected = 2 * oracles.count_auts(oracles.perm_table(oracles.dihedral_perms(3)))
    ok = len(rep) == 12 == expected and verified and group and dt <= 120
    report("3", ok, f"|Hopfaut(D(S3))| = {len(rep)}, verified={verified}, group={group} in {dt:.1f}s")


def test_criterion_4_zenthom_counts(report):
    homs = enumerate_double_homs(D6, Z2)
    z = zenthom_doubles(D6, Z2)
    hg = hom_gamma_to_center(Z2, D6)
    forced = homs.complete and "fails p-equivariance" in homs.reason
    ok = len(homs) == len(z) == len(hg) == 4 and forced and z.complete
    report("4", ok, f"|Hom| = {len(homs)}, |Zenthom| = {len(z)}, complete={forced}, "
                    f"|Hom(Gamma_C, Z(Gamma_H))| = {len(hg)}")


def _suite_a():
    bad = 0
    corpus = endo_corpus(SMALL_GROUPS)
    for _, f in corpus:
        H = f.dom
        h = convolution(HopfMap(H, H, f.mat @ H.antipode), H.identity_map())
        bad += normality(f, "normal") != h.is_algebra
    return bad == 0, f"a: {len(corpus)} endos, {bad} disagreements"


def _suite_b():
    bad = n = 0
    for _, f in endo_corpus(SMALL_GROUPS):
        if normality(f, "binormal"):
            n += 1
            bad += not fitting_decompose(f, "binormal").certified
    for f in group_endomorphisms(build_group_algebra(D6)):
        if normality(f, "binormal"):
            bad += not (is_nilpotent_endo(f)[0] or f.mat.is_bijective())
    return bad == 0, f"b: {n} binormal endos, {bad} failures"


def _suite_c():
    bad = n = 0
    for _, f in endo_corpus(SMALL_GROUPS):
        if f.mat @ f.mat == f.mat:
            n += 1
            R = radford_decompose(f)
            bad += not (R.img_p_equals_coinv and R.bijective)
    return bad == 0 and n > 0, f"c: {n} idempotents, {bad} failures"


def _suite_d():
    ok = []
    for name in ("group:product:(cyclic:2,cyclic:2,cyclic:3)", "tensor:product:(cyclic:2,dihedral:6)",
                 "double:product:(cyclic:2,dihedral:6)"):
        H = build_preset(name)
        F1, F2 = krs_decompose(H), krs_decompose(H, reverse=True)
        m = krs_match(F1, F2)
        ok.append(F1.verify()["all"] and F2.verify()["all"] and m.ok)
    return all(ok), f"d: {sum(ok)}/3 factorizations matched"


def _suite_e():
    k2, k3 = build_group_algebra(Z2), build_group_algebra(cyclic(3))
    bad = 0
    sizes = []
    for H, K in ((k2, k2), (k2, k3)):
        mats, P = hopf_endomorphisms_of_tensor(H, K)
        sizes.append(len(mats))
        joined = {M.key(): endo_matrix_join(M, P) for M in mats}
        # bijection: distinct matrices give distinct maps, all Hopf
        bad += len({F.mat for F in joined.values()}) != len(mats)
        bad += not all(F.is_hopf for F in joined.values())
        for g in mats:
            for f in mats:
                bad += endo_matrix_join(endo_matrix_compose(g, f), P) != joined[g.key()] @ joined[f.key()]
    T = oracles.product_table(oracles.cyclic_table(2), oracles.cyclic_table(2))
    bad += sizes[0] != 16 or sizes[0] != oracles.count_homs(T, T)
    checked = 0
    for h, k in (("cyclic:2", "cyclic:2"), ("cyclic:2", "cyclic:3"), ("cyclic:2", "dihedral:6"),
                 ("cyclic:3", "cyclic:2")):
        for build in (build_group_algebra, build_dual_group_algebra):
            H, K = build(parse_group_spec(h), 6), build(parse_group_spec(k), 6)
            mats, P = hopf_endomorphisms_of_tensor(H, K)
            for M in mats:
                checked += 1
                bad += not matrix_normality_check(M, P)["agree"]
    return bad == 0, f"e: {sizes} endos composed, {checked} normality checks, {bad} failures"


def _suite_f():
    r = power_automorphism_check(build_group_algebra(D6))
    ok = r["aut_order"] == 72 == 2 * r["A2_order"] and r["ratio_ok"]
    return ok, f"f: |Hopfaut(kS3 (x) kS3)| = {r['aut_order']}, |A2| = {r['A2_order']}"


def _suite_g():
    specs = ["dihedral:6", "dihedral:8", "cyclic:6", "product:(cyclic:2,dihedral:6)"]
    reps = [purely_non_abelian_equivalences(parse_group_spec(s)) for s in specs]
    return all(r["agree"] for r in reps), f"g: {sum(r['agree'] for r in reps)}/4 agree"


def test_criterion_5_structural_suites(report):
    t = time.perf_counter()
    results = [fn() for fn in (_suite_a, _suite_b, _suite_c, _suite_d, _suite_e, _suite_f, _suite_g)]
    dt = time.perf_counter() - t
    ok = all(r[0] for r in results) and dt <= 900
    report("5", ok, "; ".join(r[1] for r in results) + f" in {dt:.1f}s")


def test_criterion_6_axioms(report):
    t = time.perf_counter()
    bad, dims = [], []
    for spec in AXIOM_CORPUS:
        for kind in ("group", "dual", "tensor", "double"):
            H = build_preset(f"{kind}:{spec}")
            dims.append(H.dim)
            if not verify_hopf_axioms(H)["all"]:
                bad.append(f"{kind}:{spec}")
    dt = time.perf_counter() - t
    ok = not bad and max(dims) == 144 and dt <= 600
    report("6", ok, f"{len(dims)} algebras up to dim {max(dims)}, failures {bad} in {dt:.1f}s")
