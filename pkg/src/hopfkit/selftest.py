"""Built-in invariant suites, run by ``hopfkit selftest``."""
from __future__ import annotations

import time
from typing import Callable

from .corpus import build_preset, corrupt, endo_corpus, group_endomorphisms
from .decomposition import (fitting_decompose, hopfaut_tensor, is_nilpotent_endo, krs_decompose,
                            krs_match, radford_decompose)
from .double import (block_aut_order, dihedral_aut_order, drinfeld_double, enumerate_double_auts,
                     is_composition_group, zenthom_doubles)
from .groups import cyclic, dihedral, parse_group_spec
from .hopf import HopfMap, build_group_algebra, convolution, normality, verify_hopf_axioms

FAST_GROUPS = ["cyclic:2", "cyclic:3", "product:(cyclic:2,cyclic:2)", "cyclic:4", "cyclic:6",
               "dihedral:6"]


def suite_axioms(specs=FAST_GROUPS, corrupted: bool = False) -> tuple[bool, str]:
    bad = []
    for spec in specs:
        for kind in ("group", "dual", "tensor", "double"):
            H = build_preset(f"{kind}:{spec}")
            if corrupted:
                H = corrupt(H)
            if not verify_hopf_axioms(H)["all"]:
                bad.append(f"{kind}:{spec}")
    return not bad, ("failed: " + ", ".join(bad)) if bad else f"{4 * len(specs)} algebras"


def suite_normality(specs=FAST_GROUPS) -> tuple[bool, str]:
    bad = 0
    corpus = endo_corpus(specs)
    for _, f in corpus:
        H = f.dom
        h = convolution(HopfMap(H, H, f.mat @ H.antipode), H.identity_map())
        if normality(f, "normal") != h.is_algebra:
            bad += 1
    return bad == 0, f"{len(corpus)} endos, {bad} disagreements"


def suite_fitting(specs=FAST_GROUPS) -> tuple[bool, str]:
    bad = 0
    n = 0
    for _, f in endo_corpus(specs):
        R = radford_decompose(f)
        if not (R.bijective and (not R.idempotent or R.img_p_equals_coinv)):
            bad += 1
        if normality(f, "binormal"):
            n += 1
            TF = fitting_decompose(f, "binormal")
            if not TF.certified:
                bad += 1
    kS3 = build_group_algebra(dihedral(6))
    for f in group_endomorphisms(kS3):
        if normality(f, "binormal") and not (is_nilpotent_endo(f)[0] or f.mat.is_bijective()):
            bad += 1
    return bad == 0, f"{n} binormal endos factorized, {bad} failures"


def suite_krs() -> tuple[bool, str]:
    out = []
    for name in ("group:product:(cyclic:2,cyclic:2,cyclic:3)", "tensor:product:(cyclic:2,dihedral:6)",
                 "double:product:(cyclic:2,dihedral:6)"):
        H = build_preset(name)
        F1, F2 = krs_decompose(H), krs_decompose(H, reverse=True)
        out.append(F1.verify()["all"] and krs_match(F1, F2).ok)
    return all(out), f"{sum(out)}/{len(out)} factorizations matched"


def suite_tensor_auts() -> tuple[bool, str]:
    k2 = build_group_algebra(cyclic(2))
    r = hopfaut_tensor(k2, k2)
    ok = r.order == 6 and len(r.a_set) == 4 and r.theorem_consistent
    return ok, f"|Hopfaut(kZ2 (x) kZ2)| = {r.order}, |A| = {len(r.a_set)}"


def suite_doubles() -> tuple[bool, str]:
    S3, Z2 = dihedral(6), cyclic(2)
    auts = enumerate_double_auts(S3)
    z = zenthom_doubles(S3, Z2)
    ok = len(auts) == 12 and is_composition_group(auts.maps) and len(z) == 4 and z.complete
    return ok, f"|Hopfaut(D(S3))| = {len(auts)}, |Zenthom(D(S3), D(Z2))| = {len(z)}"


def suite_block() -> tuple[bool, str]:
    res = block_aut_order(cyclic(2), dihedral(6))
    ok = res.order == 1152 == dihedral_aut_order(6)
    return ok, f"block order {res.order}"


def suite_big_axioms() -> tuple[bool, str]:
    H = drinfeld_double(parse_group_spec("dihedral:12"))
    ok = verify_hopf_axioms(H)["all"]
    return ok, f"D(D12) dim {H.dim}"


def run_suites(level: str = "fast", corrupted: bool = False,
               log: Callable[[str], None] | None = None) -> list[dict]:
    suites = [("axioms", lambda: suite_axioms(corrupted=corrupted)), ("normality", suite_normality),
              ("fitting", suite_fitting), ("krs", suite_krs), ("tensor_auts", suite_tensor_auts),
              ("doubles", suite_doubles)]
    if level == "full":
        suites += [("block_1152", suite_block), ("axioms_dim144", suite_big_axioms)]
    # timings go to the log only, so the JSON report stays byte-stable
    results = []
    for name, fn in suites:
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash counts as a failed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        dt = time.perf_counter() - t
        if log:
            log(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail} ({dt:.1f}s)")
        results.append({"suite": name, "pass": ok, "detail": detail})
    return results
