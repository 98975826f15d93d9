"""hopfkit command line: one JSON document per run.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.

    hopfkit group decompose --group dihedral:12
    hopfkit hopf verify --preset double:symmetric:3
    hopfkit double aut-order --group dihedral:12
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import __version__
from .corpus import build_preset
from .groups import GroupError, SizeGuardError, group_invariants, identify_group, parse_group_spec


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    """Raised after the report is built when a verification flag is false."""


# ---------------------------------------------------------------------------
# loading inputs
# ---------------------------------------------------------------------------

def _group(spec: str):
    try:
        return parse_group_spec(spec)
    except (GroupError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        raise UsageError(f"bad group spec {spec!r}: {exc}") from exc


def _algebra(arg: str, order: int | None):
    from .hopf import FinHopf
    if os.path.exists(arg):
        with open(arg) as fh:
            H = FinHopf.from_json(json.load(fh))
        return H.lift(order) if order else H
    try:
        return build_preset(arg, order)
    except (GroupError, ValueError) as exc:
        raise UsageError(f"{arg!r} is neither a file nor a preset: {exc}") from exc


def _endo(path: str, H):
    from .hopf import HopfMap
    from .linalg import Mat
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read endomorphism {path!r}: {exc}") from exc
    M = Mat.from_json(data.get("mat", data))
    if M.shape != (H.dim, H.dim):
        raise UsageError(f"endomorphism shape {M.shape} does not match dim {H.dim}")
    return HopfMap(H, H, M.lift(H.order) if M.order != H.order else M)


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_group_decompose(args) -> dict:
    from .groups import remak_decompose
    G = _group(args.group)
    res = remak_decompose(G)
    return {"group": args.group, "order": G.size,
            "factors": [identify_group(F) for F in res.factor_groups],
            "purely_non_abelian": res.is_purely_non_abelian,
            "abelian_part_order": len(res.abelian_part),
            "non_abelian_part_order": len(res.purely_non_abelian_part)}


def cmd_group_info(args) -> dict:
    G = _group(args.group)
    inv = group_invariants(G)
    inv["abelianization"] = identify_group(inv["abelianization"])
    inv["abelianization_projection"] = list(inv["abelianization_projection"])
    return {"group": args.group, "size": G.size, "identified": identify_group(G),
            **{k: (sorted(v) if isinstance(v, (set, frozenset)) else v) for k, v in inv.items()}}


def cmd_group_homs(args) -> dict:
    from .groups import enumerate_homs
    G, K = _group(args.source), _group(args.target)
    homs = enumerate_homs(G, K, args.filter)
    return {"from": args.source, "to": args.target, "filter": args.filter, "count": len(homs),
            "homs": [list(h.images) for h in homs] if args.list else None}


def cmd_hopf_verify(args) -> dict:
    from .hopf import verify_hopf_axioms
    H = _algebra(args.preset or args.algebra, args.order)
    rep = verify_hopf_axioms(H)
    out = {"algebra": H.name, "dim": H.dim, "order": H.order, "axioms": rep, "verified": rep["all"]}
    if not rep["all"]:
        raise CheckFailed(out)
    return out


def cmd_hopf_export(args) -> dict:
    H = _algebra(args.preset, args.order)
    return H.to_json()


def cmd_hopf_fitting(args) -> dict:
    from .decomposition import DecompositionError, fitting_decompose, radford_decompose
    H = _algebra(args.algebra, args.order)
    f = _endo(args.endo, H)
    R = radford_decompose(f)
    out = {"algebra": H.name, "order": H.order, "n": R.n, "dims": list(R.dims),
           "plain_tensor": R.plain_tensor, "factors": [], "verified": R.bijective,
           "complete": True}
    try:
        TF = fitting_decompose(f, args.require)
        out["factors"] = [{"label": lab, "dim": F.dim} for lab, F in zip(TF.labels, TF.factors)]
        out["certificate"] = TF.certificate
        out["verified"] = R.bijective and TF.certified
    except DecompositionError as exc:
        out["certificate"] = str(exc)
    if not R.bijective:
        raise CheckFailed(out)
    return out


def cmd_hopf_krs(args) -> dict:
    from .decomposition import krs_decompose, krs_match
    H = _algebra(args.algebra, args.order)
    F1 = krs_decompose(H)
    ver = F1.verify()
    out = {"algebra": H.name, "order": H.order, "dims": [F.dim for F in F1.factors],
           "factors": F1.labels, "verified": ver["all"], "complete": F1.certified,
           "certificate": F1.certificate, "checks": ver}
    if H.origin.kind != "generic":
        m = krs_match(F1, krs_decompose(H, reverse=True))
        out["match_permutation"] = m.permutation
        out["prefix_maps_bijective"] = m.ok
        out["verified"] = out["verified"] and m.ok
    if not out["verified"]:
        raise CheckFailed(out)
    return out


def cmd_hopf_aut_tensor(args) -> dict:
    from .decomposition import hopfaut_tensor
    H, K = _algebra(args.left, args.order), _algebra(args.right, args.order)
    r = hopfaut_tensor(H, K)
    out = {"left": H.name, "right": K.name, "order": lcm_exp_orders(H, K), "aut_order": r.order,
           "A_order": len(r.a_set), "A_subset": r.a_subset, "A_equal": r.a_group_equal,
           "common_factor": r.common_factor, "common_abelian_factor": r.common_abelian_factor,
           "verified": r.theorem_consistent, "complete": r.complete, "endomorphisms": r.endo_count}
    if not r.theorem_consistent:
        raise CheckFailed(out)
    return out


def _enum_report(rep, extra=None) -> dict:
    out = {"from": rep.G.name, "to": rep.K.name, "count": len(rep), "complete": rep.complete,
           "reason": rep.reason, "stats": rep.stats, "order": rep.stats.get("order")}
    out.update(extra or {})
    return out


def cmd_double_aut_order(args) -> dict:
    from .double import block_aut_order, split_abelian_part
    if args.block:
        parts = args.block.split(";") if ";" in args.block else _split_pair(args.block)
        C, H = _group(parts[0]), _group(parts[1])
    else:
        C, H = split_abelian_part(_group(args.group))
    res = block_aut_order(C, H, oracle_aut_h=args.oracle_aut_h, cross_check=args.cross_check,
                          jobs=args.jobs)
    b = res.breakdown()
    out = {"group": args.group, "C": identify_group(C), "H": identify_group(H),
           "autGammaC": b["aut_gamma_C"], "zenthomHC": b["zenthom_D_H_to_D_C"],
           "homGammaCZ": b["hom_gamma_C_to_center_gamma_H"], "autDoubleH": b["aut_D_H"],
           "autDoubleH_source": b["aut_D_H_source"], "zenthomCH": b["zenthom_D_C_to_D_H"],
           "complete": b["complete"], "total": res.order,
           "order": lcm_exp(C, H)}
    if args.cross_check and C.size > 1 and b["zenthom_D_C_to_D_H"] != b["hom_gamma_C_to_center_gamma_H"]:
        raise CheckFailed(out)
    return out


def lcm_exp_orders(*algs) -> int:
    from math import lcm
    return lcm(*(A.order for A in algs))


def lcm_exp(*groups) -> int:
    from math import lcm
    return lcm(*(G.exponent for G in groups))


def _split_pair(text: str) -> list[str]:
    # split "C,H" at the top-level comma, respecting product:(...) parentheses
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "," and depth == 0:
            return [text[:i], text[i + 1:]]
    raise UsageError("--block expects C,H")


def cmd_double_homs(args) -> dict:
    from .double import enumerate_double_homs, is_composition_group
    G, K = _group(args.source), _group(args.target)
    rep = enumerate_double_homs(G, K, args.order, automorphisms=args.auts, jobs=args.jobs)
    extra = {}
    if args.auts and G.size == K.size:
        extra["is_group"] = is_composition_group(rep.maps)
    return _enum_report(rep, extra)


def cmd_double_zenthom(args) -> dict:
    from .double import zenthom_doubles
    G, K = _group(args.source), _group(args.target)
    rep = zenthom_doubles(G, K, args.order, jobs=args.jobs)
    out = _enum_report(rep)
    if "group_oracle" in rep.stats and rep.stats["group_oracle"] != len(rep):
        raise CheckFailed(out)
    return out


def cmd_double_pna(args) -> dict:
    from .double import purely_non_abelian_equivalences
    G = _group(args.group)
    r = purely_non_abelian_equivalences(G)
    out = {"group": args.group, "order": G.exponent, **r}
    if not r["agree"]:
        raise CheckFailed(out)
    return out


def cmd_selftest(args) -> dict:
    from .selftest import run_suites
    res = run_suites(args.level, corrupted=args.corrupt, log=lambda s: print(s, file=sys.stderr))
    out = {"level": args.level, "suites": res, "pass": all(r["pass"] for r in res)}
    if not out["pass"]:
        raise CheckFailed(out)
    return out


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None, help="scalar order N for Q(zeta_N)")
    common.add_argument("--jobs", type=int, default=int(os.environ.get("HOPFKIT_JOBS", "1")),
                        help="worker processes for candidate verification")
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    p = argparse.ArgumentParser(prog="hopfkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hopfkit {__version__}")
    top = p.add_subparsers(dest="area", required=True)

    g = top.add_parser("group", help="finite group utilities").add_subparsers(dest="verb", required=True)
    s = g.add_parser("decompose", parents=[common])
    s.add_argument("--group", required=True)
    s.set_defaults(func=cmd_group_decompose)
    s = g.add_parser("info", parents=[common])
    s.add_argument("--group", required=True)
    s.set_defaults(func=cmd_group_info)
    s = g.add_parser("homs", parents=[common])
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.add_argument("--filter", choices=["all", "injective", "automorphisms"], default="all")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_group_homs)

    h = top.add_parser("hopf", help="Hopf algebra checks").add_subparsers(dest="verb", required=True)
    s = h.add_parser("verify", parents=[common])
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset")
    src.add_argument("--algebra")
    s.set_defaults(func=cmd_hopf_verify)
    s = h.add_parser("export", parents=[common])
    s.add_argument("--preset", required=True)
    s.set_defaults(func=cmd_hopf_export)
    s = h.add_parser("fitting", parents=[common])
    s.add_argument("--algebra", required=True)
    s.add_argument("--endo", required=True)
    s.add_argument("--require", choices=["normal", "conormal", "binormal"], default="binormal")
    s.set_defaults(func=cmd_hopf_fitting)
    s = h.add_parser("krs", parents=[common])
    s.add_argument("--algebra", required=True)
    s.set_defaults(func=cmd_hopf_krs)
    s = h.add_parser("aut-tensor", parents=[common])
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.set_defaults(func=cmd_hopf_aut_tensor)

    d = top.add_parser("double", help="Drinfeld doubles").add_subparsers(dest="verb", required=True)
    s = d.add_parser("aut-order", parents=[common])
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--group")
    grp.add_argument("--block", help="C,H with C abelian and H purely non-abelian")
    s.add_argument("--oracle-aut-h", type=int, default=None)
    s.add_argument("--cross-check", action="store_true",
                   help="also enumerate Zenthom(D(C), D(H)) and compare with the group count")
    s.set_defaults(func=cmd_double_aut_order)
    s = d.add_parser("enumerate-homs", parents=[common])
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.add_argument("--auts", action="store_true", help="keep bijective maps only")
    s.set_defaults(func=cmd_double_homs)
    s = d.add_parser("zenthom", parents=[common])
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.set_defaults(func=cmd_double_zenthom)
    s = d.add_parser("pna", parents=[common])
    s.add_argument("--group", required=True)
    s.set_defaults(func=cmd_double_pna)

    s = top.add_parser("selftest", parents=[common], help="run built-in invariant suites")
    s.add_argument("--level", choices=["fast", "full"], default="fast")
    s.add_argument("--corrupt", action="store_true", help="perturb one structure constant; the run must fail")
    s.set_defaults(func=cmd_selftest)
    return p


def _render(doc: dict, pretty: bool) -> str:
    if not pretty:
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))
    lines = []
    width = max((len(k) for k in doc), default=0)
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True)
        lines.append(f"{k:<{width}}  {v}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)   # exits with 2 on usage errors
    code = 0
    try:
        doc = args.func(args)
    except CheckFailed as exc:
        doc, code = exc.args[0], 1
    except (UsageError, SizeGuardError) as exc:
        print(f"hopfkit: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(doc, dict):
        doc = {"version": __version__, **doc}
        doc.setdefault("order", getattr(args, "order", None))
    print(_render(doc, args.pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
