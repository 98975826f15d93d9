"""Preset algebras and group-induced endomorphism corpora used by tests and the CLI."""
from __future__ import annotations

from .groups import FiniteGroup, enumerate_homs, parse_group_spec
from .hopf import (FinHopf, HopfMap, build_dual_group_algebra, build_group_algebra, dual_hom_map,
                   group_hom_map)

# every group of order <= 8, up to isomorphism
SMALL_GROUPS = [
    "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "product:(cyclic:2,cyclic:2)", "cyclic:5",
    "cyclic:6", "dihedral:6", "cyclic:7", "cyclic:8", "product:(cyclic:2,cyclic:4)",
    "product:(cyclic:2,cyclic:2,cyclic:2)", "dihedral:8", "quaternion:8",
]

# corpus for axiom checks, up to order 12
AXIOM_CORPUS = [
    "cyclic:2", "cyclic:3", "product:(cyclic:2,cyclic:2)", "cyclic:4", "cyclic:6", "dihedral:6",
    "dihedral:8", "quaternion:8", "dihedral:10", "dihedral:12",
]

PRESET_KINDS = ("group", "dual", "tensor", "double")


def build_preset(name: str, order: int | None = None) -> FinHopf:
    """'group:<spec>', 'dual:<spec>', 'tensor:<spec>' (du(G) (x) kG) or 'double:<spec>'."""
    from .double import drinfeld_double, tensor_form
    kind, _, spec = name.partition(":")
    if kind not in PRESET_KINDS or not spec:
        raise ValueError(f"preset must look like <{'|'.join(PRESET_KINDS)}>:<group spec>, got {name!r}")
    G = parse_group_spec(spec)
    builders = {"group": build_group_algebra, "dual": build_dual_group_algebra,
                "tensor": tensor_form, "double": drinfeld_double}
    return builders[kind](G, order)


def group_endomorphisms(H: FinHopf) -> list[HopfMap]:
    """Endomorphisms of kG or k^G induced by group endomorphisms (complete for these)."""
    G = H.origin.group
    homs = enumerate_homs(G, G, max_order=max(24, G.size))
    if H.origin.kind == "group":
        return [group_hom_map(H, H, h.images) for h in homs]
    if H.origin.kind == "dualgroup":
        return [dual_hom_map(H, H, h.images) for h in homs]
    raise ValueError("group_endomorphisms needs a group or dual group algebra")


def endo_corpus(specs=SMALL_GROUPS) -> list[tuple[str, HopfMap]]:
    """(label, endo) pairs over kG and k^G for each group spec."""
    out = []
    for spec in specs:
        G = parse_group_spec(spec)
        for kind, builder in (("group", build_group_algebra), ("dual", build_dual_group_algebra)):
            H = builder(G)
            for i, f in enumerate(group_endomorphisms(H)):
                out.append((f"{kind}:{spec}#{i}", f))
    return out


def corrupt(H: FinHopf) -> FinHopf:
    """Copy of H with one multiplication constant changed (for negative tests)."""
    from .linalg import Mat
    from .cyclotomic import one
    from dataclasses import replace
    cols = list(H.mult.columns)
    d = H.dim
    last = (d - 1) * d + (d - 1)
    col = dict(cols[last])
    col[0] = col.get(0, one(H.order) - one(H.order)) + one(H.order)
    cols[last] = {k: v for k, v in col.items() if v}
    return replace(H, mult=Mat(H.order, d, d * d, cols), name=f"corrupt({H.name})")


def group_from_name(spec: str) -> FiniteGroup:
    return parse_group_spec(spec)
