#!/usr/bin/env python3
"""Compute |Hopfaut(D(D12))| from the block formula and print the breakdown."""
import argparse
import json
import time
from dataclasses import asdict, dataclass

from hopfkit.double import block_aut_order, dihedral_aut_order, split_abelian_part
from hopfkit.groups import dihedral, identify_group


@dataclass
class Config:
    order: int = 12          # order of the dihedral group
    jobs: int = 1
    cross_check: bool = True


def run(cfg: Config) -> dict:
    C, H = split_abelian_part(dihedral(cfg.order))
    t = time.perf_counter()
    res = block_aut_order(C, H, cross_check=cfg.cross_check, jobs=cfg.jobs)
    out = {"config": asdict(cfg), "C": identify_group(C), "H": identify_group(H),
           **res.breakdown(), "seconds": round(time.perf_counter() - t, 2)}
    n = cfg.order // 2
    if n > 2 and n % 4 == 2:
        out["formula"] = dihedral_aut_order(n)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=12, help="dihedral group order 2n")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-cross-check", action="store_true")
    a = ap.parse_args()
    out = run(Config(a.order, a.jobs, not a.no_cross_check))
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
