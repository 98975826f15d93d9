#!/usr/bin/env python3
"""Table of |Hopfaut(D(D_2n))| for n = 2 mod 4: block enumeration against the closed formula."""
import argparse
import time
from dataclasses import dataclass, field

from hopfkit.double import block_aut_order, dihedral_aut_order
from hopfkit.groups import cyclic, dihedral


@dataclass
class Config:
    ns: list = field(default_factory=lambda: [6, 10])
    jobs: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ns", nargs="*", type=int, default=[6, 10], help="values of n (n = 2 mod 4)")
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    cfg = Config(a.ns, a.jobs)
    print(f"{'n':>4} {'|D_2n|':>7} {'formula':>9} {'enumerated':>11} {'secs':>7}")
    ok = True
    for n in cfg.ns:
        t = time.perf_counter()
        got = block_aut_order(cyclic(2), dihedral(n), jobs=cfg.jobs).order
        want = dihedral_aut_order(n)
        ok &= got == want
        print(f"{n:>4} {2 * n:>7} {want:>9} {got:>11} {time.perf_counter() - t:>7.1f}")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
