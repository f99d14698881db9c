"""Pentagon/triangle/coherence counts over Z/n-graded categories with sample cocycles.

For each group order the sweep tries the trivial cocycle, the sign cocycle
(n even) and one deliberately broken table, and reports how many diagrams
fail on words with at most ``--leaves`` leaves.
"""
import argparse
import time
from dataclasses import dataclass
from itertools import product

from hochschild.coherence import coherence_suite
from hochschild.monoidal import GradedVecCategory
from hochschild.rings import QQ


@dataclass
class SweepConfig:
    orders: tuple = (2, 3, 4)
    leaves: int = 4


def tables(n):
    idx = list(product(range(n), repeat=3))
    yield "trivial", [1] * n ** 3
    if n % 2 == 0:
        # -1 exactly when all three grades are odd
        yield "sign", [-1 if g % 2 and h % 2 and l % 2 else 1 for g, h, l in idx]
    yield "broken", [2 if (g, h, l) == (1, 1, 1) else 1 for g, h, l in idx]


def main(cfg: SweepConfig):
    for n in cfg.orders:
        for label, table in tables(n):
            cat = GradedVecCategory(QQ, n, table)
            cat.declare("A", list(range(n)))
            t = time.perf_counter()
            r = coherence_suite(cat, cfg.leaves)
            dt = time.perf_counter() - t
            print(f"Z/{n} {label:<8} {len(r.checks):>5} diagrams, "
                  f"{len(r.failures):>4} failures  ({dt:.2f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--orders", type=int, nargs="+", default=list(SweepConfig.orders))
    p.add_argument("--leaves", type=int, default=SweepConfig.leaves)
    a = p.parse_args()
    main(SweepConfig(tuple(a.orders), a.leaves))
