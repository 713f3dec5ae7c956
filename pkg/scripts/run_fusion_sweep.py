#!/usr/bin/env python3
"""Exhaustive fusion/Hopf sweep over free chain complexes.

Enumerates every free complex within the configured support/rank/entry
bounds, pairs each with every free graded partner of the same bounds, and
verifies with the batched engine that the fusion map has an exact two-sided
inverse and satisfies the counit, comultiplication, and structure diagrams.
"""

import argparse
import time
from dataclasses import dataclass

from kanforge.corpus import free_complex_classes, graded_partners
from kanforge.freefast import fusion_suite_mask


@dataclass(frozen=True)
class SweepConfig:
    max_rank: int = 2
    bound: int = 2
    support: tuple[int, ...] = (0, 1, 2)


def run(cfg: SweepConfig) -> int:
    t0 = time.monotonic()
    classes = free_complex_classes(cfg.max_rank, cfg.support, cfg.bound)
    partners = [{d: c.free_rank for d, c in p.components}
                for p in graded_partners(cfg.max_rank, cfg.support)]
    n_complexes = sum(c.n_batch for c in classes)
    pairs = failures = 0
    for cls in classes:
        if cls.n_batch == 0:
            continue
        for p in partners:
            mask = fusion_suite_mask(p, cls.ranks, cls.diffs, cls.n_batch)
            pairs += cls.n_batch
            failures += int((~mask).sum())
    dt = time.monotonic() - t0
    print(f"complexes: {n_complexes}  partners: {len(partners)}  "
          f"pairs: {pairs}  failures: {failures}  time: {dt:.1f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=SweepConfig.max_rank)
    ap.add_argument("--bound", type=int, default=SweepConfig.bound)
    args = ap.parse_args()
    raise SystemExit(run(SweepConfig(max_rank=args.max_rank, bound=args.bound)))
