#!/usr/bin/env python3
"""Full audit of the finite-category corpus.

For every shipped category/comonad pair: monoidal and comonad axioms, the
coalgebra category (monoidal axioms, tensor closure, adjunction bijection),
the Hopf property, and dual creation for every coalgebra whose underlying
object has a dual.  The zero-comonad entry is expected to fail exactly the
unit-counit compatibility and is reported as such.
"""

import time
from dataclasses import dataclass

from kanforge.corpus import fincat_corpus
from kanforge.fincat import (build_em, check_adjunction, check_comonad,
                             check_hopf, check_monoidal, em_as_category,
                             verify_create_kan)


@dataclass(frozen=True)
class FincatAuditConfig:
    max_points: int = 3


def run(cfg: FincatAuditConfig) -> int:
    t0 = time.monotonic()
    problems = 0
    for e in fincat_corpus(cfg.max_points):
        ok_m, _ = check_monoidal(e.category)
        ok_c, fails_c = check_comonad(e.category, e.comonad)
        em = build_em(e.category, e.comonad)
        emc = em_as_category(e.category, e.comonad, em)
        ok_em, _ = check_monoidal(emc)
        ok_adj = check_adjunction(e.category, e.comonad, em)
        ok_h, _ = check_hopf(e.category, e.comonad, em)
        created = skipped = failed = 0
        for v in em.coalgebras:
            rec = verify_create_kan(e.category, e.comonad, v)
            if not rec["base_dual_exists"]:
                skipped += 1
            elif rec["consistent"]:
                created += 1
            else:
                failed += 1
        line_ok = ok_m and ok_em and ok_adj and ok_h and failed == 0 \
            and ok_c == e.comonad_passes
        if not line_ok:
            problems += 1
        status = "ok " if line_ok else "BAD"
        note = "" if ok_c else f"  (comonad: {'; '.join(fails_c)})"
        print(f"[{status}] {e.name:40s} coalgebras={len(em.coalgebras):2d} "
              f"created={created:2d} skipped={skipped:2d}{note}")
    print(f"done in {time.monotonic() - t0:.1f}s, problems: {problems}")
    return 0 if problems == 0 else 1


if __name__ == "__main__":
    raise SystemExit(run(FincatAuditConfig()))
