"""Command-line entry point.

Subcommands dispatch to the four engines (integer matrices, abelian-group /
graded / chain duals, the differential-graded comonad, finite tabulated
categories) and emit deterministic reports.  Exit codes: 0 = all checks
passed (a correctly absent dual is a pass), 1 = a check failed, 2 = input
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import dg
from .abgroup import AbObject, try_dual, check_triangle_identities, tensor
from .corpus import CorpusTooLarge, generate_corpus
from .fincat import (ComonadData, FiniteMonoidalCategory, build_em,
                     check_adjunction, check_comonad, check_em_tensor,
                     check_hopf, check_monoidal, em_as_category, find_lan,
                     is_coalgebra, verify_create_kan)
from .freefast import fusion_suite_mask
from .graded import ChainComplex, GradedObject, dual_graded, tensor_graded
from .intmat import IntMatrix, smith_decompose
from .report import Verdict, render_json, render_text, report_merge

DEFAULT_SEED = 1729


class InputError(Exception):
    pass


def _load_json(path: str) -> object:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror or e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}") from e


def _load_matrix(path: str) -> IntMatrix:
    obj = _load_json(path)
    try:
        if isinstance(obj, list):
            return IntMatrix.from_rows(obj)
        return IntMatrix.from_json(obj)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: not an integer matrix: {e}") from e


def _classify(path: str) -> tuple[str, object]:
    """Load a JSON payload and tag it: fincat / chain / graded / ab / matrix."""
    obj = _load_json(path)
    try:
        if isinstance(obj, list):
            return "matrix", IntMatrix.from_rows(obj)
        if not isinstance(obj, dict):
            raise InputError(f"{path}: expected a JSON object or matrix")
        if "compose" in obj:
            cat = FiniteMonoidalCategory.from_json(obj)
            cm = ComonadData.from_json(obj["comonad"]) if "comonad" in obj else None
            return "fincat", (cat, cm)
        if "graded" in obj:
            return "chain", ChainComplex.from_json(obj)
        if "components" in obj:
            return "graded", GradedObject.from_json(obj)
        if "rank" in obj or "torsion" in obj:
            return "ab", AbObject.from_json(obj)
        if "entries" in obj:
            return "matrix", IntMatrix.from_json(obj)
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{path}: malformed payload: {e}") from e
    raise InputError(f"{path}: unrecognized payload shape")


def _emit(args, verdicts: list[Verdict], payload: dict | None = None) -> int:
    if args.json:
        out = {"verdicts": [v.to_json() for v in verdicts],
               "summary": report_merge(verdicts)}
        if payload is not None:
            out["result"] = payload
        text = json.dumps(out, indent=2, sort_keys=True) + "\n"
    else:
        text = render_text(verdicts)
        if payload is not None:
            text += json.dumps(payload, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if getattr(args, "out", None):
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.json").write_text(render_json(verdicts))
        if payload is not None:
            (outdir / "result.json").write_text(
                json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return report_merge(verdicts)["exit_code"]


def _seed_of(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("KANFORGE_SEED")
    return int(env) if env else DEFAULT_SEED


def _need_fincat(path: str) -> tuple[FiniteMonoidalCategory, ComonadData | None]:
    kind, data = _classify(path)
    if kind != "fincat":
        raise InputError(f"{path}: expected a finite category table")
    return data


def _need_comonad(path: str) -> tuple[FiniteMonoidalCategory, ComonadData]:
    cat, cm = _need_fincat(path)
    if cm is None:
        raise InputError(f"{path}: table has no \"comonad\" entry")
    return cat, cm


# -- subcommands -----------------------------------------------------------------


def cmd_snf(args) -> int:
    m = _load_matrix(args.input)
    s = smith_decompose(m)
    ok = s.u @ m @ s.v == s.d
    payload = {"d": s.d.to_json(), "u": s.u.to_json(), "v": s.v.to_json(),
               "invariants": list(s.invariants_list)}
    return _emit(args, [Verdict.from_bool("snf-decomposition", ok)], payload)


def cmd_tensor(args) -> int:
    ka, a = _classify(args.left)
    kb, b = _classify(args.right)
    if ka != kb:
        raise InputError(f"cannot tensor a {ka} payload with a {kb} payload")
    if ka == "ab":
        payload = tensor(a, b).object.to_json()
    elif ka == "graded":
        payload = tensor_graded(a, b).object.to_json()
    elif ka == "chain":
        payload = dg.tensor_chain(a, b).to_json()
    else:
        raise InputError(f"tensor is not defined for {ka} payloads")
    return _emit(args, [Verdict("tensor", "pass")], payload)


def _torsion_message(orders) -> str:
    t = next(o for o in orders if o > 1)
    return f"no dual: component Z/{t} not projective"


def cmd_dual(args) -> int:
    kind, data = _classify(args.input)
    if kind == "ab":
        w = try_dual(data)
        if w is None:
            return _emit(args, [Verdict("dual", "n/a",
                                        (_torsion_message(data.orders),))])
        ok = check_triangle_identities(w)
        return _emit(args, [Verdict.from_bool("dual-snake-identities", ok)],
                     {"dual": w.dual_object.to_json()})
    if kind == "graded":
        d = dual_graded(data)
        if d is None:
            orders = [o for _, c in data.components for o in c.orders]
            return _emit(args, [Verdict("dual", "n/a", (_torsion_message(orders),))])
        return _emit(args, [Verdict("dual", "pass")], {"dual": d.to_json()})
    if kind == "chain":
        cd = dg.create_dual_chain(data)
        if cd is None:
            orders = [o for _, c in data.graded.components for o in c.orders]
            return _emit(args, [Verdict("dual", "n/a", (_torsion_message(orders),))])
        checks = dg.check_created_dual(cd)
        verdicts = [Verdict.from_bool(f"dual-{k}", ok) for k, ok in checks.items()]
        return _emit(args, verdicts, {"dual": cd.dual.to_json()})
    raise InputError(f"{args.input}: dual is not defined for {kind} payloads")


def cmd_check_coalgebra(args) -> int:
    kind, data = _classify(args.input)
    if kind == "chain":
        gamma = dg.complex_to_coalgebra(data)
        ok = dg.check_dg_coalgebra(data.graded, gamma)
        rt = dg.complex_coalgebra_roundtrip(data)
        return _emit(args, [Verdict.from_bool("coalgebra-axioms", ok),
                            Verdict.from_bool("coalgebra-roundtrip", rt)])
    if kind == "fincat":
        cat, cm = data
        if cm is None:
            raise InputError(f"{args.input}: table has no \"comonad\" entry")
        em = build_em(cat, cm)
        details = tuple(f"({c.carrier}, {c.structure})" for c in em.coalgebras)
        return _emit(args, [Verdict("coalgebra-enumeration", "pass", details,
                                    (("coalgebras", len(em.coalgebras)),))])
    raise InputError(f"{args.input}: no coalgebra check for {kind} payloads")


def cmd_fusion(args) -> int:
    if args.right is None:
        cat, cm = _need_comonad(args.left)
        em = build_em(cat, cm)
        ok, fails = check_hopf(cat, cm, em)
        return _emit(args, [Verdict.from_bool("fusion-invertible", ok,
                                              tuple(fails))])
    kp, partner = _classify(args.left)
    kv, v = _classify(args.right)
    if kv != "chain":
        raise InputError(f"{args.right}: fusion needs a chain complex coalgebra")
    if kp == "chain":
        compat = dg.check_fusion_compat(partner, v)
        verdicts = [Verdict.from_bool(f"fusion-{k}", ok) for k, ok in compat.items()]
        partner_graded = partner.graded
    elif kp == "graded":
        partner_graded = partner
        verdicts = []
    else:
        raise InputError(f"{args.left}: fusion partner must be graded or chain")
    w = dg.hopf_witness(partner_graded, v)
    verdicts.insert(0, Verdict.from_bool("fusion-two-sided-inverse", w.is_hopf))
    return _emit(args, verdicts)


def cmd_check_comonad(args) -> int:
    cat, cm = _need_comonad(args.input)
    ok_m, fails_m = check_monoidal(cat)
    ok_c, fails_c = check_comonad(cat, cm)
    return _emit(args, [Verdict.from_bool("monoidal-axioms", ok_m, tuple(fails_m)),
                        Verdict.from_bool("comonad-axioms", ok_c, tuple(fails_c))])


def cmd_em(args) -> int:
    cat, cm = _need_comonad(args.input)
    em = build_em(cat, cm)
    emc = em_as_category(cat, cm, em)
    ok, fails = check_monoidal(emc)
    verdicts = [Verdict.from_bool("em-monoidal", ok, tuple(fails)),
                Verdict.from_bool("em-tensor-closure",
                                  check_em_tensor(cat, cm, em)
                                  or not is_coalgebra(cat, cm, em.unit)),
                Verdict.from_bool("em-adjunction", check_adjunction(cat, cm, em))]
    return _emit(args, verdicts, emc.to_json())


def cmd_check_hopf(args) -> int:
    cat, cm = _need_comonad(args.input)
    em = build_em(cat, cm)
    ok, fails = check_hopf(cat, cm, em)
    return _emit(args, [Verdict.from_bool("hopf", ok, tuple(fails),
                                          (("coalgebras", len(em.coalgebras)),))])


def cmd_lan(args) -> int:
    cat, cm = _need_fincat(args.input)
    if args.object not in cat.objects:
        raise InputError(f"{args.input}: no object named {args.object!r}")
    res = find_lan(cat, args.object)
    if res is None:
        return _emit(args, [Verdict("lan", "n/a",
                                    (f"no dual for {args.object}",))])
    payload = {"dual": res.dual, "coeval": res.coeval, "eval": res.eval}
    return _emit(args, [Verdict("lan", "pass")], payload)


def cmd_verify_createkan(args) -> int:
    cat, cm = _need_comonad(args.input)
    em = build_em(cat, cm)
    verdicts = []
    for v in em.coalgebras:
        rec = verify_create_kan(cat, cm, v)
        name = f"create-kan({v.carrier},{v.structure})"
        if not rec["base_dual_exists"]:
            verdicts.append(Verdict(name, "n/a", ("underlying dual absent",)))
        else:
            bad = tuple(f"{k}={val}" for k, val in rec.items() if val is False)
            verdicts.append(Verdict.from_bool(name, bool(rec["consistent"]), bad))
    return _emit(args, verdicts)


def cmd_corollary_sweep(args) -> int:
    seed = _seed_of(args)
    max_rank, bound = args.max_rank, args.bound
    support = (0, 1, 2)
    classes = corpus_mod.free_complex_classes(max_rank, support, bound)
    partners = [{d: c.free_rank for d, c in p.components}
                for p in corpus_mod.graded_partners(max_rank, support)]
    total = sum(c.n_batch for c in classes) * len(partners)
    if args.max_size is not None and total > args.max_size:
        raise InputError(f"sweep of {total} pairs exceeds --max-size {args.max_size}")
    failures = 0
    for cls in classes:
        if cls.n_batch == 0:
            continue
        diffs = {n: s for n, s in cls.diffs.items()}
        for p in partners:
            mask = fusion_suite_mask(p, cls.ranks, diffs, cls.n_batch)
            failures += int((~mask).sum())
    verdicts = [Verdict.from_bool(
        "fusion-hopf-sweep", failures == 0,
        (f"{failures} failing pairs",) if failures else (),
        (("pairs", total),))]
    bad = 0
    for x in corpus_mod.torsion_complexes(args.torsion_samples, seed):
        rec = dg.check_creation_corollary(x)
        if not rec["consistent"]:
            bad += 1
    verdicts.append(Verdict.from_bool(
        "dual-creation-corollary-torsion", bad == 0,
        (f"{bad} inconsistent instances",) if bad else (),
        (("instances", args.torsion_samples),)))
    return _emit(args, verdicts)


def cmd_generate_corpus(args) -> int:
    bounds: dict[str, object] = {}
    if args.kind == "topologies":
        bounds["points"] = args.points
    elif args.kind == "free-complexes":
        bounds.update(support=tuple(args.support), max_rank=args.max_rank,
                      bound=args.bound)
    elif args.kind == "torsion-complexes":
        bounds["count"] = args.count
    else:
        raise InputError(f"unknown corpus kind {args.kind!r}")
    try:
        paths = generate_corpus(args.kind, args.out or "corpus",
                                seed=_seed_of(args),
                                max_size=args.max_size or 100_000, **bounds)
    except CorpusTooLarge as e:
        raise InputError(str(e)) from e
    v = Verdict("generate-corpus", "pass",
                tuple(str(p) for p in paths), (("files", len(paths)),))
    # _emit would re-write report.json into --out; corpus dirs stay clean
    sys.stdout.write(render_json([v]) if args.json else render_text([v]))
    return 0


def cmd_merge(args) -> int:
    verdicts = []
    for path in args.inputs:
        obj = _load_json(path)
        try:
            verdicts.extend(Verdict.from_json(v) for v in obj["verdicts"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"{path}: not a verdict report: {e}") from e
    return _emit(args, verdicts)


# -- parser ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kanforge", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true",
                        help="machine-readable verdicts")
        sp.add_argument("--seed", type=int, default=None,
                        help="seed for randomized parts (env KANFORGE_SEED)")
        sp.add_argument("--max-size", type=int, default=None,
                        help="cap on generated/processed instances")
        sp.add_argument("--out", default=None, help="directory for output files")

    sp = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    sp.add_argument("input"); common(sp); sp.set_defaults(func=cmd_snf)

    sp = sub.add_parser("dual", help="dual object/complex with snake verdicts")
    sp.add_argument("input"); common(sp); sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("tensor", help="tensor two payloads of the same kind")
    sp.add_argument("left"); sp.add_argument("right")
    common(sp); sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("check-coalgebra", help="coalgebra axioms / enumeration")
    sp.add_argument("input"); common(sp); sp.set_defaults(func=cmd_check_coalgebra)

    sp = sub.add_parser("fusion", help="fusion map invertibility and coherence")
    sp.add_argument("left"); sp.add_argument("right", nargs="?", default=None)
    common(sp); sp.set_defaults(func=cmd_fusion)

    sp = sub.add_parser("check-comonad", help="monoidal comonad axioms (tables)")
    sp.add_argument("input"); common(sp); sp.set_defaults(func=cmd_check_comonad)

    sp = sub.add_parser("em", help="build and audit the coalgebra category")
    sp.add_argument("input"); common(sp); sp.set_defaults(func=cmd_em)

    sp = sub.add_parser("check-hopf", help="all fusion maps invertible (tables)")
    sp.add_argument("input"); common(sp); sp.set_defaults(func=cmd_check_hopf)

    sp = sub.add_parser("lan", help="dual of an object by exhaustive search")
    sp.add_argument("input"); sp.add_argument("object")
    common(sp); sp.set_defaults(func=cmd_lan)

    sp = sub.add_parser("verify-createkan", help="dual creation audit (tables)")
    sp.add_argument("input"); common(sp); sp.set_defaults(func=cmd_verify_createkan)

    sp = sub.add_parser("corollary-sweep",
                        help="batched fusion sweep + torsion dual corollary")
    sp.add_argument("--max-rank", type=int, default=1)
    sp.add_argument("--bound", type=int, default=1)
    sp.add_argument("--torsion-samples", type=int, default=25)
    common(sp); sp.set_defaults(func=cmd_corollary_sweep)

    sp = sub.add_parser("generate-corpus", help="write a deterministic corpus")
    sp.add_argument("kind",
                    choices=("topologies", "free-complexes", "torsion-complexes"))
    sp.add_argument("--points", type=int, default=2)
    sp.add_argument("--support", type=int, nargs="*", default=(0, 1))
    sp.add_argument("--max-rank", type=int, default=1)
    sp.add_argument("--bound", type=int, default=2)
    sp.add_argument("--count", type=int, default=10)
    common(sp); sp.set_defaults(func=cmd_generate_corpus)

    sp = sub.add_parser("merge", help="merge verdict reports into one summary")
    sp.add_argument("inputs", nargs="*")
    common(sp); sp.set_defaults(func=cmd_merge)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
