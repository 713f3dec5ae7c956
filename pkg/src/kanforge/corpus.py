"""Deterministic corpora used by the acceptance suites and the CLI.

Finite-category side: subset lattices with interior-operator comonads (one
per topology on a set of up to three points), identity comonads, and a
two-object pointed line with a constant-zero comonad.

Concrete side: exhaustive families of free chain complexes over bounded
supports/ranks/entries, the matching free graded partners, and seeded
torsion chain complexes.  All generation is exhaustive or seed-driven, so
identical inputs give identical corpora.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from .abgroup import AbObject, AbMorphism, normalize_presentation
from .graded import ChainComplex, GradedObject
from .intmat import IntMatrix
from .fincat import ComonadData, FiniteMonoidalCategory


# -- subset lattices and topologies ---------------------------------------------


def _subset_name(s: frozenset[int]) -> str:
    return "o" + "".join(str(e) for e in sorted(s))


def _mor_name(src: frozenset[int], tgt: frozenset[int]) -> str:
    return f"m_{_subset_name(src)}_{_subset_name(tgt)}"


def _subsets(n: int) -> list[frozenset[int]]:
    pts = range(n)
    out = [frozenset(c) for k in range(n + 1) for c in combinations(pts, k)]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def subset_lattice(n: int) -> FiniteMonoidalCategory:
    """Thin category of subsets of {0..n-1} ordered by inclusion.

    Tensor is intersection and the unit is the full set, so the strict
    monoidal axioms hold on the nose.
    """
    subs = _subsets(n)
    objects = tuple(_subset_name(s) for s in subs)
    morphisms = tuple(sorted((_mor_name(s, t), _subset_name(s), _subset_name(t))
                             for s in subs for t in subs if s <= t))
    compose = {}
    for s in subs:
        for t in subs:
            if not s <= t:
                continue
            for u in subs:
                if t <= u:
                    compose[(_mor_name(t, u), _mor_name(s, t))] = _mor_name(s, u)
    tensor_ob = {(_subset_name(s), _subset_name(t)): _subset_name(s & t)
                 for s in subs for t in subs}
    tensor_mor = {}
    for s, t in product(subs, repeat=2):
        if not s <= t:
            continue
        for s2, t2 in product(subs, repeat=2):
            if not s2 <= t2:
                continue
            tensor_mor[(_mor_name(s, t), _mor_name(s2, t2))] = \
                _mor_name(s & s2, t & t2)
    identities = tuple(sorted((_subset_name(s), _mor_name(s, s)) for s in subs))
    return FiniteMonoidalCategory(
        objects=objects, morphisms=morphisms,
        compose_table=tuple(sorted(compose.items())),
        tensor_ob=tuple(sorted(tensor_ob.items())),
        tensor_mor=tuple(sorted(tensor_mor.items())),
        unit=_subset_name(frozenset(range(n))),
        identities=identities)


Topology = tuple[frozenset[int], ...]


def enumerate_topologies(n: int) -> list[Topology]:
    """All topologies on {0..n-1}, deterministically ordered.

    A topology is a family of subsets containing the empty and full sets and
    closed under union and intersection (finite set, so that suffices).
    """
    subs = _subsets(n)
    empty, full = frozenset(), frozenset(range(n))
    proper = [s for s in subs if s not in (empty, full)]
    found = []
    for k in range(len(proper) + 1):
        for extra in combinations(proper, k):
            fam = {empty, full, *extra}
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                found.append(tuple(sorted(fam, key=lambda s: (len(s), sorted(s)))))
    return sorted(found, key=lambda t: (len(t), [sorted(s) for s in t]))


def topology_label(top: Topology) -> str:
    return ".".join(_subset_name(s) for s in top)


def interior_comonad(n: int, top: Topology) -> ComonadData:
    """Interior operator of a topology as a monoidal comonad on subset_lattice(n)."""
    subs = _subsets(n)
    opens = set(top)

    def interior(s: frozenset[int]) -> frozenset[int]:
        best = frozenset()
        for o in opens:
            if o <= s:
                best |= o
        return best

    on_objects = tuple(sorted((_subset_name(s), _subset_name(interior(s)))
                              for s in subs))
    on_morphisms = tuple(sorted(
        (_mor_name(s, t), _mor_name(interior(s), interior(t)))
        for s in subs for t in subs if s <= t))
    counit = tuple(sorted((_subset_name(s), _mor_name(interior(s), s)) for s in subs))
    comult = tuple(sorted((_subset_name(s),
                           _mor_name(interior(s), interior(s))) for s in subs))
    monoidal = tuple(sorted(
        ((_subset_name(s), _subset_name(t)),
         _mor_name(interior(s) & interior(t), interior(s & t)))
        for s in subs for t in subs))
    full = frozenset(range(n))
    return ComonadData(on_objects=on_objects, on_morphisms=on_morphisms,
                       counit=counit, comult=comult, monoidal=monoidal,
                       unit_map=_mor_name(full, interior(full)))


def identity_comonad(cat: FiniteMonoidalCategory) -> ComonadData:
    on_objects = tuple(sorted((a, a) for a in cat.objects))
    names = tuple(sorted(n for n, _, _ in cat.morphisms))
    return ComonadData(
        on_objects=on_objects,
        on_morphisms=tuple((f, f) for f in names),
        counit=tuple((a, cat.id_of(a)) for a, _ in on_objects),
        comult=tuple((a, cat.id_of(a)) for a, _ in on_objects),
        monoidal=tuple(sorted(((a, b), cat.id_of(cat.tensor_objects(a, b)))
                              for a in cat.objects for b in cat.objects)),
        unit_map=cat.id_of(cat.unit))


# -- pointed line -----------------------------------------------------------------


def pointed_line() -> FiniteMonoidalCategory:
    """Two-object category: a zero object z and a point a, tensored by smash.

    Morphisms are the pointed maps between z = {*} and a = {*, 1}; the
    nontrivial endomorphism n of a is the zero map a -> z -> a.  Smash
    product makes a the unit and z absorbing.
    """
    # semantics: each morphism is a function on {0 (basepoint), 1}
    sem = {"1z": ("z", "z", {0: 0}), "1a": ("a", "a", {0: 0, 1: 1}),
           "i": ("z", "a", {0: 0}), "p": ("a", "z", {0: 0, 1: 0}),
           "n": ("a", "a", {0: 0, 1: 0})}
    elems = {"z": (0,), "a": (0, 1)}

    def find(src: str, tgt: str, fn: dict[int, int]) -> str:
        for name, (s, t, g) in sem.items():
            if s == src and t == tgt and all(g[x] == fn[x] for x in elems[src]):
                return name
        raise KeyError((src, tgt, fn))

    morphisms = tuple(sorted((name, s, t) for name, (s, t, _) in sem.items()))
    compose = {}
    for g, (gs, gt, gf) in sem.items():
        for f, (fs, ft, ff) in sem.items():
            if ft == gs:
                compose[(g, f)] = find(fs, gt, {x: gf[ff[x]] for x in elems[fs]})
    smash_ob = {(x, y): "a" if x == y == "a" else "z"
                for x in ("z", "a") for y in ("z", "a")}
    tensor_mor = {}
    for f, (fs, ft, ff) in sem.items():
        for g, (gs, gt, gf) in sem.items():
            src, tgt = smash_ob[(fs, gs)], smash_ob[(ft, gt)]
            # the only non-basepoint of x (smash) y is the pair (1, 1)
            fn = {0: 0}
            if src == "a":
                fn[1] = 1 if (ff[1] == 1 and gf[1] == 1 and tgt == "a") else 0
            tensor_mor[(f, g)] = find(src, tgt, fn)
    return FiniteMonoidalCategory(
        objects=("a", "z"), morphisms=morphisms,
        compose_table=tuple(sorted(compose.items())),
        tensor_ob=tuple(sorted(smash_ob.items())),
        tensor_mor=tuple(sorted(tensor_mor.items())),
        unit="a", identities=(("a", "1a"), ("z", "1z")))


def zero_comonad() -> ComonadData:
    """Constant-at-z comonad on pointed_line().

    Sends every object to the zero object z and every morphism to the
    identity of z.  All comonad and monoidality axioms hold except the
    unit-counit compatibility (the composite a -> z -> a cannot be the
    identity since z is a strict zero object); checkers report exactly
    that failure.  Its coalgebras are still well-defined: only (z, 1z)
    survives the counit axiom.
    """
    return ComonadData(
        on_objects=(("a", "z"), ("z", "z")),
        on_morphisms=tuple((f, "1z") for f in ("1a", "1z", "i", "n", "p")),
        counit=(("a", "i"), ("z", "1z")),
        comult=(("a", "1z"), ("z", "1z")),
        monoidal=tuple(sorted((((x, y), "1z")
                               for x in ("a", "z") for y in ("a", "z")))),
        unit_map="p")


@dataclass(frozen=True)
class FincatEntry:
    """One category/comonad pair of the finite-category corpus."""

    name: str
    category: FiniteMonoidalCategory
    comonad: ComonadData
    comonad_passes: bool  # False only for the documented zero-comonad entry

    def to_json(self) -> dict:
        out = self.category.to_json()
        out["comonad"] = self.comonad.to_json()
        return out


def fincat_corpus(max_points: int = 3) -> list[FincatEntry]:
    """Identity comonads, interior comonads of all topologies, zero comonad."""
    entries = []
    for n in range(1, max_points + 1):
        cat = subset_lattice(n)
        entries.append(FincatEntry(f"identity_lattice{n}", cat,
                                   identity_comonad(cat), True))
        for top in enumerate_topologies(n):
            entries.append(FincatEntry(
                f"interior{n}_{topology_label(top)}", cat,
                interior_comonad(n, top), True))
    line = pointed_line()
    entries.append(FincatEntry("identity_pointed_line", line,
                               identity_comonad(line), True))
    entries.append(FincatEntry("zero_pointed_line", line, zero_comonad(), False))
    return entries


# -- free chain complexes ---------------------------------------------------------


def rank_profiles(max_rank: int, support: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All assignments of ranks 0..max_rank to the (sorted) support degrees."""
    degs = tuple(sorted(support))
    return [p for p in product(range(max_rank + 1), repeat=len(degs))]


def _all_matrices(rows: int, cols: int, bound: int) -> np.ndarray:
    """Stack of every rows x cols integer matrix with entries in [-bound, bound]."""
    if rows * cols == 0:
        return np.zeros((1, rows, cols), dtype=np.int64)
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*[vals] * (rows * cols), indexing="ij"), axis=-1)
    return grid.reshape(-1, rows, cols)


@dataclass(frozen=True)
class FreeComplexClass:
    """All free complexes with a fixed rank profile, as batched differentials.

    ``ranks`` maps degree -> rank; ``diffs`` maps degree n to an
    (n_batch, rank(n-1), rank(n)) stack; instance i of every stack together
    forms one complex (d o d = 0 already enforced).
    """

    ranks: dict[int, int]
    diffs: dict[int, np.ndarray]
    n_batch: int


def free_complex_classes(max_rank: int, support: tuple[int, ...],
                         bound: int) -> list[FreeComplexClass]:
    degs = tuple(sorted(support))
    classes = []
    for profile in rank_profiles(max_rank, support):
        ranks = {d: r for d, r in zip(degs, profile) if r > 0}
        stacks = {}
        n_batch = 1
        for a, b in zip(degs, degs[1:]):
            if b != a + 1 or ranks.get(a, 0) == 0 or ranks.get(b, 0) == 0:
                continue
            stacks[b] = _all_matrices(ranks[b - 1], ranks[b], bound)
        # combine independent choices, then filter d o d = 0
        keys = sorted(stacks)
        combined: dict[int, np.ndarray] = {}
        for k in keys:
            m = stacks[k]
            reps = len(m)
            for kk in combined:
                combined[kk] = np.repeat(combined[kk], reps, axis=0)
            combined[k] = np.tile(m, (n_batch, 1, 1))
            n_batch *= reps
        keep = np.ones(n_batch, dtype=bool)
        for k in keys:
            if k - 1 in combined:
                prod = np.einsum("nij,njk->nik", combined[k - 1], combined[k])
                keep &= (prod == 0).all(axis=(1, 2))
        combined = {k: v[keep] for k, v in combined.items()}
        classes.append(FreeComplexClass(ranks=ranks, diffs=combined,
                                        n_batch=int(keep.sum())))
    return classes


def count_free_complexes(max_rank: int, support: tuple[int, ...],
                         bound: int) -> int:
    return sum(c.n_batch for c in free_complex_classes(max_rank, support, bound))


def _class_instance(cls: FreeComplexClass, i: int) -> ChainComplex:
    parts = {d: AbObject(r) for d, r in cls.ranks.items()}
    diffs = {}
    for n, stack in cls.diffs.items():
        m = stack[i]
        diffs[n] = AbMorphism(parts[n], parts[n - 1],
                              IntMatrix.from_rows([[int(x) for x in row]
                                                   for row in m]))
    return ChainComplex.of(parts, diffs)


def iter_free_complexes(max_rank: int, support: tuple[int, ...],
                        bound: int) -> Iterator[ChainComplex]:
    for cls in free_complex_classes(max_rank, support, bound):
        for i in range(cls.n_batch):
            yield _class_instance(cls, i)


def graded_partners(max_rank: int, support: tuple[int, ...]) -> list[GradedObject]:
    """Every free graded object with the given support/rank bounds (incl. zero)."""
    degs = tuple(sorted(support))
    out = []
    for profile in rank_profiles(max_rank, support):
        out.append(GradedObject.of({d: AbObject(r)
                                    for d, r in zip(degs, profile) if r > 0}))
    return out


# -- torsion chain complexes ------------------------------------------------------


_TORSION_CHOICES: tuple[tuple[int, ...], ...] = (
    (2,), (3,), (4,), (6,), (2, 2), (2, 4), (2, 6), (3, 3))


def _random_object(rng: random.Random, max_free: int,
                   force_torsion: bool) -> AbObject:
    free = rng.randrange(max_free + 1)
    if force_torsion or rng.random() < 0.6:
        return AbObject(free, rng.choice(_TORSION_CHOICES))
    return AbObject(free)


def random_morphism(rng: random.Random, a: AbObject, b: AbObject,
                    bound: int = 3) -> AbMorphism:
    """Uniform-ish well-typed morphism a -> b with small coefficients.

    Entry (i, j) must be a multiple of t/gcd(t, m) where m is the order of
    source generator j and t the order of target generator i (order 0 means
    free, i.e. infinite).
    """
    rows = []
    for i in range(b.ngens):
        t = b.orders[i]
        row = []
        for j in range(a.ngens):
            m = a.orders[j]
            if m == 0:
                step = 1
            elif t == 0:
                row.append(0)
                continue
            else:
                step = t // __import__("math").gcd(t, m)
            row.append(step * rng.randint(-bound, bound))
        rows.append(row)
    return AbMorphism(a, b, IntMatrix.from_rows(rows))


def torsion_complexes(count: int, seed: int,
                      max_free: int = 2) -> list[ChainComplex]:
    """Seeded chain complexes with at least one torsion component.

    Each has support inside {0, 1, 2}; d1 is forced to kill the image of d2
    by factoring through the cokernel of d2, so the square-zero law holds by
    construction rather than by rejection sampling.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a0 = _random_object(rng, max_free, force_torsion=True)
        a1 = _random_object(rng, max_free, force_torsion=False)
        a2 = _random_object(rng, max_free, force_torsion=False)
        parts = {d: a for d, a in ((0, a0), (1, a1), (2, a2)) if not a.is_zero}
        diffs: dict[int, AbMorphism] = {}
        if 1 in parts and 2 in parts:
            diffs[2] = random_morphism(rng, a2, a1)
        if 0 in parts and 1 in parts:
            if 2 in diffs:
                # present coker(d2) and map out of it
                rel = IntMatrix.hstack(diffs[2].matrix,
                                       IntMatrix.diagonal(a1.orders))
                cok, to_can, _ = normalize_presentation(rel)
                q = AbMorphism(a1, cok, to_can)
                diffs[1] = random_morphism(rng, cok, a0) @ q
            else:
                diffs[1] = random_morphism(rng, a1, a0)
        if not any(o != 0 for p in parts.values() for o in p.orders):
            continue
        out.append(ChainComplex.of(parts, diffs))
    return out


# -- corpus generation ------------------------------------------------------------


class CorpusTooLarge(ValueError):
    """Raised when requested bounds exceed the generation cap."""

    def __init__(self, estimate: int, cap: int):
        self.estimate = estimate
        self.cap = cap
        super().__init__(
            f"refusing to generate corpus: estimated {estimate} files "
            f"exceeds cap {cap}; lower the bounds or raise --max-size")


def estimate_corpus_size(kind: str, **bounds) -> int:
    if kind == "topologies":
        n = bounds["points"]
        if n == 0:
            return 0
        # crude over-estimate: families of subsets containing empty/full sets
        return 2 ** (2 ** n - 2)
    if kind == "free-complexes":
        support = tuple(bounds["support"])
        max_rank = bounds["max_rank"]
        bound = bounds["bound"]
        degs = sorted(support)
        est = 1
        for a, b in zip(degs, degs[1:]):
            if b == a + 1:
                est *= (2 * bound + 1) ** (max_rank * max_rank)
        return est * (max_rank + 1) ** max(len(degs) - 1, 1)
    if kind == "torsion-complexes":
        return bounds["count"]
    raise ValueError(f"unknown corpus kind: {kind}")


def generate_corpus(kind: str, out_dir: str | Path, seed: int = 0,
                    max_size: int = 100_000, **bounds) -> list[Path]:
    """Write a deterministic corpus of JSON files; returns the paths written.

    Kinds: "topologies" (bounds: points) writes one category+comonad file
    per topology; "free-complexes" (support, max_rank, bound) writes one
    chain-complex file per complex with the exact given support;
    "torsion-complexes" (count) writes seeded torsion complexes.
    """
    est = estimate_corpus_size(kind, **bounds)
    if est > max_size:
        raise CorpusTooLarge(est, max_size)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []

    def emit(stem: str, payload: dict):
        p = out / f"{stem}.json"
        p.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        paths.append(p)

    if kind == "topologies":
        n = bounds["points"]
        if n > 0:
            for idx, top in enumerate(enumerate_topologies(n)):
                payload = subset_lattice(n).to_json()
                payload["comonad"] = interior_comonad(n, top).to_json()
                emit(f"topology{n}_{idx:03d}", payload)
    elif kind == "free-complexes":
        support = tuple(sorted(bounds["support"]))
        idx = 0
        for x in iter_free_complexes(bounds["max_rank"], support,
                                     bounds["bound"]):
            if x.support != support:  # exact support requested
                continue
            emit(f"free_{idx:05d}", x.to_json())
            idx += 1
    elif kind == "torsion-complexes":
        for idx, x in enumerate(torsion_complexes(bounds["count"], seed)):
            emit(f"torsion_{idx:05d}", x.to_json())
    else:
        raise ValueError(f"unknown corpus kind: {kind}")
    return paths
