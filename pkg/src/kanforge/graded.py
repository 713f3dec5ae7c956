"""Graded abelian groups, graded morphisms, and chain complexes.

A graded object stores finitely many nonzero degree components, each a
canonical finitely generated abelian group.  Morphisms are degreewise;
chain complexes add a differential of degree -1 squaring to zero.  The
grading-coalgebra structure (a family of commuting projections summing to
the identity) is the comonad-structure datum that lets a plain object
remember a grading.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .intmat import IntMatrix
from .abgroup import (AbMorphism, AbObject, DirectSum, ZERO, direct_sum, identity,
                      tensor, tensor_mor, try_dual, zero_morphism)


@dataclass(frozen=True)
class GradedObject:
    """Finitely supported family of abelian groups indexed by integers."""

    components: tuple[tuple[int, AbObject], ...]

    def __post_init__(self):
        degs = [d for d, _ in self.components]
        if degs != sorted(degs) or len(set(degs)) != len(degs):
            raise ValueError("components must be sorted by degree without repeats")
        if any(c.is_zero for _, c in self.components):
            raise ValueError("zero components must be omitted")

    @staticmethod
    def of(parts: dict[int, AbObject]) -> "GradedObject":
        return GradedObject(tuple(sorted((d, c) for d, c in parts.items() if not c.is_zero)))

    def at(self, degree: int) -> AbObject:
        for d, c in self.components:
            if d == degree:
                return c
        return ZERO

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.components)

    @property
    def is_zero(self) -> bool:
        return not self.components

    def shifted(self, k: int) -> "GradedObject":
        """Degree shift: component at n becomes component at n + k."""
        return GradedObject(tuple((d + k, c) for d, c in self.components))

    def to_json(self) -> dict:
        return {"components": {str(d): c.to_json() for d, c in self.components}}

    @staticmethod
    def from_json(obj: dict) -> "GradedObject":
        return GradedObject.of({int(d): AbObject.from_json(c)
                                for d, c in obj["components"].items()})

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(f"[{d}] {c}" for d, c in self.components)


ZERO_GRADED = GradedObject(())


@dataclass(frozen=True)
class GradedMorphism:
    """Degree-preserving morphism between graded objects (up to a fixed shift)."""

    source: GradedObject
    target: GradedObject
    degree: int
    parts: tuple[tuple[int, AbMorphism], ...]

    def __post_init__(self):
        degs = [d for d, _ in self.parts]
        if degs != sorted(degs) or len(set(degs)) != len(degs):
            raise ValueError("parts must be sorted by degree without repeats")
        kept = []
        for d, f in self.parts:
            if f.source != self.source.at(d) or f.target != self.target.at(d + self.degree):
                raise ValueError(f"part at degree {d} has the wrong shape")
            if not f.is_zero:
                kept.append((d, f))
        if len(kept) != len(self.parts):
            object.__setattr__(self, "parts", tuple(kept))

    @staticmethod
    def of(source: GradedObject, target: GradedObject, degree: int,
           parts: dict[int, AbMorphism]) -> "GradedMorphism":
        return GradedMorphism(source, target, degree, tuple(sorted(parts.items())))

    def at(self, degree: int) -> AbMorphism:
        for d, f in self.parts:
            if d == degree:
                return f
        return zero_morphism(self.source.at(degree), self.target.at(degree + self.degree))

    def __matmul__(self, other: "GradedMorphism") -> "GradedMorphism":
        if other.target != self.source:
            raise ValueError("object mismatch in composition")
        deg = self.degree + other.degree
        parts = {}
        for d, f in other.parts:
            g = self.at(d + other.degree)
            if not (g.is_zero or f.is_zero):
                parts[d] = g @ f
        return GradedMorphism.of(other.source, self.target, deg, parts)

    def __add__(self, other: "GradedMorphism") -> "GradedMorphism":
        if (self.source, self.target, self.degree) != (other.source, other.target, other.degree):
            raise ValueError("shape mismatch in sum")
        degs = {d for d, _ in self.parts} | {d for d, _ in other.parts}
        return GradedMorphism.of(self.source, self.target, self.degree,
                                 {d: self.at(d) + other.at(d) for d in degs})

    def __neg__(self) -> "GradedMorphism":
        return GradedMorphism(self.source, self.target, self.degree,
                              tuple((d, -f) for d, f in self.parts))

    def __sub__(self, other: "GradedMorphism") -> "GradedMorphism":
        return self + (-other)

    @property
    def is_zero(self) -> bool:
        return not self.parts

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "degree": self.degree,
                "parts": {str(d): f.matrix.to_json() for d, f in self.parts}}


def graded_identity(a: GradedObject) -> GradedMorphism:
    return GradedMorphism.of(a, a, 0, {d: identity(c) for d, c in a.components})


def graded_zero(a: GradedObject, b: GradedObject, degree: int = 0) -> GradedMorphism:
    return GradedMorphism(a, b, degree, ())


# -- chain complexes ----------------------------------------------------------

@dataclass(frozen=True)
class ChainComplex:
    """Graded object with a square-zero degree -1 differential."""

    graded: GradedObject
    differential: GradedMorphism

    def __post_init__(self):
        d = self.differential
        if d.source != self.graded or d.target != self.graded or d.degree != -1:
            raise ValueError("differential must be a degree -1 endomorphism")
        if not (d @ d).is_zero:
            raise ValueError("differential does not square to zero")

    @staticmethod
    def of(parts: dict[int, AbObject], diffs: dict[int, AbMorphism]) -> "ChainComplex":
        g = GradedObject.of(parts)
        return ChainComplex(g, GradedMorphism.of(g, g, -1, diffs))

    def d_at(self, n: int) -> AbMorphism:
        return self.differential.at(n)

    @property
    def support(self) -> tuple[int, ...]:
        return self.graded.support

    def to_json(self) -> dict:
        return {"graded": self.graded.to_json(),
                "differential": {str(d): f.matrix.to_json()
                                 for d, f in self.differential.parts}}

    @staticmethod
    def from_json(obj: dict) -> "ChainComplex":
        g = GradedObject.from_json(obj["graded"])
        parts = {}
        for ds, m in obj.get("differential", {}).items():
            n = int(ds)
            parts[n] = AbMorphism(g.at(n), g.at(n - 1), IntMatrix.from_json(m))
        return ChainComplex(g, GradedMorphism.of(g, g, -1, parts))


def is_chain_map(f: GradedMorphism, src: ChainComplex, tgt: ChainComplex) -> bool:
    if f.source != src.graded or f.target != tgt.graded or f.degree != 0:
        return False
    return (tgt.differential @ f - f @ src.differential).is_zero


# -- graded tensor products -----------------------------------------------------

@dataclass(frozen=True)
class GradedTensor:
    """Degreewise tensor with the per-degree biproduct decomposition.

    In degree n the component is the direct sum over i + j = n of
    left_i (x) right_j; ``blocks[n]`` lists the (i, j) pairs in ascending i
    and ``sums[n]`` holds the biproduct witnessing the decomposition.
    """

    object: GradedObject
    left: GradedObject
    right: GradedObject
    blocks: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]
    sums: tuple[tuple[int, DirectSum], ...]

    def blocks_at(self, n: int) -> tuple[tuple[int, int], ...]:
        for d, b in self.blocks:
            if d == n:
                return b
        return ()

    def sum_at(self, n: int) -> DirectSum:
        for d, s in self.sums:
            if d == n:
                return s
        return direct_sum()

    def inclusion(self, i: int, j: int) -> AbMorphism:
        """left_i (x) right_j -> (left (x) right)_{i+j} on canonical objects."""
        blocks = self.blocks_at(i + j)
        return self.sum_at(i + j).inclusions[blocks.index((i, j))]

    def projection(self, i: int, j: int) -> AbMorphism:
        blocks = self.blocks_at(i + j)
        return self.sum_at(i + j).projections[blocks.index((i, j))]


@lru_cache(maxsize=65536)
def tensor_graded(a: GradedObject, b: GradedObject) -> GradedTensor:
    blocks = {}
    for i, ca in a.components:
        for j, cb in b.components:
            t = tensor(ca, cb)
            if not t.object.is_zero:
                blocks.setdefault(i + j, []).append((i, j))
    comps = {}
    sums = {}
    for n, idx in blocks.items():
        ds = direct_sum(*(tensor(a.at(i), b.at(j)).object for i, j in idx))
        comps[n] = ds.object
        sums[n] = ds
    obj = GradedObject.of(comps)
    return GradedTensor(obj, a, b,
                        tuple(sorted((n, tuple(v)) for n, v in blocks.items())),
                        tuple(sorted(sums.items())))


def tensor_graded_mor(f: GradedMorphism, g: GradedMorphism) -> GradedMorphism:
    """Degreewise tensor of two degree-0 graded morphisms."""
    if f.degree != 0 or g.degree != 0:
        raise ValueError("tensor of graded morphisms needs degree 0 factors")
    src = tensor_graded(f.source, g.source)
    tgt = tensor_graded(f.target, g.target)
    parts = {}
    for n, _ in src.object.components:
        acc = zero_morphism(src.object.at(n), tgt.object.at(n))
        for (i, j) in src.blocks_at(n):
            piece = tensor_mor(f.at(i), g.at(j))
            if (i, j) in tgt.blocks_at(n):
                acc = acc + (tgt.inclusion(i, j) @ piece @ src.projection(i, j))
        parts[n] = acc
    return GradedMorphism.of(src.object, tgt.object, 0, parts)


@lru_cache(maxsize=65536)
def graded_associator(a: GradedObject, b: GradedObject, c: GradedObject) -> GradedMorphism:
    """Canonical iso ((a (x) b) (x) c) -> (a (x) (b (x) c)) degreewise."""
    from .abgroup import associator as ab_associator
    tab = tensor_graded(a, b)
    tbc = tensor_graded(b, c)
    left = tensor_graded(tab.object, c)
    right = tensor_graded(a, tbc.object)
    parts = {}
    for n, _ in left.object.components:
        acc = zero_morphism(left.object.at(n), right.object.at(n))
        for (m, k) in left.blocks_at(n):  # (a(x)b)_m (x) c_k
            for (i, j) in tab.blocks_at(m):  # a_i (x) b_j
                if ((j, k) not in tbc.blocks_at(j + k)
                        or (i, j + k) not in right.blocks_at(n)):
                    continue  # a factor tensors to zero, contribution vanishes
                # route a_i(x)b_j(x)c_k through the plain associator
                inner_in = tensor_mor(tab.projection(i, j), identity(c.at(k)))
                alpha = ab_associator(a.at(i), b.at(j), c.at(k))
                inner_out = tensor_mor(identity(a.at(i)), tbc.inclusion(j, k))
                acc = acc + (right.inclusion(i, j + k) @ inner_out @ alpha
                             @ inner_in @ left.projection(m, k))
        parts[n] = acc
    return GradedMorphism.of(left.object, right.object, 0, parts)


UNIT_GRADED = GradedObject.of({0: AbObject(1)})


@lru_cache(maxsize=65536)
def graded_unitors(a: GradedObject) -> tuple[GradedMorphism, GradedMorphism]:
    """(left unitor 1(x)a -> a, right unitor a(x)1 -> a)."""
    tl = tensor_graded(UNIT_GRADED, a)
    tr = tensor_graded(a, UNIT_GRADED)
    lam = {}
    rho = {}
    for n, c in a.components:
        # tensoring with Z leaves the canonical form unchanged, so the
        # unitor is the biproduct projection onto the single block
        lam[n] = tl.projection(0, n)
        rho[n] = tr.projection(n, 0)
    return (GradedMorphism.of(tl.object, a, 0, lam),
            GradedMorphism.of(tr.object, a, 0, rho))


# -- duals -----------------------------------------------------------------------

def dual_graded(a: GradedObject):
    """Degreewise dual with component n the dual of a at -n, or None."""
    comps = {}
    for d, c in a.components:
        w = try_dual(c)
        if w is None:
            return None
        comps[-d] = w.dual_object
    return GradedObject.of(comps)
