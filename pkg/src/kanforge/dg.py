"""Comonads whose coalgebras are graded objects and chain complexes.

Two comonads live here.

* The grading comonad on plain abelian groups: a coalgebra is a carrier
  together with a finite family of orthogonal idempotent projections summing
  to the identity, i.e. a direct-sum grading remembered as structure.
* The differential comonad on graded objects: G shifts-and-doubles,
  (GA)_n = A_n (+) A_{n-1}, and a G-coalgebra structure on A is exactly a
  square-zero degree -1 differential, so coalgebras are chain complexes.

Both comonads carry a fusion map G(a) (x) b -> G(a (x) b) built from the
comonad's monoidal structure and the coalgebra structure of the right factor;
its invertibility is the Hopf property that drives creation of duals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .intmat import IntMatrix, solve_diophantine
from .abgroup import (AbMorphism, AbObject, DirectSum, UNIT, ZERO, direct_sum,
                      identity, invert_morphism, normalize_presentation, tensor,
                      tensor_mor, zero_morphism)
from .graded import (ChainComplex, GradedMorphism, GradedObject, UNIT_GRADED,
                     dual_graded, graded_associator, graded_identity,
                     graded_unitors, graded_zero, tensor_graded,
                     tensor_graded_mor)


# ---------------------------------------------------------------------------
# grading comonad on plain abelian groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradingCoalgebra:
    """Carrier with a finite family of grading projections indexed by degree."""

    carrier: AbObject
    projections: tuple[tuple[int, AbMorphism], ...]

    def projection(self, n: int) -> AbMorphism:
        for d, p in self.projections:
            if d == n:
                return p
        return zero_morphism(self.carrier, self.carrier)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.projections)


def check_grading_coalgebra(c: GradingCoalgebra) -> bool:
    """Projections must be orthogonal idempotents summing to the identity."""
    total = zero_morphism(c.carrier, c.carrier)
    for d, p in c.projections:
        if p.source != c.carrier or p.target != c.carrier:
            return False
        total = total + p
    if total != identity(c.carrier):
        return False
    for d, p in c.projections:
        for e, q in c.projections:
            expect = p if d == e else zero_morphism(c.carrier, c.carrier)
            if q @ p != expect:
                return False
    return True


def check_grading_via_comonad(c: GradingCoalgebra) -> bool:
    """Same verdict as check_grading_coalgebra by a different route.

    Builds the comonad value G(A) = (+)_n A over the structure's index set,
    assembles gamma from the candidate projections, and checks the two
    coalgebra equations as single matrix identities: eps o gamma = id with
    eps the fold map, and delta o gamma = G(gamma) o gamma with delta the
    diagonal placement.  Expanding those blockwise recovers "sum = id" and
    "orthogonal idempotents", so the two checkers must always agree.
    """
    a = c.carrier
    k = len(c.projections)
    if k == 0:
        return a.is_zero
    ga = direct_sum(*([a] * k))
    gga = direct_sum(*([ga.object] * k))
    gamma = zero_morphism(a, ga.object)
    for i, (_, p) in enumerate(c.projections):
        if p.source != a or p.target != a:
            return False
        gamma = gamma + ga.inclusions[i] @ p
    eps = zero_morphism(ga.object, a)
    for i in range(k):
        eps = eps + ga.projections[i]
    if eps @ gamma != identity(a):
        return False
    delta = zero_morphism(ga.object, gga.object)
    for i in range(k):
        delta = delta + gga.inclusions[i] @ ga.inclusions[i] @ ga.projections[i]
    g_gamma = zero_morphism(ga.object, gga.object)
    for i in range(k):
        g_gamma = g_gamma + gga.inclusions[i] @ gamma @ ga.projections[i]
    return delta @ gamma == g_gamma @ gamma


def sigma(a: GradedObject) -> GradingCoalgebra:
    """Forget the grading of a into a carrier with remembered projections."""
    ds = direct_sum(*(c for _, c in a.components))
    projs = tuple((d, ds.inclusions[i] @ ds.projections[i])
                  for i, (d, _) in enumerate(a.components))
    return GradingCoalgebra(ds.object, projs)


def sigma_mor(f: GradedMorphism) -> AbMorphism:
    """Carrier-level morphism of a degree 0 graded morphism."""
    if f.degree != 0:
        raise ValueError("carrier morphisms require degree 0")
    src = direct_sum(*(c for _, c in f.source.components))
    tgt = direct_sum(*(c for _, c in f.target.components))
    tgt_pos = {d: i for i, (d, _) in enumerate(f.target.components)}
    acc = zero_morphism(src.object, tgt.object)
    for i, (d, _) in enumerate(f.source.components):
        if d in tgt_pos:
            acc = acc + (tgt.inclusions[tgt_pos[d]] @ f.at(d) @ src.projections[i])
    return acc


def _idempotent_image(a: AbObject, p: AbMorphism) -> tuple[AbObject, AbMorphism, AbMorphism]:
    """Image of an idempotent p on a as (piece, retraction, section)."""
    n = a.ngens
    comp = IntMatrix.identity(n) - p.matrix
    rels = comp.hstack(IntMatrix.diagonal(a.orders))
    piece, to_can, from_can = normalize_presentation(rels)
    retraction = AbMorphism(a, piece, to_can)
    section = AbMorphism(piece, a, p.matrix @ from_can)
    return piece, retraction, section


def coalgebra_to_graded(c: GradingCoalgebra) -> tuple[GradedObject, GradedMorphism | None,
                                                      dict[int, tuple[AbMorphism, AbMorphism]]]:
    """Recover the graded object underlying a grading coalgebra.

    Returns (graded object, None, maps) where maps[n] = (retraction, section)
    between the carrier and the degree-n piece.
    """
    comps = {}
    maps = {}
    for d, p in c.projections:
        piece, r, s = _idempotent_image(c.carrier, p)
        if not piece.is_zero:
            comps[d] = piece
            maps[d] = (r, s)
    return GradedObject.of(comps), None, maps


def graded_coalgebra_roundtrip(a: GradedObject) -> bool:
    """Grade -> coalgebra -> grade must reproduce the components exactly."""
    c = sigma(a)
    if not check_grading_coalgebra(c):
        return False
    b, _, maps = coalgebra_to_graded(c)
    if b.components != a.components:
        return False
    for d, (r, s) in maps.items():
        if r @ s != identity(b.at(d)):
            return False
        if s @ r != c.projection(d):
            return False
    return True


def hopf_map_sigma(c: GradingCoalgebra, b: AbObject) -> tuple[AbMorphism, AbMorphism, DirectSum]:
    """Distributivity iso carrier (x) b <-> (+)_n (piece_n (x) b).

    Returns (forward, inverse, biproduct of the graded tensor pieces); the
    invertibility of this map is the Hopf property of the grading comonad.
    """
    _, _, maps = coalgebra_to_graded(c)
    degs = sorted(maps)
    pieces = [tensor(maps[d][0].target, b).object for d in degs]
    ds = direct_sum(*pieces)
    src = tensor(c.carrier, b).object
    fwd = zero_morphism(src, ds.object)
    inv = zero_morphism(ds.object, src)
    for i, d in enumerate(degs):
        r, s = maps[d]
        fwd = fwd + (ds.inclusions[i] @ tensor_mor(r, identity(b)))
        inv = inv + (tensor_mor(s, identity(b)) @ ds.projections[i])
    return fwd, inv, ds


# ---------------------------------------------------------------------------
# differential comonad on graded objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GStruct:
    """G applied to a graded object, with per-degree slot decompositions.

    (GA)_n = A_n (+) A_{n-1}; slot 0 is the A_n summand, slot 1 the A_{n-1}.
    """

    base: GradedObject
    object: GradedObject
    sums: tuple[tuple[int, DirectSum], ...]

    def sum_at(self, n: int) -> DirectSum:
        for d, s in self.sums:
            if d == n:
                return s
        return direct_sum(self.base.at(n), self.base.at(n - 1))

    def incl(self, n: int, slot: int) -> AbMorphism:
        return self.sum_at(n).inclusions[slot]

    def proj(self, n: int, slot: int) -> AbMorphism:
        return self.sum_at(n).projections[slot]


@lru_cache(maxsize=65536)
def g_struct(a: GradedObject) -> GStruct:
    degrees = sorted({d for d in a.support} | {d + 1 for d in a.support})
    comps = {}
    sums = []
    for n in degrees:
        ds = direct_sum(a.at(n), a.at(n - 1))
        if not ds.object.is_zero:
            comps[n] = ds.object
            sums.append((n, ds))
    return GStruct(a, GradedObject.of(comps), tuple(sums))


def g_mor(f: GradedMorphism) -> GradedMorphism:
    """G on a degree 0 morphism: diagonal action on both slots."""
    if f.degree != 0:
        raise ValueError("G acts on degree 0 morphisms")
    gs, gt = g_struct(f.source), g_struct(f.target)
    parts = {}
    for n, _ in gs.object.components:
        acc = zero_morphism(gs.object.at(n), gt.object.at(n))
        for slot in (0, 1):
            piece = f.at(n - slot)
            if not piece.is_zero:
                acc = acc + (gt.incl(n, slot) @ piece @ gs.proj(n, slot))
        parts[n] = acc
    return GradedMorphism.of(gs.object, gt.object, 0, parts)


@lru_cache(maxsize=65536)
def epsilon(a: GradedObject) -> GradedMorphism:
    """Counit GA -> A, projection onto slot 0."""
    gs = g_struct(a)
    return GradedMorphism.of(gs.object, a, 0,
                             {n: gs.proj(n, 0) for n, _ in gs.object.components})


@lru_cache(maxsize=65536)
def delta(a: GradedObject) -> GradedMorphism:
    """Comultiplication GA -> GGA, (x, y) |-> ((x, y), (y, 0))."""
    gs = g_struct(a)
    ggs = g_struct(gs.object)
    parts = {}
    for n, _ in gs.object.components:
        part = ggs.incl(n, 0)
        y_part = ggs.incl(n, 1) @ g_struct(a).incl(n - 1, 0) @ gs.proj(n, 1)
        parts[n] = part + y_part
    return GradedMorphism.of(gs.object, ggs.object, 0, parts)


@lru_cache(maxsize=65536)
def cofree_chain(a: GradedObject) -> ChainComplex:
    """Cofree chain complex on a graded object: carrier GA, d(x, y) = (y, 0)."""
    gs = g_struct(a)
    parts = {}
    for n, _ in gs.object.components:
        d = gs.incl(n - 1, 0) @ gs.proj(n, 1)
        if not d.is_zero:
            parts[n] = d
    return ChainComplex(gs.object, GradedMorphism.of(gs.object, gs.object, -1, parts))


@lru_cache(maxsize=65536)
def mu(a: GradedObject, b: GradedObject) -> GradedMorphism:
    """Monoidal structure GA (x) GB -> G(A (x) B) with the Koszul sign."""
    ga, gb = g_struct(a), g_struct(b)
    tab = tensor_graded(a, b)
    src = tensor_graded(ga.object, gb.object)
    tgt = g_struct(tab.object)
    parts = {}
    for n, _ in src.object.components:
        acc = zero_morphism(src.object.at(n), tgt.object.at(n))
        for (i, j) in src.blocks_at(n):
            for s, t, sign in ((0, 0, 1), (0, 1, (-1 if i % 2 else 1)), (1, 0, 1)):
                asrc, bsrc = a.at(i - s), b.at(j - t)
                if asrc.is_zero or bsrc.is_zero or tensor(asrc, bsrc).object.is_zero:
                    continue
                bi, bj = i - s if s else i, j - t if t else j
                # slot (0,0) lands in slot 0 at block (i,j); the mixed slots
                # land in slot 1 at blocks (i, j-1) and (i-1, j) respectively
                if s == 0 and t == 0:
                    out = tgt.incl(n, 0) @ tab.inclusion(i, j)
                elif s == 0:
                    out = tgt.incl(n, 1) @ tab.inclusion(i, j - 1)
                else:
                    out = tgt.incl(n, 1) @ tab.inclusion(i - 1, j)
                pr = tensor_mor(ga.proj(i, s), gb.proj(j, t))
                acc = acc + (out @ pr @ src.projection(i, j)).scaled(sign)
        parts[n] = acc
    return GradedMorphism.of(src.object, tgt.object, 0, parts)


def eta() -> GradedMorphism:
    """Monoidal unit map 1 -> G1, inclusion into slot 0."""
    gs = g_struct(UNIT_GRADED)
    return GradedMorphism.of(UNIT_GRADED, gs.object, 0, {0: gs.incl(0, 0)})


@dataclass(frozen=True)
class DgComonad:
    """Bundle of the differential comonad's structure maps."""

    name: str = "differential"

    def on_object(self, a: GradedObject) -> GradedObject:
        return g_struct(a).object

    on_morphism = staticmethod(g_mor)
    counit = staticmethod(epsilon)
    comultiplication = staticmethod(delta)
    monoidal = staticmethod(mu)
    unit_map = staticmethod(eta)


def dg_comonad() -> DgComonad:
    return DgComonad()


def check_dg_comonad(objects: tuple[GradedObject, ...],
                     morphisms: tuple[GradedMorphism, ...] = ()) -> bool:
    """Comonad and lax-monoidal axioms on the supplied samples."""
    for a in objects:
        d = delta(a)
        if epsilon(g_struct(a).object) @ d != graded_identity(g_struct(a).object):
            return False
        if g_mor(epsilon(a)) @ d != graded_identity(g_struct(a).object):
            return False
        if delta(g_struct(a).object) @ d != g_mor(delta(a)) @ d:
            return False
    for f in morphisms:
        if epsilon(f.target) @ g_mor(f) != f @ epsilon(f.source):
            return False
        if delta(f.target) @ g_mor(f) != g_mor(g_mor(f)) @ delta(f.source):
            return False
    for a in objects:
        for b in objects:
            m = mu(a, b)
            tab = tensor_graded(a, b)
            # counit compatibility: eps_{a(x)b} o mu = eps_a (x) eps_b
            lhs = epsilon(tab.object) @ m
            rhs = tensor_graded_mor(epsilon(a), epsilon(b))
            if lhs != rhs:
                return False
    # naturality of mu on the given morphisms
    for f in morphisms:
        for g in morphisms:
            lhs = g_mor(tensor_graded_mor(f, g)) @ mu(f.source, g.source)
            rhs = mu(f.target, g.target) @ tensor_graded_mor(g_mor(f), g_mor(g))
            if lhs != rhs:
                return False
    # associativity of mu against the graded associator
    for a in objects[:3]:
        for b in objects[:3]:
            for c in objects[:3]:
                ga, gb, gc = (g_struct(x).object for x in (a, b, c))
                tab = tensor_graded(a, b).object
                tbc = tensor_graded(b, c).object
                lhs = (mu(tab, c)
                       @ tensor_graded_mor(mu(a, b), graded_identity(gc)))
                rhs = (mu(a, tbc)
                       @ tensor_graded_mor(graded_identity(ga), mu(b, c))
                       @ graded_associator(ga, gb, gc))
                if g_mor(graded_associator(a, b, c)) @ lhs != rhs:
                    return False
    return True


# -- coalgebras of the differential comonad = chain complexes -------------------

@lru_cache(maxsize=65536)
def complex_to_coalgebra(x: ChainComplex) -> GradedMorphism:
    """Structure map gamma = (id, d) : X -> GX of a chain complex."""
    gs = g_struct(x.graded)
    parts = {}
    for n, _ in x.graded.components:
        part = gs.incl(n, 0)
        dn = x.d_at(n)
        if not dn.is_zero:
            part = part + (gs.incl(n, 1) @ dn)
        parts[n] = part
    return GradedMorphism.of(x.graded, gs.object, 0, parts)


def check_dg_coalgebra(a: GradedObject, gamma: GradedMorphism) -> bool:
    """Counit and coassociativity laws for a candidate structure map."""
    gs = g_struct(a)
    if gamma.source != a or gamma.target != gs.object or gamma.degree != 0:
        return False
    if epsilon(a) @ gamma != graded_identity(a):
        return False
    return delta(a) @ gamma == g_mor(gamma) @ gamma


def coalgebra_to_complex(a: GradedObject, gamma: GradedMorphism) -> Optional[ChainComplex]:
    """Chain complex underlying a valid structure map, else None."""
    if not check_dg_coalgebra(a, gamma):
        return None
    gs = g_struct(a)
    parts = {}
    for n, _ in a.components:
        d = gs.proj(n, 1) @ gamma.at(n)
        if not d.is_zero:
            parts[n] = d
    return ChainComplex(a, GradedMorphism.of(a, a, -1, parts))


def complex_coalgebra_roundtrip(x: ChainComplex) -> bool:
    """X -> structure map -> X must be the identity round trip."""
    gamma = complex_to_coalgebra(x)
    back = coalgebra_to_complex(x.graded, gamma)
    return back == x


def cofree_roundtrip(a: GradedObject) -> bool:
    """The cofree complex's structure map must be the comultiplication."""
    rc = cofree_chain(a)
    return complex_to_coalgebra(rc) == delta(a) and complex_coalgebra_roundtrip(rc)


# -- tensor of chain complexes ---------------------------------------------------

@lru_cache(maxsize=65536)
def tensor_chain(x: ChainComplex, y: ChainComplex) -> ChainComplex:
    """Tensor complex with d = d_x (x) 1 + (-1)^i 1 (x) d_y on block (i, j)."""
    t = tensor_graded(x.graded, y.graded)
    parts = {}
    for n, _ in t.object.components:
        acc = zero_morphism(t.object.at(n), t.object.at(n - 1))
        for (i, j) in t.blocks_at(n):
            dx, dy = x.d_at(i), y.d_at(j)
            if not dx.is_zero and (i - 1, j) in t.blocks_at(n - 1):
                acc = acc + (t.inclusion(i - 1, j)
                             @ tensor_mor(dx, identity(y.graded.at(j)))
                             @ t.projection(i, j))
            if not dy.is_zero and (i, j - 1) in t.blocks_at(n - 1):
                acc = acc + (t.inclusion(i, j - 1)
                             @ tensor_mor(identity(x.graded.at(i)), dy)
                             @ t.projection(i, j)).scaled((-1 if i % 2 else 1))
        if not acc.is_zero:
            parts[n] = acc
    return ChainComplex(t.object, GradedMorphism.of(t.object, t.object, -1, parts))


# -- fusion ----------------------------------------------------------------------

@dataclass(frozen=True)
class FusionWitness:
    """Fusion map G(a) (x) v -> G(a (x) v) with its inverse when it exists."""

    left: GradedObject
    right: ChainComplex
    forward: GradedMorphism
    inverse: Optional[GradedMorphism]

    @property
    def is_hopf(self) -> bool:
        return self.inverse is not None


def fusion(a: GradedObject, v: ChainComplex) -> GradedMorphism:
    """Fusion map mu o (1 (x) gamma_v) : G(a) (x) v -> G(a (x) v)."""
    gs = g_struct(a)
    gamma = complex_to_coalgebra(v)
    return mu(a, v.graded) @ tensor_graded_mor(graded_identity(gs.object), gamma)


def hopf_witness(a: GradedObject, v: ChainComplex) -> FusionWitness:
    fwd = fusion(a, v)
    parts = {}
    degs = {d for d, _ in fwd.source.components} | {d for d, _ in fwd.target.components}
    inverse: Optional[GradedMorphism] = None
    ok = fwd.source.support == fwd.target.support
    if ok:
        for n in degs:
            inv = invert_morphism(fwd.at(n))
            if inv is None:
                ok = False
                break
            if not inv.is_zero:
                parts[n] = inv
    if ok:
        inverse = GradedMorphism.of(fwd.target, fwd.source, 0, parts)
    return FusionWitness(a, v, fwd, inverse)


def check_fusion_compat(vp: ChainComplex, v: ChainComplex) -> dict[str, bool]:
    """The three coherence squares tying fusion to the comonad and structures."""
    a = vp.graded
    fwd = fusion(a, v)
    tab = tensor_graded(a, v.graded)
    idv = graded_identity(v.graded)
    counit_ok = (epsilon(tab.object) @ fwd
                 == tensor_graded_mor(epsilon(a), idv))
    ga = g_struct(a).object
    comult_lhs = delta(tab.object) @ fwd
    comult_rhs = g_mor(fwd) @ fusion(ga, v) @ tensor_graded_mor(delta(a), idv)
    comult_ok = comult_lhs == comult_rhs
    structure_lhs = fwd @ tensor_graded_mor(complex_to_coalgebra(vp), idv)
    structure_rhs = complex_to_coalgebra(tensor_chain(vp, v))
    structure_ok = structure_lhs == structure_rhs
    return {"counit": counit_ok, "comultiplication": comult_ok,
            "structure": structure_ok}


# -- created duals -----------------------------------------------------------------

UNIT_CHAIN = ChainComplex(UNIT_GRADED, graded_zero(UNIT_GRADED, UNIT_GRADED, -1))


def _coeval_graded(k: GradedObject, v: GradedObject) -> GradedMorphism:
    """kappa : 1 -> k (x) v, componentwise coevaluation (free components)."""
    t = tensor_graded(k, v)
    tgt0 = t.object.at(0)
    acc = zero_morphism(UNIT, tgt0)
    for d, c in v.components:
        r = c.free_rank
        vec = IntMatrix.column([1 if i % (r + 1) == 0 else 0 for i in range(r * r)])
        block_src = tensor(k.at(-d), c).object
        acc = acc + (t.inclusion(-d, d) @ AbMorphism(UNIT, block_src, vec))
    return GradedMorphism.of(UNIT_GRADED, t.object, 0, {0: acc} if not acc.is_zero else {})


def _eval_graded(v: GradedObject, k: GradedObject) -> GradedMorphism:
    """ev : v (x) k -> 1, componentwise evaluation (free components)."""
    t = tensor_graded(v, k)
    src0 = t.object.at(0)
    acc = zero_morphism(src0, UNIT)
    for d, c in v.components:
        r = c.free_rank
        vec = IntMatrix(1, r * r, tuple(1 if i % (r + 1) == 0 else 0 for i in range(r * r)))
        block_tgt = tensor(c, k.at(-d)).object
        acc = acc + (AbMorphism(block_tgt, UNIT, vec) @ t.projection(d, -d))
    return GradedMorphism.of(t.object, UNIT_GRADED, 0, {0: acc} if not acc.is_zero else {})


@dataclass(frozen=True)
class CreatedDual:
    """Chain-level dual created over a graded-level dual."""

    primal: ChainComplex
    dual: ChainComplex
    kappa: GradedMorphism      # 1 -> dual (x) primal
    ev: GradedMorphism         # primal (x) dual -> 1
    structure: GradedMorphism  # created structure map on the dual carrier
    unique: bool               # no other differential makes kappa and ev chain maps


@lru_cache(maxsize=65536)
def _unitor_inverses(a: GradedObject) -> tuple[GradedMorphism, GradedMorphism]:
    """(inverse left unitor a -> 1(x)a, inverse right unitor a -> a(x)1)."""
    tl = tensor_graded(UNIT_GRADED, a)
    tr = tensor_graded(a, UNIT_GRADED)
    lam_inv = GradedMorphism.of(a, tl.object, 0,
                                {n: tl.inclusion(0, n) for n, _ in a.components})
    rho_inv = GradedMorphism.of(a, tr.object, 0,
                                {n: tr.inclusion(n, 0) for n, _ in a.components})
    return lam_inv, rho_inv


def create_dual_chain(x: ChainComplex) -> Optional[CreatedDual]:
    """Create the chain-level dual of x from its graded-level dual.

    Returns None when the underlying graded object has no dual.  Otherwise
    the structure map on the dual carrier is computed through the inverse
    fusion map, the resulting differential is extracted, and uniqueness of
    any differential making the (co)evaluation maps chain maps is certified
    by exact linear algebra.
    """
    k = dual_graded(x.graded)
    if k is None:
        return None
    v = x.graded
    kappa = _coeval_graded(k, v)
    ev = _eval_graded(v, k)
    w = hopf_witness(k, x)
    if w.inverse is None:
        return None
    gamma_unit = complex_to_coalgebra(UNIT_CHAIN)
    phi = w.inverse @ g_mor(kappa) @ gamma_unit          # 1 -> Gk (x) v
    gk = g_struct(k).object
    lam_inv, _ = _unitor_inverses(k)
    _, rho = graded_unitors(gk)
    alpha = graded_associator(gk, v, k)
    structure = (rho
                 @ tensor_graded_mor(graded_identity(gk), ev)
                 @ alpha
                 @ tensor_graded_mor(phi, graded_identity(k))
                 @ lam_inv)
    gks = g_struct(k)
    d_parts = {}
    for n, _ in k.components:
        d = gks.proj(n, 1) @ structure.at(n)
        if not d.is_zero:
            d_parts[n] = d
    dual = ChainComplex(k, GradedMorphism.of(k, k, -1, d_parts))
    unique = _differential_is_unique(x, k, kappa, ev, dual)
    return CreatedDual(x, dual, kappa, ev, structure, unique)


def _differential_is_unique(x: ChainComplex, k: GradedObject, kappa: GradedMorphism,
                            ev: GradedMorphism, dual: ChainComplex) -> bool:
    """Is dual's differential the only one making kappa and ev chain maps?

    The chain-map conditions are linear in the unknown differential entries
    (everything is free), so solvability and uniqueness reduce to one exact
    integer system with a trivial kernel.
    """
    unknowns = []          # (n, rows, cols) for D_n : k_n -> k_{n-1}
    offset = {}
    total = 0
    for n, c in k.components:
        tgt = k.at(n - 1)
        if not tgt.is_zero:
            offset[n] = total
            unknowns.append((n, tgt.ngens, c.ngens))
            total += tgt.ngens * c.ngens
    if total == 0:
        return dual.differential.is_zero

    rows: list[list[int]] = []
    rhs: list[int] = []

    def emit(coeffs: dict[int, int], value: int):
        row = [0] * total
        for idx, cv in coeffs.items():
            row[idx] = cv
        rows.append(row)
        rhs.append(value)

    def d_entry_index(n: int, p: int, q: int) -> int:
        return offset[n] + p * k.at(n).ngens + q

    # condition 1: the tensor differential of (k, D) (x) x kills kappa_0.
    # condition 2: ev_0 kills the tensor differential of x (x) (k, D).
    t_kv = tensor_graded(k, x.graded)
    t_vk = tensor_graded(x.graded, k)
    kap0 = kappa.at(0)
    ev0 = ev.at(0)

    # d_T(kappa) component landing in block (i-1, j) of degree -1:
    #   (D_i (x) 1) o proj_(i,j) o kappa, linear in D_i
    # component landing in block (i, j-1): (-1)^i (1 (x) d_j), constant.
    for (bi, bj) in t_kv.blocks_at(-1):
        tgt_block = tensor(k.at(bi), x.graded.at(bj)).object
        const = zero_morphism(UNIT, tgt_block).matrix
        i, j = bi, bj + 1
        if (i, j) in t_kv.blocks_at(0):
            dxj = x.d_at(j)
            if not dxj.is_zero:
                piece = (tensor_mor(identity(k.at(i)), dxj)
                         @ t_kv.projection(i, j) @ kap0).scaled((-1 if i % 2 else 1))
                const = const + piece.matrix
        # linear part from D at source block (bi+1, bj)
        i2, j2 = bi + 1, bj
        lin_src = None
        if (i2, j2) in t_kv.blocks_at(0) and i2 in offset and k.at(i2 - 1) == k.at(bi):
            lin_src = (t_kv.projection(i2, j2) @ kap0).matrix  # k_{i2} (x) x_{j2} coords
        rk, rx = k.at(bi).ngens, x.graded.at(bj).ngens
        for p in range(rk):
            for q in range(rx):
                out_row = p * rx + q
                coeffs: dict[int, int] = {}
                if lin_src is not None:
                    # (D (x) 1) entry ((p,q),(u,w)) = D[p,u] * delta_{q,w}
                    for u in range(k.at(i2).ngens):
                        cv = lin_src[u * rx + q, 0]
                        if cv:
                            coeffs[d_entry_index(i2, p, u)] = cv
                emit(coeffs, -const[out_row, 0])

    for (bi, bj) in t_vk.blocks_at(1):  # blocks of degree 1 in x (x) k
        src_block = tensor(x.graded.at(bi), k.at(bj)).object
        # ev_0 o [ (d_x (x) 1) into (bi-1, bj) + (-1)^bi (1 (x) D) into (bi, bj-1) ]
        const = zero_morphism(src_block, UNIT).matrix
        dxi = x.d_at(bi)
        if not dxi.is_zero and (bi - 1, bj) in t_vk.blocks_at(0):
            piece = (ev0 @ t_vk.inclusion(bi - 1, bj)
                     @ tensor_mor(dxi, identity(k.at(bj))))
            const = const + piece.matrix
        lin_out = None
        if (bi, bj - 1) in t_vk.blocks_at(0) and bj in offset:
            lin_out = (ev0 @ t_vk.inclusion(bi, bj - 1)).matrix
        rx, rk = x.graded.at(bi).ngens, k.at(bj).ngens
        sign = -1 if bi % 2 else 1
        for col in range(rx * rk):
            q0, w0 = divmod(col, rk)
            coeffs = {}
            if lin_out is not None:
                rk1 = k.at(bj - 1).ngens
                for u in range(rk1):
                    cv = lin_out[0, q0 * rk1 + u]
                    if cv:
                        coeffs[d_entry_index(bj, u, w0)] = sign * cv
            emit(coeffs, -const[0, col])

    if not rows:
        return dual.differential.is_zero
    sol = solve_diophantine(IntMatrix.from_rows(rows, cols=total), IntMatrix.column(rhs))
    if sol is None:
        return False
    _, kernel = sol
    # the computed differential must itself satisfy the system
    vec = [0] * total
    for n, r, c in unknowns:
        dn = dual.d_at(n)
        for p in range(r):
            for q in range(c):
                vec[d_entry_index(n, p, q)] = dn.matrix[p, q]
    for row, val in zip(rows, rhs):
        if sum(rv * vv for rv, vv in zip(row, vec)) != val:
            return False
    return not kernel


def check_created_dual(cd: CreatedDual) -> dict[str, bool]:
    """Full audit of a created dual."""
    x, dual = cd.primal, cd.dual
    k, v = dual.graded, x.graded
    out = {}
    out["underlying_matches"] = dual_graded(v) == k
    out["structure_valid"] = check_dg_coalgebra(k, cd.structure)
    out["structure_reconstructs"] = coalgebra_to_complex(k, cd.structure) == dual
    t_kv = tensor_chain(dual, x)
    t_vk = tensor_chain(x, dual)
    out["kappa_chain_map"] = (t_kv.differential @ cd.kappa).is_zero
    out["ev_chain_map"] = (cd.ev @ t_vk.differential).is_zero
    # snake identities at the graded level
    idv, idk = graded_identity(v), graded_identity(k)
    lam_v, rho_v = graded_unitors(v)
    lam_k, _ = graded_unitors(k)
    lam_inv_v, rho_inv_v = _unitor_inverses(v)
    lam_inv_k, rho_inv_k = _unitor_inverses(k)
    from .graded import graded_associator as gassoc
    t_v_kv = tensor_graded(v, tensor_graded(k, v).object)
    snake_v = (tensor_graded_mor(cd.ev, idv)
               @ _graded_associator_inv(v, k, v)
               @ tensor_graded_mor(idv, cd.kappa)
               @ rho_inv_v)
    out["snake_primal"] = lam_v @ snake_v == graded_identity(v)
    snake_k = (tensor_graded_mor(idk, cd.ev)
               @ gassoc(k, v, k)
               @ tensor_graded_mor(cd.kappa, idk)
               @ lam_inv_k)
    _, rho_k = graded_unitors(k)
    out["snake_dual"] = rho_k @ snake_k == graded_identity(k)
    out["unique"] = cd.unique
    return out


@lru_cache(maxsize=65536)
def _graded_associator_inv(a: GradedObject, b: GradedObject, c: GradedObject) -> GradedMorphism:
    """Inverse graded associator (a (x) (b (x) c)) -> ((a (x) b) (x) c)."""
    fwd = graded_associator(a, b, c)
    parts = {}
    for n, _ in fwd.target.components:
        inv = invert_morphism(fwd.at(n))
        if inv is None:
            raise RuntimeError("associator component failed to invert")
        if not inv.is_zero:
            parts[n] = inv
    return GradedMorphism.of(fwd.target, fwd.source, 0, parts)


def check_creation_corollary(x: ChainComplex) -> dict[str, object]:
    """Chain-level dual exists exactly when the graded-level dual does.

    Returns a verdict dict; ``consistent`` is the headline boolean.
    """
    g_dual = dual_graded(x.graded)
    cd = create_dual_chain(x)
    result: dict[str, object] = {
        "graded_dual_exists": g_dual is not None,
        "chain_dual_exists": cd is not None,
    }
    result["consistent"] = (g_dual is None) == (cd is None)
    if cd is not None:
        checks = check_created_dual(cd)
        result["checks"] = checks
        result["consistent"] = bool(result["consistent"]) and all(checks.values())
    return result
