"""Finitely generated abelian groups in invariant-factor form.

Objects are skeletal: an object *is* its canonical data (free rank plus a
divisibility chain of torsion orders), with generator order torsion-first.
Morphisms are integer matrices reduced modulo target relations, so equality
of morphisms is equality of reduced matrices.  Tensor products and direct
sums return explicit change-of-basis data identifying the construction with
its canonical form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional

from .intmat import IntMatrix, _snf_full, solve_diophantine


@dataclass(frozen=True)
class AbObject:
    """A finitely generated abelian group Z^rank (+) Z/d1 (+) ... (+) Z/dk."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative rank")
        for i, d in enumerate(self.torsion):
            if d <= 1:
                raise ValueError("torsion orders must exceed 1")
            if i > 0 and d % self.torsion[i - 1] != 0:
                raise ValueError("torsion must form a divisibility chain")

    @property
    def orders(self) -> tuple[int, ...]:
        """Generator orders, torsion first; 0 marks an infinite-order generator."""
        return self.torsion + (0,) * self.free_rank

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_zero(self) -> bool:
        return self.ngens == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}

    @staticmethod
    def from_json(obj: dict) -> "AbObject":
        return AbObject(int(obj.get("rank", 0)), tuple(int(t) for t in obj.get("torsion", ())))

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts = ["Z"] + parts
        elif self.free_rank > 1:
            parts = [f"Z^{self.free_rank}"] + parts
        return " + ".join(parts) if parts else "0"


ZERO = AbObject(0)
UNIT = AbObject(1)


def _canonical_orders(orders: tuple[int, ...]) -> bool:
    """True iff an order list is already torsion-chain-then-zeros."""
    seen_zero = False
    prev = None
    for d in orders:
        if d == 0:
            seen_zero = True
        else:
            if seen_zero or d <= 1 or (prev is not None and d % prev != 0):
                return False
            prev = d
    return True


@dataclass(frozen=True)
class AbMorphism:
    """Group homomorphism given by a matrix over canonical generators."""

    source: AbObject
    target: AbObject
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.target.ngens or self.matrix.cols != self.source.ngens:
            raise ValueError("matrix shape does not match source/target generators")
        tgt = self.target.orders
        ent = list(self.matrix.entries)
        n = self.matrix.cols
        changed = False
        for i, e in enumerate(tgt):
            if e:
                for j in range(n):
                    v = ent[i * n + j] % e
                    if v != ent[i * n + j]:
                        ent[i * n + j] = v
                        changed = True
        if changed:
            object.__setattr__(self, "matrix", IntMatrix(self.matrix.rows, n, tuple(ent)))
        # respect source relations: order-d generators must land in d-torsion
        for j, d in enumerate(self.source.orders):
            if d == 0:
                continue
            for i, e in enumerate(tgt):
                v = d * self.matrix[i, j]
                if (e == 0 and v != 0) or (e != 0 and v % e != 0):
                    raise ValueError(f"matrix does not respect torsion at generator {j}")

    # -- basic algebra -----------------------------------------------------

    def __matmul__(self, other: "AbMorphism") -> "AbMorphism":
        """Composition self o other."""
        if other.target != self.source:
            raise ValueError("object mismatch in composition")
        return AbMorphism(other.source, self.target, self.matrix @ other.matrix)

    def __add__(self, other: "AbMorphism") -> "AbMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("object mismatch in sum")
        return AbMorphism(self.source, self.target, self.matrix + other.matrix)

    def __neg__(self) -> "AbMorphism":
        return AbMorphism(self.source, self.target, -self.matrix)

    def __sub__(self, other: "AbMorphism") -> "AbMorphism":
        return self + (-other)

    def scaled(self, c: int) -> "AbMorphism":
        return AbMorphism(self.source, self.target, self.matrix.scaled(c))

    @property
    def is_zero(self) -> bool:
        return self.matrix.is_zero

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(),
                "matrix": self.matrix.to_json()}

    @staticmethod
    def from_json(obj: dict) -> "AbMorphism":
        return AbMorphism(AbObject.from_json(obj["source"]), AbObject.from_json(obj["target"]),
                          IntMatrix.from_json(obj["matrix"]))


def identity(a: AbObject) -> AbMorphism:
    return AbMorphism(a, a, IntMatrix.identity(a.ngens))


def zero_morphism(a: AbObject, b: AbObject) -> AbMorphism:
    return AbMorphism(a, b, IntMatrix.zeros(b.ngens, a.ngens))


def compose(g: AbMorphism, f: AbMorphism) -> AbMorphism:
    return g @ f


# -- presentations ----------------------------------------------------------

def normalize_presentation(relations: IntMatrix) -> tuple[AbObject, IntMatrix, IntMatrix]:
    """Canonical form of coker(relations : Z^cols -> Z^rows).

    Returns (object, to_canonical, from_canonical) where to_canonical maps
    presentation coordinates onto canonical generators and from_canonical is
    a section; to_canonical @ from_canonical is the exact identity.
    """
    f = _snf_full(relations)
    r = relations.rows
    rank = len(f.invariants)
    orders = [f.d[i, i] if i < rank else 0 for i in range(r)]
    keep = [i for i in range(r) if orders[i] != 1]
    obj = AbObject(sum(1 for i in keep if orders[i] == 0),
                   tuple(orders[i] for i in keep if orders[i] > 1))
    to_can = f.u.submatrix(keep, range(r))
    from_can = f.u_inv.submatrix(range(r), keep)
    return obj, to_can, from_can


def _reduce_rows(m: IntMatrix, orders: tuple[int, ...]) -> IntMatrix:
    ent = list(m.entries)
    for i, e in enumerate(orders):
        if e:
            for j in range(m.cols):
                ent[i * m.cols + j] %= e
    return IntMatrix(m.rows, m.cols, tuple(ent))


# -- direct sums -------------------------------------------------------------

@dataclass(frozen=True)
class DirectSum:
    object: AbObject
    summands: tuple[AbObject, ...]
    inclusions: tuple[AbMorphism, ...]
    projections: tuple[AbMorphism, ...]


@lru_cache(maxsize=65536)
def direct_sum(*summands: AbObject) -> DirectSum:
    """Biproduct with the canonical total object and inclusion/projection data."""
    concat = tuple(d for s in summands for d in s.orders)
    offsets = []
    off = 0
    for s in summands:
        offsets.append(off)
        off += s.ngens
    n = off
    if _canonical_orders(concat):
        total = AbObject(sum(1 for d in concat if d == 0), tuple(d for d in concat if d > 1))
        to_can = IntMatrix.identity(n)
        from_can = to_can
    else:
        total, to_can, from_can = normalize_presentation(IntMatrix.diagonal(concat))
    incls = []
    projs = []
    for s, o in zip(summands, offsets):
        idx = range(o, o + s.ngens)
        incls.append(AbMorphism(s, total, to_can.submatrix(range(total.ngens), idx)))
        projs.append(AbMorphism(total, s, from_can.submatrix(idx, range(total.ngens))))
    return DirectSum(total, tuple(summands), tuple(incls), tuple(projs))


# -- tensor products ----------------------------------------------------------

@dataclass(frozen=True)
class Tensor:
    """a (x) b with grid generators (i,j) ordered i-major."""

    object: AbObject
    left: AbObject
    right: AbObject
    to_canonical: IntMatrix    # canonical gens x grid
    from_canonical: IntMatrix  # grid x canonical gens


@lru_cache(maxsize=65536)
def tensor(a: AbObject, b: AbObject) -> Tensor:
    da, db = a.orders, b.orders
    grid = tuple(math.gcd(x, y) for x in da for y in db)
    if _canonical_orders(grid):
        obj = AbObject(sum(1 for d in grid if d == 0), tuple(d for d in grid if d > 1))
        eye = IntMatrix.identity(len(grid))
        return Tensor(obj, a, b, eye, eye)
    obj, to_can, from_can = normalize_presentation(IntMatrix.diagonal(grid))
    return Tensor(obj, a, b, to_can, from_can)


def tensor_mor(f: AbMorphism, g: AbMorphism) -> AbMorphism:
    src = tensor(f.source, g.source)
    tgt = tensor(f.target, g.target)
    m = tgt.to_canonical @ f.matrix.kron(g.matrix) @ src.from_canonical
    return AbMorphism(src.object, tgt.object, m)


@lru_cache(maxsize=65536)
def associator(a: AbObject, b: AbObject, c: AbObject) -> AbMorphism:
    """Canonical iso ((a (x) b) (x) c) -> (a (x) (b (x) c))."""
    tab, tbc = tensor(a, b), tensor(b, c)
    t_abc = tensor(tab.object, c)
    t_a_bc = tensor(a, tbc.object)
    m = (t_a_bc.to_canonical
         @ IntMatrix.identity(a.ngens).kron(tbc.to_canonical)
         @ tab.from_canonical.kron(IntMatrix.identity(c.ngens))
         @ t_abc.from_canonical)
    return AbMorphism(t_abc.object, t_a_bc.object, m)


@lru_cache(maxsize=65536)
def associator_inv(a: AbObject, b: AbObject, c: AbObject) -> AbMorphism:
    tab, tbc = tensor(a, b), tensor(b, c)
    t_abc = tensor(tab.object, c)
    t_a_bc = tensor(a, tbc.object)
    m = (t_abc.to_canonical
         @ tab.to_canonical.kron(IntMatrix.identity(c.ngens))
         @ IntMatrix.identity(a.ngens).kron(tbc.from_canonical)
         @ t_a_bc.from_canonical)
    return AbMorphism(t_a_bc.object, t_abc.object, m)


@lru_cache(maxsize=65536)
def symmetry(a: AbObject, b: AbObject) -> AbMorphism:
    """Canonical swap (a (x) b) -> (b (x) a)."""
    tab, tba = tensor(a, b), tensor(b, a)
    na, nb = a.ngens, b.ngens
    perm = IntMatrix(na * nb, na * nb,
                     tuple(1 if (i * nb + j) == col else 0
                           for j in range(nb) for i in range(na)
                           for col in range(na * nb)))
    return AbMorphism(tab.object, tba.object, tba.to_canonical @ perm @ tab.from_canonical)


# -- hom groups ---------------------------------------------------------------

def _cyclic_hom(d: int, e: int) -> tuple[int, int]:
    """(order of Hom(Z/d, Z/e), generator multiplier), with 0 meaning Z."""
    if d == 0:
        return (e, 1) if e else (0, 1)
    if e == 0:
        return 1, 0  # trivial
    g = math.gcd(d, e)
    return g, e // g


def hom_group(a: AbObject, b: AbObject) -> tuple[AbObject, tuple[AbMorphism, ...]]:
    """The group of morphisms a -> b with an explicit generating family."""
    gens = []
    orders = []
    nb = b.ngens
    for j, d in enumerate(a.orders):
        for i, e in enumerate(b.orders):
            h, mult = _cyclic_hom(d, e)
            if h == 1:
                continue
            orders.append(h)
            m = [0] * (nb * a.ngens)
            m[i * a.ngens + j] = mult
            gens.append(AbMorphism(a, b, IntMatrix(nb, a.ngens, tuple(m))))
    if _canonical_orders(tuple(orders)):
        obj = AbObject(sum(1 for d in orders if d == 0), tuple(d for d in orders if d > 1))
    else:
        obj, _, _ = normalize_presentation(IntMatrix.diagonal(tuple(orders)))
    return obj, tuple(gens)


def hom_is_finite(a: AbObject, b: AbObject) -> bool:
    return not (a.free_rank > 0 and b.free_rank > 0)


def enumerate_homs(a: AbObject, b: AbObject) -> Iterator[AbMorphism]:
    """All morphisms a -> b; requires the hom group to be finite."""
    if not hom_is_finite(a, b):
        raise ValueError("hom group is infinite")
    grid = []
    for j, d in enumerate(a.orders):
        for i, e in enumerate(b.orders):
            h, mult = _cyclic_hom(d, e)
            if h != 1:
                grid.append((i, j, h, mult))
    nb, na = b.ngens, a.ngens
    for coeffs in product(*(range(h) for _, _, h, _ in grid)):
        m = [0] * (nb * na)
        for (i, j, _, mult), c in zip(grid, coeffs):
            m[i * na + j] = c * mult
        yield AbMorphism(a, b, IntMatrix(nb, na, tuple(m)))


# -- isomorphism testing ------------------------------------------------------

def invert_morphism(f: AbMorphism) -> Optional[AbMorphism]:
    """Exact two-sided inverse of f, or None if f is not an isomorphism."""
    if f.source != f.target and (f.source.free_rank != f.target.free_rank
                                 or f.source.torsion != f.target.torsion):
        return None
    a, b = f.source, f.target
    n = a.ngens
    if n == 0:
        return zero_morphism(b, a)
    tor = [e for e in a.orders if e]
    relcols = IntMatrix(n, len(tor),
                        tuple(a.orders[i] if (a.orders[i] and j == sum(1 for k in range(i) if a.orders[k]))
                              else 0 for i in range(n) for j in range(len(tor))))
    sys = f.matrix.hstack(relcols) if tor else f.matrix
    cols = []
    for k in range(n):
        rhs = IntMatrix.column([1 if i == k else 0 for i in range(n)])
        sol = solve_diophantine(sys, rhs)
        if sol is None:
            return None
        cols.append([sol[0][i, 0] for i in range(n)])
    m = IntMatrix(n, n, tuple(cols[k][i] for i in range(n) for k in range(n)))
    try:
        g = AbMorphism(b, a, m)
    except ValueError:
        return _invert_full(f)
    if g @ f == identity(a) and f @ g == identity(b):
        return g
    return _invert_full(f)


def _invert_full(f: AbMorphism) -> Optional[AbMorphism]:
    """Inverse search as one Diophantine system over all matrix entries."""
    a, b = f.source, f.target
    n = a.ngens
    unknown_g = n * n
    rows = []
    rhs = []
    slack = []  # (row index, modulus) -> new slack column

    def emit(coeffs: dict[int, int], modulus: int, value: int):
        rows.append(coeffs)
        rhs.append(value)
        if modulus:
            slack.append((len(rows) - 1, modulus))

    # f @ g == id mod target orders
    for i in range(n):
        for k in range(n):
            coeffs = {j * n + k: f.matrix[i, j] for j in range(n) if f.matrix[i, j]}
            emit(coeffs, b.orders[i], 1 if i == k else 0)
    # g @ f == id mod source orders
    for j in range(n):
        for l in range(n):
            coeffs = {}
            for k in range(n):
                if f.matrix[k, l]:
                    coeffs[j * n + k] = coeffs.get(j * n + k, 0) + f.matrix[k, l]
            emit(coeffs, a.orders[j], 1 if j == l else 0)
    # well-typedness of g
    for k in range(n):
        e = b.orders[k]
        if e == 0:
            continue
        for j in range(n):
            emit({j * n + k: e}, a.orders[j], 0)
    ncols = unknown_g + len(slack)
    flat = []
    slack_of_row = {r: unknown_g + i for i, (r, _) in enumerate(slack)}
    mod_of_row = {r: m for (r, m) in slack}
    for r, coeffs in enumerate(rows):
        row = [0] * ncols
        for c, v in coeffs.items():
            row[c] = v
        if r in slack_of_row:
            row[slack_of_row[r]] = mod_of_row[r]
        flat.append(row)
    sol = solve_diophantine(IntMatrix.from_rows(flat, cols=ncols), IntMatrix.column(rhs))
    if sol is None:
        return None
    vals = [sol[0][i, 0] for i in range(unknown_g)]
    g = AbMorphism(b, a, IntMatrix(n, n, tuple(vals[j * n + k] for j in range(n) for k in range(n))))
    if g @ f == identity(a) and f @ g == identity(b):
        return g
    return None


# -- duals ---------------------------------------------------------------------

@dataclass(frozen=True)
class DualityWitness:
    dual_object: AbObject
    ev: AbMorphism    # dual (x) object -> unit
    coev: AbMorphism  # unit -> object (x) dual
    primal: AbObject = field(default=ZERO)


def try_dual(a: AbObject) -> Optional[DualityWitness]:
    """Dual object with evaluation/coevaluation, or None when a has torsion."""
    if a.torsion:
        return None
    r = a.free_rank
    dual = AbObject(r)
    t_da = tensor(dual, a)
    t_ad = tensor(a, dual)
    ev_grid = IntMatrix(1, r * r, tuple(1 if i == j else 0 for i in range(r) for j in range(r)))
    coev_grid = IntMatrix(r * r, 1, tuple(1 if i == j else 0 for i in range(r) for j in range(r)))
    ev = AbMorphism(t_da.object, UNIT, ev_grid @ t_da.from_canonical)
    coev = AbMorphism(UNIT, t_ad.object, t_ad.to_canonical @ coev_grid)
    return DualityWitness(dual, ev, coev, primal=a)


def check_triangle_identities(w: DualityWitness) -> bool:
    """Both snake composites must equal identities exactly."""
    a, c = w.primal, w.dual_object
    if w.ev.source != tensor(c, a).object or w.ev.target != UNIT:
        raise ValueError("ev has the wrong shape")
    if w.coev.target != tensor(a, c).object or w.coev.source != UNIT:
        raise ValueError("coev has the wrong shape")
    ida, idc = identity(a), identity(c)
    # a = 1(x)a -> (a(x)c)(x)a -> a(x)(c(x)a) -> a(x)1 = a
    left = tensor_mor(ida, w.ev) @ associator(a, c, a) @ tensor_mor(w.coev, ida)
    # c = c(x)1 -> c(x)(a(x)c) -> (c(x)a)(x)c -> 1(x)c = c
    right = tensor_mor(w.ev, idc) @ associator_inv(c, a, c) @ tensor_mor(idc, w.coev)
    return left == ida and right == idc


def _find_ev_for_coev(a: AbObject, c: AbObject, coev: AbMorphism) -> Optional[AbMorphism]:
    """Evaluation map making both snakes pass for a fixed coevaluation, if any.

    Both snake composites are linear in the entries of ev, so the constraint
    set is one Diophantine system (with slack unknowns for torsion targets).
    """
    t_ca = tensor(c, a)
    ne = t_ca.object.ngens
    na, nc = a.ngens, c.ngens
    ida, idc = identity(a), identity(c)
    asso_m = associator(a, c, a).matrix
    assoi_m = associator_inv(c, a, c).matrix
    right1 = asso_m @ tensor_mor(coev, ida).matrix
    right2 = tensor_mor(idc, coev).matrix

    def snakes(e_row: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
        m1 = IntMatrix.identity(na).kron(e_row) @ tensor(a, t_ca.object).from_canonical
        m2 = e_row.kron(IntMatrix.identity(nc)) @ tensor(t_ca.object, c).from_canonical
        return m1 @ right1, m2 @ assoi_m @ right2

    basis = [snakes(IntMatrix(1, ne, tuple(1 if i == k else 0 for i in range(ne))))
             for k in range(ne)]
    zero1, zero2 = IntMatrix.zeros(na, na), IntMatrix.zeros(nc, nc)
    rows, rhs, mods = [], [], []
    for which, ident, orders, zshape in ((0, identity(a).matrix, a.orders, zero1),
                                         (1, identity(c).matrix, c.orders, zero2)):
        for p in range(zshape.rows):
            for q in range(zshape.cols):
                rows.append([basis[k][which][p, q] for k in range(ne)])
                rhs.append(ident[p, q])
                mods.append(orders[p])
    for k, d in enumerate(t_ca.object.orders):
        if d:
            rows.append([d if i == k else 0 for i in range(ne)])
            rhs.append(0)
            mods.append(0)
    nslack = sum(1 for m in mods if m)
    ncols = ne + nslack
    flat = []
    si = ne
    for row, m in zip(rows, mods):
        full = row + [0] * nslack
        if m:
            full[si] = m
            si += 1
        flat.append(full)
    if not flat:
        return zero_morphism(t_ca.object, UNIT) if ne == 0 else None
    sol = solve_diophantine(IntMatrix.from_rows(flat, cols=ncols), IntMatrix.column(rhs))
    if sol is None:
        return None
    try:
        ev = AbMorphism(t_ca.object, UNIT,
                        IntMatrix(1, ne, tuple(sol[0][i, 0] for i in range(ne))))
    except ValueError:
        return None
    w = DualityWitness(c, ev, coev, primal=a)
    return ev if check_triangle_identities(w) else None


def dual_refutation(a: AbObject, candidate: AbObject, bound: int = 2) -> bool:
    """Audit: True when no (ev, coev) for the candidate dual passes the snakes.

    Enumerates coevaluation maps with entries in [-bound, bound]; for each,
    the snake constraints are linear in ev and solved exactly.  The bound
    only limits coev, so a False answer is decisive; True certifies absence
    within the searched box.
    """
    c = candidate
    t_ac = tensor(a, c)
    n = t_ac.object.ngens
    for vals in product(range(-bound, bound + 1), repeat=n):
        try:
            coev = AbMorphism(UNIT, t_ac.object, IntMatrix.column(vals))
        except ValueError:
            continue
        if _find_ev_for_coev(a, c, coev) is not None:
            return False
    return True
