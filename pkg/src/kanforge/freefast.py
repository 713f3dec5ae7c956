"""Batched verifier for fusion diagrams over free chain complexes.

The exhaustive fusion suite checks hundreds of thousands of (graded partner,
free complex) pairs.  On free objects every canonical form is the identity,
so each diagram is a concrete integer block-matrix identity; this module
mirrors the exact engine's block layouts in numpy and verifies whole
batches of same-shaped complexes with a few matmuls.

Fidelity to the exact engine is not assumed: tests cross-validate the
matrices built here against the general implementation on random samples.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

Ranks = dict[int, int]  # degree -> free rank (zero ranks omitted)


def _clean(r: Ranks) -> Ranks:
    return {d: n for d, n in sorted(r.items()) if n > 0}


def g_ranks(a: Ranks) -> Ranks:
    """Ranks of G(a): (GA)_n = A_n (+) A_{n-1}."""
    out: Ranks = {}
    for d, n in a.items():
        out[d] = out.get(d, 0) + n
        out[d + 1] = out.get(d + 1, 0) + n
    return _clean(out)


def tensor_ranks(a: Ranks, b: Ranks) -> Ranks:
    out: Ranks = {}
    for i, p in a.items():
        for j, q in b.items():
            out[i + j] = out.get(i + j, 0) + p * q
    return _clean(out)


def tensor_blocks(a: Ranks, b: Ranks, n: int) -> list[tuple[int, int, int]]:
    """(i, j, offset) for blocks a_i (x) b_j of degree n, ascending i."""
    out = []
    off = 0
    for i in sorted(a):
        j = n - i
        if j in b:
            out.append((i, j, off))
            off += a[i] * b[j]
    return out


def g_offsets(a: Ranks, n: int) -> tuple[int, int]:
    """(offset of slot 0, offset of slot 1) inside (GA)_n."""
    return 0, a.get(n, 0)


@dataclass
class FMap:
    """Batched degree-homogeneous map between free graded objects.

    ``parts[d]`` has shape (N, tgt[d + degree], src[d]); missing degrees are
    zero maps.  All arrays are int64 and exact.
    """

    src: Ranks
    tgt: Ranks
    degree: int
    parts: dict[int, np.ndarray]
    n_batch: int

    def at(self, d: int) -> np.ndarray:
        if d in self.parts:
            return self.parts[d]
        return np.zeros((self.n_batch, self.tgt.get(d + self.degree, 0),
                         self.src.get(d, 0)), dtype=np.int64)

    def __matmul__(self, other: "FMap") -> "FMap":
        assert other.tgt == self.src
        parts = {}
        for d in other.src:
            mid = d + other.degree
            out = d + other.degree + self.degree
            if mid in self.src and out in self.tgt and mid in other.tgt:
                parts[d] = np.matmul(self.at(mid), other.at(d))
        return FMap(other.src, self.tgt, self.degree + other.degree, parts, self.n_batch)

    def __eq__(self, other) -> bool:  # full equality across the batch
        return bool(np.all(self.eq_mask(other)))

    def eq_mask(self, other: "FMap") -> np.ndarray:
        """Per-instance equality as a boolean (N,) array."""
        assert (self.src, self.tgt, self.degree) == (other.src, other.tgt, other.degree)
        ok = np.ones(self.n_batch, dtype=bool)
        for d in set(self.parts) | set(other.parts):
            if self.src.get(d, 0) and self.tgt.get(d + self.degree, 0):
                ok &= np.all(self.at(d) == other.at(d), axis=(1, 2))
        return ok


def f_identity(a: Ranks, n_batch: int) -> FMap:
    parts = {d: np.broadcast_to(np.eye(r, dtype=np.int64), (n_batch, r, r)).copy()
             for d, r in a.items()}
    return FMap(a, a, 0, parts, n_batch)


def _kron_batched(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Batched Kronecker product of (N, p, q) and (N, r, s) -> (N, pr, qs)."""
    n, p, q = x.shape
    _, r, s = y.shape
    out = np.einsum("npq,nrs->nprqs", x, y)
    return out.reshape(n, p * r, q * s)


def f_tensor(f: FMap, g: FMap) -> FMap:
    """Degreewise tensor of two degree-0 batched maps."""
    assert f.degree == 0 and g.degree == 0
    src = tensor_ranks(f.src, g.src)
    tgt = tensor_ranks(f.tgt, g.tgt)
    parts = {}
    for n in src:
        if n not in tgt:
            continue
        sblocks = tensor_blocks(f.src, g.src, n)
        tblocks = {(i, j): off for i, j, off in tensor_blocks(f.tgt, g.tgt, n)}
        out = np.zeros((f.n_batch, tgt[n], src[n]), dtype=np.int64)
        for i, j, soff in sblocks:
            if (i, j) not in tblocks:
                continue
            toff = tblocks[(i, j)]
            blk = _kron_batched(f.at(i), g.at(j))
            out[:, toff:toff + blk.shape[1], soff:soff + blk.shape[2]] = blk
        parts[n] = out
    return FMap(src, tgt, 0, parts, f.n_batch)


def f_g(f: FMap) -> FMap:
    """G on a degree 0 map: diagonal action on both slots."""
    assert f.degree == 0
    gs, gt = g_ranks(f.src), g_ranks(f.tgt)
    parts = {}
    for n in gs:
        if n not in gt:
            continue
        out = np.zeros((f.n_batch, gt[n], gs[n]), dtype=np.int64)
        so0, so1 = g_offsets(f.src, n)
        to0, to1 = g_offsets(f.tgt, n)
        if f.src.get(n, 0) and f.tgt.get(n, 0):
            out[:, to0:to0 + f.tgt[n], so0:so0 + f.src[n]] = f.at(n)
        if f.src.get(n - 1, 0) and f.tgt.get(n - 1, 0):
            out[:, to1:to1 + f.tgt[n - 1], so1:so1 + f.src[n - 1]] = f.at(n - 1)
        parts[n] = out
    return FMap(gs, gt, 0, parts, f.n_batch)


def f_eps(a: Ranks, n_batch: int) -> FMap:
    ga = g_ranks(a)
    parts = {}
    for n, r in a.items():
        out = np.zeros((n_batch, r, ga[n]), dtype=np.int64)
        out[:, :, :r] = np.eye(r, dtype=np.int64)
        parts[n] = out
    return FMap(ga, a, 0, parts, n_batch)


def f_delta(a: Ranks, n_batch: int) -> FMap:
    ga = g_ranks(a)
    gga = g_ranks(ga)
    parts = {}
    for n, r in ga.items():
        out = np.zeros((n_batch, gga[n], r), dtype=np.int64)
        out[:, :r, :] = np.eye(r, dtype=np.int64)
        # slot 1 of GGA at n is (GA)_{n-1}; (x, y) |-> (y, 0) puts the slot 1
        # part of (GA)_n into slot 0 of (GA)_{n-1}
        a_n1 = a.get(n - 1, 0)
        if a_n1:
            out[:, r:r + a_n1, a.get(n, 0):a.get(n, 0) + a_n1] = np.eye(a_n1, dtype=np.int64)
        parts[n] = out
    return FMap(ga, gga, 0, parts, n_batch)


def f_gamma(a: Ranks, diffs: dict[int, np.ndarray], n_batch: int) -> FMap:
    """Structure map (id, d) : A -> GA of a batch of complexes on ranks a."""
    ga = g_ranks(a)
    parts = {}
    for n, r in a.items():
        out = np.zeros((n_batch, ga[n], r), dtype=np.int64)
        out[:, :r, :] = np.eye(r, dtype=np.int64)
        if n in diffs and a.get(n - 1, 0):
            out[:, r:r + a[n - 1], :] = diffs[n]
        parts[n] = out
    return FMap(a, ga, 0, parts, n_batch)


def f_tensor_differential(a: Ranks, da: dict[int, np.ndarray],
                          b: Ranks, db: dict[int, np.ndarray],
                          n_batch: int) -> FMap:
    """Differential of the tensor complex: d (x) 1 + (-1)^i 1 (x) d."""
    t = tensor_ranks(a, b)
    parts = {}
    for n in t:
        if n - 1 not in t:
            continue
        out = np.zeros((n_batch, t[n - 1], t[n]), dtype=np.int64)
        tdown = {(i, j): off for i, j, off in tensor_blocks(a, b, n - 1)}
        for i, j, soff in tensor_blocks(a, b, n):
            w = a[i] * b[j]
            if i in da and (i - 1, j) in tdown:
                blk = _kron_batched(da[i],
                                    np.broadcast_to(np.eye(b[j], dtype=np.int64),
                                                    (n_batch, b[j], b[j])))
                toff = tdown[(i - 1, j)]
                out[:, toff:toff + blk.shape[1], soff:soff + w] += blk
            if j in db and (i, j - 1) in tdown:
                sign = -1 if i % 2 else 1
                blk = _kron_batched(np.broadcast_to(np.eye(a[i], dtype=np.int64),
                                                    (n_batch, a[i], a[i])), db[j])
                toff = tdown[(i, j - 1)]
                out[:, toff:toff + blk.shape[1], soff:soff + w] += sign * blk
        parts[n] = out
    return FMap(t, t, -1, parts, n_batch)


def f_fusion(a: Ranks, v: Ranks, dv: dict[int, np.ndarray],
             n_batch: int) -> tuple[FMap, FMap]:
    """(forward, inverse) fusion maps G(a) (x) v -> G(a (x) v).

    Forward blocks: the a_i slot of (Ga)_i tensored with v_j lands
    identically in slot 0 at block (i, j) and, twisted by (-1)^i (1 (x) d),
    in slot 1 at block (i, j-1); the a_{i-1} slot lands identically in
    slot 1 at block (i-1, j).  The inverse flips the sign of the twist.
    """
    ga = g_ranks(a)
    src = tensor_ranks(ga, v)
    tav = tensor_ranks(a, v)
    tgt = g_ranks(tav)
    fw_parts = {}
    inv_parts = {}
    for n in src:
        R, C = tgt.get(n, 0), src[n]
        fw = np.zeros((n_batch, R, C), dtype=np.int64)
        iv = np.zeros((n_batch, C, R), dtype=np.int64)
        slot1_off = tav.get(n, 0)
        t_n = {(i, j): off for i, j, off in tensor_blocks(a, v, n)}
        t_n1 = {(i, j): off for i, j, off in tensor_blocks(a, v, n - 1)}
        for i, j, soff in tensor_blocks(ga, v, n):
            sub0 = a.get(i, 0)       # a_i slot width inside (Ga)_i
            sub1 = a.get(i - 1, 0)
            vj = v[j]
            if sub0:
                w = sub0 * vj
                if (i, j) in t_n:
                    toff = t_n[(i, j)]
                    eye = np.eye(w, dtype=np.int64)
                    fw[:, toff:toff + w, soff:soff + w] = eye
                    iv[:, soff:soff + w, toff:toff + w] = eye
                if j in dv and (i, j - 1) in t_n1:
                    sign = -1 if i % 2 else 1
                    blk = sign * _kron_batched(
                        np.broadcast_to(np.eye(sub0, dtype=np.int64),
                                        (n_batch, sub0, sub0)), dv[j])
                    toff = slot1_off + t_n1[(i, j - 1)]
                    fw[:, toff:toff + blk.shape[1], soff:soff + w] += blk
                    # the inverse routes slot 0 block (i, j) through the same
                    # twist into the a_i slot-1 position at source block
                    # (i + 1, j - 1), with opposite sign
                    src_n = {(bi, bj): off for bi, bj, off in tensor_blocks(ga, v, n)}
                    if (i + 1, j - 1) in src_n and (i, j) in t_n:
                        s2 = src_n[(i + 1, j - 1)] + a.get(i + 1, 0) * v[j - 1]
                        t0 = t_n[(i, j)]
                        iv[:, s2:s2 + blk.shape[1], t0:t0 + w] -= blk
            if sub1:
                w = sub1 * vj
                if (i - 1, j) in t_n1:
                    toff = slot1_off + t_n1[(i - 1, j)]
                    eye = np.eye(w, dtype=np.int64)
                    fw[:, toff:toff + w, soff + sub0 * vj:soff + sub0 * vj + w] = eye
                    iv[:, soff + sub0 * vj:soff + sub0 * vj + w, toff:toff + w] = eye
        fw_parts[n] = fw
        inv_parts[n] = iv
    fwd = FMap(src, tgt, 0, fw_parts, n_batch)
    inv = FMap(tgt, src, 0, inv_parts, n_batch)
    return fwd, inv


def fusion_suite_mask(p: Ranks, v: Ranks, dv: dict[int, np.ndarray],
                      n_batch: int) -> np.ndarray:
    """Per-instance verdicts for the fusion suite on one shape class.

    Checks, for a zero-differential graded partner with ranks ``p`` against a
    batch of complexes (``v``, ``dv``): the fusion inverse is exact two-sided,
    the counit diagram, the comultiplication diagram, and the structure-map
    diagram.  Returns a boolean (N,) array.
    """
    p = _clean(p)
    v = _clean(v)
    ok = np.ones(n_batch, dtype=bool)
    fwd, inv = f_fusion(p, v, dv, n_batch)
    ok &= (inv @ fwd).eq_mask(f_identity(fwd.src, n_batch))
    ok &= (fwd @ inv).eq_mask(f_identity(fwd.tgt, n_batch))
    tav = tensor_ranks(p, v)
    idv = f_identity(v, n_batch)
    # counit square
    lhs = f_eps(tav, n_batch) @ fwd
    rhs = f_tensor(f_eps(p, n_batch), idv)
    ok &= lhs.eq_mask(rhs)
    # comultiplication square
    gp = g_ranks(p)
    fwd2, _ = f_fusion(gp, v, dv, n_batch)
    lhs = f_delta(tav, n_batch) @ fwd
    rhs = f_g(fwd) @ fwd2 @ f_tensor(f_delta(p, n_batch), idv)
    ok &= lhs.eq_mask(rhs)
    # structure square: partner carries the zero differential
    gamma_p = f_gamma(p, {}, n_batch)
    lhs = fwd @ f_tensor(gamma_p, idv)
    d_t = f_tensor_differential(p, {}, v, dv, n_batch)
    rhs = f_gamma(tav, d_t.parts, n_batch)
    ok &= lhs.eq_mask(rhs)
    return ok
