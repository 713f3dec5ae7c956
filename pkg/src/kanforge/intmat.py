"""Exact integer matrices: Smith normal form, Diophantine solving, cokernels.

Everything here is arbitrary-precision and total on empty shapes; an empty
matrix presents the zero group.  All values are immutable and freely
shareable between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix of shape rows x cols."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length != rows*cols")
        if not all(isinstance(e, int) for e in self.entries):
            raise TypeError("entries must be int")

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        r = len(rows)
        if r == 0:
            return IntMatrix(0, 0 if cols is None else cols, ())
        c = len(rows[0]) if cols is None else cols
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in row)
        return IntMatrix(r, c, tuple(flat))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(r: int, c: int) -> "IntMatrix":
        return IntMatrix(r, c, (0,) * (r * c))

    @staticmethod
    def diagonal(diag: Sequence[int]) -> "IntMatrix":
        n = len(diag)
        return IntMatrix(n, n, tuple(diag[i] if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def column(values: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(values), 1, tuple(int(v) for v in values))

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    # -- arithmetic --------------------------------------------------------

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        m, k, n = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [0] * (m * n)
        for i in range(m):
            arow = a[i * k:(i + 1) * k]
            base = i * n
            for t in range(k):
                av = arow[t]
                if av:
                    brow = b[t * n:(t + 1) * n]
                    for j in range(n):
                        out[base + j] += av * brow[j]
        return IntMatrix(m, n, tuple(out))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in +")
        return IntMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scaled(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack row mismatch")
        flat = []
        for i in range(self.rows):
            flat.extend(self.row(i))
            flat.extend(other.row(i))
        return IntMatrix(self.rows, self.cols + other.cols, tuple(flat))

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise ValueError("vstack col mismatch")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        m, n = self.rows, self.cols
        p, q = other.rows, other.cols
        flat = []
        for i in range(m):
            for k in range(p):
                for j in range(n):
                    a = self[i, j]
                    flat.extend(a * other[k, l] for l in range(q))
        return IntMatrix(m * p, n * q, tuple(flat))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(row_idx), len(col_idx),
                         tuple(self[i, j] for i in row_idx for j in col_idx))

    def col(self, j: int) -> "IntMatrix":
        return self.submatrix(range(self.rows), [j])

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.to_rows()}

    @staticmethod
    def from_json(obj: dict) -> "IntMatrix":
        rows, cols = int(obj["rows"]), int(obj["cols"])
        ent = obj["entries"]
        flat = []
        if len(ent) != rows:
            raise ValueError("entries has wrong number of rows")
        for row in ent:
            if len(row) != cols:
                raise ValueError("ragged entries row")
            flat.extend(int(x) for x in row)  # accepts decimal strings
        return IntMatrix(rows, cols, tuple(flat))

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows)) + "]"


@dataclass(frozen=True)
class SmithDecomposition:
    """u @ a @ v = d with u, v unimodular, d diagonal with divisibility chain."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    invariants_list: tuple[int, ...]


@dataclass(frozen=True)
class _SnfFull:
    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix
    invariants: tuple[int, ...]


@lru_cache(maxsize=65536)
def _snf_full(a: IntMatrix) -> _SnfFull:
    m, n = a.rows, a.cols
    A = a.to_rows()
    U = IntMatrix.identity(m).to_rows()
    Ui = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()
    Vi = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in range(m):
            Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]

    def swap_cols(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_sub(i, t, q):
        # row_i -= q * row_t
        for c in range(n):
            A[i][c] -= q * A[t][c]
        for c in range(m):
            U[i][c] -= q * U[t][c]
        for r in range(m):
            Ui[r][t] += q * Ui[r][i]

    def col_sub(j, t, q):
        # col_j -= q * col_t
        for r in range(m):
            A[r][j] -= q * A[r][t]
        for r in range(n):
            V[r][j] -= q * V[r][t]
        for c in range(n):
            Vi[t][c] += q * Vi[j][c]

    def negate_row(i):
        for c in range(n):
            A[i][c] = -A[i][c]
        for c in range(m):
            U[i][c] = -U[i][c]
        for r in range(m):
            Ui[r][i] = -Ui[r][i]

    t = 0
    while t < min(m, n):
        # deterministic pivot: smallest |entry|, ties by row then column
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x != 0:
                    key = (abs(x), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            p = A[t][t]
            moved = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // p
                    if q:
                        row_sub(i, t, q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                    moved = True
                    break
            if moved:
                continue
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // p
                    if q:
                        col_sub(j, t, q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                    moved = True
                    break
            if moved:
                continue
            # row/col clear; enforce divisibility into the rest
            p = A[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p != 0:
                        offender = (i, j)
                        break
                if offender:
                    break
            if offender is None:
                break
            # fold the offending row in and keep reducing
            row_sub(t, offender[0], -1)
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    d = IntMatrix.from_rows(A, cols=n)
    inv = tuple(A[i][i] for i in range(min(m, n)) if A[i][i] != 0)
    return _SnfFull(IntMatrix.from_rows(U, cols=m), d, IntMatrix.from_rows(V, cols=n),
                    IntMatrix.from_rows(Ui, cols=m), IntMatrix.from_rows(Vi, cols=n), inv)


def smith_decompose(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form u @ a @ v = d, deterministic for a given input."""
    f = _snf_full(a)
    return SmithDecomposition(f.u, f.d, f.v, f.invariants)


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix."""
    f = _snf_full(a)
    if len(f.invariants) != a.rows or a.rows != a.cols or any(x != 1 for x in f.invariants):
        raise ValueError("matrix is not unimodular")
    # a = u_inv d v_inv with d = I, so a^-1 = v u
    return f.v @ f.u


def is_unimodular(a: IntMatrix) -> bool:
    """True iff a is square with determinant +-1."""
    if a.rows != a.cols:
        raise ValueError("is_unimodular requires a square matrix")
    return a.det() in (1, -1)


def solve_diophantine(a: IntMatrix, b: IntMatrix):
    """Integer solutions of a @ x = b.

    Returns (particular, kernel_basis) where kernel_basis is a tuple of
    column matrices spanning all integer solutions of a @ x = 0, or None
    when no integer solution exists.
    """
    if b.cols != 1 or b.rows != a.rows:
        raise ValueError("b must be a column compatible with a")
    f = _snf_full(a)
    r = len(f.invariants)
    c = f.u @ b
    y = [0] * a.cols
    for i in range(a.rows):
        ci = c[i, 0]
        if i < r:
            di = f.d[i, i]
            if ci % di != 0:
                return None
            y[i] = ci // di
        elif ci != 0:
            return None
    x = f.v @ IntMatrix.column(y)
    kernel = tuple(f.v.col(j) for j in range(r, a.cols))
    return x, kernel


def cokernel_invariants(a: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion chain) of coker(a : Z^cols -> Z^rows)."""
    f = _snf_full(a)
    rank = a.rows - len(f.invariants)
    torsion = tuple(x for x in f.invariants if x > 1)
    return rank, torsion
