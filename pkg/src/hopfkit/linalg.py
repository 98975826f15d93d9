"""Exact matrices over Q(zeta_N).

A ``Mat`` is a linear map: ``rows`` is the codomain dimension and column j is
the image of the j-th basis vector.  Internally the columns are kept as
zero-free dictionaries ``{row: CycNumber}``; this is only a storage detail, the
public surface (``entry``, ``dense``, JSON) is dense and row-major.

Kronecker convention (fixed everywhere): entry ((i,k),(j,l)) of kron(A, B)
sits at row i*B.rows + k, column j*B.cols + l.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .cyclotomic import CycNumber, as_cyc, one, zero

Vec = dict  # sparse vector {index: CycNumber}, zero entries never stored


class SingularMatrixError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# sparse vector helpers
# ---------------------------------------------------------------------------

def vec_axpy(acc: Vec, c: CycNumber, x: Vec) -> None:
    """acc += c * x, in place, dropping zeros."""
    for i, v in x.items():
        w = c * v
        if i in acc:
            s = acc[i] + w
            if s:
                acc[i] = s
            else:
                del acc[i]
        elif w:
            acc[i] = w


def vec_scale(c: CycNumber, x: Vec) -> Vec:
    if not c:
        return {}
    return {i: c * v for i, v in x.items()}


def vec_add(x: Vec, y: Vec) -> Vec:
    out = dict(x)
    for i, v in y.items():
        if i in out:
            s = out[i] + v
            if s:
                out[i] = s
            else:
                del out[i]
        else:
            out[i] = v
    return out


def vec_sub(x: Vec, y: Vec) -> Vec:
    return vec_add(x, {i: -v for i, v in y.items()})


def vec_kron(x: Vec, y: Vec, ydim: int) -> Vec:
    out = {}
    for i, a in x.items():
        base = i * ydim
        for j, b in y.items():
            out[base + j] = a * b
    return out


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Mat:
    """Immutable exact matrix; all entries live in Q(zeta_order)."""

    __slots__ = ("order", "rows", "cols", "_c", "_key")

    def __init__(self, order: int, rows: int, cols: int, columns: Sequence[Vec]):
        if len(columns) != cols:
            raise ValueError("column count mismatch")
        self.order = order
        self.rows = rows
        self.cols = cols
        self._c = tuple(columns)
        self._key = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_columns(cls, order: int, rows: int, columns: Iterable[Vec]) -> "Mat":
        cols = []
        for col in columns:
            clean = {}
            for i, v in col.items():
                if not 0 <= i < rows:
                    raise IndexError(f"row index {i} out of range")
                v = as_cyc(v, order)
                if v:
                    clean[i] = v
            cols.append(clean)
        return cls(order, rows, len(cols), cols)

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence], order: int | None = None,
                   cols: int | None = None) -> "Mat":
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else 0
        if order is None:
            orders = [v.order for r in entries for v in r if isinstance(v, CycNumber)]
            order = lcm(*orders) if orders else 1
        columns = [dict() for _ in range(cols)]
        for i, r in enumerate(entries):
            if len(r) != cols:
                raise ValueError("ragged dense matrix")
            for j, v in enumerate(r):
                v = as_cyc(v, order)
                if v:
                    columns[j][i] = v
        return cls(order, rows, cols, columns)

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = 1) -> "Mat":
        return cls(order, rows, cols, [{} for _ in range(cols)])

    @classmethod
    def identity(cls, n: int, order: int = 1) -> "Mat":
        u = one(order)
        return cls(order, n, n, [{i: u} for i in range(n)])

    @classmethod
    def from_function(cls, order: int, rows: int, cols: int, fn) -> "Mat":
        """Column j is fn(j), a sparse vector (values may be int/Fraction)."""
        return cls.from_columns(order, rows, (fn(j) for j in range(cols)))

    # -- access ----------------------------------------------------------------
    def col(self, j: int) -> Vec:
        return self._c[j]

    @property
    def columns(self) -> tuple:
        return self._c

    def entry(self, i: int, j: int) -> CycNumber:
        return self._c[j].get(i, zero(self.order))

    def dense(self) -> list[list[CycNumber]]:
        z = zero(self.order)
        out = [[z] * self.cols for _ in range(self.rows)]
        for j, col in enumerate(self._c):
            for i, v in col.items():
                out[i][j] = v
        return out

    def row(self, i: int) -> Vec:
        return {j: col[i] for j, col in enumerate(self._c) if i in col}

    def nnz(self) -> int:
        return sum(len(c) for c in self._c)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def lift(self, order: int) -> "Mat":
        if order == self.order:
            return self
        return Mat(order, self.rows, self.cols,
                   [{i: v.lift(order) for i, v in c.items()} for c in self._c])

    def apply(self, x: Vec) -> Vec:
        """Matrix times sparse vector."""
        acc: Vec = {}
        for j, c in x.items():
            vec_axpy(acc, c, self._c[j])
        return acc

    # -- algebra -----------------------------------------------------------------
    def _common(self, other: "Mat") -> tuple["Mat", "Mat"]:
        if self.order == other.order:
            return self, other
        n = lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def __matmul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self._common(other)
        return Mat(a.order, a.rows, b.cols, [a.apply(c) for c in b._c])

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        a, b = self._common(other)
        return Mat(a.order, a.rows, a.cols, [vec_add(x, y) for x, y in zip(a._c, b._c)])

    def __neg__(self) -> "Mat":
        return Mat(self.order, self.rows, self.cols,
                   [{i: -v for i, v in c.items()} for c in self._c])

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def scale(self, c) -> "Mat":
        if isinstance(c, CycNumber) and c.order != self.order:
            n = lcm(c.order, self.order)
            return self.lift(n).scale(c.lift(n))
        c = as_cyc(c, self.order)
        return Mat(self.order, self.rows, self.cols, [vec_scale(c, x) for x in self._c])

    def transpose(self) -> "Mat":
        cols = [dict() for _ in range(self.rows)]
        for j, c in enumerate(self._c):
            for i, v in c.items():
                cols[i][j] = v
        return Mat(self.order, self.cols, self.rows, cols)

    @property
    def T(self) -> "Mat":
        return self.transpose()

    def kron(self, other: "Mat") -> "Mat":
        a, b = self._common(other)
        cols = []
        for ca in a._c:
            for cb in b._c:
                cols.append(vec_kron(ca, cb, b.rows))
        return Mat(a.order, a.rows * b.rows, a.cols * b.cols, cols)

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        a, b = self._common(other)
        return Mat(a.order, a.rows, a.cols + b.cols, a._c + b._c)

    def select_columns(self, idx: Sequence[int]) -> "Mat":
        return Mat(self.order, self.rows, len(idx), [self._c[j] for j in idx])

    def select_rows(self, idx: Sequence[int]) -> "Mat":
        pos = {r: k for k, r in enumerate(idx)}
        cols = []
        for c in self._c:
            cols.append({pos[i]: v for i, v in c.items() if i in pos})
        return Mat(self.order, len(idx), self.cols, cols)

    def power(self, k: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = Mat.identity(self.rows, self.order)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    # -- comparison ----------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.shape != other.shape:
            return False
        a, b = self._common(other)
        return all(x == y for x, y in zip(a._c, b._c))

    def __hash__(self):
        if self._key is None:
            self._key = hash((self.rows, self.cols, tuple(
                tuple(sorted((i, hash(v)) for i, v in c.items())) for c in self._c)))
        return self._key

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(len(c) == 1 and c.get(j) == 1 for j, c in enumerate(self._c))

    def __repr__(self):
        return f"Mat(order={self.order}, {self.rows}x{self.cols}, nnz={self.nnz()})"

    # -- serialization ---------------------------------------------------------------
    def to_json(self) -> dict:
        entries = [[v.to_json() for v in r] for r in self.dense()]
        return {"order": self.order, "rows": self.rows, "cols": self.cols, "entries": entries}

    @classmethod
    def from_json(cls, data: dict) -> "Mat":
        order = int(data["order"])
        rows, cols = int(data["rows"]), int(data["cols"])
        ent = data["entries"]
        if len(ent) != rows:
            raise ValueError("entries row count mismatch")
        dense = [[CycNumber.from_json(order, e) for e in r] for r in ent]
        return cls.from_dense(dense, order=order, cols=cols)

    # -- elimination-backed queries --------------------------------------------------
    def rank(self) -> int:
        return len(_row_echelon(self._rows_as_vectors(), self.order)[0])

    def kernel(self) -> "Mat":
        return mat_solve(self, "kernel")

    def image(self) -> "Mat":
        return mat_solve(self, "image")

    def inverse(self) -> "Mat":
        return mat_solve(self, "inverse")

    def solve(self, b: "Mat") -> "Mat":
        return mat_solve(self, "solve", b)

    def is_injective(self) -> bool:
        return self.rank() == self.cols

    def is_bijective(self) -> bool:
        return self.rows == self.cols and self.rank() == self.cols

    def _rows_as_vectors(self) -> list[Vec]:
        rows = [dict() for _ in range(self.rows)]
        for j, c in enumerate(self._c):
            for i, v in c.items():
                rows[i][j] = v
        return [r for r in rows if r]


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

class EchelonBasis:
    """Incrementally maintained reduced row-echelon basis of a span of vectors.

    ``pivots`` maps pivot index -> normalized row (pivot entry 1).  Rows are
    kept fully reduced against each other, so the basis is canonical for the
    spanned subspace once ``rows()`` sorts by pivot.
    """

    def __init__(self, order: int):
        self.order = order
        self.pivots: dict[int, Vec] = {}

    def reduce(self, v: Vec) -> Vec:
        v = dict(v)
        # eliminate pivots present in v; reduced rows never reintroduce pivots
        for p in sorted(set(v) & self.pivots.keys()):
            c = v.get(p)
            if c:
                vec_axpy(v, -c, self.pivots[p])
        return v

    def add(self, v: Vec) -> bool:
        """Insert v; returns True when it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        v = vec_scale(inv, v)
        # back-substitute into existing rows to keep the form reduced
        for row in self.pivots.values():
            c = row.get(p)
            if c:
                vec_axpy(row, -c, v)
        self.pivots[p] = v
        return True

    def __len__(self):
        return len(self.pivots)

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def rows(self) -> list[Vec]:
        return [self.pivots[p] for p in sorted(self.pivots)]


def _row_echelon(rows: Iterable[Vec], order: int) -> tuple[list[Vec], list[int]]:
    eb = EchelonBasis(order)
    for r in rows:
        eb.add(r)
    piv = sorted(eb.pivots)
    return [eb.pivots[p] for p in piv], piv


def canonical_span(vectors: Iterable[Vec], dim: int, order: int) -> Mat:
    """Columns = reduced echelon basis of span(vectors), sorted by pivot."""
    rows, _ = _row_echelon(vectors, order)
    return Mat(order, dim, len(rows), rows)


def mat_solve(A: Mat, mode: str, b: Mat | None = None):
    """Kernel / image / rank / inverse / solve for an exact matrix.

    kernel and image bases come back as matrix columns in reduced
    column-echelon form, so equal subspaces give equal matrices.
    """
    order = A.order
    if mode == "rank":
        return A.rank()
    if mode == "image":
        return canonical_span(A.columns, A.rows, order)
    if mode == "kernel":
        rows, piv = _row_echelon(A._rows_as_vectors(), order)
        pivset = set(piv)
        u = one(order)
        vecs = []
        for f in range(A.cols):
            if f in pivset:
                continue
            v = {f: u}
            for p, r in zip(piv, rows):
                c = r.get(f)
                if c:
                    v[p] = -c
            vecs.append(v)
        return canonical_span(vecs, A.cols, order)
    if mode == "inverse":
        if A.rows != A.cols:
            raise SingularMatrixError("inverse of a non-square matrix")
        return _solve_columns(A, Mat.identity(A.rows, order), square=True)
    if mode == "solve":
        if b is None:
            raise ValueError("solve needs a right-hand side")
        if b.rows != A.rows:
            raise ValueError("right-hand side has the wrong number of rows")
        return _solve_columns(A, b, square=False)
    raise ValueError(f"unknown mode {mode!r}")


def _solve_columns(A: Mat, B: Mat, square: bool) -> Mat:
    A, B = A._common(B)
    n, m = A.cols, B.cols
    # augmented rows [A | B]; pivots restricted to the A part
    rows = [dict() for _ in range(A.rows)]
    for j, c in enumerate(A.columns):
        for i, v in c.items():
            rows[i][j] = v
    for j, c in enumerate(B.columns):
        for i, v in c.items():
            rows[i][n + j] = v
    eb = EchelonBasis(A.order)
    for r in rows:
        if r:
            eb.add(r)
    piv = sorted(eb.pivots)
    if any(p >= n for p in piv):
        if square:
            raise SingularMatrixError("matrix is singular")
        raise InconsistentSystemError("linear system has no solution")
    if square and len(piv) < n:
        raise SingularMatrixError("matrix is singular")
    cols = [dict() for _ in range(m)]
    for p in piv:
        for k, v in eb.pivots[p].items():
            if k >= n:
                cols[k - n][p] = v
    return Mat(A.order, n, m, cols)


def kron(A: Mat, B: Mat) -> Mat:
    return A.kron(B)


def block_diag_perm(n: int, m: int, order: int = 1) -> Mat:
    """The swap V_n (x) V_m -> V_m (x) V_n as a permutation matrix."""
    u = one(order)
    cols = []
    for i in range(n):
        for j in range(m):
            cols.append({j * n + i: u})
    return Mat(order, n * m, n * m, cols)


def to_fraction_dense(A: Mat) -> list[list[Fraction]]:
    """Dense rational view; raises if any entry is irrational."""
    return [[v.to_fraction() for v in r] for r in A.dense()]
