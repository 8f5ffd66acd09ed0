"""Exact linear algebra over Q(zeta_N).

Every routine is generic in the scalar type: ``int``, ``Fraction`` and
:class:`~hopfcalc.cyclotomic.CycNumber` entries may be mixed freely.  Rows are
kept sparse (``dict`` column -> value) during elimination, which matters for
the commutation systems with a few thousand unknowns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .cyclotomic import conductor_of


class DimensionMismatch(ValueError):
    pass


def _inv(x):
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def _clean(x):
    # keep ints as ints; Fractions with unit denominator collapse
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Invariant: every stored row has leading entry 1 at its pivot column, all
    other entries at larger non-pivot columns, and zeros in every other pivot
    column.  The result is the unique RREF of the span of the inserted rows.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, object]] = {}
        self._where: dict[int, set[int]] = {}  # column -> pivots whose row uses it

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = {c: x for c, x in vec.items() if x}
        rows = self.rows
        for p in [c for c in v if c in rows]:
            coef = v.get(p)
            if not coef:
                continue
            for c, x in rows[p].items():
                nv = v.get(c, 0) - coef * x
                if nv:
                    v[c] = nv
                else:
                    v.pop(c, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert a row; returns True when it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = _inv(v[p])
        row = {c: _clean(x * inv) for c, x in v.items()}
        row[p] = 1
        for q in list(self._where.get(p, ())):
            other = self.rows[q]
            coef = other.pop(p)
            self._where[p].discard(q)
            for c, x in row.items():
                if c == p:
                    continue
                nv = other.get(c, 0) - coef * x
                if nv:
                    if c not in other:
                        self._where.setdefault(c, set()).add(q)
                    other[c] = nv
                elif c in other:
                    del other[c]
                    self._where[c].discard(q)
        self._where.pop(p, None)
        self.rows[p] = row
        for c in row:
            if c != p:
                self._where.setdefault(c, set()).add(p)
        return True

    def add_dense(self, vec: Sequence) -> bool:
        return self.add({i: x for i, x in enumerate(vec) if x})

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[tuple]:
        out = []
        for p in self.pivots():
            dense = [0] * self.ncols
            for c, x in self.rows[p].items():
                dense[c] = x
            out.append(tuple(dense))
        return out

    def kernel(self) -> list[tuple]:
        """Canonical basis of {x : row . x = 0 for every row}."""
        free = [c for c in range(self.ncols) if c not in self.rows]
        out = []
        for f in free:
            x = [0] * self.ncols
            x[f] = 1
            for p in self._where.get(f, ()):
                x[p] = -self.rows[p][f]
            out.append(tuple(x))
        return out


def _as_dicts(rows: Iterable[Sequence]) -> Iterable[dict]:
    for r in rows:
        if isinstance(r, dict):
            yield r
        else:
            yield {i: x for i, x in enumerate(r) if x}


def echelon(rows: Iterable, ncols: int) -> Echelon:
    ech = Echelon(ncols)
    for r in _as_dicts(rows):
        ech.add(r)
    return ech


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return echelon(rows, ncols).rank


def kernel(rows: Sequence, ncols: int) -> list[tuple]:
    """Basis of the right null space of the matrix with the given rows."""
    return echelon(rows, ncols).kernel()


@dataclass(frozen=True)
class LinearSolution:
    """One solution of A x = b together with a canonical kernel basis of A."""

    particular: tuple
    kernel: list = field(default_factory=list)


@dataclass(frozen=True)
class NoSolution:
    """Typed result for an inconsistent system."""

    reason: str = "inconsistent"

    def __bool__(self) -> bool:
        return False


def solve_linear(A: Sequence[Sequence], b: Sequence) -> LinearSolution | NoSolution:
    A = [list(r) for r in A]
    if len(A) != len(b):
        raise DimensionMismatch(f"{len(A)} equations but {len(b)} right-hand sides")
    ncols = len(A[0]) if A else 0
    ech = Echelon(ncols + 1)
    for r, rhs in zip(A, b):
        d = {i: x for i, x in enumerate(r) if x}
        if rhs:
            d[ncols] = rhs
        ech.add(d)
    if ncols in ech.rows:
        return NoSolution()
    x = [0] * ncols
    for p, row in ech.rows.items():
        x[p] = row.get(ncols, 0)
    kern = []
    for f in range(ncols):
        if f in ech.rows:
            continue
        v = [0] * ncols
        v[f] = 1
        for p in ech._where.get(f, ()):
            v[p] = -ech.rows[p][f]
        kern.append(tuple(v))
    return LinearSolution(tuple(x), kern)


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch("inner dimensions differ")
    cols = len(B[0]) if B else 0
    out = []
    for r in A:
        row = [0] * cols
        for k, a in enumerate(r):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        row[j] = row[j] + a * b
        out.append(row)
    return out


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    out = []
    for r in A:
        s = 0
        for a, x in zip(r, v):
            if a and x:
                s = s + a * x
        out.append(s)
    return out


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*A)] if A else []


def identity(n: int) -> list[list]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def inverse(A: Sequence[Sequence]) -> list[list]:
    n = len(A)
    ech = Echelon(2 * n)
    for i, r in enumerate(A):
        d = {j: x for j, x in enumerate(r) if x}
        d[n + i] = 1
        ech.add(d)
    if any(p not in ech.rows for p in range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [[ech.rows[i].get(n + j, 0) for j in range(n)] for i in range(n)]


class MatrixC:
    """Dense exact matrix with cyclotomic (or rational) entries."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [tuple(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def conductor(self) -> int:
        n = 1
        for r in self.rows:
            for x in r:
                n = lcm(n, conductor_of(x))
        return n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixC) and self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __matmul__(self, other):
        if isinstance(other, MatrixC):
            return MatrixC(matmul(self.rows, other.rows))
        return matvec(self.rows, other)

    def transpose(self) -> "MatrixC":
        return MatrixC(transpose(self.rows))

    def rank(self) -> int:
        return rank(self.rows, self.ncols)

    def kernel(self) -> list[tuple]:
        return kernel(self.rows, self.ncols)

    def inverse(self) -> "MatrixC":
        if self.nrows != self.ncols:
            raise DimensionMismatch("only square matrices are invertible")
        return MatrixC(inverse(self.rows))

    def solve(self, b: Sequence) -> LinearSolution | NoSolution:
        return solve_linear(self.rows, b)

    def __repr__(self) -> str:
        return f"MatrixC({[list(r) for r in self.rows]!r})"


class SubspaceC:
    """Subspace of K^n held as the canonical RREF basis."""

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        self.ambient = ambient
        self._ech = Echelon(ambient)
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in K^{ambient}")
            self._ech.add_dense(v)
        self.basis = self._ech.basis()

    @classmethod
    def full(cls, n: int) -> "SubspaceC":
        return cls(n, identity(n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def _check(self, other: "SubspaceC") -> None:
        if self.ambient != other.ambient:
            raise DimensionMismatch(
                f"ambient dimensions {self.ambient} and {other.ambient} differ"
            )

    def contains(self, v) -> bool:
        if isinstance(v, SubspaceC):
            self._check(v)
            return all(self.contains(b) for b in v.basis)
        if len(v) != self.ambient:
            raise DimensionMismatch("vector length differs from ambient dimension")
        return not self._ech.reduce({i: x for i, x in enumerate(v) if x})

    __contains__ = contains

    def coordinates(self, v) -> tuple:
        """Coefficients of v on ``self.basis`` (raises if v is not in the span)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self._ech.pivots())

    def __add__(self, other: "SubspaceC") -> "SubspaceC":
        self._check(other)
        return SubspaceC(self.ambient, list(self.basis) + list(other.basis))

    def annihilator(self) -> "SubspaceC":
        """{f : f . v = 0 for all v} under the standard pairing."""
        return SubspaceC(self.ambient, self._ech.kernel())

    def intersect(self, other: "SubspaceC") -> "SubspaceC":
        self._check(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def __and__(self, other):
        return self.intersect(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubspaceC):
            return NotImplemented
        self._check(other)
        return self.dim == other.dim and self.contains(other)

    def __hash__(self):
        return hash((self.ambient, self.dim))

    def __repr__(self) -> str:
        return f"SubspaceC(dim={self.dim}, ambient={self.ambient})"


def subspace_ops(U: SubspaceC, V: SubspaceC, op: str):
    if op == "sum":
        return U + V
    if op == "intersect":
        return U & V
    if op == "contains":
        return U.contains(V)
    if op == "equal":
        return U == V
    raise ValueError(f"unknown subspace operation {op!r}")
