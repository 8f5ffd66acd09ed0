"""Finite-dimensional associative algebras given by structure constants.

Also hosts the splitting engine: central primitive idempotents
(:func:`wedderburn_split`) and full sets of matrix units of a split simple
block (:func:`matrix_units`).  Both certify their output with exact
arithmetic before returning it.
"""

from __future__ import annotations

import logging
import random
from functools import cached_property
from math import isqrt
from typing import Sequence

from .cyclotomic import conductor_bound, exact_div
from .linalg import Echelon, SubspaceC, rank, solve_linear
from .modular import cyclotomic_roots

log = logging.getLogger(__name__)

Vector = tuple


class RadicalError(ValueError):
    """The algebra is not semisimple (its trace form is degenerate)."""

    def __init__(self, msg: str = "radical nonzero"):
        super().__init__(msg)


class SplittingError(ArithmeticError):
    """The chosen cyclotomic field does not split the algebra."""

    def __init__(self, conductor: int, detail: str = ""):
        msg = (
            f"splitting conductor too small: Q(zeta_{conductor}) does not split "
            f"the algebra{': ' + detail if detail else ''}; raise the conductor "
            f"(bound via HOPFCALC_CONDUCTOR_MAX, currently {conductor_bound()})"
        )
        super().__init__(msg)
        self.conductor = conductor


def add(x: Sequence, y: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence, y: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Sequence) -> Vector:
    return tuple(c * a if a else 0 for a in x)


def is_zero(x: Sequence) -> bool:
    return not any(x)


def lincomb(terms, n: int) -> Vector:
    out = [0] * n
    for c, v in terms:
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] = out[i] + c * a
    return tuple(out)


class Algebra:
    """Associative unital algebra with sparse structure constants.

    ``table[i][j]`` is a tuple of ``(k, c)`` pairs: b_i b_j = sum c b_k.
    """

    def __init__(self, table, unit: Sequence, labels: Sequence[str] | None = None):
        self.dim = len(table)
        self.table = [[tuple((k, c) for k, c in entry if c) for entry in row] for row in table]
        self.unit = tuple(unit)
        self.labels = list(labels) if labels else [f"b{i}" for i in range(self.dim)]

    @classmethod
    def from_products(cls, products, unit, labels=None) -> "Algebra":
        """Build from dense product vectors: products[i][j] = b_i b_j."""
        table = [
            [tuple((k, c) for k, c in enumerate(v) if c) for v in row] for row in products
        ]
        return cls(table, unit, labels)

    def basis(self, i: int) -> Vector:
        v = [0] * self.dim
        v[i] = 1
        return tuple(v)

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        out = [0] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        table = self.table
        for i, a in enumerate(x):
            if not a:
                continue
            row = table[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return tuple(out)

    def power(self, x: Sequence, k: int) -> Vector:
        out = self.unit
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def left_matrix(self, x: Sequence) -> list[list]:
        """Matrix of y -> x y (columns indexed by basis y)."""
        cols = [self.mul(x, self.basis(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def is_commutative(self) -> bool:
        return all(
            self.table[i][j] == self.table[j][i] or
            dict(self.table[i][j]) == dict(self.table[j][i])
            for i in range(self.dim) for j in range(i)
        )

    def is_central(self, x: Sequence) -> bool:
        return all(
            self.mul(x, self.basis(j)) == self.mul(self.basis(j), x) for j in range(self.dim)
        )

    def center(self) -> SubspaceC:
        n = self.dim
        ech = Echelon(n)
        for j in range(n):
            for k in range(n):
                row = {}
                for i in range(n):
                    c = dict(self.table[i][j]).get(k, 0) - dict(self.table[j][i]).get(k, 0)
                    if c:
                        row[i] = c
                if row:
                    ech.add(row)
        return SubspaceC(n, ech.kernel())

    @cached_property
    def regular_traces(self) -> tuple:
        """tr(L_{b_m}) for every basis element."""
        out = []
        for m in range(self.dim):
            out.append(sum((c for j in range(self.dim) for k, c in self.table[m][j] if k == j), 0))
        return tuple(out)

    def trace(self, x: Sequence):
        return sum((a * t for a, t in zip(x, self.regular_traces) if a and t), 0)

    @cached_property
    def trace_form(self) -> list[list]:
        t = self.regular_traces
        return [
            [sum((c * t[k] for k, c in self.table[i][j]), 0) for j in range(self.dim)]
            for i in range(self.dim)
        ]

    def is_semisimple(self) -> bool:
        return rank(self.trace_form, self.dim) == self.dim

    def span(self, vectors) -> SubspaceC:
        return SubspaceC(self.dim, list(vectors))

    def subalgebra(self, basis: Sequence[Sequence], labels=None) -> "Algebra":
        """Structure constants of a subalgebra on the given (independent) basis."""
        cols = [list(r) for r in zip(*basis)]
        products = []
        for u in basis:
            row = []
            for v in basis:
                sol = solve_linear(cols, self.mul(u, v))
                if not sol:
                    raise ValueError("span is not closed under multiplication")
                row.append(sol.particular)
            products.append(row)
        unit = solve_linear(cols, self.unit)
        if not unit:
            raise ValueError("span does not contain the unit")
        return Algebra.from_products(products, unit.particular, labels)

    def minimal_polynomial(self, y: Sequence, unit: Sequence | None = None) -> list:
        """Monic minimal polynomial (lowest degree first) of y in the algebra with unit ``unit``."""
        unit = tuple(unit) if unit is not None else self.unit
        powers = [unit]
        ech = Echelon(self.dim)
        ech.add_dense(unit)
        while True:
            nxt = self.mul(y, powers[-1])
            if not ech.add_dense(nxt):
                cols = [list(r) for r in zip(*powers)]
                sol = solve_linear(cols, nxt)
                return [-c for c in sol.particular] + [1]
            powers.append(nxt)

    def poly_eval(self, coeffs: Sequence, y: Sequence, unit: Sequence) -> Vector:
        acc = tuple(0 for _ in range(self.dim))
        for c in reversed(coeffs):
            acc = add(self.mul(acc, y), scale(c, unit))
        return acc


# -- splitting ---------------------------------------------------------------


def _divide_linear(coeffs, root):
    """Quotient of a polynomial (low first) by (x - root)."""
    n = len(coeffs) - 1
    q = [0] * n
    carry = 0
    for i in range(n, 0, -1):
        carry = coeffs[i] + carry * root if i < n else coeffs[i]
        q[i - 1] = carry
    return q


def _spectral_pieces(A: Algebra, y, e, n: int):
    """Split idempotent e using K-rational eigenvalues of y in eAe.

    Returns a list of orthogonal idempotents summing to e, or None when y has
    no usable rational eigenvalue.
    """
    poly = A.minimal_polynomial(y, e)
    if len(poly) <= 2:
        return None
    try:
        roots = cyclotomic_roots(poly, n)
    except ArithmeticError:
        return None
    if not roots:
        return None
    pieces = []
    for lam in roots:
        q = _divide_linear(poly, lam)
        qlam = sum((c * lam**i for i, c in enumerate(q) if c), 0)
        p = A.poly_eval(q, y, e)
        pieces.append(scale(exact_div(1, qlam), p))
    rest = e
    for p in pieces:
        rest = sub(rest, p)
    if any(rest):
        pieces.append(rest)
    return pieces


def _candidates(A: Algebra, space_basis, rng: random.Random, tries: int):
    for v in space_basis:
        yield v
    m = len(space_basis)
    for _ in range(tries):
        coeffs = [rng.randint(-3, 3) for _ in range(m)]
        yield tuple(sum((c * v[i] for c, v in zip(coeffs, space_basis) if c), 0) for i in range(A.dim))


def wedderburn_split(A: Algebra, conductor: int, *, commutative: bool | None = None,
                     seed: int = 0, tries: int = 40) -> list[Vector]:
    """Central primitive idempotents of a semisimple algebra split by Q(zeta_conductor).

    Raises :class:`RadicalError` for non-semisimple input and
    :class:`SplittingError` when the field is too small.
    """
    if not A.is_semisimple():
        raise RadicalError()
    if commutative is None:
        commutative = A.is_commutative()
    elif commutative and not A.is_commutative():
        raise ValueError("algebra flagged commutative is not commutative")
    Z = SubspaceC.full(A.dim) if commutative else A.center()
    rng = random.Random(seed)
    done: list[Vector] = []
    todo = [A.unit]
    while todo:
        e = todo.pop()
        ze = [A.mul(z, e) for z in Z.basis]
        ze_space = SubspaceC(A.dim, ze)
        if ze_space.dim == 1:
            done.append(e)
            continue
        pieces = None
        for y in _candidates(A, ze_space.basis, rng, tries):
            pieces = _spectral_pieces(A, y, e, conductor)
            if pieces and len(pieces) > 1:
                break
        if not pieces or len(pieces) < 2:
            raise SplittingError(conductor, "no eigenvalues in the field")
        todo.extend(pieces)
    verify_central_idempotents(A, done, Z.dim)
    return done


class VerificationError(AssertionError):
    pass


def verify_central_idempotents(A: Algebra, idems: Sequence[Vector], center_dim: int) -> None:
    """Exact certification: e^2 = e, e_i e_j = 0, sum = 1, central, count = dim Z."""
    if len(idems) != center_dim:
        raise VerificationError(f"{len(idems)} idempotents for a center of dim {center_dim}")
    total = tuple(0 for _ in range(A.dim))
    for i, e in enumerate(idems):
        if A.mul(e, e) != tuple(e):
            raise VerificationError(f"idempotent {i} is not idempotent")
        if not A.is_central(e):
            raise VerificationError(f"idempotent {i} is not central")
        for j in range(i):
            if any(A.mul(e, idems[j])):
                raise VerificationError(f"idempotents {j}, {i} are not orthogonal")
        total = add(total, e)
    if total != A.unit:
        raise VerificationError("idempotents do not sum to 1")


def block_rank(A: Algebra, e: Sequence) -> int:
    """r with eAe of dimension r^2 (exact square for a split simple block)."""
    d = SubspaceC(A.dim, [A.mul(A.mul(e, A.basis(i)), e) for i in range(A.dim)]).dim
    r = isqrt(d)
    if r * r != d:
        raise SplittingError(0, f"corner algebra of dimension {d} is not a full matrix algebra")
    return r


def primitive_idempotents(A: Algebra, central: Sequence, conductor: int, *,
                          seed: int = 0, tries: int = 60) -> list[Vector]:
    """Orthogonal primitive idempotents summing to a central primitive idempotent."""
    rng = random.Random(seed)
    done, todo = [], [tuple(central)]
    while todo:
        e = todo.pop()
        if block_rank(A, e) == 1:
            done.append(e)
            continue
        corner = SubspaceC(A.dim, [A.mul(A.mul(e, A.basis(i)), e) for i in range(A.dim)])
        pieces = None
        for y in _candidates(A, corner.basis, rng, tries):
            pieces = _spectral_pieces(A, y, e, conductor)
            if pieces and len(pieces) > 1:
                break
        if not pieces or len(pieces) < 2:
            raise SplittingError(conductor, "no zero divisor with rational eigenvalue found")
        todo.extend(pieces)
    done.sort(key=lambda v: [i for i, x in enumerate(v) if x])
    return done


def matrix_units(A: Algebra, central: Sequence, conductor: int, *, seed: int = 0):
    """Full system E[i][j] of matrix units with sum_i E[i][i] = central."""
    diag = primitive_idempotents(A, central, conductor, seed=seed)
    q = len(diag)
    E = [[None] * q for _ in range(q)]
    E[0][0] = diag[0]
    for j in range(1, q):
        u = next(
            (w for w in (A.mul(A.mul(diag[0], A.basis(i)), diag[j]) for i in range(A.dim)) if any(w)),
            None,
        )
        v = next(
            (w for w in (A.mul(A.mul(diag[j], A.basis(i)), diag[0]) for i in range(A.dim)) if any(w)),
            None,
        )
        if u is None or v is None:
            raise SplittingError(conductor, "block is not simple")
        uv = A.mul(u, v)
        k = next(i for i, x in enumerate(diag[0]) if x)
        c = exact_div(uv[k], diag[0][k])
        E[0][j] = u
        E[j][0] = scale(exact_div(1, c), v)
    for i in range(1, q):
        E[i][i] = diag[i]
        for j in range(1, q):
            if i != j:
                E[i][j] = A.mul(E[i][0], E[0][j])
    for i in range(q):
        for j in range(q):
            for k in range(q):
                for l in range(q):
                    want = E[i][l] if j == k else tuple(0 for _ in range(A.dim))
                    if A.mul(E[i][j], E[k][l]) != tuple(want):
                        raise VerificationError("matrix unit relations fail")
    return E
