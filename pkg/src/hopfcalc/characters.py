"""Integrals, irreducible characters, the Fourier transform and the character ring."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .algebra import (
    Algebra, RadicalError, VerificationError, add, lincomb, matrix_units, scale,
    verify_central_idempotents, wedderburn_split,
)
from .cyclotomic import exact_div, scalar_sort_key, scalar_to_json, simplify
from .hopf import DualFunctional, FiniteDimHopf, HopfElement
from .linalg import Echelon, SubspaceC, inverse, matvec, solve_linear


class NotSemisimpleError(ValueError):
    def __init__(self, detail: str = ""):
        super().__init__("not semisimple" + (f": {detail}" if detail else ""))


def memo(H: FiniteDimHopf, key: str, fn):
    """Per-object cache; Hopf algebras are immutable once built."""
    cache = H.__dict__.setdefault("_memo", {})
    if key not in cache:
        cache[key] = fn()
    return cache[key]


def dual_algebra(H: FiniteDimHopf) -> Algebra:
    """H^* as an associative algebra in the dual basis."""

    def build():
        n = H.dim
        table = [[[] for _ in range(n)] for _ in range(n)]
        for k in range(n):
            for i, j, c in H.comult[k]:
                table[i][j].append((k, c))
        return Algebra(table, H.counit, [f"{lab}^*" for lab in H.labels])

    return memo(H, "dual_algebra", build)


# -- integrals -------------------------------------------------------------------


def _integral_space(A: Algebra, counit: Sequence) -> list[tuple]:
    """{x : b x = counit(b) x for all basis b}."""
    n = A.dim
    ech = Echelon(n)
    for h in range(n):
        rows: dict[int, dict] = {}
        for i in range(n):
            for k, c in A.table[h][i]:
                rows.setdefault(k, {})
                rows[k][i] = rows[k].get(i, 0) + c
        for k in range(n):
            r = rows.get(k, {})
            if counit[h]:
                r[k] = r.get(k, 0) - counit[h]
            ech.add(r)
    return ech.kernel()


@dataclass(frozen=True)
class IntegralPair:
    Lambda: HopfElement
    t: DualFunctional


def integrals(H: FiniteDimHopf) -> IntegralPair:
    """Idempotent integrals of H and of H^*."""

    def build():
        space = _integral_space(H.algebra, H.counit)
        if len(space) != 1:
            raise NotSemisimpleError(f"space of left integrals has dimension {len(space)}")
        lam = space[0]
        e = H.eps(lam)
        if not e:
            raise NotSemisimpleError("eps(Lambda) = 0")
        lam = scale(exact_div(1, e), lam)
        dual = dual_algebra(H)
        dspace = _integral_space(dual, H.unit)
        if len(dspace) != 1:
            raise NotSemisimpleError(f"space of dual integrals has dimension {len(dspace)}")
        t = dspace[0]
        t1 = H.evaluate(t, H.unit)
        if not t1:
            raise NotSemisimpleError("t(1) = 0")
        t = scale(exact_div(1, t1), t)
        return IntegralPair(HopfElement(H, lam), DualFunctional(H, t))

    return memo(H, "integrals", build)


def check_integrals(H: FiniteDimHopf) -> dict:
    pair = integrals(H)
    lam, t = pair.Lambda.coeffs, pair.t.coeffs
    n = H.dim
    left = all(H.mul(H.basis(h), lam) == scale(H.counit[h], lam) for h in range(n))
    right = all(H.mul(lam, H.basis(h)) == scale(H.counit[h], lam) for h in range(n))
    dual_left = all(H.dual_mul(H.basis(f), t) == scale(H.unit[f], t) for f in range(n))
    return {
        "left": left, "two_sided": right, "eps_Lambda": H.eps(lam) == 1,
        "dual": dual_left, "t_1": H.evaluate(t, H.unit) == 1,
        "t_Lambda": H.evaluate(t, lam) == Fraction(1, n),
    }


# -- characters --------------------------------------------------------------------


@dataclass(frozen=True)
class Character:
    """A character of H, held as its functional."""

    functional: DualFunctional

    @property
    def coeffs(self) -> tuple:
        return self.functional.coeffs

    @property
    def degree(self):
        return self.functional.parent.evaluate(self.coeffs, self.functional.parent.unit)

    def __call__(self, x):
        return self.functional(x)

    def __repr__(self):
        return f"Character(degree={self.degree}, values={list(self.coeffs)})"


def _value_key(vec) -> tuple:
    return tuple(scalar_sort_key(x) for x in vec)


def _characters_of_blocks(A: Algebra, idems: list[tuple]) -> list[tuple[object, tuple, tuple]]:
    """(degree, character vector, idempotent) for each block, unsorted."""
    T = A.trace_form
    out = []
    for e in idems:
        q2 = A.trace(e)
        q2 = simplify(q2)
        q = isqrt(int(q2))
        if q * q != q2:
            raise VerificationError(f"block of dimension {q2} is not a square")
        chi = tuple(
            exact_div(sum((e[m] * T[b][m] for m in range(A.dim) if e[m] and T[b][m]), 0), q)
            for b in range(A.dim)
        )
        out.append((q, chi, tuple(simplify(x) for x in e)))
    out.sort(key=lambda t: (t[0], _value_key(t[1])))
    return out


@dataclass
class IrrData:
    """Irreducible characters of H and of H^* with their idempotents."""

    hopf: FiniteDimHopf
    irr_chars: list[Character]
    degrees: list[int]
    central_idempotents: list[HopfElement]
    dual_irr: list[HopfElement] = field(default_factory=list)
    dual_degrees: list[int] = field(default_factory=list)
    xi: list[DualFunctional] = field(default_factory=list)
    matrix_bases: list[list[list[HopfElement]]] = field(default_factory=list)
    char_ring_basis: list[DualFunctional] = field(default_factory=list)
    char_ring_idempotents: list[DualFunctional] = field(default_factory=list)
    char_ring_algebra: Algebra | None = field(default=None, repr=False)
    char_ring_coords: list = field(default_factory=list, repr=False)

    def index_of_character(self, vec) -> int:
        vec = tuple(vec)
        for i, chi in enumerate(self.irr_chars):
            if chi.coeffs == vec:
                return i
        raise KeyError("not an irreducible character")

    def index_of_dual(self, vec) -> int:
        vec = tuple(vec)
        for i, d in enumerate(self.dual_irr):
            if d.coeffs == vec:
                return i
        raise KeyError("not an irreducible character of the dual")

    def to_json(self) -> dict:
        H = self.hopf

        def vec(v):
            return [scalar_to_json(x) for x in v]

        return {
            "degrees": list(self.degrees),
            "dual_degrees": list(self.dual_degrees),
            "irr": [{"degree": d, "values": vec(c.coeffs)} for d, c in zip(self.degrees, self.irr_chars)],
            "central_idempotents": [vec(e.coeffs) for e in self.central_idempotents],
            "dual_irr": [{"degree": d, "element": vec(x.coeffs)}
                         for d, x in zip(self.dual_degrees, self.dual_irr)],
            "xi": [vec(x.coeffs) for x in self.xi],
            "matrix_bases": [
                {f"x_{i + 1}{j + 1}": vec(x.coeffs) for i, row in enumerate(block) for j, x in enumerate(row)}
                for block in self.matrix_bases
            ],
            "char_ring_dim": len(self.char_ring_basis),
            "char_ring_idempotents": [vec(e.coeffs) for e in self.char_ring_idempotents],
            "labels": list(H.labels),
        }


def split_algebra(A: Algebra, conductor: int, *, commutative: bool | None = None) -> list[tuple]:
    """wedderburn_split wrapper recording every certified set on the algebra."""
    idems = wedderburn_split(A, conductor, commutative=commutative)
    return idems


def irr_characters(H: FiniteDimHopf) -> IrrData:
    """Irr(H) with central primitive idempotents e_chi (primal half)."""

    def build():
        try:
            idems = split_algebra(H.algebra, H.conductor)
        except RadicalError as exc:
            raise NotSemisimpleError(str(exc)) from exc
        blocks = _characters_of_blocks(H.algebra, idems)
        return IrrData(
            H,
            [Character(DualFunctional(H, chi)) for _, chi, _ in blocks],
            [q for q, _, _ in blocks],
            [HopfElement(H, e) for _, _, e in blocks],
        )

    return memo(H, "irr", build)


def _matrix_basis(H: FiniteDimHopf, dual: Algebra, xi: tuple) -> list[list[tuple]]:
    """x_ij in H with f(x_ij) = rho(f)_ij for the block xi H^*."""
    E = matrix_units(dual, xi, H.conductor)
    q = len(E)
    n = H.dim
    xs = [[[0] * n for _ in range(q)] for _ in range(q)]
    for i in range(q):
        # a coordinate where E_ij is nonzero, for reading off the scalar
        piv = [next(k for k, x in enumerate(E[i][j]) if x) for j in range(q)]
        for k in range(n):
            left = dual.mul(E[i][i], dual.basis(k))
            for j in range(q):
                v = dual.mul(left, E[j][j])
                xs[i][j][k] = exact_div(v[piv[j]], E[i][j][piv[j]])
    return [[tuple(x) for x in row] for row in xs]


def dual_irr(H: FiniteDimHopf) -> IrrData:
    """Adds Irr(H^*), the xi_d and the matrix coalgebra bases to the IrrData of H."""

    def build():
        data = irr_characters(H)
        dual = dual_algebra(H)
        try:
            idems = split_algebra(dual, H.conductor)
        except RadicalError as exc:
            raise NotSemisimpleError("dual: " + str(exc)) from exc
        blocks = _characters_of_blocks(dual, idems)
        data.dual_irr = [HopfElement(H, d) for _, d, _ in blocks]
        data.dual_degrees = [q for q, _, _ in blocks]
        data.xi = [DualFunctional(H, x) for _, _, x in blocks]
        data.matrix_bases = [
            [[HopfElement(H, x) for x in row] for row in _matrix_basis(H, dual, xi)]
            if q > 1 else [[HopfElement(H, d)]]
            for (q, d, xi) in blocks
        ]
        basis, idem = _char_ring(H, data)
        data.char_ring_basis = basis
        data.char_ring_idempotents = idem
        return data

    return memo(H, "irr_full", build)


def irr_data(H: FiniteDimHopf) -> IrrData:
    return dual_irr(H)


def verify_irr(H: FiniteDimHopf) -> dict:
    """Exact checks of every IrrData invariant."""
    data = irr_data(H)
    n = H.dim
    out = {}
    out["sum_degrees_sq"] = sum(d * d for d in data.degrees) == n
    out["sum_dual_degrees_sq"] = sum(d * d for d in data.dual_degrees) == n
    es = [e.coeffs for e in data.central_idempotents]
    total = tuple(0 for _ in range(n))
    for e in es:
        total = add(total, e)
    out["idempotents_sum"] = total == H.unit
    out["idempotents"] = all(H.mul(e, e) == e for e in es) and all(
        not any(H.mul(a, b)) for i, a in enumerate(es) for b in es[:i])
    out["central"] = all(H.algebra.is_central(e) for e in es)
    out["cocommutative"] = all(is_cocommutative(H, chi.coeffs) for chi in data.irr_chars)
    ok_mb = True
    zero = tuple(0 for _ in range(n))
    for di, (block, d) in enumerate(zip(data.matrix_bases, data.dual_irr)):
        q = len(block)
        if q != data.dual_degrees[di]:
            ok_mb = False
        trace = zero
        for i in range(q):
            trace = add(trace, block[i][i].coeffs)
            for j in range(q):
                x = block[i][j].coeffs
                want: dict = {}
                for l in range(q):
                    for (a, b), c in _outer(block[i][l].coeffs, block[l][j].coeffs).items():
                        v = want.get((a, b), 0) + c
                        if v:
                            want[(a, b)] = v
                        else:
                            want.pop((a, b))
                if H.comul(x) != want or H.eps(x) != (1 if i == j else 0):
                    ok_mb = False
                for dj, xi in enumerate(data.xi):
                    if H.evaluate(xi.coeffs, x) != (1 if (di == dj and i == j) else 0):
                        ok_mb = False
        if trace != d.coeffs or H.eps(d.coeffs) != q:
            ok_mb = False
    out["matrix_coalgebra"] = ok_mb
    all_x = [x.coeffs for block in data.matrix_bases for row in block for x in row]
    out["coalgebra_decomposition"] = SubspaceC(n, all_x).dim == n == len(all_x)
    return out


def _outer(x, y) -> dict:
    return {(i, j): a * b for i, a in enumerate(x) if a for j, b in enumerate(y) if b}


def is_cocommutative(H: FiniteDimHopf, f) -> bool:
    """f(xy) = f(yx) for all basis x, y."""
    n = H.dim
    return all(
        H.evaluate(f, H.mul(H.basis(i), H.basis(j))) == H.evaluate(f, H.mul(H.basis(j), H.basis(i)))
        for i in range(n) for j in range(i)
    )


# -- regular character ---------------------------------------------------------------


def regular_character(H: FiniteDimHopf) -> dict:
    """The regular character |H| t with both decompositions checked."""
    data = irr_data(H)
    pair = integrals(H)
    n = H.dim
    reg = scale(n, pair.t.coeffs)
    direct = H.algebra.regular_traces
    f1 = lincomb([(d, chi.coeffs) for d, chi in zip(data.degrees, data.irr_chars)], n)
    f2 = lincomb([(e, d.coeffs) for e, d in zip(data.dual_degrees, data.dual_irr)], n)
    return {
        "character": Character(DualFunctional(H, reg)),
        "equals_trace": tuple(reg) == tuple(direct),
        "f1": tuple(reg) == f1,
        "f2": scale(n, pair.Lambda.coeffs) == f2,
    }


# -- Fourier -------------------------------------------------------------------------


def fourier_matrix(H: FiniteDimHopf) -> list[list]:
    """Column a is F(b_a) = b_a -> t."""

    def build():
        t = integrals(H).t.coeffs
        cols = [H.hit_dual(H.basis(a), t) for a in range(H.dim)]
        return [[cols[a][k] for a in range(H.dim)] for k in range(H.dim)]

    return memo(H, "fourier", build)


def fourier(H: FiniteDimHopf, a) -> DualFunctional:
    a = a.coeffs if isinstance(a, HopfElement) else tuple(a)
    return DualFunctional(H, H.hit_dual(a, integrals(H).t.coeffs))


def fourier_inverse_matrix(H: FiniteDimHopf) -> list[list]:
    return memo(H, "fourier_inv", lambda: inverse(fourier_matrix(H)))


def fourier_inv(H: FiniteDimHopf, f) -> HopfElement:
    f = f.coeffs if isinstance(f, DualFunctional) else tuple(f)
    return HopfElement(H, tuple(simplify(x) for x in matvec(fourier_inverse_matrix(H), f)))


def fourier_inv_formula(H: FiniteDimHopf, f) -> HopfElement:
    """|H| (f o S) -> Lambda with f -> h = sum f(h_2) h_1."""
    f = f.coeffs if isinstance(f, DualFunctional) else tuple(f)
    lam = integrals(H).Lambda.coeffs
    return HopfElement(H, scale(H.dim, H.hit_alg(H.dual_S(f), lam)))


def verify_fourier(H: FiniteDimHopf) -> dict:
    n = H.dim
    data = irr_data(H)
    out = {}
    out["bijective"] = all(
        fourier_inv(H, fourier(H, H.basis(a))).coeffs == H.basis(a) for a in range(n))
    out["inverse_formula"] = all(
        fourier_inv_formula(H, H.basis(k)) == fourier_inv(H, H.basis(k)) for k in range(n))
    ok = True
    for d, deg in zip(data.dual_irr, data.dual_degrees):
        j = data.index_of_dual(H.S(d.coeffs))
        if fourier(H, d).coeffs != scale(Fraction(1, deg), data.xi[j].coeffs):
            ok = False
    out["dual_irreducibles"] = ok
    Z = H.algebra.center()
    out["center_to_char_ring"] = all(is_cocommutative(H, fourier(H, z).coeffs) for z in Z.basis)
    return out


# -- character ring ---------------------------------------------------------------------


def cocommutative_space(H: FiniteDimHopf) -> SubspaceC:
    """Cocom(H^*) from the linear conditions f(b_i b_j - b_j b_i) = 0."""
    n = H.dim
    ech = Echelon(n)
    for i in range(n):
        for j in range(i):
            row: dict = {}
            for k, c in H.mult[i][j]:
                row[k] = row.get(k, 0) + c
            for k, c in H.mult[j][i]:
                row[k] = row.get(k, 0) - c
            ech.add(row)
    return SubspaceC(n, ech.kernel())


def _char_ring(H: FiniteDimHopf, data: IrrData):
    n = H.dim
    chars = [chi.coeffs for chi in data.irr_chars]
    cols = [list(r) for r in zip(*chars)]
    products = []
    for a in chars:
        row = []
        for b in chars:
            sol = solve_linear(cols, H.dual_mul(a, b))
            if not sol:
                raise VerificationError("character ring is not closed under multiplication")
            row.append(tuple(simplify(x) for x in sol.particular))
        products.append(row)
    unit = solve_linear(cols, H.counit).particular
    ring = Algebra.from_products(products, unit)
    idems = wedderburn_split(ring, H.conductor)
    data.char_ring_algebra = ring
    data.char_ring_coords = idems
    funcs = [lincomb(list(zip(e, chars)), n) for e in idems]
    funcs = [tuple(simplify(x) for x in f) for f in funcs]
    funcs.sort(key=_value_key)
    return ([DualFunctional(H, c) for c in chars], [DualFunctional(H, f) for f in funcs])


def char_ring(H: FiniteDimHopf) -> tuple[list[DualFunctional], list[DualFunctional]]:
    data = irr_data(H)
    return data.char_ring_basis, data.char_ring_idempotents


def verify_char_ring(H: FiniteDimHopf) -> dict:
    data = irr_data(H)
    n = H.dim
    C = cocommutative_space(H)
    span = SubspaceC(n, [chi.coeffs for chi in data.irr_chars])
    Es = [e.coeffs for e in data.char_ring_idempotents]
    total = tuple(0 for _ in range(n))
    for e in Es:
        total = add(total, e)
    return {
        "span_equals_cocom": C == span,
        "closed": all(H.dual_mul(a, b) in C for a in C.basis for b in C.basis),
        "idempotents": len(Es) == data.char_ring_algebra.center().dim and total == H.counit
        and all(H.dual_mul(e, c) == H.dual_mul(c, e) for e in Es for c in C.basis)
        and all(H.dual_mul(e, e) == e for e in Es)
        and all(not any(H.dual_mul(a, b)) for i, a in enumerate(Es) for b in Es[:i]),
    }


def bilinear_form(H: FiniteDimHopf, chi, mu):
    """(chi, mu) = (chi mu)(Lambda)."""
    chi = getattr(chi, "coeffs", chi)
    mu = getattr(mu, "coeffs", mu)
    return simplify(H.evaluate(H.dual_mul(chi, mu), integrals(H).Lambda.coeffs))


def multiplicity(H: FiniteDimHopf, chi, mu):
    """m(chi, mu) = (chi, mu o S)."""
    mu = getattr(mu, "coeffs", mu)
    return bilinear_form(H, chi, H.dual_S(mu))


def form_and_multiplicity(H: FiniteDimHopf, chi, mu) -> tuple:
    return bilinear_form(H, chi, mu), multiplicity(H, chi, mu)


def decompose(H: FiniteDimHopf, f) -> tuple:
    """Coordinates of a class function on Irr(H), via multiplicities."""
    data = irr_data(H)
    return tuple(multiplicity(H, f, chi) for chi in data.irr_chars)


def certified_splittings(H: FiniteDimHopf) -> list[dict]:
    """Re-run the exact post-verification on every idempotent set of H."""
    data = irr_data(H)
    out = []
    for name, alg, idems, zdim in (
        ("H", H.algebra, [e.coeffs for e in data.central_idempotents], H.algebra.center().dim),
        ("H*", dual_algebra(H), [x.coeffs for x in data.xi], dual_algebra(H).center().dim),
    ):
        try:
            verify_central_idempotents(alg, idems, zdim)
            out.append({"algebra": name, "pass": True, "count": len(idems)})
        except VerificationError as exc:
            out.append({"algebra": name, "pass": False, "witness": str(exc)})
    ring = data.char_ring_algebra
    try:
        verify_central_idempotents(ring, data.char_ring_coords, ring.center().dim)
        out.append({"algebra": "C(H)", "pass": verify_char_ring(H)["idempotents"],
                    "count": len(data.char_ring_coords)})
    except VerificationError as exc:
        out.append({"algebra": "C(H)", "pass": False, "witness": str(exc)})
    return out
