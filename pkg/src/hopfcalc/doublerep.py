"""The induced D(H)-module A_0 realized on H^* and on H, and its commutant.

Action matrices are sparse: a matrix is a list of columns, each column a
``dict`` row -> value without zero entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra
from .characters import dual_algebra, fourier_matrix, irr_data, memo
from .cyclotomic import simplify
from .hopf import FiniteDimHopf
from .linalg import Echelon, SubspaceC

ON_DUAL = "on_dual"
ON_ALGEBRA = "on_algebra"


# -- sparse matrices ----------------------------------------------------------


def _acc(d: dict, k, v) -> None:
    nv = d.get(k, 0) + v
    if nv:
        d[k] = nv
    else:
        d.pop(k, None)


def sp_apply(M: list[dict], v: dict) -> dict:
    out: dict = {}
    for j, x in v.items():
        for i, a in M[j].items():
            _acc(out, i, a * x)
    return out


def sp_compose(A: list[dict], B: list[dict]) -> list[dict]:
    """A o B."""
    return [sp_apply(A, col) for col in B]


def sp_combine(terms, n: int) -> list[dict]:
    out = [dict() for _ in range(n)]
    for c, M in terms:
        if c:
            for j, col in enumerate(M):
                for i, a in col.items():
                    _acc(out[j], i, c * a)
    return out


def sp_identity(n: int) -> list[dict]:
    return [{j: 1} for j in range(n)]


def sp_from_dense_cols(cols) -> list[dict]:
    return [{i: simplify(x) for i, x in enumerate(c) if x} for c in cols]


def sp_to_dense(M: list[dict]) -> list[list]:
    n = len(M)
    out = [[0] * n for _ in range(n)]
    for j, col in enumerate(M):
        for i, a in col.items():
            out[i][j] = a
    return out


def _vec(d: dict, n: int) -> tuple:
    return tuple(d.get(i, 0) for i in range(n))


def _dict(v) -> dict:
    return {i: x for i, x in enumerate(v) if x}


# -- actions ------------------------------------------------------------------


@dataclass
class DoubleAction:
    """Matrices of b_a (from H) and b_f^* (from H^*) acting on the carrier."""

    carrier: str
    hopf: FiniteDimHopf
    alg: list[list[dict]]
    dual: list[list[dict]]

    @property
    def dim(self) -> int:
        return self.hopf.dim

    def act_alg(self, a, v) -> tuple:
        M = sp_combine([(c, self.alg[i]) for i, c in enumerate(a) if c], self.dim)
        return _vec(sp_apply(M, _dict(v)), self.dim)

    def act_dual(self, f, v) -> tuple:
        M = sp_combine([(c, self.dual[i]) for i, c in enumerate(f) if c], self.dim)
        return _vec(sp_apply(M, _dict(v)), self.dim)


def _action_on_dual(H: FiniteDimHopf) -> DoubleAction:
    n = H.dim
    B = [H.basis(i) for i in range(n)]
    Sinv = [H.S_inv(b) for b in B]
    # mid[q][p][m] = S^-1(b_q) b_m b_p
    cache: dict = {}

    def mid(q, p):
        if (q, p) not in cache:
            cache[(q, p)] = [H.mul(H.mul(Sinv[q], B[m]), B[p]) for m in range(n)]
        return cache[(q, p)]

    alg = []
    for a in range(n):
        cols = [dict() for _ in range(n)]
        for p, q, c in H.comult[a]:
            rows = mid(q, p)
            for m in range(n):
                for k, x in enumerate(rows[m]):
                    if x:
                        _acc(cols[k], m, c * x)
        alg.append(cols)
    dual = []
    for g in range(n):
        cols = [dict() for _ in range(n)]
        for k in range(n):
            for i, j, c in H.comult[k]:
                if i == g:
                    _acc(cols[j], k, c)
        dual.append(cols)
    return DoubleAction(ON_DUAL, H, alg, dual)


def _action_on_algebra(H: FiniteDimHopf) -> DoubleAction:
    n = H.dim
    B = [H.basis(i) for i in range(n)]
    SB = [H.S(b) for b in B]
    Sinv = [H.S_inv(b) for b in B]
    alg = []
    for x in range(n):
        cols = []
        for a in range(n):
            col: dict = {}
            for p, q, c in H.comult[x]:
                for k, y in enumerate(H.mul(H.mul(B[p], B[a]), SB[q])):
                    if y:
                        _acc(col, k, c * y)
            cols.append(col)
        alg.append(cols)
    dual = []
    for g in range(n):
        cols = []
        for x in range(n):
            col: dict = {}
            for p, q, c in H.comult[x]:
                w = Sinv[p][g]
                if w:
                    _acc(col, q, c * w)
            cols.append(col)
        dual.append(cols)
    return DoubleAction(ON_ALGEBRA, H, alg, dual)


class RelationError(AssertionError):
    pass


def straightening_failures(act: DoubleAction, limit: int = 1):
    """Basis pairs (h, f) where rho(h) rho(f) != sum rho(h_1 -> f <- S^-1 h_3) rho(h_2).

    Together with the two module checks, this is the defining relation of
    D(H) on generators.  Returns at most ``limit`` witnesses.
    """
    H = act.hopf
    n = H.dim
    B = [H.basis(i) for i in range(n)]
    Sinv = [H.S_inv(b) for b in B]
    bad = []
    # functional h1 -> b_k^* <- S^-1 h3 at b_m equals [S^-1(b_r) b_m b_p]_k
    for h in range(n):
        terms = list(H.comult2[h].items())
        mids = {(p, r): [H.mul(H.mul(Sinv[r], B[m]), B[p]) for m in range(n)] for (p, _, r), _ in terms}
        for k in range(n):
            lhs = sp_compose(act.alg[h], act.dual[k])
            rhs_terms = []
            for (p, q, r), c in terms:
                rows = mids[(p, r)]
                fvec = [rows[m][k] for m in range(n)]
                F = sp_combine([(x, act.dual[m]) for m, x in enumerate(fvec) if x], n)
                rhs_terms.append((c, sp_compose(F, act.alg[q])))
            if lhs != sp_combine(rhs_terms, n):
                bad.append((h, k))
                if len(bad) >= limit:
                    return bad
    return bad


def module_failures(act: DoubleAction) -> list:
    H = act.hopf
    n = H.dim
    bad = []
    dual = dual_algebra(H)
    for name, mats, A in (("H", act.alg, H.algebra), ("H*", act.dual, dual)):
        unit = sp_combine([(c, mats[i]) for i, c in enumerate(A.unit) if c], n)
        if unit != sp_identity(n):
            bad.append((name, "unit"))
        for i in range(n):
            for j in range(n):
                prod = sp_combine([(c, mats[k]) for k, c in A.table[i][j]], n)
                if sp_compose(mats[i], mats[j]) != prod:
                    bad.append((name, i, j))
                    break
    return bad


def a0_actions(H: FiniteDimHopf, *, verify: bool = True) -> tuple[DoubleAction, DoubleAction]:
    """A_0 realized on H^* and on H; both pass the D(H) relation checks."""

    def build():
        on_dual, on_alg = _action_on_dual(H), _action_on_algebra(H)
        if verify:
            for act in (on_dual, on_alg):
                bad = module_failures(act) or straightening_failures(act)
                if bad:
                    raise RelationError(f"{act.carrier} action violates the double relations at {bad}")
        return on_dual, on_alg

    return memo(H, f"a0:{verify}", build)


def action(H: FiniteDimHopf, carrier: str) -> DoubleAction:
    on_dual, on_alg = a0_actions(H)
    if carrier == ON_DUAL:
        return on_dual
    if carrier == ON_ALGEBRA:
        return on_alg
    raise ValueError(f"unknown carrier {carrier!r}")


# -- Fourier equivariance ------------------------------------------------------


def fourier_equivariance(H: FiniteDimHopf) -> dict:
    """F(a.h) = a.F(h) and F(f.h) = f.F(h) on all basis pairs."""
    on_dual, on_alg = a0_actions(H)
    n = H.dim
    Fm = fourier_matrix(H)
    Fcols = sp_from_dense_cols([[Fm[k][a] for k in range(n)] for a in range(n)])
    failures = []
    count = 0
    for fam, src, dst in (("H", on_alg.alg, on_dual.alg), ("H*", on_alg.dual, on_dual.dual)):
        for g in range(n):
            left = sp_compose(Fcols, src[g])
            right = sp_compose(dst[g], Fcols)
            for h in range(n):
                count += 1
                if left[h] != right[h]:
                    failures.append({"family": fam, "generator": g, "vector": h})
    return {"equations": count, "failures": failures, "max_deviation": 0 if not failures else "nonzero",
            "pass": not failures}


# -- commutant ------------------------------------------------------------------


def generating_set(A: Algebra) -> list[int]:
    """Basis indices generating A as an algebra (greedy)."""
    n = A.dim
    gens: list[int] = []
    ech = Echelon(n)
    elems = []

    def grow(new):
        frontier = [new]
        while frontier:
            x = frontier.pop()
            if not ech.add_dense(x):
                continue
            elems.append(x)
            for g in gens:
                frontier.append(A.mul(x, A.basis(g)))
                frontier.append(A.mul(A.basis(g), x))

    grow(A.unit)
    for i in range(n):
        if ech.reduce({i: 1}):
            gens.append(i)
            snapshot = list(elems)
            grow(A.basis(i))
            for x in snapshot:
                grow(A.mul(x, A.basis(i)))
                grow(A.mul(A.basis(i), x))
        if ech.rank == n:
            break
    return gens


@dataclass
class CommutantBasis:
    carrier: str
    hopf: FiniteDimHopf
    basis: list[list[dict]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, M: list[dict]) -> bool:
        n = self.hopf.dim
        space = SubspaceC(n * n, [_flatten(B, n) for B in self.basis])
        return space.contains(_flatten(M, n))


def _flatten(M: list[dict], n: int) -> tuple:
    v = [0] * (n * n)
    for j, col in enumerate(M):
        for i, a in col.items():
            v[i * n + j] = a
    return tuple(v)


def _unflatten(v, n: int) -> list[dict]:
    return [{i: v[i * n + j] for i in range(n) if v[i * n + j]} for j in range(n)]


def commuting_matrices(mats: list[list[dict]], n: int) -> list[list[dict]]:
    """Basis of {X : X M = M X for every M}, X unknown with index r*n + c."""
    ech = Echelon(n * n)
    for M in mats:
        rows_of: list[dict] = [dict() for _ in range(n)]
        for c, col in enumerate(M):
            for r, a in col.items():
                rows_of[r][c] = a
        for r in range(n):
            for c in range(n):
                eq: dict = {}
                for k, a in M[c].items():      # (X M)_{rc} = sum_k X_{rk} M_{kc}
                    _acc(eq, r * n + k, a)
                for k, a in rows_of[r].items():  # (M X)_{rc} = sum_k M_{rk} X_{kc}
                    _acc(eq, k * n + c, -a)
                if eq:
                    ech.add(eq)
    return [_unflatten(v, n) for v in ech.kernel()]


def commutant(H: FiniteDimHopf, carrier: str = ON_DUAL) -> CommutantBasis:
    """All linear maps of the carrier commuting with the D(H)-action."""

    def build():
        act = action(H, carrier)
        gens_h = generating_set(H.algebra)
        gens_d = generating_set(dual_algebra(H))
        mats = [act.alg[g] for g in gens_h] + [act.dual[g] for g in gens_d]
        return CommutantBasis(carrier, H, commuting_matrices(mats, H.dim))

    return memo(H, f"commutant:{carrier}", build)


def right_mult(H: FiniteDimHopf, g) -> list[dict]:
    """R_g : f -> f g on H^*."""
    return sp_from_dense_cols([H.dual_mul(H.basis(j), g) for j in range(H.dim)])


def hit_operator(H: FiniteDimHopf, g) -> list[dict]:
    """h -> (g -> h) on H."""
    return sp_from_dense_cols([H.hit_alg(g, H.basis(j)) for j in range(H.dim)])


def verify_commutant(H: FiniteDimHopf) -> dict:
    """Dimension count and the ring maps chi -> R_{S chi} and chi -> (S chi ->)."""
    data = irr_data(H)
    n = H.dim
    chars = [chi.coeffs for chi in data.irr_chars]
    dimC = len(chars)
    out = {}
    for carrier, op in ((ON_DUAL, right_mult), (ON_ALGEBRA, hit_operator)):
        comm = commutant(H, carrier)
        images = [op(H, H.dual_S(c)) for c in chars]
        member = all(comm.contains(M) for M in images)
        mult_ok = True
        for i, a in enumerate(chars):
            for j, b in enumerate(chars):
                prod = op(H, H.dual_S(H.dual_mul(a, b)))
                # R_{S(ab)} = R_{Sa} R_{Sb}; (S(ab) ->) = (Sb ->)(Sa ->)
                comp = sp_compose(images[i], images[j]) if carrier == ON_DUAL else \
                    sp_compose(images[j], images[i])
                if prod != comp:
                    mult_ok = False
        eps_ok = op(H, H.dual_S(H.counit)) == sp_identity(n)
        out[carrier] = {
            "dim": comm.dim, "dim_char_ring": dimC, "dim_match": comm.dim == dimC,
            "contains_images": member, "multiplicative": mult_ok, "identity": eps_ok,
        }
    return out


# -- isotypic components ---------------------------------------------------------


def isotypic_components(H: FiniteDimHopf) -> list[SubspaceC]:
    """H^* E_i for the central primitive idempotents E_i of C(H)."""
    data = irr_data(H)
    n = H.dim
    comps = []
    for E in data.char_ring_idempotents:
        comps.append(SubspaceC(n, [H.dual_mul(H.basis(j), E.coeffs) for j in range(n)]))
    return comps


def algebra_isotypic_components(H: FiniteDimHopf) -> list[SubspaceC]:
    """E_i -> H, the matching components of the carrier H."""
    data = irr_data(H)
    n = H.dim
    return [SubspaceC(n, [H.hit_alg(E.coeffs, H.basis(j)) for j in range(n)])
            for E in data.char_ring_idempotents]


def _image(M: list[dict], W: SubspaceC, n: int) -> SubspaceC:
    return SubspaceC(n, [_vec(sp_apply(M, _dict(w)), n) for w in W.basis])


def verify_isotypic(H: FiniteDimHopf) -> dict:
    n = H.dim
    comps = isotypic_components(H)
    act = action(H, ON_DUAL)
    comm = commutant(H, ON_DUAL)
    total = SubspaceC(n, [v for W in comps for v in W.basis])
    direct = sum(W.dim for W in comps) == n and total.dim == n
    gens = act.alg + act.dual
    stable = all(W.contains(_image(M, W, n)) for W in comps for M in gens)
    comm_stable = all(W.contains(_image(M, W, n)) for W in comps for M in comm.basis)
    # each component is the image of an idempotent of the commutant
    data = irr_data(H)
    images = all(
        comm.contains(right_mult(H, E.coeffs)) and
        _image(right_mult(H, E.coeffs), SubspaceC.full(n), n) == W
        for E, W in zip(data.char_ring_idempotents, comps)
    )
    Fm = fourier_matrix(H)
    Fcols = sp_from_dense_cols([[Fm[k][a] for k in range(n)] for a in range(n)])
    alg_comps = algebra_isotypic_components(H)
    fourier_match = all(any(_image(Fcols, V, n) == W for W in comps) for V in alg_comps) and \
        sorted(V.dim for V in alg_comps) == sorted(W.dim for W in comps)
    return {
        "dims": sorted(W.dim for W in comps),
        "direct_sum": direct,
        "stable": stable,
        "commutant_stable": comm_stable,
        "commutant_images": images,
        "fourier_matches_components": fourier_match,
    }


def commutant_splitting(H: FiniteDimHopf, M1: SubspaceC, M2: SubspaceC) -> dict:
    """End(M1 + M2) = End(M1) + End(M2) inside the commutant on H^*.

    Returns the dimensions of the maps vanishing on M2 (resp. M1), and
    checks that together they span the commutant and that both pieces are
    closed under composition with zero cross products.
    """
    n = H.dim
    comm = commutant(H, ON_DUAL)
    vecs = [_flatten(B, n) for B in comm.basis]

    def vanishing_on(W: SubspaceC):
        # coefficients c with (sum c_i B_i) w = 0 for all w in W
        rows = []
        for w in W.basis:
            images = [_vec(sp_apply(B, _dict(w)), n) for B in comm.basis]
            for r in range(n):
                rows.append([img[r] for img in images])
        ech = Echelon(len(comm.basis))
        for row in rows:
            ech.add_dense(row)
        coeffs = ech.kernel()
        mats = []
        for c in coeffs:
            v = [0] * (n * n)
            for ci, vi in zip(c, vecs):
                if ci:
                    v = [a + ci * b for a, b in zip(v, vi)]
            mats.append(_unflatten(v, n))
        return mats

    on1 = vanishing_on(M2)   # endomorphisms living on M1
    on2 = vanishing_on(M1)
    span = SubspaceC(n * n, [_flatten(M, n) for M in on1 + on2])

    def closed(mats):
        sp = SubspaceC(n * n, [_flatten(M, n) for M in mats])
        return all(sp.contains(_flatten(sp_compose(A, B), n)) for A in mats for B in mats)

    cross_zero = all(not any(col for col in sp_compose(A, B)) for A in on1 for B in on2) and \
        all(not any(col for col in sp_compose(B, A)) for A in on1 for B in on2)
    return {
        "dim_commutant": comm.dim, "dim_on_first": len(on1), "dim_on_second": len(on2),
        "direct_sum": len(on1) + len(on2) == comm.dim == span.dim,
        "closed": closed(on1) and closed(on2), "cross_products_zero": cross_zero,
    }
