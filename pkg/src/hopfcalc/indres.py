"""Restriction and induction of characters between a Hopf subalgebra K and H."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import lincomb, scale, wedderburn_split
from .characters import (
    Character, _value_key, fourier, integrals, irr_data, is_cocommutative, memo, multiplicity,
)
from .cyclotomic import exact_div, scalar_to_json, simplify
from .doublerep import commutant_splitting, right_mult, sp_apply
from .hopf import DualFunctional, FiniteDimHopf
from .linalg import Echelon, SubspaceC
from .subnormal import SubHopf, adjoint, fourier_image, is_normal


class NotInCharacterRing(ValueError):
    pass


class NotNormalError(ValueError):
    def __init__(self):
        super().__init__("skipped: K not normal")


def _cv(v) -> tuple:
    return tuple(simplify(x) for x in v)


# -- res / ind ------------------------------------------------------------------


def res_char(K: SubHopf, chi) -> Character:
    H = K.parent
    chi = getattr(chi, "coeffs", chi)
    if not is_cocommutative(H, chi):
        raise NotInCharacterRing("restriction needs a class function of H")
    return Character(DualFunctional(K.hopf, K.restrict(chi)))


def ind_vector(K: SubHopf, alpha) -> tuple:
    """Induction by Frobenius reciprocity: sum over chi of m_K(alpha, res chi) chi."""
    H = K.parent
    Kh = K.hopf
    alpha = getattr(alpha, "coeffs", alpha)
    if not is_cocommutative(Kh, alpha):
        raise NotInCharacterRing("induction needs a class function of K")
    data = irr_data(H)
    terms = []
    for chi in data.irr_chars:
        m = multiplicity(Kh, alpha, K.restrict(chi.coeffs))
        terms.append((m, chi.coeffs))
    return _cv(lincomb(terms, H.dim))


def ind_char(K: SubHopf, alpha) -> Character:
    return Character(DualFunctional(K.parent, ind_vector(K, alpha)))


def oracle_ind(K: SubHopf, alpha_index: int) -> tuple:
    """Character of H (x)_K V with V = K f_alpha, divided by alpha(1).

    The tensor product is the quotient of H (x) V by the span of
    hk (x) v - h (x) kv; H acts on the left factor.
    """
    H = K.parent
    Kh = K.hopf
    kd = irr_data(Kh)
    f = kd.central_idempotents[alpha_index].coeffs
    deg = kd.degrees[alpha_index]
    V = SubspaceC(Kh.dim, [Kh.mul(Kh.basis(i), f) for i in range(Kh.dim)])
    vb = V.basis
    m = len(vb)
    n = H.dim
    rel = Echelon(n * m)
    for h in range(n):
        for k in range(Kh.dim):
            hk = H.mul(H.basis(h), K.basis[k])
            for j, v in enumerate(vb):
                row: dict = {}
                for a, x in enumerate(hk):
                    if x:
                        row[a * m + j] = row.get(a * m + j, 0) + x
                for b, x in enumerate(V.coordinates(Kh.mul(Kh.basis(k), v))):
                    if x:
                        key = h * m + b
                        row[key] = row.get(key, 0) - x
                rel.add(row)
    free = [c for c in range(n * m) if c not in rel.rows]
    values = []
    for h in range(n):
        tr = 0
        for c in free:
            a, j = divmod(c, m)
            image: dict = {}
            for b, x in enumerate(H.mul(H.basis(h), H.basis(a))):
                if x:
                    image[b * m + j] = x
            tr = tr + rel.reduce(image).get(c, 0)
        values.append(exact_div(tr, deg))
    return tuple(values)


@dataclass
class IndResData:
    res_matrix: list[list]
    ind_matrix: list[list]
    m_idempotents: list[tuple]
    partitions_H: list[list[int]]
    partitions_K: list[list[int]]
    classes_H: list[list[int]] | None = None
    classes_K: list[list[int]] | None = None
    class_aggregates: list[tuple] | None = None
    c1_basis: list[tuple] | None = None
    c2_basis: list[tuple] | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        def mat(M):
            return [[scalar_to_json(x) for x in r] for r in M]

        return {
            "res_matrix": mat(self.res_matrix),
            "ind_matrix": mat(self.ind_matrix),
            "m_idempotents": mat(self.m_idempotents),
            "A": self.partitions_H,
            "B": self.partitions_K,
            "classes_H": self.classes_H if self.classes_H is not None else "skipped: K not normal",
            "classes_K": self.classes_K if self.classes_K is not None else "skipped: K not normal",
            "c1_basis": mat(self.c1_basis) if self.c1_basis is not None else "skipped: K not normal",
            "c2_basis": mat(self.c2_basis) if self.c2_basis is not None else "skipped: K not normal",
            "notes": self.notes,
        }


def res_matrix(K: SubHopf) -> list[list]:
    """Row chi: multiplicities of each alpha in res chi."""
    H, Kh = K.parent, K.hopf
    hd, kd = irr_data(H), irr_data(Kh)
    return [[multiplicity(Kh, K.restrict(chi.coeffs), a.coeffs) for a in kd.irr_chars]
            for chi in hd.irr_chars]


def ind_matrix(K: SubHopf) -> list[list]:
    """Row alpha: coordinates of ind alpha on Irr(H)."""
    H, Kh = K.parent, K.hopf
    hd, kd = irr_data(H), irr_data(Kh)
    out = []
    for a in kd.irr_chars:
        v = ind_vector(K, a.coeffs)
        out.append([multiplicity(H, v, chi.coeffs) for chi in hd.irr_chars])
    return out


def frobenius_reciprocity(K: SubHopf) -> dict:
    """m_H(ind alpha, chi) = m_K(alpha, res chi) over all Irr pairs; res also exact."""
    H, Kh = K.parent, K.hopf
    hd, kd = irr_data(H), irr_data(Kh)
    R = res_matrix(K)
    I = ind_matrix(K)
    bad = []
    for j, a in enumerate(kd.irr_chars):
        ia = ind_vector(K, a.coeffs)
        for i, chi in enumerate(hd.irr_chars):
            lhs = multiplicity(H, ia, chi.coeffs)
            rhs = multiplicity(Kh, a.coeffs, K.restrict(chi.coeffs))
            if lhs != rhs:
                bad.append((j, i))
    expansion = all(
        lincomb(list(zip(R[i], [a.coeffs for a in kd.irr_chars])), Kh.dim) == K.restrict(chi.coeffs)
        for i, chi in enumerate(hd.irr_chars))
    transpose = all(I[j][i] == R[i][j] for i in range(len(R)) for j in range(len(I)))
    nonneg = all(isinstance(simplify(x), int) and simplify(x) >= 0 for r in R for x in r)
    return {"pass": not bad and expansion and transpose and nonneg, "failures": bad,
            "transpose": transpose, "res_expansion": expansion, "nonnegative_integers": nonneg}


def oracle_agreement(K: SubHopf) -> dict:
    kd = irr_data(K.hopf)
    bad = [j for j, a in enumerate(kd.irr_chars) if oracle_ind(K, j) != ind_vector(K, a.coeffs)]
    return {"pass": not bad, "failures": bad, "count": len(kd.irr_chars)}


def res_is_algebra_map(K: SubHopf) -> bool:
    H, Kh = K.parent, K.hopf
    chars = [c.coeffs for c in irr_data(H).irr_chars]
    unit = K.restrict(H.counit) == Kh.counit
    return unit and all(
        K.restrict(H.dual_mul(a, b)) == _cv(Kh.dual_mul(K.restrict(a), K.restrict(b)))
        for a in chars for b in chars)


# -- the m_i -------------------------------------------------------------------------


def common_idempotents(K: SubHopf) -> tuple[list[tuple], list[list[int]], list[list[int]]]:
    """Primitive idempotents m_i of Z(H) cap K and the partitions A_i, B_i."""

    def build():
        H, Kh = K.parent, K.hopf
        hd, kd = irr_data(H), irr_data(Kh)
        ZK = H.algebra.center() & K.space
        sub = H.algebra.subalgebra(ZK.basis)
        coords = wedderburn_split(sub, H.conductor, commutative=True)
        ms = [_cv(lincomb(list(zip(c, ZK.basis)), H.dim)) for c in coords]
        es = [e.coeffs for e in hd.central_idempotents]
        fs = [K.embed(f.coeffs) for f in kd.central_idempotents]
        out = []
        for m in ms:
            A = [i for i, e in enumerate(es) if H.mul(e, m) == e]
            B = [j for j, f in enumerate(fs) if H.mul(f, m) == f]
            if _cv(lincomb([(1, es[i]) for i in A], H.dim)) != m:
                raise AssertionError("m_i is not the sum of its e_chi")
            if _cv(lincomb([(1, fs[j]) for j in B], H.dim)) != m:
                raise AssertionError("m_i is not the sum of its f_alpha")
            out.append((m, A, B))
        out.sort(key=lambda t: min(t[1]))
        return [t[0] for t in out], [t[1] for t in out], [t[2] for t in out]

    return memo(K, "m_idempotents", build)


def _weighted(Hh: FiniteDimHopf, data, idx) -> tuple:
    return _cv(lincomb([(data.degrees[i], data.irr_chars[i].coeffs) for i in idx], Hh.dim))


def verify_induction_identities(K: SubHopf) -> dict:
    """Prop div1 (B_i reading), Lemma pr on Irr pairs, and both inclusions of incls."""
    H, Kh = K.parent, K.hopf
    hd, kd = irr_data(H), irr_data(Kh)
    n = H.dim
    ratio = Fraction(H.dim, Kh.dim)
    ms, As, Bs = common_idempotents(K)
    div1_res = all(
        K.restrict(_weighted(H, hd, A)) == _cv(scale(ratio, _weighted(Kh, kd, B))) for A, B in zip(As, Bs))
    div1_ind = all(ind_vector(K, _weighted(Kh, kd, B)) == _weighted(H, hd, A) for A, B in zip(As, Bs))
    pr_left = pr_right = True
    for chi in hd.irr_chars:
        r = K.restrict(chi.coeffs)
        for b in kd.irr_chars:
            ib = ind_vector(K, b.coeffs)
            if _cv(H.dual_mul(chi.coeffs, ib)) != ind_vector(K, _cv(Kh.dual_mul(r, b.coeffs))):
                pr_left = False
            if _cv(H.dual_mul(ib, chi.coeffs)) != ind_vector(K, _cv(Kh.dual_mul(b.coeffs, r))):
                pr_right = False
    im = image_of_ind(K)
    eps_up = ind_vector(K, Kh.counit)
    first = all(im.contains(H.dual_mul(eps_up, chi.coeffs)) for chi in hd.irr_chars)
    Cspace = SubspaceC(n, [c.coeffs for c in hd.irr_chars])
    FKC = fourier_image(H, K.basis) & Cspace
    second = im.contains(FKC)
    fm_induced = all(im.contains(fourier(H, m).coeffs) for m in ms)
    fm_basis = SubspaceC(n, [fourier(H, m).coeffs for m in ms]) == FKC
    return {
        "Prop-div1": {"pass": div1_res and div1_ind, "restriction": div1_res, "induction": div1_ind,
                      "note": "sums over B_i on the K side"},
        "Lemma-pr": {"pass": pr_left and pr_right, "left": pr_left, "right": pr_right},
        "Prop-incls": {"pass": first and second and fm_induced and fm_basis,
                       "eps_up_times_CH": first, "FK_cap_CH": second,
                       "F_m_induced": fm_induced, "F_m_basis": fm_basis},
        "regular": ind_vector(K, scale(Kh.dim, integrals(Kh).t.coeffs)) == _cv(scale(n, integrals(H).t.coeffs)),
    }


def image_of_ind(K: SubHopf) -> SubspaceC:
    kd = irr_data(K.hopf)
    return SubspaceC(K.parent.dim, [ind_vector(K, a.coeffs) for a in kd.irr_chars])


# -- normal case -------------------------------------------------------------------


def _require_normal(K: SubHopf) -> None:
    if not is_normal(K)["normal"]:
        raise NotNormalError()


def equivalence_classes(K: SubHopf) -> dict:
    """Classes C_i of Irr(H) under m_K(res chi, res mu) > 0, and matching D_i."""
    _require_normal(K)
    H, Kh = K.parent, K.hopf
    hd, kd = irr_data(H), irr_data(Kh)
    r = len(hd.irr_chars)
    res = [K.restrict(c.coeffs) for c in hd.irr_chars]
    parent = list(range(r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(r):
        for j in range(i):
            if multiplicity(Kh, res[i], res[j]) > 0:
                parent[find(i)] = find(j)
    groups: dict = {}
    for i in range(r):
        groups.setdefault(find(i), []).append(i)
    C = sorted(groups.values(), key=lambda g: (min(hd.degrees[i] for i in g),
                                               min(_value_key(hd.irr_chars[i].coeffs) for i in g)))
    R = res_matrix(K)
    D = [sorted({j for i in g for j, x in enumerate(R[i]) if x}) for g in C]
    normalized = [_cv(scale(Fraction(1, hd.degrees[i]), res[i])) for i in range(r)]
    within = all(normalized[i] == normalized[g[0]] for g in C for i in g)
    across = all(normalized[g[0]] != normalized[h[0]] for a, g in enumerate(C) for h in C[:a])
    disjoint_D = sum(len(d) for d in D) == len(kd.irr_chars) == len(set(j for d in D for j in d))
    ms, As, Bs = common_idempotents(K)
    a_i = [_weighted(H, hd, g) for g in C]
    alpha_i = [_weighted(Kh, kd, d) for d in D]
    return {
        "C": C, "D": D, "a": a_i, "alpha": alpha_i,
        "s": len(ms), "s_prime": len(C),
        "normalized_restriction_equal_within": within,
        "normalized_restriction_differ_across": across,
        "D_partition": disjoint_D,
        "s_equals_s_prime": len(ms) == len(C),
        "C_equals_A": sorted(map(sorted, C)) == sorted(map(sorted, As)),
        "D_equals_B": sorted(map(sorted, D)) == sorted(map(sorted, Bs)),
    }


def normal_formulas_check(K: SubHopf) -> dict:
    """restrform, indform and comb for every chi in C_i and alpha in D_i."""
    cl = equivalence_classes(K)
    H, Kh = K.parent, K.hopf
    hd, kd = irr_data(H), irr_data(Kh)
    ratio = Fraction(H.dim, Kh.dim)
    restr = indf = comb = True
    for g, d, a, al in zip(cl["C"], cl["D"], cl["a"], cl["alpha"]):
        al1 = Kh.evaluate(al, Kh.unit)
        a1 = H.evaluate(a, H.unit)
        for i in g:
            if K.restrict(hd.irr_chars[i].coeffs) != _cv(scale(exact_div(hd.degrees[i], al1), al)):
                restr = False
        for j in d:
            up = ind_vector(K, kd.irr_chars[j].coeffs)
            if up != _cv(scale(exact_div(kd.degrees[j], a1) * ratio, a)):
                indf = False
            if ind_vector(K, K.restrict(up)) != _cv(scale(ratio, up)):
                comb = False
    return {"Eq-restrform": restr, "Eq-indform": indf, "Rem-comb": comb, "ratio": ratio}


def _coefficient_space(H: FiniteDimHopf, conditions, r: int) -> list[tuple]:
    ech = Echelon(r)
    for row in conditions:
        ech.add_dense(row)
    return ech.kernel()


def c1_c2(K: SubHopf) -> dict:
    """C^1 and C^2 as coordinate vectors on Irr(H), plus every stated property."""
    _require_normal(K)
    H = K.parent
    n = H.dim
    hd = irr_data(H)
    chars = [c.coeffs for c in hd.irr_chars]
    r = len(chars)
    Schars = [H.dual_S(c) for c in chars]
    perp = K.space.annihilator().basis

    def transfer(x, s):
        """sum x_1 chi(S x_2) for chi with S(chi) = s."""
        out = [0] * n
        for (j, k), c in H.comul(x).items():
            if s[k]:
                out[j] = out[j] + c * s[k]
        return out

    cond1 = []
    for a in range(n):
        vecs = [transfer(H.basis(a), s) for s in Schars]
        for g in perp:
            cond1.append([H.evaluate(g, v) for v in vecs])
    c1 = _coefficient_space(H, cond1, r)
    cond2 = []
    for x in K.basis:
        vecs = [transfer(x, s) for s in Schars]
        for k in range(n):
            cond2.append([v[k] for v in vecs])
    c2 = _coefficient_space(H, cond2, r)

    def func(c):
        return _cv(lincomb(list(zip(c, chars)), n))

    F1 = [func(c) for c in c1]
    F2 = [func(c) for c in c2]
    S1, S2 = SubspaceC(n, F1), SubspaceC(n, F2)
    direct = len(c1) + len(c2) == r and (S1 + S2).dim == r
    orth = all(not any(H.dual_mul(a, b)) for a in F1 for b in F2)
    closed = all(S1.contains(H.dual_mul(a, b)) for a in F1 for b in F1) and \
        all(S2.contains(H.dual_mul(a, b)) for a in F2 for b in F2)
    # C^2 = C(H) cap K-perp = ker res
    Cspace = SubspaceC(n, chars)
    ker_res = _coefficient_space(H, [[H.evaluate(c, v) for c in chars] for v in K.basis], r)
    c2_is_ker = S2 == SubspaceC(n, [func(c) for c in ker_res]) == (Cspace & K.space.annihilator())
    # C^1 matches the commutant maps killing K-perp
    split = commutant_splitting(H, fourier_image(H, K.basis), K.space.annihilator())
    kills = all(not any(sp_apply(right_mult(H, H.dual_S(f)), {i: x for i, x in enumerate(g) if x})
                        for g in perp) for f in F1)
    return {
        "c1": c1, "c2": c2, "c1_functionals": F1, "c2_functionals": F2,
        "dims": (len(c1), len(c2)),
        "direct_sum": direct, "orthogonal": orth, "subalgebras": closed,
        "c2_equals_ker_res": c2_is_ker,
        "c1_equals_end_K": kills and split["dim_on_first"] == len(c1) and split["dim_on_second"] == len(c2),
    }


def lemma_formula(K: SubHopf) -> bool:
    """eps up = |H|/|K| times the sum of xi_d over d in Irr(K^*)."""
    _require_normal(K)
    H, Kh = K.parent, K.hopf
    hd = irr_data(H)
    inside = [i for i, d in enumerate(hd.dual_irr) if K.contains(d.coeffs)]
    total = lincomb([(1, hd.xi[i].coeffs) for i in inside], H.dim)
    return ind_vector(K, Kh.counit) == _cv(scale(Fraction(H.dim, Kh.dim), total))


def remark_onb(K: SubHopf, c1_space: SubspaceC) -> bool:
    """chi in C^1 iff chi vanishes on x^d_ij for d outside Irr(K^*)."""
    H = K.parent
    hd = irr_data(H)
    chars = [c.coeffs for c in hd.irr_chars]
    rows = []
    for d, block in zip(hd.dual_irr, hd.matrix_bases):
        if K.contains(d.coeffs):
            continue
        for row in block:
            for x in row:
                rows.append([H.evaluate(c, x.coeffs) for c in chars])
    coeffs = _coefficient_space(H, rows, len(chars))
    return SubspaceC(H.dim, [_cv(lincomb(list(zip(c, chars)), H.dim)) for c in coeffs]) == c1_space


def image_of_induction(K: SubHopf) -> dict:
    """Four independent descriptions of im(ind), compared pairwise."""
    _require_normal(K)
    H, Kh = K.parent, K.hopf
    n = H.dim
    hd = irr_data(H)
    im = image_of_ind(K)
    eps_up = ind_vector(K, Kh.counit)
    epsC = SubspaceC(n, [H.dual_mul(eps_up, c.coeffs) for c in hd.irr_chars])
    Cspace = SubspaceC(n, [c.coeffs for c in hd.irr_chars])
    FKC = fourier_image(H, K.basis) & Cspace
    cc = c1_c2(K)
    C1 = SubspaceC(n, cc["c1_functionals"])
    spaces = {"ind": im, "eps_up_C": epsC, "FK_cap_C": FKC, "C1": C1}
    names = list(spaces)
    equal = all(spaces[a] == spaces[b] for i, a in enumerate(names) for b in names[:i])
    return {
        "dim": im.dim, "four_way_equal": equal, "dims": {k: v.dim for k, v in spaces.items()},
        "Lemma-formula": lemma_formula(K), "Rem-onb": remark_onb(K, C1), "eps_up": eps_up,
    }


def image_of_restriction(K: SubHopf) -> dict:
    """Ad-invariant functionals on K versus span(res Irr(H)), and the Corollary."""
    _require_normal(K)
    H, Kh = K.parent, K.hopf
    hd = irr_data(H)
    m = Kh.dim
    rows = []
    for a in range(H.dim):
        ea = H.counit[a]
        for j, x in enumerate(K.basis):
            ad = K.coords(adjoint(H, H.basis(a), x))
            row = list(ad)
            row[j] = row[j] - ea
            rows.append(row)
    inv = SubspaceC(m, _coefficient_space(H, rows, m))
    res_span = SubspaceC(m, [K.restrict(c.coeffs) for c in hd.irr_chars])
    cc = c1_c2(K)
    F1 = cc["c1_functionals"]
    restricted = [K.restrict(f) for f in F1]
    injective = SubspaceC(m, restricted).dim == len(F1)
    onto = SubspaceC(m, restricted) == res_span
    mult = all(K.restrict(H.dual_mul(a, b)) == _cv(Kh.dual_mul(K.restrict(a), K.restrict(b)))
               for a in F1 for b in F1)
    return {"dim": inv.dim, "equal": inv == res_span, "res_injective_on_C1": injective,
            "res_onto_image": onto, "multiplicative": mult}


def indres_data(K: SubHopf) -> IndResData:
    ms, As, Bs = common_idempotents(K)
    data = IndResData(res_matrix(K), ind_matrix(K), ms, As, Bs)
    data.notes.append("Prop-div1 is evaluated with the K-side sums over B_i")
    if is_normal(K)["normal"]:
        cl = equivalence_classes(K)
        data.classes_H, data.classes_K = cl["C"], cl["D"]
        data.class_aggregates = list(zip(cl["a"], cl["alpha"]))
        cc = c1_c2(K)
        data.c1_basis, data.c2_basis = cc["c1"], cc["c2"]
    return data
