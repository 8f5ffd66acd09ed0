"""Hopf subalgebras, subcoalgebras and ideals; normality and its dual notions."""

from __future__ import annotations

import hashlib
from functools import cached_property

from .algebra import add, scale
from .characters import fourier, integrals, irr_data, memo
from .cyclotomic import scalar_from_json, scalar_to_json, simplify
from .doublerep import commutant, commutant_splitting, sp_apply, ON_DUAL
from .hopf import FiniteDimHopf, dual_hopf, require_axioms
from .linalg import SubspaceC


class NotASubobject(ValueError):
    pass


class VerdictMismatch(AssertionError):
    """Independent criteria disagree; this indicates a bug, never a valid answer."""


def _slices(H: FiniteDimHopf, tensor: dict):
    """Row slices (fixed first index) and column slices of a tensor in H (x) H."""
    n = H.dim
    rows: dict = {}
    cols: dict = {}
    for (j, k), c in tensor.items():
        rows.setdefault(j, [0] * n)[k] = c
        cols.setdefault(k, [0] * n)[j] = c
    return list(rows.values()), list(cols.values())


def tensor_in(H: FiniteDimHopf, tensor: dict, left: SubspaceC | None, right: SubspaceC | None) -> bool:
    """Is the tensor in left (x) right?  ``None`` stands for all of H."""
    rows, cols = _slices(H, tensor)
    return (right is None or all(right.contains(r) for r in rows)) and \
        (left is None or all(left.contains(c) for c in cols))


def adjoint(H: FiniteDimHopf, h, x) -> tuple:
    """h . x = sum h_1 x S(h_2)."""
    out = H.zero()
    for (j, k), c in H.comul(h).items():
        out = add(out, scale(c, H.mul(H.mul(H.basis(j), x), H.S(H.basis(k)))))
    return out


def _label_basis(H: FiniteDimHopf, vectors) -> list[str]:
    labels = []
    for i, v in enumerate(vectors):
        nz = [k for k, x in enumerate(v) if x]
        labels.append(H.labels[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else f"k{i}")
    return labels


class _Sub:
    kind = "subspace"

    def __init__(self, parent: FiniteDimHopf, vectors):
        self.parent = parent
        self.space = vectors if isinstance(vectors, SubspaceC) else SubspaceC(parent.dim, list(vectors))
        self.certificate = self._certify()
        failed = [k for k, v in self.certificate.items() if not v]
        if failed:
            raise NotASubobject(f"not a {self.kind}: fails {', '.join(failed)}")

    @property
    def basis(self) -> list[tuple]:
        return self.space.basis

    @property
    def dim(self) -> int:
        return self.space.dim

    def contains(self, v) -> bool:
        return self.space.contains(v)

    def _certify(self) -> dict:
        raise NotImplementedError

    def to_json(self) -> dict:
        return {"parent": self.parent.digest,
                "basis": [[scalar_to_json(x) for x in v] for v in self.basis]}


class SubcoalgebraSpec(_Sub):
    kind = "subcoalgebra"

    def _certify(self) -> dict:
        H = self.parent
        return {"comultiplication": all(tensor_in(H, H.comul(v), self.space, self.space) for v in self.basis)}


class IdealSpec(_Sub):
    kind = "two-sided ideal"

    def _certify(self) -> dict:
        H = self.parent
        B = [H.basis(i) for i in range(H.dim)]
        return {
            "left": all(self.space.contains(H.mul(b, v)) for b in B for v in self.basis),
            "right": all(self.space.contains(H.mul(v, b)) for b in B for v in self.basis),
        }


class SubHopf(SubcoalgebraSpec):
    """A Hopf subalgebra K of H with its own structure constants."""

    kind = "Hopf subalgebra"

    def _certify(self) -> dict:
        H = self.parent
        S = self.space
        return {
            "unit": S.contains(H.unit),
            "multiplication": all(S.contains(H.mul(u, v)) for u in self.basis for v in self.basis),
            "comultiplication": all(tensor_in(H, H.comul(v), S, S) for v in self.basis),
            "antipode": all(S.contains(H.S(v)) for v in self.basis),
        }

    def coords(self, v) -> tuple:
        return tuple(simplify(x) for x in self.space.coordinates(v))

    def embed(self, c) -> tuple:
        out = self.parent.zero()
        for x, v in zip(c, self.basis):
            if x:
                out = add(out, scale(x, v))
        return out

    def restrict(self, f) -> tuple:
        """Functional on H -> functional on K in K's dual basis."""
        return tuple(simplify(self.parent.evaluate(f, v)) for v in self.basis)

    @cached_property
    def hopf(self) -> FiniteDimHopf:
        H = self.parent
        m = self.dim
        mult = [[tuple((k, c) for k, c in enumerate(self.coords(H.mul(u, v))) if c) for v in self.basis]
                for u in self.basis]
        comult = []
        for v in self.basis:
            terms = {}
            for (j, k), c in H.comul(v).items():
                terms.setdefault(j, [0] * H.dim)[k] = c
            # expand the second leg in K, then the first leg
            second: dict = {}
            for j, row in terms.items():
                for b, x in enumerate(self.coords(row)):
                    if x:
                        second.setdefault(b, [0] * H.dim)[j] = x
            out = []
            for b, col in second.items():
                for a, x in enumerate(self.coords(col)):
                    if x:
                        out.append((a, b, x))
            comult.append(tuple(out))
        counit = [H.eps(v) for v in self.basis]
        Scols = [self.coords(H.S(v)) for v in self.basis]
        S = [[Scols[j][i] for j in range(m)] for i in range(m)]
        K = FiniteDimHopf(mult, self.coords(H.unit), comult, counit, S,
                          _label_basis(H, self.basis), H.conductor, kind="sub", source=H)
        return require_axioms(K)

    def to_json(self) -> dict:
        doc = super().to_json()
        if all(sum(1 for x in v if x) == 1 for v in self.basis):
            doc["subgroup"] = _label_basis(self.parent, self.basis)
        return doc


def sub_from_json(H: FiniteDimHopf, doc: dict) -> SubHopf:
    """Accepts {"basis": [...]} or the {"subgroup": [labels]} shorthand."""
    if "parent" in doc and doc["parent"] != H.digest:
        raise NotASubobject("subalgebra file refers to a different parent algebra")
    if "subgroup" in doc and "basis" not in doc:
        return subgroup_hopf(H, doc["subgroup"])
    return SubHopf(H, [[scalar_from_json(x) for x in v] for v in doc["basis"]])


# -- constructors --------------------------------------------------------------


def subgroup_hopf(H: FiniteDimHopf, generators) -> SubHopf:
    """k<generators> inside a group algebra; generators are labels or indices.

    Without an attached group (e.g. an algebra read from JSON) the generators
    must be grouplike basis vectors, and the closure is taken in H itself.
    """
    n = H.dim
    idx = []
    for g in generators:
        if isinstance(g, int):
            if not 0 <= g < n:
                raise NotASubobject(f"index {g} out of range")
            idx.append(g)
        elif g in H.labels:
            idx.append(H.labels.index(g))
        else:
            raise NotASubobject(f"unknown element {g!r}")
    if H.group is not None and H.kind == "group":
        elems = H.group.closure(idx)
    else:
        for i in idx:
            if H.comul(H.basis(i)) != {(i, i): 1}:
                raise NotASubobject(f"{H.labels[i]} is not grouplike")
        unit = [i for i in range(n) if H.basis(i) == H.unit]
        if not unit:
            raise NotASubobject("the unit is not a basis vector")
        elems, frontier = {unit[0]}, [unit[0]]
        while frontier:
            x = frontier.pop()
            for g in idx:
                y = H.mul(H.basis(x), H.basis(g))
                nz = [i for i, c in enumerate(y) if c]
                if len(nz) != 1 or y[nz[0]] != 1:
                    raise NotASubobject("product of generators is not a basis vector")
                if nz[0] not in elems:
                    elems.add(nz[0])
                    frontier.append(nz[0])
        elems = sorted(elems)
    return SubHopf(H, [H.basis(i) for i in elems])


def trivial_sub(H: FiniteDimHopf) -> SubHopf:
    return SubHopf(H, [H.unit])


def whole(H: FiniteDimHopf) -> SubHopf:
    return SubHopf(H, [H.basis(i) for i in range(H.dim)])


def simple_subcoalgebra(H: FiniteDimHopf, index: int) -> SubcoalgebraSpec:
    block = irr_data(H).matrix_bases[index]
    return SubcoalgebraSpec(H, [x.coeffs for row in block for x in row])


def sum_of_simple(H: FiniteDimHopf, indices) -> SubcoalgebraSpec:
    data = irr_data(H)
    return SubcoalgebraSpec(H, [x.coeffs for d in indices for row in data.matrix_bases[d] for x in row])


# -- coalgebra characters --------------------------------------------------------


def coaction_trace(C: SubcoalgebraSpec) -> tuple:
    """Character of C as a left H-comodule: sum_i (id (x) c_i^*) Delta(c_i)."""
    H = C.parent
    out = [0] * H.dim
    for i, c in enumerate(C.basis):
        rows: dict = {}
        for (j, k), x in H.comul(c).items():
            rows.setdefault(j, [0] * H.dim)[k] = x
        for j, row in rows.items():
            coord = C.space.coordinates(row)[i]
            if coord:
                out[j] = out[j] + coord
    return tuple(simplify(x) for x in out)


def irr_of(C: SubcoalgebraSpec) -> list[int] | None:
    """Indices d with C_d inside C, or None if C is not the sum of those."""
    H = C.parent
    data = irr_data(H)
    inside = [i for i, block in enumerate(data.matrix_bases)
              if all(C.contains(x.coeffs) for row in block for x in row)]
    if sum(data.dual_degrees[i] ** 2 for i in inside) != C.dim:
        return None
    return inside


def coalgebra_character(C: SubcoalgebraSpec) -> tuple:
    """d_C, with the Irr(C) formula cross-checked when it applies."""
    d = coaction_trace(C)
    inside = irr_of(C)
    if inside is not None:
        data = irr_data(C.parent)
        formula = C.parent.zero()
        for i in inside:
            formula = add(formula, scale(data.dual_degrees[i], data.dual_irr[i].coeffs))
        if tuple(formula) != d:
            raise VerdictMismatch("coaction trace differs from sum of eps(d) d")
    return d


def ad_invariance(C: SubcoalgebraSpec) -> dict:
    """Direct adjoint stability versus centrality of d_C."""
    H = C.parent
    direct = all(C.contains(adjoint(H, H.basis(h), x)) for h in range(H.dim) for x in C.basis)
    d = coalgebra_character(C)
    central = H.algebra.is_central(d)
    if direct != central:
        raise VerdictMismatch(f"adjoint stability {direct} but centrality of d_C {central}")
    return {"invariant": direct, "direct": direct, "character_central": central,
            "character": [scalar_to_json(x) for x in d]}


def is_normal(K: SubHopf) -> dict:
    """Three verdicts: adjoint closure, central integral, central d_K."""
    H = K.parent
    direct = all(K.contains(adjoint(H, H.basis(h), x)) for h in range(H.dim) for x in K.basis)
    lam = K.embed(integrals(K.hopf).Lambda.coeffs)
    integral_central = H.algebra.is_central(lam)
    d = coalgebra_character(K)
    character = H.algebra.is_central(d)
    verdicts = {"direct": direct, "integral_central": integral_central, "character_central": character}
    if len(set(verdicts.values())) != 1:
        raise VerdictMismatch(f"normality verdicts disagree: {verdicts}")
    return {"normal": direct, **verdicts}


def module_character(I: IdealSpec) -> tuple:
    """chi_I(h) = trace of left multiplication by h on I."""
    H = I.parent
    vals = []
    for h in range(H.dim):
        tr = 0
        for i, v in enumerate(I.basis):
            c = I.space.coordinates(H.mul(H.basis(h), v))[i]
            if c:
                tr = tr + c
        vals.append(simplify(tr))
    return tuple(vals)


def dual_of(H: FiniteDimHopf) -> FiniteDimHopf:
    return memo(H, "dual_hopf", lambda: dual_hopf(H))


def conormal_test(I: IdealSpec) -> dict:
    """Co-normality three ways: direct, central character, ad-invariant annihilator."""
    H = I.parent
    n = H.dim
    direct = True
    for v in I.basis:
        tensor: dict = {}
        for i, a in enumerate(v):
            if not a:
                continue
            for (p, q, r), c in H.comult2[i].items():
                left = H.mul(H.S(H.basis(r)), H.basis(p))
                for j, x in enumerate(left):
                    if x:
                        key = (j, q)
                        tensor[key] = tensor.get(key, 0) + a * c * x
        tensor = {k: x for k, x in tensor.items() if x}
        if not tensor_in(H, tensor, None, I.space):
            direct = False
            break
    chi = module_character(I)
    central = all(H.dual_mul(chi, H.basis(f)) == H.dual_mul(H.basis(f), chi) for f in range(n))
    Hd = dual_of(H)
    perp = SubcoalgebraSpec(Hd, I.space.annihilator())
    adinv = ad_invariance(perp)["invariant"]
    verdicts = {"direct": direct, "character_central": central, "annihilator_ad_invariant": adinv}
    if len(set(verdicts.values())) != 1:
        raise VerdictMismatch(f"co-normality verdicts disagree: {verdicts}")
    return {"conormal": direct, **verdicts}


def ideal_from_idempotent(H: FiniteDimHopf, e) -> IdealSpec:
    return IdealSpec(H, [H.mul(H.basis(i), e) for i in range(H.dim)])


def left_ideal(H: FiniteDimHopf, x) -> SubspaceC:
    return SubspaceC(H.dim, [H.mul(H.basis(i), x) for i in range(H.dim)])


def idempotent_lemma(H: FiniteDimHopf, idems, central_idems) -> dict:
    """For idempotents x: Hx two-sided iff x central; Hx = He iff x = e (e central)."""
    B = [H.basis(i) for i in range(H.dim)]
    first = []
    for x in idems:
        if H.mul(x, x) != tuple(x):
            raise ValueError("not an idempotent")
        L = left_ideal(H, x)
        two_sided = all(L.contains(H.mul(v, b)) for v in L.basis for b in B)
        first.append(two_sided == H.algebra.is_central(x))
    second = []
    for e in central_idems:
        Le = left_ideal(H, e)
        for x in idems:
            second.append((left_ideal(H, x) == Le) == (tuple(x) == tuple(e)))
    return {"two_sided_iff_central": all(first), "same_ideal_iff_equal": all(second),
            "idempotents": len(first)}


def lemma_idempotents(H: FiniteDimHopf) -> tuple[list, list]:
    """Central primitive idempotents, their pairwise sums, and primitive ones inside each block."""
    from .algebra import primitive_idempotents

    data = irr_data(H)
    es = [e.coeffs for e in data.central_idempotents]
    sums = [tuple(simplify(a + b) for a, b in zip(es[i], es[j])) for i in range(len(es)) for j in range(i)]
    prim = [p for e, d in zip(es, data.degrees) if d > 1
            for p in primitive_idempotents(H.algebra, e, H.conductor)]
    return es + sums + prim, es


# -- F(K) and K-perp ----------------------------------------------------------------


def fourier_image(H: FiniteDimHopf, vectors) -> SubspaceC:
    return SubspaceC(H.dim, [fourier(H, v).coeffs for v in vectors])


def dual_decomposition(K: SubHopf) -> dict:
    H = K.parent
    n = H.dim
    FK = fourier_image(H, K.basis)
    perp = K.space.annihilator()
    inter = FK & perp
    out = {
        "dims": (FK.dim, perp.dim),
        "trivial_intersection": inter.dim == 0,
        "dimensions_add_up": FK.dim + perp.dim == n,
        "sum_is_everything": (FK + perp).dim == n,
    }
    Kh = K.hopf
    out["restriction_compatible"] = all(
        K.restrict(fourier(H, v).coeffs) == fourier(Kh, K.coords(v)).coeffs for v in K.basis)
    inside = irr_of(K)
    data = irr_data(H)
    if inside is not None:
        blocks = SubspaceC(n, [H.dual_mul(H.basis(j), data.xi[d].coeffs) for d in inside for j in range(n)])
        out["fourier_is_sum_of_blocks"] = blocks == FK
    normal = is_normal(K)["normal"]
    if normal:
        comm = commutant(H, ON_DUAL)
        out["summands_commutant_stable"] = all(
            W.contains(_image(M, W, n)) for W in (FK, perp) for M in comm.basis)
        split = commutant_splitting(H, FK, perp)
        out["commutant_splitting"] = split["direct_sum"] and split["closed"] and split["cross_products_zero"]
    out["FK"], out["perp"] = FK, perp
    return out


def _image(M, W: SubspaceC, n: int) -> SubspaceC:
    return SubspaceC(n, [tuple(sp_apply(M, {i: x for i, x in enumerate(w) if x}).get(i, 0)
                               for i in range(n)) for w in W.basis])


def fourier_of_subcoalgebra(C: SubcoalgebraSpec) -> bool:
    """F(C) = sum over d in Irr(C) of H^* xi_{d*}, where d* = S(d)."""
    H = C.parent
    inside = irr_of(C)
    if inside is None:
        return False
    data = irr_data(H)
    duals = [data.index_of_dual(H.S(data.dual_irr[d].coeffs)) for d in inside]
    blocks = SubspaceC(H.dim, [H.dual_mul(H.basis(j), data.xi[d].coeffs)
                               for d in duals for j in range(H.dim)])
    return blocks == fourier_image(H, C.basis)


def digest_of(obj: _Sub) -> str:
    return hashlib.sha256(repr(obj.to_json()).encode()).hexdigest()
