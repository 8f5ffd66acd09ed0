"""Small finite groups given by Cayley tables, and the shipped catalog."""

from __future__ import annotations

from functools import cached_property
from itertools import product
from math import lcm
from typing import Sequence


class GroupTableError(ValueError):
    """The multiplication table does not define a group."""

    def __init__(self, detail: str):
        super().__init__(f"not a group: {detail}")


class FiniteGroup:
    """Group on {0..n-1} with ``table[i][j]`` the index of g_i g_j."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        n = len(table)
        self.order = n
        self.table = [list(r) for r in table]
        self.labels = list(labels) if labels else [f"g{i}" for i in range(n)]
        if len(self.labels) != n or any(len(r) != n for r in self.table):
            raise GroupTableError("table is not square or labels have the wrong length")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise GroupTableError("entry out of range")
        for a, b, c in product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise GroupTableError(
                    f"non-associative triple ({self.labels[a]}, {self.labels[b]}, {self.labels[c]})"
                )
        ids = [e for e in range(n) if all(self.table[e][x] == x == self.table[x][e] for x in range(n))]
        if not ids:
            raise GroupTableError("no identity element")
        self.identity = ids[0]
        self.inverse = []
        for a in range(n):
            inv = [b for b in range(n) if self.table[a][b] == self.identity]
            if not inv or self.table[inv[0]][a] != self.identity:
                raise GroupTableError(f"{self.labels[a]} has no inverse")
            self.inverse.append(inv[0])

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown group element {label!r}") from None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        return lcm(*(self.element_order(a) for a in range(self.order)))

    def conjugate(self, g: int, x: int) -> int:
        return self.table[self.table[g][x]][self.inverse[g]]

    @cached_property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for x in range(self.order):
            if x in seen:
                continue
            cls = tuple(sorted({self.conjugate(g, x) for g in range(self.order)}))
            seen.update(cls)
            out.append(cls)
        return out

    def closure(self, gens: Sequence[int]) -> tuple[int, ...]:
        elems = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in elems:
                    elems.add(y)
                    frontier.append(y)
        return tuple(sorted(elems))

    @cached_property
    def subgroups(self) -> list[tuple[int, ...]]:
        """All subgroups (every group in the catalog is 2-generated)."""
        subs = {self.closure([a, b]) for a in range(self.order) for b in range(a, self.order)}
        return sorted(subs, key=lambda s: (len(s), s))

    def is_subgroup(self, elems: Sequence[int]) -> bool:
        s = set(elems)
        return self.identity in s and all(self.table[a][b] in s for a in s for b in s)

    def is_normal_subgroup(self, elems: Sequence[int]) -> bool:
        s = set(elems)
        return self.is_subgroup(s) and all(self.conjugate(g, x) in s for g in range(self.order) for x in s)


# -- constructors ------------------------------------------------------------


def _perm_label(p: tuple[int, ...]) -> str:
    """Cycle notation on 1..n, e.g. '(12)(34)'."""
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "()"


def _compose(p, q):
    # (p q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(q)))


def permutation_group(gens: Sequence[Sequence[int]], order_key=None) -> FiniteGroup:
    """Group generated by permutations of 0..n-1, labeled in cycle notation."""
    n = len(gens[0])
    e = tuple(range(n))
    elems, frontier = {e}, [e]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = _compose(x, tuple(g))
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    elems = sorted(elems, key=order_key or (lambda p: (p != e, _perm_order(p), _perm_label(p))))
    pos = {p: i for i, p in enumerate(elems)}
    table = [[pos[_compose(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, [_perm_label(p) for p in elems])


def _perm_order(p) -> int:
    k, x, e = 1, p, tuple(range(len(p)))
    while x != e:
        x = _compose(x, p)
        k += 1
    return k


def cyclic_group(n: int) -> FiniteGroup:
    labels = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], labels[:n])


def klein_four() -> FiniteGroup:
    return permutation_group([(1, 0, 3, 2), (2, 3, 0, 1)])


def symmetric_group_3() -> FiniteGroup:
    order = ["()", "(12)", "(13)", "(23)", "(123)", "(132)"]
    return permutation_group([(1, 0, 2), (1, 2, 0)], order_key=lambda p: order.index(_perm_label(p)))


def dihedral_group_4() -> FiniteGroup:
    """Symmetries of the square with vertices 1..4, inside S4."""
    return permutation_group([(1, 2, 3, 0), (2, 1, 0, 3)])


def quaternion_group() -> FiniteGroup:
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    unit = {"1": (1, "1"), "i": (1, "i"), "j": (1, "j"), "k": (1, "k")}
    prod = {
        ("1", "1"): (1, "1"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    for u in "ijk":
        prod[("1", u)] = prod[(u, "1")] = (1, u)

    def split(lab):
        return (-1, lab[1:]) if lab.startswith("-") else unit[lab]

    def join(sign, u):
        return u if sign == 1 else ("-" + u if u != "1" else "-1")

    table = []
    for a in labels:
        sa, ua = split(a)
        row = []
        for b in labels:
            sb, ub = split(b)
            s, u = prod[(ua, ub)]
            row.append(labels.index(join(sa * sb * s, u)))
        table.append(row)
    return FiniteGroup(table, labels)


GROUPS = {
    **{f"C{n}": (lambda n=n: cyclic_group(n)) for n in range(2, 9)},
    "V4": klein_four,
    "S3": symmetric_group_3,
    "D4": dihedral_group_4,
    "Q8": quaternion_group,
}


def get_group(name: str) -> FiniteGroup:
    try:
        return GROUPS[name]()
    except KeyError:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(GROUPS)}") from None
