"""Sweedler's 4-dimensional Hopf algebra: a Hopf algebra over Q that is not semisimple."""

from hopfcalc.hopf import FiniteDimHopf


def sweedler() -> FiniteDimHopf:
    # basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx
    prod = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    mult = [[tuple(prod[(i, j)].items()) for j in range(4)] for i in range(4)]
    comult = [
        ((0, 0, 1),),
        ((1, 1, 1),),
        ((2, 0, 1), (1, 2, 1)),
        ((3, 1, 1), (0, 3, 1)),
    ]
    counit = [1, 1, 0, 0]
    # columns: S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    S = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    return FiniteDimHopf(mult, [1, 0, 0, 0], comult, counit, S, ["1", "g", "x", "gx"], 1)
