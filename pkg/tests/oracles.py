"""Textbook formulas used as independent oracles (no hopfcalc code involved)."""

from fractions import Fraction


def parse_cycles(label: str, n: int) -> tuple:
    """'(12)(34)' -> permutation tuple on 0..n-1."""
    perm = list(range(n))
    for chunk in label.replace(")", " ").replace("(", " ").split():
        pts = [int(c) - 1 for c in chunk]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def fixed_points(p) -> int:
    return sum(1 for i, x in enumerate(p) if i == x)


def sign(p) -> int:
    seen, s = set(), 1
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        s *= (-1) ** (length - 1)
    return s


def s3_table(labels):
    """Trivial, sign and standard character of S3 from permutation data."""
    perms = [parse_cycles(l, 3) for l in labels]
    return [
        [1] * 6,
        [sign(p) for p in perms],
        [fixed_points(p) - 1 for p in perms],
    ]


def induced_class_function(G, sub, alpha):
    """ind alpha (g) = 1/|K| sum over x with x g x^-1 in K of alpha(x g x^-1)."""
    pos = {k: i for i, k in enumerate(sub)}
    out = []
    for g in range(G.order):
        total = 0
        for x in range(G.order):
            y = G.conjugate(x, g)
            if y in pos:
                total += alpha[pos[y]]
        out.append(total * Fraction(1, len(sub)))
    return out
