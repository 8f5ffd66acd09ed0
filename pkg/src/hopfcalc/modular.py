"""Roots in Q(zeta_N) of polynomials with cyclotomic coefficients.

The engine reduces modulo a prime ideal (p, zeta - r) with p = 1 (mod N),
finds the roots in F_p, Hensel-lifts each simple root to p^(2^k), and
recovers an element of Q(zeta_N) from the p-adic approximation by lattice
reduction.  Nothing returned here is trusted: every candidate is substituted
back into the polynomial with exact arithmetic.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import lcm

from sympy import ZZ, factorint, isprime
from sympy.polys.galoistools import gf_factor_sqf, gf_gcd, gf_diff
from sympy.polys.matrices import DomainMatrix

from .cyclotomic import CycNumber, exact_div, cyclotomic_poly, phi, simplify

log = logging.getLogger(__name__)

START_PRIME = 1 << 20
MAX_BITS = 1024


def _prime_factors(n: int) -> list[int]:
    return list(factorint(n)) if n > 1 else []


def primes_1_mod(n: int, start: int = START_PRIME):
    """Primes p = 1 (mod n), increasing from ``start``."""
    p = start - (start % n) + 1
    while True:
        if p > 2 and isprime(p):
            yield p
        p += n


def root_of_unity_mod(n: int, p: int) -> int:
    """A primitive n-th root of unity modulo p (requires n | p - 1)."""
    qs = _prime_factors(n)
    for a in range(2, p):
        r = pow(a, (p - 1) // n, p)
        if all(pow(r, n // q, p) != 1 for q in qs):
            return r
    raise ValueError(f"no primitive {n}-th root modulo {p}")


def _coeff_parts(c, n: int) -> tuple[tuple[int, ...], int]:
    if isinstance(c, CycNumber):
        c = c.embed(n) if c.conductor != n else c
        return c._num, c._den
    q = Fraction(c)
    return (q.numerator,) + (0,) * (phi(n) - 1), q.denominator


def _eval_mod(parts, r: int, m: int) -> int:
    nums, den = parts
    acc = 0
    for a in reversed(nums):
        acc = (acc * r + a) % m
    return acc * pow(den, -1, m) % m


def _lift_zeta(n: int, r: int, m: int) -> int:
    """Newton-lift a simple root r of Phi_n from mod p up to mod m."""
    poly = cyclotomic_poly(n)
    dpoly = [i * c for i, c in enumerate(poly)][1:]
    for _ in range(64):
        f = sum(c * pow(r, i, m) for i, c in enumerate(poly)) % m
        if f == 0:
            return r
        df = sum(c * pow(r, i, m) for i, c in enumerate(dpoly)) % m
        r = (r - f * pow(df, -1, m)) % m
    raise ArithmeticError("zeta lift did not converge")


def _horner(coeffs, x, m: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc


def reconstruct(value: int, r: int, m: int, n: int) -> list[CycNumber]:
    """Short vectors (D, a_0..a_{f-1}) with D*value = sum a_k r^k (mod m).

    Each gives a candidate (sum a_k zeta^k) / D.  Candidates are ordered by
    the reduced basis, shortest first.
    """
    f = phi(n)
    dim = f + 1
    rows = [[0] * dim for _ in range(dim + 1)]
    rows[0][0], rows[0][1] = 1, value % m
    for k in range(1, f):
        rows[k][1] = (-pow(r, k, m)) % m
        rows[k][k + 1] = 1
    rows[f][1] = m
    rows = rows[: f + 1]
    mat = DomainMatrix([[ZZ(x) for x in row] for row in rows], (dim, dim), ZZ)
    reduced = mat.lll().to_Matrix().tolist()
    out = []
    # a genuine small solution is far shorter than the lattice's typical scale
    limit_bits = m.bit_length() // (2 * dim)
    for row in reduced:
        d = int(row[0])
        if d == 0 or max(abs(int(x)) for x in row).bit_length() > limit_bits:
            continue
        out.append(CycNumber(n, {k: Fraction(int(a), d) for k, a in enumerate(row[1:])}))
    return out


def evaluate(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def cyclotomic_roots(coeffs, n: int, *, max_primes: int = 6) -> list:
    """Distinct roots lying in Q(zeta_n) of sum(coeffs[i] x^i).

    ``coeffs`` are int/Fraction/CycNumber, lowest degree first, and the
    polynomial must be squarefree over Q(zeta_n).  Roots outside the field
    (or of too large a height to recover) are simply absent from the result.
    """
    while coeffs and not coeffs[-1]:
        coeffs = coeffs[:-1]
    deg = len(coeffs) - 1
    if deg < 1:
        return []
    lead = coeffs[-1]
    coeffs = [exact_div(c, lead) for c in coeffs] if lead != 1 else list(coeffs)
    if deg == 1:
        return [simplify(-coeffs[0])]
    parts = [_coeff_parts(c, n) for c in coeffs]
    dens = lcm(*[d for _, d in parts])
    tried = 0
    for p in primes_1_mod(n):
        if dens % p == 0:
            continue
        r = root_of_unity_mod(n, p)
        fp = [_eval_mod(pt, r, p) for pt in parts]
        high = [ZZ(c) for c in reversed(fp)]
        if gf_gcd(high, gf_diff(high, p, ZZ), p, ZZ) != [ZZ(1)]:
            tried += 1
            if tried >= max_primes:
                break
            continue
        _, factors = gf_factor_sqf(high, p, ZZ)
        residues = [int(-g[1]) % p for g in factors if len(g) == 2]
        return _lift_and_recover(coeffs, parts, residues, n, p, r)
    raise ArithmeticError("no prime of good reduction found")


def _lift_and_recover(coeffs, parts, residues, n, p, r):
    found = []
    for lam in residues:
        m, zr = p, r
        root = None
        while m.bit_length() < MAX_BITS:
            m2 = m * m
            zr = _lift_zeta(n, zr, m2)
            fm = [_eval_mod(pt, zr, m2) for pt in parts]
            dfm = [(i * c) % m2 for i, c in enumerate(fm)][1:]
            for _ in range(2):
                lam = (lam - _horner(fm, lam, m2) * pow(_horner(dfm, lam, m2), -1, m2)) % m2
            m = m2
            if m.bit_length() < 64:
                continue
            for cand in reconstruct(lam, zr, m, n)[:2]:
                if not evaluate(coeffs, cand):
                    root = cand
                    break
            if root is not None:
                break
        if root is None:
            log.debug("root %d mod %d did not reconstruct in Q(zeta_%d)", lam % p, p, n)
        else:
            found.append(simplify(root))
    return found
