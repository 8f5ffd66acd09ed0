"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored on the power basis 1, z, ..., z^(phi(N)-1)
(exponents reduced modulo the N-th cyclotomic polynomial) as a tuple of
integer numerators over one positive common denominator.  Python ``int`` and
``fractions.Fraction`` values are accepted anywhere a :class:`CycNumber` is
and behave as conductor-1 elements.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping, Union

DEFAULT_CONDUCTOR_MAX = 120
ENV_CONDUCTOR_MAX = "HOPFCALC_CONDUCTOR_MAX"

Scalar = Union[int, Fraction, "CycNumber"]


class ConductorLimitError(ArithmeticError):
    """Raised when an operation would need a conductor above the configured bound."""


def conductor_bound() -> int:
    value = os.environ.get(ENV_CONDUCTOR_MAX)
    return int(value) if value else DEFAULT_CONDUCTOR_MAX


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        assert r == 0
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k is z^k on the power basis, for 0 <= k < max(n, 2*phi(n) - 1)."""
    f = phi(n)
    poly = cyclotomic_poly(n)
    rows = []
    cur = [0] * f
    cur[0] = 1
    for _ in range(max(n, 2 * f - 1)):
        rows.append(tuple(cur))
        # multiply by z and reduce with z^f = -sum(poly[i] z^i)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(f):
                cur[i] -= top * poly[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _embed_table(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Row j is zeta_m^j written on the power basis of Q(zeta_n), for m | n."""
    step = n // m
    table = _power_table(n)
    return tuple(table[(j * step) % n] for j in range(phi(m)))


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    g = den
    for a in nums:
        if a:
            g = gcd(g, a)
            if g == 1:
                break
    if den < 0:
        g = -g
    if g != 1:
        nums = [a // g for a in nums]
        den //= g
    return tuple(nums), den


class CycNumber:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("conductor", "_num", "_den")

    def __init__(self, conductor: int, coeffs: Mapping[int, object] | None = None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        coeffs = coeffs or {}
        fracs = {int(k) % conductor: Fraction(v) for k, v in coeffs.items()}
        den = 1
        for v in fracs.values():
            den = _lcm(den, v.denominator)
        table = _power_table(conductor)
        nums = [0] * phi(conductor)
        for k, v in fracs.items():
            scaled = v.numerator * (den // v.denominator)
            if scaled:
                for i, t in enumerate(table[k]):
                    if t:
                        nums[i] += scaled * t
        self._set(conductor, nums, den)

    def _set(self, conductor: int, nums, den: int) -> None:
        nums, den = _normalize(list(nums), den)
        if len(nums) > 1 and not any(nums[1:]):
            conductor, nums = 1, nums[:1]
        elif len(nums) == 1:
            conductor = 1
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "_num", nums)
        object.__setattr__(self, "_den", den)

    @classmethod
    def _raw(cls, conductor: int, nums, den: int) -> "CycNumber":
        obj = cls.__new__(cls)
        obj._set(conductor, nums, den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CycNumber is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def rational(cls, value) -> "CycNumber":
        q = Fraction(value)
        return cls._raw(1, (q.numerator,), q.denominator)

    @classmethod
    def coerce(cls, value) -> "CycNumber":
        if isinstance(value, CycNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        if isinstance(value, str):
            return cls.rational(Fraction(value))
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic number")

    # -- representation ------------------------------------------------------

    @property
    def coefficients(self) -> dict[int, Fraction]:
        """Nonzero power-basis coefficients keyed by exponent."""
        return {
            k: Fraction(a, self._den) for k, a in enumerate(self._num) if a
        }

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def embed(self, n: int) -> "CycNumber":
        """The same number written at conductor n (a multiple of the current one)."""
        if n % self.conductor:
            raise ValueError(f"conductor {self.conductor} does not divide {n}")
        obj = CycNumber.__new__(CycNumber)
        object.__setattr__(obj, "conductor", n)
        object.__setattr__(obj, "_num", self._lift(n))
        object.__setattr__(obj, "_den", self._den)
        return obj

    def _lift(self, n: int) -> tuple[int, ...]:
        if n == self.conductor:
            return self._num
        out = [0] * phi(n)
        for a, row in zip(self._num, _embed_table(self.conductor, n)):
            if a:
                for i, t in enumerate(row):
                    if t:
                        out[i] += a * t
        return tuple(out)

    def galois(self, j: int) -> "CycNumber":
        """Image under the automorphism zeta -> zeta^j (gcd(j, N) = 1)."""
        n = self.conductor
        if gcd(j, n) != 1:
            raise ValueError(f"{j} is not a unit modulo {n}")
        table = _power_table(n)
        out = [0] * phi(n)
        for k, a in enumerate(self._num):
            if a:
                for i, t in enumerate(table[(k * j) % n]):
                    if t:
                        out[i] += a * t
        return CycNumber._raw(n, out, self._den)

    def canonical(self) -> "CycNumber":
        """Equal number at the smallest conductor that contains it."""
        n = self.conductor
        if n == 1:
            return self
        for d in _divisors(n)[:-1]:
            if d % 4 == 2:
                continue
            fixers = [j for j in range(1, n) if gcd(j, n) == 1 and j % d == 1 % d]
            if all(self.galois(j) == self for j in fixers):
                return self._descend(d)
        return self

    def _descend(self, d: int) -> "CycNumber":
        # solve embed(x) == self for x in Q(zeta_d)
        from .linalg import solve_linear  # local: linalg imports this module

        table = _embed_table(d, self.conductor)
        rows = [[table[j][i] for j in range(phi(d))] for i in range(phi(self.conductor))]
        sol = solve_linear(rows, [Fraction(a, self._den) for a in self._num])
        return CycNumber(d, dict(enumerate(sol.particular)))

    def sort_key(self) -> tuple:
        c = self.canonical()
        return (c.conductor, tuple(-Fraction(a, c._den) for a in c._num))

    def __complex__(self) -> complex:
        import cmath

        w = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(a * w**k for k, a in enumerate(self._num)) / self._den

    def __repr__(self) -> str:
        terms = []
        for k, q in self.coefficients.items():
            if k == 0:
                terms.append(str(q))
            else:
                z = f"z{self.conductor}" + (f"^{k}" if k > 1 else "")
                terms.append(z if q == 1 else f"-{z}" if q == -1 else f"({q})*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    # -- arithmetic ----------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, CycNumber):
            if other.conductor == self.conductor:
                return self.conductor, self._num, other._num, other._den
            n = _lcm(self.conductor, other.conductor)
            if n > max(self.conductor, other.conductor) and n > conductor_bound():
                raise ConductorLimitError(
                    f"conductor {n} exceeds bound {conductor_bound()}"
                )
            return n, self._lift(n), other._lift(n), other._den
        if isinstance(other, int):
            return self.conductor, self._num, (other,) + (0,) * (len(self._num) - 1), 1
        if isinstance(other, Fraction):
            return (
                self.conductor,
                self._num,
                (other.numerator,) + (0,) * (len(self._num) - 1),
                other.denominator,
            )
        return None

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        n, a, b, bd = p
        ad = self._den
        return CycNumber._raw(n, [x * bd + y * ad for x, y in zip(a, b)], ad * bd)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self.conductor, [-a for a in self._num], self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        n, a, b, bd = p
        ad = self._den
        return CycNumber._raw(n, [x * bd - y * ad for x, y in zip(a, b)], ad * bd)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycNumber._raw(self.conductor, [a * other for a in self._num], self._den)
        if isinstance(other, Fraction):
            return CycNumber._raw(
                self.conductor,
                [a * other.numerator for a in self._num],
                self._den * other.denominator,
            )
        p = self._pair(other)
        if p is None:
            return NotImplemented
        n, a, b, bd = p
        return CycNumber._raw(n, _polymul_mod(n, a, b), self._den * bd)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta_N)")
        n = self.conductor
        if n == 1:
            return CycNumber._raw(1, (self._den,), self._num[0])
        # product of the non-trivial conjugates, divided by the norm
        conj = CycNumber.rational(1)
        for j in range(2, n):
            if gcd(j, n) == 1:
                conj = conj * self.galois(j)
        norm = (self * conj).to_fraction()
        return conj * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_N)")
            return self * (1 / Fraction(other))
        if isinstance(other, CycNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNumber.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ----------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self._num)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNumber):
            if self.conductor == other.conductor:
                return self._den == other._den and self._num == other._num
            n = _lcm(self.conductor, other.conductor)
            a, b = self._lift(n), other._lift(n)
            return all(x * other._den == y * self._den for x, y in zip(a, b))
        if isinstance(other, (int, Fraction)):
            return self.conductor == 1 and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.conductor == 1:
            return hash(Fraction(self._num[0], self._den))
        c = self.canonical()
        if c.conductor == 1:
            return hash(Fraction(c._num[0], c._den))
        return hash((c.conductor, c._num, c._den))

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": {str(k): str(q) for k, q in self.coefficients.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CycNumber":
        return cls(int(data["conductor"]), {int(k): Fraction(v) for k, v in data["coeffs"].items()})


def _polymul_mod(n: int, a, b) -> list[int]:
    f = len(a)
    prod = [0] * (2 * f - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    out = prod[:f]
    table = _power_table(n)
    for k in range(f, 2 * f - 1):
        c = prod[k]
        if c:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += c * t
    return out


def zeta(n: int, k: int = 1) -> CycNumber:
    """The root of unity exp(2*pi*i*k/n)."""
    return CycNumber(n, {k % n: 1})


def conductor_of(x) -> int:
    return x.conductor if isinstance(x, CycNumber) else 1


def as_scalar(x):
    """Normalize user input to int, Fraction or CycNumber."""
    if isinstance(x, (int, Fraction, CycNumber)):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, Mapping):
        return CycNumber.from_json(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def simplify(x):
    """Demote rational CycNumbers to Fraction (or int)."""
    if isinstance(x, CycNumber) and x.conductor == 1:
        x = x.to_fraction()
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def scalar_to_json(x):
    x = simplify(x)
    if isinstance(x, CycNumber):
        return x.to_json()
    return str(x)


def scalar_from_json(data):
    if isinstance(data, (int,)):
        return data
    return simplify(as_scalar(data))


def scalar_sort_key(x) -> tuple:
    if isinstance(x, CycNumber):
        return x.sort_key()
    return (1, (-Fraction(x),))


def exact_div(a, b):
    """a / b without ever producing a float."""
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return simplify(Fraction(a) / Fraction(b))
    return simplify(a / b)
