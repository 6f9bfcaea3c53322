"""Exact arithmetic in the cyclotomic fields Q(zeta_n).

Values are stored as rational coefficient vectors over the power basis
1, zeta_n, ..., zeta_n^{phi(n)-1}, reduced modulo the n-th cyclotomic
polynomial and lowered to the minimal conductor, so equality and hashing
are structural.  Conductor 1 is the rationals; square roots that occur in
character tables stay inside this domain (sqrt(2) = zeta_8 + zeta_8^-1,
sqrt(-1) = zeta_4).
"""
from __future__ import annotations

import cmath
import json
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .linalg import solve_exact

Rational = Fraction


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out, m, p = [], n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def _int_poly_quotient(num: list[int], den: tuple[int, ...]) -> list[int]:
    # exact division of integer polynomials, den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of Phi_n, via x^n - 1 = prod_{d|n} Phi_d."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_quotient(num, cyclotomic_polynomial(d))
    return tuple(num)


def _reduce_mod_phi(n: int, coeffs: list[Fraction]) -> list[Fraction]:
    """Remainder of a coefficient vector modulo Phi_n; result has length phi(n)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        top = c[i]
        if top:
            c[i] = Fraction(0)
            for j in range(deg):
                c[i - deg + j] -= top * phi[j]
    c = c[:deg]
    c += [Fraction(0)] * (deg - len(c))
    return c


def _galois_apply(n: int, coeffs: tuple[Fraction, ...], k: int) -> list[Fraction]:
    # zeta -> zeta^k, k coprime to n
    out = [Fraction(0)] * n
    for j, cj in enumerate(coeffs):
        if cj:
            out[(j * k) % n] += cj
    return _reduce_mod_phi(n, out)


@lru_cache(maxsize=None)
def _subfield_basis(n: int, d: int) -> tuple[tuple[Fraction, ...], ...]:
    """Images of the Q(zeta_d) power basis inside Q(zeta_n) (d | n)."""
    step = n // d
    cols = []
    for i in range(euler_phi(d)):
        vec = [Fraction(0)] * (i * step + 1)
        vec[i * step] = Fraction(1)
        cols.append(tuple(_reduce_mod_phi(n, vec)))
    return tuple(cols)


def _lower_once(n: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]] | None:
    for p in prime_factors(n):
        d = n // p
        fixed = True
        for k in range(1 + d, n, d):
            if gcd(k, n) == 1 and tuple(_galois_apply(n, coeffs, k)) != coeffs:
                fixed = False
                break
        if not fixed:
            continue
        basis = _subfield_basis(n, d)
        rows = [[basis[j][i] for j in range(len(basis))] for i in range(euler_phi(n))]
        sol = solve_exact(rows, list(coeffs))
        return d, tuple(sol)
    return None


@lru_cache(maxsize=1 << 18)
def _canonical_cached(n: int, cur: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]]:
    while n > 1:
        if all(c == 0 for c in cur[1:]):
            return 1, (cur[0],)
        lowered = _lower_once(n, cur)
        if lowered is None:
            break
        n, cur = lowered
    return n, cur


def _canonical(n: int, coeffs: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    return _canonical_cached(n, tuple(coeffs))


# value-pair product cache; character values recur from a small set, so the
# hit rate in group/character computations is high
_MUL_CACHE: dict = {}
_CACHE_LIMIT = 1 << 20


class Cyclotomic:
    """An exact element of Q(zeta_n), immutable and hashable."""

    __slots__ = ("conductor", "coeffs", "_hash", "_conj")

    def __init__(self, value: int | Fraction | "Cyclotomic" = 0):
        if isinstance(value, Cyclotomic):
            object.__setattr__(self, "conductor", value.conductor)
            object.__setattr__(self, "coeffs", value.coeffs)
        else:
            object.__setattr__(self, "conductor", 1)
            object.__setattr__(self, "coeffs", (Fraction(value),))
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_conj", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def _raw(cls, n: int, coeffs: list[Fraction]) -> "Cyclotomic":
        """Construct from reduced coefficients (length phi(n)); canonicalizes."""
        n, cf = _canonical(n, coeffs)
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", n)
        object.__setattr__(obj, "coeffs", cf)
        object.__setattr__(obj, "_hash", None)
        object.__setattr__(obj, "_conj", None)
        return obj

    # -- predicates / conversions ------------------------------------

    def is_zero(self) -> bool:
        return self.conductor == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_rational(self) -> Fraction:
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.conductor == 1 and self.coeffs[0].denominator == 1

    def to_integer(self) -> int:
        r = self.to_rational()
        if r.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return r.numerator

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * j / n)
            for j, c in enumerate(self.coeffs)
            if c
        ) or complex(0)

    # -- arithmetic ----------------------------------------------------

    def _embedded(self, m: int) -> list[Fraction]:
        step = m // self.conductor
        out = [Fraction(0)] * m
        for j, c in enumerate(self.coeffs):
            if c:
                out[j * step] += c
        return _reduce_mod_phi(m, out)

    @staticmethod
    def _coerce(x) -> "Cyclotomic | None":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = lcm(self.conductor, o.conductor)
        a, b = self._embedded(m), o._embedded(m)
        return Cyclotomic._raw(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            r = o.coeffs[0]
            if r == 1:
                return self
            return Cyclotomic._raw(self.conductor, [c * r for c in self.coeffs])
        if self.is_rational():
            r = self.coeffs[0]
            if r == 1:
                return o
            return Cyclotomic._raw(o.conductor, [c * r for c in o.coeffs])
        key = (self, o)
        hit = _MUL_CACHE.get(key)
        if hit is not None:
            return hit
        m = lcm(self.conductor, o.conductor)
        a, b = self._embedded(m), o._embedded(m)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        result = Cyclotomic._raw(m, _reduce_mod_phi(m, prod))
        if len(_MUL_CACHE) < _CACHE_LIMIT:
            _MUL_CACHE[key] = result
        return result

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero cyclotomic value")
        if self.is_rational():
            return Cyclotomic(1 / self.coeffs[0])
        n = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]

        def strip(p):
            while p and p[-1] == 0:
                p.pop()
            return p

        # extended Euclid over Q[x]; invariant r1 = s1*self (mod Phi_n)
        r0, r1 = strip(phi), strip(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod_q(r0, r1)
            r0, r1 = r1, strip(rem)
            s0, s1 = s1, strip(_poly_sub(s0, _poly_mul(q, s1)))
        if not r1 or r1[0] == 0:
            raise ZeroDivisionError("value is a zero divisor (not possible in a field)")
        c = r1[0]
        inv_coeffs = _reduce_mod_phi(n, [x / c for x in s1])
        return Cyclotomic._raw(n, inv_coeffs)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> "Cyclotomic":
        """Apply zeta_n -> zeta_n^k (k coprime to the conductor)."""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not coprime to conductor {n}")
        return Cyclotomic._raw(n, _galois_apply(n, self.coeffs, k % n))

    def conj(self) -> "Cyclotomic":
        if self.conductor == 1:
            return self
        cached = self._conj
        if cached is None:
            cached = self.galois(self.conductor - 1)
            object.__setattr__(self, "_conj", cached)
        return cached

    # -- comparisons / formatting ---------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.conductor == o.conductor and self.coeffs == o.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.conductor, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    def to_text(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"cyc({self.conductor})[{body}]"

    def pretty(self) -> str:
        """Compact display: rationals plainly, single roots of unity as
        r*z{n}^k, anything else as a sum over the power basis."""
        if self.is_rational():
            return str(self.coeffs[0])
        n = self.conductor
        for k in range(1, n):
            q = self * root_of_unity(n, -k)
            if q.is_rational():
                r = q.to_rational()
                head = "" if r == 1 else ("-" if r == -1 else f"{r}*")
                power = f"z{n}" + (f"^{k}" if k > 1 else "")
                return head + power
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}z{n}" + (f"^{j}" if j > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "Cyclotomic":
        text = text.strip()
        if not (text.startswith("cyc(") and text.endswith("]")):
            raise ValueError(f"bad cyclotomic literal: {text!r}")
        head, _, body = text.partition(")[")
        n = int(head[4:])
        coeffs = [Fraction(part.strip()) for part in body[:-1].split(",") if part.strip()]
        coeffs += [Fraction(0)] * (euler_phi(n) - len(coeffs))
        return cls._raw(n, _reduce_mod_phi(n, coeffs))

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Cyclotomic":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["conductor"])
        coeffs = [Fraction(c) for c in data["coeffs"]]
        coeffs += [Fraction(0)] * (euler_phi(n) - len(coeffs))
        return cls._raw(n, _reduce_mod_phi(n, coeffs))

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        return self.to_text()


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_divmod_q(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = len(b) - 1
    if db < 0 or b[-1] == 0:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            f = a[i] / b[-1]
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return q, a[:db] if db > 0 else [Fraction(0)]


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical (minimal-conductor) form."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    k %= n
    if k == 0:
        return Cyclotomic(1)
    g = gcd(k, n)
    n, k = n // g, k // g
    vec = [Fraction(0)] * (k + 1)
    vec[k] = Fraction(1)
    return Cyclotomic._raw(n, _reduce_mod_phi(n, vec))


def zeta(n: int, k: int = 1) -> Cyclotomic:
    return root_of_unity(n, k)


def sqrt2() -> Cyclotomic:
    """sqrt(2) realized as zeta_8 + zeta_8^{-1}."""
    return root_of_unity(8, 1) + root_of_unity(8, -1)


def sqrt_minus1() -> Cyclotomic:
    return root_of_unity(4, 1)
