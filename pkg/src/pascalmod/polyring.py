"""Dense univariate polynomials over Z, Q and F_p.

Coefficients are stored low-to-high: ``coeffs[i]`` is the coefficient of ``t**i``.
The zero polynomial has no coefficients and degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .domains import GF, ZZ, Domain
from .errors import DegreeMismatchError, DomainError, ParameterError

__all__ = [
    "Poly",
    "extract_multiplicity",
    "is_palindromic",
    "crt_lift",
    "squarefree_part",
    "roots_have_two_power_order",
]

_INT64_SAFE = 1 << 62


class Poly:
    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs: Iterable = (), domain: Domain = ZZ):
        conv = domain.convert
        c = [conv(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.domain = domain

    @classmethod
    def _raw(cls, coeffs: List, domain: Domain) -> "Poly":
        # caller guarantees reduced entries; only strip zeros
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.domain = domain
        return obj

    @classmethod
    def t(cls, domain: Domain = ZZ) -> "Poly":
        return cls._raw([domain.zero, domain.one], domain)

    @classmethod
    def const(cls, c, domain: Domain = ZZ) -> "Poly":
        return cls([c], domain)

    @classmethod
    def one(cls, domain: Domain = ZZ) -> "Poly":
        return cls._raw([domain.one], domain)

    @classmethod
    def zero(cls, domain: Domain = ZZ) -> "Poly":
        return cls._raw([], domain)

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.domain.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.domain == other.domain and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly([other], self.domain).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.domain, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return f"Poly(0, {self.domain!r})"
        out = ""
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                term = mono
            else:
                term = f"{c}*{mono}" if mono else f"{c}"
            out += (f" {sign} " if out else ("-" if sign == "-" else "")) + term
        return f"Poly({out}, {self.domain!r})"

    # -- ring operations -------------------------------------------------

    def _check(self, other) -> "Poly":
        if isinstance(other, int) or isinstance(other, Fraction):
            return Poly([other], self.domain)
        if not isinstance(other, Poly):
            return NotImplemented
        if other.domain != self.domain:
            raise DomainError(f"domain mismatch: {self.domain!r} vs {other.domain!r}")
        return other

    def _fix(self, c: List) -> "Poly":
        if self.domain.kind == "Fp":
            p = self.domain.p
            c = [x % p for x in c]
        return Poly._raw(c, self.domain)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] += x
        return self._fix(c)

    __radd__ = __add__

    def __neg__(self):
        return self._fix([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.domain)
        dom = self.domain
        if dom.kind == "Fp" and min(len(a), len(b)) * (dom.p - 1) ** 2 < _INT64_SAFE:
            c = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % dom.p
            return Poly._raw(c.tolist(), dom)
        c = [dom.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                c[i + j] += x * y
        return self._fix(c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ParameterError("negative polynomial power")
        result = Poly.one(self.domain)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _inv(self, x):
        dom = self.domain
        if dom.kind == "Fp":
            return pow(x, -1, dom.p)
        if dom.kind == "Q":
            return 1 / Fraction(x)
        if x in (1, -1):
            return x
        raise DomainError("integer division needs a monic divisor")

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dom = self.domain
        if dom.kind == "Z" and other.lead != 1:
            raise DomainError("integer polynomial division needs a monic divisor")
        inv = self._inv(other.lead)
        r = list(self.coeffs)
        g = other.coeffs
        dg = len(g) - 1
        if len(r) <= dg:
            return Poly.zero(dom), self
        q = [dom.zero] * (len(r) - dg)
        p = dom.p if dom.kind == "Fp" else None
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if c == 0:
                continue
            c = c * inv
            if p:
                c %= p
            q[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] -= c * g[j]
            if p:
                for j in range(dg + 1):
                    r[i - dg + j] %= p
        return Poly._raw(q, dom), Poly._raw(r[:dg], dom)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    # -- transformations -------------------------------------------------

    def __call__(self, x):
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.domain.kind == "Fp" and isinstance(acc, int):
            acc %= self.domain.p
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        inv = self._inv(self.lead)
        return self._fix([c * inv for c in self.coeffs])

    def reduce(self, p: int) -> "Poly":
        """Image in F_p[t] of an integer (or p-integral rational) polynomial."""
        return Poly(self.coeffs, GF(p))

    def lift(self) -> "Poly":
        """Integer polynomial with symmetric representatives of an F_p polynomial."""
        if self.domain.kind != "Fp":
            raise DomainError("lift() needs an F_p polynomial")
        return Poly._raw([self.domain.symmetric(c) for c in self.coeffs], ZZ)

    def to_domain(self, domain: Domain) -> "Poly":
        return Poly(self.coeffs, domain)

    def derivative(self) -> "Poly":
        return self._fix([i * c for i, c in enumerate(self.coeffs)][1:])

    def substitute_power(self, k: int) -> "Poly":
        """f(t**k)."""
        if not self.coeffs:
            return self
        c = [self.domain.zero] * (k * self.degree + 1)
        for i, x in enumerate(self.coeffs):
            c[k * i] = x
        return Poly._raw(c, self.domain)

    def negate_variable(self) -> "Poly":
        """f(-t)."""
        return self._fix([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def reversed(self) -> "Poly":
        """t**deg * f(1/t)."""
        return Poly._raw(list(reversed(self.coeffs)), self.domain)

    def gcd(self, other: "Poly") -> "Poly":
        if not self.domain.is_field:
            raise DomainError("gcd is only provided over fields")
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly.one(self.domain) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def to_json(self) -> List[str]:
        if self.domain.kind == "Q":
            raise DomainError("rational polynomials are not serialized")
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str], domain: Domain) -> "Poly":
        return cls([int(x) for x in data], domain)


def extract_multiplicity(f: Poly, g: Poly) -> Tuple[int, Poly]:
    """Largest ``m`` with ``g**m | f`` together with the cofactor ``f / g**m``."""
    if f.is_zero():
        raise ParameterError("multiplicity in the zero polynomial is undefined")
    if g.degree < 1 or not g.is_monic():
        raise ParameterError("extract_multiplicity needs a monic nonconstant g")
    m = 0
    while f.degree >= g.degree:
        q, r = divmod(f, g)
        if not r.is_zero():
            break
        f = q
        m += 1
    return m, f


def is_palindromic(f: Poly, sign: int = 1) -> bool:
    """True iff ``coeffs[i] == sign * coeffs[deg - i]`` for every ``i``."""
    c = f.coeffs
    n = len(c) - 1
    if f.domain.kind == "Fp":
        p = f.domain.p
        return all((c[i] - sign * c[n - i]) % p == 0 for i in range(n + 1))
    return all(c[i] == sign * c[n - i] for i in range(n + 1))


def crt_lift(residues: Sequence[Tuple[Poly, int]], degree: int) -> Poly:
    """Integer polynomial of the given degree congruent to every residue.

    Coefficients are taken in the symmetric range ``(-M/2, M/2]`` where ``M``
    is the product of the (pairwise distinct) moduli.
    """
    primes = [p for _, p in residues]
    if len(set(primes)) != len(primes):
        raise ParameterError("crt_lift needs pairwise distinct primes")
    for f, p in residues:
        if f.domain != GF(p):
            raise DomainError(f"residue {f!r} is not over F_{p}")
        if f.degree != degree:
            raise DegreeMismatchError(f"residue mod {p} has degree {f.degree}, expected {degree}")
    M = prod(primes)
    coeffs = []
    for i in range(degree + 1):
        x = 0
        for f, p in residues:
            Mi = M // p
            x += f[i] * Mi * pow(Mi, -1, p)
        x %= M
        if 2 * x > M:
            x -= M
        coeffs.append(x)
    return Poly._raw(coeffs, ZZ)


def squarefree_part(f: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of ``f`` over F_p."""
    if f.domain.kind != "Fp":
        raise DomainError("squarefree_part works over F_p")
    if f.is_zero():
        raise ParameterError("zero polynomial")
    p = f.domain.p
    f = f.monic()
    if f.degree < 1:
        return Poly.one(f.domain)
    df = f.derivative()
    if df.is_zero():
        # f = h(t^p) = h(t)^p over F_p
        return squarefree_part(Poly._raw(list(f.coeffs[::p]), f.domain))
    g = f.gcd(df)
    u = f.exact_div(g)  # factors whose multiplicity is prime to p, each once
    w = g
    while True:
        c = w.gcd(u)
        if c.degree < 1:
            break
        w = w.exact_div(c)
    if w.degree < 1:
        return u
    return u * squarefree_part(w)


def roots_have_two_power_order(f: Poly) -> bool:
    """True iff every root of ``f`` in the algebraic closure of F_p has 2-power order.

    With ``g`` the squarefree part and ``2**M >= p**deg(g)``, this holds
    iff ``t**(2**M) == 1`` modulo ``g``.
    """
    if f.domain.kind != "Fp":
        raise DomainError("roots_have_two_power_order works over F_p")
    if f.is_zero() or f[0] == 0:
        raise ParameterError("polynomial has zero as a root")
    g = squarefree_part(f)
    if g.degree < 1:
        return True
    bound = f.domain.p ** g.degree
    M = (bound - 1).bit_length()
    x = Poly.t(f.domain) % g
    for _ in range(M):
        x = (x * x) % g
    return x == Poly.one(f.domain)
