"""Coefficient domains: Z, Q and the prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import DomainError, ParameterError
from .numtheory import check_prime


@dataclass(frozen=True)
class Domain:
    kind: str  # "Z", "Q" or "Fp"
    p: Optional[int] = None

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fp"

    @property
    def tag(self) -> str:
        return f"Fp:{self.p}" if self.kind == "Fp" else self.kind

    def __repr__(self):
        return {"Z": "ZZ", "Q": "QQ"}.get(self.kind, f"GF({self.p})")

    def convert(self, x):
        """Coerce an int, Fraction or decimal string into this domain."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.kind == "Fp":
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise DomainError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def symmetric(self, x: int) -> int:
        """Representative of an F_p element in (-p/2, p/2]."""
        x %= self.p
        return x - self.p if 2 * x > self.p else x


ZZ = Domain("Z")
QQ = Domain("Q")


@lru_cache(maxsize=None)
def GF(p: int) -> Domain:
    return Domain("Fp", check_prime(p))


def parse_domain(tag: str) -> Domain:
    if tag == "Z":
        return ZZ
    if tag == "Q":
        return QQ
    if tag.startswith("Fp:"):
        return GF(int(tag[3:]))
    raise ParameterError(f"unknown domain tag {tag!r}")
