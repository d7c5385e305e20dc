"""b-autosimilar matrices.

An infinite matrix ``M`` is b-autosimilar when ``m[0][0] == 1`` and
``m[s][t]`` is the product of seed entries ``seed[s_i][t_i]`` over the
base-b digits of ``s`` and ``t``.  Equivalently, ``M(b**m)`` is the m-fold
Kronecker power of the seed.  The reductions of the symmetric Pascal matrix
modulo 2 (values in {0,1}) and modulo 3 (values in {-1,0,1}) are the two
motivating examples.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from .domains import QQ
from .errors import DegeneracyError, InvalidBaseError, ParameterError
from .exactmat import ExactMatrix, det_exact
from .numtheory import digits

__all__ = [
    "AutosimilarSpec",
    "entry",
    "materialize",
    "ldu_seed",
    "diagonal_factors",
    "det_by_digits",
    "pascal_mod2_spec",
    "pascal_mod3_spec",
]


@dataclass(frozen=True)
class AutosimilarSpec:
    b: int
    seed: ExactMatrix
    nondegenerate: bool = field(init=False)

    def __post_init__(self):
        if self.b < 2:
            raise InvalidBaseError(f"base must be >= 2, got {self.b}")
        seed = self.seed if self.seed.domain == QQ else self.seed.to_domain(QQ)
        if seed.shape != (self.b, self.b):
            raise ParameterError(f"seed must be {self.b}x{self.b}, got {seed.shape}")
        if seed[0, 0] != 1:
            raise ParameterError("seed[0][0] must be 1")
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "nondegenerate", _first_singular_minor(seed) is None)

    @classmethod
    def from_entries(cls, b: int, entries: Sequence) -> "AutosimilarSpec":
        """Build from ``b*b`` row-major rationals (ints, Fractions or strings like ``"-1/2"``)."""
        if len(entries) != b * b:
            raise ParameterError(f"expected {b * b} seed entries, got {len(entries)}")
        rows = [[Fraction(x) for x in entries[i * b:(i + 1) * b]] for i in range(b)]
        return cls(b, ExactMatrix(rows, QQ, shape=(b, b)))


def _first_singular_minor(seed: ExactMatrix):
    for k in range(2, seed.rows + 1):
        if det_exact(seed.leading(k)) == 0:
            return k
    return None


def pascal_mod2_spec() -> AutosimilarSpec:
    return AutosimilarSpec.from_entries(2, [1, 1, 1, 0])


def pascal_mod3_spec() -> AutosimilarSpec:
    # C(i+j, i) mod 3 with representatives in {-1, 0, 1}
    return AutosimilarSpec.from_entries(3, [1, 1, 1, 1, -1, 0, 1, 0, 0])


def entry(spec: AutosimilarSpec, s: int, t: int) -> Fraction:
    ds, dt = digits(s, spec.b), digits(t, spec.b)
    width = max(len(ds), len(dt))
    ds += [0] * (width - len(ds))
    dt += [0] * (width - len(dt))
    out = Fraction(1)
    for a, c in zip(ds, dt):
        out *= spec.seed[a, c]
        if out == 0:
            break
    return out


def materialize(spec: AutosimilarSpec, n: int) -> ExactMatrix:
    """The leading n x n block ``M(n)``, computed entrywise from digit products."""
    if n < 0:
        raise ParameterError("n must be >= 0")
    b = spec.b
    s, t = np.indices((n, n))
    out = np.empty((n, n), dtype=object)
    out[...] = Fraction(1)
    seed = spec.seed.a
    while n and (s.any() or t.any()):
        out = out * seed[s % b, t % b]
        s, t = s // b, t // b
    return ExactMatrix._wrap(out, QQ)


def ldu_seed(spec: AutosimilarSpec) -> Tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Factor the seed as L @ D @ U (unipotent lower, diagonal, unipotent upper).

    Doolittle elimination without pivoting; a zero pivot raises
    :class:`DegeneracyError` carrying the size of the first singular leading minor.
    """
    b = spec.b
    U = [list(r) for r in spec.seed.tolist()]
    L = [[Fraction(int(i == j)) for j in range(b)] for i in range(b)]
    for k in range(b):
        piv = U[k][k]
        if piv == 0:
            raise DegeneracyError(k + 1)
        for i in range(k + 1, b):
            f = U[i][k] / piv
            L[i][k] = f
            U[i] = [x - f * y for x, y in zip(U[i], U[k])]
    d = [U[k][k] for k in range(b)]
    D = [[d[i] if i == j else Fraction(0) for j in range(b)] for i in range(b)]
    Uu = [[x / d[i] for x in U[i]] for i in range(b)]
    return (
        ExactMatrix(L, QQ, shape=(b, b)),
        ExactMatrix(D, QQ, shape=(b, b)),
        ExactMatrix(Uu, QQ, shape=(b, b)),
    )


def diagonal_factors(spec: AutosimilarSpec) -> Tuple[Fraction, ...]:
    """``(d_0, ..., d_{b-1})`` with ``d_0 = 1`` and ``d_k = det M(k+1) / det M(k)``."""
    _, D, _ = ldu_seed(spec)
    return tuple(D[k, k] for k in range(spec.b))


def det_by_digits(spec: AutosimilarSpec, n: int) -> Fraction:
    """det M(n) as the product of ``d_v`` over every base-b digit v of every integer below n."""
    if n < 0:
        raise ParameterError("n must be >= 0")
    d = diagonal_factors(spec)
    counts = Counter()
    for i in range(n):
        counts.update(digits(i, spec.b))
    out = Fraction(1)
    for v, c in counts.items():
        out *= d[v] ** c
    return out
