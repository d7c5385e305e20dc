"""Constructors for the Pascal-type matrix families.

Conventions: indices start at 0 and matrices act on row vectors from the
right.  Under this convention the symmetric power is multiplicative,
``sympower(A @ B) == sympower(A) @ sympower(B)``.
"""

from __future__ import annotations

from typing import List

import numpy as np

from .domains import GF, ZZ, Domain
from .errors import ParameterError, SingularMatrixError
from .exactmat import ExactMatrix
from .numtheory import binomial_mod_p, check_prime

__all__ = [
    "pascal_symmetric",
    "pascal_reduced",
    "triangular",
    "shifted_pascal",
    "shifted_unit_pascal",
    "sympower",
    "P_GENERATOR",
    "L_GENERATOR",
    "LTILDE_GENERATOR",
]

# 2x2 generators whose symmetric powers of size p^l give P, L and L~ mod p
P_GENERATOR = (1, -1, 1, 0)
L_GENERATOR = (1, 0, -1, -1)
LTILDE_GENERATOR = (1, 0, 1, -1)


def _pascal_table(rows: int, cols: int) -> List[List[int]]:
    # p[i][j] = p[i-1][j] + p[i][j-1] = C(i+j, i)
    if rows == 0 or cols == 0:
        return [[] for _ in range(rows)]
    t = [[1] * cols]
    for i in range(1, rows):
        prev = t[-1]
        row = [1] * cols
        for j in range(1, cols):
            row[j] = prev[j] + row[j - 1]
        t.append(row)
    return t


def _lucas_entries(n: int, fn, p: int) -> ExactMatrix:
    """n x n matrix over F_p of C(top, bottom) where ``fn(i, j) == (top, bottom)``.

    Lucas' theorem applied to whole index grids: one table lookup per base-p digit.
    """
    check_prime(p)
    i, j = np.indices((n, n), dtype=np.int64)
    top, bot = fn(i, j)
    table = np.array([[binomial_mod_p(a, b, p) for b in range(p)] for a in range(p)], dtype=np.int64)
    arr = np.where(bot <= top, 1, 0).astype(np.int64)
    while bot.size and bot.max() > 0:
        arr = arr * table[top % p, bot % p] % p
        top, bot = top // p, bot // p
    return ExactMatrix._wrap(arr, GF(p))


def pascal_symmetric(n: int, domain: Domain = ZZ) -> ExactMatrix:
    """P(n) with entries C(i+j, i), 0 <= i, j < n."""
    if n < 0:
        raise ParameterError("size must be >= 0")
    if domain.kind == "Fp":
        return _lucas_entries(n, lambda i, j: (i + j, i), domain.p)
    return ExactMatrix(_pascal_table(n, n), domain, shape=(n, n))


def pascal_reduced(n: int, p: int) -> ExactMatrix:
    """Integer matrix of residues of C(i+j, i): {0,1} for p = 2, {-1,0,1} for p = 3."""
    if p not in (2, 3):
        raise ParameterError(f"integer reductions exist for p in {{2, 3}}, not {p}")
    m = pascal_symmetric(n, GF(p))
    return m.lift()


def triangular(kind: str, n: int, domain: Domain = ZZ) -> ExactMatrix:
    """Lower triangular binomial matrices.

    ``"T"``: C(i, j); ``"L"``: (-1)^i C(i, j); ``"Ltilde"``: (-1)^j C(i, j).
    """
    if kind not in ("T", "L", "Ltilde"):
        raise ParameterError(f"unknown triangular kind {kind!r}")
    if domain.kind == "Fp":
        base = _lucas_entries(n, lambda i, j: (i, j), domain.p)
        return ExactMatrix._wrap(base.a * _sign_grid(kind, n) % domain.p, domain)
    rows = [[1]]
    for i in range(1, n):
        prev = rows[-1]
        rows.append([1] + [prev[j - 1] + prev[j] for j in range(1, i)] + [1])
    sign = _sign_grid(kind, n)
    return ExactMatrix.from_function(
        n, n, lambda i, j: int(sign[i, j]) * rows[i][j] if j <= i else 0, domain
    )


def _sign_grid(kind: str, n: int) -> np.ndarray:
    i, j = np.indices((n, n), dtype=np.int64)
    if kind == "L":
        return 1 - 2 * (i % 2)
    if kind == "Ltilde":
        return 1 - 2 * (j % 2)
    return np.ones((n, n), dtype=np.int64)


def shifted_pascal(n: int, k: int, domain: Domain = ZZ) -> ExactMatrix:
    """Matrix with entries C(i+j+2k, i+k), 0 <= i, j < n."""
    if n < 0 or k < 0:
        raise ParameterError("n and k must be >= 0")
    if k == 0:
        return pascal_symmetric(n, domain)
    if domain.kind == "Fp":
        return _lucas_entries(n, lambda i, j: (i + j + 2 * k, i + k), domain.p)
    t = _pascal_table(n + k, n + k)
    return ExactMatrix([[t[i + k][j + k] for j in range(n)] for i in range(n)], domain, shape=(n, n))


def shifted_unit_pascal(r: int, k: int, domain: Domain = ZZ) -> ExactMatrix:
    """r x r matrix with entries C(i+j+k, i); its determinant is 1."""
    if r < 0 or k < 0:
        raise ParameterError("r and k must be >= 0")
    if k == 0:
        return pascal_symmetric(r, domain)
    if domain.kind == "Fp":
        return _lucas_entries(r, lambda i, j: (i + j + k, i), domain.p)
    t = _pascal_table(r, r + k)
    return ExactMatrix([[t[i][j + k] for j in range(r)] for i in range(r)], domain, shape=(r, r))


def _linear_powers(a: int, b: int, m: int, p: int) -> List[np.ndarray]:
    # coefficient vectors (in powers of Y) of (aX + bY)^e for e = 0..m
    out = [np.array([1], dtype=np.int64)]
    for _ in range(m):
        u = out[-1]
        v = np.zeros(len(u) + 1, dtype=np.int64)
        v[:-1] += a * u
        v[1:] += b * u
        out.append(v % p)
    return out


def sympower(a: int, b: int, c: int, d: int, n: int, p: int) -> ExactMatrix:
    """Matrix of the substitution X -> aX + bY, Y -> cX + dY on degree n-1 forms over F_p.

    Basis X^(n-1), X^(n-2) Y, ..., Y^(n-1); row i holds the coefficients of
    (aX + bY)^(n-1-i) (cX + dY)^i.
    """
    check_prime(p)
    if n < 1:
        raise ParameterError("sympower needs n >= 1")
    a, b, c, d = (x % p for x in (a, b, c, d))
    if (a * d - b * c) % p == 0:
        raise SingularMatrixError("singular 2x2 generator")
    first = _linear_powers(a, b, n - 1, p)
    second = _linear_powers(c, d, n - 1, p)
    arr = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        arr[i] = np.convolve(first[n - 1 - i], second[i]) % p
    return ExactMatrix._wrap(arr, GF(p))
