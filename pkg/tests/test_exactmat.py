from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pascalmod import (
    GF,
    QQ,
    ZZ,
    DomainError,
    ExactMatrix,
    NonUnimodularError,
    Poly,
    ShapeError,
    charpoly,
    charpoly_berkowitz,
    charpoly_hessenberg,
    det_exact,
    identity,
    inverse,
    kron,
    leading_principal_minors,
    matrix_power,
    rank,
)


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    return sum((-1) ** j * rows[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(n) if rows[0][j])


def poly_det(rows, dom):
    """det(tI - M) by cofactor expansion with polynomial entries."""
    n = len(rows)
    t = Poly.t(dom)
    cells = [[(t if i == j else Poly.zero(dom)) - Poly.const(rows[i][j], dom) for j in range(n)] for i in range(n)]

    def rec(m):
        if not m:
            return Poly.one(dom)
        out = Poly.zero(dom)
        for j, c in enumerate(m[0]):
            if not c.is_zero():
                term = c * rec([r[:j] + r[j + 1:] for r in m[1:]])
                out = out + term if j % 2 == 0 else out - term
        return out

    return rec(cells)


def int_matrices(max_n=5, lo=-9, hi=9):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


@given(int_matrices())
def test_bareiss_matches_cofactor(rows):
    M = ExactMatrix(rows, ZZ, shape=(len(rows), len(rows)))
    assert det_exact(M) == cofactor_det(rows)


@given(int_matrices(), st.sampled_from([2, 3, 5, 7]))
def test_field_det_matches_reduction(rows, p):
    n = len(rows)
    M = ExactMatrix(rows, ZZ, shape=(n, n))
    assert det_exact(M.reduce(p)) == cofactor_det(rows) % p


@given(int_matrices(4, -3, 3))
def test_rational_det(rows):
    n = len(rows)
    M = ExactMatrix([[Fraction(x, 2) for x in r] for r in rows], QQ, shape=(n, n))
    assert det_exact(M) == Fraction(cofactor_det(rows), 2**n)


def test_big_entries_switch_to_python_ints():
    rows = [[10**20, 1], [3, 10**20 + 7]]
    assert det_exact(ExactMatrix(rows, ZZ)) == 10**20 * (10**20 + 7) - 3


@given(int_matrices(5))
def test_leading_minors(rows):
    n = len(rows)
    M = ExactMatrix(rows, ZZ, shape=(n, n))
    minors = leading_principal_minors(M)
    for k, d in enumerate(minors, 1):
        assert d == cofactor_det([r[:k] for r in rows[:k]])
    assert len(minors) == n or minors[-1] == 0


@given(int_matrices(5))
def test_charpoly_over_z_matches_oracle(rows):
    n = len(rows)
    M = ExactMatrix(rows, ZZ, shape=(n, n))
    assert charpoly_berkowitz(M) == poly_det(rows, ZZ)


@settings(max_examples=50)
@given(int_matrices(7, 0, 6), st.sampled_from([2, 3, 5, 7]))
def test_hessenberg_matches_berkowitz(rows, p):
    n = len(rows)
    M = ExactMatrix(rows, ZZ, shape=(n, n)).reduce(p)
    assert charpoly_hessenberg(M) == charpoly_berkowitz(M)
    assert charpoly_berkowitz(M) == charpoly_berkowitz(ExactMatrix(rows, ZZ, shape=(n, n))).reduce(p)


def test_charpoly_of_empty_and_identity():
    assert charpoly(identity(0, GF(5))) == Poly.one(GF(5))
    assert charpoly(identity(3, ZZ)) == Poly([-1, 3, -3, 1])


@given(int_matrices(5, -4, 4), st.sampled_from([3, 5, 7]))
def test_field_inverse(rows, p):
    n = len(rows)
    M = ExactMatrix(rows, ZZ, shape=(n, n)).reduce(p)
    if det_exact(M) == 0:
        with pytest.raises(Exception):
            inverse(M)
        return
    assert M @ inverse(M) == identity(n, GF(p))


def test_integer_inverse():
    M = ExactMatrix([[2, 1], [1, 1]], ZZ)
    assert inverse(M) == ExactMatrix([[1, -1], [-1, 2]], ZZ)
    with pytest.raises(NonUnimodularError):
        inverse(ExactMatrix([[2, 0], [0, 1]], ZZ))


def test_rank_needs_field():
    M = ExactMatrix([[1, 2], [2, 4]], ZZ)
    assert rank(M.reduce(5)) == 1
    assert rank(M.to_domain(QQ)) == 1
    with pytest.raises(DomainError):
        rank(M)


def test_kron_and_power():
    A = ExactMatrix([[1, 1], [1, 0]], ZZ)
    K = kron(A, A)
    assert K.shape == (4, 4) and K[3, 3] == 0 and K[0, 3] == 1
    assert matrix_power(A, 10)[0, 0] == 89
    assert matrix_power(A, 0) == identity(2)


def test_shape_errors():
    with pytest.raises(ShapeError):
        ExactMatrix([[1, 2], [3, 4]], ZZ) @ ExactMatrix([[1, 2, 3]], ZZ)
    with pytest.raises(ShapeError):
        det_exact(ExactMatrix([[1, 2, 3]], ZZ))


@given(int_matrices(4), st.sampled_from(["Z", "Q", "Fp:5"]))
def test_json_roundtrip(rows, tag):
    from pascalmod import parse_domain

    n = len(rows)
    M = ExactMatrix(rows, ZZ, shape=(n, n)).to_domain(parse_domain(tag))
    assert ExactMatrix.from_json(M.to_json()) == M


def test_json_format():
    M = ExactMatrix([[Fraction(1, 2), 3]], QQ)
    assert M.to_json() == {"rows": 1, "cols": 2, "domain": "Q", "entries": ["1/2", "3"]}


def test_matrices_are_immutable():
    M = identity(3, GF(2))
    with pytest.raises(ValueError):
        M.a[0, 0] = 0
    assert isinstance(M.a, np.ndarray)
