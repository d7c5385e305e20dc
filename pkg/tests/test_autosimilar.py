from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pascalmod import (
    AutosimilarSpec,
    DegeneracyError,
    ParameterError,
    det_by_digits,
    det_exact,
    diagonal_factors,
    entry,
    kron,
    ldu_seed,
    materialize,
    pascal_mod2_spec,
    pascal_mod3_spec,
    pascal_reduced,
)


def test_pascal_seeds_match_reductions():
    for spec, p in ((pascal_mod2_spec(), 2), (pascal_mod3_spec(), 3)):
        M = materialize(spec, 40)
        R = pascal_reduced(40, p)
        assert all(M[i, j] == R[i, j] for i in range(40) for j in range(40))


def test_entry_agrees_with_materialize():
    spec = pascal_mod3_spec()
    M = materialize(spec, 30)
    assert all(entry(spec, s, t) == M[s, t] for s in range(30) for t in range(30))


def test_kronecker_structure():
    spec = pascal_mod3_spec()
    assert materialize(spec, 27) == kron(spec.seed, spec.seed, spec.seed)


def test_ldu_of_pascal_seeds():
    assert diagonal_factors(pascal_mod2_spec()) == (1, -1)
    assert diagonal_factors(pascal_mod3_spec()) == (1, -2, Fraction(-1, 2))
    L, D, U = ldu_seed(pascal_mod3_spec())
    assert L @ D @ U == pascal_mod3_spec().seed


def test_degenerate_seed():
    spec = AutosimilarSpec.from_entries(3, [1, 2, 0, 2, 4, 1, 0, 1, 1])
    assert not spec.nondegenerate
    with pytest.raises(DegeneracyError) as err:
        ldu_seed(spec)
    assert err.value.size == 2


def test_bad_seeds():
    with pytest.raises(ParameterError):
        AutosimilarSpec.from_entries(2, [2, 1, 1, 0])
    with pytest.raises(ParameterError):
        AutosimilarSpec.from_entries(2, [1, 1, 1])
    with pytest.raises(Exception):
        AutosimilarSpec.from_entries(1, [1])


def test_rational_seed_strings():
    spec = AutosimilarSpec.from_entries(2, ["1", "1/2", "-3/4", "5"])
    assert spec.seed[1, 0] == Fraction(-3, 4)


seeds = st.integers(2, 3).flatmap(
    lambda b: st.tuples(st.just(b), st.lists(st.integers(-3, 3), min_size=b * b - 1, max_size=b * b - 1)))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 30))
def test_det_by_digits_property(seed, n):
    b, rest = seed
    spec = AutosimilarSpec.from_entries(b, [1] + rest)
    if not spec.nondegenerate:
        return
    assert det_exact(materialize(spec, n)) == det_by_digits(spec, n)


@pytest.mark.parametrize("n", [1, 2, 7, 26, 27, 28, 100, 243])
def test_det_by_digits_direct(n):
    for spec in (pascal_mod2_spec(), pascal_mod3_spec()):
        assert det_exact(materialize(spec, n)) == det_by_digits(spec, n)
