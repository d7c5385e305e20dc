import pytest

from pascalmod import (
    GF,
    ExactMatrix,
    ParameterError,
    closure,
    dihedral6_check,
    generator_order_2x2,
    identity,
    pascal_symmetric,
    predicted_projective_order,
    sympower,
    trace_check,
    triangular,
)
from pascalmod.pascal import L_GENERATOR, P_GENERATOR


def test_closure_cyclic():
    P = pascal_symmetric(4, GF(2))
    G = closure([P])
    assert G.order == 3 and not G.truncated
    assert identity(4, GF(2)) in G


def test_closure_cap():
    G = closure([pascal_symmetric(11, GF(11)), triangular("L", 11, GF(11))], cap=50)
    assert G.truncated and G.order > 50


def test_closure_rejects_mixed_shapes():
    with pytest.raises(Exception):
        closure([identity(2, GF(3)), identity(3, GF(3))])
    with pytest.raises(Exception):
        closure([ExactMatrix([[1, 1], [1, 1]], GF(3))])


@pytest.mark.parametrize("q,p", [(2, 2), (4, 2), (8, 2), (3, 3), (9, 3), (5, 5), (7, 7)])
def test_dihedral(q, p):
    assert dihedral6_check(q, p).passed


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_trace(p):
    assert trace_check(p).passed


def test_trace_needs_odd_prime():
    with pytest.raises(ParameterError):
        trace_check(2)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_closure_matches_projective_2x2_order(p):
    # the n x n closure equals the image of the 2x2 generators in PGL_2(F_p)
    n_by_n = closure([pascal_symmetric(p, GF(p)), triangular("L", p, GF(p))]).order
    assert n_by_n == generator_order_2x2(p, [P_GENERATOR, L_GENERATOR], "scalars")


def test_scalars_act_trivially():
    for p, l in ((5, 1), (5, 2), (7, 1)):
        n = p**l
        for c in range(1, p):
            assert sympower(c, 0, 0, c, n, p) == identity(n, GF(p))


def test_quotient_orders():
    gens = [P_GENERATOR, L_GENERATOR]
    assert [generator_order_2x2(p, gens, "sign") for p in (5, 7, 29)] == [24, 42, 120]
    assert [generator_order_2x2(p, gens, "scalars") for p in (5, 7, 29)] == [12, 42, 60]


@pytest.mark.parametrize("p", [11, 13])
def test_generic_primes_reach_projective_prediction(p):
    G = closure([pascal_symmetric(p, GF(p)), triangular("L", p, GF(p))])
    assert G.order == predicted_projective_order(p)
