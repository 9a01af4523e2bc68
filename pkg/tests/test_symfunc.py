from fractions import Fraction

from hypothesis import given, strategies as st

from genjack.partitions import multipartitions, partitions
from genjack.ring import Specialized, Symbolic
from genjack.symfunc import (ColoredPoly, cauchy_kernel, colored_schur, derivative,
                             mn_character, powersum_from_variables, scalar_product,
                             scalar_product_diff, schur, tensor, z)


def test_small_schur_functions():
    half = Fraction(1, 2)
    assert schur((2,)).terms == {((1, 1),): half, ((2,),): half}
    assert schur((1, 1)).terms == {((1, 1),): half, ((2,),): -half}


def test_character_table_orthogonality():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                s = sum(Fraction(mn_character(lam, nu) * mn_character(mu, nu), z(nu))
                        for nu in partitions(n))
                assert s == (lam == mu)


def test_characters_against_known_values():
    assert mn_character((3, 1), (2, 2)) == -1
    assert mn_character((2, 2), (3, 1)) == -1
    assert mn_character((3, 2), (5,)) == 0
    assert mn_character((2, 1, 1), (4,)) == 1
    assert mn_character((1, 1, 1, 1), (4,)) == -1


def test_schur_in_two_variables():
    # s_[2,1](x1, x2) = x1^2 x2 + x1 x2^2
    got = powersum_from_variables(schur((2, 1)), 2)
    assert got == {(2, 1): 1, (1, 2): 1}


mp_st = st.integers(0, 3).flatmap(lambda n: st.sampled_from(multipartitions(n, 2)))


@given(mp_st, mp_st, st.integers(0, 100))
def test_pairing_matches_differential_form(a, b, seed):
    dom = Specialized.random(2, seed)
    f, g = colored_schur(a), colored_schur(b) * dom.t1 + colored_schur(a)
    assert scalar_product(f, g, dom) == scalar_product_diff(f, g, dom)


def test_degree_one_pairing():
    dom = Symbolic(1)
    p1 = ColoredPoly.p(0, 1, 1)
    assert scalar_product(p1, p1, dom) == -dom.t1 / dom.t2


def test_kernel_degree_one():
    dom = Symbolic(2)
    k = cauchy_kernel(1, 2, dom)
    assert k.coefficient(((1,), (), (1,), ())) == -dom.t2 / dom.t1
    assert k.coefficient(((), (), (), ())) == 1


def test_derivative_and_tensor():
    p = ColoredPoly.p(0, 2, 1)
    f = p * p * 3
    assert derivative(f, 0, 2) == p * 6
    t = tensor(p, ColoredPoly.p(0, 1, 1))
    assert t.rank == 2 and t.coefficient(((2,), (1,))) == 1
