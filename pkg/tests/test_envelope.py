import pytest
from hypothesis import given, strategies as st

from genjack.envelope import (KINDS, Chamber, Character, bruteforce_entry, chamber_sign, entry,
                              euler_factor, euler_norm, jack, jack_schur, permutation_term, phi,
                              rho, star, transition)
from genjack.partitions import Box, multipartitions, parse
from genjack.reference import EXPANSIONS
from genjack.ring import Specialized, Symbolic, parse as rparse


def R(text, r):
    return rparse(text, r)


def test_characters():
    assert phi(Box(1, 1, 0), 2) == Character((0, 1), 1, 0)
    assert rho(Box(0, 0, 1), 2) == Character((1, 0), -1, 0)


def test_chamber_signs():
    t1 = Character.t(1, 0, 2)
    assert chamber_sign(t1, Chamber.PLUS) == 1
    assert chamber_sign(t1, Chamber.MINUS) == -1
    ch = Character.u_var(0, 2) - Character.u_var(1, 2) + Character.t(5, 0, 2)
    assert chamber_sign(ch, Chamber.MINUS) == -1
    assert chamber_sign(Character.t(0, 0, 2), Chamber.PLUS) == 0
    with pytest.raises(ValueError):
        chamber_sign(Character((2, -2)), Chamber.PLUS)
    with pytest.raises(ValueError):
        chamber_sign(Character((0,), 1, 1), Chamber.PLUS)


def test_star():
    dom = Symbolic(1)
    assert star(dom.t1, 1, dom) == dom.t1
    assert star(dom.t1, -1, dom) == dom.t2
    assert star(dom.u[0], 0, dom) == 1


def test_euler_factors():
    dom = Symbolic(1)
    zero = Character((0,))
    assert euler_factor((1,), (1,), zero, dom) == R("t1*t2", 1)
    assert euler_factor((2,), (2,), zero, dom) == R("2*t1^2*t2*(t2 - t1)", 1)
    assert euler_factor((), (), zero, dom) == 1
    assert euler_norm(((1, 1),), ((1, 1),), dom) == R("2*t1*t2^2*(t1 - t2)", 1)


def test_permutation_terms():
    dom = Symbolic(1)
    lam = ((2,),)
    assert permutation_term("T", lam, lam, (0, 1), dom) == R("t2*(t2 - t1)", 1)
    assert permutation_term("T", lam, lam, (1, 0), dom) == 0
    dom2 = Symbolic(2)
    a, b = ((1,), ()), ((), (1,))
    assert permutation_term("T", a, b, (0,), dom2) == R("t2*(t1 + t2)", 2)


def test_degree_one_blocks():
    dom = Symbolic(2)
    a, b = ((1,), ()), ((), (1,))
    assert entry("T", b, b, dom) == R("(t1 + t2 - u1 + u2)*t2", 2)
    assert entry("T", a, a, dom) == R("-t2*(u1 - u2)", 2)
    assert entry("T", a, b, dom) == R("(t1 + t2)*t2", 2)
    assert entry("T", b, a, dom) == 0
    assert entry("Tstar", ((1,),), ((1,),)) == R("t1", 1)


@pytest.mark.parametrize("r", sorted(EXPANSIONS))
def test_published_expansions(r):
    dom = Symbolic(r)
    for text, terms in EXPANSIONS[r].items():
        got = jack_schur(parse(text), "J", dom).coeffs
        want = {parse(m): R(c, r) for m, c in terms}
        assert set(got) == set(want), text
        for k in want:
            assert got[k] == want[k], (text, k)


def test_empty_multipartition():
    for r in (1, 2, 3):
        mp = ((),) * r
        assert jack(mp) == 1
        assert transition("U", r, 0)[mp, mp] == 1


@pytest.mark.parametrize("r,n", [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_engine_matches_literal_sum(r, n):
    dom = Symbolic(r)
    for kind in KINDS:
        for lam in multipartitions(n, r):
            for mu in multipartitions(n, r):
                assert entry(kind, lam, mu, dom) == bruteforce_entry(kind, lam, mu, dom), (kind, lam, mu)


@given(st.integers(0, 10**6), st.sampled_from(multipartitions(4, 2)), st.sampled_from(multipartitions(4, 2)),
       st.sampled_from(KINDS))
def test_specialized_matches_symbolic(seed, lam, mu, kind):
    pt = Specialized.random(2, seed)
    assert entry(kind, lam, mu, pt) == entry(kind, lam, mu).evaluate(pt.point)


@pytest.mark.parametrize("r,n", [(1, 3), (2, 2), (2, 3)])
def test_transposition_identities(r, n):
    T, Ts, U, Us = (transition(k, r, n) for k in KINDS)
    assert T.transposed_equals(Us)
    assert Ts.transposed_equals(U)


def test_grading():
    for mp in multipartitions(3, 2):
        assert jack(mp).degrees() == {3}


def test_triangularity_rank_one():
    # J_lam only involves s_mu with mu lexicographically at most lam
    for n in range(1, 6):
        T = transition("T", 1, n)
        for i, lam in enumerate(T.index):
            assert T[lam, lam] != 0
            assert all(T[lam, mu] == 0 for mu in T.index[i + 1:])
