import pytest
from hypothesis import given, strategies as st

import oracles
from strategies import perm_lists
from carter_kit.config import CapacityError, override
from carter_kit.permcore import Group, from_cycles
from carter_kit.recognize import alternating, cyclic, dihedral, frobenius, psl2, symmetric
from carter_kit.structure import (
    centralizer,
    conjugacy_classes,
    derived_series,
    intersection,
    is_nilpotent,
    is_normal,
    is_solvable,
    join,
    lower_central_series,
    normal_closure,
    normal_subgroups,
    normalizer,
    o_pprime,
    p_part,
    sylow_subgroup,
)

SMALL = [symmetric(3), symmetric(4), alternating(4), alternating(5), dihedral(4), dihedral(6),
         frobenius(7, 3), cyclic(6), cyclic(12), frobenius(11, 5)]


def elems(G):
    return frozenset(G.elements())


def V4_in(S4):
    return normal_closure(S4, [from_cycles(4, (0, 1), (2, 3))])


def test_normal_closure_examples(S4):
    assert normal_closure(S4, [from_cycles(4, (0, 1))]).order == 24
    V = V4_in(S4)
    assert elems(V) == {(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)}
    assert normal_closure(S4, [tuple(range(4))]).order == 1


def test_normal_closure_outside():
    with pytest.raises(ValueError):
        normal_closure(alternating(4), [from_cycles(4, (0, 1))])


def test_derived_series_examples(S4):
    assert [H.order for H in derived_series(S4)] == [24, 12, 4, 1]
    assert is_solvable(S4)
    assert [H.order for H in derived_series(alternating(5))] == [60, 60]
    assert not is_solvable(alternating(5))
    assert [H.order for H in derived_series(cyclic(6))] == [6, 1]


def test_nilpotency_examples():
    assert is_nilpotent(dihedral(4))
    assert not is_nilpotent(symmetric(3))
    assert [H.order for H in lower_central_series(symmetric(3))] == [6, 3]
    assert is_nilpotent(Group(3, ()))


def test_normalizer_examples(S4):
    C4 = Group(4, [from_cycles(4, (0, 1, 2, 3))])
    N = normalizer(S4, C4)
    assert N.order == 8
    assert elems(N) == oracles.normalizer(elems(S4), elems(C4))
    S3 = symmetric(3)
    T = Group(3, [from_cycles(3, (0, 1))])
    assert normalizer(S3, T).same_as(T)
    assert normalizer(S4, S4).same_as(S4)


def test_normalizer_outside(S4):
    with pytest.raises(ValueError):
        normalizer(alternating(4), Group(4, [from_cycles(4, (0, 1))]))


def test_normalizer_cap(S4):
    with override(max_enumeration=10):
        with pytest.raises(CapacityError):
            normalizer(S4, Group(4, [from_cycles(4, (0, 1))]))


def test_centralizer_examples(S4):
    V = V4_in(S4)
    assert centralizer(S4, V).same_as(V)
    assert centralizer(S4, Group(4, ())).same_as(S4)
    Z = cyclic(6)
    assert centralizer(Z, Z).same_as(Z)


def test_conjugacy_class_sizes(S4):
    assert sorted(map(len, conjugacy_classes(symmetric(3)))) == [1, 2, 3]
    assert sorted(map(len, conjugacy_classes(S4))) == [1, 3, 6, 6, 8]
    assert all(len(c) == 1 for c in conjugacy_classes(cyclic(10)))


def test_normal_subgroup_examples(S4):
    assert [N.order for N in normal_subgroups(S4)] == [1, 4, 12, 24]
    assert [N.order for N in normal_subgroups(alternating(5))] == [1, 60]
    assert [N.order for N in normal_subgroups(cyclic(6))] == [1, 2, 3, 6]


def test_sylow_examples(S4, psigma27):
    assert sylow_subgroup(S4, 2).order == 8
    assert sylow_subgroup(S4, 5).order == 1
    assert sylow_subgroup(psigma27, 3).order == 81


def test_sylow_deterministic(S4):
    assert sylow_subgroup(S4, 2).generators == sylow_subgroup(S4, 2).generators


def test_o_pprime_examples(S4):
    F21 = frobenius(7, 3)
    O = o_pprime(F21, 3)
    assert O.order == 7
    assert o_pprime(S4, 2).order == 1
    assert o_pprime(cyclic(6), 5).order == 6


@pytest.mark.parametrize("G", SMALL, ids=lambda G: f"order{G.order}")
def test_against_oracles(G):
    E = elems(G)
    assert sorted(map(len, conjugacy_classes(G))) == sorted(map(len, oracles.conjugacy_classes(E)))
    ours = {elems(N) for N in normal_subgroups(G)}
    assert ours == set(oracles.normal_subgroups(E, G.degree))
    assert is_solvable(G) == oracles.is_solvable(E, G.degree)
    assert is_nilpotent(G) == oracles.is_nilpotent(E)


@pytest.mark.parametrize("G", SMALL, ids=lambda G: f"order{G.order}")
def test_lattice_closed_under_meet_and_join(G):
    Ns = normal_subgroups(G)
    keys = {elems(N) for N in Ns}
    for A in Ns:
        assert is_normal(G, A)
        for B in Ns:
            assert elems(intersection(A, B)) in keys
            assert elems(join(A, B)) in keys


@pytest.mark.parametrize("G", SMALL, ids=lambda G: f"order{G.order}")
def test_sylow_and_core(G):
    n = G.order
    for p in (2, 3, 5, 7, 11):
        P = sylow_subgroup(G, p)
        assert P.order == p_part(n, p)
        assert P.is_subgroup_of(G)
        O = o_pprime(G, p)
        for N in normal_subgroups(G):
            if N.order % p:
                assert N.is_subgroup_of(O)


# --- properties ------------------------------------------------------------


@st.composite
def subgroup_pairs(draw):
    d, gens = draw(perm_lists(min_degree=3, max_degree=5, min_size=1, max_size=2))
    G = Group(d, gens)
    elements = sorted(G.elements())
    hg = draw(st.lists(st.sampled_from(elements), min_size=0, max_size=2))
    return G, Group(d, hg)


@given(subgroup_pairs())
def test_normalizer_centralizer_vs_brute_force(pair):
    G, H = pair
    E, HE = elems(G), elems(H)
    N = normalizer(G, H)
    C = centralizer(G, H)
    assert elems(N) == oracles.normalizer(E, HE)
    assert elems(C) == oracles.centralizer(E, HE)
    assert H.is_subgroup_of(N) and is_normal(N, H)
    assert C.is_subgroup_of(N)


@given(perm_lists(min_degree=1, max_degree=6, min_size=0, max_size=3))
def test_nilpotent_implies_solvable(data):
    d, gens = data
    G = Group(d, gens)
    if is_nilpotent(G):
        assert is_solvable(G)


def test_nilpotent_implies_solvable_on_named_groups():
    for G in SMALL + [symmetric(5), psl2(7), dihedral(10), cyclic(30)]:
        if is_nilpotent(G):
            assert is_solvable(G)
