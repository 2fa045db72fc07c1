import math

import pytest
from hypothesis import given, strategies as st

import oracles
from carter_kit.permcore import Group, from_cycles
from carter_kit.recognize import alternating, cyclic, dihedral, frobenius, psl2, symmetric
from carter_kit.series import (
    Section,
    chief_series,
    composition_series,
    quotient_action,
    rc_series,
    sections_of,
)
from carter_kit.structure import is_normal, minimal_normal_subgroups, normal_closure, normal_subgroups

GROUPS = [symmetric(3), symmetric(4), alternating(4), alternating(5), symmetric(5), dihedral(4), dihedral(6),
          dihedral(10), frobenius(7, 3), frobenius(11, 5), cyclic(1), cyclic(6), cyclic(12), cyclic(30), psl2(7)]


def V4_in(S4):
    return normal_closure(S4, [from_cycles(4, (0, 1), (2, 3))])


def test_quotient_action_examples(S4):
    Q, phi = quotient_action(S4, V4_in(S4))
    assert (Q.order, Q.degree) == (6, 6)
    gens = Q.generators
    assert any(tuple(y[i] for i in x) != tuple(x[i] for i in y) for x in gens for y in gens)  # nonabelian
    T, _ = quotient_action(S4, S4)
    assert (T.order, T.degree) == (1, 1)
    Z6 = cyclic(6)
    Z3 = Group(6, [from_cycles(6, (0, 2, 4), (1, 3, 5))])
    assert quotient_action(Z6, Z3)[0].order == 2


def test_quotient_kernel_is_N(S4):
    V = V4_in(S4)
    _, phi = quotient_action(S4, V)
    e = tuple(range(6))
    kernel = {g for g in S4.elements() if phi(g) == e}
    assert kernel == set(V.elements())


def test_quotient_action_requires_normal(S4):
    with pytest.raises(ValueError):
        quotient_action(S4, Group(4, [from_cycles(4, (0, 1))]))


def test_minimal_normal_examples(S4):
    assert [M.order for M in minimal_normal_subgroups(S4)] == [4]
    assert sorted(M.order for M in minimal_normal_subgroups(cyclic(6))) == [2, 3]
    assert [M.order for M in minimal_normal_subgroups(alternating(5))] == [60]


def test_chief_examples(S4, psigma27):
    assert chief_series(S4).orders == [24, 12, 4, 1]
    A5 = alternating(5)
    assert chief_series(A5).orders == [60, 1]
    assert chief_series(psigma27).orders == [29484, 9828, 1]


def test_composition_examples(S4):
    for seed in range(5):
        assert sorted(composition_series(S4, seed).factor_orders) == [2, 2, 2, 3]
        assert composition_series(alternating(5), seed).orders == [60, 1]
    middles = {composition_series(cyclic(6), seed).orders[1] for seed in range(20)}
    assert middles == {2, 3}


def test_rc_examples(S4, psigma27):
    assert rc_series(S4).orders == [24, 12, 4, 2, 1]
    r = rc_series(alternating(5))
    assert r.orders == [60, 1] and r.witness.orders == [60, 1]
    assert rc_series(psigma27).orders == [29484, 9828, 1]


def test_sections_examples(S4):
    assert [s.order for s in sections_of(rc_series(S4))] == [2, 3, 2, 2]
    A5 = alternating(5)
    secs = sections_of(rc_series(A5))
    assert len(secs) == 1 and secs[0].A.same_as(A5) and secs[0].B.order == 1
    assert all(s.order in (2, 3) for s in sections_of(chief_series(cyclic(6))))
    assert len(sections_of(chief_series(cyclic(6)))) == 2


def test_section_validation(S4):
    T = Group(4, [from_cycles(4, (0, 1))])
    with pytest.raises(ValueError):
        Section(S4, S4, T)
    with pytest.raises(ValueError):
        Section(alternating(4), S4, V4_in(S4))


def test_series_json(S4):
    d = rc_series(S4).to_dict()
    assert d["kind"] == "rc" and d["orders"] == [24, 12, 4, 2, 1]
    assert len(d["terms"]) == 5


def _is_simple(sec):
    Q, _ = sec.factor
    return len(normal_subgroups(Q)) == 2


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"order{G.order}")
def test_series_invariants(G):
    chief = chief_series(G)
    rc = rc_series(G)
    for s in [chief, rc] + [composition_series(G, seed) for seed in range(3)]:
        assert math.prod(s.factor_orders) == G.order
        assert s.terms[0].same_as(G) and s.terms[-1].order == 1
        for a, b in zip(s.terms, s.terms[1:]):
            assert b.order < a.order and b.is_subgroup_of(a)
            assert is_normal(G if s.kind == "chief" else a, b)
        if s.kind != "chief":
            assert all(_is_simple(sec) for sec in sections_of(s))
    assert all(any(t.same_as(r) for r in rc.terms) for t in rc.witness.terms)
    # chief factors are not refinable by normal subgroups of G
    normals = normal_subgroups(G)
    for a, b in zip(chief.terms, chief.terms[1:]):
        assert not any(b.order < N.order < a.order and b.is_subgroup_of(N) and N.is_subgroup_of(a) for N in normals)


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: f"order{G.order}")
def test_chief_factor_characteristic_simplicity(G):
    for sec in sections_of(chief_series(G)):
        Q, _ = sec.factor
        mins = minimal_normal_subgroups(Q)
        assert len({M.order for M in mins}) == 1
        J = mins[0]
        for M in mins[1:]:
            J = Group(Q.degree, J.generators + M.generators)
        assert J.order == Q.order


@given(st.sampled_from(GROUPS), st.integers(0, 10_000), st.integers(0, 10_000))
def test_jordan_holder(G, s1, s2):
    a = composition_series(G, s1)
    b = composition_series(G, s2)
    assert sorted(a.factor_orders) == sorted(b.factor_orders) == sorted(rc_series(G).factor_orders)


@given(st.sampled_from(GROUPS[:8]))
def test_quotient_action_matches_brute_force_cosets(G):
    for N in normal_subgroups(G):
        Q, phi = quotient_action(G, N)
        NE = frozenset(N.elements())
        cosets = {frozenset(oracles.mul(n, g) for n in NE) for g in G.elements()}
        assert Q.order == len(cosets)
        # elements in the same coset have the same image
        for g in list(G.elements())[:12]:
            img = phi(g)
            assert all(phi(oracles.mul(n, g)) == img for n in NE)
