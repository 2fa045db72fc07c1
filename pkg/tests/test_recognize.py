import itertools

import pytest
from hypothesis import given, strategies as st

from carter_kit.fields import GF, GF3_POLYNOMIALS, find_irreducible, is_prime, prime_power
from carter_kit.permcore import Group, conjugate, element_order
from carter_kit.recognize import (
    FactorId,
    GroupSpec,
    NotSimpleError,
    alternating,
    construct,
    cyclic,
    field_modulus,
    frobenius_map,
    identify_factor,
    is_L2_3odd_order,
    l2_order,
    psigma_l2,
    psl2,
    spectrum_matches_l2,
    symmetric,
)
from carter_kit.series import Section
from carter_kit.structure import normal_subgroups


def _has_factor(poly, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    f = len(poly) - 1
    for d in range(1, f // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = list(low) + [1]
            rem = list(poly)
            for k in range(len(rem) - 1, d - 1, -1):
                c = rem[k] % p
                if c:
                    for i, a in enumerate(div):
                        rem[k - d + i] = (rem[k - d + i] - c * a) % p
            if not any(r % p for r in rem[:d]):
                return True
    return False


@pytest.mark.parametrize("f", sorted(GF3_POLYNOMIALS))
def test_gf3_table_irreducible(f):
    poly = GF3_POLYNOMIALS[f]
    assert len(poly) == f + 1 and poly[-1] == 1
    assert not _has_factor(poly, 3)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 125])
def test_field_axioms(q):
    F = GF(q)
    p, f = prime_power(q)
    if f > 1:
        assert not _has_factor(F.modulus, p)
    assert F.multiplicative_order(F.primitive) == q - 1
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
    # Frobenius is a field automorphism
    for a, b in itertools.islice(itertools.product(range(q), repeat=2), 0, None, max(1, q * q // 300)):
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))


def test_field_modulus_recorded():
    assert field_modulus(27) == GF3_POLYNOMIALS[3]
    assert find_irreducible(3, 3) == GF3_POLYNOMIALS[3]


@given(st.integers(2, 400))
def test_prime_power_roundtrip(q):
    pf = prime_power(q)
    if pf is None:
        assert sum(1 for d in range(2, q + 1) if q % d == 0 and is_prime(d)) > 1
    else:
        assert is_prime(pf[0]) and pf[0] ** pf[1] == q


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 27])
def test_psl2_orders(q):
    G = psl2(q)
    assert G.degree == q + 1
    assert G.order == q * (q - 1) * (q + 1) // 2 == l2_order(q)


def test_construct_examples():
    G = construct(GroupSpec("psl2", (27,)))
    assert (G.degree, G.order) == (28, 9828)
    H = construct(GroupSpec("psigma_l2", (3, 3)))
    assert (H.degree, H.order) == (28, 29484)
    assert construct(GroupSpec("cyclic", (1,))).order == 1


@pytest.mark.parametrize("spec,order", [
    (("symmetric", (5,)), 120), (("alternating", (6,)), 360), (("cyclic", (30,)), 30),
    (("dihedral", (10,)), 20), (("dihedral", (2,)), 4), (("frobenius", (7, 3)), 21),
    (("frobenius", (11, 5)), 55), (("psigma_l2", (3, 2)), 720),
])
def test_family_orders(spec, order):
    assert construct(GroupSpec(*spec)).order == order


@pytest.mark.parametrize("bad", [("psl2", (4,)), ("psl2", (6,)), ("psl2", (3,)), ("frobenius", (7, 4)),
                                 ("frobenius", (8, 7)), ("cyclic", (0,))])
def test_invalid_params(bad):
    with pytest.raises(ValueError):
        construct(GroupSpec(*bad))


def test_unknown_family():
    with pytest.raises(ValueError):
        GroupSpec("mathieu", (11,))


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
def test_psl2_simple(q):
    assert len(normal_subgroups(psl2(q))) == 2


@pytest.mark.parametrize("p,f", [(3, 2), (3, 3), (5, 2)])
def test_frobenius_element(p, f):
    phi = frobenius_map(p, f)
    assert element_order(phi) == f
    L = psl2(p**f)
    assert all(L.contains(conjugate(g, phi)) for g in L.generators)
    assert psigma_l2(p, f).order == f * L.order


def test_identify_factor_examples():
    Z3 = cyclic(3)
    assert identify_factor(Section(Z3, Z3, Group(3, ()))) == FactorId("CyclicPrime", 3, 3)
    L = psl2(27)
    fid = identify_factor(Section(L, L, Group(28, ())))
    assert fid == FactorId("L2_3odd", 9828, 1)
    assert str(fid) == "L2_3odd(1)"
    A6 = alternating(6)
    fid = identify_factor(Section(A6, A6, Group(6, ())))
    assert fid == FactorId("OtherNonabelianSimple", 360)
    assert str(fid) == "OtherNonabelianSimple(360)"


def test_identify_factor_rejects_non_simple():
    S4 = symmetric(4)
    with pytest.raises(NotSimpleError):
        identify_factor(Section(S4, S4, Group(4, ())))


def test_l2_spectrum():
    L = psl2(27)
    sec = Section(L, L, Group(28, ()))
    assert spectrum_matches_l2(sec, identify_factor(sec))


def test_l2_order_examples():
    assert is_L2_3odd_order(9828) == 1
    assert is_L2_3odd_order(360) is None
    assert is_L2_3odd_order(1) is None


@pytest.mark.parametrize("n", range(1, 6))
def test_l2_order_roundtrip(n):
    q = 3 ** (2 * n + 1)
    assert is_L2_3odd_order(q * (q * q - 1) // 2) == n
    assert is_L2_3odd_order(q * (q * q - 1) // 2 + 1) is None


def test_factor_id_invariants():
    with pytest.raises(ValueError):
        FactorId("CyclicPrime", 4, 4)
    with pytest.raises(ValueError):
        FactorId("L2_3odd", 360, 1)
    assert FactorId("CyclicPrime", 5, 5).is_abelian


def test_groupspec_roundtrip():
    s = GroupSpec("psigma_l2", (3, 3))
    assert GroupSpec.from_dict(s.to_dict()) == s
    assert s.name == "psigma_l2(3,3)"
