"""Named permutation groups and composition-factor identification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .fields import GF, is_prime, prime_power
from .permcore import Group, Perm, element_order, group_from_generators
from .series import Section
from .structure import normal_subgroups

FAMILIES = ("symmetric", "alternating", "cyclic", "dihedral", "frobenius", "psl2", "psigma_l2")


class NotSimpleError(ValueError):
    """A section expected to be a composition factor has a proper normal subgroup."""


@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))

    @property
    def name(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"

    def to_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params)}

    @classmethod
    def from_dict(cls, data: dict) -> "GroupSpec":
        return cls(data["family"], tuple(data["params"]))


def _cycle(degree: int, pts) -> Perm:
    img = list(range(degree))
    for a, b in zip(pts, pts[1:] + pts[:1]):
        img[a] = b
    return tuple(img)


def symmetric(n: int) -> Group:
    if n < 1:
        raise ValueError("n must be positive")
    if n < 3:
        return group_from_generators(n, [_cycle(n, list(range(n)))])
    return group_from_generators(n, [_cycle(n, list(range(n))), _cycle(n, [0, 1])])


def alternating(n: int) -> Group:
    if n < 1:
        raise ValueError("n must be positive")
    return group_from_generators(n, [_cycle(n, [0, 1, i]) for i in range(2, n)])


def cyclic(m: int) -> Group:
    if m < 1:
        raise ValueError("m must be positive")
    return group_from_generators(m, [_cycle(m, list(range(m)))])


def dihedral(m: int) -> Group:
    """Dihedral group of order ``2m``."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return cyclic(2)
    if m == 2:
        return group_from_generators(4, [(1, 0, 3, 2), (2, 3, 0, 1)])
    return group_from_generators(m, [_cycle(m, list(range(m))), tuple((-i) % m for i in range(m))])


def frobenius(p: int, k: int) -> Group:
    """``Z_p ⋊ Z_k`` acting on ``p`` points as ``x -> a x + b``."""
    if not is_prime(p) or k < 1 or (p - 1) % k:
        raise ValueError("need p prime and k | p-1")
    F = GF(p)
    a = F.pow(F.primitive, (p - 1) // k)
    gens = [tuple((x + 1) % p for x in range(p))]
    if k > 1:
        gens.append(tuple(a * x % p for x in range(p)))
    return group_from_generators(p, gens)


def _projective_line_maps(q: int):
    F = GF(q)
    inf = q

    def translate(x):
        return inf if x == inf else F.add(x, 1)

    lam = F.mul(F.primitive, F.primitive)

    def scale(x):
        return inf if x == inf else F.mul(lam, x)

    def invert(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        return F.neg(F.inv(x))

    def frob(x):
        return inf if x == inf else F.frobenius(x)

    return F, [translate, scale, invert], frob


def psl2(q: int) -> Group:
    """PSL(2, q), q odd, on the ``q + 1`` points of the projective line.

    Points ``0..q-1`` are field elements, point ``q`` is infinity.
    """
    pf = prime_power(q)
    if pf is None or pf[0] == 2 or q < 5:
        raise ValueError("q must be an odd prime power >= 5")
    _, maps, _ = _projective_line_maps(q)
    return group_from_generators(q + 1, [tuple(f(x) for x in range(q + 1)) for f in maps])


def psigma_l2(p: int, f: int) -> Group:
    """PSL(2, p^f) extended by the field automorphism ``x -> x^p``."""
    q = p ** f
    if not is_prime(p) or p == 2 or q < 5:
        raise ValueError("need an odd prime p with p^f >= 5")
    _, maps, frob = _projective_line_maps(q)
    gens = [tuple(m(x) for x in range(q + 1)) for m in maps]
    gens.append(tuple(frob(x) for x in range(q + 1)))
    return group_from_generators(q + 1, gens)


def frobenius_map(p: int, f: int) -> Perm:
    """The point permutation induced by ``x -> x^p`` on the projective line."""
    _, _, frob = _projective_line_maps(p ** f)
    return tuple(frob(x) for x in range(p ** f + 1))


_BUILDERS = {
    "symmetric": symmetric,
    "alternating": alternating,
    "cyclic": cyclic,
    "dihedral": dihedral,
    "frobenius": frobenius,
    "psl2": psl2,
    "psigma_l2": psigma_l2,
}


def construct(spec: GroupSpec) -> Group:
    return _BUILDERS[spec.family](*spec.params)


def field_modulus(q: int) -> tuple[int, ...]:
    """The irreducible polynomial used for GF(q), low degree first."""
    return GF(q).modulus


# ---------------------------------------------------------------------------
# factor identification


@dataclass(frozen=True)
class FactorId:
    tag: str  # "CyclicPrime" | "L2_3odd" | "OtherNonabelianSimple"
    order: int
    param: Optional[int] = None

    def __post_init__(self):
        if self.tag == "CyclicPrime" and not (self.param == self.order and is_prime(self.order)):
            raise ValueError("CyclicPrime(p) needs order p prime")
        if self.tag == "L2_3odd" and is_L2_3odd_order(self.order) != self.param:
            raise ValueError("L2_3odd(n) order mismatch")

    @property
    def is_abelian(self) -> bool:
        return self.tag == "CyclicPrime"

    def __str__(self) -> str:
        if self.tag == "OtherNonabelianSimple":
            return f"{self.tag}({self.order})"
        return f"{self.tag}({self.param})"


def l2_order(q: int) -> int:
    """``|PSL(2, q)|`` for odd q."""
    return q * (q * q - 1) // 2


def is_L2_3odd_order(m: int) -> int | None:
    """The n >= 1 with ``m = |L_2(3^(2n+1))|``, if any."""
    n = 1
    while True:
        order = l2_order(3 ** (2 * n + 1))
        if order == m:
            return n
        if order > m:
            return None
        n += 1


def identify_factor(sec: Section) -> FactorId:
    m = sec.order
    if is_prime(m):
        return FactorId("CyclicPrime", m, m)
    if m == 1:
        raise NotSimpleError("trivial section")
    Q, _ = sec.factor
    if len(normal_subgroups(Q)) != 2:
        raise NotSimpleError(f"section of order {m} is not simple")
    n = is_L2_3odd_order(m)
    if n is not None:
        return FactorId("L2_3odd", m, n)
    return FactorId("OtherNonabelianSimple", m)


def element_order_spectrum(G: Group) -> dict[int, int]:
    counts: dict[int, int] = {}
    for g in G.elements():
        o = element_order(g)
        counts[o] = counts.get(o, 0) + 1
    return dict(sorted(counts.items()))


def spectrum_matches_l2(sec: Section, fid: FactorId) -> bool:
    """Compare element-order counts of an ``L2_3odd`` section with PSL(2, q)."""
    if fid.tag != "L2_3odd":
        raise ValueError("only meaningful for L2_3odd factors")
    Q, _ = sec.factor
    return element_order_spectrum(Q) == element_order_spectrum(psl2(3 ** (2 * fid.param + 1)))
