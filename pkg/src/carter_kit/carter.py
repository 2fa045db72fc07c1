"""Carter subgroups: nilpotent self-normalizing subgroups.

Nilpotent subgroups are enumerated up to conjugacy by cyclic extension:
start from cyclic subgroups of prime order and repeatedly adjoin an element
``g`` of ``N_G(H)`` whose image in ``N_G(H)/H`` has prime order, keeping only
nilpotent results.  Every nilpotent group has a chain of normal subgroups of
prime index, so no nilpotent subgroup is lost by the pruning.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .config import CONFIG, check_cap
from .fields import is_prime
from .permcore import Group, Perm, compose, element_order, inverse
from .structure import _word_fn, is_nilpotent, normalizer


@dataclass(eq=False)
class CarterWitness:
    ambient: Group
    K: Group
    odd_order: bool
    three_divides: bool

    @classmethod
    def of(cls, ambient: Group, K: Group) -> "CarterWitness":
        return cls(ambient, K, K.order % 2 == 1, K.order % 3 == 0)

    def verify(self) -> bool:
        return (
            is_carter(self.ambient, self.K)
            and self.odd_order == (self.K.order % 2 == 1)
            and self.three_divides == (self.K.order % 3 == 0)
        )

    def to_dict(self) -> dict:
        return {
            "order": self.K.order,
            "odd_order": self.odd_order,
            "three_divides": self.three_divides,
            "generators": [list(g) for g in self.K.generators],
        }


def is_carter(G: Group, K: Group) -> bool:
    if not K.is_subgroup_of(G):
        raise ValueError("K is not a subgroup of G")
    return is_nilpotent(K) and normalizer(G, K).order == K.order


def orbit_lengths(H: Group) -> list[int]:
    seen = set()
    out = []
    for pt in range(H.degree):
        if pt in seen:
            continue
        orb = {pt}
        stack = [pt]
        while stack:
            x = stack.pop()
            for g in H.generators:
                y = g[x]
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        seen |= orb
        out.append(len(orb))
    return sorted(out)


def subgroup_fingerprint(H: Group) -> tuple:
    """Conjugation-invariant summary: order, element orders, orbit lengths."""
    orders = Counter(element_order(h) for h in H.elements())
    return (H.order, tuple(sorted(orders.items())), tuple(orbit_lengths(H)))


def conjugating_element(G: Group, H: Group, K: Group) -> Perm | None:
    """Some ``x`` in ``G`` with ``H^x = K``, by scanning ``G``."""
    if H.order != K.order:
        return None
    for word, iword in G.words():
        x, xi = _word_fn(word), _word_fn(iword)
        if _normalizes_into(x, xi, H, K, G):
            out = tuple(range(G.degree))
            for u in word:
                out = compose(out, u)
            return out
    return None


def _normalizes_into(x, xi, H: Group, K: Group, ambient: Group) -> bool:
    return all(K.contains_lazy(lambda pt, h=h: x(h[xi(pt)]), ambient) for h in H.generators)


def _order_mod(g: Perm, H: Group) -> int:
    k, y = 1, g
    while not H.contains(y):
        y = compose(y, g)
        k += 1
    return k


class _ClassStore:
    def __init__(self, G: Group):
        self.G = G
        self.reps: list[tuple[tuple, Group]] = []

    def add_if_new(self, H: Group) -> bool:
        fp = subgroup_fingerprint(H)
        for fp2, K in self.reps:
            if fp2 == fp and conjugating_element(self.G, H, K) is not None:
                return False
        self.reps.append((fp, H))
        check_cap(len(self.reps), CONFIG.max_nilpotent_classes, "nilpotent class count")
        return True


def _class_of(G: Group, g: Perm) -> set[Perm]:
    gens = [(s, inverse(s)) for s in G.generators]
    cls = {g}
    stack = [g]
    while stack:
        x = stack.pop()
        for s, si in gens:
            c = compose(compose(si, x), s)
            if c not in cls:
                cls.add(c)
                stack.append(c)
    return cls


def nilpotent_subgroup_classes(G: Group) -> list[Group]:
    """Representatives of the conjugacy classes of nontrivial nilpotent subgroups."""
    check_cap(G.order, CONFIG.max_nilpotent_order, "group order for nilpotent enumeration")
    store = _ClassStore(G)
    covered: set[Perm] = set()
    layer = []
    for e in G.elements():
        if e in covered:
            continue
        o = element_order(e)
        if not is_prime(o):
            continue
        # every generator of a conjugate of <e> is now accounted for
        x = e
        for _ in range(o - 1):
            covered |= _class_of(G, x)
            x = compose(x, e)
        H = Group(G.degree, [e])
        store.reps.append((subgroup_fingerprint(H), H))
        check_cap(len(store.reps), CONFIG.max_nilpotent_classes, "nilpotent class count")
        layer.append(H)

    while layer:
        next_layer = []
        for H in layer:
            N = normalizer(G, H)
            produced: list[Group] = []
            for g in N.elements():
                if H.contains(g) or any(K.contains(g) for K in produced):
                    continue
                if not is_prime(_order_mod(g, H)):
                    continue
                K = Group(G.degree, H.generators + (g,))
                produced.append(K)
                if is_nilpotent(K) and store.add_if_new(K):
                    next_layer.append(K)
        layer = next_layer
    reps = sorted(store.reps, key=lambda item: (item[0][0], item[0]))
    return [H for _, H in reps]


def carter_subgroups(G: Group) -> list[CarterWitness]:
    """One witness per conjugacy class of Carter subgroups (possibly none)."""
    if G.order == 1:
        return [CarterWitness.of(G, G)]
    out = []
    for K in nilpotent_subgroup_classes(G):
        if normalizer(G, K).order == K.order:
            out.append(CarterWitness.of(G, K))
    return out
