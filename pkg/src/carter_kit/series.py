"""Coset spaces, quotient actions, sections and normal/subnormal series."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Literal

from .config import CONFIG, check_cap
from .fields import is_prime
from .permcore import Epimorphism, Group, Perm, compose, identity, inverse
from .structure import is_normal, join, minimal_normal_subgroups, normal_subgroups


class CosetSpace:
    """Right cosets ``B a`` of ``B`` in ``A`` with canonical labels.

    Point 0 is the coset ``B`` itself; the remaining points are numbered in
    breadth-first order of the orbit of ``B`` under right multiplication by
    the generators of ``A``, in generator order.  Labels depend only on
    ``(A, B)``.
    """

    def __init__(self, A: Group, B: Group):
        if A.order % B.order:
            raise ValueError("B is not a subgroup of A")
        self.A = A
        self.B = B
        self.index = A.order // B.order
        check_cap(self.index, CONFIG.max_cosets, "coset count")
        ident = identity(A.degree)
        self.reps: list[Perm] = [self.canonical(ident)]
        self._label: dict[Perm, int] = {self.reps[0]: 0}
        i = 0
        while i < len(self.reps):
            r = self.reps[i]
            i += 1
            for s in A.generators:
                c = self.canonical(compose(r, s))
                if c not in self._label:
                    self._label[c] = len(self.reps)
                    self.reps.append(c)
        if len(self.reps) != self.index:
            raise ValueError("B is not a subgroup of A")

    def canonical(self, g: Perm) -> Perm:
        """The element of ``B g`` with lexicographically least base images."""
        for lvl in self.B._levels:
            best = min(lvl.trans, key=g.__getitem__)
            if best != lvl.point:
                g = compose(lvl.trans[best], g)
        return g

    def label(self, g: Perm) -> int:
        return self._label[self.canonical(g)]

    def right_action(self, x: Perm) -> Perm:
        """Permutation of labels induced by ``B a -> B a x``."""
        return tuple(self.label(compose(r, x)) for r in self.reps)

    def conjugation_action(self, x: Perm) -> Perm:
        """Permutation of labels induced by ``B a -> B x^-1 a x``."""
        xi = inverse(x)
        return tuple(self.label(compose(compose(xi, r), x)) for r in self.reps)


def quotient_action(G: Group, N: Group) -> tuple[Group, Epimorphism]:
    """``G/N`` acting on the right cosets of ``N``, with the natural map."""
    if not (N.is_subgroup_of(G) and is_normal(G, N)):
        raise ValueError("N is not a normal subgroup of G")
    space = CosetSpace(G, N)
    images = [space.right_action(g) for g in G.generators]
    Q = Group(space.index, images)
    return Q, Epimorphism(G, Q, images, coset_reps=space.reps)


@dataclass(eq=False)
class Section:
    """``A/B`` with ``B`` normal in ``A``, both inside ``ambient``."""

    ambient: Group
    A: Group
    B: Group

    def __post_init__(self):
        if not self.B.is_subgroup_of(self.A):
            raise ValueError("B is not a subgroup of A")
        if not self.A.is_subgroup_of(self.ambient):
            raise ValueError("A is not a subgroup of the ambient group")
        if not is_normal(self.A, self.B):
            raise ValueError("B is not normal in A")

    @property
    def order(self) -> int:
        return self.A.order // self.B.order

    @cached_property
    def cosets(self) -> CosetSpace:
        return CosetSpace(self.A, self.B)

    @cached_property
    def factor(self) -> tuple[Group, Callable[[Perm], Perm]]:
        """``A/B`` as a permutation group plus a lifting map back into ``A``.

        When ``B`` is trivial this is ``A`` itself.
        """
        return factor_group(self.A, self.B)

    def __repr__(self) -> str:
        return f"Section({self.A.order}/{self.B.order})"


def factor_group(G: Group, N: Group) -> tuple[Group, Callable[[Perm], Perm]]:
    if N.order == 1:
        return G, lambda y: y
    Q, phi = quotient_action(G, N)
    return Q, phi.lift


def pullback(N: Group, lift: Callable[[Perm], Perm], M: Group) -> Group:
    """Preimage of ``M`` under the quotient map with kernel ``N``."""
    return Group(N.degree, N.generators + tuple(lift(m) for m in M.generators))


SeriesKind = Literal["chief", "composition", "rc"]


@dataclass(eq=False)
class Series:
    ambient: Group
    terms: list[Group]
    kind: SeriesKind
    witness: "Series | None" = field(default=None, repr=False)

    @property
    def orders(self) -> list[int]:
        return [t.order for t in self.terms]

    @property
    def factor_orders(self) -> list[int]:
        return [a.order // b.order for a, b in zip(self.terms, self.terms[1:])]

    def __len__(self) -> int:
        return len(self.terms) - 1

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "orders": self.orders,
            "terms": [[list(g) for g in t.generators] for t in self.terms],
        }


def _fingerprint(H: Group) -> tuple:
    return (H.order, tuple(sorted(H.generators)))


def chief_series(G: Group) -> Series:
    """Chief series, built bottom-up from minimal normal subgroups of quotients."""
    N = Group(G.degree, ())
    ascending = [N]
    while N.order < G.order:
        Q, lift = factor_group(G, N)
        M = min(minimal_normal_subgroups(Q), key=_fingerprint)
        N = pullback(N, lift, M)
        ascending.append(N)
    return Series(G, ascending[::-1], "chief")


def _maximal_normal_subgroups(T: Group) -> list[Group]:
    proper = [N for N in normal_subgroups(T) if N.order < T.order]
    return [M for M in proper
            if not any(N.order > M.order and M.is_subgroup_of(N) for N in proper)]


def composition_series(G: Group, choice_seed: int = 0) -> Series:
    """A composition series; ``choice_seed`` picks among maximal normal subgroups."""
    rng = random.Random(choice_seed)
    terms = [G]
    T = G
    while T.order > 1:
        if is_prime(T.order):
            T = Group(G.degree, ())
        else:
            choices = sorted(_maximal_normal_subgroups(T), key=_fingerprint)
            T = choices[rng.randrange(len(choices))]
        terms.append(T)
    return Series(G, terms, "composition")


def refine_chief_factor(A: Group, B: Group) -> list[Group]:
    """Subgroups strictly between ``B`` and ``A`` giving simple factors.

    ``A/B`` is characteristically simple, a direct power of a simple group;
    its minimal normal subgroups are joined one at a time.  Returned in
    descending order.
    """
    if is_prime(A.order // B.order):
        return []
    Q, lift = factor_group(A, B)
    mins = sorted(minimal_normal_subgroups(Q), key=_fingerprint)
    if mins[0].order == Q.order:
        return []
    Y = Group(Q.degree, ())
    ascending = []
    while True:
        M = next(M for M in mins if not M.is_subgroup_of(Y))
        Y = join(Y, M)
        if Y.order == Q.order:
            break
        ascending.append(pullback(B, lift, Y))
    return ascending[::-1]


def rc_series(G: Group) -> Series:
    """Composition series refining :func:`chief_series`."""
    chief = chief_series(G)
    terms = [G]
    for A, B in zip(chief.terms, chief.terms[1:]):
        terms.extend(refine_chief_factor(A, B))
        terms.append(B)
    return Series(G, terms, "rc", witness=chief)


def sections_of(s: Series) -> list[Section]:
    return [Section(s.ambient, a, b) for a, b in zip(s.terms, s.terms[1:])]
