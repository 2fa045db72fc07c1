"""Groups of induced automorphisms of sections.

For ``H`` inside the ambient group of a section ``A/B``, elements of
``N_H(A/B) = N_H(A) ∩ N_H(B)`` act on the cosets of ``B`` in ``A`` by
``B a -> B x^-1 a x``.  The image of this action is ``Aut_H(A/B)`` and the
kernel is ``C_H(A/B)``.  Coset points come from the section's
:class:`~carter_kit.series.CosetSpace`, so images for different ``H`` on the
same section are permutations of the same point set.
"""
from __future__ import annotations

from dataclasses import dataclass

from .permcore import Group, inverse
from .series import Section
from .structure import _normalizes, intersection, scan_subgroup


@dataclass(eq=False)
class InducedAutGroup:
    section: Section
    acting_subgroup: Group
    normalizer_part: Group
    kernel: Group
    image: Group

    @property
    def order(self) -> int:
        return self.image.order


def section_normalizer(H: Group, sec: Section) -> Group:
    """``N_H(A/B)``."""
    amb = sec.ambient
    A, B = sec.A, sec.B
    if all(A.contains_lazy(_conj_fn(a, x), amb) for x in H.generators for a in A.generators) and \
            all(B.contains_lazy(_conj_fn(b, x), amb) for x in H.generators for b in B.generators):
        return H
    return scan_subgroup(H, amb, lambda x, xi: _normalizes(x, xi, A, amb) and _normalizes(x, xi, B, amb))


def _conj_fn(a, x):
    xi = inverse(x)
    return lambda pt: x[a[xi[pt]]]


def induced_aut(H: Group, sec: Section) -> InducedAutGroup:
    amb = sec.ambient
    if not H.is_subgroup_of(amb):
        raise ValueError("acting group is not inside the ambient group")
    N = section_normalizer(H, sec)
    space = sec.cosets
    image = Group(space.index, [space.conjugation_action(x) for x in N.generators])
    kernel_order = N.order // image.order
    if kernel_order == N.order:
        kernel = N
    elif kernel_order == 1:
        kernel = Group(H.degree, ())
    else:
        pairs = [(a, inverse(a)) for a in sec.A.generators]

        def acts_trivially(x, xi):
            # Ba -> B x^-1 a x is trivial iff every [a, x] lies in B
            return all(
                sec.B.contains_lazy(lambda pt, a=a, ai=ai: x(a[xi(ai[pt])]), amb)
                for a, ai in pairs
            )

        kernel = scan_subgroup(N, amb, acts_trivially, stop_at=kernel_order)
    if kernel.order * image.order != N.order:
        raise RuntimeError("induced action: |kernel| * |image| != |normalizer|")
    return InducedAutGroup(sec, H, N, kernel, image)


def centralizer_restriction_check(G: Group, H: Group, sec: Section) -> bool:
    """``C_H(A/B) = C_G(A/B) ∩ H`` as element sets."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    c_h = induced_aut(H, sec).kernel
    c_g = induced_aut(G, sec).kernel
    lhs = set(c_h.elements())
    rhs = set(intersection(c_g, H).elements())
    direct = {g for g in c_g.elements() if H.contains(g)}
    return lhs == rhs == direct


def aut_subgroup_embedding(G: Group, H: Group, sec: Section) -> bool:
    """Every generator of ``Aut_H(A/B)`` lies in ``Aut_G(A/B)``."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    big = induced_aut(G, sec).image
    return all(big.contains(g) for g in induced_aut(H, sec).image.generators)
