"""Permutations and stabilizer-chain permutation groups.

A permutation of degree ``d`` is a tuple ``p`` of length ``d`` with ``p[i]``
the image of ``i``.  Products are read left to right: ``compose(p, q)``
applies ``p`` first, then ``q``.  Conjugation is ``x^-1 p x``.

Groups are built by a deterministic Schreier-Sims algorithm.  A :class:`Group`
is immutable once constructed.
"""
from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .config import CONFIG, CapacityError, check_cap

Perm = tuple


def check_perm(p: Sequence[int], degree: int | None = None) -> Perm:
    """Return ``p`` as a tuple, raising ``ValueError`` if it is not a bijection."""
    p = tuple(int(x) for x in p)
    if not p:
        raise ValueError("permutation of degree 0")
    if degree is not None and len(p) != degree:
        raise ValueError(f"expected degree {degree}, got {len(p)}")
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {list(p)}")
    return p


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` then ``q``: the result maps ``i`` to ``q[p[i]]``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} != {len(q)}")
    return tuple(map(q.__getitem__, p))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(p: Perm, x: Perm) -> Perm:
    """``x^-1 p x``."""
    return compose(compose(inverse(x), p), x)


def commutator(a: Perm, b: Perm) -> Perm:
    """``a^-1 b^-1 a b``."""
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def power(p: Perm, n: int) -> Perm:
    result = identity(len(p))
    base = p if n >= 0 else inverse(p)
    n = abs(n)
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def element_order(p: Perm) -> int:
    return math.lcm(*(len(c) for c in cycles(p)))


def from_cycles(degree: int, *cycs: Sequence[int]) -> Perm:
    img = list(range(degree))
    for c in cycs:
        for a, b in zip(c, c[1:] + type(c)(c[:1])):
            img[a] = b
    return check_perm(img, degree)


def fmt_perm(p: Perm) -> str:
    out = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles(p) if len(c) > 1)
    return out or "()"


# ---------------------------------------------------------------------------
# stabilizer chain


class NotHomomorphismError(ValueError):
    pass


@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    trans: dict = field(default_factory=dict)
    itrans: dict = field(default_factory=dict)
    checked: set = field(default_factory=set)

    def extend_orbit(self) -> None:
        queue = list(self.trans)
        gens = self.gens
        trans = self.trans
        while queue:
            pt = queue.pop()
            u = trans[pt]
            for s in gens:
                img = s[pt]
                if img not in trans:
                    w = compose(u, s)
                    trans[img] = w
                    self.itrans[img] = inverse(w)
                    queue.append(img)


def _strip(levels: list[_Level], g: Perm, start: int = 0) -> tuple[Perm, int]:
    for j in range(start, len(levels)):
        lvl = levels[j]
        x = g[lvl.point]
        v = lvl.itrans.get(x)
        if v is None:
            return g, j
        if x != lvl.point:
            g = compose(g, v)
    return g, len(levels)


def _schreier_sims(degree: int, gens: Sequence[Perm], point_limit: int | None = None) -> list[_Level]:
    limit = degree if point_limit is None else point_limit
    ident = identity(degree)

    def moved_point(h: Perm) -> int:
        for i in range(limit):
            if h[i] != i:
                return i
        raise NotHomomorphismError("element moves no base-eligible point")

    levels: list[_Level] = []

    def new_level(h: Perm) -> None:
        b = moved_point(h)
        levels.append(_Level(point=b, trans={b: ident}, itrans={b: ident}))

    gens = list(dict.fromkeys(g for g in gens if g != ident))
    for g in gens:
        if all(g[lvl.point] == lvl.point for lvl in levels):
            new_level(g)
    for i, lvl in enumerate(levels):
        prefix = [l.point for l in levels[:i]]
        lvl.gens = [g for g in gens if all(g[b] == b for b in prefix)]
        lvl.extend_orbit()

    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        jumped = False
        for delta in list(lvl.trans):
            u = lvl.trans[delta]
            for k, s in enumerate(lvl.gens):
                if (delta, k) in lvl.checked:
                    continue
                lvl.checked.add((delta, k))
                us = compose(u, s)
                w_inv = lvl.itrans[s[delta]]
                sg = compose(us, w_inv)
                if sg == ident:
                    continue
                h, j = _strip(levels, sg, i + 1)
                if j == len(levels) and h == ident:
                    continue
                # sifting failed: h becomes a new strong generator
                lvl.checked.discard((delta, k))
                if j == len(levels):
                    new_level(h)
                for l in range(i + 1, j + 1):
                    levels[l].gens.append(h)
                    levels[l].extend_orbit()
                i = j
                jumped = True
                break
            if jumped:
                break
        if not jumped:
            i -= 1
    return levels


class Group:
    """Permutation group of fixed degree with a stabilizer chain."""

    def __init__(self, degree: int, generators: Iterable[Perm] = (), *, _point_limit: int | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        self._levels = _schreier_sims(degree, self.generators, _point_limit)
        self.order = math.prod(len(lvl.trans) for lvl in self._levels)

    def __repr__(self) -> str:
        return f"Group(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._levels)

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [list(lvl.trans) for lvl in self._levels]

    @property
    def strong_generators(self) -> list[list[Perm]]:
        return [list(lvl.gens) for lvl in self._levels]

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order == 1

    def contains(self, p: Perm) -> bool:
        if len(p) != self.degree:
            raise ValueError(f"degree mismatch: {len(p)} != {self.degree}")
        h, j = _strip(self._levels, tuple(p))
        return j == len(self._levels) and is_identity(h)

    __contains__ = contains

    def contains_lazy(self, f: Callable[[int], int], ambient: "Group") -> bool:
        """Membership of an element known to lie in ``ambient`` ⊇ self.

        ``f`` evaluates the element at a point.  Only base points are
        touched, so the cost does not depend on the degree.
        """
        invs: list[Perm] = []

        def ev(pt: int) -> int:
            pt = f(pt)
            for v in invs:
                pt = v[pt]
            return pt

        for lvl in self._levels:
            v = lvl.itrans.get(ev(lvl.point))
            if v is None:
                return False
            invs.append(v)
        return all(ev(b) == b for b in ambient.base)

    def is_subgroup_of(self, other: "Group") -> bool:
        return self.order <= other.order and other.order % self.order == 0 and all(
            other.contains(g) for g in self.generators
        )

    def same_as(self, other: "Group") -> bool:
        return self.order == other.order and all(other.contains(g) for g in self.generators)

    def words(self) -> Iterator[tuple[tuple[Perm, ...], tuple[Perm, ...]]]:
        """Yield ``(word, inverse_word)`` for every element.

        Both are tuples of permutations in application order; the
        enumeration order matches :meth:`elements`.
        """
        check_cap(self.order, CONFIG.max_enumeration, "group order")
        per_level = [[(lvl.trans[x], lvl.itrans[x]) for x in lvl.trans] for lvl in self._levels]
        for combo in itertools.product(*per_level):
            yield tuple(u for u, _ in reversed(combo)), tuple(v for _, v in combo)

    def elements(self) -> Iterator[Perm]:
        check_cap(self.order, CONFIG.max_enumeration, "group order")
        transversals = [list(lvl.trans.values()) for lvl in self._levels]
        m = len(transversals)

        def walk(k: int, prefix: Perm) -> Iterator[Perm]:
            if k == m:
                yield prefix
                return
            for u in transversals[k]:
                yield from walk(k + 1, compose(u, prefix))

        yield from walk(0, self.identity)

    def random_element(self, rng: random.Random) -> Perm:
        g = self.identity
        for lvl in self._levels:
            pts = list(lvl.trans)
            g = compose(lvl.trans[pts[rng.randrange(len(pts))]], g)
        return g

    def sift_word(self, p: Perm) -> list[Perm]:
        """Transversal factors ``[u_1, ..., u_m]`` with ``p = u_m ... u_1``."""
        out = []
        g = tuple(p)
        for lvl in self._levels:
            x = g[lvl.point]
            if x not in lvl.trans:
                raise ValueError("element not in group")
            out.append(lvl.trans[x])
            g = compose(g, lvl.itrans[x])
        if not is_identity(g):
            raise ValueError("element not in group")
        return out

    def verify_chain(self) -> bool:
        """Each strong generator fixes the base points preceding its level."""
        for i, lvl in enumerate(self._levels):
            prefix = self.base[:i]
            for s in lvl.gens:
                if any(s[b] != b for b in prefix):
                    return False
        return True


def _words_eval(word: Sequence[Perm], pt: int) -> int:
    for u in word:
        pt = u[pt]
    return pt


def group_from_generators(degree: int, gens: Iterable[Sequence[int]] = (), *, max_degree: int | None = None) -> Group:
    cap = CONFIG.max_degree if max_degree is None else max_degree
    if degree < 1:
        raise ValueError("degree must be >= 1")
    check_cap(degree, cap, "degree")
    perms = [check_perm(g, degree) for g in gens]
    return Group(degree, perms)


def trivial_group(degree: int) -> Group:
    return Group(degree, ())


def contains(G: Group, p: Perm) -> bool:
    return G.contains(tuple(p))


def elements(G: Group) -> Iterator[Perm]:
    return G.elements()


def uniform_random_element(G: Group, seed: int) -> Perm:
    return G.random_element(random.Random(seed))


def subgroup(G: Group, gens: Iterable[Perm]) -> Group:
    """Subgroup of ``G`` generated by ``gens`` (checked for membership)."""
    gens = [tuple(g) for g in gens]
    for g in gens:
        if not G.contains(g):
            raise ValueError(f"element {fmt_perm(g)} not in group")
    return Group(G.degree, gens)


# ---------------------------------------------------------------------------
# homomorphisms


class Epimorphism:
    """Homomorphism determined by images of the source generators.

    The graph ``{(g, phi(g))}`` is built as a group on ``d + e`` points with
    base points restricted to the first ``d``.  If the generator images do not
    extend to a homomorphism this construction fails, which is the
    well-definedness check.  Evaluation sifts the first component and
    multiplies the second components.
    """

    def __init__(self, source: Group, target: Group, images: Sequence[Perm], *, coset_reps: Sequence[Perm] | None = None):
        images = [tuple(x) for x in images]
        if len(images) != len(source.generators):
            raise ValueError("need one image per source generator")
        for x in images:
            if not target.contains(x):
                raise ValueError("generator image outside target")
        self.source = source
        self.target = target
        self.images = tuple(images)
        self._coset_reps = None if coset_reps is None else tuple(coset_reps)
        d, e = source.degree, target.degree
        pairs = [g + tuple(d + x for x in h) for g, h in zip(source.generators, images)]
        try:
            graph = Group(d + e, pairs, _point_limit=d)
        except NotHomomorphismError as exc:
            raise NotHomomorphismError("generator images do not define a homomorphism") from exc
        if graph.order != source.order:
            raise NotHomomorphismError("generator images do not define a homomorphism")
        self._graph = graph

    def __call__(self, g: Perm) -> Perm:
        return apply_epimorphism(self, g)

    def image_group(self) -> Group:
        return Group(self.target.degree, self.images)

    def lift(self, y: Perm) -> Perm:
        """A preimage of ``y`` (only for quotient maps, where coset reps are known)."""
        if self._coset_reps is None:
            raise NotImplementedError("lift is only available for quotient actions")
        return self._coset_reps[y[0]]


def apply_epimorphism(phi: Epimorphism, g: Perm) -> Perm:
    g = tuple(g)
    if not phi.source.contains(g):
        raise ValueError("element not in source group")
    d, e = phi.source.degree, phi.target.degree
    word = []
    h = g
    for lvl in phi._graph._levels:
        x = h[lvl.point]
        u = lvl.trans[x]
        word.append(u)
        h = compose(h, lvl.itrans[x][:d])
    img = identity(e)
    for u in word:
        img = compose(tuple(x - d for x in u[d:]), img)
    return img


def identity_epimorphism(G: Group) -> Epimorphism:
    return Epimorphism(G, G, G.generators)


# ---------------------------------------------------------------------------
# wire format


def group_to_dict(G: Group, name: str) -> dict:
    return {"name": name, "degree": G.degree, "generators": [list(g) for g in G.generators]}


def group_from_dict(data: dict) -> tuple[str, Group]:
    try:
        name = str(data["name"])
        degree = int(data["degree"])
        gens = data["generators"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed group record: {exc}") from exc
    if not isinstance(gens, list):
        raise ValueError("generators must be a list")
    return name, group_from_generators(degree, gens)


def load_group(path) -> tuple[str, Group]:
    with open(path) as fh:
        return group_from_dict(json.load(fh))


def dump_group(G: Group, name: str, path) -> None:
    with open(path, "w") as fh:
        json.dump(group_to_dict(G, name), fh)
        fh.write("\n")


__all__ = [
    "CapacityError",
    "Epimorphism",
    "Group",
    "Perm",
    "apply_epimorphism",
    "check_perm",
    "commutator",
    "compose",
    "conjugate",
    "contains",
    "cycles",
    "element_order",
    "elements",
    "fmt_perm",
    "from_cycles",
    "group_from_generators",
    "identity",
    "inverse",
    "load_group",
    "dump_group",
    "power",
    "subgroup",
    "trivial_group",
    "uniform_random_element",
]
