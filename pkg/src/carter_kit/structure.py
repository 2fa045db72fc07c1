"""Subgroup computations by element scan: normalizers, centralizers, classes,
normal subgroups, Sylow subgroups and the p'-core.
"""
from __future__ import annotations

import functools
import math
from typing import Callable, Iterable, Sequence

from .config import CONFIG, check_cap
from .permcore import (
    Group,
    Perm,
    commutator,
    compose,
    conjugate,
    element_order,
    fmt_perm,
    inverse,
)

Pointwise = Callable[[int], int]


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


def is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


def _require_inside(G: Group, S: Iterable[Perm]) -> None:
    for s in S:
        if not G.contains(s):
            raise ValueError(f"element {fmt_perm(s)} not in group")


def _word_fn(word: Sequence[Perm]) -> Pointwise:
    def f(pt: int) -> int:
        for u in word:
            pt = u[pt]
        return pt
    return f


def _materialize(word: Sequence[Perm], degree: int) -> Perm:
    return functools.reduce(compose, word, tuple(range(degree)))


def scan_subgroup(
    X: Group,
    ambient: Group,
    keep: Callable[[Pointwise, Pointwise], bool],
    start: Group | None = None,
    stop_at: int | None = None,
) -> Group:
    """Subgroup of ``X`` consisting of the elements accepted by ``keep``.

    ``keep(x, x_inv)`` receives pointwise evaluators and must define a
    subgroup.  ``start`` is a known subgroup of the answer; elements already
    inside the current partial answer are skipped without testing.  The scan
    stops early once the answer reaches order ``stop_at``.
    """
    check_cap(X.order, CONFIG.max_enumeration, "group order")
    found = start if start is not None else Group(X.degree, ())
    limit = X.order if stop_at is None else stop_at
    if found.order >= limit:
        return found
    gens = list(found.generators)
    for word, iword in X.words():
        x = _word_fn(word)
        if found.contains_lazy(x, ambient):
            continue
        if keep(x, _word_fn(iword)):
            gens.append(_materialize(word, X.degree))
            found = Group(X.degree, gens)
            if found.order >= limit:
                break
    return found


def _normalizes(x: Pointwise, xinv: Pointwise, Y: Group, ambient: Group) -> bool:
    return all(Y.contains_lazy(lambda pt, y=y: x(y[xinv(pt)]), ambient) for y in Y.generators)


def normalizer_in(X: Group, Y: Group, ambient: Group) -> Group:
    """``N_X(Y)`` for subgroups ``X, Y`` of ``ambient``."""
    if all(Y.contains(conjugate(y, g)) for g in X.generators for y in Y.generators):
        return X
    start = Group(X.degree, [y for y in Y.generators]) if Y.is_subgroup_of(X) else None
    return scan_subgroup(X, ambient, lambda x, xi: _normalizes(x, xi, Y, ambient), start)


def normalizer(G: Group, H: Group) -> Group:
    """``N_G(H) = {g in G : H^g = H}``."""
    _require_inside(G, H.generators)
    return normalizer_in(G, H, G)


def centralizer_in(X: Group, Y: Group, ambient: Group) -> Group:
    """``C_X(Y)`` for subgroups ``X, Y`` of ``ambient``."""
    if all(compose(g, y) == compose(y, g) for g in X.generators for y in Y.generators):
        return X
    base = ambient.base
    pairs = [(y, inverse(y)) for y in Y.generators]

    def commutes(x: Pointwise, xinv: Pointwise) -> bool:
        # [y, x] fixes the base of ambient iff it is trivial
        for y, yi in pairs:
            for b in base:
                if x(y[xinv(yi[b])]) != b:
                    return False
        return True

    return scan_subgroup(X, ambient, commutes)


def centralizer(G: Group, H: Group) -> Group:
    _require_inside(G, H.generators)
    return centralizer_in(G, H, G)


# ---------------------------------------------------------------------------
# closures and series


def normal_closure(G: Group, S: Iterable[Perm]) -> Group:
    """Smallest normal subgroup of ``G`` containing ``S``."""
    S = [tuple(s) for s in S]
    _require_inside(G, S)
    ident = G.identity
    gens = [s for s in dict.fromkeys(S) if s != ident]
    N = Group(G.degree, gens)
    queue = list(gens)
    while queue:
        h = queue.pop()
        for g in G.generators:
            c = conjugate(h, g)
            if not N.contains(c):
                gens.append(c)
                N = Group(G.degree, gens)
                queue.append(c)
    return N


def derived_subgroup(G: Group) -> Group:
    gens = G.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(G, comms)


def derived_series(G: Group) -> list[Group]:
    """``G, G', G'', ...`` ending at the trivial group or at the first
    repeated term (kept once, so a perfect group gives ``[G, G]``)."""
    series = [G]
    while series[-1].order > 1:
        D = derived_subgroup(series[-1])
        series.append(D)
        if D.order == series[-2].order:
            break
    return series


def lower_central_series(G: Group) -> list[Group]:
    series = [G]
    while series[-1].order > 1:
        cur = series[-1]
        comms = [commutator(a, g) for a in cur.generators for g in G.generators]
        nxt = normal_closure(G, comms)
        if nxt.order == cur.order:
            break
        series.append(nxt)
    return series


def is_solvable(G: Group) -> bool:
    return derived_series(G)[-1].order == 1


def is_nilpotent(G: Group) -> bool:
    if G.order == 1 or is_prime_power(G.order):
        return True
    return lower_central_series(G)[-1].order == 1


def is_abelian(G: Group) -> bool:
    gens = G.generators
    return all(compose(a, b) == compose(b, a) for a in gens for b in gens)


def is_normal(G: Group, N: Group) -> bool:
    return all(N.contains(conjugate(n, g)) for n in N.generators for g in G.generators)


def intersection(A: Group, B: Group) -> Group:
    """``A ∩ B`` by scanning the smaller group."""
    if A.order > B.order:
        A, B = B, A
    if all(B.contains(a) for a in A.generators):
        return A
    gens: list[Perm] = []
    H = Group(A.degree, ())
    for a in A.elements():
        if B.contains(a) and not H.contains(a):
            gens.append(a)
            H = Group(A.degree, gens)
    return H


def join(A: Group, B: Group) -> Group:
    return Group(A.degree, A.generators + B.generators)


# ---------------------------------------------------------------------------
# conjugacy and normal subgroups


def conjugacy_classes(G: Group) -> list[list[Perm]]:
    """Orbits of ``G`` on itself under conjugation, identity class first."""
    check_cap(G.order, CONFIG.max_enumeration, "group order")
    gens = [(g, inverse(g)) for g in G.generators]
    seen: set[Perm] = set()
    classes = []
    for e in G.elements():
        if e in seen:
            continue
        seen.add(e)
        cls = [e]
        i = 0
        while i < len(cls):
            x = cls[i]
            i += 1
            for g, gi in gens:
                c = compose(compose(gi, x), g)
                if c not in seen:
                    seen.add(c)
                    cls.append(c)
        classes.append(cls)
    return classes


def normal_subgroups(G: Group) -> list[Group]:
    """All normal subgroups, sorted by order.

    Each is a join of normal closures of conjugacy classes; subgroups are
    identified by the set of classes they contain.
    """
    reps = [cls[0] for cls in conjugacy_classes(G)]

    def key(N: Group) -> frozenset:
        return frozenset(i for i, r in enumerate(reps) if N.contains(r))

    found: dict[frozenset, Group] = {}
    for r in reps:
        N = normal_closure(G, [r])
        found.setdefault(key(N), N)
    pending = list(found)
    while pending:
        k1 = pending.pop()
        for k2 in list(found):
            if k1 <= k2 or k2 <= k1:
                continue
            J = join(found[k1], found[k2])
            k = key(J)
            if k not in found:
                found[k] = J
                pending.append(k)
    return [found[k] for k in sorted(found, key=lambda k: (found[k].order, sorted(k)))]


def minimal_normal_subgroups(G: Group) -> list[Group]:
    nontrivial = [N for N in normal_subgroups(G) if N.order > 1]
    return [N for N in nontrivial if not any(M.order < N.order and M.is_subgroup_of(N) for M in nontrivial)]


def sylow_subgroup(G: Group, p: int) -> Group:
    """Sylow p-subgroup by normalizer ascent.

    Ties are broken by the lexicographically smallest image table.
    """
    target = p_part(G.order, p)
    H = Group(G.degree, ())
    while H.order < target:
        N = normalizer(G, H)
        cands = sorted(x for x in N.elements() if is_prime_power(element_order(x))
                       and element_order(x) % p == 0 and not H.contains(x))
        for x in cands:
            K = Group(G.degree, H.generators + (x,))
            if K.order == p_part(K.order, p):
                H = K
                break
        else:  # pragma: no cover - excluded by Sylow's theorem
            raise RuntimeError("normalizer ascent stalled")
    return H


def o_pprime(G: Group, p: int) -> Group:
    """Largest normal subgroup of order prime to ``p``."""
    coprime = [N for N in normal_subgroups(G) if math.gcd(N.order, p) == 1]
    best = max(coprime, key=lambda N: N.order)
    for N in coprime:
        if not N.is_subgroup_of(best):
            raise RuntimeError("p'-core is not unique: inconsistent normal subgroup lattice")
    return best
