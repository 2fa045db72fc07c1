"""Verification checks on explicit groups and the corpus runner.

Every check returns a :class:`Report` whose verdict is one of ``pass``,
``fail``, ``vacuous``, ``capacity_exceeded``, ``unresolved`` (plus ``error``
for corpus entries that could not be loaded or evaluated).
"""
from __future__ import annotations

import json
import math
import logging
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

from .carter import CarterWitness, carter_subgroups, is_carter
from .config import CONFIG, CapacityError
from .induced import InducedAutGroup, induced_aut
from .permcore import (
    Epimorphism,
    Group,
    NotHomomorphismError,
    Perm,
    apply_epimorphism,
    compose,
    element_order,
    load_group,
)
from .recognize import FactorId, GroupSpec, construct, identify_factor
from .fields import is_prime
from .series import Section, Series, composition_series, factor_group, rc_series, sections_of
from .structure import (
    centralizer,
    intersection,
    is_solvable,
    normalizer,
    o_pprime,
    prime_factors,
    sylow_subgroup,
)

log = logging.getLogger(__name__)

VERDICTS = ("pass", "fail", "vacuous", "capacity_exceeded", "unresolved", "error")


@dataclass
class Report:
    group: str
    check: str
    verdict: str
    evidence: dict = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "check": self.check,
            "verdict": self.verdict,
            "note": self.note,
            "evidence": self.evidence,
        }


@dataclass
class SigmaWitness:
    sigma: list[int]
    verdicts: list[str]  # "containment_verified" | "containment_unresolved"

    def is_bijection(self) -> bool:
        return sorted(self.sigma) == list(range(len(self.sigma)))


# ---------------------------------------------------------------------------
# Generalized Jordan-Hölder


def _order_profile(G: Group) -> Counter:
    return Counter(element_order(g) for g in G.elements())


class _SectionPoints:
    """Bijection between coset labels of a section and elements of its factor group."""

    def __init__(self, sec: Section):
        self.sec = sec
        self.space = sec.cosets
        self.Q, _ = sec.factor
        self.trivial_b = sec.B.order == 1

    def to_factor(self, c: int) -> Perm:
        r = self.space.reps[c]
        return r if self.trivial_b else self.space.right_action(r)

    def to_point(self, y: Perm) -> int:
        return self.space.label(y) if self.trivial_b else y[0]


def _transport_contained(psi_pts: list[int], small: Group, big: Group) -> bool:
    inv = [0] * len(psi_pts)
    for c, d in enumerate(psi_pts):
        inv[d] = c
    for alpha in small.generators:
        beta = tuple(psi_pts[alpha[inv[s]]] for s in range(len(psi_pts)))
        if not big.contains(beta):
            return False
    return True


def _generating_pair(Q: Group, rng: random.Random) -> tuple[Perm, Perm]:
    if len(Q.generators) <= 2:
        gens = list(Q.generators) + [Q.identity] * (2 - len(Q.generators))
        return gens[0], gens[1]
    for _ in range(10_000):
        x, y = Q.random_element(rng), Q.random_element(rng)
        if Group(Q.degree, [x, y]).order == Q.order:
            return x, y
    raise RuntimeError("no generating pair found")


def nonabelian_containment(
    T: Section, aut_T: Group, S: Section, aut_S: Group, timeout_ms: int | None = None
) -> str | None:
    """Search an isomorphism ``T -> S`` carrying ``aut_T`` into ``aut_S``.

    Returns ``"containment_verified"``, ``"containment_unresolved"`` on
    timeout, or None when the search is exhausted without success.
    """
    deadline = time.monotonic() + (CONFIG.iso_search_timeout_ms if timeout_ms is None else timeout_ms) / 1000
    pt_T, pt_S = _SectionPoints(T), _SectionPoints(S)
    if T.A.same_as(S.A) and T.B.same_as(S.B):
        psi_pts = [S.cosets.label(r) for r in T.cosets.reps]
        if _transport_contained(psi_pts, aut_T, aut_S):
            return "containment_verified"
    Q_T, Q_S = pt_T.Q, pt_S.Q
    x, y = _generating_pair(Q_T, random.Random(CONFIG.seed))
    src = Group(Q_T.degree, [x, y])
    ox, oy, oxy = element_order(x), element_order(y), element_order(compose(x, y))
    by_order: dict[int, list[Perm]] = {}
    for g in Q_S.elements():
        by_order.setdefault(element_order(g), []).append(g)
    for x2 in by_order.get(ox, []):
        for y2 in by_order.get(oy, []):
            if time.monotonic() > deadline:
                return "containment_unresolved"
            if element_order(compose(x2, y2)) != oxy:
                continue
            try:
                iso = Epimorphism(src, Q_S, [x2, y2])
            except NotHomomorphismError:
                continue
            if iso.image_group().order != Q_S.order:
                continue
            psi_pts = [pt_S.to_point(apply_epimorphism(iso, pt_T.to_factor(c))) for c in range(T.order)]
            if _transport_contained(psi_pts, aut_T, aut_S):
                return "containment_verified"
    return None


def _kuhn(n: int, edge: Callable[[int, int], bool]) -> list[int] | None:
    match_of_right: dict[int, int] = {}

    def augment(i: int, seen: set) -> bool:
        for j in range(n):
            if j in seen or not edge(i, j):
                continue
            seen.add(j)
            if j not in match_of_right or augment(match_of_right[j], seen):
                match_of_right[j] = i
                return True
        return False

    for i in range(n):
        if not augment(i, set()):
            return None
    sigma = [0] * n
    for j, i in match_of_right.items():
        sigma[i] = j
    return sigma


def check_gjh(G: Group, rc: Series, comp: Series, name: str = "G") -> tuple[SigmaWitness | None, Report]:
    """Match composition factors ``T_i`` to rc-factors ``S_j`` with
    ``Aut_G(T_i)`` contained in ``Aut_G(S_j)``.
    """
    if rc.kind != "rc":
        raise ValueError("first series must be an rc-series")
    if comp.kind not in ("composition", "rc"):
        raise ValueError("second series must be a composition series")
    if not (rc.ambient.same_as(G) and comp.ambient.same_as(G)):
        raise ValueError("series belong to different groups")
    both_rc = comp.kind == "rc"
    S = sections_of(rc)
    T = sections_of(comp)
    # share Section objects for identical sections so coset labels coincide
    for i, t in enumerate(T):
        for s in S:
            if t.A.same_as(s.A) and t.B.same_as(s.B):
                T[i] = s
                break
    n = len(S)
    evidence: dict[str, Any] = {
        "rc_orders": rc.orders,
        "comp_orders": comp.orders,
        "both_rc": both_rc,
    }
    if len(T) != n:
        return None, Report(name, "gjh", "fail", evidence, "series lengths differ")
    ids_S = [identify_factor(s) for s in S]
    ids_T = [identify_factor(t) for t in T]
    auts: dict[int, InducedAutGroup] = {}

    def aut(sec: Section) -> Group:
        if id(sec) not in auts:
            auts[id(sec)] = induced_aut(G, sec)
        return auts[id(sec)].image

    cache: dict[tuple[int, int], str | None] = {}

    def pair(i: int, j: int) -> str | None:
        if (i, j) in cache:
            return cache[i, j]
        res = None
        if ids_T[i] == ids_S[j]:
            a_T, a_S = aut(T[i]), aut(S[j])
            if ids_T[i].is_abelian:
                # both are subgroups of the cyclic group Aut(Z_p)
                ok = a_S.order % a_T.order == 0
                ok = ok and set(_order_profile(a_T)) <= set(_order_profile(a_S))
                res = "containment_verified" if ok else None
            else:
                res = nonabelian_containment(T[i], a_T, S[j], a_S)
            if res is not None and both_rc:
                if a_T.order != a_S.order or _order_profile(a_T) != _order_profile(a_S):
                    res = None
        cache[i, j] = res
        return res

    sigma = _kuhn(n, lambda i, j: pair(i, j) == "containment_verified")
    verdict = "pass"
    if sigma is None:
        sigma = _kuhn(n, lambda i, j: pair(i, j) is not None)
        verdict = "unresolved"
    evidence["factors_rc"] = [str(f) for f in ids_S]
    evidence["factors_comp"] = [str(f) for f in ids_T]
    if sigma is None:
        evidence["pairs"] = {f"{i},{j}": v for (i, j), v in sorted(cache.items())}
        evidence["aut_orders_rc"] = [aut(s).order for s in S]
        evidence["aut_orders_comp"] = [aut(t).order for t in T]
        return None, Report(name, "gjh", "fail", evidence, "no admissible permutation sigma")
    witness = SigmaWitness(sigma, [pair(i, sigma[i]) for i in range(n)])
    evidence["sigma"] = sigma
    evidence["pair_verdicts"] = witness.verdicts
    evidence["aut_orders"] = [[aut(T[i]).order, aut(S[sigma[i]]).order] for i in range(n)]
    note = "" if verdict == "pass" else "some nonabelian pairs unresolved by bounded isomorphism search"
    return witness, Report(name, "gjh", verdict, evidence, note)


# ---------------------------------------------------------------------------
# Carter subgroups of induced automorphism groups


def check_carter_induced(G: Group, K: CarterWitness | None, name: str = "G") -> Report:
    if K is None:
        return Report(name, "carter_induced", "vacuous", {}, "group has no Carter subgroup")
    rc = rc_series(G)
    secs = sections_of(rc)
    ids = [identify_factor(s) for s in secs]
    types = sorted({f for f in ids if not f.is_abelian}, key=lambda f: (f.order, f.tag))
    evidence: dict[str, Any] = {"K_order": K.K.order, "factors": [str(f) for f in ids]}
    if not types:
        return Report(name, "carter_induced", "vacuous", evidence, "all composition factors are abelian")
    witnesses = {}
    for ftype in types:
        tried = []
        for i, (sec, fid) in enumerate(zip(secs, ids)):
            if fid != ftype:
                continue
            a_G = induced_aut(G, sec).image
            a_K = induced_aut(K.K, sec).image
            tried.append({"index": i, "aut_G": a_G.order, "aut_K": a_K.order})
            if is_carter(a_G, a_K):
                witnesses[str(ftype)] = tried[-1]
                break
        else:
            evidence["counterexample"] = {"factor": str(ftype), "tried": tried}
            return Report(name, "carter_induced", "fail", evidence, f"no section of type {ftype} has Aut_K Carter in Aut_G")
    evidence["witnesses"] = witnesses
    return Report(name, "carter_induced", "pass", evidence)


# ---------------------------------------------------------------------------
# Main theorem


def composition_factor_ids(G: Group) -> list[FactorId]:
    return [identify_factor(s) for s in sections_of(rc_series(G))]


def check_main_theorem(G: Group, K_hint: Optional[Group] = None, name: str = "G") -> Report:
    evidence: dict[str, Any] = {"order": G.order}
    if K_hint is not None:
        if not is_carter(G, K_hint):
            raise ValueError("K_hint is not a Carter subgroup")
        witnesses = [CarterWitness.of(G, K_hint)]
        evidence["K_source"] = "hint"
    else:
        try:
            witnesses = carter_subgroups(G)
        except CapacityError as exc:
            return Report(name, "main_theorem", "capacity_exceeded", evidence, str(exc))
        evidence["K_source"] = "search"
    evidence["carter_orders"] = [w.K.order for w in witnesses]
    odd = [w for w in witnesses if w.odd_order]
    if not odd:
        return Report(name, "main_theorem", "vacuous", evidence, "no Carter subgroup of odd order")
    factors = composition_factor_ids(G)
    solvable = is_solvable(G)
    has_l2 = any(f.tag == "L2_3odd" for f in factors)
    evidence["factors"] = sorted({str(f) for f in factors})
    evidence["solvable"] = solvable
    evidence["odd_carter_orders"] = [w.K.order for w in odd]
    others = [str(f) for f in factors if f.tag == "OtherNonabelianSimple"]
    if others:
        evidence["counterexample"] = {"factors": others}
        return Report(name, "main_theorem", "fail", evidence, "nonabelian factor other than L2(3^(2n+1))")
    for w in odd:
        if has_l2 and not w.three_divides:
            evidence["counterexample"] = {"K_order": w.K.order}
            return Report(name, "main_theorem", "fail", evidence, "L2 factor present but 3 does not divide |K|")
        if not w.three_divides and not solvable:
            evidence["counterexample"] = {"K_order": w.K.order}
            return Report(name, "main_theorem", "fail", evidence, "3 does not divide |K| but G is not solvable")
    return Report(name, "main_theorem", "pass", evidence)


# ---------------------------------------------------------------------------
# Sylow statements


def _is_power_of_three(f: int) -> bool:
    while f > 1 and f % 3 == 0:
        f //= 3
    return f == 1


def check_sylow_theorems(G: Group, p: int, name: str = "G") -> Report:
    if p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    check = f"sylow_p{p}"
    P = sylow_subgroup(G, p)
    N = normalizer(G, P)
    C = centralizer(G, P)
    Z = intersection(P, C)
    self_normalizing = N.order == P.order
    n_eq_pc = (
        N.order * Z.order == P.order * C.order
        and P.is_subgroup_of(N)
        and C.is_subgroup_of(N)
    )
    factors = composition_factor_ids(G)
    excluded = [str(f) for f in factors
                if p == 3 and f.tag == "L2_3odd" and 2 * f.param + 1 > 1 and _is_power_of_three(2 * f.param + 1)]
    evidence: dict[str, Any] = {
        "P_order": P.order,
        "N_order": N.order,
        "C_order": C.order,
        "self_normalizing": self_normalizing,
        "N_eq_PC": n_eq_pc,
        "excluded_factors": excluded,
    }
    if not (self_normalizing or n_eq_pc):
        return Report(name, check, "vacuous", evidence, "hypotheses not satisfied")
    if excluded:
        evidence["solvable"] = is_solvable(G)
        return Report(name, check, "vacuous", evidence,
                      "excluded composition factor L2(3^f), f = 3^a, present")
    verdict = "pass"
    if self_normalizing:
        evidence["asserted_solvable"] = is_solvable(G)
        if not evidence["asserted_solvable"]:
            verdict = "fail"
    if n_eq_pc:
        O = o_pprime(G, p)
        evidence["O_pprime_order"] = O.order
        evidence["asserted_quotient_solvable"] = is_solvable(factor_group(G, O)[0])
        if not evidence["asserted_quotient_solvable"]:
            verdict = "fail"
    if verdict == "fail":
        evidence["counterexample"] = {"P_order": P.order}
    return Report(name, check, verdict, evidence)


# ---------------------------------------------------------------------------
# series invariants and Carter listing as corpus checks


def check_series(G: Group, seeds=(0, 1, 2), name: str = "G") -> Report:
    rc = rc_series(G)
    chief = rc.witness
    comps = [composition_series(G, s) for s in seeds]
    multisets = {tuple(sorted(c.factor_orders)) for c in comps} | {tuple(sorted(rc.factor_orders))}
    products_ok = all(math.prod(s.factor_orders) == G.order for s in comps + [rc, chief])
    contains_chief = all(any(t.same_as(r) for r in rc.terms) for t in chief.terms)
    evidence = {
        "chief_orders": chief.orders,
        "rc_orders": rc.orders,
        "comp_orders": [c.orders for c in comps],
        "jordan_holder": len(multisets) == 1,
        "products": products_ok,
        "rc_contains_chief": contains_chief,
    }
    ok = len(multisets) == 1 and products_ok and contains_chief
    return Report(name, "series", "pass" if ok else "fail", evidence)


def check_carter_listing(G: Group, name: str = "G") -> tuple[list[CarterWitness], Report]:
    try:
        ws = carter_subgroups(G)
    except CapacityError as exc:
        return [], Report(name, "carter", "capacity_exceeded", {}, str(exc))
    evidence = {"witnesses": [w.to_dict() for w in ws]}
    if not all(w.verify() for w in ws):
        return ws, Report(name, "carter", "fail", evidence, "witness failed re-verification")
    if not ws:
        return ws, Report(name, "carter", "vacuous", evidence, "no Carter subgroup")
    return ws, Report(name, "carter", "pass", evidence)


# ---------------------------------------------------------------------------
# corpus


ALL_CHECKS = ("series", "carter", "main_theorem", "sylow", "gjh", "carter_induced")


def default_corpus() -> dict:
    entries = []

    def add(family, *params, **extra):
        spec = GroupSpec(family, params)
        entries.append({"name": spec.name, "spec": spec.to_dict(), **extra})

    for n in range(2, 7):
        add("symmetric", n)
    for n in range(3, 7):
        add("alternating", n)
    for m in range(2, 11):
        add("dihedral", m)
    add("frobenius", 7, 3)
    add("frobenius", 11, 5)
    for m in range(1, 31):
        add("cyclic", m)
    for q in (5, 7, 9, 11, 13):
        add("psl2", q)
    add("psigma_l2", 3, 3, k_hint={"sylow": 3})
    return {"entries": entries, "gjh_seeds": [0, 1]}


def _load_entry(entry: dict, base: Path) -> tuple[str, Group]:
    if "spec" in entry:
        spec = GroupSpec.from_dict(entry["spec"])
        return entry.get("name", spec.name), construct(spec)
    if "file" in entry:
        name, G = load_group(base / entry["file"])
        return entry.get("name", name), G
    raise ValueError("entry needs 'spec' or 'file'")


def _hint_group(G: Group, hint: dict | None) -> Group | None:
    if not hint:
        return None
    if "sylow" in hint:
        return sylow_subgroup(G, int(hint["sylow"]))
    if "generators" in hint:
        return Group(G.degree, [tuple(g) for g in hint["generators"]])
    raise ValueError("unknown k_hint")


def run_entry(entry: dict, base: Path, seeds=(0, 1)) -> list[Report]:
    try:
        name, G = _load_entry(entry, base)
    except Exception as exc:  # recorded, never aborts the batch
        return [Report(str(entry.get("name", entry.get("file", "?"))), "load", "error", {}, f"{type(exc).__name__}: {exc}")]
    checks = entry.get("checks", ALL_CHECKS)
    reports = []
    K_hint = None
    witnesses: list[CarterWitness] | None = None

    def guarded(check: str, fn):
        try:
            out = fn()
        except CapacityError as exc:
            out = Report(name, check, "capacity_exceeded", {}, str(exc))
        except Exception as exc:
            log.exception("check %s on %s", check, name)
            out = Report(name, check, "error", {}, f"{type(exc).__name__}: {exc}")
        return out

    try:
        K_hint = _hint_group(G, entry.get("k_hint"))
    except Exception as exc:
        reports.append(Report(name, "k_hint", "error", {}, f"{type(exc).__name__}: {exc}"))
    if "series" in checks:
        reports.append(guarded("series", lambda: check_series(G, seeds=tuple(range(3)), name=name)))
    if "carter" in checks and K_hint is None:
        def listing():
            nonlocal witnesses
            witnesses, rep = check_carter_listing(G, name)
            return rep
        reports.append(guarded("carter", listing))
    if "main_theorem" in checks:
        reports.append(guarded("main_theorem", lambda: check_main_theorem(G, K_hint, name)))
    if "sylow" in checks:
        for p in prime_factors(G.order):
            if p > 2:
                reports.append(guarded(f"sylow_p{p}", lambda p=p: check_sylow_theorems(G, p, name)))
    if "gjh" in checks:
        def gjh(seed):
            rc = rc_series(G)
            _, rep = check_gjh(G, rc, composition_series(G, seed), name)
            rep.check = f"gjh_seed{seed}"
            return rep
        for seed in seeds:
            reports.append(guarded(f"gjh_seed{seed}", lambda seed=seed: gjh(seed)))
    if "carter_induced" in checks:
        def induced_check():
            if K_hint is not None:
                ws = [CarterWitness.of(G, K_hint)]
            elif witnesses is not None:
                ws = witnesses
            else:
                ws = carter_subgroups(G)
            return check_carter_induced(G, ws[0] if ws else None, name)
        reports.append(guarded("carter_induced", induced_check))
    return reports


def run_corpus(corpus_path, out_path=None) -> list[dict]:
    """Run every enabled check on every corpus entry; return the catalog."""
    corpus_path = Path(corpus_path)
    with open(corpus_path) as fh:
        corpus = json.load(fh)
    return run_corpus_data(corpus, corpus_path.parent, out_path)


def run_corpus_data(corpus: dict, base: Path = Path("."), out_path=None) -> list[dict]:
    seeds = tuple(corpus.get("gjh_seeds", (0, 1)))
    catalog = []
    for entry in corpus.get("entries", []):
        log.info("corpus entry %s", entry.get("name", entry.get("file")))
        catalog.extend(r.to_dict() for r in run_entry(entry, base, seeds))
    if out_path is not None:
        write_catalog(catalog, out_path)
    return catalog


def write_catalog(catalog: list[dict], path) -> None:
    with open(path, "w") as fh:
        json.dump(catalog, fh, indent=1)
        fh.write("\n")


def catalog_failed(catalog: list[dict]) -> bool:
    return any(r["verdict"] == "fail" for r in catalog)
