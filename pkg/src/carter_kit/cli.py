"""Command line interface: ``carter-kit <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import config
from .carter import carter_subgroups
from .harness import (
    catalog_failed,
    check_carter_induced,
    check_gjh,
    check_main_theorem,
    check_series,
    check_sylow_theorems,
    default_corpus,
    run_corpus,
    run_corpus_data,
)
from .induced import induced_aut
from .permcore import Group, group_to_dict, load_group
from .recognize import GroupSpec, construct
from .series import chief_series, composition_series, rc_series, sections_of
from .structure import sylow_subgroup


EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=1)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _series(G: Group, kind: str, seed: int):
    if kind == "chief":
        return chief_series(G)
    if kind == "rc":
        return rc_series(G)
    return composition_series(G, seed)


def cmd_construct(args) -> int:
    spec = GroupSpec(args.family, tuple(args.params))
    G = construct(spec)
    _emit(group_to_dict(G, spec.name), args.out)
    return 0


def cmd_carter(args) -> int:
    _, G = load_group(args.groupfile)
    _emit([w.to_dict() for w in carter_subgroups(G)], args.out)
    return 0


def cmd_series(args) -> int:
    _, G = load_group(args.groupfile)
    _emit(_series(G, args.kind, args.seed).to_dict(), args.out)
    return 0


def cmd_induced(args) -> int:
    _, G = load_group(args.groupfile)
    secs = sections_of(_series(G, args.kind, args.seed))
    if not 0 <= args.index < len(secs):
        raise SystemExit(f"section index must be in 0..{len(secs) - 1}")
    sec = secs[args.index]
    H = G
    if args.subgroup:
        _, H = load_group(args.subgroup)
    ia = induced_aut(H, sec)
    _emit({
        "section": [sec.A.order, sec.B.order],
        "normalizer_order": ia.normalizer_part.order,
        "kernel_order": ia.kernel.order,
        "image_order": ia.image.order,
        "image_degree": ia.image.degree,
        "image_generators": [list(g) for g in ia.image.generators] if args.generators else None,
    }, args.out)
    return 0


def cmd_verify(args) -> int:
    name, G = load_group(args.groupfile)
    hint = sylow_subgroup(G, args.hint_sylow) if args.hint_sylow else None
    reports = []
    if args.check == "main":
        reports.append(check_main_theorem(G, hint, name))
    elif args.check == "sylow":
        if not args.prime:
            raise SystemExit("--prime is required for the sylow check")
        reports.append(check_sylow_theorems(G, args.prime, name))
    elif args.check == "gjh":
        _, rep = check_gjh(G, rc_series(G), composition_series(G, args.seed), name)
        reports.append(rep)
    elif args.check == "carter-induced":
        from .carter import CarterWitness
        if hint is not None:
            K = CarterWitness.of(G, hint)
        else:
            ws = carter_subgroups(G)
            K = ws[0] if ws else None
        reports.append(check_carter_induced(G, K, name))
    elif args.check == "series":
        reports.append(check_series(G, name=name))
    catalog = [r.to_dict() for r in reports]
    _emit(catalog, args.out)
    return EXIT_FAIL if catalog_failed(catalog) else 0


def cmd_corpus(args) -> int:
    if args.default or not args.corpus:
        catalog = run_corpus_data(default_corpus(), out_path=args.out)
    else:
        catalog = run_corpus(args.corpus, args.out)
    if not args.out:
        _emit(catalog)
    return EXIT_FAIL if catalog_failed(catalog) else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="carter-kit", description=__doc__)
    p.add_argument("--cap-order", type=int, help="max group order for element enumeration")
    p.add_argument("--cap-degree", type=int, help="max permutation degree for input groups")
    p.add_argument("--cap-cosets", type=int, help="max coset count for quotient actions")
    p.add_argument("--seed", type=int, default=0, help="seed for composition-series choices")
    p.add_argument("--timeout-iso-search-ms", type=int, help="bound for the isomorphism search")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a named group as a group file")
    c.add_argument("family", choices=["symmetric", "alternating", "cyclic", "dihedral", "frobenius", "psl2", "psigma_l2"])
    c.add_argument("params", type=int, nargs="+")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("carter", help="list Carter subgroups up to conjugacy")
    c.add_argument("groupfile")
    c.add_argument("--out")
    c.set_defaults(func=cmd_carter)

    c = sub.add_parser("series", help="chief, composition or rc series")
    c.add_argument("groupfile")
    c.add_argument("--kind", choices=["chief", "composition", "rc"], default="rc")
    c.add_argument("--out")
    c.set_defaults(func=cmd_series)

    c = sub.add_parser("induced-aut", help="induced automorphism group of a series section")
    c.add_argument("groupfile")
    c.add_argument("--kind", choices=["chief", "composition", "rc"], default="rc")
    c.add_argument("--index", type=int, default=0, help="0-based section index")
    c.add_argument("--subgroup", help="group file for the acting subgroup (default: whole group)")
    c.add_argument("--generators", action="store_true", help="include image generators")
    c.add_argument("--out")
    c.set_defaults(func=cmd_induced)

    c = sub.add_parser("verify", help="run one verification check")
    c.add_argument("groupfile")
    c.add_argument("--check", choices=["main", "sylow", "gjh", "carter-induced", "series"], default="main")
    c.add_argument("--prime", type=int)
    c.add_argument("--hint-sylow", type=int, help="use a Sylow subgroup for this prime as the Carter hint")
    c.add_argument("--out")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("corpus", help="run all checks over a corpus file")
    c.add_argument("corpus", nargs="?")
    c.add_argument("--default", action="store_true", help="use the built-in default corpus")
    c.add_argument("--out")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    config.CONFIG.update(
        max_enumeration=args.cap_order,
        max_degree=args.cap_degree,
        max_cosets=args.cap_cosets,
        seed=args.seed,
        iso_search_timeout_ms=args.timeout_iso_search_ms,
    )
    config.load_env_config()
    try:
        return args.func(args)
    except config.CapacityError as exc:
        print(f"carter-kit: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (OSError, ValueError) as exc:
        print(f"carter-kit: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
