"""Run every check on the built-in corpus and summarize the verdicts.

    python scripts/run_default_corpus.py --out catalog.json
"""
import argparse
import logging
import time
from collections import Counter

from carter_kit.harness import catalog_failed, default_corpus, run_corpus_data


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="catalog.json")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    t0 = time.monotonic()
    catalog = run_corpus_data(default_corpus(), out_path=args.out)
    print(f"{len(catalog)} reports in {time.monotonic() - t0:.1f}s -> {args.out}")
    by_check = Counter((r["check"].split("_seed")[0].split("_p")[0], r["verdict"]) for r in catalog)
    for (check, verdict), n in sorted(by_check.items()):
        print(f"  {check:16s} {verdict:18s} {n}")
    return 1 if catalog_failed(catalog) else 0


if __name__ == "__main__":
    raise SystemExit(main())
