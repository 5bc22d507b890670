#!/usr/bin/env python3
"""Run every verification suite over the built-in corpus and print a summary.

Exits nonzero if any check fails.
"""
import argparse
import sys
import time

from brandt.brandt import construct_brandt
from brandt.corpus import corpus_lambdas, default_corpus
from brandt.oracle import (
    DEFAULT_SEED,
    verify_composition_law,
    verify_matrix_units_rigidity,
    verify_quotient_structure,
    verify_realization_completeness,
    verify_zero_semigroup_bijections,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-lambda", type=int, default=4)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()

    failures = 0
    start = time.perf_counter()

    print("== matrix-units rigidity ==")
    for lam in range(1, args.max_lambda + 1):
        rep = verify_matrix_units_rigidity(lam)
        print(rep.render_text())
        failures += not rep.match

    print("\n== realization completeness / quotient structure over the corpus ==")
    for entry in default_corpus():
        for lam in corpus_lambdas(entry.semigroup):
            rep = verify_realization_completeness(entry.semigroup, lam)
            failures += not rep.match
            B = construct_brandt(entry.semigroup, lam)
            qrep = verify_quotient_structure(B, seed=args.seed)
            failures += not qrep.match
            comp = verify_composition_law(B, args.trials, seed=args.seed)
            failures += not comp
            status = "ok" if (rep.match and qrep.match and comp) else "FAIL"
            print(
                f"{status:4} {entry.name:12} lam={lam}  |Aut|={rep.oracle_order:4}"
                f"  triple group={qrep.triple_group_order:5}  kernel={qrep.kernel_size}"
            )

    print("\n== zero-semigroup census (k=3, lam=2) ==")
    census = verify_zero_semigroup_bijections(3, 2)
    ok = census.all_automorphisms and census.bijections == 40320
    failures += not ok
    print(f"{'ok' if ok else 'FAIL'}  {census.bijections} zero-fixing bijections, "
          f"{census.automorphisms} automorphisms")

    print(f"\n{failures} failure(s) in {time.perf_counter() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
