#!/usr/bin/env python3
"""Print automorphism-group orders for every corpus extension, both engines.

Columns: base, lam, carrier size, |Aut(S)|, |H1|, oracle order, formula order
(lam! * |Aut(S)| * |H1|^(lam-1)).
"""
import math

from brandt.brandt import construct_brandt
from brandt.corpus import corpus_lambdas, default_corpus
from brandt.oracle import enumerate_automorphisms


def main() -> None:
    print(f"{'base':12} {'lam':>3} {'|B|':>4} {'|Aut(S)|':>8} {'|H1|':>4} "
          f"{'oracle':>6} {'formula':>7}")
    for entry in default_corpus():
        S = entry.semigroup
        aut_s = len(enumerate_automorphisms(S))
        for lam in corpus_lambdas(S):
            B = construct_brandt(S, lam)
            h1 = B.units.order
            oracle = len(enumerate_automorphisms(B.carrier))
            formula = math.factorial(lam) * aut_s * h1 ** (lam - 1)
            flag = "" if oracle == formula else "  <-- MISMATCH"
            print(f"{entry.name:12} {lam:>3} {B.carrier.size:>4} {aut_s:>8} "
                  f"{h1:>4} {oracle:>6} {formula:>7}{flag}")


if __name__ == "__main__":
    main()
