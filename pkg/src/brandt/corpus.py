"""Built-in test corpus: every monoid with zero of order <= 4 up to
isomorphism, plus named families used throughout the test suite and CLI."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import SemigroupError
from .semigroups import (
    FiniteSemigroup,
    adjoin_identity,
    construct_cyclic_group_with_zero,
    construct_zero_semigroup,
    validate_semigroup,
    _is_associative,
)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    semigroup: FiniteSemigroup


def _monoids_with_zero_of_order(n: int) -> list[FiniteSemigroup]:
    """Exhaustive generation with identity at index 0 and zero at index n-1;
    only the products of the middle elements are free.  Deduplication is up
    to isomorphism, which can only permute the middle elements."""
    mids = list(range(1, n - 1))
    m = len(mids)
    labels = ["1"] + [f"x{i}" for i in mids] + ["0"]
    found = []
    seen = set()
    for choice in product(range(n), repeat=m * m):
        table = [[0] * n for _ in range(n)]
        for j in range(n):
            table[0][j] = j
            table[j][0] = j
            table[n - 1][j] = n - 1
            table[j][n - 1] = n - 1
        it = iter(choice)
        for i in mids:
            for j in mids:
                table[i][j] = next(it)
        if _is_associative(table) is not None:
            continue
        canon = None
        for p in permutations(mids):
            pi = list(range(n))
            for a, b in zip(mids, p):
                pi[a] = b
            flat = tuple(
                pi[table[i][j]]
                for i in sorted(range(n), key=lambda x: pi[x])
                for j in sorted(range(n), key=lambda x: pi[x])
            )
            if canon is None or flat < canon:
                canon = flat
        if canon in seen:
            continue
        seen.add(canon)
        found.append(
            validate_semigroup(labels, table, name=f"M{n}_{len(found)}")
        )
    return found


def monoids_with_zero(max_order: int = 4) -> list[FiniteSemigroup]:
    out = []
    for n in range(2, max_order + 1):
        out.extend(_monoids_with_zero_of_order(n))
    return out


_BUILTIN_FACTORIES = {
    "i0": lambda: construct_cyclic_group_with_zero(1),
    "trivial-0": lambda: construct_cyclic_group_with_zero(1),
    "matrix-units": lambda: construct_cyclic_group_with_zero(1),
    "z2-0": lambda: construct_cyclic_group_with_zero(2),
    "z3-0": lambda: construct_cyclic_group_with_zero(3),
    "z4-0": lambda: construct_cyclic_group_with_zero(4),
    "zero-2": lambda: construct_zero_semigroup(2),
    "zero-3": lambda: construct_zero_semigroup(3),
    "zero-2-with-1": lambda: adjoin_identity(construct_zero_semigroup(2)),
    "zero-3-with-1": lambda: adjoin_identity(construct_zero_semigroup(3)),
}

BUILTIN_NAMES = tuple(sorted(_BUILTIN_FACTORIES))


def builtin(name: str) -> FiniteSemigroup:
    try:
        return _BUILTIN_FACTORIES[name]()
    except KeyError:
        raise SemigroupError(
            f"unknown builtin {name!r}; available: {', '.join(BUILTIN_NAMES)}"
        ) from None


def default_corpus(max_order: int = 4) -> list[CorpusEntry]:
    """Monoid-with-zero corpus for the verification suites: every class of
    order <= max_order plus the named cyclic families (Z4^0 has order 5 and
    is not covered by the exhaustive sweep)."""
    entries = [
        CorpusEntry("i0", builtin("i0")),
        CorpusEntry("z2-0", builtin("z2-0")),
        CorpusEntry("z3-0", builtin("z3-0")),
        CorpusEntry("z4-0", builtin("z4-0")),
    ]
    for S in monoids_with_zero(max_order):
        entries.append(CorpusEntry(S.name, S))
    return entries


def corpus_lambdas(S: FiniteSemigroup, carrier_cap: int = 32, max_lam: int = 3):
    """Index-set sizes keeping the carrier within the oracle budget."""
    return [
        lam
        for lam in range(1, max_lam + 1)
        if lam * lam * (S.size - 1) + 1 <= carrier_cap
    ]
