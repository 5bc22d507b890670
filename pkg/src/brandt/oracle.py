"""Brute-force machinery, independent of the triple parametrization.

`enumerate_automorphisms` depends only on the Cayley table; it is the oracle
every structural claim is checked against.  The rest of the module extracts
triples from oracle automorphisms and runs the end-to-end verifiers.
"""
from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from itertools import permutations

from .brandt import BrandtSemigroup, construct_brandt, matrix_units
from .errors import (
    BudgetExceeded,
    DecompositionMismatch,
    NotAnAutomorphism,
    NotMonoidWithZero,
)
from .semigroups import (
    FiniteSemigroup,
    SemigroupMap,
    construct_zero_semigroup,
    idempotents,
    is_automorphism,
    maximal_idempotents,
)
from .triples import (
    AutTriple,
    compose,
    enumerate_normalized_triples,
    invert,
    kernel_enumerate,
    kernel_membership,
    normalize_triple,
    realize_triple,
    triple_group_order,
)

ORACLE_BUDGET_DEFAULT = 32
BIJECTION_BUDGET_DEFAULT = 10**6
DEFAULT_SEED = 1729


def enumerate_automorphisms(S: FiniteSemigroup, budget: int = ORACLE_BUDGET_DEFAULT):
    """All automorphisms of S by backtracking over element images.

    Images of maximal idempotents are assigned first, then the remaining
    idempotents, then everything else; each assignment propagates all forced
    product images, so a completed assignment is already multiplicative.
    Results are sorted by image array.
    """
    n = S.size
    if n > budget:
        raise BudgetExceeded(f"|S| = {n} exceeds the oracle budget {budget}")
    table = S.table
    idem = set(idempotents(S))
    maxi = set(maximal_idempotents(S))

    order = sorted(maxi) + sorted(idem - maxi) + [x for x in range(n) if x not in idem]
    images = [-1] * n
    used = [False] * n
    results: list[tuple[int, ...]] = []

    def compatible(a: int, b: int) -> bool:
        if (a in idem) != (b in idem) or (a in maxi) != (b in maxi):
            return False
        if a == S.zero or b == S.zero:
            return a == b
        if a == S.identity or b == S.identity:
            return a == b
        return True

    def assign(a: int, b: int, trail: list) -> bool:
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            if images[x] != -1:
                if images[x] != y:
                    return False
                continue
            if used[y] or not compatible(x, y):
                return False
            images[x] = y
            used[y] = True
            trail.append((x, y))
            for c in range(n):
                ic = images[c]
                if ic == -1:
                    continue
                stack.append((table[x][c], table[y][ic]))
                stack.append((table[c][x], table[ic][y]))
        return True

    def search(pos: int):
        while pos < n and images[order[pos]] != -1:
            pos += 1
        if pos == n:
            results.append(tuple(images))
            return
        x = order[pos]
        for y in range(n):
            if used[y]:
                continue
            trail: list = []
            if assign(x, y, trail):
                search(pos + 1)
            for (c, d) in trail:
                images[c] = -1
                used[d] = False

    search(0)
    results.sort()
    return [SemigroupMap(S, S, imgs) for imgs in results]


def decompose_automorphism(B: BrandtSemigroup, sigma: SemigroupMap) -> AutTriple:
    """Extract the normalized triple (u[0] = 1_S, pivot index 0) realizing a
    given automorphism of the carrier.

    Reads phi off the images of the diagonal identity idempotents, u off the
    middle coordinates of the column over the pivot, and h off the middle
    coordinates of the pivot diagonal; then verifies the realization
    reproduces sigma on every element.
    """
    if B.units is None:
        raise NotMonoidWithZero("decomposition needs a base monoid")
    if not is_automorphism(B.carrier, sigma.images):
        raise NotAnAutomorphism("the given map is not an automorphism of the carrier")
    if sigma.images[0] != 0:
        raise DecompositionMismatch("automorphism does not fix the zero")
    S, lam = B.base, B.lam
    one = S.identity

    phi = [-1] * lam
    for a in range(lam):
        d = B.decode(sigma(B.encode(a, one, a)))
        if d is None or d[1] != one or d[0] != d[2]:
            raise DecompositionMismatch(
                "a diagonal maximal idempotent is not sent to one"
            )
        phi[a] = d[0]
    if sorted(phi) != list(range(lam)):
        raise DecompositionMismatch("diagonal idempotents are not permuted")

    members = set(B.units.members)
    u = [-1] * lam
    for b in range(lam):
        d = B.decode(sigma(B.encode(b, one, 0)))
        if d is None or d[0] != phi[b] or d[2] != phi[0] or d[1] not in members:
            raise DecompositionMismatch("pivot column does not yield units")
        u[b] = d[1]

    h = [-1] * S.size
    h[S.zero] = S.zero
    for s in B.star:
        d = B.decode(sigma(B.encode(0, s, 0)))
        if d is None or d[0] != phi[0] or d[2] != phi[0]:
            raise DecompositionMismatch("pivot diagonal leaves the pivot block")
        h[s] = d[1]
    if not is_automorphism(S, h):
        raise DecompositionMismatch("extracted base map is not an automorphism")

    t = AutTriple(tuple(phi), tuple(h), tuple(u))
    if realize_triple(B, t, check=False).images != sigma.images:
        raise DecompositionMismatch("extracted triple does not reproduce the map")
    return t


@dataclass
class AutGroupReport:
    """Oracle vs structural comparison for one extension."""

    subject: str
    lam: int
    oracle_order: int
    structural_order: int
    match: bool
    kernel_size: int
    triple_group_order: int
    seed: int | None = None
    elapsed: float = 0.0
    witness: list | None = None
    notes: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "subject": self.subject,
            "lambda": self.lam,
            "oracle_order": self.oracle_order,
            "structural_order": self.structural_order,
            "match": self.match,
            "kernel_size": self.kernel_size,
            "triple_group_order": self.triple_group_order,
            "seed": self.seed,
            "elapsed": round(self.elapsed, 6),
            "witness": self.witness,
            "notes": self.notes,
        }
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)

    def render_text(self) -> str:
        status = "match" if self.match else "MISMATCH"
        lines = [
            f"{self.subject} (lambda={self.lam}): {status}",
            f"  oracle order      {self.oracle_order}",
            f"  structural order  {self.structural_order}",
            f"  triple group      {self.triple_group_order}  kernel {self.kernel_size}",
        ]
        if self.witness is not None:
            lines.append(f"  witness           {self.witness}")
        for k, v in self.notes.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _subject(S: FiniteSemigroup) -> str:
    return S.name or f"semigroup<{S.size}>"


def verify_realization_completeness(
    S: FiniteSemigroup,
    lam: int,
    *,
    oracle_budget: int = ORACLE_BUDGET_DEFAULT,
) -> AutGroupReport:
    """Check that the normalized triples realize exactly the automorphisms
    the oracle finds (set equality of maps)."""
    start = time.perf_counter()
    B = construct_brandt(S, lam)
    base_autos = [m.images for m in enumerate_automorphisms(S, budget=oracle_budget)]
    oracle_set = {
        m.images for m in enumerate_automorphisms(B.carrier, budget=oracle_budget)
    }
    realized = {}
    for t in enumerate_normalized_triples(B, base_autos=base_autos):
        realized[realize_triple(B, t, check=False).images] = t
    realized_set = set(realized)
    match = realized_set == oracle_set
    witness = None
    if not match:
        diff = realized_set.symmetric_difference(oracle_set)
        witness = list(next(iter(diff)))
    tgo = triple_group_order(B, len(base_autos))
    return AutGroupReport(
        subject=_subject(S),
        lam=lam,
        oracle_order=len(oracle_set),
        structural_order=len(realized_set),
        match=match,
        kernel_size=B.units.order,
        triple_group_order=tgo,
        elapsed=time.perf_counter() - start,
    )


def verify_matrix_units_rigidity(
    lam: int, *, oracle_budget: int = ORACLE_BUDGET_DEFAULT
) -> AutGroupReport:
    """Aut of the matrix-units semigroup has order lam! and every
    automorphism acts as (a, b) |-> ((a)phi, (b)phi) for a permutation phi."""
    start = time.perf_counter()
    B = matrix_units(lam)
    one = B.base.identity
    autos = enumerate_automorphisms(B.carrier, budget=oracle_budget)
    pair_form = True
    for sigma in autos:
        phi = []
        for a in range(lam):
            d = B.decode(sigma(B.encode(a, one, a)))
            phi.append(d[0] if d else -1)
        if sorted(phi) != list(range(lam)):
            pair_form = False
            break
        for a in range(lam):
            for b in range(lam):
                if sigma(B.encode(a, one, b)) != B.encode(phi[a], one, phi[b]):
                    pair_form = False
        if not pair_form:
            break
    expected = math.factorial(lam)
    return AutGroupReport(
        subject=f"B_{lam}",
        lam=lam,
        oracle_order=len(autos),
        structural_order=expected,
        match=len(autos) == expected and pair_form,
        kernel_size=1,
        triple_group_order=expected,
        elapsed=time.perf_counter() - start,
        notes={"pair_form": pair_form},
    )


@dataclass
class BijectionCensus:
    """Census of zero-fixing bijections of a carrier."""

    subject: str
    lam: int
    carrier_size: int
    bijections: int
    automorphisms: int

    @property
    def all_automorphisms(self) -> bool:
        return self.bijections == self.automorphisms


def _zero_fixing_bijections(carrier: FiniteSemigroup):
    n = carrier.size
    z = carrier.zero
    rest = [x for x in range(n) if x != z]
    for perm in permutations(rest):
        images = [0] * n
        images[z] = z
        for x, y in zip(rest, perm):
            images[x] = y
        yield tuple(images)


def verify_zero_semigroup_bijections(
    k: int, lam: int, *, budget: int = BIJECTION_BUDGET_DEFAULT
) -> BijectionCensus:
    """Over a zero semigroup base (no identity) every zero-fixing bijection
    of the carrier is an automorphism; count them all."""
    S = construct_zero_semigroup(k)
    B = construct_brandt(S, lam, allow_nonmonoid=True)
    n = B.carrier.size
    if math.factorial(n - 1) > budget:
        raise BudgetExceeded(f"{n - 1}! bijections exceed the budget {budget}")
    total = 0
    good = 0
    for images in _zero_fixing_bijections(B.carrier):
        total += 1
        if is_automorphism(B.carrier, images):
            good += 1
    return BijectionCensus(_subject(S), lam, n, total, good)


def monoid_contrast_witness(S: FiniteSemigroup, lam: int):
    """A zero-fixing bijection of the carrier over a monoid base that is NOT
    an automorphism, or None if every one is."""
    B = construct_brandt(S, lam)
    for images in _zero_fixing_bijections(B.carrier):
        if not is_automorphism(B.carrier, images):
            return SemigroupMap(B.carrier, B.carrier, images)
    return None


def random_triple(B: BrandtSemigroup, rng: random.Random, base_autos) -> AutTriple:
    phi = list(range(B.lam))
    rng.shuffle(phi)
    h = tuple(rng.choice(base_autos))
    u = tuple(rng.choice(B.units.members) for _ in range(B.lam))
    return AutTriple(tuple(phi), h, u)


def verify_composition_law(
    B: BrandtSemigroup, trials: int, seed: int = DEFAULT_SEED
) -> bool:
    """Realize-then-compose equals compose-then-realize on random pairs."""
    rng = random.Random(seed)
    base_autos = [m.images for m in enumerate_automorphisms(B.base)]
    for _ in range(trials):
        t = random_triple(B, rng, base_autos)
        t2 = random_triple(B, rng, base_autos)
        lhs = realize_triple(B, compose(B, t, t2), check=False)
        rhs = realize_triple(B, t, check=False).then(realize_triple(B, t2, check=False))
        if lhs.images != rhs.images:
            return False
    return True


def verify_quotient_structure(
    B: BrandtSemigroup,
    *,
    seed: int = DEFAULT_SEED,
    conjugation_samples: int = 200,
    oracle_budget: int = ORACLE_BUDGET_DEFAULT,
) -> AutGroupReport:
    """The kernel is normal, realization is a surjective homomorphism onto
    the oracle automorphisms, and the quotient order equals the oracle order."""
    start = time.perf_counter()
    rng = random.Random(seed)
    base_autos = [m.images for m in enumerate_automorphisms(B.base, budget=oracle_budget)]
    kernel = kernel_enumerate(B)
    identity_images = tuple(range(B.carrier.size))

    kernel_exact = all(
        realize_triple(B, k, check=False).images == identity_images for k in kernel
    )
    normal = True
    for _ in range(conjugation_samples):
        t = random_triple(B, rng, base_autos)
        t_inv = invert(B, t)
        for k in kernel:
            if not kernel_membership(B, compose(B, compose(B, t_inv, k), t)):
                normal = False

    oracle_set = {
        m.images for m in enumerate_automorphisms(B.carrier, budget=oracle_budget)
    }
    realized_set = {
        realize_triple(B, t, check=False).images
        for t in enumerate_normalized_triples(B, base_autos=base_autos)
    }
    tgo = triple_group_order(B, len(base_autos))
    quotient_order = tgo // len(kernel)
    match = (
        kernel_exact
        and normal
        and realized_set == oracle_set
        and quotient_order == len(oracle_set)
    )
    return AutGroupReport(
        subject=_subject(B.base),
        lam=B.lam,
        oracle_order=len(oracle_set),
        structural_order=quotient_order,
        match=match,
        kernel_size=len(kernel),
        triple_group_order=tgo,
        seed=seed,
        elapsed=time.perf_counter() - start,
        notes={"kernel_exact": kernel_exact, "kernel_normal": normal},
    )


def roundtrip_holds(B: BrandtSemigroup, t: AutTriple) -> bool:
    """decompose(realize(t)) == normalize(t)."""
    sigma = realize_triple(B, t, check=False)
    return decompose_automorphism(B, sigma) == normalize_triple(B, t)
