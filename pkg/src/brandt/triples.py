"""The triple parametrization of Aut(B0_lam(S)).

A triple [phi, h, u] is a permutation phi of the index set, an automorphism h
of the base monoid S, and a map u from indices to the unit group H1 of S.  It
realizes the automorphism

    (alpha, s, beta) |-> ((alpha)phi, (alpha)u * (s)h * ((beta)u)^-1, (beta)phi)

of the carrier, fixing 0.  Everything is right-action: (a)phi = phi[a],
(x)(fg) = ((x)f)g.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import permutations, product

from .brandt import BrandtSemigroup
from .errors import BudgetExceeded, InvalidTriple, MismatchedBase, NotMonoidWithZero
from .semigroups import SemigroupMap, is_automorphism

ENUMERATION_BUDGET_DEFAULT = 10**6


@dataclass(frozen=True)
class AutTriple:
    """[phi, h, u] with h stored as an image array over the base monoid and u
    as an array of unit indices of length lam."""

    phi: tuple[int, ...]
    h: tuple[int, ...]
    u: tuple[int, ...]


def identity_triple(B: BrandtSemigroup) -> AutTriple:
    _require_units(B)
    return AutTriple(
        tuple(range(B.lam)),
        tuple(range(B.base.size)),
        (B.base.identity,) * B.lam,
    )


def _require_units(B: BrandtSemigroup):
    if B.units is None:
        raise NotMonoidWithZero("triples need a base monoid (no unit group here)")


def validate_triple(B: BrandtSemigroup, t: AutTriple) -> None:
    _require_units(B)
    lam, S = B.lam, B.base
    if len(t.phi) != lam or sorted(t.phi) != list(range(lam)):
        raise InvalidTriple(f"phi = {t.phi} is not a permutation of 0..{lam - 1}")
    if len(t.h) != S.size or not is_automorphism(S, t.h):
        raise InvalidTriple("h is not an automorphism of the base monoid")
    members = set(B.units.members)
    if len(t.u) != lam or any(x not in members for x in t.u):
        raise InvalidTriple("u must assign a unit of the base monoid to every index")


def realize_triple(B: BrandtSemigroup, t: AutTriple, *, check: bool = True) -> SemigroupMap:
    """The automorphism of the carrier determined by the triple."""
    if check:
        validate_triple(B, t)
    S = B.base
    mul = S.table
    inv = B.units.inverse
    images = [0] * B.carrier.size
    for idx in range(1, B.carrier.size):
        alpha, s, beta = B.decode(idx)
        mid = mul[mul[t.u[alpha]][t.h[s]]][inv[t.u[beta]]]
        images[idx] = B.encode(t.phi[alpha], mid, t.phi[beta])
    return SemigroupMap(B.carrier, B.carrier, images)


def compose(B: BrandtSemigroup, t: AutTriple, t2: AutTriple) -> AutTriple:
    """[phi,h,u]*[phi',h',u'] = [phi phi', h h', phi u' . u h'] (apply left
    factor first); third component alpha |-> (((alpha)phi)u') * (((alpha)u)h')."""
    if len(t.phi) != len(t2.phi) or len(t.h) != len(t2.h):
        raise MismatchedBase("triples over different extensions")
    mul = B.base.table
    phi = tuple(t2.phi[a] for a in t.phi)
    h = tuple(t2.h[x] for x in t.h)
    u = tuple(mul[t2.u[t.phi[a]]][t2.h[t.u[a]]] for a in range(B.lam))
    return AutTriple(phi, h, u)


def invert(B: BrandtSemigroup, t: AutTriple) -> AutTriple:
    """[phi,h,u]^-1 = [phi^-1, h^-1, phi^-1 u^-1 h^-1]: precompose u with
    phi^-1, invert in H1, postcompose with h^-1."""
    _require_units(B)
    lam = B.lam
    phi_inv = [0] * lam
    for a in range(lam):
        phi_inv[t.phi[a]] = a
    h_inv = [0] * len(t.h)
    for x, y in enumerate(t.h):
        h_inv[y] = x
    inv = B.units.inverse
    u = tuple(h_inv[inv[t.u[phi_inv[a]]]] for a in range(lam))
    return AutTriple(tuple(phi_inv), tuple(h_inv), u)


def conjugation_by_unit(B: BrandtSemigroup, w: int) -> tuple[int, ...]:
    """The inner automorphism s |-> w^-1 * s * w of the base monoid."""
    _require_units(B)
    mul = B.base.table
    w_inv = B.units.inverse[w]
    return tuple(mul[mul[w_inv][s]][w] for s in range(B.base.size))


def kernel_membership(B: BrandtSemigroup, t: AutTriple) -> bool:
    """True iff the triple realizes the identity automorphism: phi trivial,
    u a constant unit w, and h the conjugation s |-> w^-1 s w."""
    _require_units(B)
    if t.phi != tuple(range(B.lam)):
        return False
    w = t.u[0]
    if any(x != w for x in t.u):
        return False
    return t.h == conjugation_by_unit(B, w)


def kernel_enumerate(B: BrandtSemigroup) -> list[AutTriple]:
    """One kernel triple per unit of the base monoid."""
    _require_units(B)
    id_phi = tuple(range(B.lam))
    return [
        AutTriple(id_phi, conjugation_by_unit(B, w), (w,) * B.lam)
        for w in B.units.members
    ]


def normalize_triple(B: BrandtSemigroup, t: AutTriple) -> AutTriple:
    """The unique triple in the same kernel coset with u[0] = 1_S."""
    _require_units(B)
    w = B.units.inverse[t.u[0]]
    k = AutTriple(tuple(range(B.lam)), conjugation_by_unit(B, w), (w,) * B.lam)
    return compose(B, t, k)


def _base_automorphism_arrays(B: BrandtSemigroup):
    from . import oracle  # deferred: the oracle also consumes this module

    return [m.images for m in oracle.enumerate_automorphisms(B.base)]


def enumerate_normalized_triples(
    B: BrandtSemigroup,
    base_autos=None,
    budget: int = ENUMERATION_BUDGET_DEFAULT,
) -> list[AutTriple]:
    """All triples with u[0] = 1_S, one per automorphism of the carrier,
    in lexicographic (phi, h, u-tail) order."""
    _require_units(B)
    if base_autos is None:
        base_autos = _base_automorphism_arrays(B)
    lam = B.lam
    h1 = B.units.members
    total = math.factorial(lam) * len(base_autos) * len(h1) ** (lam - 1)
    if total > budget:
        raise BudgetExceeded(f"{total} normalized triples exceed the budget {budget}")
    one = B.base.identity
    out = []
    for phi in permutations(range(lam)):
        for h in sorted(tuple(a) for a in base_autos):
            for tail in product(h1, repeat=lam - 1):
                out.append(AutTriple(phi, h, (one,) + tail))
    return out


def triple_group_order(B: BrandtSemigroup, base_aut_count: int | None = None) -> int:
    """Order of the full triple group lam! * |Aut(S)| * |H1|^lam."""
    _require_units(B)
    if base_aut_count is None:
        base_aut_count = len(_base_automorphism_arrays(B))
    return math.factorial(B.lam) * base_aut_count * B.units.order ** B.lam


def aut_group_order(B: BrandtSemigroup, base_aut_count: int | None = None) -> int:
    """Order of Aut of the carrier from the counting formula: the triple
    group order divided by the kernel size |H1|.  Derived, not assumed; the
    oracle cross-checks it on every corpus instance."""
    return triple_group_order(B, base_aut_count) // B.units.order


def triple_to_json(B: BrandtSemigroup, t: AutTriple) -> str:
    doc = {
        "phi": list(t.phi),
        "h": list(t.h),
        "u": [B.base.elements[x] for x in t.u],
    }
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def triple_from_json(B: BrandtSemigroup, text: str) -> AutTriple:
    doc = json.loads(text)
    u = tuple(B.base.index(lbl) for lbl in doc["u"])
    t = AutTriple(tuple(doc["phi"]), tuple(doc["h"]), u)
    validate_triple(B, t)
    return t
