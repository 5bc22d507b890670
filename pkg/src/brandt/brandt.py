"""Construction of the zero-glued index extension B0_lam(S) of a monoid with
zero, the matrix-units semigroup, and extensions of groups with adjoined zero.

The carrier is {0} u (lam x S* x lam) with
    (a, s, b) * (c, t, d) = (a, st, d)  if b == c and st != 0_S, else 0,
realized directly (products landing on the zero middle are glued to 0 at
construction time).  Index 0 of the carrier is always the zero.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import BadCardinality, LambdaCapExceeded, NotAGroup, NotMonoidWithZero, OutOfRange
from .semigroups import (
    FiniteSemigroup,
    UnitGroup,
    adjoin_zero,
    construct_cyclic_group_with_zero,
    unit_group,
    validate_semigroup,
)

LAMBDA_CAP_DEFAULT = 6


@dataclass(frozen=True)
class BrandtSemigroup:
    """The constructed extension together with its element codec.

    Nonzero carrier elements are coordinates (alpha, s, beta) with s a base
    index in S* = S \\ {0_S}; the codec is
        encode(alpha, s, beta) = 1 + alpha*(|S|-1)*lam + rank(s)*lam + beta
    with rank taken over S* in base element order.
    """

    base: FiniteSemigroup
    lam: int
    carrier: FiniteSemigroup
    star: tuple[int, ...]
    star_rank: dict
    units: UnitGroup | None

    def encode(self, alpha: int, s: int, beta: int) -> int:
        if not (0 <= alpha < self.lam and 0 <= beta < self.lam):
            raise OutOfRange(f"index coordinates ({alpha}, {beta}) outside 0..{self.lam - 1}")
        if s not in self.star_rank:
            raise OutOfRange(f"middle coordinate {s} is not a nonzero base element")
        n1 = len(self.star)
        return 1 + alpha * n1 * self.lam + self.star_rank[s] * self.lam + beta

    def decode(self, idx: int):
        """Return None for the zero, else the coordinate triple."""
        if idx == 0:
            return None
        if not 1 <= idx < self.carrier.size:
            raise OutOfRange(f"carrier index {idx} out of range")
        i = idx - 1
        n1 = len(self.star)
        beta = i % self.lam
        rank = (i // self.lam) % n1
        alpha = i // (self.lam * n1)
        return (alpha, self.star[rank], beta)


def construct_brandt(
    S: FiniteSemigroup,
    lam: int,
    *,
    allow_nonmonoid: bool = False,
    lam_cap: int = LAMBDA_CAP_DEFAULT,
) -> BrandtSemigroup:
    """Build B0_lam(S) for a monoid S with zero (0_S != 1_S, so S* is nonempty).

    With allow_nonmonoid=True only a zero is required; the triple
    parametrization is then unavailable (no unit group), but the carrier is
    still well defined.
    """
    if lam < 1:
        raise BadCardinality("lam must be >= 1")
    if lam > lam_cap:
        raise LambdaCapExceeded(f"lam = {lam} exceeds the cap {lam_cap}")
    if S.zero is None:
        raise NotMonoidWithZero("base semigroup has no zero")
    if S.size < 2:
        raise NotMonoidWithZero("base semigroup must have a nonzero element")
    if not allow_nonmonoid and S.identity is None:
        raise NotMonoidWithZero("base semigroup has no identity")

    star = tuple(s for s in range(S.size) if s != S.zero)
    star_rank = {s: r for r, s in enumerate(star)}
    n1 = len(star)
    size = lam * lam * n1 + 1

    labels = ["0"]
    for alpha in range(lam):
        for s in star:
            for beta in range(lam):
                labels.append(f"({alpha}|{S.elements[s]}|{beta})")

    def enc(alpha, s, beta):
        return 1 + alpha * n1 * lam + star_rank[s] * lam + beta

    table = [[0] * size for _ in range(size)]
    zero_s = S.zero
    for a in range(lam):
        for s in star:
            for b in range(lam):
                i = enc(a, s, b)
                row = table[i]
                for t in star:
                    st = S.table[s][t]
                    if st == zero_s:
                        continue
                    for d in range(lam):
                        row[enc(b, t, d)] = enc(a, st, d)

    name = f"B0_{lam}({S.name})" if S.name else f"B0_{lam}"
    carrier = validate_semigroup(labels, table, name=name)
    units = unit_group(S) if S.identity is not None else None
    return BrandtSemigroup(S, lam, carrier, star, star_rank, units)


def matrix_units(lam: int, *, lam_cap: int = LAMBDA_CAP_DEFAULT) -> BrandtSemigroup:
    """The semigroup of lam x lam matrix units: the extension of the
    two-element monoid {1, 0}.  The singleton middle coordinate is dropped
    from the display labels."""
    base = construct_cyclic_group_with_zero(1)
    B = construct_brandt(base, lam, lam_cap=lam_cap)
    labels = ["0"]
    for alpha in range(lam):
        for beta in range(lam):
            labels.append(f"({alpha}|{beta})")
    carrier = replace(B.carrier, elements=tuple(labels), name=f"B_{lam}")
    return replace(B, carrier=carrier)


def brandt_semigroup_of_group(
    G: FiniteSemigroup, lam: int, *, lam_cap: int = LAMBDA_CAP_DEFAULT
) -> BrandtSemigroup:
    """The extension of a group with a fresh adjoined zero."""
    if G.identity is None:
        raise NotAGroup("no identity element")
    units = unit_group(G)
    if len(units.members) != G.size:
        raise NotAGroup("not every element is invertible")
    return construct_brandt(adjoin_zero(G), lam, lam_cap=lam_cap)
