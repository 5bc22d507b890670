"""Finite semigroups given by Cayley tables.

Elements are identified by their index into an ordered label list; every map
is an image array over indices.  Maps act on the right throughout the
library: ``(x)f`` is ``f.images[x]`` and ``(x)(fg) = ((x)f)g``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .errors import (
    BadCardinality,
    BadIndex,
    DuplicateLabel,
    NoIdentity,
    NonAssociative,
    NotAutomorphism,
    NotIdempotent,
)


@dataclass(frozen=True)
class FiniteSemigroup:
    """A validated finite semigroup.

    table[i][j] is the index of elements[i]·elements[j].  `zero` and
    `identity` are detected at validation time, never declared by the caller.
    """

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    zero: int | None = None
    identity: int | None = None
    name: str | None = None

    @property
    def size(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def to_json(self) -> str:
        doc: dict = {}
        if self.name is not None:
            doc["name"] = self.name
        doc["elements"] = list(self.elements)
        doc["table"] = [list(row) for row in self.table]
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "FiniteSemigroup":
        doc = json.loads(text)
        return validate_semigroup(
            doc["elements"], doc["table"], name=doc.get("name")
        )


def _is_associative(table) -> tuple[int, int, int] | None:
    """Return a witness triple where associativity fails, or None."""
    n = len(table)
    rng = range(n)
    for i in rng:
        ti = table[i]
        for j in rng:
            tij = table[ti[j]]
            tj = table[j]
            for k in rng:
                if tij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def validate_semigroup(labels, table, name: str | None = None) -> FiniteSemigroup:
    """Validate a Cayley table exhaustively and detect zero / identity.

    Associativity is the naive n^3 loop; tables here are desk-scale.
    """
    labels = [str(x) for x in labels]
    n = len(labels)
    if len(set(labels)) != n:
        raise DuplicateLabel(f"labels are not pairwise distinct: {labels}")
    if len(table) != n:
        raise BadIndex(f"table has {len(table)} rows for {n} elements")
    rows = []
    for row in table:
        if len(row) != n:
            raise BadIndex("table is not square")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise BadIndex(f"table entry {v!r} is not an index in 0..{n - 1}")
        rows.append(tuple(row))
    tbl = tuple(rows)

    witness = _is_associative(tbl)
    if witness is not None:
        raise NonAssociative(*witness)

    zero = None
    identity = None
    for e in range(n):
        if all(tbl[e][x] == x == tbl[x][e] for x in range(n)):
            identity = e
        if all(tbl[e][x] == e == tbl[x][e] for x in range(n)):
            zero = e
    return FiniteSemigroup(tuple(labels), tbl, zero=zero, identity=identity, name=name)


class SemigroupMap:
    """A total map between finite semigroups, acting on the right.

    Homomorphism status is computed lazily and cached; bijectivity is cheap
    and computed on demand.
    """

    __slots__ = ("source", "target", "images", "_is_hom")

    def __init__(self, source: FiniteSemigroup, target: FiniteSemigroup, images):
        images = tuple(images)
        if len(images) != source.size:
            raise BadIndex("image array length does not match the source")
        for y in images:
            if not 0 <= y < target.size:
                raise BadIndex(f"image index {y} outside the target")
        self.source = source
        self.target = target
        self.images = images
        self._is_hom: bool | None = None

    def __call__(self, x: int) -> int:
        return self.images[x]

    @property
    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(set(self.images)) == len(
            self.images
        )

    @property
    def is_homomorphism(self) -> bool:
        if self._is_hom is None:
            ts, tt, im = self.source.table, self.target.table, self.images
            self._is_hom = all(
                im[ts[i][j]] == tt[im[i]][im[j]]
                for i in range(len(im))
                for j in range(len(im))
            )
        return self._is_hom

    @property
    def is_automorphism_map(self) -> bool:
        return (
            self.source is self.target or self.source.table == self.target.table
        ) and self.is_bijective and self.is_homomorphism

    def then(self, other: "SemigroupMap") -> "SemigroupMap":
        """Right-action composition: apply self first, then other."""
        if self.target.size != other.source.size:
            raise BadIndex("composition of maps with mismatched middle semigroup")
        return SemigroupMap(
            self.source, other.target, tuple(other.images[y] for y in self.images)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, SemigroupMap) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"SemigroupMap({list(self.images)})"


def identity_map(S: FiniteSemigroup) -> SemigroupMap:
    return SemigroupMap(S, S, range(S.size))


def is_automorphism(S: FiniteSemigroup, images) -> bool:
    """True iff the image array is a bijective multiplicative self-map of S."""
    images = tuple(images)
    if len(images) != S.size or len(set(images)) != S.size:
        return False
    if any(not 0 <= y < S.size for y in images):
        return False
    t = S.table
    return all(
        images[t[i][j]] == t[images[i]][images[j]]
        for i in range(S.size)
        for j in range(S.size)
    )


def idempotents(S: FiniteSemigroup) -> list[int]:
    return [x for x in range(S.size) if S.table[x][x] == x]


def natural_leq(S: FiniteSemigroup, e: int, f: int) -> bool:
    """e <= f in the natural partial order on idempotents: ef = fe = e."""
    for x in (e, f):
        if S.table[x][x] != x:
            raise NotIdempotent(f"element {x} ({S.elements[x]}) is not idempotent")
    return S.table[e][f] == e and S.table[f][e] == e


def maximal_idempotents(S: FiniteSemigroup) -> list[int]:
    E = idempotents(S)
    return [
        e
        for e in E
        if not any(f != e and natural_leq(S, e, f) for f in E)
    ]


@dataclass(frozen=True, eq=False)
class UnitGroup:
    """The group of invertible elements of a monoid."""

    parent: FiniteSemigroup
    members: tuple[int, ...]
    inverse: dict

    @property
    def order(self) -> int:
        return len(self.members)


def unit_group(S: FiniteSemigroup) -> UnitGroup:
    if S.identity is None:
        raise NoIdentity("unit group requires a two-sided identity")
    e = S.identity
    members = []
    inverse = {}
    for u in range(S.size):
        for v in range(S.size):
            if S.table[u][v] == e and S.table[v][u] == e:
                members.append(u)
                inverse[u] = v
                break
    return UnitGroup(S, tuple(members), inverse)


def _fresh_label(labels, base: str) -> str:
    cand = base
    while cand in labels:
        cand += "'"
    return cand


def adjoin_zero(S: FiniteSemigroup) -> FiniteSemigroup:
    """Append a fresh absorbing element (always fresh, even if S has a zero)."""
    n = S.size
    labels = list(S.elements) + [_fresh_label(S.elements, "0")]
    table = [list(row) + [n] for row in S.table]
    table.append([n] * (n + 1))
    name = f"{S.name}^0" if S.name else None
    return validate_semigroup(labels, table, name=name)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """Append a fresh neutral element (always fresh, even if S has an identity)."""
    n = S.size
    labels = list(S.elements) + [_fresh_label(S.elements, "1")]
    table = [list(row) + [i] for i, row in enumerate(S.table)]
    table.append(list(range(n + 1)))
    name = f"{S.name}^1" if S.name else None
    return validate_semigroup(labels, table, name=name)


def extend_automorphism_to_zero(S: FiniteSemigroup, f: SemigroupMap) -> SemigroupMap:
    """Extend an automorphism of S to the extension of S by a fresh zero,
    fixing the new zero."""
    if f.source.table != S.table or not is_automorphism(S, f.images):
        raise NotAutomorphism("the given map is not an automorphism of S")
    S0 = adjoin_zero(S)
    return SemigroupMap(S0, S0, f.images + (S.size,))


def construct_zero_semigroup(k: int) -> FiniteSemigroup:
    """Semigroup of cardinality k in which every product is the zero."""
    if k < 2:
        raise BadCardinality("a zero semigroup here needs at least 2 elements")
    labels = ["0"] + [f"a{i}" for i in range(1, k)]
    table = [[0] * k for _ in range(k)]
    return validate_semigroup(labels, table, name=f"zero{k}")


def construct_cyclic_group(m: int) -> FiniteSemigroup:
    """The cyclic group of order m (no zero)."""
    if m < 1:
        raise BadCardinality("cyclic group order must be >= 1")
    labels = ["1"] + (["g"] if m == 2 else [f"g{i}" for i in range(1, m)])
    table = [[(i + j) % m for j in range(m)] for i in range(m)]
    return validate_semigroup(labels, table, name=f"Z{m}")


def construct_cyclic_group_with_zero(m: int) -> FiniteSemigroup:
    """Z_m with a fresh absorbing element; m = 1 gives the two-element
    monoid {1, 0}."""
    G = construct_cyclic_group(m)
    S = adjoin_zero(G)
    return replace(S, name=f"Z{m}^0" if m > 1 else "I^0")
