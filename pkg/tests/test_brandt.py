import pytest

from brandt.brandt import (
    BrandtSemigroup,
    brandt_semigroup_of_group,
    construct_brandt,
    matrix_units,
)
from brandt.errors import (
    BadCardinality,
    LambdaCapExceeded,
    NotAGroup,
    NotMonoidWithZero,
    OutOfRange,
)
from brandt.semigroups import (
    construct_cyclic_group,
    construct_cyclic_group_with_zero,
    construct_zero_semigroup,
    idempotents,
    maximal_idempotents,
    validate_semigroup,
)


@pytest.fixture
def z20():
    return construct_cyclic_group_with_zero(2)


def brandt_size(S, lam):
    return lam * lam * (S.size - 1) + 1


@pytest.mark.parametrize("m,lam", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (2, 3)])
def test_size_law(m, lam):
    S = construct_cyclic_group_with_zero(m)
    B = construct_brandt(S, lam)
    assert B.carrier.size == brandt_size(S, lam)


def test_carrier_is_validated_associative(z20):
    # validate_semigroup runs the full n^3 check at construction
    B = construct_brandt(z20, 3)
    assert B.carrier.size == 19
    assert B.carrier.zero == 0


def test_requires_monoid_with_zero():
    with pytest.raises(NotMonoidWithZero):
        construct_brandt(construct_zero_semigroup(3), 2)  # no identity
    with pytest.raises(NotMonoidWithZero):
        construct_brandt(construct_cyclic_group(2), 2)  # no zero
    trivial = validate_semigroup(["e"], [[0]])  # zero == identity
    with pytest.raises(NotMonoidWithZero):
        construct_brandt(trivial, 2)


def test_zero_base_allowed_explicitly():
    B = construct_brandt(construct_zero_semigroup(3), 2, allow_nonmonoid=True)
    assert B.carrier.size == 9
    assert B.units is None
    # the whole carrier is again a zero semigroup
    assert all(v == 0 for row in B.carrier.table for v in row)


def test_lambda_cap(z20):
    with pytest.raises(LambdaCapExceeded):
        construct_brandt(z20, 7)
    with pytest.raises(BadCardinality):
        construct_brandt(z20, 0)


def test_multiplication_rule(z20):
    B = construct_brandt(z20, 2)
    one, g, zero = 0, 1, 2
    mul = B.carrier.table

    def e(a, s, b):
        return B.encode(a, s, b)

    # index mismatch kills the product
    assert mul[e(0, g, 1)][e(0, g, 0)] == 0
    # matching indices multiply the middles
    assert mul[e(0, g, 1)][e(1, g, 0)] == e(0, one, 0)
    assert mul[e(0, one, 1)][e(1, g, 1)] == e(0, g, 1)
    # zero is absorbing
    assert mul[0][e(0, g, 1)] == 0 and mul[e(0, g, 1)][0] == 0


def test_codec_formula_and_roundtrip(z20):
    B = construct_brandt(z20, 2)
    n1 = z20.size - 1
    for idx in range(1, B.carrier.size):
        a, s, b = B.decode(idx)
        assert B.encode(a, s, b) == idx
        assert idx == 1 + a * n1 * 2 + B.star_rank[s] * 2 + b
    assert B.decode(0) is None
    with pytest.raises(OutOfRange):
        B.encode(2, 0, 0)
    with pytest.raises(OutOfRange):
        B.encode(0, z20.zero, 0)
    with pytest.raises(OutOfRange):
        B.decode(B.carrier.size)


def test_codec_order_for_matrix_units():
    B = matrix_units(2)
    one = B.base.identity
    assert [B.decode(i) for i in range(1, 5)] == [
        (0, one, 0), (0, one, 1), (1, one, 0), (1, one, 1),
    ]


def test_matrix_units():
    assert matrix_units(1).carrier.size == 2
    B2 = matrix_units(2)
    assert B2.carrier.size == 5
    assert B2.carrier.elements[1] == "(0|0)"
    B3 = matrix_units(3)
    assert B3.carrier.size == 10
    assert len(maximal_idempotents(B3.carrier)) == 3
    # idempotents are the zero and the diagonal pairs
    assert len(idempotents(B2.carrier)) == 3
    assert len(idempotents(B3.carrier)) == 4


def test_matrix_units_idempotents_exactly_diagonal():
    B = matrix_units(2)
    one = B.base.identity
    expected = {0} | {B.encode(a, one, a) for a in range(2)}
    # for the two-element base, (a|1|a) are the only nonzero idempotents
    assert set(idempotents(B.carrier)) == expected


def test_idempotent_characterization(z20):
    B = construct_brandt(z20, 2)
    E_nonzero = [s for s in idempotents(z20) if s != z20.zero]
    expected = {0} | {B.encode(a, e, a) for a in range(2) for e in E_nonzero}
    assert set(idempotents(B.carrier)) == expected
    one = z20.identity
    assert set(maximal_idempotents(B.carrier)) == {B.encode(a, one, a) for a in range(2)}


def test_diagonal_identities_act_as_local_units(z20):
    B = construct_brandt(z20, 2)
    one = z20.identity
    mul = B.carrier.table
    for idx in range(1, B.carrier.size):
        a, s, b = B.decode(idx)
        assert mul[B.encode(a, one, a)][idx] == idx
        assert mul[idx][B.encode(b, one, b)] == idx


def test_carrier_contains_matrix_units_copy(z20):
    lam = 3
    B = construct_brandt(z20, lam)
    M = matrix_units(lam)
    one = z20.identity
    embed = {0: 0}
    for a in range(lam):
        for b in range(lam):
            embed[M.encode(a, M.base.identity, b)] = B.encode(a, one, b)
    for i in range(M.carrier.size):
        for j in range(M.carrier.size):
            assert embed[M.carrier.table[i][j]] == B.carrier.table[embed[i]][embed[j]]


def test_brandt_semigroup_of_group():
    G = construct_cyclic_group(2)
    B = brandt_semigroup_of_group(G, 2)
    assert B.carrier.size == 9
    assert brandt_semigroup_of_group(construct_cyclic_group(1), 2).carrier.size == 5
    assert brandt_semigroup_of_group(construct_cyclic_group(3), 2).carrier.size == 13
    with pytest.raises(NotAGroup):
        brandt_semigroup_of_group(construct_cyclic_group_with_zero(2), 2)


def iso_exists(A, B):
    from itertools import permutations
    if A.size != B.size:
        return False
    for p in permutations(range(A.size)):
        if all(p[A.table[i][j]] == B.table[p[i]][p[j]]
               for i in range(A.size) for j in range(A.size)):
            return True
    return False


def test_lambda_one_is_the_base(z20):
    B = construct_brandt(z20, 1)
    assert B.carrier.size == z20.size
    assert iso_exists(z20, B.carrier)


def test_serialized_carrier_roundtrips(z20):
    from brandt.semigroups import FiniteSemigroup
    B = construct_brandt(z20, 2)
    text = B.carrier.to_json()
    assert FiniteSemigroup.from_json(text).to_json() == text
    assert "(0|g|1)" in B.carrier.elements
