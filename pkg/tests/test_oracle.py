import pytest

from brandt.brandt import construct_brandt, matrix_units
from brandt.errors import BudgetExceeded, NotAnAutomorphism
from brandt.oracle import (
    decompose_automorphism,
    enumerate_automorphisms,
    monoid_contrast_witness,
    roundtrip_holds,
    verify_composition_law,
    verify_matrix_units_rigidity,
    verify_quotient_structure,
    verify_realization_completeness,
    verify_zero_semigroup_bijections,
)
from brandt.semigroups import (
    SemigroupMap,
    construct_cyclic_group_with_zero,
    maximal_idempotents,
    validate_semigroup,
)
from brandt.triples import AutTriple, identity_triple, normalize_triple, realize_triple


@pytest.fixture(scope="module")
def z20():
    return construct_cyclic_group_with_zero(2)


@pytest.fixture(scope="module")
def Bz2(z20):
    return construct_brandt(z20, 2)


def test_trivial_semigroup_has_identity_only():
    S = validate_semigroup(["e"], [[0]])
    autos = enumerate_automorphisms(S)
    assert [m.images for m in autos] == [(0,)]


def test_matrix_units_2_has_two(z20):
    autos = enumerate_automorphisms(matrix_units(2).carrier)
    assert len(autos) == 2


def test_z20_is_rigid(z20):
    autos = enumerate_automorphisms(z20)
    assert [m.images for m in autos] == [(0, 1, 2)]


def test_output_is_sorted():
    carrier = matrix_units(3).carrier
    arrays = [m.images for m in enumerate_automorphisms(carrier)]
    assert arrays == sorted(arrays)
    assert len(arrays) == 6


def test_budget(z20):
    with pytest.raises(BudgetExceeded):
        enumerate_automorphisms(construct_brandt(z20, 3).carrier, budget=10)


def test_oracle_automorphisms_permute_maximal_idempotents(Bz2):
    maxi = set(maximal_idempotents(Bz2.carrier))
    for sigma in enumerate_automorphisms(Bz2.carrier):
        assert {sigma(e) for e in maxi} == maxi


def test_decompose_identity(Bz2):
    idmap = SemigroupMap(Bz2.carrier, Bz2.carrier, range(Bz2.carrier.size))
    assert decompose_automorphism(Bz2, idmap) == identity_triple(Bz2)


def test_decompose_matrix_units_swap():
    B = matrix_units(2)
    one = B.base.identity
    sigma = next(
        m for m in enumerate_automorphisms(B.carrier)
        if m.images != tuple(range(B.carrier.size))
    )
    t = decompose_automorphism(B, sigma)
    assert t.phi == (1, 0)
    assert t.h == (0, 1)
    assert t.u == (one, one)


def test_decompose_rejects_non_automorphism(Bz2):
    n = Bz2.carrier.size
    bogus = SemigroupMap(Bz2.carrier, Bz2.carrier, [0] * n)
    with pytest.raises(NotAnAutomorphism):
        decompose_automorphism(Bz2, bogus)


def test_roundtrips_both_ways(Bz2):
    for sigma in enumerate_automorphisms(Bz2.carrier):
        t = decompose_automorphism(Bz2, sigma)
        assert realize_triple(Bz2, t).images == sigma.images
    g = Bz2.base.index("g")
    t = AutTriple((1, 0), (0, 1, 2), (g, g))
    assert roundtrip_holds(Bz2, t)
    assert decompose_automorphism(Bz2, realize_triple(Bz2, t)) == normalize_triple(Bz2, t)


@pytest.mark.parametrize("m,lam,order", [(1, 2, 2), (2, 2, 4), (2, 1, 1)])
def test_realization_completeness(m, lam, order):
    S = construct_cyclic_group_with_zero(m)
    rep = verify_realization_completeness(S, lam)
    assert rep.match
    assert rep.oracle_order == rep.structural_order == order


def test_matrix_units_rigidity_small():
    for lam, order in ((1, 1), (2, 2), (3, 6)):
        rep = verify_matrix_units_rigidity(lam)
        assert rep.match and rep.oracle_order == order


def test_zero_semigroup_census_small():
    census = verify_zero_semigroup_bijections(2, 2)
    # 4-element nonzero part of the 5-element carrier: 4! bijections, all automorphisms
    assert census.bijections == census.automorphisms == 24
    with pytest.raises(BudgetExceeded):
        verify_zero_semigroup_bijections(3, 2, budget=100)


def test_monoid_contrast(z20):
    w = monoid_contrast_witness(z20, 2)
    assert w is not None
    assert w(0) == 0 and w.is_bijective and not w.is_homomorphism


def test_composition_law(Bz2):
    assert verify_composition_law(Bz2, 50)


def test_quotient_structure(Bz2):
    rep = verify_quotient_structure(Bz2, conjugation_samples=50)
    assert rep.match
    assert rep.triple_group_order == 8
    assert rep.kernel_size == 2
    assert rep.oracle_order == rep.structural_order == 4


def test_report_serialization(Bz2):
    import json
    rep = verify_quotient_structure(Bz2, conjugation_samples=5)
    doc = json.loads(rep.to_json())
    assert doc["match"] is True and doc["seed"] == 1729
    assert "kernel_normal" in doc["notes"]
    assert "match" in rep.render_text()
