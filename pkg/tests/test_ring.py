import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import SMALL_RINGS, instance, small_ring
from orebaer.errors import DescriptorError, ParseError, RingAxiomError, RingTooLarge
from orebaer.ring import (
    RingSubset,
    central_idempotents,
    construct_ring,
    idempotent_set,
    intersection_closure,
    left_annihilator,
    principal_right_ideal,
    right_annihilator,
    right_ideal_closure,
    verify_ring_axioms,
)
from orebaer.properties import check_basic

RING_NAMES = sorted(SMALL_RINGS)


# -- construction ---------------------------------------------------------------


def test_modular_4_two_times_two_is_zero():
    R = construct_ring("modular:4")
    assert R.mul(R.parse("2"), R.parse("2")) == R.zero


def test_dual_numbers_over_z2():
    R = small_ring("Z2[t]/t2")
    assert R.elem_names == ("0", "1", "t", "1+t")
    t = R("t")
    assert t * t == R.elem(R.zero)


def test_ut_z5_order_and_unity():
    R = construct_ring("ut:modular:5")
    assert R.order == 125
    assert R.name(R.one) == "[[1,0],[0,1]]"


@pytest.mark.parametrize("name", RING_NAMES)
def test_construction_is_deterministic(name):
    a = construct_ring(SMALL_RINGS[name])
    b = construct_ring(json.loads(json.dumps(SMALL_RINGS[name])))
    assert np.array_equal(a.add_table, b.add_table)
    assert np.array_equal(a.mul_table, b.mul_table)
    assert a.elem_names == b.elem_names


@pytest.mark.parametrize("n", [2, 5, 6, 9, 12])
def test_modular_tables_match_integer_arithmetic(n):
    R = construct_ring(f"modular:{n}")
    assert oracles.check_tables_against_values(R, oracles.value_add_modular(n), oracles.value_mul_modular(n)) is None


@pytest.mark.parametrize("p,modulus", [(2, [0, 0, 1]), (2, [0, 0, 0, 1]), (2, [1, 1, 1]), (3, [1, 0, 1]),
                                       (4, [0, 0, 1]), (3, [2, 0, 0, 1])])
def test_quotient_tables_match_schoolbook(p, modulus):
    R = construct_ring({"kind": "quotient", "base": f"modular:{p}", "modulus": modulus})
    add, mul = oracles.value_ops_quotient(p, modulus)
    assert oracles.check_tables_against_values(R, add, mul) is None


@pytest.mark.parametrize("desc,n", [("ut:modular:3", 3), ("ut:modular:4", 4), ("matrix:2:modular:2", 2)])
def test_matrix_tables_match_matrix_product(desc, n):
    R = construct_ring(desc)
    add, mul = oracles.value_ops_matrix(n)
    assert oracles.check_tables_against_values(R, add, mul) is None


def test_subring_is_closed_and_contains_unity():
    R, _ = instance("EX_2_1").ring, None
    assert R.order == 81
    amb = R.ambient
    members = set(int(a) for a in R.embedding)
    assert amb.one in members
    for a in members:
        for b in members:
            assert amb.add(a, b) in members and amb.mul(a, b) in members


def test_subring_rejects_foreign_element():
    R = instance("EX_2_4").ring
    with pytest.raises(ParseError):
        R.parse("[[1,0],[0,2]]")


def test_product_ring_componentwise():
    R = small_ring("Z2xZ3[t]/t2")
    assert R.order == 18
    e = R.parse("(1,0)")
    assert R.mul(e, e) == e


def test_table_descriptor_roundtrip():
    Z3 = construct_ring("modular:3")
    desc = {"kind": "table", "add": Z3.add_table.tolist(), "mul": Z3.mul_table.tolist()}
    T = construct_ring(desc)
    assert np.array_equal(T.mul_table, Z3.mul_table)


def test_table_descriptor_axiom_failure_carries_witness():
    add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    mul = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    with pytest.raises(RingAxiomError) as exc:
        construct_ring({"kind": "table", "add": add, "mul": mul})
    assert exc.value.witness


@pytest.mark.parametrize("desc,err", [
    ({"kind": "nope"}, DescriptorError),
    ({"n": 3}, DescriptorError),
    ("banana", DescriptorError),
    ({"kind": "product", "left": "modular:2"}, DescriptorError),
    ({"kind": "table", "add": [[0]], "mul": [[0], [0]]}, DescriptorError),
])
def test_bad_descriptors(desc, err):
    with pytest.raises(err):
        construct_ring(desc)


def test_order_cap():
    with pytest.raises(RingTooLarge):
        construct_ring("ut:modular:5", max_order=100)


def test_parse_error_has_position():
    R = small_ring("Z2[t]/t2")
    with pytest.raises(ParseError) as exc:
        R.parse("1 + * t")
    assert exc.value.column >= 1
    assert "column" in str(exc.value)


@pytest.mark.parametrize("name", RING_NAMES)
def test_axioms_hold_exhaustively(name):
    verify_ring_axioms(small_ring(name))


# -- annihilators and closures ----------------------------------------------------


def test_right_annihilator_of_t():
    R = small_ring("Z2[t]/t2")
    assert right_annihilator(RingSubset.of(R, [R.parse("t")])).names == ["0", "t"]


def test_right_annihilator_trivial_cases():
    R = small_ring("Z2[t]/t2")
    assert len(right_annihilator(RingSubset.of(R, [R.zero]))) == R.order
    assert right_annihilator(RingSubset.of(R, [R.one])).names == ["0"]


def test_right_ideal_closure_examples():
    R = small_ring("Z2[t]/t2")
    assert right_ideal_closure(R, [R.parse("t")]).names == ["0", "t"]
    assert len(right_ideal_closure(R, [R.one])) == R.order
    Z6 = small_ring("Z6")
    assert right_ideal_closure(Z6, [3]).names == ["0", "3"]


def test_idempotents_of_small_rings():
    R = small_ring("Z2[t]/t2")
    cls = idempotent_set(R)
    assert [c.element.index for c in cls] == [0, 1]
    assert all(c.is_central for c in cls)
    Z6 = small_ring("Z6")
    assert sorted(c.index for c in idempotent_set(Z6)) == [0, 1, 3, 4]
    assert central_idempotents(Z6) == [0, 1, 3, 4]


def test_intersection_closure_examples():
    R = small_ring("Z2[t]/t2")
    whole = RingSubset.whole(R)
    assert intersection_closure([whole]) == [whole]
    small = RingSubset.of(R, [0, R.parse("t")])
    assert set(intersection_closure([small, whole])) == {small, whole}
    # principal annihilators of Z6: r(aZ6) for a = 0, 1, 2, 3 and their intersections
    Z6 = small_ring("Z6")
    fam = [right_annihilator(right_ideal_closure(Z6, [a])) for a in range(4)]
    assert len(intersection_closure(fam)) <= 4


@given(name=st.sampled_from(RING_NAMES), data=st.data())
def test_annihilator_is_intersection_of_singletons(name, data):
    R = small_ring(name)
    X = data.draw(st.sets(st.integers(0, R.order - 1), min_size=1, max_size=5))
    whole = set(range(R.order))
    for x in X:
        whole &= set(right_annihilator(RingSubset.of(R, [x])).elements)
    assert set(right_annihilator(RingSubset.of(R, sorted(X))).elements) == whole
    assert frozenset(whole) == oracles.right_ann(R, X)


@given(name=st.sampled_from(RING_NAMES), data=st.data())
def test_annihilator_of_right_ideal_is_two_sided(name, data):
    R = small_ring(name)
    gens = data.draw(st.lists(st.integers(0, R.order - 1), min_size=1, max_size=3))
    A = right_annihilator(right_ideal_closure(R, gens))
    assert A.is_ideal
    assert oracles.is_right_ideal(R, set(A.elements))


@given(name=st.sampled_from(RING_NAMES), data=st.data())
def test_right_ideal_closure_is_idempotent(name, data):
    R = small_ring(name)
    gens = data.draw(st.lists(st.integers(0, R.order - 1), min_size=1, max_size=3))
    once = right_ideal_closure(R, gens)
    assert right_ideal_closure(R, once.elements) == once
    assert oracles.is_right_ideal(R, set(once.elements))


@given(name=st.sampled_from(RING_NAMES), data=st.data())
def test_left_annihilator_by_definition(name, data):
    R = small_ring(name)
    X = data.draw(st.sets(st.integers(0, R.order - 1), min_size=1, max_size=4))
    expected = {a for a in range(R.order) if all(R.mul(a, x) == R.zero for x in X)}
    assert set(left_annihilator(RingSubset.of(R, sorted(X))).elements) == expected


@pytest.mark.parametrize("name", RING_NAMES)
def test_principal_right_ideal_matches_oracle(name):
    R = small_ring(name)
    for a in range(R.order):
        assert frozenset(principal_right_ideal(R, a).elements) == oracles.principal_right(R, a)


@pytest.mark.parametrize("name", RING_NAMES)
def test_idempotent_classification_matches_definitions(name):
    R = small_ring(name)
    ref = oracles.semicentral_classes(R)
    got = {c.index: (c.is_left_semicentral, c.is_right_semicentral, c.is_central) for c in idempotent_set(R)}
    assert got == ref
    for left, right, central in got.values():
        assert central == (left and right)


SEMIPRIME = [n for n in RING_NAMES if check_basic(small_ring(n), "semiprime").ok]


def test_semiprime_panel_is_nontrivial():
    assert {"Z6", "M2(Z2)", "F4"} <= set(SEMIPRIME)
    assert "UT(Z2)" not in SEMIPRIME


@pytest.mark.parametrize("name", SEMIPRIME)
def test_semiprime_rings_have_coinciding_semicentral_sets(name):
    R = small_ring(name)
    cls = idempotent_set(R)
    left = [c.index for c in cls if c.is_left_semicentral]
    right = [c.index for c in cls if c.is_right_semicentral]
    assert left == right == central_idempotents(R)


def test_ring_elem_operators():
    R = small_ring("Z3[u]/u2+1")
    u = R("u")
    assert u**2 == R("2")
    assert -u + u == R("0")
    assert (u - 1) * (u + 1) == R("1")
