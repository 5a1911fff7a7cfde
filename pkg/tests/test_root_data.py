import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovekit.root_data import RootDatum, build_root_datum, mat_mul, identity_matrix


CASES = [("A1", 3), ("A2", 5), ("B2", 5), ("G2", 7), ("A1xA1", 3), ("C3", 7), ("D4", 7)]


def test_cartan_bourbaki():
    # a_ij = <alpha_i^vee, alpha_j>; alpha_1 long in B2, short in G2
    assert build_root_datum("A2", 5).cartan == ((2, -1), (-1, 2))
    assert build_root_datum("B2", 5).cartan == ((2, -1), (-2, 2))
    assert build_root_datum("G2", 7).cartan == ((2, -3), (-1, 2))
    assert build_root_datum("A1xA1", 3).cartan == ((2, 0), (0, 2))


@pytest.mark.parametrize("label,l,npos,order", [
    ("A1", 3, 1, 2), ("A2", 5, 3, 6), ("B2", 5, 4, 8), ("G2", 7, 6, 12), ("C3", 7, 9, 48), ("D4", 7, 12, 192),
])
def test_counts(label, l, npos, order):
    d = build_root_datum(label, l)
    assert len(d.positive_roots) == npos
    assert len(d.weyl_group) == order


def test_components_and_affine_node():
    b2 = build_root_datum("B2", 5).components[0]
    assert (b2.e, b2.h) == (2, 4)
    assert b2.highest_root == (1, 2)
    # highest root of the dual system
    assert b2.highest_coroot == (2, 1)
    g2 = build_root_datum("G2", 7).components[0]
    assert (g2.e, g2.h, g2.highest_root) == (1, 6, (3, 2))
    assert len(build_root_datum("A1xA1", 3).components) == 2


@pytest.mark.parametrize("label,l,msg", [
    ("G2", 9, "l must be prime to 3 for G2"),
    ("A1", 4, "l must be odd"),
    ("A2", 3, "prime to e = 3"),
    ("A3", 3, "Coxeter number h = 4"),
    ("X2", 3, "unknown Cartan type"),
])
def test_validation(label, l, msg):
    with pytest.raises(ValueError, match=msg):
        build_root_datum(label, l)


@pytest.mark.parametrize("label,l", CASES)
def test_rho_and_coroots(label, l):
    d = build_root_datum(label, l)
    for i in range(d.rank):
        cb = d.coroot_of(d.simple_root(i))
        assert d.pairing(d.rho, cb) == 1
        assert d.root_of_coroot(cb) == d.simple_root(i)
    for beta in d.positive_roots:
        cb = d.coroot_of(beta)
        assert d.pairing(d.root_to_weight(beta), cb) == 2


@pytest.mark.parametrize("label,l", CASES)
def test_reflections_are_involutions(label, l):
    d = build_root_datum(label, l)
    one = identity_matrix(d.rank)
    for beta in d.positive_roots:
        s = d.reflection_matrix(beta)
        assert mat_mul(s, s) == one


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CASES[:4]), st.lists(st.integers(-20, 20), min_size=2, max_size=2))
def test_root_weight_roundtrip(case, coords):
    d = build_root_datum(*case)
    beta = tuple(coords[: d.rank])
    w = d.root_to_weight(beta)
    assert tuple(d.weight_to_root(w)) == beta


@settings(max_examples=60, deadline=None)
@given(st.integers(-40, 40))
def test_restricted_decomposition_a1(n):
    d = build_root_datum("A1", 3)
    r, q = d.restricted_decompose((n,))
    assert 0 <= r[0] < 3 and r[0] + 3 * q[0] == n


def test_restricted_example():
    assert build_root_datum("A1", 3).restricted_decompose((5,)) == ((2,), (1,))


def test_xi_sc():
    d = build_root_datum("A1", 3)
    assert d.xi_sc_enumerate() == [((-1,), True), ((0,), False), ((1,), False), ((2,), True)]
    a2 = build_root_datum("A2", 5)
    reps = a2.xi_sc_enumerate()
    # omega + rho ranges over the 21 lattice points of the closed 5-alcove
    assert len(reps) == 21
    assert sum(1 for _, s in reps if s) == 15


@pytest.mark.parametrize("label,l", CASES)
def test_json_roundtrip(label, l):
    d = build_root_datum(label, l)
    again = RootDatum.from_json(d.dumps())
    assert again.cartan == d.cartan and again.positive_roots == d.positive_roots
    assert json.loads(d.dumps())["l"] == l


def test_json_rejects_wrong_cartan():
    doc = build_root_datum("B2", 5).to_json()
    doc["cartan"] = [[2, -2], [-1, 2]]
    with pytest.raises(ValueError):
        RootDatum.from_json(doc)
