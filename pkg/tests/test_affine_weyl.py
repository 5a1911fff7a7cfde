import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovekit.affine_weyl import AffineCoroot, AffineElement, Window, affine_group
from alcovekit.root_data import build_root_datum


@pytest.fixture(scope="module")
def a1():
    return affine_group(build_root_datum("A1", 3))


@pytest.fixture(scope="module")
def a2():
    return affine_group(build_root_datum("A2", 5))


def words(labels, max_size=6):
    return st.lists(st.sampled_from(labels), max_size=max_size)


def test_translation_a1(a1):
    t = a1.from_word([0, 1])
    assert t == AffineElement(((1,),), (6,))
    assert a1.length(t) == 2
    assert a1.translation((6,)) == t


def test_affine_reflections_a1(a1):
    s = a1.reflection((1,), 3)
    assert a1.dot(s, (0,)) == (4,)
    assert a1.simple(0) == s
    # the coroot alpha^vee + 3 delta vanishes on the wall <v, alpha^vee> = -3
    assert a1.reflection_of(AffineCoroot((1,), 1)) == a1.reflection((1,), -3)
    gamma = a1.linear_apply(a1.from_word([0, 1]), AffineCoroot((1,), 0))
    assert gamma == AffineCoroot((1,), -2)


def test_length_one_reflection_a2(a2):
    s0 = a2.reflection_of(AffineCoroot((-1, -1), 1))
    assert s0 == a2.simple(0) and a2.length(s0) == 1
    assert a2.length(a2.reflection_of(AffineCoroot((1, 1), 1))) == 7


def test_group_sizes(a1, a2):
    assert len(a1.elements_up_to(4)) == 9
    assert len(a2.elements_up_to(3)) == 19
    fin = affine_group(build_root_datum("B2", 5), finite=True)
    assert len(fin.elements_up_to(10)) == 8


@settings(max_examples=60, deadline=None)
@given(words([0, 1, 2], 5), words([0, 1, 2], 5), words([0, 1, 2], 5))
def test_group_laws(w1, w2, w3):
    G = affine_group(build_root_datum("A2", 5))
    x, y, z = G.from_word(w1), G.from_word(w2), G.from_word(w3)
    assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
    assert G.mul(x, G.inv(x)) == G.identity()
    v = (2, -3)
    assert G.act(G.mul(x, y), v) == G.act(x, G.act(y, v))


@settings(max_examples=60, deadline=None)
@given(words([0, 1, 2], 7))
def test_length_properties(w):
    G = affine_group(build_root_datum("A2", 5))
    x = G.from_word(w)
    n = G.length(x)
    assert n <= len(w) and (len(w) - n) % 2 == 0
    assert len(G.inversion_coroots(x)) == n
    assert G.from_word(G.reduced_word(x)) == x
    assert len(G.reduced_word(x)) == n
    assert G.length(G.inv(x)) == n
    for s in G.left_descents(x):
        assert G.length(G.mul(G.simple(s), x)) == n - 1


def test_bruhat_matches_subwords(a2):
    els = a2.elements_up_to(3)
    for x in els:
        for y in els:
            assert a2.bruhat_leq(x, y) == a2.bruhat_leq_subword(x, y)


def test_parse_element(a1):
    assert a1.parse_element("s0s1") == a1.from_word([0, 1])
    assert a1.parse_element("s_0 s_1") == a1.from_word([0, 1])
    assert a1.parse_element("0,1") == a1.from_word([0, 1])
    assert a1.parse_element("e") == a1.identity()
    assert a1.word_str(a1.from_word([1, 0, 1])) == "s1s0s1"


def test_fold_examples(a1):
    omega, x = a1.fold((5,))
    assert omega == (-1,) and a1.dot(x, omega) == (5,)
    omega, x = a1.fold((4,))
    assert omega == (0,) and a1.dot(x, omega) == (4,)


@settings(max_examples=80, deadline=None)
@given(st.integers(-5, 5), st.integers(-5, 5))
def test_fold_a2(a, b):
    G = affine_group(build_root_datum("A2", 5))
    omega, x = G.fold((a, b))
    assert G.datum.in_closed_alcove(tuple(c + 1 for c in omega))
    assert G.dot(x, omega) == (a, b)


def test_omega_class(a1):
    assert a1.omega_class((-1,))[1] == ((-1,), (2,))
    assert a1.omega_class((0,))[1] == ((0,), (1,))


def test_stabilizers(a1, a2):
    st1 = a1.stabilizer_dot((-1,))
    assert st1.generators == (1,) and st1.order == 2
    assert a1.stabilizer_dot((2,)).generators == (0,)
    assert a1.stabilizer_dot((0,)).is_trivial
    # -rho is fixed by the whole finite Weyl group
    assert a2.stabilizer_dot((-1, -1)).order == 6
    for omega, sing in a2.datum.xi_sc_enumerate():
        assert (not a2.stabilizer_dot(omega).is_trivial) == sing


def test_up_closure_a1(a1):
    got = a1.up_closure((4,), Window((4,), 8))
    # every block member below 4 down to depth 8
    assert got == {(4,), (0,), (-2,), (-6,), (-8,), (-12,)}


def test_parabolic_quotient(a1):
    reps = a1.coset_min_reps((1,), 4)
    assert [a1.word_str(x) for x in reps] == ["e", "s0", "s1s0", "s0s1s0", "s1s0s1s0"]
    for x in a1.elements_up_to(4):
        r = a1.min_rep(x, (1,))
        assert a1.is_min_rep(r, (1,)) and a1.length(r) <= a1.length(x)


def test_window_weights():
    d = build_root_datum("A2", 5)
    w = Window((0, 0), 2)
    pts = w.weights(d)
    assert pts[0] == (0, 0) and len(pts) == 6
    assert all(w.contains(d, mu) for mu in pts)
    assert not w.contains(d, (1, 0))


def test_json_roundtrip(a2):
    for x in a2.elements_up_to(2):
        assert a2.from_json(a2.to_json(x)) == x
