from fractions import Fraction

import pytest

from alcovekit.affine_weyl import affine_group
from alcovekit.center import (
    center_check_S,
    center_check_Shat,
    context,
    end_lattice_regular,
    end_lattice_singular,
    generated_algebra,
    h_identities,
    h_matrix,
    lattice_equals_sgkm,
    lattices_equal,
    module_action_identity,
    pushforward,
    pushforward_check,
    restrict_lattice,
    row_identity,
    sl2_tuple,
    specialized_algebra,
    transport_zeta,
)
from alcovekit.gkm import CosetSpace, constant_function, indicator, schubert_class
from alcovekit.root_data import build_root_datum
from alcovekit.symring import as_frac


@pytest.fixture(scope="module")
def a1():
    return build_root_datum("A1", 3)


def test_h_matrices_a1(a1):
    G = affine_group(a1)
    ring = context(a1, (-1,), 3).ring
    h1 = h_matrix(a1, (-1,), G.identity())
    assert [G.word_str(x) for x in h1.order] == ["e", "s1"]
    assert h1.fmt(ring) == [["(1)/((y1))", "0"], ["(-1)/((y1))", "-1"]]
    ht = h_matrix(a1, (-1,), G.from_word([0, 1]))
    assert ht.fmt(ring) == [["(1)/((y1 - 6*delta))", "-1"], ["(-1)/((y1 - 6*delta))", "0"]]


@pytest.mark.parametrize("omega", [(-1,), (2,)])
def test_h_identities_a1(a1, omega):
    G = affine_group(a1)
    for z in G.elements_up_to(3):
        rep = h_identities(a1, omega, z, 3)
        assert [l["identity"] for l in rep.lines] == ["factorization", "triangular", "congruence"]
        assert rep.ok, rep.lines
        assert row_identity(a1, omega, z, 3)[0]


def test_h_identities_a2_sample():
    d = build_root_datum("A2", 5)
    G = affine_group(d)
    for omega in [(-1, -1), (-1, 0), (0, 3)]:
        for z in [G.identity(), G.simple(0), G.from_word([1, 0])]:
            assert h_identities(d, omega, z, 2).ok
            assert row_identity(d, omega, z, 2)[0]


@pytest.mark.parametrize("omega", [(-1,), (2,)])
def test_pushforward_extremes(a1, omega):
    G = affine_group(a1)
    ctx = context(a1, omega, 3)
    q = ctx.quotient()
    top = max(ctx.order, key=G.length)
    for x in q.points:
        f = pushforward(a1, omega, schubert_class(ctx.space, G.mul(x, top)).body, 3)
        target = schubert_class(q, x).body
        assert all(f(z) == -as_frac(target(z)) for z in q.points)
        if x != G.identity():
            low = pushforward(a1, omega, schubert_class(ctx.space, x).body, 3)
            assert all(not low(z) for z in q.points)


def test_pushforward_of_non_gkm_fails(a1):
    G = affine_group(a1)
    ctx = context(a1, (-1,), 3)
    bad = indicator(ctx.space, G.identity())
    assert not pushforward_check(a1, (-1,), bad, 3).ok


def test_module_action_a1(a1):
    G = affine_group(a1)
    for omega in [(-1,), (2,)]:
        sp = context(a1, omega, 3).space
        xi0 = schubert_class(sp, G.simple(0)).body
        for psi in [constant_function(sp, 1), xi0, xi0 * schubert_class(sp, G.simple(1)).body]:
            assert module_action_identity(a1, omega, psi, 3).ok
            assert pushforward_check(a1, omega, psi, 3).ok


def test_module_action_negative_control(a1):
    G = affine_group(a1)
    sp = context(a1, (-1,), 3).space
    rep = module_action_identity(a1, (-1,), indicator(sp, G.identity()), 3)
    assert not rep.ok
    assert rep.lines[0]["status"] == "FAIL"


def transported(G, classes):
    pieces = {}
    for omega, x in classes.items():
        sp = CosetSpace(G, G.stabilizer_dot(omega).generators, 4)
        pieces[omega] = schubert_class(sp, x).body
    return pieces


def test_center_checks(a1):
    G = affine_group(a1)
    big = transport_zeta(a1, transported(G, {(-1,): G.simple(0), (0,): G.simple(0)}))
    assert center_check_Shat(big).ok
    assert center_check_S(big.specialize()).ok
    lone = transport_zeta(a1, {(0,): indicator(CosetSpace(G, (), 4), G.simple(0))})
    assert not center_check_Shat(lone).ok
    rep = center_check_S(lone.specialize())
    assert not rep.ok and all("alpha" in v for v in rep.violations)


def test_end_lattice_bases(a1):
    sing = end_lattice_singular(a1, 0, 1)
    assert sing.fmt() == [["1", "1"], ["0", "alpha"]]
    reg = end_lattice_regular(a1, 0, 1)
    assert reg.indices == [-1, 0, 1, 2]
    assert reg.fmt() == [["1", "1", "1", "1"], ["-alpha", "0", "0", "alpha"],
                         ["0", "0", "alpha", "alpha"], ["0", "0", "0", "alpha^2"]]


@pytest.mark.parametrize("kind", ["singular", "regular"])
@pytest.mark.parametrize("n,m", [(-2, 1), (0, 2), (1, 3), (2, 2)])
def test_lattice_equals_sgkm(a1, kind, n, m):
    build = end_lattice_singular if kind == "singular" else end_lattice_regular
    lat = build(a1, n, m)
    ok, info = lattice_equals_sgkm(a1, lat)
    assert ok and info["inside"] and info["full_rank"] and info["restriction_equal"]


def test_window_conditions_alone_are_weaker(a1):
    _, info = lattice_equals_sgkm(a1, end_lattice_regular(a1, 1, 2))
    assert info["window_conditions_defect"] == 1


def test_generated_algebras(a1):
    sing = end_lattice_singular(a1, -1, 2)
    gen = generated_algebra(sing, [sl2_tuple(sing, "phi")], sing.size + 2)
    assert lattices_equal(gen, sing.graded_generators())
    reg = end_lattice_regular(a1, -1, 1)
    gen = generated_algebra(reg, [sl2_tuple(reg, "phi_prime"), sl2_tuple(reg, "psi")], reg.size + 2)
    assert lattices_equal(gen, reg.graded_generators())
    # phi alone misses psi on a regular flag
    gen = generated_algebra(reg, [sl2_tuple(reg, "phi_prime")], reg.size + 2)
    assert not lattices_equal(gen, reg.graded_generators())


def test_specialized_algebra_dual_numbers(a1):
    alg = specialized_algebra(end_lattice_singular(a1, 0, 1))
    assert alg["dimension"] == 2
    assert alg["table"][(0, 1)] == {1: Fraction(1)}
    assert alg["table"][(1, 1)] == {}


def test_restrict_lattice(a1):
    lat = end_lattice_singular(a1, 0, 3)
    sub = end_lattice_singular(a1, 1, 2)
    imgs = restrict_lattice(lat, 1, 2)
    assert all(sub.contains(v) for v in imgs)
