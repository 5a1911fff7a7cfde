from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovekit.affine_weyl import Window
from alcovekit.jantzen import (
    block_rep,
    jantzen_lhs,
    jantzen_lhs_subgeneric,
    jantzen_rhs,
    jantzen_rhs_subgeneric,
    linkage_nonzero,
    linkage_recursive,
    partition_count,
    partitions,
    shapovalov_factors,
    sl2_simple_multiplicities,
    sl2_verma_flag,
    translation_factors,
    verma_character,
)
from alcovekit.root_data import build_root_datum


def coin_count(roots, eta):
    """Kostant partitions as a coin-change table over the positive roots."""
    ways = {(0,) * len(eta): 1}
    box = [range(e + 1) for e in eta]
    for beta in roots:
        new = {}
        for v in product(*box):
            total = 0
            k = 0
            while True:
                w = tuple(a - k * b for a, b in zip(v, beta))
                if any(c < 0 for c in w):
                    break
                total += ways.get(w, 0)
                k += 1
            if total:
                new[v] = total
        ways = new
    return ways.get(tuple(eta), 0)


@pytest.mark.parametrize("label,l", [("A2", 5), ("B2", 5), ("G2", 7), ("A3", 5)])
def test_partition_count_matches_coin_table(label, l):
    d = build_root_datum(label, l)
    for eta in product(range(4), repeat=d.rank):
        assert partition_count(d, eta) == coin_count(d.positive_roots, eta)


def test_partition_examples():
    a2 = build_root_datum("A2", 5)
    assert partition_count(a2, (1, 1)) == 2
    assert partition_count(a2, (2, 2)) == 3
    assert len(partitions(a2, (2, 2))) == 3
    b2 = build_root_datum("B2", 5)
    assert partition_count(b2, (1, 2)) == 3
    assert partition_count(a2, (-1, 0)) == 0


def test_verma_character_a1():
    d = build_root_datum("A1", 3)
    ch = verma_character(d, (3,), Window((3,), 4))
    assert ch.coeffs == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1, (-5,): 1}


def test_shapovalov_example():
    d = build_root_datum("A1", 3)
    fs = shapovalov_factors(d, (5,), (3,))
    assert [f.c for f in fs] == [5, 4, 3]
    assert [f.vanishing is not None for f in fs] == [False, False, True]
    assert fs[2].verma == (-1,) and fs[2].vanishing.level == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(-6, 6), st.integers(-6, 6))
def test_jsf_a2_random(a, b):
    d = build_root_datum("A2", 5)
    win = Window((a, b), 6)
    assert jantzen_lhs(d, (a, b), win) == jantzen_rhs(d, (a, b), win)


@pytest.mark.parametrize("label,l,lam", [("B2", 5, (1, 0)), ("B2", 5, (-2, 3)), ("G2", 7, (0, 1))])
def test_jsf_other_types(label, l, lam):
    d = build_root_datum(label, l)
    win = Window(lam, 6)
    assert jantzen_lhs(d, lam, win) == jantzen_rhs(d, lam, win)


def test_subgeneric_a2():
    d = build_root_datum("A2", 5)
    for beta in d.positive_roots:
        for lam in [(3, 0), (-1, 4), (2, 2)]:
            win = Window(lam, 7)
            assert jantzen_lhs_subgeneric(d, lam, beta, win) == jantzen_rhs_subgeneric(d, lam, beta, win)


def test_jsf_detects_tampering():
    d = build_root_datum("A1", 3)
    win = Window((5,), 8)
    rhs = jantzen_rhs(d, (5,), win)
    assert jantzen_lhs(d, (5,), win) != rhs + verma_character(d, (-7,), win)


def test_linkage_agrees_a2():
    d = build_root_datum("A2", 5)
    win = Window((2, 1), 5)
    pts = win.weights(d)
    for lam in pts[:6]:
        for mu in pts:
            assert linkage_nonzero(d, lam, mu) == linkage_recursive(d, lam, mu)


def test_block_rep():
    d = build_root_datum("A1", 3)
    assert block_rep(d, (5,)) == ((-1,), (-1,))
    assert block_rep(d, (8,)) == ((2,), (-1,))
    assert block_rep(d, (4,))[0] == (0,)


def test_translation_factors():
    d = build_root_datum("A1", 3)
    assert translation_factors(d, (5,), (-1,), (0,)) == [(6,), (4,)]
    with pytest.raises(ValueError):
        translation_factors(d, (4,), (-1,), (0,))


def test_sl2_flags():
    d = build_root_datum("A1", 3)
    assert sl2_verma_flag(d, "regular", 0, 1) == [(-1, (-2,)), (0, (0,)), (1, (4,)), (2, (6,))]
    assert sl2_verma_flag(d, "singular", 0, 1) == [(0, (-1,)), (1, (5,))]
    with pytest.raises(ValueError):
        sl2_verma_flag(d, "singular", 0, 1, omega=(0,))
    with pytest.raises(ValueError):
        sl2_verma_flag(d, "regular", 0, 1, omega=(2,))


def test_sl2_simple_multiplicities():
    d = build_root_datum("A1", 3)
    assert sl2_simple_multiplicities(d, 2, 30, -2) == {2: 1, 1: 1, 0: 1, -1: 1, -2: 1}
