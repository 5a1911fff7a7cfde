"""Acceptance suite: one check per criterion, one PASS/FAIL line each.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import random
import time
from itertools import product

from alcovekit.affine_weyl import Window, affine_group
from alcovekit.center import (
    center_check_S,
    center_check_Shat,
    context,
    end_lattice_regular,
    end_lattice_singular,
    generated_algebra,
    h_identities,
    lattice_equals_sgkm,
    lattices_equal,
    module_action_identity,
    pushforward_check,
    row_identity,
    sl2_tuple,
    specialized_algebra,
    transport_zeta,
)
from alcovekit.gkm import (
    CosetSpace,
    GkmFunction,
    WeightSpace,
    atlas_zeta,
    constant_function,
    evaluate_expansion,
    expand_in_schubert,
    gkm_check_big,
    schubert_class,
)
from alcovekit.jantzen import (
    block_rep,
    jantzen_lhs,
    jantzen_lhs_subgeneric,
    jantzen_rhs,
    jantzen_rhs_subgeneric,
    linkage_nonzero,
    linkage_recursive,
    verma_character,
)
from alcovekit.root_data import build_root_datum

RESULTS: dict[int, tuple[bool, str]] = {}

A1 = build_root_datum("A1", 3)
A2 = build_root_datum("A2", 5)


def record(n, ok, detail):
    RESULTS[n] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    assert ok, detail


# -- 1. sum formula ------------------------------------------------------


def criterion_1():
    start = time.perf_counter()
    bad = []
    count = 0
    for a in range(-6, 7):
        win = Window((a,), 12)
        count += 1
        if jantzen_lhs(A1, (a,), win) != jantzen_rhs(A1, (a,), win):
            bad.append(("A1", a))
    for lam in product(range(-6, 7), repeat=2):
        win = Window(lam, 8)
        count += 1
        if jantzen_lhs(A2, lam, win) != jantzen_rhs(A2, lam, win):
            bad.append(("A2", lam))
    secs = time.perf_counter() - start
    ok = not bad and secs < 10
    return ok, f"sum formula on {count} weights, {len(bad)} mismatches, {secs:.2f}s (< 10s)"


# -- 2. subgeneric formula and the singular A1 block ----------------------


def criterion_2():
    alpha = A1.simple_root(0)
    step = 2 * A1.l  # l * alpha in fundamental-weight coordinates
    bad = []
    count = 0
    for omega in (-1, 2):
        for n in range(-2, 3):
            lam = (omega + n * step,)
            win = Window(lam, 15)
            lhs = jantzen_lhs(A1, lam, win)
            expect = verma_character(A1, (omega + (n - 1) * step,), win)
            i = 2
            while omega + (n - i) * step >= lam[0] - 2 * 15:
                expect = expect + verma_character(A1, (omega + (n - i) * step,), win)
                i += 1
            sub_l = jantzen_lhs_subgeneric(A1, lam, alpha, win)
            sub_r = jantzen_rhs_subgeneric(A1, lam, alpha, win)
            count += 1
            if lhs != expect or sub_l != sub_r or sub_l != lhs:
                bad.append(lam)
    for lam in product(range(-3, 4), repeat=2):
        for beta in A2.positive_roots:
            win = Window(lam, 6)
            count += 1
            if jantzen_lhs_subgeneric(A2, lam, beta, win) != jantzen_rhs_subgeneric(A2, lam, beta, win):
                bad.append((lam, beta))
    return not bad, f"{count} subgeneric instances incl. singular A1 block at depth 15, {len(bad)} mismatches"


# -- 3. linkage and blocks ---------------------------------------------


def criterion_3():
    win = Window((6,), 12)
    pts = win.weights(A1)
    disagree = 0
    cross = 0
    for lam in pts:
        for mu in pts:
            a = linkage_nonzero(A1, lam, mu)
            if a != linkage_recursive(A1, lam, mu):
                disagree += 1
            if a and block_rep(A1, lam)[0] != block_rep(A1, mu)[0]:
                cross += 1
    split = 0
    for d, w in ((A1, win), (A2, Window((3, 3), 5))):
        H = affine_group(d)
        for lam in w.weights(d):
            omega = block_rep(d, lam)[0]
            if any(block_rep(d, mu)[0] != omega for mu in H.up_closure(lam, w)):
                split += 1
            if H.fold(lam)[0] != omega:
                split += 1
    ok = disagree == 0 and cross == 0 and split == 0
    return ok, (f"{len(pts) ** 2} pairs: {disagree} disagreements, {cross} cross-block links, "
                f"{split} inconsistent blocks")


# -- 4. Schubert classes -------------------------------------------------


def diagonal_oracle(G, space, x):
    """Product of the positive affine coroots gamma with s_gamma x < x."""
    r = space.ring
    out = r.one()
    lx = G.length(x)
    for g in G.positive_affine_coroots(lx + 1):
        if G.length(G.mul(G.reflection_of(g), x)) < lx:
            out = out * r.linear_form(g)
    return out


def check_space(G, space):
    fails = 0
    classes = [schubert_class(space, x).body for x in space.points]
    for x, f in zip(space.points, classes):
        lx = space.length(x)
        if not gkm_check_big(f).ok:
            fails += 1
        if any(v and not (v.is_homogeneous() and v.degree() == lx) for v in f.values.values()):
            fails += 1
        # the diagonal value uses the minimal representative, pulled back from W_{l,af}
        if space.J:
            F = CosetSpace(G, (), space.bound)
            if f(x) != diagonal_oracle(G, F, x):
                fails += 1
        elif f(x) != diagonal_oracle(G, space, x):
            fails += 1
    products = 0
    for f in classes:
        for g in classes:
            h = f * g
            coeffs = expand_in_schubert(h)
            products += 1
            if not evaluate_expansion(space, coeffs).equals(h):
                fails += 1
    return len(classes), products, fails


def criterion_4():
    total = prods = fails = 0
    setups = [("A1", 3, False, ()), ("A1", 3, False, (1,)), ("A1", 3, False, (0,)),
              ("A2", 5, True, ()), ("B2", 5, True, ()), ("G2", 7, True, ())]
    for label, l, finite, J in setups:
        G = affine_group(build_root_datum(label, l), finite=finite)
        c, p, f = check_space(G, CosetSpace(G, J, 4))
        total, prods, fails = total + c, prods + p, fails + f
    return fails == 0, f"{total} classes of length <= 4 and {prods} product expansions, {fails} failures"


# -- 5. rank-one class tables -----------------------------------------


def criterion_5():
    G = affine_group(A1)
    full = CosetSpace(G, (), 11)
    gr = CosetSpace(G, (1,), 11)
    a = full.ring.root_form(A1.simple_root(0))
    psi = -schubert_class(full, G.simple(1)).body.specialize()
    phi_p = -schubert_class(full, G.simple(0)).body.specialize()
    phi = -schubert_class(gr, G.simple(0)).body.specialize()
    bad = 0
    rows = 0
    for n in range(-5, 6):
        tau = G.translation((2 * A1.l * n,))
        for e in (0, 1):
            x = G.mul(tau, G.simple(1)) if e else tau
            rows += 1
            if psi(x) != a * (n - e) or phi_p(x) != a * n:
                bad += 1
        rows += 1
        if phi(G.min_rep(tau, (1,))) != a * n:
            bad += 1
    return bad == 0, f"{rows} table entries for psi, phi', phi with |n| <= 5, {bad} mismatches"


# -- 6. centre ---------------------------------------------------------


def coset_pieces(d, bound_of, build):
    G = affine_group(d)
    pieces = {}
    for omega, _ in d.xi_sc_enumerate():
        J = G.stabilizer_dot(omega).generators
        pieces[omega] = build(CosetSpace(G, J, bound_of(omega)))
    return pieces


def criterion_6a():
    G = affine_group(A1)
    rng = random.Random(11)
    weights = Window((12,), 24).weights(A1)
    atlas = atlas_zeta(A1, weights)
    need = {}
    for e in atlas.values():
        need[e.omega] = max(need.get(e.omega, 0), G.length(e.coset))
    spaces = {om: CosetSpace(G, G.stabilizer_dot(om).generators, b) for om, b in need.items()}
    space = WeightSpace(A1, weights)
    ring = space.ring
    classes = {om: [schubert_class(sp, x).body.specialize() for x in sp.points] for om, sp in spaces.items()}
    passed = 0
    failed_single = 0
    trials = 12
    for _ in range(trials):
        combo = {}
        for om, cls in classes.items():
            f = constant_function(spaces[om], 0)
            for c in cls:
                f = f + c * (ring.y(0) ** rng.randint(0, 1) * rng.randint(-3, 3))
            combo[om] = f
        vals = {lam: combo[e.omega](e.coset) for lam, e in atlas.items()}
        f = GkmFunction(space, vals, True)
        if center_check_S(f).ok:
            passed += 1
        lam = rng.choice(weights)
        bump = dict(vals)
        bump[lam] = bump[lam] + 1
        if not center_check_S(GkmFunction(space, bump, True)).ok:
            failed_single += 1
    lone = 0
    for lam in weights:
        g = GkmFunction(space, {w: ring.const(1 if w == lam else 0) for w in space.points}, True)
        if not center_check_S(g).ok:
            lone += 1
    ok = passed == trials and failed_single == trials and lone == len(weights)
    return ok, (f"{passed}/{trials} transported combinations pass, {failed_single}/{trials} one-point "
                f"perturbations and {lone}/{len(weights)} indicators fail")


def criterion_6b():
    count = 0
    bad = []
    for kind, build, gens, omegas in (("singular", end_lattice_singular, ("phi",), (None, (2,))),
                                      ("regular", end_lattice_regular, ("phi_prime", "psi"), (None, (1,)))):
        for omega in omegas:
            for n in range(-2, 3):
                for m in range(n, n + 5):
                    lat = build(A1, n, m, omega=omega)
                    ok, _ = lattice_equals_sgkm(A1, lat)
                    alg = generated_algebra(lat, [sl2_tuple(lat, g) for g in gens], lat.size + 2)
                    count += 1
                    if not ok or not lattices_equal(alg, lat.graded_generators()):
                        bad.append((kind, omega, n, m))
    return not bad, f"{count} lattices equal the windowed sGKM restriction and their generated algebra, {len(bad)} failures"


def criterion_6c():
    rng = random.Random(5)
    agree = disagree = 0
    verdicts = set()
    for d, bound in ((A1, 4), (A2, 2)):
        for trial in range(6):
            def build(sp):
                r = sp.ring
                f = constant_function(sp, 0)
                for x in sp.points:
                    k = rng.randint(0, d.rank)
                    coef = (r.y(k) if k < d.rank else r.delta) * rng.randint(-2, 2) + rng.randint(-2, 2)
                    f = f + schubert_class(sp, x).body * coef
                if trial % 2:
                    x = rng.choice(sp.points)
                    vals = dict(f.values)
                    vals[x] = vals[x] + rng.choice([1, -1]) * (r.y(0) if trial % 3 else r.one())
                    f = GkmFunction(sp, vals)
                return f
            pieces = coset_pieces(d, lambda om: bound, build)
            transported = transport_zeta(d, pieces)
            atlas = atlas_zeta(d, transported.space.points)
            G = affine_group(d)
            if any(G.dot(e.coset, e.omega) != lam or pieces[e.omega](e.coset) != transported(lam)
                   for lam, e in atlas.items()):
                disagree += 1
                continue
            big = all(gkm_check_big(p).ok for p in pieces.values())
            hat = center_check_Shat(transported).ok
            verdicts.add(big)
            if big == hat:
                agree += 1
            else:
                disagree += 1
    ok = disagree == 0 and verdicts == {True, False}
    return ok, f"{agree} random functions, Shat verdict equals the coset GKM verdict ({disagree} disagreements)"


# -- 7. the lattice on [0, 1] ---------------------------------------------


def criterion_7():
    lat = end_lattice_singular(A1, 0, 1)
    basis_ok = lat.fmt() == [["1", "1"], ["0", "alpha"]]
    eq, _ = lattice_equals_sgkm(A1, lat)
    alg = specialized_algebra(lat)
    t = alg["table"]
    dual = alg["dimension"] == 2 and t[(0, 0)] == {0: 1} and t[(0, 1)] == {1: 1} and t[(1, 1)] == {}
    ok = basis_ok and eq and dual
    return ok, "basis {(1,1), (0,alpha)}; specialization is 2-dimensional with square-zero generator" if ok else \
        f"basis {lat.fmt()}, sGKM {eq}, algebra {alg}"


# -- 8. translation matrices ---------------------------------------------


def criterion_8():
    counts = {"h": 0, "row": 0, "module": 0, "push": 0}
    bad = []
    for d, zb in ((A1, 3), (A2, 3)):
        G = affine_group(d)
        zs = G.elements_up_to(3)
        for omega in [w for w, s in d.xi_sc_enumerate() if s]:
            for z in zs:
                counts["h"] += 1
                if not h_identities(d, omega, z, zb).ok:
                    bad.append(("h", omega, G.word_str(z)))
                counts["row"] += 1
                if not row_identity(d, omega, z, zb)[0]:
                    bad.append(("row", omega, G.word_str(z)))
            sp = context(d, omega, zb).space
            psis = [constant_function(sp, 1)]
            for i in range(d.rank + 1):
                xi = schubert_class(sp, G.simple(i)).body
                psis += [xi, xi * xi]
            for psi in psis:
                counts["module"] += 1
                if not module_action_identity(d, omega, psi, zb).ok:
                    bad.append(("module", omega))
                counts["push"] += 1
                if not pushforward_check(d, omega, psi, zb).ok:
                    bad.append(("push", omega))
    detail = ", ".join(f"{v} {k}" for k, v in counts.items())
    return not bad, f"{detail} checks over all singular blocks, {len(bad)} failures"


def criterion_6():
    parts = [criterion_6a(), criterion_6b(), criterion_6c()]
    return all(p[0] for p in parts), " | ".join(p[1] for p in parts)


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


def test_criterion_1():
    record(1, *criterion_1())


def test_criterion_2():
    record(2, *criterion_2())


def test_criterion_3():
    record(3, *criterion_3())


def test_criterion_4():
    record(4, *criterion_4())


def test_criterion_5():
    record(5, *criterion_5())


def test_criterion_6():
    record(6, *criterion_6())


def test_criterion_7():
    record(7, *criterion_7())


def test_criterion_8():
    record(8, *criterion_8())


if __name__ == "__main__":
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        RESULTS[n] = (ok, detail)
        print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
