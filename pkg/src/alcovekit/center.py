"""Desk-scale checks of the centre descriptions.

* membership tests for functions on weights (small and big torus);
* endomorphism lattices of truncated big projectives in the rank-one blocks,
  stored as value tuples along the Verma flag;
* the translation matrices ``H_z`` with their factorisation, triangularity and
  congruence identities, the pushforward to a parahoric quotient and the
  module-action identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affine_weyl import AffineElement, AffineWeylGroup, Stabilizer, affine_group
from .gkm import (
    CosetSpace,
    GkmFunction,
    Report,
    WeightSpace,
    atlas_subtorus,
    divisible,
    gkm_check_big,
    schubert_class,
    sgkm_check_small,
    sgkm_conditions,
)
from .jantzen import sl2_verma_flag
from .root_data import RootDatum, Vector, Weight
from .symring import Frac, Poly, PolyRing, as_frac, normalize_form

# -- centre membership ------------------------------------------------


def transport_zeta(datum: RootDatum, pieces: dict[Weight, GkmFunction]) -> GkmFunction:
    """Move coset functions (one per block ``omega``) to weights ``x . omega``."""
    G = affine_group(datum)
    weights = {}
    for omega, f in pieces.items():
        for x in f.space.points:
            weights[G.dot(x, tuple(omega))] = f(x)
    space = WeightSpace(datum, weights)
    small = all(f.small for f in pieces.values())
    return GkmFunction(space, {w: weights[w] for w in space.points}, small)


def center_check_S(f: GkmFunction) -> Report:
    """Polynomial values and the small-torus conditions for every positive root."""
    space = f.space
    ring = space.ring
    datum = space.datum
    rep = Report()
    for p in space.points:
        v = f(p)
        if isinstance(v, Frac) and not v.is_poly():
            rep.fail(reason="denominator", point=space.point_id(p), value=ring.fmt(v))
    for alpha in datum.positive_roots:
        sub = sgkm_check_small(f, alpha)
        if not sub.ok:
            atlas = atlas_subtorus(datum, alpha, space.points)
            for v in sub.violations:
                pt = tuple(int(c) for c in v["point"].split(","))
                v = dict(v, alpha=list(alpha), orbit=list(atlas[pt].base))
                rep.fail(**v)
        rep.checked += sub.checked
        rep.unchecked += sub.unchecked
    return rep


def center_check_Shat(f: GkmFunction) -> Report:
    """``f(lam) - f(s_gamma . lam)`` in ``gamma`` for every affine edge inside the window."""
    return gkm_check_big(f)


# -- endomorphism lattices ------------------------------------------

ALPHA = ("alpha",)


def _a(k: int | Fraction, deg: int) -> Poly:
    return Poly(1, {(deg,): k})


def _homogeneous(p: Poly) -> tuple[int, Fraction]:
    if p.is_zero():
        return -1, Fraction(0)
    if len(p.terms) != 1:
        raise ValueError("lattice vectors must be homogeneous in alpha")
    (m, c), = p.terms.items()
    return m[0], Fraction(c)


def _graded(vec: Sequence[Poly]) -> dict[int, tuple[Fraction, ...]]:
    """Split a tuple into its homogeneous components ``alpha**d * u``."""
    out: dict[int, list[Fraction]] = {}
    n = len(vec)
    for i, p in enumerate(vec):
        for (d,), c in p.terms.items():
            out.setdefault(d, [Fraction(0)] * n)[i] = Fraction(c)
    return {d: tuple(u) for d, u in out.items()}


class _Echelon:
    """Incremental row echelon basis over ``Q``."""

    def __init__(self) -> None:
        self.rows: dict[int, list[Fraction]] = {}

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        v = [Fraction(c) for c in v]
        for c, row in self.rows.items():
            if v[c]:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence[Fraction]) -> bool:
        v = self.reduce(v)
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        p = v[c]
        v = [x / p for x in v]
        for k, row in self.rows.items():
            if row[c]:
                f = row[c]
                self.rows[k] = [a - f * b for a, b in zip(row, v)]
        self.rows[c] = v
        return True

    def __len__(self) -> int:
        return len(self.rows)


def _rank(vectors: list[Sequence[Fraction]]) -> int:
    ech = _Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def _nullity(rows: list[list[Fraction]], n: int) -> int:
    return n - _rank(rows) if rows else n


@dataclass
class EndLattice:
    """``S_alpha``-lattice of value tuples along a Verma flag, entries in ``Q[alpha]``."""

    kind: str
    n: int
    m: int
    alpha: Vector
    indices: list[int]
    weights: list[Weight]
    basis: list[tuple[Poly, ...]]
    omega: Weight | None = None

    @property
    def size(self) -> int:
        return len(self.indices)

    def graded_generators(self) -> list[tuple[int, tuple[Fraction, ...]]]:
        out = []
        for b in self.basis:
            for d, u in _graded(b).items():
                out.append((d, u))
        return out

    def contains(self, vec: Sequence[Poly]) -> bool:
        return graded_contains(self.graded_generators(), vec)

    def rank(self) -> int:
        top = max((d for d, _ in self.graded_generators()), default=0)
        return _rank([u for d, u in self.graded_generators() if d <= top])

    def fmt(self) -> list[list[str]]:
        return [[p.to_str(ALPHA) for p in b] for b in self.basis]

    def to_json(self) -> dict:
        return {"kind": self.kind, "interval": [self.n, self.m], "alpha": list(self.alpha),
                "indices": self.indices, "weights": [list(w) for w in self.weights],
                "basis": self.fmt()}


def graded_contains(gens: list[tuple[int, tuple[Fraction, ...]]], vec: Sequence[Poly]) -> bool:
    """Membership in the ``S_alpha``-span of homogeneous generators ``alpha**d * u``."""
    for e, w in _graded(vec).items():
        ech = _Echelon()
        for d, u in gens:
            if d <= e:
                ech.add(u)
        if any(ech.reduce(w)):
            return False
    return True


def lattices_equal(a: list[tuple[int, tuple[Fraction, ...]]], b: list[tuple[int, tuple[Fraction, ...]]]) -> bool:
    """Equality of graded lattices: the degree-``e`` pieces agree for every ``e``."""
    ea, eb = _Echelon(), _Echelon()
    for e in sorted({d for d, _ in a} | {d for d, _ in b}):
        new_a = [u for d, u in a if d == e]
        new_b = [u for d, u in b if d == e]
        for u in new_a:
            ea.add(u)
        for u in new_b:
            eb.add(u)
        if len(ea) != len(eb) or any(any(ea.reduce(u)) for u in eb.rows.values()):
            return False
    return True


def end_lattice_singular(datum: RootDatum, n: int, m: int, alpha: Vector | None = None,
                         omega: Weight | None = None) -> EndLattice:
    """Basis ``x~_j(k) = prod_{i<j} (k - n - i) alpha`` for ``0 <= j <= m - n``."""
    alpha = datum.simple_root(0) if alpha is None else tuple(alpha)
    flag = sl2_verma_flag(datum, "singular", n, m, alpha, omega)
    idx = [k for k, _ in flag]
    basis = []
    for j in range(m - n + 1):
        row = []
        for k in idx:
            c = 1
            for i in range(j):
                c *= k - n - i
            row.append(_a(c, j))
        basis.append(tuple(row))
    return EndLattice("singular", n, m, alpha, idx, [w for _, w in flag], basis, omega)


def end_lattice_regular(datum: RootDatum, n: int, m: int, alpha: Vector | None = None,
                        omega: Weight | None = None) -> EndLattice:
    """Basis ``T'x~_j`` and ``psi T'x~_j`` on flag indices ``2n-1..2m``."""
    alpha = datum.simple_root(0) if alpha is None else tuple(alpha)
    flag = sl2_verma_flag(datum, "regular", n, m, alpha, omega)
    idx = [k for k, _ in flag]
    basis = []
    for j in range(m - n + 1):
        t_row, p_row = [], []
        for i in idx:
            k = (i + 1) // 2
            c = 1
            for r in range(j):
                c *= k - n - r
            t_row.append(_a(c, j))
            p_row.append(_a(c * (k if i % 2 == 0 else k - 1), j + 1))
        basis.append(tuple(t_row))
        basis.append(tuple(p_row))
    return EndLattice("regular", n, m, alpha, idx, [w for _, w in flag], basis, omega)


def sl2_tuple(lat: EndLattice, kind: str) -> tuple[Poly, ...]:
    """``phi`` on a singular flag, ``phi_prime`` / ``psi`` on a regular one (absolute indices)."""
    out = []
    for i in lat.indices:
        if kind == "phi":
            out.append(_a(i, 1))
        else:
            k = (i + 1) // 2
            if kind == "phi_prime":
                out.append(_a(k, 1))
            elif kind == "psi":
                out.append(_a(k if i % 2 == 0 else k - 1, 1))
            else:
                raise ValueError(kind)
    return tuple(out)


def _mul(a: Sequence[Poly], b: Sequence[Poly]) -> tuple[Poly, ...]:
    return tuple(x * y for x, y in zip(a, b))


def generated_algebra(lat: EndLattice, generators: list[tuple[Poly, ...]], max_degree: int
                      ) -> list[tuple[int, tuple[Fraction, ...]]]:
    """Graded generators of the ``S_alpha``-algebra spanned by monomials in ``generators``."""
    one = tuple(_a(1, 0) for _ in lat.indices)
    out = []
    level = [one]
    seen = {one}
    for _ in range(max_degree + 1):
        nxt = []
        for v in level:
            out.extend(_graded(v).items())
            for g in generators:
                w = _mul(v, g)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        level = nxt
    return [(d, u) for d, u in out]


def flag_space(datum: RootDatum, lat: EndLattice) -> WeightSpace:
    return WeightSpace(datum, lat.weights)


def _to_ring(datum: RootDatum, lat: EndLattice, vec: Sequence[Poly]) -> GkmFunction:
    space = flag_space(datum, lat)
    ring = space.ring
    form = ring.root_form(lat.alpha)
    vals = {}
    for w, p in zip(lat.weights, vec):
        v = ring.zero()
        for (d,), c in p.terms.items():
            v = v + form ** d * c
        vals[w] = v
    return GkmFunction(space, vals, True)


def lattice_passes_sgkm(datum: RootDatum, lat: EndLattice) -> Report:
    rep = Report()
    for b in lat.basis:
        f = _to_ring(datum, lat, b)
        rep.merge(sgkm_check_small(f, lat.alpha, d_max=lat.size + 1))
    return rep


def lattice_equals_sgkm(datum: RootDatum, lat: EndLattice) -> tuple[bool, dict]:
    """Exact equality of the lattice with the window restriction of the small-torus GKM space.

    The restriction is spanned over ``S_alpha`` by the specialised Schubert classes of
    the rank-one model.  ``info`` also records whether every basis tuple passes the
    conditions visible inside the window and the saturation defect of those
    conditions alone: the window-only lattice can be strictly larger when the
    window misses the mirror image under ``s_alpha``.
    """
    space = flag_space(datum, lat)
    pos = {w: i for i, w in enumerate(lat.weights)}
    conds, _ = sgkm_conditions(space, lat.alpha, d_max=lat.size + 1)
    inside = lattice_passes_sgkm(datum, lat)
    full = lat.rank() == lat.size and len(lat.basis) == lat.size
    grads = [_graded(b) for b in lat.basis]
    nb = len(lat.basis)
    rows: list[list[Fraction]] = []
    # candidates alpha^{-1} sum c_i b_i: the alpha^0 parts vanish
    for k in range(lat.size):
        rows.append([g.get(0, (Fraction(0),) * lat.size)[k] for g in grads])
    for c in conds:
        for j in range(c.power + 1):
            row = []
            for g in grads:
                u = g.get(j)
                row.append(sum((Fraction(coef) * u[pos[p]] for p, coef in c.coeffs.items()), Fraction(0))
                           if u is not None else Fraction(0))
            rows.append(row)
    equal = lattice_equals_restriction(datum, lat)
    info = {"inside": inside.ok, "full_rank": full, "restriction_equal": equal,
            "window_conditions_defect": _nullity(rows, nb),
            "conditions": len(conds), "points": len(space.points)}
    return inside.ok and full and equal, info


_RANK_ONE_SPACES: dict[tuple, CosetSpace] = {}


def _rank_one_space(G: AffineWeylGroup, J: tuple[int, ...], bound: int) -> CosetSpace:
    # classes on a larger window restrict to the classes on a smaller one
    key = (G.datum.dumps(), G.finite, tuple(J))
    space = _RANK_ONE_SPACES.get(key)
    if space is None or space.bound < bound:
        space = CosetSpace(G, J, max(bound, space.bound + 4 if space else 8))
        _RANK_ONE_SPACES[key] = space
    return space


def sgkm_restriction_lattice(datum: RootDatum, lat: EndLattice) -> list[tuple[int, tuple[Fraction, ...]]]:
    """Graded generators of the restriction of the small-torus GKM space of the orbit to the flag window.

    The space is spanned by the specialised Schubert classes of the rank-one
    model, transported to weights through the zeta atlas.
    """
    from .gkm import atlas_zeta

    if datum.rank != 1:
        raise ValueError("the rank-one model needs a rank-one datum")
    G = affine_group(datum)
    atlas = atlas_zeta(datum, lat.weights)
    omegas = {e.omega for e in atlas.values()}
    if len(omegas) != 1:
        raise ValueError("flag weights span several blocks")
    omega = omegas.pop()
    J = G.stabilizer_dot(omega).generators
    bound = max(G.length(e.coset) for e in atlas.values())
    space = _rank_one_space(G, J, bound)
    scale = Fraction(1, datum.d_of(lat.alpha))
    gens = []
    for x in space.points:
        if G.length(x) > bound:
            continue
        cls = schubert_class(space, x).body.specialize()
        vec = []
        for w in lat.weights:
            v = cls(atlas[w].coset)
            p = Poly(1, {(m[0],): c * scale ** m[0] for m, c in v.terms.items()})
            vec.append(p)
        gens.extend(_graded(vec).items())
    return gens


def lattice_equals_restriction(datum: RootDatum, lat: EndLattice) -> bool:
    return lattices_equal(lat.graded_generators(), sgkm_restriction_lattice(datum, lat))


def specialized_algebra(lat: EndLattice) -> dict:
    """Structure constants of ``lattice / alpha lattice`` in the given basis."""
    grads = [_homog_vec(b) for b in lat.basis]
    nb = len(lat.basis)
    table = {}
    for i in range(nb):
        for j in range(nb):
            prod_vec = _mul(lat.basis[i], lat.basis[j])
            d, u = _homog_vec(prod_vec)
            # coefficients of basis vectors of the same degree survive the reduction
            same = [k for k in range(nb) if grads[k][0] == d]
            lower = [k for k in range(nb) if grads[k][0] < d and grads[k][0] >= 0]
            coeffs = _solve_combination([grads[k][1] for k in same], [grads[k][1] for k in lower], u)
            if coeffs is None:
                raise ValueError("product leaves the lattice")
            table[(i, j)] = {same[k]: c for k, c in enumerate(coeffs) if c}
    dim = _rank([u for _, u in grads])
    return {"dimension": dim, "table": table}


def _homog_vec(vec: Sequence[Poly]) -> tuple[int, tuple[Fraction, ...]]:
    g = _graded(vec)
    if not g:
        return -1, tuple(Fraction(0) for _ in vec)
    if len(g) != 1:
        raise ValueError("vector is not homogeneous")
    (d, u), = g.items()
    return d, u


def _solve_combination(main: list[tuple[Fraction, ...]], aux: list[tuple[Fraction, ...]],
                       target: tuple[Fraction, ...]) -> list[Fraction] | None:
    """Coefficients on ``main`` of ``target`` in ``span(main + aux)``; ``None`` if outside."""
    vecs = main + aux
    n = len(vecs)
    if not any(target):
        return [Fraction(0)] * len(main)
    m = len(target)
    a = [[vecs[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    piv = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
    if any(a[i][n] != 0 for i in range(r, m)):
        return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv):
        sol[c] = a[i][n]
    return sol[:len(main)]


def restrict_lattice(lat: EndLattice, n2: int, m2: int) -> list[tuple[Poly, ...]]:
    """Images of the basis under truncation to a sub-interval."""
    if lat.kind == "singular":
        keep = [i for i, k in enumerate(lat.indices) if n2 <= k <= m2]
    else:
        keep = [i for i, k in enumerate(lat.indices) if 2 * n2 - 1 <= k <= 2 * m2]
    return [tuple(b[i] for i in keep) for b in lat.basis]


# -- translation matrices -------------------------------------------


@dataclass
class TranslationMatrix:
    omega: Weight
    z: AffineElement
    order: list[AffineElement]
    entries: list[list[Frac]]

    def fmt(self, ring: PolyRing) -> list[list[str]]:
        return [[ring.fmt(e) for e in row] for row in self.entries]


class HContext:
    """Schubert data and stabiliser for the matrices ``H_z`` of one block."""

    def __init__(self, datum: RootDatum, omega: Weight, z_bound: int, group: AffineWeylGroup | None = None):
        self.datum = datum
        self.G = group or affine_group(datum)
        self.omega = tuple(omega)
        self.stab: Stabilizer = self.G.stabilizer_dot(self.omega)
        self.order = sorted(self.stab.elements, key=self.G.sort_key)
        self.z_bound = z_bound
        wmax = max(self.G.length(x) for x in self.order)
        self.space = _shared_space(self.G, z_bound + wmax)
        self.ring = self.space.ring
        self.L_forms = [self.ring.linear_form(g) for g in self.stab.coroots]
        self._h: dict[AffineElement, TranslationMatrix] = {}
        self._hp: dict[AffineElement, list[list[Frac]]] = {}
        self._inv_hp: dict[AffineElement, tuple[list[list[Poly]], Fraction]] = {}
        self._quotient: CosetSpace | None = None
        self._zxi: dict[AffineElement, tuple[list[list[Frac | None]], list[Frac]]] = {}

    def quotient(self) -> CosetSpace:
        """The parahoric quotient window of the block."""
        if self._quotient is None:
            self._quotient = CosetSpace(self.G, self.stab.generators, self.z_bound)
        return self._quotient

    def xi(self, x: AffineElement, y: AffineElement) -> Poly:
        return schubert_class(self.space, x)(y)

    def L_inverse_at(self, g: AffineElement) -> Frac:
        """``g(L^{-1})`` with its factorisation."""
        exps: dict[Poly, int] = {}
        for gam in self.stab.coroots:
            f = self.ring.linear_form(self.G.linear_apply(g, gam))
            exps[f] = exps.get(f, 0) - 1
        return Frac.from_factors(self.ring.nvars, 1, exps)

    def L_at(self, g: AffineElement) -> Frac:
        return self.L_inverse_at(g).inverse()

    def h(self, z: AffineElement) -> TranslationMatrix:
        hit = self._h.get(z)
        if hit is None:
            rows = []
            for x in self.order:
                zx = self.G.mul(z, x)
                lin = self.L_inverse_at(zx)
                rows.append([lin * self.xi(xp, zx) for xp in self.order])
            hit = TranslationMatrix(self.omega, z, self.order, rows)
            self._h[z] = hit
        return hit

    def act(self, z: AffineElement, v: Frac) -> Frac:
        return self.ring.act(self.G, z, v)

    def diag_z_h1(self, z: AffineElement, i: int) -> Frac:
        """``z(H_1)(x, x)`` built from known linear factors."""
        x = self.order[i]
        zx = self.G.mul(z, x)
        exps: dict[Poly, int] = {}
        c = Fraction(1)
        for gam in self.stab.coroots:
            f = self.ring.linear_form(self.G.linear_apply(zx, gam))
            exps[f] = exps.get(f, 0) - 1
        for gam in self.G.inversion_coroots(x):
            f = self.ring.linear_form(self.G.linear_apply(z, gam))
            exps[f] = exps.get(f, 0) + 1
        return Frac.from_factors(self.ring.nvars, c, exps)

    def h_prime(self, z: AffineElement) -> list[list[Frac]]:
        """``z(H_1)^{-1} H_z`` by forward substitution (``z(H_1)`` is lower triangular)."""
        hit = self._hp.get(z)
        if hit is not None:
            return hit
        h1 = self.h(self.G.identity()).entries
        hz = self.h(z).entries
        n = len(self.order)
        zh1 = [[self.act(z, h1[i][k]) if k < i else None for k in range(n)] for i in range(n)]
        inv_diag = [self.diag_z_h1(z, i).inverse() for i in range(n)]
        out: list[list[Frac]] = [[None] * n for _ in range(n)]  # type: ignore[list-item]
        for c in range(n):
            for i in range(n):
                acc = as_frac(hz[i][c])
                for k in range(i):
                    if out[k][c]:
                        acc = acc - zh1[i][k] * out[k][c]
                out[i][c] = acc * inv_diag[i]
        self._hp[z] = out
        return out

    def z_xi_one(self, z: AffineElement) -> tuple[list[list[Frac | None]], list[Frac]]:
        """Strict lower part of ``z(Xi_1)`` and the inverses of its diagonal."""
        hit = self._zxi.get(z)
        if hit is None:
            n = len(self.order)
            # z(Xi_1) is lower triangular with diagonal z(xi^x(x))
            low = [[self.act(z, Frac(self.xi(self.order[k], self.order[i]))) if k < i else None
                    for k in range(n)] for i in range(n)]
            diag = []
            for i in range(n):
                exps: dict[Poly, int] = {}
                for gam in self.G.inversion_coroots(self.order[i]):
                    f = self.ring.linear_form(self.G.linear_apply(z, gam))
                    exps[f] = exps.get(f, 0) - 1
                diag.append(Frac.from_factors(self.ring.nvars, 1, exps))
            hit = (low, diag)
            self._zxi[z] = hit
        return hit

    def h_prime_inverse(self, z: AffineElement) -> tuple[list[list[Poly]], Fraction]:
        """``adj(H'_z)`` and ``1/det(H'_z)``; the determinant must be a nonzero constant."""
        hit = self._inv_hp.get(z)
        if hit is None:
            hp = [[e.num for e in row] for row in self.h_prime(z)]
            det = determinant(hp)
            if not det.is_constant() or det.is_zero():
                raise ValueError("H' is not invertible over the polynomial ring")
            hit = (_adjugate(hp), Fraction(1) / Fraction(det.constant_value()))
            self._inv_hp[z] = hit
        return hit


_SPACES: dict[tuple, CosetSpace] = {}


def _shared_space(G: AffineWeylGroup, bound: int) -> CosetSpace:
    key = (id(G), bound)
    sp = _SPACES.get(key)
    if sp is None:
        sp = CosetSpace(G, (), bound)
        _SPACES[key] = sp
    return sp


def h_matrix(datum: RootDatum, omega: Weight, z: AffineElement, z_bound: int | None = None) -> TranslationMatrix:
    G = affine_group(datum)
    ctx = context(datum, omega, max(z_bound or 0, G.length(z)))
    return ctx.h(z)


_CONTEXTS: dict[tuple, HContext] = {}


def context(datum: RootDatum, omega: Weight, z_bound: int) -> HContext:
    key = (datum, tuple(omega), z_bound)
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = HContext(datum, omega, z_bound)
        _CONTEXTS[key] = ctx
    return ctx


def determinant(m: list[list[Poly]]) -> Poly:
    """Laplace expansion along rows with memoised column subsets."""
    n = len(m)
    nv = m[0][0].nvars if n else 1
    memo: dict[tuple[int, frozenset], Poly] = {}

    def det(row: int, cols: frozenset) -> Poly:
        if row == n:
            return Poly.const(nv, 1)
        key = (row, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = Poly(nv)
        sign = 1
        for c in sorted(cols):
            e = m[row][c]
            if not e.is_zero():
                sub = det(row + 1, cols - {c})
                total = total + e * sub * sign
            sign = -sign
        memo[key] = total
        return total

    return det(0, frozenset(range(n)))


def _forms_of(x: Frac, allowed: set[Poly]) -> bool:
    fac = x.factor_numerator()
    if fac is None:
        return False
    return all(f in allowed for f in fac[1])


@dataclass
class IdentityReport:
    lines: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(l["status"] == "PASS" for l in self.lines)

    def add(self, identity: str, ok: bool, instance: str, witness: object = None) -> None:
        self.lines.append({"identity": identity, "instance": instance,
                           "status": "PASS" if ok else "FAIL", "witness": witness})


def h_identities(datum: RootDatum, omega: Weight, z: AffineElement, z_bound: int | None = None) -> IdentityReport:
    """Factorisation through ``z(H_1)``, triangularity of ``H_1``, congruence along edges at ``z``."""
    G = affine_group(datum)
    zb = max(z_bound or 0, G.length(z))
    ctx = context(datum, omega, zb)
    ring = ctx.ring
    n = len(ctx.order)
    inst = f"omega={list(omega)} z={G.word_str(z)}"
    rep = IdentityReport()

    # (i) H'_z polynomial with unit determinant
    hp = ctx.h_prime(z)
    bad = [(i, j) for i in range(n) for j in range(n) if not hp[i][j].is_poly()]
    ok = not bad
    unit = None
    if ok:
        det = determinant([[e.num for e in row] for row in hp])
        ok = det.is_constant() and not det.is_zero()
        unit = ring.fmt(det)
    if z == G.identity():
        ok = ok and all((hp[i][j] == (1 if i == j else 0)) for i in range(n) for j in range(n))
    rep.add("factorization", ok, inst,
            {"det": unit} if ok else {"entry": bad[:1] or None, "det": unit})

    # (ii) H_1 lower triangular, diagonal a product of stabiliser coroot forms
    h1 = ctx.h(G.identity()).entries
    allowed = set()
    for g in ctx.stab.coroots:
        allowed.add(normalize_form(ring.linear_form(g))[1])
    tri = all(h1[i][j] == 0 for i in range(n) for j in range(n) if j > i)
    diag_ok = all(h1[i][i] == ctx.diag_z_h1(G.identity(), i) and _forms_of(ctx.diag_z_h1(G.identity(), i), allowed)
                  for i in range(n))
    rep.add("triangular", tri and diag_ok, inst,
            None if tri and diag_ok else {"lower_triangular": tri, "diagonal": diag_ok})

    # (iii) H_{s_gamma z} - H_z divisible by gamma whenever s_gamma z . omega != z . omega
    fails = []
    checked = 0
    zo = G.dot(z, ctx.omega)
    for gam in G.positive_affine_coroots(zb + 1):
        s = G.reflection_of(gam)
        sz = G.mul(s, z)
        if G.length(sz) > zb or G.dot(sz, ctx.omega) == zo:
            continue
        form = ring.linear_form(gam)
        a, b = ctx.h(sz).entries, ctx.h(z).entries
        for i in range(n):
            for j in range(n):
                diff = as_frac(a[i][j]) - b[i][j]
                checked += 1
                if not (diff.in_localization(form) and divisible(diff, form)):
                    fails.append({"gamma": ring.fmt(form), "entry": [i, j], "difference": ring.fmt(diff)})
    rep.add("congruence", not fails, inst, {"checked": checked} if not fails else fails[:3])
    return rep


# -- pushforward and module action --------------------------------


def pushforward(datum: RootDatum, omega: Weight, psi_of: "callable", z_bound: int) -> GkmFunction:
    """``z -> sum_x (-1)^{l(x)} psi(zx) / z(L)`` on minimal coset representatives."""
    G = affine_group(datum)
    ctx = context(datum, omega, z_bound)
    qspace = CosetSpace(G, ctx.stab.generators, z_bound)
    vals = {}
    for z in qspace.points:
        tot = Frac(ctx.ring.zero())
        for x in ctx.order:
            v = psi_of(G.mul(z, x))
            tot = tot + (v if G.length(x) % 2 == 0 else -v)
        vals[z] = tot * ctx.L_inverse_at(z)
    return GkmFunction(qspace, vals)


def pushforward_check(datum: RootDatum, omega: Weight, psi_of: "callable", z_bound: int) -> Report:
    f = pushforward(datum, omega, psi_of, z_bound)
    rep = Report()
    ring = f.space.ring
    for z in f.space.points:
        v = f(z)
        if not v.is_poly():
            rep.fail(reason="denominator", point=f.space.point_id(z), value=ring.fmt(v))
    if rep.ok:
        g = GkmFunction(f.space, {z: f(z).num for z in f.space.points})
        rep.merge(gkm_check_big(g))
    return rep


def row_identity(datum: RootDatum, omega: Weight, z: AffineElement, z_bound: int | None = None) -> tuple[bool, list]:
    """``(1 ... 1) H_z`` against ``(pi_* xi^{x'})(z)``."""
    G = affine_group(datum)
    zb = max(z_bound or 0, G.length(z))
    ctx = context(datum, omega, zb)
    hz = ctx.h(z).entries
    n = len(ctx.order)
    out = []
    ok = True
    for j, xp in enumerate(ctx.order):
        lhs = Frac(ctx.ring.zero())
        for i in range(n):
            lhs = lhs + hz[i][j]
        rhs = Frac(ctx.ring.zero())
        for x in ctx.order:
            v = ctx.xi(xp, G.mul(z, x))
            rhs = rhs + (v if G.length(x) % 2 == 0 else -v)
        rhs = rhs * ctx.L_inverse_at(z)
        good = lhs == rhs
        ok = ok and good
        out.append({"column": G.word_str(xp), "lhs": ctx.ring.fmt(lhs), "rhs": ctx.ring.fmt(rhs), "ok": good})
    return ok, out


def _adjugate(m: list[list[Poly]]) -> list[list[Poly]]:
    n = len(m)
    if n == 1:
        return [[Poly.const(m[0][0].nvars, 1)]]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            out[j][i] = determinant(minor) * (-1) ** (i + j)
    return out  # type: ignore[return-value]


def module_coefficients(ctx: HContext, psi_of: "callable", z: AffineElement) -> list[list[Frac]]:
    """``c[x][x']`` with ``(psi xi^x)(z y) = sum_{x'} c[x][x'] xi^{x'}(z y)`` for ``y`` in the stabiliser."""
    G = ctx.G
    n = len(ctx.order)
    adj, dinv = ctx.h_prime_inverse(z)
    zx1, diag_inv = ctx.z_xi_one(z)
    out = []
    for x in ctx.order:
        vals = [as_frac(psi_of(G.mul(z, y)) * ctx.xi(x, G.mul(z, y))) for y in ctx.order]
        w: list[Frac] = []
        for i in range(n):
            acc = vals[i]
            for k in range(i):
                if w[k]:
                    acc = acc - zx1[i][k] * w[k]
            w.append(acc * diag_inv[i])
        c = []
        for i in range(n):
            acc = Frac(ctx.ring.zero())
            for k in range(n):
                if not adj[i][k].is_zero():
                    acc = acc + w[k] * adj[i][k]
            c.append(acc * dinv)
        out.append(c)
    return out


def module_action_identity(datum: RootDatum, omega: Weight, psi: GkmFunction, z_bound: int) -> IdentityReport:
    """``H_z (psi_{x',x}(z))_{x,x'} = diag(psi(zx)) H_z`` for every coset ``z`` in the window.

    Also checks that each ``psi_{x,x'}`` has polynomial values and lies in the GKM
    space of the quotient.
    """
    G = affine_group(datum)
    ctx = context(datum, omega, z_bound)
    ring = ctx.ring
    n = len(ctx.order)
    qspace = ctx.quotient()
    rep = IdentityReport()
    coeff_funcs = {(i, j): {} for i in range(n) for j in range(n)}
    for z in qspace.points:
        inst = f"omega={list(omega)} z={G.word_str(z)}"
        c = module_coefficients(ctx, psi, z)
        poly = all(c[i][j].is_poly() for i in range(n) for j in range(n))
        ok = True
        if poly:
            # row r of H_z is L^{-1}(z x_r) times Schubert values; cancel the unit
            cp = [[c[i][j].num for j in range(n)] for i in range(n)]
            for r in range(n):
                zx = G.mul(z, ctx.order[r])
                xis = [ctx.xi(xp, zx) for xp in ctx.order]
                pz = psi(zx)
                for col in range(n):
                    lhs = ring.zero()
                    for k in range(n):
                        if not xis[k].is_zero() and not cp[col][k].is_zero():
                            lhs = lhs + xis[k] * cp[col][k]
                    if lhs != pz * xis[col]:
                        ok = False
        else:
            hz = ctx.h(z).entries
            for r in range(n):
                pz = as_frac(psi(G.mul(z, ctx.order[r])))
                for col in range(n):
                    lhs = Frac(ring.zero())
                    for k in range(n):
                        lhs = lhs + hz[r][k] * c[col][k]
                    if lhs != pz * hz[r][col]:
                        ok = False
        for i in range(n):
            for j in range(n):
                coeff_funcs[(i, j)][z] = c[i][j].num if c[i][j].is_poly() else c[i][j]
        rep.add("module_action", ok and poly, inst, None if ok and poly else {"polynomial": poly, "matrix": ok})
    gkm_ok = True
    for (i, j), vals in coeff_funcs.items():
        if any(isinstance(v, Frac) for v in vals.values()):
            gkm_ok = False
            continue
        if not gkm_check_big(GkmFunction(qspace, vals)).ok:
            gkm_ok = False
    rep.add("coefficients_in_quotient_gkm", gkm_ok, f"omega={list(omega)}")
    return rep
