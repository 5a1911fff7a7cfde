"""GKM function spaces, Schubert classes and fixed-point atlases.

Two kinds of point sets carry functions:

* :class:`CosetSpace` -- minimal coset representatives of ``W_{l,af}/W_J`` up to
  a length bound, with the group acting on the left;
* :class:`WeightSpace` -- a finite set of weights with the dot action.

Edges join ``p`` and ``s_gamma p`` for positive affine coroots ``gamma``.
Functions take values in :class:`~alcovekit.symring.Poly` or
:class:`~alcovekit.symring.Frac`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Hashable, Iterable, Sequence, Union

from .affine_weyl import AffineCoroot, AffineElement, AffineWeylGroup, Window, affine_group
from .root_data import RootDatum, Vector, Weight
from .symring import Frac, Poly, PolyRing, normalize_form, specialize_delta_zero

Value = Union[Poly, Frac]
Point = Hashable


class GkmError(ValueError):
    """Raised when a construction contradicts the characterisation it solves."""


@dataclass
class Report:
    """Outcome of a check: violations carry a witness, unchecked counts truncation."""

    ok: bool = True
    violations: list[dict] = field(default_factory=list)
    unchecked: int = 0
    checked: int = 0

    def fail(self, **witness) -> None:
        self.ok = False
        self.violations.append(witness)

    def merge(self, other: "Report") -> None:
        self.ok = self.ok and other.ok
        self.violations.extend(other.violations)
        self.unchecked += other.unchecked
        self.checked += other.checked

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "unchecked": self.unchecked,
                "violations": self.violations}


def _is_zero(v: Value) -> bool:
    return v.is_zero() if isinstance(v, Poly) else not v


def divisible(v: Value, form: Poly, power: int = 1) -> bool:
    """``v`` in ``form**power`` times the ring (localised away from other denominators)."""
    if power <= 0:
        return not isinstance(v, Frac) or v.in_localization(form)
    if _is_zero(v):
        return True
    _, g = normalize_form(form)
    if isinstance(v, Poly):
        return v.valuation(g) >= power
    return v.valuation(g) >= power


# -- point spaces ------------------------------------------------------


class PointSpace:
    group: AffineWeylGroup
    ring: PolyRing
    points: list

    def act(self, g: AffineElement, p: Point) -> Point | None:
        raise NotImplementedError

    def point_id(self, p: Point) -> str:
        raise NotImplementedError

    def edges(self) -> tuple[list[tuple[Point, Point, AffineCoroot]], int]:
        raise NotImplementedError

    def reach(self) -> int:
        raise NotImplementedError

    def contains(self, p: Point) -> bool:
        return p in self.index

    def _init_points(self, points: Sequence[Point]) -> None:
        self.points = list(points)
        self.index = {p: i for i, p in enumerate(self.points)}


class CosetSpace(PointSpace):
    """``W_{l,af}/W_J`` (or ``W/W_J`` in finite mode) truncated at a length bound."""

    def __init__(self, group: AffineWeylGroup, J: Iterable[int] = (), bound: int = 2):
        self.group = group
        self.datum = group.datum
        self.ring = PolyRing(group.datum)
        self.J = tuple(sorted(set(J)))
        self.bound = bound
        self._init_points(group.coset_min_reps(self.J, bound))
        self.parabolic = group.parabolic(self.J) if self.J else [group.identity()]
        self._edges = None
        self._schubert: dict[AffineElement, "SchubertClass"] = {}
        self._restricted: dict[tuple, tuple[list[Poly], list[Poly]]] = {}

    def key(self) -> tuple:
        return (self.group.finite, self.J, self.bound)

    def length(self, p: AffineElement) -> int:
        return self.group.length(p)

    def act(self, g: AffineElement, p: AffineElement) -> AffineElement | None:
        q = self.group.min_rep(self.group.mul(g, p), self.J)
        return q if q in self.index else None

    def point_id(self, p: AffineElement) -> str:
        return self.group.word_str(p)

    def parse_point(self, text: str) -> AffineElement:
        x = self.group.min_rep(self.group.parse_element(text), self.J)
        if x not in self.index:
            raise ValueError(f"{text} is outside the window")
        return x

    def reach(self) -> int:
        wj = max(self.group.length(u) for u in self.parabolic)
        return self.bound + wj + 1

    def coroots(self) -> list[AffineCoroot]:
        return self.group.positive_affine_coroots(self.reach())

    def edges(self) -> tuple[list[tuple[AffineElement, AffineElement, AffineCoroot]], int]:
        if self._edges is None:
            G = self.group
            refl = [(g, G.reflection_of(g)) for g in self.coroots()]
            out = []
            unchecked = 0
            for p in self.points:
                i = self.index[p]
                for gam, s in refl:
                    q = self.act(s, p)
                    if q is None:
                        unchecked += 1
                    elif q != p and self.index[q] > i:
                        out.append((p, q, gam))
            self._edges = (out, unchecked)
        return self._edges

    def lower_edges(self, y: AffineElement) -> list[tuple[AffineElement, AffineCoroot]]:
        ly = self.length(y)
        out = []
        for p, q, g in self.edges()[0]:
            if q == y and self.length(p) < ly:
                out.append((p, g))
            elif p == y and self.length(q) < ly:
                out.append((q, g))
        return out

    def bruhat_leq(self, x: AffineElement, y: AffineElement) -> bool:
        return self.group.bruhat_leq(x, y)

    def schubert_diagonal(self, x: AffineElement) -> Poly:
        out = self.ring.one()
        for g in self.group.inversion_coroots(x):
            out = out * self.ring.linear_form(g)
        return out


class WeightSpace(PointSpace):
    """A finite set of weights with the dot action of ``W_{l,af}``."""

    def __init__(self, datum: RootDatum, weights: Iterable[Weight]):
        self.datum = datum
        self.group = affine_group(datum)
        self.ring = PolyRing(datum)
        pts = sorted(set(tuple(w) for w in weights), key=lambda w: (-sum(datum.weight_to_root(w)), w))
        self._init_points(pts)
        self._edges = None

    @classmethod
    def from_window(cls, datum: RootDatum, window: Window) -> "WeightSpace":
        return cls(datum, window.weights(datum))

    def act(self, g: AffineElement, p: Weight) -> Weight | None:
        q = self.group.dot(g, p)
        return q if q in self.index else None

    def point_id(self, p: Weight) -> str:
        return ",".join(map(str, p))

    def reach(self) -> int:
        d = self.datum
        hs = [sum(d.weight_to_root(w)) for w in self.points]
        span = int(max(hs) - min(hs))
        top = max(abs(d.pairing(tuple(c + 1 for c in w), cb)) for w in self.points for cb in d.positive_coroots)
        return (top + 4 * span) // d.l + 2

    def edges(self) -> tuple[list[tuple[Weight, Weight, AffineCoroot]], int]:
        if self._edges is None:
            d = self.datum
            l = d.l
            hs = [sum(d.weight_to_root(w)) for w in self.points]
            span = int(max(hs) - min(hs)) if hs else 0
            out = []
            unchecked = 0
            for lam in self.points:
                i = self.index[lam]
                v = tuple(c + 1 for c in lam)
                for beta, cb in zip(d.positive_roots, d.positive_coroots):
                    p = d.pairing(v, cb)
                    bw = d.root_to_weight(beta)
                    cmax = span // d.height(beta) + 1
                    for c in range(-cmax, cmax + 1):
                        if c == 0 or (p - c) % l:
                            continue
                        mu = tuple(x - c * b for x, b in zip(lam, bw))
                        if mu not in self.index:
                            unchecked += 1
                            continue
                        if self.index[mu] > i:
                            gam = AffineCoroot(cb, -((p - c) // l)).positive()
                            out.append((lam, mu, gam))
            self._edges = (out, unchecked)
        return self._edges


# -- functions -------------------------------------------------------


@dataclass
class GkmFunction:
    """Values on the points of a space; ``small`` marks delta-free (small torus) functions."""

    space: PointSpace
    values: dict
    small: bool = False

    def __call__(self, p: Point) -> Value:
        return self.values.get(p, self.space.ring.zero())

    def _combine(self, other: "GkmFunction", op: Callable[[Value, Value], Value]) -> "GkmFunction":
        if other.space is not self.space:
            raise ValueError("functions live on different spaces")
        return GkmFunction(self.space, {p: op(self(p), other(p)) for p in self.space.points},
                           self.small and other.small)

    def __add__(self, other: "GkmFunction") -> "GkmFunction":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "GkmFunction") -> "GkmFunction":
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other: "GkmFunction | Poly | int | Fraction") -> "GkmFunction":
        if isinstance(other, GkmFunction):
            return self._combine(other, lambda a, b: a * b)
        return GkmFunction(self.space, {p: self(p) * other for p in self.space.points}, self.small)

    __rmul__ = __mul__

    def __neg__(self) -> "GkmFunction":
        return self * -1

    def equals(self, other: "GkmFunction") -> bool:
        return all(_is_zero(self(p) - other(p)) for p in self.space.points)

    def specialize(self) -> "GkmFunction":
        return GkmFunction(self.space, {p: specialize_delta_zero(v) for p, v in self.values.items()}, True)

    def max_degree(self) -> int:
        deg = 0
        for v in self.values.values():
            num = v if isinstance(v, Poly) else v.num
            deg = max(deg, num.degree())
        return deg

    def to_json(self) -> dict:
        ring = self.space.ring
        meta = {"small": self.small}
        if isinstance(self.space, CosetSpace):
            meta.update({"J": list(self.space.J), "bound": self.space.bound})
        return {
            "window": meta,
            "values": {self.space.point_id(p): ring.fmt(self(p)) for p in self.space.points},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def constant_function(space: PointSpace, c: Value | int) -> GkmFunction:
    v = c if isinstance(c, (Poly, Frac)) else space.ring.const(c)
    return GkmFunction(space, {p: v for p in space.points})


def indicator(space: PointSpace, p: Point, value: Value | int = 1) -> GkmFunction:
    v = value if isinstance(value, (Poly, Frac)) else space.ring.const(value)
    return GkmFunction(space, {p: v})


# -- checks ---------------------------------------------------------


def gkm_check_big(f: GkmFunction) -> Report:
    """``f(p) - f(s_gamma p)`` divisible by ``gamma`` along every edge inside the window."""
    space = f.space
    ring = space.ring
    edges, unchecked = space.edges()
    rep = Report(unchecked=unchecked)
    for p, q, g in edges:
        rep.checked += 1
        form = ring.linear_form(g)
        diff = f(p) - f(q)
        if not divisible(diff, form):
            rep.fail(p=space.point_id(p), q=space.point_id(q), gamma=ring.fmt(form),
                     difference=ring.fmt(diff))
    return rep


@dataclass(frozen=True)
class Condition:
    """``sum coeffs[p] f(p)`` must lie in ``alpha**power R``."""

    family: int
    point: Point
    d: int
    coeffs: dict
    power: int


def sgkm_conditions(space: PointSpace, alpha: Vector, d_max: int) -> tuple[list[Condition], int]:
    """The three families of small-torus conditions attached to the root ``alpha``.

    (i)   ``f(s_{alpha,kl} x) - f(x)`` in ``alpha R``;
    (ii)  ``sum_k (-1)^k C(d,k) f(tau^k x)`` in ``alpha^d R``;
    (iii) ``sum_k (-1)^k C(d-1,k) (f(tau^k x) - f(tau^k s_alpha x))`` in ``alpha^d R``, ``d >= 1``;

    with ``tau = tau_{l alpha}`` acting on the left.  Conditions with a term
    outside the window are skipped and counted.
    """
    G = space.group
    alpha = tuple(alpha)
    l = G.l
    s_a = G.reflection(alpha, 0)
    fin = G.finite
    tau = None if fin else G.mul(G.reflection(alpha, l), s_a)
    reach = space.reach()
    refl = [s_a] if fin else [G.reflection(alpha, k * l) for k in range(-reach, reach + 1)]
    out: list[Condition] = []
    skipped = 0

    def add(family: int, x: Point, d: int, coeffs: dict, power: int) -> None:
        coeffs = {p: c for p, c in coeffs.items() if c}
        if coeffs:
            out.append(Condition(family, x, d, coeffs, power))

    for x in space.points:
        for s in refl:
            y = space.act(s, x)
            if y is None:
                skipped += 1
            elif y != x:
                add(1, x, 1, {y: 1, x: -1}, 1)
        if fin:
            continue
        orbit = [x]
        for _ in range(d_max):
            nxt = space.act(tau, orbit[-1])
            if nxt is None:
                break
            orbit.append(nxt)
        sx = space.act(s_a, x)
        sorbit = [sx] if sx is not None else []
        for _ in range(d_max - 1):
            if not sorbit:
                break
            nxt = space.act(tau, sorbit[-1])
            if nxt is None:
                break
            sorbit.append(nxt)
        for d in range(1, d_max + 1):
            if d < len(orbit):
                co: dict = {}
                for k in range(d + 1):
                    co[orbit[k]] = co.get(orbit[k], 0) + (-1) ** k * comb(d, k)
                add(2, x, d, co, d)
            else:
                skipped += 1
            if d - 1 < len(orbit) and d - 1 < len(sorbit):
                co = {}
                for k in range(d):
                    sg = (-1) ** k * comb(d - 1, k)
                    co[orbit[k]] = co.get(orbit[k], 0) + sg
                    co[sorbit[k]] = co.get(sorbit[k], 0) - sg
                add(3, x, d, co, d)
            else:
                skipped += 1
    return out, skipped


def sgkm_check_small(f: GkmFunction, alpha: Vector, d_max: int | None = None) -> Report:
    """Evaluate :func:`sgkm_conditions` on ``f``; the ``d = 0`` case is vacuous."""
    space = f.space
    ring = space.ring
    form = ring.root_form(tuple(alpha))
    if d_max is None:
        d_max = f.max_degree() + 1
    conds, skipped = sgkm_conditions(space, alpha, d_max)
    rep = Report(unchecked=skipped)
    for c in conds:
        rep.checked += 1
        tot = ring.zero()
        for p, k in c.coeffs.items():
            tot = tot + f(p) * k
        if not divisible(tot, form, c.power):
            rep.fail(family=c.family, point=space.point_id(c.point), d=c.d,
                     alpha=ring.fmt(form), value=ring.fmt(tot))
    return rep


def sgkm_check_all(f: GkmFunction, d_max: int | None = None) -> Report:
    rep = Report()
    for alpha in f.space.datum.positive_roots:
        rep.merge(sgkm_check_small(f, alpha, d_max))
    return rep


def sgkm_check_whole(f: GkmFunction, alpha: Vector, d_max: int | None = None) -> Report:
    """Small-torus GKM over ``S_alpha`` on the whole space.

    Edge conditions for coroots not proportional to ``alpha`` are vacuous over
    ``S_alpha`` (their forms are units), so only ``alpha``-edges contribute, plus
    the difference conditions (ii) and (iii).
    """
    space = f.space
    ring = space.ring
    form_a = ring.root_form(alpha)
    _, ga = normalize_form(form_a)
    rep = Report()
    edges, unchecked = space.edges()
    rep.unchecked += unchecked
    for p, q, g in edges:
        form = specialize_delta_zero(ring.linear_form(g))
        _, gn = normalize_form(form)
        if gn != ga:
            continue
        rep.checked += 1
        if not divisible(f(p) - f(q), form_a):
            rep.fail(family=1, point=space.point_id(p), other=space.point_id(q))
    sub = sgkm_check_small(f, alpha, d_max)
    for v in sub.violations:
        if v["family"] != 1:
            rep.fail(**v)
    rep.checked += sub.checked
    return rep


def sgkm_orbits(space: PointSpace, alpha: Vector) -> list[list[Point]]:
    """Partition of the window into ``W_l(alpha)``-orbits (connected through the window)."""
    G = space.group
    l = G.l
    alpha = tuple(alpha)
    gens = [G.reflection(alpha, 0)]
    if not G.finite:
        tau = G.mul(G.reflection(alpha, l), gens[0])
        gens += [tau, G.inv(tau)]
    seen: dict = {}
    orbits = []
    for p in space.points:
        if p in seen:
            continue
        orb = [p]
        seen[p] = len(orbits)
        stack = [p]
        while stack:
            a = stack.pop()
            for g in gens:
                b = space.act(g, a)
                if b is not None and b not in seen:
                    seen[b] = len(orbits)
                    orb.append(b)
                    stack.append(b)
        orbits.append(orb)
    return orbits


# -- Schubert classes --------------------------------------------------


@dataclass
class SchubertClass:
    J: tuple[int, ...]
    x: AffineElement
    body: GkmFunction

    def __call__(self, y: AffineElement) -> Poly:
        return self.body(y)


def _monomials(nvars: int, degree: int, allowed: Sequence[int]) -> list[tuple[int, ...]]:
    out = []

    def go(i: int, left: int, acc: list[int]) -> None:
        if i == len(allowed) - 1:
            acc.append(left)
            m = [0] * nvars
            for v, e in zip(allowed, acc):
                m[v] = e
            out.append(tuple(m))
            acc.pop()
            return
        for e in range(left, -1, -1):
            acc.append(e)
            go(i + 1, left - e, acc)
            acc.pop()

    if degree == 0:
        return [(0,) * nvars]
    go(0, degree, [])
    return out


def _solve(rows: list[list[Fraction]], rhs: list[Fraction], n: int) -> list[Fraction] | None:
    """Unique solution of a rational linear system, ``None`` if inconsistent.

    Raises when the system is underdetermined.
    """
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(a)):
        if a[i][n] != 0:
            return None
    if r < n:
        raise GkmError("Schubert system is underdetermined on this window")
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = a[i][n]
    return sol


def _restrict_to_hyperplane(form: Poly) -> tuple[int, list[Poly]]:
    """Variable images realising the quotient by a linear form."""
    coeffs = form.linear_coeffs()
    n = form.nvars
    piv = max(i for i, c in enumerate(coeffs) if c)
    cp = Fraction(coeffs[piv])
    images = []
    for i in range(n):
        if i == piv:
            images.append(Poly.linear([Fraction(-coeffs[j]) / cp if j != piv else 0 for j in range(n)]))
        else:
            images.append(Poly.var(n, i))
    return piv, images


def schubert_class(space: CosetSpace, x: AffineElement) -> SchubertClass:
    """Solve the characterisation: support above ``x``, homogeneous of degree ``l(x)``,
    prescribed diagonal, and the edge congruences towards shorter points."""
    if x not in space.index:
        raise ValueError("x is not a minimal representative inside the window")
    cached = space._schubert.get(x)
    if cached is not None:
        return cached
    ring = space.ring
    n = ring.nvars
    deg = space.length(x)
    allowed = list(range(ring.rank)) if space.group.finite else list(range(n))
    monos = _monomials(n, deg, allowed)
    values: dict[AffineElement, Poly] = {}
    for y in space.points:
        if space.length(y) < deg or not space.bruhat_leq(x, y):
            continue
        if y == x:
            values[y] = space.schubert_diagonal(x)
            continue
        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        for z, g in space.lower_edges(y):
            target = values.get(z, ring.zero())
            form = ring.linear_form(g)
            key = (form, deg)
            hit = space._restricted.get(key)
            if hit is None:
                _, images = _restrict_to_hyperplane(form)
                hit = (images, [Poly(n, {m: 1}).substitute(images) for m in monos])
                space._restricted[key] = hit
            images, subs = hit
            tgt = target.substitute(images)
            keys = set(tgt.terms)
            for s in subs:
                keys.update(s.terms)
            for k in sorted(keys):
                rows.append([Fraction(s.terms.get(k, 0)) for s in subs])
                rhs.append(Fraction(tgt.terms.get(k, 0)))
        try:
            sol = _solve(rows, rhs, len(monos))
        except GkmError as exc:
            raise GkmError(f"{exc} at {space.point_id(y)} for x = {space.point_id(x)}") from None
        if sol is None:
            raise GkmError(f"Schubert system inconsistent at {space.point_id(y)} for x = {space.point_id(x)}")
        p = Poly(n, {m: c for m, c in zip(monos, sol)})
        if not p.is_zero():
            values[y] = p
    cls = SchubertClass(space.J, x, GkmFunction(space, values))
    space._schubert[x] = cls
    return cls


def schubert_basis(space: CosetSpace, max_length: int | None = None) -> list[SchubertClass]:
    bound = space.bound if max_length is None else max_length
    return [schubert_class(space, x) for x in space.points if space.length(x) <= bound]


class NotInSpan(ValueError):
    def __init__(self, point: str, value: str):
        super().__init__(f"not in the span: division fails at {point} (value {value})")
        self.point = point
        self.value = value


def expand_in_schubert(f: GkmFunction, small: bool = False) -> dict[AffineElement, Poly]:
    """Greedy descent: peel off a shortest support point ``y`` using ``f(y) / xi^y(y)``.

    With ``small`` the classes are specialised at ``delta = 0`` first.
    """
    space = f.space
    if not isinstance(space, CosetSpace):
        raise TypeError("expansion needs a coset space")
    ring = space.ring
    rem = {p: f(p) for p in space.points}
    out: dict[AffineElement, Poly] = {}
    for y in space.points:  # points are sorted by length
        v = rem[y]
        if isinstance(v, Frac):
            if not v.is_poly():
                raise NotInSpan(space.point_id(y), ring.fmt(v))
            v = v.num
        if v.is_zero():
            continue
        cls = schubert_class(space, y).body
        if small:
            cls = cls.specialize()
        diag = cls(y)
        c = v.divexact(diag)
        if c is None:
            raise NotInSpan(space.point_id(y), ring.fmt(v))
        out[y] = c
        for p in space.points:
            cv = cls(p)
            if not cv.is_zero():
                rem[p] = rem[p] - c * cv
    return out


def evaluate_expansion(space: CosetSpace, coeffs: dict[AffineElement, Poly], small: bool = False) -> GkmFunction:
    ring = space.ring
    vals = {p: ring.zero() for p in space.points}
    for x, c in coeffs.items():
        cls = schubert_class(space, x).body
        if small:
            cls = cls.specialize()
        for p in space.points:
            vals[p] = vals[p] + c * cls(p)
    return GkmFunction(space, vals, small)


def to_dot(space: PointSpace, f: GkmFunction | None = None) -> str:
    """GKM graph in DOT: nodes are points, edges are labelled by coroot forms."""
    ring = space.ring
    lines = ["graph gkm {"]
    for p in space.points:
        label = space.point_id(p)
        if f is not None:
            label += "\\n" + ring.fmt(f(p))
        lines.append(f'  "{space.point_id(p)}" [label="{label}"];')
    for p, q, g in space.edges()[0]:
        lines.append(f'  "{space.point_id(p)}" -- "{space.point_id(q)}" [label="{ring.fmt(ring.linear_form(g))}"];')
    lines.append("}")
    return "\n".join(lines)


# -- the rank-one classes ----------------------------------------------


def sl2_position(group: AffineWeylGroup, x: AffineElement, alpha: Vector | None = None) -> tuple[int, int]:
    """``(n, e)`` with ``x = tau_{n l alpha} s_alpha^e`` in the rank-one group."""
    d = group.datum
    alpha = d.simple_root(0) if alpha is None else tuple(alpha)
    aw = d.root_to_weight(alpha)
    k = next(i for i, a in enumerate(aw) if a)
    e = 0 if x.w == group.identity().w else 1
    n = x.mu[k] // (group.l * aw[k])
    if e:
        n = -n
    return n, e


def sl2_class(space: CosetSpace, kind: str) -> GkmFunction:
    """The value tables of ``psi``, ``phi_prime`` (on ``W_{l,af}``) and ``phi`` (on the Grassmannian)."""
    G = space.group
    d = space.datum
    if d.rank != 1 or G.finite:
        raise ValueError("rank-one l-affine group required")
    a = space.ring.root_form(d.simple_root(0))
    vals = {}
    for x in space.points:
        n, e = sl2_position(G, x)
        if kind == "psi":
            if space.J:
                raise ValueError("psi lives on the full flag space")
            vals[x] = a * (n - e)
        elif kind == "phi_prime":
            if space.J:
                raise ValueError("phi_prime lives on the full flag space")
            vals[x] = a * n
        elif kind == "phi":
            if space.J != (1,):
                raise ValueError("phi lives on the Grassmannian J = {1}")
            vals[x] = a * n
        else:
            raise ValueError(f"unknown class {kind!r}")
    return GkmFunction(space, vals, True)


# -- atlases -----------------------------------------------------------


@dataclass(frozen=True)
class ZetaEntry:
    omega: Weight
    coset: AffineElement


def atlas_zeta(datum: RootDatum, weights: Iterable[Weight]) -> dict[Weight, ZetaEntry]:
    """``lam = x . omega`` with ``omega`` in the closed alcove and ``x`` minimal in ``x W_{l,omega}``."""
    G = affine_group(datum)
    out = {}
    for lam in weights:
        omega, x = G.fold(tuple(lam))
        J = G.stabilizer_dot(omega).generators
        out[tuple(lam)] = ZetaEntry(omega, G.min_rep(x, J))
    return out


@dataclass(frozen=True)
class SubtorusEntry:
    base: Weight
    kind: str  # "Gr" or "Fl"
    position: tuple[int, ...]


def atlas_subtorus(datum: RootDatum, alpha: Vector, weights: Iterable[Weight]) -> dict[Weight, SubtorusEntry]:
    """Orbits of ``W_l(alpha)`` under the dot action and the rank-one model positions.

    ``base`` is the orbit point with ``<base+rho, alpha^vee>`` in ``[0, l]``.  On a
    Gr-like orbit ``base + n l alpha`` sits at ``(n,)``; on an Fl-like orbit
    ``base + n l alpha`` and ``s_alpha . base + n l alpha`` sit at ``(n, 0)`` and ``(n, 1)``.
    """
    G = affine_group(datum)
    alpha = tuple(alpha)
    cb = datum.coroot_of(alpha)
    aw = datum.root_to_weight(alpha)
    l = datum.l
    out = {}
    for lam in weights:
        lam = tuple(lam)
        p = datum.pairing(tuple(c + 1 for c in lam), cb)
        r = p % (2 * l)
        if r <= l:
            t = (p - r) // 2
            base = tuple(x - t * a for x, a in zip(lam, aw))
            flipped = False
        else:
            s = G.dot(G.reflection(alpha, 0), lam)
            t = (-p - (2 * l - r)) // 2
            base = tuple(x - t * a for x, a in zip(s, aw))
            flipped = True
        bp = datum.pairing(tuple(c + 1 for c in base), cb)
        if bp % l == 0:
            n = (p - bp) // (2 * l)
            out[lam] = SubtorusEntry(base, "Gr", (n,))
        elif not flipped:
            out[lam] = SubtorusEntry(base, "Fl", ((p - bp) // (2 * l), 0))
        else:
            out[lam] = SubtorusEntry(base, "Fl", ((p + bp) // (2 * l), 1))
    return out
