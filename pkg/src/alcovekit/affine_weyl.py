"""The l-dilated affine Weyl group ``W x lQ`` and its extension ``W x lL``.

An element ``(w, mu)`` acts on weights by ``v -> w(v + mu)``, so that

    (w1, mu1)(w2, mu2) = (w1 w2, w2^{-1} mu1 + mu2).

``mu`` is stored already scaled by ``l``.  The dot action is the same action
conjugated by the shift ``rho``.  Affine coroots ``beta^vee + n l delta`` are
affine functions ``v -> <v, beta^vee> + n l`` and the group acts on them by
``(x f)(v) = f(x^{-1} v)``.

Generators are labelled by integers: ``1..r`` are the finite simple
reflections, ``0`` is the affine reflection of the first simple component and
``r + c`` the one of component ``c >= 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .root_data import Matrix, RootDatum, Vector, Weight, identity_matrix, mat_mul, mat_vec


@dataclass(frozen=True)
class AffineElement:
    """``(w, mu)``: ``w`` a weight-coordinate matrix, ``mu`` the scaled translation."""

    w: Matrix
    mu: Weight

    def __repr__(self) -> str:
        return f"AffineElement(w={self.w}, mu={self.mu})"


@dataclass(frozen=True, order=True)
class AffineCoroot:
    """``coroot + level * l * delta``."""

    coroot: Vector
    level: int

    def is_positive(self) -> bool:
        if self.level:
            return self.level > 0
        return all(c >= 0 for c in self.coroot) and any(self.coroot)

    def __neg__(self) -> "AffineCoroot":
        return AffineCoroot(tuple(-c for c in self.coroot), -self.level)

    def positive(self) -> "AffineCoroot":
        return self if self.is_positive() else -self

    def to_str(self) -> str:
        return f"{list(self.coroot)}{'+' if self.level >= 0 else '-'}{abs(self.level)}l*delta"


@dataclass(frozen=True)
class Window:
    """Weights ``mu <= top`` with ``height(top - mu) <= depth``."""

    top: Weight
    depth: int

    def contains(self, datum: RootDatum, mu: Weight) -> bool:
        d = datum.root_difference(self.top, mu)
        return d is not None and all(c >= 0 for c in d) and sum(d) <= self.depth

    def weights(self, datum: RootDatum) -> list[Weight]:
        """All weights in the window, sorted by depth then coordinates."""
        out = []
        for eta in root_lattice_cone(datum.rank, self.depth):
            ew = datum.root_to_weight(eta)
            out.append((sum(eta), tuple(t - e for t, e in zip(self.top, ew))))
        out.sort(key=lambda p: (p[0], tuple(-c for c in p[1])))
        return [mu for _, mu in out]

    def to_json(self) -> dict:
        return {"top": list(self.top), "depth": self.depth}


def root_lattice_cone(rank: int, depth: int) -> Iterator[tuple[int, ...]]:
    """Non-negative integer vectors of total at most ``depth``."""
    for eta in product(range(depth + 1), repeat=rank):
        if sum(eta) <= depth:
            yield eta


def _mat_inverse(m: Matrix) -> Matrix:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    out = []
    for row in a:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(v) for v in vals))
    return tuple(out)


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


@dataclass(frozen=True)
class Stabilizer:
    """The dot-stabiliser ``W_{l,omega}`` of a point of the closed alcove."""

    omega: Weight
    generators: tuple[int, ...]
    elements: tuple[AffineElement, ...]
    coroots: tuple[AffineCoroot, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


class AffineWeylGroup:
    """``W_{l,af}`` for a datum; ``finite=True`` restricts to ``W`` itself."""

    def __init__(self, datum: RootDatum, finite: bool = False):
        self.datum = datum
        self.l = datum.l
        self.rank = datum.rank
        self.finite = finite
        self._coroot_mats: dict[Matrix, Matrix] = {}
        self._inverse_mats: dict[Matrix, Matrix] = {}
        self._len_cache: dict[AffineElement, int] = {}
        self._bruhat_cache: dict[tuple[AffineElement, AffineElement], bool] = {}
        self._elements_cache: dict[int, list[AffineElement]] = {}
        r = self.rank
        gens: dict[int, AffineElement] = {}
        for i in range(r):
            gens[i + 1] = AffineElement(datum.simple_reflection_matrix(i), datum.zero())
        if not finite:
            for c, comp in enumerate(datum.components):
                theta = datum.root_of_coroot(comp.highest_coroot)
                label = 0 if c == 0 else r + c
                gens[label] = self.reflection(theta, self.l)
        self.gens = gens
        self.labels = tuple(sorted(gens))

    # -- construction ------------------------------------------------

    def identity(self) -> AffineElement:
        return AffineElement(identity_matrix(self.rank), self.datum.zero())

    def simple(self, label: int) -> AffineElement:
        try:
            return self.gens[label]
        except KeyError:
            raise ValueError(f"no generator labelled {label}") from None

    def translation(self, mu: Weight) -> AffineElement:
        """``tau_mu``; ``mu`` is the full translation vector (already a multiple of ``l``)."""
        if any(c % self.l for c in mu):
            raise ValueError(f"translation {mu} is not in l times the weight lattice")
        return AffineElement(identity_matrix(self.rank), tuple(mu))

    def finite_part(self, w: Matrix) -> AffineElement:
        return AffineElement(w, self.datum.zero())

    def mul(self, x: AffineElement, y: AffineElement) -> AffineElement:
        winv = self._inverse_matrix(y.w)
        m = mat_vec(winv, x.mu)
        return AffineElement(mat_mul(x.w, y.w), tuple(a + b for a, b in zip(m, y.mu)))

    def prod(self, xs: Iterable[AffineElement]) -> AffineElement:
        out = self.identity()
        for x in xs:
            out = self.mul(out, x)
        return out

    def inv(self, x: AffineElement) -> AffineElement:
        winv = self._inverse_matrix(x.w)
        return AffineElement(winv, tuple(-c for c in mat_vec(x.w, x.mu)))

    def from_word(self, word: Sequence[int]) -> AffineElement:
        return self.prod(self.simple(i) for i in word)

    def parse_element(self, text: str) -> AffineElement:
        """Accept ``e``, ``s0s1``, ``s_0 s_1`` or ``0,1``."""
        t = text.strip()
        if t in ("", "e", "1", "id"):
            return self.identity()
        if "," in t or t.isdigit():
            word = [int(p) for p in t.split(",") if p.strip()]
        else:
            parts = re.findall(r"s_?(\d+)", t)
            if not parts or re.sub(r"s_?\d+|\s|\*", "", t):
                raise ValueError(f"cannot parse group element {text!r}")
            word = [int(p) for p in parts]
        return self.from_word(word)

    def _inverse_matrix(self, w: Matrix) -> Matrix:
        c = self._inverse_mats.get(w)
        if c is None:
            c = _mat_inverse(w)
            self._inverse_mats[w] = c
        return c

    def coroot_matrix(self, w: Matrix) -> Matrix:
        """Matrix of ``w`` on simple-coroot coordinates, ``(w^{-1})^T``."""
        c = self._coroot_mats.get(w)
        if c is None:
            c = _transpose(self._inverse_matrix(w))
            self._coroot_mats[w] = c
        return c

    # -- actions -------------------------------------------------------

    def act(self, x: AffineElement, v: Weight) -> Weight:
        return mat_vec(x.w, tuple(a + b for a, b in zip(v, x.mu)))

    def dot(self, x: AffineElement, lam: Weight) -> Weight:
        v = self.act(x, tuple(c + 1 for c in lam))
        return tuple(c - 1 for c in v)

    def linear_apply_raw(self, x: AffineElement, coroot: Vector, dcoeff: int) -> tuple[Vector, int]:
        """``(w, mu)`` sends ``b + N delta`` to ``w b + (N - <mu, b>) delta``."""
        wb = mat_vec(self.coroot_matrix(x.w), coroot)
        return wb, dcoeff - self.datum.pairing(x.mu, coroot)

    def linear_apply(self, x: AffineElement, gamma: AffineCoroot) -> AffineCoroot:
        cor, n = self.linear_apply_raw(x, gamma.coroot, gamma.level * self.l)
        if n % self.l:
            raise ValueError("image leaves the l-affine coroots; is x in the extended group?")
        return AffineCoroot(cor, n // self.l)

    def reflection(self, beta: Vector, m: int) -> AffineElement:
        """``s_{beta, m}``: the reflection fixing ``<v, beta^vee> = m``."""
        d = self.datum
        bw = d.root_to_weight(beta)
        return AffineElement(d.reflection_matrix(beta), tuple(-m * b for b in bw))

    def reflection_of(self, gamma: AffineCoroot) -> AffineElement:
        """The reflection in the zero set of the affine function ``gamma``."""
        beta = self.datum.root_of_coroot(gamma.coroot)
        return self.reflection(beta, -gamma.level * self.l)

    def evaluate(self, gamma: AffineCoroot, v: Weight) -> int:
        return self.datum.pairing(v, gamma.coroot) + gamma.level * self.l

    def is_reflection(self, g: AffineElement) -> AffineCoroot | None:
        """The positive affine coroot of ``g`` if ``g`` is a reflection."""
        d = self.datum
        for beta in d.positive_roots:
            if d.reflection_matrix(beta) != g.w:
                continue
            bw = d.root_to_weight(beta)
            k = next(i for i, b in enumerate(bw) if b)
            if g.mu[k] % bw[k]:
                return None
            c = g.mu[k] // bw[k]
            if tuple(c * b for b in bw) != g.mu or c % self.l:
                return None
            return AffineCoroot(d.coroot_of(beta), c // self.l).positive()
        return None

    # -- length and words ---------------------------------------------

    def length(self, x: AffineElement) -> int:
        n = self._len_cache.get(x)
        if n is None:
            v = self.act(x, self.datum.rho)
            l = self.l
            n = sum(abs(self.datum.pairing(v, c) // l) for c in self.datum.positive_coroots)
            self._len_cache[x] = n
        return n

    def inversion_coroots(self, x: AffineElement) -> list[AffineCoroot]:
        """Positive ``gamma`` with ``s_gamma x < x``: the walls between ``A_0`` and ``x A_0``."""
        v = self.act(x, self.datum.rho)
        l = self.l
        out = []
        for c in self.datum.positive_coroots:
            p = self.datum.pairing(v, c)
            q = p // l
            # walls <v, c> = k l with k strictly between 0 and p / l
            ks = range(1, q + 1) if q >= 0 else range(q + 1, 1)
            for k in ks:
                out.append(AffineCoroot(c, -k).positive())
        return sorted(out)

    def left_descents(self, x: AffineElement) -> list[int]:
        n = self.length(x)
        return [s for s in self.labels if self.length(self.mul(self.gens[s], x)) < n]

    def right_descents(self, x: AffineElement) -> list[int]:
        n = self.length(x)
        return [s for s in self.labels if self.length(self.mul(x, self.gens[s])) < n]

    def reduced_word(self, x: AffineElement) -> tuple[int, ...]:
        word = []
        while self.length(x):
            s = self.left_descents(x)[0]
            word.append(s)
            x = self.mul(self.gens[s], x)
        return tuple(word)

    def word_str(self, x: AffineElement) -> str:
        w = self.reduced_word(x)
        return "e" if not w else "".join(f"s{i}" for i in w)

    def sort_key(self, x: AffineElement) -> tuple[int, tuple[int, ...]]:
        return self.length(x), self.reduced_word(x)

    # -- Bruhat order --------------------------------------------------

    def bruhat_leq(self, x: AffineElement, y: AffineElement) -> bool:
        key = (x, y)
        hit = self._bruhat_cache.get(key)
        if hit is not None:
            return hit
        lx, ly = self.length(x), self.length(y)
        if lx > ly:
            res = False
        elif ly == 0 or lx == ly:
            res = x == y
        elif lx == 0:
            res = True
        else:
            s = self.left_descents(y)[0]
            g = self.gens[s]
            sy = self.mul(g, y)
            sx = self.mul(g, x)
            if self.length(sx) < lx:
                res = self.bruhat_leq(sx, sy)
            else:
                res = self.bruhat_leq(x, sy)
        self._bruhat_cache[key] = res
        return res

    def bruhat_leq_subword(self, x: AffineElement, y: AffineElement) -> bool:
        """Independent check: ``x`` is a subword product of a reduced word of ``y``."""
        word = self.reduced_word(y)
        target = self.length(x)
        found = set()

        def walk(i: int, cur: AffineElement, used: int) -> None:
            if used == target:
                found.add(cur)
                return
            if len(word) - i < target - used:
                return
            g = self.gens[word[i]]
            nxt = self.mul(cur, g)
            if self.length(nxt) == used + 1:
                walk(i + 1, nxt, used + 1)
            walk(i + 1, cur, used)

        walk(0, self.identity(), 0)
        return x in found

    # -- enumeration ---------------------------------------------------

    def elements_up_to(self, bound: int) -> list[AffineElement]:
        """All elements of length at most ``bound``, sorted by length then word."""
        if bound in self._elements_cache:
            return list(self._elements_cache[bound])
        layers = [[self.identity()]]
        seen = {self.identity()}
        for n in range(1, bound + 1):
            nxt = []
            for x in layers[-1]:
                for s in self.labels:
                    y = self.mul(x, self.gens[s])
                    if y not in seen and self.length(y) == n:
                        seen.add(y)
                        nxt.append(y)
            if not nxt:
                break
            layers.append(nxt)
        out = sorted((x for lay in layers for x in lay), key=self.sort_key)
        self._elements_cache[bound] = out
        return list(out)

    def parabolic(self, J: Iterable[int]) -> list[AffineElement]:
        """The subgroup generated by the generators in ``J`` (must be finite)."""
        J = sorted(set(J))
        seen = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            nxt = []
            for x in frontier:
                for s in J:
                    y = self.mul(x, self.gens[s])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > 100000:
                            raise ValueError("parabolic subgroup is not finite")
            frontier = nxt
        return sorted(seen, key=self.sort_key)

    def is_min_rep(self, x: AffineElement, J: Iterable[int]) -> bool:
        n = self.length(x)
        return all(self.length(self.mul(x, self.gens[s])) > n for s in J)

    def min_rep(self, x: AffineElement, J: Iterable[int]) -> AffineElement:
        J = list(J)
        while True:
            n = self.length(x)
            for s in J:
                y = self.mul(x, self.gens[s])
                if self.length(y) < n:
                    x = y
                    break
            else:
                return x

    def coset_min_reps(self, J: Iterable[int], bound: int) -> list[AffineElement]:
        J = list(J)
        return [x for x in self.elements_up_to(bound) if self.is_min_rep(x, J)]

    def positive_affine_coroots(self, max_level: int) -> list[AffineCoroot]:
        cs = self.datum.positive_coroots
        out = [AffineCoroot(c, 0) for c in cs]
        if self.finite:
            return out
        for n in range(1, max_level + 1):
            for c in cs:
                out.append(AffineCoroot(c, n))
                out.append(AffineCoroot(tuple(-x for x in c), n))
        return out

    # -- dot stabilisers and blocks ------------------------------------

    def _wall_labels(self, v: Weight) -> list[int]:
        d = self.datum
        out = [i + 1 for i in range(self.rank) if v[i] == 0]
        if not self.finite:
            for c, comp in enumerate(d.components):
                if d.pairing(v, comp.highest_coroot) == self.l:
                    out.append(0 if c == 0 else self.rank + c)
        return sorted(out)

    def stabilizer_dot(self, omega: Weight) -> Stabilizer:
        d = self.datum
        v = tuple(c + 1 for c in omega)
        if not d.in_closed_alcove(v):
            raise ValueError(f"{omega} is not in the fundamental domain")
        J = self._wall_labels(v)
        coroots = []
        for c in d.positive_coroots:
            p = d.pairing(v, c)
            if p == 0:
                coroots.append(AffineCoroot(c, 0))
            elif p == self.l and not self.finite:
                coroots.append(AffineCoroot(tuple(-x for x in c), 1))
        return Stabilizer(tuple(omega), tuple(J), tuple(self.parabolic(J)), tuple(sorted(coroots)))

    def fold(self, lam: Weight) -> tuple[Weight, AffineElement]:
        """``(omega, x)`` with ``omega`` in the closed alcove and ``x . omega = lam``."""
        d = self.datum
        v = tuple(c + 1 for c in lam)
        g = self.identity()
        comps = [(0 if c == 0 else self.rank + c, comp.highest_coroot) for c, comp in enumerate(d.components)]
        while True:
            i = next((i for i in range(self.rank) if v[i] < 0), None)
            if i is not None:
                s = self.gens[i + 1]
            else:
                s = None
                if not self.finite:
                    for label, th in comps:
                        if d.pairing(v, th) > self.l:
                            s = self.gens[label]
                            break
                if s is None:
                    break
            v = self.act(s, v)
            g = self.mul(s, g)
        return tuple(c - 1 for c in v), self.inv(g)

    def block_rep(self, lam: Weight) -> Weight:
        return self.fold(lam)[0]

    def omega_class(self, omega: Weight) -> tuple[Weight, tuple[Weight, ...]]:
        """The orbit of ``omega`` under ``l``-translations by fundamental weights, refolded."""
        base = self.block_rep(omega)
        seen = {base}
        frontier = [base]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    t = tuple(c + self.l * int(j == i) for j, c in enumerate(w))
                    u = self.block_rep(t)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        orbit = tuple(sorted(seen))
        return orbit[0], orbit

    def lowering_covers(self, mu: Weight, max_height: int) -> list[Weight]:
        """``s_{beta,kl} . mu = mu - m beta`` with ``0 < m`` and ``m ht(beta) <= max_height``.

        Any ``k`` is allowed: ``m = <mu+rho, beta^vee> - kl`` only has to be positive.
        """
        d = self.datum
        out = []
        for beta, cb in zip(d.positive_roots, d.positive_coroots):
            p = d.pairing(tuple(c + 1 for c in mu), cb)
            bw = d.root_to_weight(beta)
            ht = d.height(beta)
            if self.finite:
                ms = [p] if 0 < p and p * ht <= max_height else []
            else:
                ms = range(p % self.l or self.l, max_height // ht + 1, self.l)
            for m in ms:
                out.append(tuple(c - m * b for c, b in zip(mu, bw)))
        return out

    def up_closure(self, lam: Weight, window: Window) -> set[Weight]:
        """``{mu : mu up-arrow lam}`` inside the window."""
        d = self.datum
        seen = {tuple(lam)}
        frontier = [tuple(lam)]
        while frontier:
            nxt = []
            for mu in frontier:
                left = window.depth - sum(d.root_difference(window.top, mu))
                for nu in self.lowering_covers(mu, left):
                    if nu not in seen and window.contains(d, nu):
                        seen.add(nu)
                        nxt.append(nu)
            frontier = nxt
        return seen

    # -- serialisation -------------------------------------------------

    def to_json(self, x: AffineElement) -> dict:
        return {
            "word": list(self.reduced_word(x)),
            "finite": [list(r) for r in x.w],
            "translation": list(x.mu),
        }

    def from_json(self, doc: dict) -> AffineElement:
        x = AffineElement(tuple(tuple(r) for r in doc["finite"]), tuple(doc["translation"]))
        if "word" in doc and self.from_word(doc["word"]) != x:
            raise ValueError("word does not match the stored matrix and translation")
        return x


@lru_cache(maxsize=None)
def affine_group(datum: RootDatum, finite: bool = False) -> AffineWeylGroup:
    """Shared group instance per datum, so caches are reused."""
    return AffineWeylGroup(datum, finite)
