"""Kostant partitions, Verma characters and the Jantzen sum formula."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .affine_weyl import AffineCoroot, AffineElement, Window, affine_group
from .root_data import RootDatum, Vector, Weight


# -- partitions --------------------------------------------------------


@lru_cache(maxsize=None)
def _count(roots: tuple[Vector, ...], eta: Vector) -> int:
    if any(c < 0 for c in eta):
        return 0
    if not any(eta):
        return 1
    if not roots:
        return 0
    first, rest = roots[0], roots[1:]
    total = 0
    cur = eta
    while all(c >= 0 for c in cur):
        total += _count(rest, cur)
        cur = tuple(a - b for a, b in zip(cur, first))
    return total


def partition_count(datum: RootDatum, eta: Sequence[int]) -> int:
    """``|Par(eta)|`` with ``eta`` in simple-root coordinates."""
    return _count(datum.positive_roots, tuple(eta))


def partitions(datum: RootDatum, eta: Sequence[int]) -> list[dict[Vector, int]]:
    """Every way to write ``eta`` as a sum of positive roots."""
    roots = datum.positive_roots
    out: list[dict[Vector, int]] = []

    def go(i: int, rem: tuple[int, ...], acc: dict[Vector, int]) -> None:
        if not any(rem):
            out.append(dict(acc))
            return
        if i == len(roots):
            return
        b = roots[i]
        k = 0
        cur = rem
        while all(c >= 0 for c in cur):
            if k:
                acc[b] = k
            go(i + 1, cur, acc)
            k += 1
            cur = tuple(a - c for a, c in zip(cur, b))
        acc.pop(b, None)

    if all(c >= 0 for c in eta):
        go(0, tuple(eta), {})
    return out


# -- characters --------------------------------------------------------


@dataclass
class Character:
    """Window-truncated formal sum of ``exp(mu)``."""

    window: Window
    coeffs: dict[Weight, int] = field(default_factory=dict)

    def _check(self, other: "Character") -> None:
        if self.window != other.window:
            raise ValueError("characters live on different windows")

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Character(self.window, {k: v for k, v in out.items() if v})

    def __neg__(self) -> "Character":
        return Character(self.window, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __getitem__(self, mu: Weight) -> int:
        return self.coeffs.get(tuple(mu), 0)

    def to_json(self) -> dict:
        return {
            "window": self.window.to_json(),
            "coeffs": {",".join(map(str, k)): v for k, v in sorted(self.coeffs.items())},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def zero_character(window: Window) -> Character:
    return Character(window, {})


def verma_character(datum: RootDatum, lam: Weight, window: Window) -> Character:
    """``sum_eta |Par(eta)| exp(lam - eta)`` restricted to the window."""
    out = {}
    for mu in window.weights(datum):
        eta = datum.root_difference(lam, mu)
        if eta is None or any(c < 0 for c in eta):
            continue
        n = partition_count(datum, eta)
        if n:
            out[mu] = n
    return Character(window, out)


# -- Shapovalov factors -----------------------------------------------


@dataclass(frozen=True)
class ShapFactor:
    """One factor ``[K_beta; <lam+rho, beta^vee> - m]`` to the power ``mult``."""

    beta: Vector
    m: int
    c: int
    mult: int
    # beta^vee + (c/l) delta when l | c; its reflection is s_{beta,-c}
    vanishing: AffineCoroot | None
    verma: Weight

    def to_json(self) -> dict:
        return {
            "beta": list(self.beta),
            "m": self.m,
            "c": self.c,
            "mult": self.mult,
            "vanishing": None if self.vanishing is None else {
                "coroot": list(self.vanishing.coroot), "level": self.vanishing.level},
            "verma": list(self.verma),
        }


def shapovalov_factors(datum: RootDatum, lam: Weight, eta: Sequence[int]) -> list[ShapFactor]:
    """Factors of the determinant on the ``lam - eta`` weight space (``eta`` in root coordinates)."""
    l = datum.l
    v = tuple(c + 1 for c in lam)
    out = []
    for beta, cb in zip(datum.positive_roots, datum.positive_coroots):
        p = datum.pairing(v, cb)
        bw = datum.root_to_weight(beta)
        m = 1
        while True:
            rest = tuple(e - m * b for e, b in zip(eta, beta))
            if any(x < 0 for x in rest):
                break
            mult = partition_count(datum, rest)
            if mult:
                c = p - m
                van = AffineCoroot(cb, c // l) if c % l == 0 else None
                nu = tuple(x - m * b for x, b in zip(lam, bw))
                out.append(ShapFactor(beta, m, c, mult, van, nu))
            m += 1
    return out


def _window_span(datum: RootDatum, lam: Weight, window: Window) -> list[tuple[Weight, tuple[int, ...]]]:
    out = []
    for mu in window.weights(datum):
        eta = datum.root_difference(lam, mu)
        if eta is not None and all(c >= 0 for c in eta):
            out.append((mu, eta))
    return out


def _lhs(datum: RootDatum, lam: Weight, window: Window, roots: set[Vector] | None) -> Character:
    out = {}
    for mu, eta in _window_span(datum, lam, window):
        n = sum(f.mult for f in shapovalov_factors(datum, lam, eta)
                if f.vanishing is not None and (roots is None or f.beta in roots))
        if n:
            out[mu] = n
    return Character(window, out)


def jantzen_lhs(datum: RootDatum, lam: Weight, window: Window) -> Character:
    """Valuation of the specialised determinant, weight space by weight space."""
    return _lhs(datum, lam, window, None)


def jantzen_lhs_subgeneric(datum: RootDatum, lam: Weight, alpha: Vector, window: Window) -> Character:
    """Left side after localising at ``alpha``: only ``alpha``-factors can vanish."""
    return _lhs(datum, lam, window, {tuple(alpha)})


def jantzen_terms(datum: RootDatum, lam: Weight, window: Window, roots: Iterable[Vector] | None = None
                  ) -> list[tuple[Vector, int, Weight]]:
    """``(beta, k, s_{beta,kl} . lam)`` over ``<lam+rho, beta^vee> - kl >= 1`` reaching the window."""
    G = affine_group(datum)
    l = datum.l
    v = tuple(c + 1 for c in lam)
    depth_left = window.depth - _depth(datum, window, lam)
    chosen = datum.positive_roots if roots is None else [tuple(r) for r in roots]
    out = []
    for beta in chosen:
        cb = datum.coroot_of(beta)
        p = datum.pairing(v, cb)
        ht = datum.height(beta)
        # c = p - kl ranges over positive integers congruent to p mod l
        c = p % l or l
        while c * ht <= depth_left:
            k = (p - c) // l
            nu = G.dot(G.reflection(beta, k * l), lam)
            out.append((beta, k, nu))
            c += l
    return out


def _depth(datum: RootDatum, window: Window, lam: Weight) -> int:
    d = datum.root_difference(window.top, lam)
    if d is None or any(c < 0 for c in d):
        raise ValueError(f"{lam} is not below the window top {window.top}")
    return sum(d)


def jantzen_rhs(datum: RootDatum, lam: Weight, window: Window) -> Character:
    out = zero_character(window)
    for _, _, nu in jantzen_terms(datum, lam, window):
        out = out + verma_character(datum, nu, window)
    return out


def jantzen_rhs_subgeneric(datum: RootDatum, lam: Weight, alpha: Vector, window: Window) -> Character:
    out = zero_character(window)
    for _, _, nu in jantzen_terms(datum, lam, window, [alpha]):
        out = out + verma_character(datum, nu, window)
    return out


# -- linkage and blocks ----------------------------------------------


def linkage_nonzero(datum: RootDatum, lam: Weight, mu: Weight, window: Window | None = None) -> bool:
    """``mu`` up-arrow ``lam``, computed by the reflection-cover closure."""
    if window is None:
        d = datum.root_difference(lam, mu)
        if d is None or any(c < 0 for c in d):
            return False
        window = Window(tuple(lam), sum(d))
    return tuple(mu) in affine_group(datum).up_closure(tuple(lam), window)


def linkage_recursive(datum: RootDatum, lam: Weight, mu: Weight) -> bool:
    """Descent through vanishing Shapovalov factors: an independent route to the same relation."""

    @lru_cache(maxsize=None)
    def rec(a: Weight) -> bool:
        if a == tuple(mu):
            return True
        eta = datum.root_difference(a, mu)
        if eta is None or any(c < 0 for c in eta):
            return False
        for f in shapovalov_factors(datum, a, eta):
            if f.vanishing is not None and rec(f.verma):
                return True
        return False

    return rec(tuple(lam))


def block_rep(datum: RootDatum, lam: Weight) -> tuple[Weight, Weight]:
    """``(omega, [omega])``: the alcove representative and the class under l-translations."""
    G = affine_group(datum)
    omega = G.block_rep(tuple(lam))
    canon, _ = G.omega_class(omega)
    return omega, canon


def translation_factors(datum: RootDatum, lam: Weight, omega1: Weight, omega2: Weight,
                        x: AffineElement | None = None) -> list[Weight]:
    """Highest weights ``x y . omega2`` for ``y`` in the stabiliser of ``omega1``, where ``lam = x . omega1``."""
    G = affine_group(datum)
    if x is None:
        om, x = G.fold(tuple(lam))
        if om != tuple(omega1):
            raise ValueError(f"{lam} is not in the block of {omega1}")
    elif G.dot(x, tuple(omega1)) != tuple(lam):
        raise ValueError("x . omega1 does not equal lam")
    stab = G.stabilizer_dot(tuple(omega1))
    seen = []
    for y in stab.elements:
        nu = G.dot(G.mul(x, y), tuple(omega2))
        if nu not in seen:
            seen.append(nu)
    return sorted(seen, reverse=True)


# -- rank-one Verma flags --------------------------------------------


def sl2_verma_flag(datum: RootDatum, kind: str, n: int, m: int, alpha: Vector | None = None,
                   omega: Weight | None = None) -> list[tuple[int, Weight]]:
    """``(index, highest weight)`` of the Verma flag of the truncated projective, top index last.

    singular: indices ``n..m``, index ``k`` is ``omega + l k alpha`` (default ``omega = -rho``).
    regular: indices ``2n-1..2m``; ``2k`` is ``omega + l k alpha`` and ``2k-1`` is
    ``s_alpha . omega + l k alpha`` (default ``omega = 0``).
    """
    if n > m:
        raise ValueError("need n <= m")
    if alpha is None:
        alpha = datum.simple_root(0)
    alpha = tuple(alpha)
    aw = datum.root_to_weight(alpha)
    cb = datum.coroot_of(alpha)
    l = datum.l
    G = affine_group(datum)
    if kind == "singular":
        omega = tuple(-c for c in datum.rho) if omega is None else tuple(omega)
        if datum.pairing(tuple(c + 1 for c in omega), cb) % l:
            raise ValueError(f"{omega} is not alpha-singular")
        return [(k, tuple(o + l * k * a for o, a in zip(omega, aw))) for k in range(n, m + 1)]
    if kind == "regular":
        omega = datum.zero() if omega is None else tuple(omega)
        if datum.pairing(tuple(c + 1 for c in omega), cb) % l == 0:
            raise ValueError(f"{omega} is alpha-singular")
        so = G.dot(G.reflection(alpha, 0), omega)
        out = []
        for idx in range(2 * n - 1, 2 * m + 1):
            k = (idx + 1) // 2
            base = omega if idx % 2 == 0 else so
            out.append((idx, tuple(o + l * k * a for o, a in zip(base, aw))))
        return out
    raise ValueError(f"unknown block kind {kind!r}")


def sl2_simple_multiplicities(datum: RootDatum, j: int, depth: int, lowest: int) -> dict[int, int]:
    """``[M(j) : E(n)]`` in the rank-one singular block, read off the Jantzen filtration.

    The filtration of ``M(j)`` has layers ``M(j-1), M(j-2), ...``, so ``E(n)`` has
    character ``ch M(n) - ch M(n-1)``; the multiplicities come from unitriangular
    solving on the window.
    """
    flag = dict(sl2_verma_flag(datum, "singular", lowest - 1, j))
    top = flag[j]
    win = Window(top, depth)
    verma = {k: verma_character(datum, w, win) for k, w in flag.items()}
    simple = {k: verma[k] - verma[k - 1] for k in flag if k - 1 in flag}
    remaining = verma[j]
    mult: dict[int, int] = {}
    for k in range(j, lowest - 1, -1):
        c = remaining[flag[k]]
        mult[k] = c
        if c:
            for _ in range(abs(c)):
                remaining = remaining - simple[k] if c > 0 else remaining + simple[k]
    return mult
