"""Root data, lattices and the parameter l.

Weights are integer tuples in the fundamental-weight basis, so the pairing
with a simple coroot is a coordinate read-off.  Roots are stored in the
simple-root basis and coroots in the simple-coroot basis; the Cartan matrix
``a[i][j] = <alpha_i^vee, alpha_j>`` converts between them.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product

Weight = tuple[int, ...]
Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_block(letter: str, n: int) -> list[list[int]]:
    """Cartan matrix of a simple type, Bourbaki numbering."""
    letter = letter.upper()
    if letter == "A" and n >= 1:
        return _chain(n)
    if letter == "B" and n >= 2:
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if letter == "C" and n >= 2:
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if letter == "D" and n >= 3:
        a = _chain(n - 1) + [[0] * (n - 1)]
        for row in a:
            row.append(0)
        a[n - 1][n - 1] = 2
        a[n - 2][n - 3] = a[n - 3][n - 2] = -1
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        return a
    if letter == "E" and n in (6, 7, 8):
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        return a
    if letter == "F" and n == 4:
        a = _chain(4)
        a[2][1] = -2
        return a
    if letter == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise ValueError(f"unknown Cartan type {letter}{n}")


_COMPONENT = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_type(label: str) -> list[tuple[str, int]]:
    """Split a label such as ``"A2xB2"`` into simple components."""
    parts = [p for p in re.split(r"[x×+* ]+", label.strip()) if p]
    if not parts:
        raise ValueError(f"empty Cartan type {label!r}")
    out = []
    for p in parts:
        m = _COMPONENT.match(p)
        if not m:
            raise ValueError(f"unknown Cartan type {p!r}")
        out.append((m.group(1).upper(), int(m.group(2))))
    return out


def _symmetrizers(a: list[list[int]]) -> list[int]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
    # scale each component so its short roots have d = 1
    comps = _components(a)
    out = [0] * n
    for comp in comps:
        lo = min(d[i] for i in comp)
        for i in comp:
            out[i] = int(d[i] / lo)
    return out


def _components(a: list[list[int]]) -> list[list[int]]:
    n = len(a)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if a[i][j] != 0 and not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _det(m: list[list[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return int(det)


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    n = len(x)
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_vec(x: Matrix, v: Vector) -> Vector:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in x)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Component:
    letter: str
    rank: int
    nodes: tuple[int, ...]
    e: int
    h: int
    highest_root: Vector
    highest_coroot: Vector


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Simply connected root datum together with the odd parameter ``l``."""

    type_label: str
    l: int
    cartan: Matrix
    symmetrizers: tuple[int, ...]
    components: tuple[Component, ...] = field(repr=False)
    positive_roots: tuple[Vector, ...] = field(repr=False)
    positive_coroots: tuple[Vector, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def e(self) -> int:
        return math.prod(c.e for c in self.components)

    @property
    def h(self) -> int:
        return max(c.h for c in self.components)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def zero(self) -> Weight:
        return (0,) * self.rank

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RootDatum)
            and self.cartan == other.cartan
            and self.l == other.l
        )

    def __hash__(self) -> int:
        return hash((self.cartan, self.l))

    # -- conversions -------------------------------------------------

    def root_to_weight(self, beta: Vector) -> Weight:
        """Fundamental-weight coordinates of a root-lattice vector."""
        a = self.cartan
        return tuple(sum(a[i][j] * beta[j] for j in range(self.rank)) for i in range(self.rank))

    def weight_to_root(self, lam: Weight) -> tuple[Fraction, ...]:
        """Simple-root coordinates of a weight (rational in general)."""
        return tuple(sum(self._cartan_inverse[i][j] * lam[j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def _cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.rank
        a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.cartan)]
        for c in range(n):
            p = next(r for r in range(c, n) if a[r][c] != 0)
            a[c], a[p] = a[p], a[c]
            piv = a[c][c]
            a[c] = [x / piv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c] != 0:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return tuple(tuple(row[n:]) for row in a)

    def root_pairing(self, beta: Vector, gamma: Vector) -> int:
        """The invariant form ``(beta, gamma)`` on the root lattice."""
        n = self.rank
        d, a = self.symmetrizers, self.cartan
        return sum(beta[i] * gamma[j] * d[i] * a[i][j] for i in range(n) for j in range(n))

    def d_of(self, beta: Vector) -> int:
        """``d_beta = (beta, beta)/2``; equals ``d_i`` on the W-orbit of ``alpha_i``."""
        return self.root_pairing(beta, beta) // 2

    def coroot_of(self, beta: Vector) -> Vector:
        db = self.d_of(beta)
        return tuple(beta[j] * self.symmetrizers[j] // db for j in range(self.rank))

    def root_of_coroot(self, cb: Vector) -> Vector:
        """Inverse of :meth:`coroot_of` on real coroots."""
        # (beta^vee)_j = beta_j d_j / d_beta, and d_beta^vee is the dual length
        for beta, c in zip(self.positive_roots, self.positive_coroots):
            if c == cb:
                return beta
            if tuple(-x for x in c) == cb:
                return tuple(-x for x in beta)
        raise ValueError(f"{cb} is not a real coroot")

    def simple_root(self, i: int) -> Vector:
        return tuple(int(j == i) for j in range(self.rank))

    def height(self, beta: Vector) -> int:
        return sum(beta)

    def is_positive_vector(self, v: Vector) -> bool:
        return all(x >= 0 for x in v) and any(x > 0 for x in v)

    # -- pairings and orders -----------------------------------------

    def pairing(self, lam: Weight, coroot: Vector) -> int:
        """``<lambda, beta^vee>`` with the coroot in simple-coroot coordinates."""
        return sum(x * c for x, c in zip(lam, coroot))

    def dominance_leq(self, lam: Weight, mu: Weight) -> bool:
        """True iff ``mu - lambda`` lies in the non-negative span of simple roots."""
        diff = self.weight_to_root(tuple(m - x for m, x in zip(mu, lam)))
        return all(c.denominator == 1 and c >= 0 for c in diff)

    def root_difference(self, lam: Weight, mu: Weight) -> tuple[int, ...] | None:
        """Simple-root coordinates of ``lam - mu`` if integral, else ``None``."""
        diff = self.weight_to_root(tuple(x - m for x, m in zip(lam, mu)))
        if any(c.denominator != 1 for c in diff):
            return None
        return tuple(int(c) for c in diff)

    def restricted_decompose(self, lam: Weight) -> tuple[Weight, Weight]:
        """Unique splitting ``lam = lam0 + l * lam1`` with ``0 <= lam0_i < l``."""
        l = self.l
        return tuple(x % l for x in lam), tuple(x // l for x in lam)

    def is_restricted(self, lam: Weight) -> bool:
        return all(0 <= x < self.l for x in lam)

    # -- Xi_sc ---------------------------------------------------------

    def in_closed_alcove(self, v: Weight) -> bool:
        """``0 <= <v, beta^vee> <= l`` for every positive coroot."""
        return all(0 <= self.pairing(v, c) <= self.l for c in self.positive_coroots)

    def xi_sc(self) -> list[Weight]:
        """All ``omega`` with ``omega + rho`` in the closed fundamental l-alcove."""
        out = []
        for v in product(range(self.l + 1), repeat=self.rank):
            if self.in_closed_alcove(v):
                out.append(tuple(x - 1 for x in v))
        return sorted(out)

    def is_singular(self, omega: Weight) -> bool:
        """Nontrivial dot-stabiliser: ``omega + rho`` lies on an l-wall."""
        v = tuple(x + 1 for x in omega)
        return any(self.pairing(v, c) % self.l == 0 for c in self.positive_coroots)

    def xi_sc_enumerate(self) -> list[tuple[Weight, bool]]:
        """``(omega, singular?)`` for every representative."""
        return [(w, self.is_singular(w)) for w in self.xi_sc()]

    # -- finite Weyl group on weight coordinates ------------------------

    def simple_reflection_matrix(self, i: int) -> Matrix:
        n = self.rank
        a = self.cartan
        return tuple(
            tuple(int(k == j) - (a[k][i] if j == i else 0) for j in range(n))
            for k in range(n)
        )

    def reflect_weight(self, coroot: Vector, lam: Weight) -> Weight:
        beta = self.root_of_coroot(coroot)
        bw = self.root_to_weight(beta)
        p = self.pairing(lam, coroot)
        return tuple(x - p * b for x, b in zip(lam, bw))

    def reflect_root(self, i: int, beta: Vector) -> Vector:
        p = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        return tuple(b - p * int(j == i) for j, b in enumerate(beta))

    def reflect_coroot(self, i: int, cb: Vector) -> Vector:
        # <alpha_i, cb> = sum_j cb_j a_ji
        p = sum(cb[j] * self.cartan[j][i] for j in range(self.rank))
        return tuple(c - p * int(j == i) for j, c in enumerate(cb))

    def reflection_matrix(self, beta: Vector) -> Matrix:
        """Matrix of ``s_beta`` on weight coordinates."""
        cb = self.coroot_of(beta)
        bw = self.root_to_weight(beta)
        n = self.rank
        return tuple(tuple(int(k == j) - bw[k] * cb[j] for j in range(n)) for k in range(n))

    @cached_property
    def weyl_group(self) -> tuple[Matrix, ...]:
        """Elements of W as weight-coordinate matrices, in BFS (length) order."""
        gens = [self.simple_reflection_matrix(i) for i in range(self.rank)]
        e = identity_matrix(self.rank)
        seen = {e}
        order = [e]
        frontier = [e]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    x = mat_mul(g, w)
                    if x not in seen:
                        seen.add(x)
                        order.append(x)
                        nxt.append(x)
            frontier = nxt
        return tuple(order)

    # -- serialisation -------------------------------------------------

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "l": self.l,
            "cartan": [list(r) for r in self.cartan],
            "d": list(self.symmetrizers),
            "positive_roots": [list(b) for b in self.positive_roots],
            "positive_coroots": [list(b) for b in self.positive_coroots],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, doc: dict | str) -> "RootDatum":
        if isinstance(doc, str):
            doc = json.loads(doc)
        datum = build_root_datum(doc["type"], doc["l"])
        if [list(r) for r in datum.cartan] != doc.get("cartan", [list(r) for r in datum.cartan]):
            raise ValueError("Cartan matrix does not match the type label")
        return datum


def _positive_roots(a: list[list[int]]) -> list[Vector]:
    n = len(a)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                p = sum(a[i][j] * beta[j] for j in range(n))
                gamma = tuple(b - p * int(j == i) for j, b in enumerate(beta))
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    pos = [b for b in seen if all(x >= 0 for x in b)]
    return sorted(pos, key=lambda b: (sum(b), tuple(-x for x in b)))


def validate_l(components: list[tuple[str, int, int, int]], l: int) -> None:
    """Check the constraints on ``l``; raise ``ValueError`` naming the failure.

    ``components`` lists ``(letter, rank, e, h)``.
    """
    if not isinstance(l, int) or l <= 0:
        raise ValueError("l must be a positive integer")
    if l % 2 == 0:
        raise ValueError("l must be odd")
    for letter, rank, e, h in components:
        if letter == "G" and l % 3 == 0:
            raise ValueError("l must be prime to 3 for G2")
    for letter, rank, e, h in components:
        if math.gcd(l, e) != 1:
            raise ValueError(f"l must be prime to e = {e} (component {letter}{rank})")
    for letter, rank, e, h in components:
        if l < h:
            raise ValueError(f"l must be at least the Coxeter number h = {h} (component {letter}{rank})")


def build_root_datum(type_label: str, l: int) -> RootDatum:
    """Tabulate and validate the root datum of ``type_label`` with parameter ``l``."""
    parts = parse_type(type_label)
    blocks = [cartan_block(letter, n) for letter, n in parts]
    rank = sum(len(b) for b in blocks)
    a = [[0] * rank for _ in range(rank)]
    offset = 0
    spans = []
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                a[offset + i][offset + j] = b[i][j]
        spans.append(tuple(range(offset, offset + k)))
        offset += k

    for i in range(rank):
        if a[i][i] != 2:
            raise ValueError("Cartan diagonal must be 2")
        for j in range(rank):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                raise ValueError("invalid Cartan matrix")

    d = _symmetrizers(a)
    pos = _positive_roots(a)
    comp_info = []
    comps = []
    for (letter, n), nodes in zip(parts, spans):
        sub = [[a[i][j] for j in nodes] for i in nodes]
        e = abs(_det(sub))
        in_comp = [b for b in pos if all(b[k] == 0 for k in range(rank) if k not in nodes)]
        theta = max(in_comp, key=sum)
        h = sum(theta) + 1
        comp_info.append((letter, n, e, h))
        comps.append((letter, n, nodes, e, h, theta))
    validate_l(comp_info, l)

    cartan = tuple(tuple(r) for r in a)
    proto = RootDatum(type_label, l, cartan, tuple(d), (), tuple(pos), ())
    coroots = tuple(proto.coroot_of(b) for b in pos)
    components = []
    for letter, n, nodes, e, h, theta in comps:
        # highest coroot: defines the affine wall <v, hv> = l of the alcove
        comp_coroots = [c for c in coroots if all(c[k] == 0 for k in range(rank) if k not in nodes)]
        hv = max(comp_coroots, key=sum)
        components.append(Component(letter, n, nodes, e, h, theta, hv))

    for i in range(rank):
        for j in range(rank):
            assert d[i] * a[i][j] == d[j] * a[j][i]
    return RootDatum(type_label, l, cartan, tuple(d), tuple(components), tuple(pos), coroots)
