"""Exact sparse polynomials and linear-form localisations.

A :class:`Poly` lives in ``Q[y_1, ..., y_r, delta]``; ``y_i`` is the simple
coroot ``alpha_i^vee`` and the last variable is the affine direction.  A
:class:`Frac` is a polynomial divided by a product of linear forms, which is
all the localisation the checks in this package ever need.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence, Union

if TYPE_CHECKING:
    from .affine_weyl import AffineCoroot, AffineElement, AffineWeylGroup
    from .root_data import RootDatum

Coeff = Union[int, Fraction]
Monomial = tuple[int, ...]


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Coeff] | None = None):
        self.nvars = nvars
        clean: dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _simplify(c)
        self.terms = clean
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def const(cls, nvars: int, c: Coeff) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[Coeff]) -> "Poly":
        n = len(coeffs)
        return cls(n, {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Coeff]) -> "Poly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- basic protocol ------------------------------------------------

    def _coerce(self, other: object) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Poly":
        return (-self) + other

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw(self.nvars, {})
            return Poly._raw(self.nvars, {m: _simplify(c * other) for m, c in self.terms.items()})
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw(self.nvars, {m: _simplify(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Poly({self.to_str()})"

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Coeff:
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def is_linear_form(self) -> bool:
        return bool(self.terms) and all(sum(m) == 1 for m in self.terms)

    def linear_coeffs(self) -> tuple[Coeff, ...]:
        out = [0] * self.nvars
        for m, c in self.terms.items():
            if sum(m) != 1:
                raise ValueError("not a linear form")
            out[m.index(1)] = c
        return tuple(out)

    def leading(self) -> tuple[Monomial, Coeff]:
        m = max(self.terms)
        return m, self.terms[m]

    # -- algebra -------------------------------------------------------

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Ring map sending variable ``i`` to ``images[i]``."""
        if not self.terms:
            return Poly._raw(images[0].nvars if images else self.nvars, {})
        nv = images[0].nvars
        powers: list[list[Poly]] = [[Poly.const(nv, 1)] for _ in images]
        out = Poly(nv)
        for m, c in self.terms.items():
            term = Poly.const(nv, c)
            for i, e in enumerate(m):
                if e:
                    pw = powers[i]
                    while len(pw) <= e:
                        pw.append(pw[-1] * images[i])
                    term = term * pw[e]
            out = out + term
        return out

    def set_var(self, i: int, value: Coeff) -> "Poly":
        out: dict[Monomial, Coeff] = {}
        for m, c in self.terms.items():
            e = m[i]
            mm = m[:i] + (0,) + m[i + 1:]
            out[mm] = out.get(mm, 0) + c * (value ** e if e else 1)
        return Poly(self.nvars, out)

    def divmod(self, d: "Poly") -> tuple["Poly", "Poly"]:
        """Multivariate division by ``d`` in lex order; returns ``(q, r)``."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = d.leading()
        q: dict[Monomial, Coeff] = {}
        r: dict[Monomial, Coeff] = {}
        p = dict(self.terms)
        dterms = list(d.terms.items())
        while p:
            m = max(p)
            c = p[m]
            if all(a >= b for a, b in zip(m, lm)):
                qm = tuple(a - b for a, b in zip(m, lm))
                qc = Fraction(c) / lc
                q[qm] = q.get(qm, 0) + qc
                for dm, dc in dterms:
                    mm = tuple(a + b for a, b in zip(qm, dm))
                    v = p.get(mm, 0) - qc * dc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
            else:
                r[m] = c
                del p[m]
        return Poly(self.nvars, q), Poly(self.nvars, r)

    def divexact(self, d: "Poly") -> "Poly | None":
        """``self / d`` when ``d`` divides ``self``, else ``None``."""
        if d.is_constant():
            c = d.constant_value()
            return self * (Fraction(1) / c)
        q, r = self.divmod(d)
        return q if r.is_zero() else None

    def divides(self, p: "Poly") -> bool:
        return p.divexact(self) is not None

    def valuation(self, form: "Poly") -> int:
        """Largest ``k`` with ``form**k`` dividing ``self``."""
        if self.is_zero():
            raise ValueError("infinite valuation of the zero polynomial")
        k, cur = 0, self
        while True:
            q = cur.divexact(form)
            if q is None:
                return k
            k, cur = k + 1, q

    def content_normalized(self) -> tuple[Fraction, "Poly"]:
        """``(c, p)`` with ``self == c * p`` and the leading coefficient of ``p`` equal to 1."""
        if self.is_zero():
            return Fraction(0), self
        _, lc = self.leading()
        return Fraction(lc), self * (Fraction(1) / lc)

    # -- printing ------------------------------------------------------

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-sum(m), tuple(-x for x in m))):
            c = self.terms[m]
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            if not mono:
                s = _fmt(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{_fmt(c)}*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    __str__ = to_str


def _simplify(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _fmt(c: Coeff) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def default_names(nvars: int) -> list[str]:
    return [f"y{i + 1}" for i in range(nvars - 1)] + ["delta"]


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokens(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        out.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def parse_poly(text: str, names: Sequence[str]) -> Poly:
    """Parse sums of products with ``^`` (or ``**``), parentheses and rational constants.

    Accepts the canonical printed form ``3/2*y1^2*delta - y2 + 1``.
    """
    nv = len(names)
    index = {n: i for i, n in enumerate(names)}
    toks = _tokens(text)
    pos = 0

    def peek() -> str | None:
        return toks[pos] if pos < len(toks) else None

    def take() -> str:
        nonlocal pos
        if pos >= len(toks):
            raise ValueError(f"cannot parse polynomial {text!r}: unexpected end")
        pos += 1
        return toks[pos - 1]

    def expr() -> Poly:
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        acc = term() * sign
        while peek() in ("+", "-"):
            op = take()
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term() -> Poly:
        acc = power()
        while peek() in ("*", "/"):
            op = take()
            rhs = power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ValueError(f"cannot parse polynomial {text!r}: division by a non-constant")
                acc = acc * (Fraction(1) / Fraction(rhs.constant_value()))
        return acc

    def power() -> Poly:
        base = atom()
        if peek() in ("^", "**"):
            take()
            e = take()
            if not e.isdigit():
                raise ValueError(f"cannot parse polynomial {text!r}: bad exponent")
            return base ** int(e)
        return base

    def atom() -> Poly:
        t = take()
        if t == "(":
            inner = expr()
            if take() != ")":
                raise ValueError(f"cannot parse polynomial {text!r}: unbalanced parentheses")
            return inner
        if t == "-":
            return -atom()
        if t in index:
            return Poly.var(nv, index[t])
        if t[0].isdigit():
            return Poly.const(nv, Fraction(t))
        raise ValueError(f"cannot parse polynomial {text!r}: unknown symbol {t!r}")

    if not toks:
        return Poly(nv)
    out = expr()
    if pos != len(toks):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return out


def normalize_form(form: Poly) -> tuple[Fraction, Poly]:
    """Write a nonzero linear form as ``c * f`` with ``f`` monic in its first variable."""
    if not form.is_linear_form():
        raise ValueError(f"{form} is not a nonzero linear form")
    coeffs = form.linear_coeffs()
    lead = next(c for c in coeffs if c)
    return Fraction(lead), form * (Fraction(1) / lead)


def _form_key(f: Poly) -> tuple:
    return tuple(Fraction(c) for c in f.linear_coeffs())


class Frac:
    """``num / prod(form**e)`` with monic linear forms, kept reduced.

    The optional ``factors`` record a splitting of the numerator into linear
    forms so that the element can be inverted.
    """

    __slots__ = ("num", "den", "factors")

    def __init__(
        self,
        num: Poly,
        den: Mapping[Poly, int] | None = None,
        factors: tuple[Fraction, dict[Poly, int]] | None = None,
    ):
        num_c = num
        den_d: dict[Poly, int] = {}
        for f, e in (den or {}).items():
            if e == 0:
                continue
            if e < 0:
                raise ValueError("negative exponent in denominator")
            c, g = normalize_form(f)
            num_c = num_c * (Fraction(1) / c) ** e
            den_d[g] = den_d.get(g, 0) + e
        self.num = num_c
        self.den = den_d
        self.factors = factors
        self._reduce()

    def _reduce(self) -> None:
        if self.num.is_zero():
            self.den = {}
            self.factors = (Fraction(0), {})
            return
        for f in list(self.den):
            e = self.den[f]
            while e:
                q = self.num.divexact(f)
                if q is None:
                    break
                self.num = q
                e -= 1
            if e:
                self.den[f] = e
            else:
                del self.den[f]
        if self.factors is not None:
            c, fs = self.factors
            self.factors = (c, {f: e for f, e in fs.items() if e})

    # -- constructors --------------------------------------------------

    @classmethod
    def of(cls, p: Poly | int | Fraction, nvars: int | None = None) -> "Frac":
        if isinstance(p, Frac):
            return p
        if not isinstance(p, Poly):
            p = Poly.const(nvars, p)
        return cls(p)

    @classmethod
    def from_factors(cls, nvars: int, const: Coeff, exps: Mapping[Poly, int]) -> "Frac":
        """``const * prod(form**e)`` with exponents of either sign."""
        c = Fraction(const)
        num = Poly.const(nvars, 1)
        den: dict[Poly, int] = {}
        fac: dict[Poly, int] = {}
        for f, e in exps.items():
            if not e:
                continue
            k, g = normalize_form(f)
            c *= k ** e
            fac[g] = fac.get(g, 0) + e
        for g, e in fac.items():
            if e > 0:
                num = num * g ** e
            elif e < 0:
                den[g] = -e
        fac = {g: e for g, e in fac.items() if e}
        return cls(num * c, den, (c, fac))

    # -- protocol ------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def _coerce(self, other: object) -> "Frac":
        if isinstance(other, Frac):
            return other
        if isinstance(other, Poly):
            return Frac(other)
        if isinstance(other, (int, Fraction)):
            return Frac(Poly.const(self.nvars, other))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Frac":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        den = dict(self.den)
        for f, e in o.den.items():
            den[f] = max(den.get(f, 0), e)
        a = self.num
        for f, e in den.items():
            k = e - self.den.get(f, 0)
            if k:
                a = a * f ** k
        b = o.num
        for f, e in den.items():
            k = e - o.den.get(f, 0)
            if k:
                b = b * f ** k
        return Frac(a + b, den)

    __radd__ = __add__

    def __neg__(self) -> "Frac":
        fac = None
        if self.factors is not None:
            fac = (-self.factors[0], self.factors[1])
        return Frac(-self.num, self.den, fac)

    def __sub__(self, other: object) -> "Frac":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Frac":
        return (-self) + other

    def __mul__(self, other: object) -> "Frac":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        den = dict(self.den)
        for f, e in o.den.items():
            den[f] = den.get(f, 0) + e
        fac = None
        fa, fb = self.factor_numerator(), o.factor_numerator()
        if fa is not None and fb is not None:
            d = dict(fa[1])
            for f, e in fb[1].items():
                d[f] = d.get(f, 0) + e
            fac = (fa[0] * fb[0], {f: e for f, e in d.items() if e})
        return Frac(self.num * o.num, den, fac)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Frac":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, frozenset(self.den.items())))

    def __repr__(self) -> str:
        return f"Frac({self.to_str()})"

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- structure -----------------------------------------------------

    def is_poly(self) -> bool:
        return not self.den

    def as_poly(self) -> Poly:
        if self.den:
            raise ValueError(f"{self} has a nontrivial denominator")
        return self.num

    def factor_numerator(self) -> tuple[Fraction, dict[Poly, int]] | None:
        """Splitting of the whole element into linear forms, if known.

        Returns ``(c, exps)`` with ``self == c * prod(form**e)``.
        """
        if self.factors is not None:
            return self.factors
        if self.num.is_constant():
            d = {f: -e for f, e in self.den.items()}
            return Fraction(self.num.constant_value()), d
        if len(self.num.terms) == 1:
            (m, c), = self.num.terms.items()
            d = {f: -e for f, e in self.den.items()}
            for i, e in enumerate(m):
                if e:
                    v = Poly.var(self.nvars, i)
                    d[v] = d.get(v, 0) + e
            return Fraction(c), d
        return None

    def inverse(self, hints: Iterable[Poly] = ()) -> "Frac":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        fac = self.factor_numerator()
        if fac is None:
            fac = _split_by_hints(self, hints)
        if fac is None:
            raise ValueError(f"cannot invert {self}: numerator does not split over the known forms")
        c, exps = fac
        return Frac.from_factors(self.nvars, 1 / c, {f: -e for f, e in exps.items()})

    def valuation(self, form: Poly) -> int:
        _, g = normalize_form(form)
        return self.num.valuation(g) - self.den.get(g, 0)

    def divisible_by(self, form: Poly, power: int = 1) -> bool:
        """Membership in ``form**power`` times the localisation avoiding the denominator."""
        if self.num.is_zero():
            return True
        return self.valuation(form) >= power

    def in_localization(self, form: Poly) -> bool:
        _, g = normalize_form(form)
        return g not in self.den

    def substitute(self, images: Sequence[Poly]) -> "Frac":
        num = self.num.substitute(images)
        den: dict[Poly, int] = {}
        for f, e in self.den.items():
            g = f.substitute(images)
            if g.is_zero():
                raise ZeroDivisionError(f"denominator {f} vanishes under substitution")
            if g.is_constant():
                num = num * (Fraction(1) / g.constant_value()) ** e
                continue
            den[g] = den.get(g, 0) + e
        fac = None
        if self.factors is not None:
            c, exps = self.factors
            d: dict[Poly, int] = {}
            ok = True
            for f, e in exps.items():
                g = f.substitute(images)
                if g.is_zero():
                    ok = False
                    break
                if g.is_constant():
                    c = c * Fraction(g.constant_value()) ** e
                    continue
                k, g = normalize_form(g)
                c = c * k ** e
                d[g] = d.get(g, 0) + e
            if ok:
                fac = (c, {f: e for f, e in d.items() if e})
        return Frac(num, den, fac)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        n = self.num.to_str(names)
        if not self.den:
            return n
        parts = []
        for f in sorted(self.den, key=_form_key, reverse=True):
            e = self.den[f]
            s = f"({f.to_str(names)})"
            parts.append(s if e == 1 else f"{s}^{e}")
        return f"({n})/({'*'.join(parts)})"


def _split_by_hints(x: Frac, hints: Iterable[Poly]) -> tuple[Fraction, dict[Poly, int]] | None:
    cands = list(x.den)
    for h in hints:
        _, g = normalize_form(h)
        if g not in cands:
            cands.append(g)
    num = x.num
    exps = {f: -e for f, e in x.den.items()}
    progress = True
    while not num.is_constant() and progress:
        progress = False
        for g in cands:
            q = num.divexact(g)
            if q is not None:
                num = q
                exps[g] = exps.get(g, 0) + 1
                progress = True
                break
    if not num.is_constant():
        return None
    return Fraction(num.constant_value()), {f: e for f, e in exps.items() if e}


def as_frac(x: "Poly | Frac") -> Frac:
    return x if isinstance(x, Frac) else Frac(x)


def specialize_delta_zero(x: "Poly | Frac") -> "Poly | Frac":
    """Set the affine variable (the last one) to zero."""
    if isinstance(x, Poly):
        n = x.nvars
        return Poly._raw(n, {m: c for m, c in x.terms.items() if m[n - 1] == 0})
    n = x.nvars
    images = [Poly.var(n, i) for i in range(n - 1)] + [Poly(n)]
    return x.substitute(images)


# -- the coefficient ring attached to a root datum --------------------


class PolyRing:
    """``Q[y_1..y_r, delta]`` for a datum; ``y_i`` is the simple coroot ``alpha_i^vee``."""

    def __init__(self, datum: "RootDatum"):
        self.datum = datum
        self.rank = datum.rank
        self.nvars = datum.rank + 1
        self.names = default_names(self.nvars)

    def zero(self) -> Poly:
        return Poly(self.nvars)

    def one(self) -> Poly:
        return Poly.const(self.nvars, 1)

    def const(self, c: Coeff) -> Poly:
        return Poly.const(self.nvars, c)

    def y(self, i: int) -> Poly:
        return Poly.var(self.nvars, i)

    @property
    def delta(self) -> Poly:
        return Poly.var(self.nvars, self.rank)

    def coroot_form(self, coroot: Sequence[int], delta_coeff: Coeff = 0) -> Poly:
        return Poly.linear(list(coroot) + [delta_coeff])

    def linear_form(self, gamma: "AffineCoroot") -> Poly:
        """``beta^vee + n l delta`` as ``sum c_i y_i + n l delta``."""
        return self.coroot_form(gamma.coroot, gamma.level * self.datum.l)

    def root_form(self, beta: Sequence[int]) -> Poly:
        """The ring image of a root: ``beta -> d_beta * beta^vee``."""
        d = self.datum
        cb = d.coroot_of(tuple(beta))
        return self.coroot_form(cb) * d.d_of(tuple(beta))

    def parse(self, text: str) -> Poly:
        return parse_poly(text, self.names)

    def fmt(self, x: "Poly | Frac") -> str:
        return x.to_str(self.names)

    def action_images(self, group: "AffineWeylGroup", x: "AffineElement") -> list[Poly]:
        """Images of the variables under the linear action of ``x``."""
        imgs = []
        for i in range(self.rank):
            simple = tuple(int(j == i) for j in range(self.rank))
            cor, dcoeff = group.linear_apply_raw(x, simple, 0)
            imgs.append(self.coroot_form(cor, dcoeff))
        imgs.append(self.delta)
        return imgs

    def act(self, group: "AffineWeylGroup", x: "AffineElement", p: "Poly | Frac") -> "Poly | Frac":
        """Ring automorphism extending the linear action on coroot forms."""
        return p.substitute(self.action_images(group, x))

    def specialize(self, x: "Poly | Frac") -> "Poly | Frac":
        return specialize_delta_zero(x)

    def valuation_at(self, p: "Poly | Frac", form: Poly) -> int:
        if isinstance(p, Poly):
            if p.is_zero():
                raise ValueError("infinite valuation of the zero polynomial")
            _, g = normalize_form(form)
            return p.valuation(g)
        if p.num.is_zero():
            raise ValueError("infinite valuation of zero")
        return p.valuation(form)

    def in_localization(self, f: "Poly | Frac", beta: Sequence[int]) -> bool:
        """Is ``f`` in the localisation at the prime generated by the root ``beta``?"""
        if isinstance(f, Poly):
            return True
        return f.in_localization(self.root_form(beta))


def weyl_act_poly(ring: PolyRing, group: "AffineWeylGroup", x: "AffineElement", p: "Poly | Frac") -> "Poly | Frac":
    return ring.act(group, x, p)


def linear_form(ring: PolyRing, gamma: "AffineCoroot") -> Poly:
    return ring.linear_form(gamma)


def valuation_at(p: "Poly | Frac", form: Poly) -> int:
    if isinstance(p, Poly):
        _, g = normalize_form(form)
        return p.valuation(g)
    return p.valuation(form)
