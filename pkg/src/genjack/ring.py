"""Exact rational functions in t1, t2, u1, ..., ur.

``RingElem`` stores a numerator/denominator pair of integer polynomials
(python-flint ``fmpz_mpoly``) reduced by their gcd with a denominator whose
leading coefficient is positive.  That normal form makes equality a structural
comparison.

Two coefficient domains share one small interface (``t1``, ``t2``, ``hbar``,
``u``, ``linear``, ``const``): ``Symbolic`` produces ``RingElem`` values,
``Specialized`` produces ``Fraction`` values at a fixed random point.
"""
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import flint


class NonGenericAssignment(ArithmeticError):
    """A denominator vanished at a specialized point; retry with another point."""


class PoleError(ArithmeticError):
    """A substitution sends a denominator identically to zero."""


def var_names(r: int) -> tuple[str, ...]:
    return ("t1", "t2") + tuple(f"u{i}" for i in range(1, r + 1))


@lru_cache(maxsize=None)
def context(r: int):
    return flint.fmpz_mpoly_ctx.get(var_names(r), "deglex")


def _lift(p, r_from: int, r_to: int):
    if r_from == r_to:
        return p
    pad = (0,) * (r_to - r_from)
    return context(r_to).from_dict({e + pad: c for e, c in p.to_dict().items()})


def _monomial_key(exps):
    # graded lex with t1 < t2 < u1 < ... < ur
    return (sum(exps), tuple(reversed(exps)))


def _format_poly(p, names, key=_monomial_key) -> str:
    terms = sorted(p.to_dict().items(), key=lambda kv: key(kv[0]), reverse=True)
    if not terms:
        return "0"
    out = []
    for exps, c in terms:
        c = int(c)
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if factors:
            body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
        else:
            body = str(mag)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def _display_key(exps):
    # graded lex with t1 > t2 > u1 > ... > ur, the order used in printed tables
    return (sum(exps), tuple(exps))


def _format_factored(p, names) -> str:
    content, factors = p.factor()
    content = int(content)
    parts = []
    for f, e in sorted(factors, key=lambda fe: (fe[0].total_degree(), len(fe[0].to_dict()))):
        text = _format_poly(f, names, _display_key)
        if len(f.to_dict()) > 1:
            text = f"({text})"
        parts.append(text if e == 1 else f"{text}^{e}")
    if not parts:
        return str(content)
    body = "*".join(parts)
    if content == 1:
        return body
    if content == -1:
        return "-" + body
    return f"{content}*{body}"


class RingElem:
    """Element of Q(t1, t2, u1..ur) in reduced form.

    Elements of different rank combine by embedding the smaller variable set
    into the larger one.
    """

    __slots__ = ("num", "den", "rank", "_hash")

    def __init__(self, num, den=None, rank: int = 0, *, reduced: bool = False):
        ctx = context(rank)
        if isinstance(num, (int, Fraction)):
            q = Fraction(num)
            num, den = ctx.constant(q.numerator), ctx.constant(q.denominator)
        if den is None:
            den = ctx.constant(1)
        self.num, self.den, self.rank = num, den, rank
        self._hash = None
        if not reduced:
            self._reduce()

    def _reduce(self):
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.den = context(self.rank).constant(1)
            return
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num, den = num / g, den / g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        self.num, self.den = num, den

    # -- construction helpers
    @classmethod
    def const(cls, value, rank: int = 0) -> "RingElem":
        return cls(Fraction(value), rank=rank)

    @classmethod
    def var(cls, name: str, rank: int) -> "RingElem":
        ctx = context(rank)
        return cls(ctx.gen(var_names(rank).index(name)), rank=rank, reduced=True)

    @classmethod
    def linear(cls, t1c: int, t2c: int, ucoefs, rank: int) -> "RingElem":
        """t1c*t1 + t2c*t2 + sum_i ucoefs[i]*u_{i+1}."""
        nv = rank + 2
        terms = {}
        for idx, c in enumerate((t1c, t2c, *ucoefs)):
            if c:
                e = [0] * nv
                e[idx] = 1
                terms[tuple(e)] = c
        return cls(context(rank).from_dict(terms), rank=rank, reduced=True)

    def _coerce(self, other):
        if isinstance(other, RingElem):
            return other
        if isinstance(other, (int, Fraction)):
            return RingElem(other, rank=self.rank)
        return NotImplemented

    @staticmethod
    def _align(a: "RingElem", b: "RingElem"):
        if a.rank == b.rank:
            return a.num, a.den, b.num, b.den, a.rank
        r = max(a.rank, b.rank)
        return (_lift(a.num, a.rank, r), _lift(a.den, a.rank, r),
                _lift(b.num, b.rank, r), _lift(b.den, b.rank, r), r)

    # -- field operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d, r = self._align(self, other)
        if b.is_one() and d.is_one():
            return RingElem(a + c, d, r, reduced=True)
        if b == d:
            return RingElem(a + c, b, r)
        g = b.gcd(d)
        bg, dg = b / g, d / g
        return RingElem(a * dg + c * bg, b * dg, r)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(-self.num, self.den, self.rank, reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d, r = self._align(self, other)
        if b.is_one() and d.is_one():
            return RingElem(a * c, b, r, reduced=True)
        g1, g2 = a.gcd(d), c.gcd(b)
        return RingElem((a / g1) * (c / g2), (b / g2) * (d / g1), r)

    __rmul__ = __mul__

    def inverse(self) -> "RingElem":
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero element")
        return RingElem(self.den, self.num, self.rank)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RingElem(self.num ** k, self.den ** k, self.rank, reduced=True)

    # -- comparison
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d, _ = self._align(self, other)
        return a == c and b == d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(str(self))
        return self._hash

    # -- substitutions
    def compose(self, images: list) -> "RingElem":
        """Substitute integer polynomials for (t1, t2, u1, ..., ur)."""
        if len(images) != self.rank + 2:
            raise ValueError(f"expected {self.rank + 2} images, got {len(images)}")
        r = max([self.rank] + [im.rank for im in images])
        polys = []
        for im in images:
            if not im.den.is_one():
                raise ValueError("compose needs polynomial images with integer coefficients")
            polys.append(_lift(im.num, im.rank, r))
        ctx = context(r)
        num = self.num.compose(*polys, ctx=ctx)
        den = self.den.compose(*polys, ctx=ctx)
        if den.is_zero():
            raise PoleError("denominator vanishes identically after substitution")
        return RingElem(num, den, r)

    def specialize_hplane(self) -> "RingElem":
        """Restrict to t1 + t2 = 0 by t2 -> -t1."""
        r = self.rank
        t1 = RingElem.var("t1", r)
        return self.compose([t1, -t1] + [RingElem.var(f"u{i}", r) for i in range(1, r + 1)])

    def swap_t(self) -> "RingElem":
        r = self.rank
        return self.compose([RingElem.var("t2", r), RingElem.var("t1", r)]
                            + [RingElem.var(f"u{i}", r) for i in range(1, r + 1)])

    def reverse_u(self, r: int | None = None) -> "RingElem":
        """u_i -> u_{r+1-i}; ``r`` defaults to the element's own rank."""
        r = self.rank if r is None else r
        x = self if self.rank == r else RingElem(_lift(self.num, self.rank, r),
                                                  _lift(self.den, self.rank, r), r, reduced=True)
        return x.compose([RingElem.var("t1", r), RingElem.var("t2", r)]
                         + [RingElem.var(f"u{r + 1 - i}", r) for i in range(1, r + 1)])

    def evaluate(self, point: "Assignment") -> Fraction:
        values = (point.t1, point.t2, *point.u)
        if len(values) < self.rank + 2:
            raise ValueError("assignment has too few u values")
        den = _eval_poly(self.den, values)
        if den == 0:
            raise NonGenericAssignment("denominator vanishes at this point")
        return _eval_poly(self.num, values) / den

    # -- text
    def __str__(self):
        names = var_names(self.rank)
        num = _format_poly(self.num, names)
        if self.den.is_one():
            return num
        den = _format_poly(self.den, names)
        if len(self.num.to_dict()) > 1:
            num = f"({num})"
        if len(self.den.to_dict()) > 1 or not self.den.is_constant():
            den = f"({den})"
        return f"{num}/{den}"

    def factored(self) -> str:
        """Product form, e.g. ``-2*t2*(t1 - t2)*(t1 + t2)^2``; parses back to self."""
        names = var_names(self.rank)
        if self.is_zero():
            return "0"
        num = _format_factored(self.num, names)
        if self.den.is_one():
            return num
        den = _format_factored(self.den, names)
        return f"({num})/({den})"

    def __repr__(self):
        return f"RingElem({str(self)!r})"


def _eval_poly(p, values) -> Fraction:
    total = Fraction(0)
    for exps, c in p.to_dict().items():
        term = Fraction(int(c))
        for v, e in zip(values, exps):
            if e:
                term *= v ** int(e)
        total += term
    return total


def gens(r: int):
    """(t1, t2, [u1, ..., ur]) as ``RingElem``."""
    return (RingElem.var("t1", r), RingElem.var("t2", r),
            [RingElem.var(f"u{i}", r) for i in range(1, r + 1)])


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(t1|t2|u\d+)|(.))")


def parse(text: str, rank: int | None = None) -> RingElem:
    """Parse the canonical text form (and any +,-,*,/,^,() expression)."""
    tokens = []
    for m in _TOKEN.finditer(text):
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("n", int(num)))
        elif name is not None:
            tokens.append(("v", name))
        elif op is not None and not op.isspace():
            if op not in "+-*/^()":
                raise ValueError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("o", op))
    if rank is None:
        rank = max([int(v[1:]) for kind, v in tokens if kind == "v" and v.startswith("u")], default=0)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("o", "+"), ("o", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in (("o", "*"), ("o", "/")):
            op = take()[1]
            rhs = unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary():
        if peek() == ("o", "-"):
            take()
            return -unary()
        if peek() == ("o", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("o", "^"):
            take()
            kind, e = take()
            if kind != "n":
                raise ValueError(f"exponent must be an integer in {text!r}")
            return base ** e
        return base

    def atom():
        kind, val = take()
        if kind == "n":
            return RingElem(val, rank=rank)
        if kind == "v":
            return RingElem.var(val, rank)
        if (kind, val) == ("o", "("):
            inner = expr()
            if take() != ("o", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    if not tokens:
        raise ValueError("empty expression")
    out = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return out


# ---------------------------------------------------------------- domains

@dataclass(frozen=True)
class Assignment:
    """Rational values for t1, t2, u1..ur."""

    t1: Fraction
    t2: Fraction
    u: tuple

    def __post_init__(self):
        if self.t1 == 0 or self.t2 == 0:
            raise ValueError("t1 and t2 must be nonzero")

    @classmethod
    def random(cls, r: int, seed=None) -> "Assignment":
        rng = random.Random(seed)

        def draw():
            while True:
                v = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 997))
                if v:
                    return v

        t1, t2 = draw(), draw()
        while t1 + t2 == 0:
            t2 = draw()
        return cls(t1, t2, tuple(draw() for _ in range(r)))

    def to_json(self) -> dict:
        return {"t1": str(self.t1), "t2": str(self.t2), "u": [str(v) for v in self.u]}

    @classmethod
    def from_json(cls, data: dict) -> "Assignment":
        return cls(Fraction(data["t1"]), Fraction(data["t2"]), tuple(Fraction(v) for v in data["u"]))


class Symbolic:
    """Coefficient domain of exact rational functions."""

    def __init__(self, r: int):
        self.rank = r
        self.t1, self.t2, u = gens(r)
        self.u = tuple(u)
        self.hbar = self.t1 + self.t2
        self.zero = RingElem(0, rank=r)
        self.one = RingElem(1, rank=r)
        self.key = ("symbolic", r)

    def const(self, q) -> RingElem:
        return RingElem(Fraction(q), rank=self.rank)

    def linear(self, t1c: int, t2c: int, ucoefs) -> RingElem:
        return RingElem.linear(t1c, t2c, ucoefs, self.rank)

    def convert(self, x):
        """Bring a RingElem or rational into this domain."""
        if isinstance(x, RingElem):
            return x
        return self.const(x)

    def __eq__(self, other):
        return isinstance(other, Symbolic) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Symbolic({self.rank})"


class Specialized:
    """Coefficient domain of rationals: every parameter replaced by a value."""

    def __init__(self, point: Assignment):
        self.rank = len(point.u)
        self.point = point
        self.t1, self.t2, self.u = point.t1, point.t2, tuple(point.u)
        self.hbar = self.t1 + self.t2
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.key = ("specialized", point)

    @classmethod
    def random(cls, r: int, seed=None) -> "Specialized":
        return cls(Assignment.random(r, seed))

    def const(self, q) -> Fraction:
        return Fraction(q)

    def linear(self, t1c: int, t2c: int, ucoefs) -> Fraction:
        return t1c * self.t1 + t2c * self.t2 + sum(c * v for c, v in zip(ucoefs, self.u))

    def convert(self, x):
        if isinstance(x, RingElem):
            return x.evaluate(self.point)
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, Specialized) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Specialized(rank={self.rank})"
