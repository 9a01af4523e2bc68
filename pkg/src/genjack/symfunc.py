"""The colored Fock space Q(t, u)[p_k^(i)].

A ``ColoredPoly`` maps colored power-sum monomials to coefficients.  A
monomial prod_i prod_j p_{(mu_i)_j}^{(i)} is keyed by the multipartition
``mu = (mu_1, ..., mu_r)``.  Coefficients may be ``RingElem`` (symbolic),
``Fraction`` (specialized or purely numeric), or a mixture of the two since
rationals promote into ``RingElem`` on contact.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .partitions import MultiPartition, Partition, length, partitions, size, sort_key


def _merge(a: Partition, b: Partition) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


class ColoredPoly:
    """Polynomial in the colored power sums with field coefficients."""

    __slots__ = ("terms", "rank")

    def __init__(self, terms=None, rank: int = 1):
        self.rank = rank
        self.terms = {}
        for mono, c in (terms or {}).items():
            if len(mono) != rank:
                raise ValueError(f"monomial {mono} does not have rank {rank}")
            if c:
                self.terms[mono] = c

    @classmethod
    def one(cls, rank: int, coeff=1) -> "ColoredPoly":
        return cls({((),) * rank: Fraction(coeff)}, rank)

    @classmethod
    def p(cls, color: int, k: int, rank: int) -> "ColoredPoly":
        """The single generator p_k^(color); ``color`` is 0-based."""
        mono = tuple((k,) if i == color else () for i in range(rank))
        return cls({mono: Fraction(1)}, rank)

    def _check(self, other: "ColoredPoly"):
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        if not isinstance(other, ColoredPoly):
            return self + ColoredPoly.one(self.rank, 1) * other
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out[mono] + c if mono in out else c
        return ColoredPoly(out, self.rank)

    __radd__ = __add__

    def __neg__(self):
        return ColoredPoly({m: -c for m, c in self.terms.items()}, self.rank)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ColoredPoly):
            if not other:
                return ColoredPoly({}, self.rank)
            return ColoredPoly({m: c * other for m, c in self.terms.items()}, self.rank)
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(_merge(a, b) for a, b in zip(m1, m2))
                c = c1 * c2
                out[mono] = out[mono] + c if mono in out else c
        return ColoredPoly(out, self.rank)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, scalar):
        return ColoredPoly({m: c / scalar for m, c in self.terms.items()}, self.rank)

    def __eq__(self, other):
        if isinstance(other, ColoredPoly):
            if other.rank != self.rank:
                return False
            diff = self - other
        else:
            diff = self - ColoredPoly.one(self.rank, 1) * other
        return not diff.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: MultiPartition):
        return self.terms.get(mono, 0)

    def items(self):
        """Terms in canonical monomial order."""
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def degrees(self) -> set[int]:
        return {size(m) for m in self.terms}

    def homogeneous_part(self, d: int) -> "ColoredPoly":
        return ColoredPoly({m: c for m, c in self.terms.items() if size(m) == d}, self.rank)

    def truncate(self, max_degree: int) -> "ColoredPoly":
        return ColoredPoly({m: c for m, c in self.terms.items() if size(m) <= max_degree}, self.rank)

    def map_coefficients(self, fn) -> "ColoredPoly":
        return ColoredPoly({m: fn(c) for m, c in self.terms.items()}, self.rank)

    def __repr__(self):
        body = " + ".join(f"({c})*p{list(map(list, m))}" for m, c in self.items()) or "0"
        return f"ColoredPoly[{self.rank}]({body})"


# ---------------------------------------------------------------- characters

def z(mu: Partition) -> int:
    """z_mu = prod_k k^{m_k} m_k!."""
    out = 1
    for k, m in Counter(mu).items():
        out *= k ** m * factorial(m)
    return out


def z_mp(mp: MultiPartition) -> int:
    out = 1
    for mu in mp:
        out *= z(mu)
    return out


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam(mu) by Murnaghan-Nakayama, removing rim hooks on beta-sets."""
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} have different sizes")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    n = len(lam)
    beta = [lam[i] + n - 1 - i for i in range(n)]
    present = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in present:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((present - {b}) | {target}, reverse=True)
        new_lam = tuple(v for v in (nb - (n - 1 - i) for i, nb in enumerate(new_beta)) if v > 0)
        total += (-1) ** height * mn_character(new_lam, rest)
    return total


@lru_cache(maxsize=None)
def schur(lam: Partition) -> ColoredPoly:
    """s_lam = sum_mu chi^lam(mu) p_mu / z_mu, one color."""
    n = sum(lam)
    return ColoredPoly({(mu,): Fraction(mn_character(lam, mu), z(mu)) for mu in partitions(n)}, 1)


@lru_cache(maxsize=None)
def colored_schur(mp: MultiPartition) -> ColoredPoly:
    """s_lam1(p^(1)) ... s_lamr(p^(r))."""
    factors = [schur(lam).terms for lam in mp]
    out = {}
    for combo in product(*(f.items() for f in factors)):
        mono = tuple(m[0] for m, _ in combo)
        c = Fraction(1)
        for _, v in combo:
            c *= v
        out[mono] = c
    return ColoredPoly(out, len(mp))


def scale_powersums(f: ColoredPoly, c) -> ColoredPoly:
    """p_k^(i) -> c p_k^(i) for every k and i."""
    return ColoredPoly({m: coef * c ** length(m) for m, coef in f.terms.items()}, f.rank)


def dual_schur(mp: MultiPartition, dom) -> ColoredPoly:
    """s*_mp, the colored Schur function at p_k -> (-t2/t1) p_k."""
    return scale_powersums(colored_schur(mp), -dom.t2 / dom.t1)


def color_reverse(f: ColoredPoly) -> ColoredPoly:
    return ColoredPoly({tuple(reversed(m)): c for m, c in f.terms.items()}, f.rank)


# ---------------------------------------------------------------- scalar product

def scalar_product(f: ColoredPoly, g: ColoredPoly, dom):
    """<p_mu, p_nu> = delta z_mu (-t1/t2)^{l(mu)}, extended bilinearly."""
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    ratio = -dom.t1 / dom.t2
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    total = dom.zero
    for mono, c in small.terms.items():
        other = big.terms.get(mono)
        if other:
            total = total + c * other * z_mp(mono) * ratio ** length(mono)
    return total


def derivative(f: ColoredPoly, color: int, k: int) -> ColoredPoly:
    """d/dp_k^(color), ``color`` 0-based."""
    out = {}
    for mono, c in f.terms.items():
        parts = mono[color]
        mult = parts.count(k)
        if not mult:
            continue
        reduced = list(parts)
        reduced.remove(k)
        new = mono[:color] + (tuple(reduced),) + mono[color + 1:]
        val = c * mult
        out[new] = out[new] + val if new in out else val
    return ColoredPoly(out, f.rank)


def multiply_p(f: ColoredPoly, color: int, k: int) -> ColoredPoly:
    out = {}
    for mono, c in f.terms.items():
        new = mono[:color] + (_merge(mono[color], (k,)),) + mono[color + 1:]
        out[new] = out[new] + c if new in out else c
    return ColoredPoly(out, f.rank)


def scalar_product_diff(f: ColoredPoly, g: ColoredPoly, dom):
    """Same pairing computed literally: p_k -> -k t1/t2 d/dp_k in f, applied to g, at p = 0."""
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    empty = ((),) * f.rank
    total = dom.zero
    for mono, c in f.terms.items():
        h = g
        scale = c
        for color, parts in enumerate(mono):
            for k in parts:
                h = derivative(h, color, k)
                scale = scale * (-k * dom.t1 / dom.t2)
        const = h.terms.get(empty)
        if const:
            total = total + scale * const
    return total


# ---------------------------------------------------------------- doubled variables

def tensor(f: ColoredPoly, g: ColoredPoly) -> ColoredPoly:
    """f(p) g(q) as a polynomial of rank f.rank + g.rank (p colors first)."""
    out = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            out[m1 + m2] = c1 * c2
    return ColoredPoly(out, f.rank + g.rank)


def cauchy_kernel(max_degree: int, r: int, dom) -> ColoredPoly:
    """exp(-t2/t1 sum_n sum_i p_n^(i) q_n^(i) / n) up to p-degree ``max_degree``.

    Expanding the exponential factor by factor gives
    sum_mu (-t2/t1)^{l(mu)} p_mu q_mu / z_mu.
    """
    from .partitions import multipartitions

    c = -dom.t2 / dom.t1
    out = {}
    for d in range(max_degree + 1):
        for mu in multipartitions(d, r):
            out[mu + mu] = c ** length(mu) / z_mp(mu)
    return ColoredPoly(out, 2 * r)


# ---------------------------------------------------------------- finite variables

def _xmul(a: dict, b: dict) -> dict:
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            c = c1 * c2
            out[e] = out[e] + c if e in out else c
    return {e: c for e, c in out.items() if c}


def powersum_from_variables(f: ColoredPoly, nvars) -> dict:
    """Substitute p_k^(i) = sum_m (x_m^(i))^k.

    ``nvars`` gives the number of variables per color (an int applies to every
    color).  The result is a dict from exponent tuples, colors laid out
    consecutively, to coefficients.
    """
    if isinstance(nvars, int):
        nvars = [nvars] * f.rank
    offsets = [sum(nvars[:i]) for i in range(f.rank)]
    total_vars = sum(nvars)
    zero = (0,) * total_vars

    @lru_cache(maxsize=None)
    def power_sum(color: int, k: int) -> tuple:
        terms = []
        for m in range(nvars[color]):
            e = [0] * total_vars
            e[offsets[color] + m] = k
            terms.append((tuple(e), 1))
        return tuple(terms)

    out = {}
    for mono, c in f.terms.items():
        acc = {zero: c}
        for color, parts in enumerate(mono):
            for k in parts:
                acc = _xmul(acc, dict(power_sum(color, k)))
        for e, v in acc.items():
            out[e] = out[e] + v if e in out else v
    return {e: c for e, c in out.items() if c}


# ---------------------------------------------------------------- Schur expansions

@dataclass
class SchurExpansion:
    """Coefficients in the basis s_mp (basis "s") or s*_mp (basis "s*")."""

    basis: str
    rank: int
    coeffs: dict = field(default_factory=dict)

    def to_powersum(self, dom) -> ColoredPoly:
        total = ColoredPoly({}, self.rank)
        for mp, c in self.coeffs.items():
            if not c:
                continue
            base = colored_schur(mp) if self.basis == "s" else dual_schur(mp, dom)
            total = total + base * c
        return total

    def items(self):
        return sorted(((m, c) for m, c in self.coeffs.items() if c), key=lambda kv: sort_key(kv[0]))

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion) or other.basis != self.basis:
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0) for k in keys)
