"""Transition matrices between Schur functions and generalized Jack polynomials.

Four kinds of matrix are computed from the same permutation sum:

* ``T``     J_lam  = sum_mu T[lam, mu] s_mu       (chamber c-, weights of mu)
* ``Tstar`` J*_lam = sum_mu T*[lam, mu] s*_mu     (chamber c+, weights of mu)
* ``U``     s_lam  = sum_nu U[lam, nu] J_nu / E_nu   (chamber c+, weights of lam)
* ``Ustar`` s*_lam = sum_nu U*[lam, nu] J*_nu / E_nu (chamber c-, weights of lam)

Every entry is (1/z) sum_{sigma in S_n} of a product of "starred" linear
characters divided by root factors; see ``permutation_term`` for one summand.
"""
import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import _engine
from .partitions import (Box, MultiPartition, arm, boxes, leg, multipartitions, size,
                         sort_key, sym_factor)
from .ring import Symbolic
from .symfunc import ColoredPoly, SchurExpansion

KINDS = ("T", "Tstar", "U", "Ustar")
VARIANTS = ("J", "Jstar")


class Chamber(enum.IntEnum):
    PLUS = 1  # u1 >> u2 >> ... >> ur >> t1 > 0
    MINUS = -1


@dataclass(frozen=True)
class Character:
    """Integer linear form sum_i u[i] u_{i+1} + t1 t1 + t2 t2."""

    u: tuple
    t1: int = 0
    t2: int = 0

    def _pad(self, other: "Character"):
        n = max(len(self.u), len(other.u))
        return (self.u + (0,) * (n - len(self.u)), other.u + (0,) * (n - len(other.u)))

    def __add__(self, other: "Character") -> "Character":
        a, b = self._pad(other)
        return Character(tuple(x + y for x, y in zip(a, b)), self.t1 + other.t1, self.t2 + other.t2)

    def __neg__(self) -> "Character":
        return Character(tuple(-x for x in self.u), -self.t1, -self.t2)

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def restrict(self) -> "Character":
        """Restriction to the torus t1 + t2 = 0 (t2 -> -t1)."""
        return Character(self.u, self.t1 - self.t2, 0)

    def is_zero(self) -> bool:
        return self.t1 == 0 and self.t2 == 0 and not any(self.u)

    def value(self, dom):
        ucoefs = self.u + (0,) * (dom.rank - len(self.u))
        if len(ucoefs) > dom.rank:
            if any(ucoefs[dom.rank:]):
                raise ValueError("character uses more u variables than the domain has")
            ucoefs = ucoefs[:dom.rank]
        return dom.linear(self.t1, self.t2, ucoefs)

    @classmethod
    def u_var(cls, d: int, r: int) -> "Character":
        """u_{d+1} for 0-based ``d``."""
        return cls(tuple(1 if i == d else 0 for i in range(r)))

    @classmethod
    def t(cls, t1: int = 0, t2: int = 0, r: int = 0) -> "Character":
        return cls((0,) * r, t1, t2)


def phi(box: Box, r: int) -> Character:
    """u_k + x t1 + y t2."""
    return Character(Character.u_var(box.component, r).u, box.x, box.y)


def rho(box: Box, r: int) -> Character:
    """u_k + (x - y) t1."""
    return phi(box, r).restrict()


def chamber_sign(ch: Character, chamber: Chamber) -> int:
    """Sign of a restricted character on a chamber (0 for the zero character).

    On c+ a u-difference dominates t1, and u_i - u_j with i < j is positive.
    """
    if ch.t2:
        raise ValueError(f"character {ch} is not restricted to t1 + t2 = 0")
    nonzero = [(i, c) for i, c in enumerate(ch.u) if c]
    if len(nonzero) > 2 or any(abs(c) != 1 for _, c in nonzero) or sum(c for _, c in nonzero):
        raise ValueError(f"chamber sign undefined for {ch}: need a difference u_a - u_b or no u")
    if nonzero:
        s = nonzero[0][1]
    else:
        s = (ch.t1 > 0) - (ch.t1 < 0)
    return s * int(chamber)


def star(x, a: int, dom):
    """x if a > 0, hbar - x if a < 0, 1 if a == 0."""
    if a > 0:
        return x
    if a < 0:
        return dom.hbar - x
    return dom.one


# ---------------------------------------------------------------- Euler classes

def euler_factor(lam, mu, u: Character, dom):
    """e_{lam,mu}(u) with arms/legs of one diagram measured in the other."""
    r = dom.rank
    out = dom.one
    for y, row in enumerate(lam):
        for x in range(row):
            b = (x, y)
            ch = u + Character.t(arm(lam, b) + 1, -leg(mu, b), r)
            out = out * ch.value(dom)
    for y, row in enumerate(mu):
        for x in range(row):
            b = (x, y)
            ch = u + Character.t(-arm(mu, b), leg(lam, b) + 1, r)
            out = out * ch.value(dom)
    return out


def euler_norm(lam: MultiPartition, mu: MultiPartition, dom):
    """E_{lam,mu} = prod_{i,j} e_{lam_i, mu_j}(u_i - u_j)."""
    if len(lam) != len(mu):
        raise ValueError("rank mismatch")
    r = len(lam)
    out = dom.one
    for i in range(r):
        for j in range(r):
            u = Character.u_var(i, r) - Character.u_var(j, r)
            out = out * euler_factor(lam[i], mu[j], u, dom)
    return out


# ---------------------------------------------------------------- permutation sum

def _roles(kind: str, lam: MultiPartition, mu: MultiPartition):
    """(weight source, restricted-weight source, chamber) for a matrix kind."""
    if kind == "T":
        return lam, mu, Chamber.MINUS
    if kind == "Tstar":
        return lam, mu, Chamber.PLUS
    if kind == "U":
        return mu, lam, Chamber.PLUS
    if kind == "Ustar":
        return mu, lam, Chamber.MINUS
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def permutation_term(kind: str, lam: MultiPartition, mu: MultiPartition, sigma, dom,
                     order_phi=None, order_rho=None):
    """One summand of the transition-matrix sum, evaluated literally.

    ``sigma`` is a permutation of range(n): position a receives the weight of
    box sigma[a] of the weight source.  ``order_phi``/``order_rho`` override the
    canonical box orders (used to test tie-break independence).
    """
    phi_src, rho_src, chamber = _roles(kind, lam, mu)
    if size(phi_src) != size(rho_src):
        raise ValueError("multipartitions of different sizes")
    r = len(lam)
    A = order_phi if order_phi is not None else boxes(phi_src)
    B = order_rho if order_rho is not None else boxes(rho_src)
    n = len(A)
    ph = [phi(A[sigma[a]], r) for a in range(n)]
    rh = [rho(B[a], r) for a in range(n)]
    t1 = Character.t(1, 0, r)

    num = dom.one
    for d in range(r):
        ud = Character.u_var(d, r)
        for a in range(n):
            num = num * star((ud - ph[a]).value(dom), chamber_sign(ud - rh[a], chamber), dom)
            if not num:
                return dom.zero
    for a in range(n):
        for b in range(n):
            e = chamber_sign(rh[b] - rh[a] + t1, chamber)
            num = num * star((ph[b] - ph[a] + t1).value(dom), e, dom)
            if not num:
                return dom.zero

    den = dom.one
    for a in range(n):
        for b in range(n):
            if rh[a] == rh[b]:
                continue
            if (chamber is Chamber.MINUS and a > b) or (chamber is Chamber.PLUS and a < b):
                diff = (ph[a] - ph[b]).value(dom)
                den = den * diff * (diff + dom.hbar)
    return num / den


def bruteforce_entry(kind: str, lam: MultiPartition, mu: MultiPartition, dom,
                     order_phi=None, order_rho=None):
    """(1/z) sum over all n! permutations of ``permutation_term``; no pruning."""
    phi_src, rho_src, _ = _roles(kind, lam, mu)
    n = size(lam)
    total = dom.zero
    for sigma in itertools.permutations(range(n)):
        total = total + permutation_term(kind, lam, mu, sigma, dom, order_phi, order_rho)
    return total / sym_factor(rho_src)


def entry(kind: str, lam: MultiPartition, mu: MultiPartition, dom=None):
    """A single transition-matrix entry via the pruned engine."""
    dom = Symbolic(len(lam)) if dom is None else dom
    phi_src, rho_src, chamber = _roles(kind, lam, mu)
    if size(lam) != size(mu):
        raise ValueError("multipartitions of different sizes")
    return _engine.envelope_sum(phi_src, rho_src, int(chamber), dom)


@dataclass
class TransitionMatrix:
    """Degree-n block of one transition matrix, rows and columns in canonical order."""

    kind: str
    rank: int
    degree: int
    index: list
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries[key]

    def row(self, lam) -> dict:
        return {mu: self.entries[lam, mu] for mu in self.index}

    def nonzero(self):
        return [(k, v) for k, v in self.entries.items() if v]

    def transposed_equals(self, other: "TransitionMatrix") -> bool:
        return all(self.entries[l, m] == other.entries[m, l] for l in self.index for m in self.index)


@lru_cache(maxsize=None)
def transition(kind: str, r: int, n: int, dom=None) -> TransitionMatrix:
    """Full degree-n block of ``kind`` for rank r (symbolic unless ``dom`` given)."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    dom = Symbolic(r) if dom is None else dom
    index = multipartitions(n, r)
    mat = TransitionMatrix(kind, r, n, index)
    for lam in index:
        for mu in index:
            mat.entries[lam, mu] = entry(kind, lam, mu, dom)
    return mat


# ---------------------------------------------------------------- Jack polynomials

def jack_schur(mp: MultiPartition, variant: str = "J", dom=None) -> SchurExpansion:
    """J_mp in the s basis, or J*_mp in the s* basis."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    r = len(mp)
    dom = Symbolic(r) if dom is None else dom
    kind = "T" if variant == "J" else "Tstar"
    mat = transition(kind, r, size(mp), dom)
    return SchurExpansion("s" if variant == "J" else "s*", r,
                          {mu: c for mu, c in mat.row(mp).items() if c})


def jack(mp: MultiPartition, variant: str = "J", dom=None) -> ColoredPoly:
    """J_mp or J*_mp as a polynomial in the colored power sums."""
    r = len(mp)
    dom = Symbolic(r) if dom is None else dom
    return jack_schur(mp, variant, dom).to_powersum(dom)


def jack_all(n: int, r: int, variant: str = "J", dom=None) -> dict:
    """{mp: J_mp} for every r-multipartition of n, in canonical order."""
    return {mp: jack(mp, variant, dom) for mp in sorted(multipartitions(n, r), key=sort_key)}
