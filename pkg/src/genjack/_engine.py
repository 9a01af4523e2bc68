"""Pruned evaluation of the transition-matrix permutation sums.

Positions a = 0..n-1 follow the canonical box order of the restricted-weight
source; each position receives a distinct box of the weight source.  The
enumeration is a depth-first search that

* drops a branch as soon as a numerator factor is identically zero,
* keeps only one permutation per coset of the stabilizer of the restricted
  weights (boxes increasing inside each block of equal weight), which
  replaces the 1/z prefactor,
* clears denominators up front: every root factor of a summand divides the
  fixed product L of all root forms, so each leaf contributes the polynomial
  numerator * (L / denominator) and the entry is (sum of leaves) / L.

Every factor is a linear form in (t1, t2, u) with u-coefficients summing to
zero.  Symbolic sums run in the chart t1 = 1, u_r = 0, which loses no
information for such homogeneous, translation-invariant forms, and are mapped
back at the end.
"""
from fractions import Fraction
from math import lcm

import flint

from .partitions import boxes
from .ring import NonGenericAssignment, PoleError, RingElem, Specialized, context


def _sign(u_first: int, u_second: int, t1c: int, chamber: int) -> int:
    # sign of u_{first} - u_{second} + t1c * t1 on the chamber
    if u_first != u_second:
        return chamber if u_first < u_second else -chamber
    return chamber * ((t1c > 0) - (t1c < 0))


def _sub(p, q):
    return tuple(x - y for x, y in zip(p, q))


def _add(p, q):
    return tuple(x + y for x, y in zip(p, q))


class _Setup:
    """Per-entry tables; forms are tuples (t1, t2, u1, ..., ur)."""

    def __init__(self, phi_src, rho_src, chamber: int):
        r = len(phi_src)
        self.r = r
        A = boxes(phi_src)
        B = boxes(rho_src)
        n = self.n = len(A)
        nv = r + 2
        self.zero = (0,) * nv
        hbar = (1, 1) + (0,) * r

        def phi(box):
            v = [box.x, box.y] + [0] * r
            v[2 + box.component] = 1
            return tuple(v)

        self.hbar = hbar
        sub, add, star = _sub, _add, self.star

        ph = [phi(b) for b in A]
        rk = [(b.component, b.x - b.y) for b in B]
        t1 = (1, 0) + (0,) * r

        # exponents from restricted weights
        epair = [[_sign(rk[b][0], rk[a][0], rk[b][1] - rk[a][1] + 1, chamber)
                  for b in range(n)] for a in range(n)]
        ecol = [[_sign(d, rk[a][0], -rk[a][1], chamber) if d != rk[a][0]
                 else chamber * ((-rk[a][1] > 0) - (-rk[a][1] < 0))
                 for a in range(n)] for d in range(r)]

        # diagonal factors star(t1, chamber) are the same for every permutation
        self.diag = star(t1, epair[0][0]) if n else None
        units = sum(1 for a in range(n) for b in range(n) if a != b and epair[a][b] == 0)
        units += sum(1 for d in range(r) for a in range(n) if ecol[d][a] == 0)
        den_pairs = sum(1 for a in range(n) for b in range(a) if rk[a] != rk[b])
        # homogeneous degree of the entry: nonunit numerator factors minus root factors
        self.degree = n * n + r * n - units - 2 * den_pairs

        # color factors: col[a][j] -> tuple of forms, or None when one vanishes identically
        self.col = []
        for a in range(n):
            row = []
            for j in range(n):
                forms = []
                dead = False
                for d in range(r):
                    ud = [0] * nv
                    ud[2 + d] = 1
                    f = star(sub(tuple(ud), ph[j]), ecol[d][a])
                    if f is None:
                        continue
                    if f == self.zero:
                        dead = True
                        break
                    forms.append(f)
                row.append(None if dead else tuple(forms))
            self.col.append(row)

        # root forms per unordered box pair i < j: delta, delta + hbar, -delta + hbar
        self.lforms = []
        pair_forms = {}
        for i in range(n):
            for j in range(i + 1, n):
                delta = sub(ph[i], ph[j])
                P = add(delta, hbar)
                M = sub(hbar, delta)
                pair_forms[i, j] = (delta, P, M)
                self.lforms.extend(f for f in (delta, P, M) if f != self.zero)

        self._ph, self._rk, self._epair, self._t1 = ph, rk, epair, t1
        self._pair_forms, self._chamber = pair_forms, chamber

        # equal-weight blocks: position a continues the block of a - 1
        self.chain = [a > 0 and rk[a] == rk[a - 1] for a in range(n)]

    def star(self, form, e):
        if e > 0:
            return form
        if e < 0:
            return _sub(self.hbar, form)
        return None  # unit factor

    def pair(self, a: int, b: int, i: int, j: int):
        """Factors for box i at earlier position b and box j at later position a.

        Returns (forms, sign, pole) or None when a numerator factor vanishes.
        """
        ph, t1, add, sub, star = self._ph, self._t1, _add, _sub, self.star
        f1 = star(add(sub(ph[j], ph[i]), t1), self._epair[b][a])
        f2 = star(add(sub(ph[i], ph[j]), t1), self._epair[a][b])
        if f1 == self.zero or f2 == self.zero:
            return None
        forms = [f for f in (f1, f2) if f is not None]
        lo, hi = min(i, j), max(i, j)
        delta, P, M = self._pair_forms[lo, hi]
        if self._rk[a] == self._rk[b]:
            forms.extend(f for f in (delta, P, M) if f != self.zero)
            return tuple(forms), 1, False
        first = j if self._chamber < 0 else i
        if first == lo:
            # denominator delta * P, complement M
            if M != self.zero:
                forms.append(M)
            return tuple(forms), 1, P == self.zero
        # denominator (-delta) * M, complement -P
        if P != self.zero:
            forms.append(P)
        return tuple(forms), -1, M == self.zero


_DEAD = object()


def _search(setup: _Setup, one, product):
    """Depth-first sum over coset representatives (None if every leaf is pruned).

    ``product`` maps a tuple of forms to the value of their product.  Pair
    factors are built lazily and memoised, so each tree node costs one
    multiplication per earlier position.
    """
    n = setup.n
    col = [[None if fs is None else product(fs) for fs in row] for row in setup.col]
    memo = {}

    def pair(a, b, i, j):
        key = (a, b, i, j)
        e = memo.get(key)
        if e is None:
            raw = setup.pair(a, b, i, j)
            if raw is None:
                e = _DEAD
            else:
                fs, sg, pole = raw
                v = product(fs)
                e = (-v if sg < 0 else v, pole)
            memo[key] = e
        return e

    chain = setup.chain
    acc = [None]
    assigned = [0] * n
    used = [False] * n

    def visit(a, partial, poles):
        if a == n:
            if poles:
                raise PoleError("summand with an identically vanishing root factor")
            acc[0] = partial if acc[0] is None else acc[0] + partial
            return
        start = assigned[a - 1] + 1 if chain[a] else 0
        for j in range(start, n):
            if used[j] or col[a][j] is None:
                continue
            val = partial * col[a][j]
            p = poles
            for b in range(a):
                e = pair(a, b, assigned[b], j)
                if e is _DEAD:
                    break
                val = val * e[0]
                p += e[1]
            else:
                used[j] = True
                assigned[a] = j
                visit(a + 1, val, p)
                used[j] = False

    visit(0, one, 0)
    return acc[0]


def _int_point(point):
    """Scale an assignment to integers: returns (ints, common denominator)."""
    vals = (point.t1, point.t2, *point.u)
    q = lcm(*(v.denominator for v in vals))
    return tuple(int(v * q) for v in vals), q


def envelope_sum(phi_src, rho_src, chamber: int, dom):
    setup = _Setup(phi_src, rho_src, chamber)
    if setup.n == 0:
        return dom.one
    if isinstance(dom, Specialized):
        return _numeric(setup, dom)
    return _symbolic(setup, dom)


def _numeric(setup: _Setup, dom):
    ints, q = _int_point(dom.point)
    cache = {}

    def value(form):
        v = cache.get(form)
        if v is None:
            v = sum(c * x for c, x in zip(form, ints))
            if v == 0:
                raise NonGenericAssignment(f"linear form {form} vanishes at the chosen point")
            cache[form] = v
        return v

    def product(forms):
        out = 1
        for f in forms:
            out *= value(f)
        return out

    total = _search(setup, 1, product)
    if total is None:
        return Fraction(0)
    L = 1
    for f in setup.lforms:
        L *= value(f)
    total *= value(setup.diag) ** setup.n
    return Fraction(total, L) / Fraction(q) ** setup.degree


def _symbolic(setup: _Setup, dom):
    r = setup.r
    # chart variables: t2, u1 - ur, ..., u_{r-1} - ur
    names = ("t2",) + tuple(f"v{i}" for i in range(1, r))
    cctx = flint.fmpz_mpoly_ctx.get(names, "deglex")
    gens = cctx.gens()
    cache = {}

    def chart(form):
        p = cache.get(form)
        if p is None:
            if sum(form[2:]) != 0:
                raise ValueError(f"form {form} is not translation invariant")
            p = cctx.constant(form[0])
            if form[1]:
                p = p + form[1] * gens[0]
            for i in range(r - 1):
                if form[2 + i]:
                    p = p + form[2 + i] * gens[1 + i]
            cache[form] = p
        return p

    def product(forms):
        out = cctx.constant(1)
        for f in forms:
            out = out * chart(f)
        return out

    total = _search(setup, cctx.constant(1), product)
    if total is None or total.is_zero():
        return dom.zero
    total = total * chart(setup.diag) ** setup.n
    den = cctx.constant(1)
    for f in setup.lforms:
        g = chart(f)
        quo, rem = divmod(total, g)
        if rem.is_zero():
            total = quo
        else:
            den = den * g
    if not den.is_constant():
        g = total.gcd(den)
        total, den = total / g, den / g
    return _rehomogenize(total, den, setup.degree, r)


def _rehomogenize(num, den, degree: int, r: int) -> RingElem:
    """Undo the chart t1 = 1, u_r = 0 for a function of homogeneous ``degree``."""
    ctx = context(r)

    def lift(p):
        d = p.total_degree()
        out = {}
        for exps, c in p.to_dict().items():
            # exps = (t2, v1, ..., v_{r-1}); v_i = u_i - u_r expands binomially
            e = [0] * (r + 2)
            e[0] = d - sum(int(x) for x in exps)
            e[1] = int(exps[0])
            out[tuple(e), tuple(int(x) for x in exps[1:])] = int(c)
        poly = ctx.constant(0)
        t1, t2 = ctx.gen(0), ctx.gen(1)
        us = [ctx.gen(2 + i) for i in range(r)]
        for (e, vexp), c in out.items():
            term = ctx.constant(c) * t1 ** e[0] * t2 ** e[1]
            for i, k in enumerate(vexp):
                if k:
                    term = term * (us[i] - us[r - 1]) ** k
            poly = poly + term
        return poly, d

    pn, dn = lift(num)
    pd, dd = lift(den)
    shift = degree - dn + dd
    t1 = ctx.gen(0)
    if shift >= 0:
        pn = pn * t1 ** shift
    else:
        pd = pd * t1 ** (-shift)
    return RingElem(pn, pd, r)
