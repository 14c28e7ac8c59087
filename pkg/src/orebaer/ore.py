"""Left-coefficient skew polynomials in R[x; sigma, delta].

A polynomial is a normalised tuple of coefficient indices, low degree first.
Multiplication distributes (a x^i)(b x^j) = a * sum_l f_l^i(b) x^(l+j).
"""

from __future__ import annotations

import numpy as np

from . import expr as _expr
from .errors import BudgetExceeded, ContextMismatch

DEFAULT_BUDGET = 2 * 10**7
_CHUNK = 1 << 16


class _NegInf:
    """Degree of the zero polynomial. Orders below every integer; supports no arithmetic."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-inf"

    __str__ = __repr__


NEG_INF = _NegInf()


class OrePoly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        zero = ctx.ring.zero
        c = [int(x) for x in coeffs]
        while c and c[-1] == zero:
            c.pop()
        self.ctx = ctx
        self.coeffs = tuple(c)

    # constructors ------------------------------------------------------------

    @classmethod
    def constant(cls, ctx, r):
        return cls(ctx, [int(r)])

    @classmethod
    def monomial(cls, ctx, r, k):
        return cls(ctx, [ctx.ring.zero] * k + [int(r)])

    @classmethod
    def x(cls, ctx):
        return cls.monomial(ctx, ctx.ring.one, 1)

    @classmethod
    def parse(cls, ctx, text):
        """Parse a coefficient-list literal such as ``"[t, 0, t]"`` (low to high degree)."""
        return cls(ctx, [_expr.evaluate(node, ctx.ring) for node in _expr.parse_poly(text)])

    # basic structure ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ctx.ring.zero

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ctx.ring.zero

    def padded(self, length):
        z = self.ctx.ring.zero
        return self.coeffs + (z,) * (length - len(self.coeffs))

    def _same(self, other):
        if not isinstance(other, OrePoly):
            raise TypeError(f"expected OrePoly, got {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise ContextMismatch("polynomials from different Ore extensions")

    # arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        self._same(other)
        add = self.ctx.ring.add_list
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.padded(n), other.padded(n)
        return OrePoly(self.ctx, [add[x][y] for x, y in zip(a, b)])

    def __neg__(self):
        neg = self.ctx.ring.neg_list
        return OrePoly(self.ctx, [neg[x] for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return ore_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def literal(self):
        names = self.ctx.ring.elem_names
        return "[" + ",".join(names[c] for c in (self.coeffs or (self.ctx.ring.zero,))) + "]"

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return f"OrePoly({self.literal()})"

    def pretty(self):
        """Human form, e.g. ``t*x^2 + x``."""
        ring = self.ctx.ring
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == ring.zero:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            name = ring.name(c)
            if not mono:
                terms.append(name)
            elif c == ring.one:
                terms.append(mono)
            else:
                terms.append(f"({name})*{mono}" if "+" in name else f"{name}*{mono}")
        return " + ".join(terms) if terms else "0"


def ore_add(p, q):
    return p + q


def ore_neg(p):
    return -p


def ore_eq(p, q):
    p._same(q)
    return p == q


def ore_mul(p, q):
    """Product in R[x; sigma, delta]."""
    p._same(q)
    ctx = p.ctx
    ring = ctx.ring
    if not p.coeffs or not q.coeffs:
        return OrePoly(ctx)
    add, mul, zero = ring.add_list, ring.mul_list, ring.zero
    F = ctx.f_lists
    out = [zero] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == zero:
            continue
        Fi = F[i]
        arow = mul[a]
        for j, b in enumerate(q.coeffs):
            if b == zero:
                continue
            for l in range(i + 1):
                c = arow[Fi[l][b]]
                out[l + j] = add[out[l + j]][c]
    return OrePoly(ctx, out)


def monomial_shift(ctx, n, r):
    """x^n r written with left coefficients: sum_i f_i^n(r) x^i."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return OrePoly(ctx, [int(ctx.f(i, n)[int(r)]) for i in range(n + 1)])


def x_times(p):
    """x * p computed directly from x a = sigma(a) x + delta(a)."""
    ctx = p.ctx
    ring = ctx.ring
    s, d = ctx.sigma.image_list, ctx.delta.image_list
    out = [ring.zero] * (len(p.coeffs) + 1)
    for k, a in enumerate(p.coeffs):
        out[k + 1] = ring.add(out[k + 1], s[a])
        out[k] = ring.add(out[k], d[a])
    return OrePoly(ctx, out)


def batch_mul(ctx, A, B):
    """Vectorised products of coefficient arrays.

    ``A[..., i]`` and ``B[..., j]`` are coefficient indices; leading axes
    broadcast. Returns the (unnormalised) product coefficients.
    """
    ring = ctx.ring
    A = np.asarray(A)
    B = np.asarray(B)
    dp, dq = A.shape[-1] - 1, B.shape[-1] - 1
    shape = np.broadcast_shapes(A.shape[:-1], B.shape[:-1])
    out = np.full(shape + (dp + dq + 1,), ring.zero, dtype=np.int64)
    add, mul = ring.add_table, ring.mul_table
    for i in range(dp + 1):
        a = A[..., i]
        for j in range(dq + 1):
            b = B[..., j]
            for l in range(i + 1):
                out[..., l + j] = add[out[..., l + j], mul[a, ctx.f(l, i)[b]]]
    return out


def coefficient_block(n, width, start, stop):
    """Coefficient arrays for candidate numbers ``start..stop-1`` (low degree varies fastest)."""
    idx = np.arange(start, stop, dtype=np.int64)
    return np.stack([(idx // n**k) % n for k in range(width)], axis=-1)


def idempotent_search(ctx, max_degree, budget=DEFAULT_BUDGET):
    """All e of degree <= max_degree with e*e = e, by exhaustive enumeration."""
    n = ctx.ring.order
    width = max_degree + 1
    total = n**width
    if total > budget:
        raise BudgetExceeded(total, budget)
    found = []
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        E = coefficient_block(n, width, start, stop)
        sq = batch_mul(ctx, E, E)
        pad = np.full((len(E), width - 1), ctx.ring.zero, dtype=np.int64)
        ok = (sq == np.concatenate([E, pad], axis=1)).all(axis=1)
        for row in E[ok]:
            found.append(OrePoly(ctx, row.tolist()))
    return found
