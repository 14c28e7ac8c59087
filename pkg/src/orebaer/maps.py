"""Endomorphisms, sigma-derivations and the word operators f_i^j.

Maps are stored as full image vectors over element indices, so validation is
a table scan and application is a lookup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import expr as _expr
from .errors import (
    AdditivityViolation,
    ContextMismatch,
    DescriptorError,
    IndexOutOfRange,
    LeibnizViolation,
    MultiplicativityViolation,
    NotBijective,
    NotUnital,
)

WORD_SUM_CROSSCHECK_MAX = 4


def _frozen(vec, n):
    arr = np.asarray(vec, dtype=np.int64).copy()
    if arr.shape != (n,):
        raise ValueError(f"image vector must have length {n}, got shape {arr.shape}")
    if n and (arr.min() < 0 or arr.max() >= n):
        raise ValueError("image vector entries must be element indices")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RingMorphism:
    ring: object
    image: np.ndarray
    is_automorphism: bool
    inverse_image: "np.ndarray | None" = None

    def __call__(self, a):
        return int(self.image[a])

    @cached_property
    def image_list(self):
        return self.image.tolist()

    def power(self, k):
        """Image vector of sigma^k; negative k needs an automorphism."""
        if k < 0:
            if not self.is_automorphism:
                raise ValueError("negative powers need an automorphism")
            step, k = self.inverse_image, -k
        else:
            step = self.image
        out = np.arange(self.ring.order)
        for _ in range(k):
            out = step[out]
        return out


@dataclass(frozen=True, eq=False)
class SigmaDerivation:
    ring: object
    sigma: RingMorphism
    image: np.ndarray

    def __call__(self, a):
        return int(self.image[a])

    @cached_property
    def image_list(self):
        return self.image.tolist()

    @property
    def is_zero(self):
        return bool((self.image == self.ring.zero).all())


def _first_pair(mask):
    hit = np.argwhere(mask)
    return None if hit.size == 0 else (int(hit[0][0]), int(hit[0][1]))


def validate_morphism(ring, image, require_automorphism=False):
    """Check additivity, multiplicativity and unitality exhaustively.

    The lowest-index violating pair is reported. Bijective maps get their
    inverse attached; ``require_automorphism`` rejects the rest.
    """
    img = _frozen(image, ring.order)
    A, M = ring.add_table, ring.mul_table
    w = _first_pair(img[A] != A[img[:, None], img[None, :]])
    if w:
        raise AdditivityViolation(w)
    w = _first_pair(img[M] != M[img[:, None], img[None, :]])
    if w:
        raise MultiplicativityViolation(w)
    if img[ring.one] != ring.one:
        raise NotUnital((ring.one,))
    bijective = len(np.unique(img)) == ring.order
    if require_automorphism and not bijective:
        counts = np.bincount(img, minlength=ring.order)
        raise NotBijective((int(np.flatnonzero(counts != 1)[0]),))
    inverse = None
    if bijective:
        inverse = np.empty(ring.order, dtype=np.int64)
        inverse[img] = np.arange(ring.order)
        inverse.setflags(write=False)
    return RingMorphism(ring, img, bijective, inverse)


def identity_morphism(ring):
    return validate_morphism(ring, np.arange(ring.order))


def validate_derivation(ring, sigma, image):
    """Check that ``image`` is additive and obeys d(ab) = sigma(a) d(b) + d(a) b."""
    if sigma.ring is not ring:
        raise ContextMismatch("sigma belongs to a different ring")
    d = _frozen(image, ring.order)
    A, M = ring.add_table, ring.mul_table
    w = _first_pair(d[A] != A[d[:, None], d[None, :]])
    if w:
        raise AdditivityViolation(w)
    s = sigma.image
    rhs = A[M[s[:, None], d[None, :]], M[d[:, None], np.arange(ring.order)[None, :]]]
    w = _first_pair(d[M] != rhs)
    if w:
        raise LeibnizViolation(w)
    assert d[ring.one] == ring.zero
    return SigmaDerivation(ring, sigma, d)


def zero_derivation(ring, sigma):
    return validate_derivation(ring, sigma, np.full(ring.order, ring.zero))


@dataclass(frozen=True, eq=False)
class OreContext:
    """A ring together with validated sigma and delta: the data of R[x; sigma, delta]."""

    ring: object
    sigma: RingMorphism
    delta: SigmaDerivation
    name: str = ""
    validated: bool = True
    _f_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.sigma.ring is not self.ring or self.delta.ring is not self.ring:
            raise ContextMismatch("sigma and delta must act on the context's ring")
        if self.delta.sigma is not self.sigma:
            raise ContextMismatch("delta was validated against a different sigma")

    def f(self, i, j):
        return f_word_operator(self, i, j)

    @cached_property
    def f_lists(self):
        return _FTable(self)


class _FTable:
    """Lazily materialised ``f_i^j`` image lists, indexed ``table[j][i]``."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.rows = []

    def __getitem__(self, j):
        while len(self.rows) <= j:
            jj = len(self.rows)
            self.rows.append([f_word_operator(self.ctx, i, jj).tolist() for i in range(jj + 1)])
        return self.rows[j]


def make_context(ring, sigma=None, delta=None, name=""):
    """Build an :class:`OreContext`; omitted sigma is the identity, omitted delta is zero."""
    if sigma is None:
        sigma = identity_morphism(ring)
    elif not isinstance(sigma, RingMorphism):
        sigma = validate_morphism(ring, sigma)
    if delta is None:
        delta = zero_derivation(ring, sigma)
    elif not isinstance(delta, SigmaDerivation):
        delta = validate_derivation(ring, sigma, delta)
    return OreContext(ring, sigma, delta, name=name)


def f_word_operator(ctx, i, j):
    """Image vector of f_i^j, the sum of all words with i letters sigma and j-i letters delta.

    Uses f_i^j = sigma o f_{i-1}^{j-1} + delta o f_i^{j-1} with memoisation; for
    j <= 4 the first evaluation is cross-checked against the explicit word sum.
    """
    if not (0 <= i <= j):
        raise IndexOutOfRange(f"f_{i}^{j} needs 0 <= i <= j")
    cache = ctx._f_cache
    key = (i, j)
    if key in cache:
        return cache[key]
    ring = ctx.ring
    if j == 0:
        out = np.arange(ring.order)
    else:
        out = np.full(ring.order, ring.zero, dtype=np.int64)
        if i >= 1:
            out = ring.add_table[out, ctx.sigma.image[f_word_operator(ctx, i - 1, j - 1)]]
        if i <= j - 1:
            out = ring.add_table[out, ctx.delta.image[f_word_operator(ctx, i, j - 1)]]
    out = np.asarray(out, dtype=np.int64)
    out.setflags(write=False)
    if j <= WORD_SUM_CROSSCHECK_MAX:
        oracle = word_sum_operator(ctx, i, j)
        if not np.array_equal(out, oracle):
            raise AssertionError(f"f_{i}^{j}: recursion disagrees with the word sum")
    cache[key] = out
    return out


def word_sum_operator(ctx, i, j):
    """f_i^j by brute force: add up every word in sigma, delta with i sigmas."""
    ring = ctx.ring
    total = np.full(ring.order, ring.zero, dtype=np.int64)
    for positions in itertools.combinations(range(j), i):
        img = np.arange(ring.order)
        for slot in range(j):
            img = (ctx.sigma.image if slot in positions else ctx.delta.image)[img]
        total = ring.add_table[total, img]
    return total


# ---------------------------------------------------------------------------
# generator rules used by descriptor files
# ---------------------------------------------------------------------------


def _index_of_value(ring, value):
    if ring.ambient is not None:
        amb = ring.ambient.index_of_value(value)
        pos = np.searchsorted(ring.embedding, amb)
        if pos >= len(ring.embedding) or ring.embedding[pos] != amb:
            raise DescriptorError(f"map sends an element outside the subring ({ring.ambient.name(amb)})")
        return int(pos)
    return ring.index_of_value(value)


def _value_map(ring, fn):
    return [_index_of_value(ring, fn(v)) for v in ring.values]


def _matrix_base(ring):
    base = ring.matrix_base
    if base is None:
        raise DescriptorError("rule needs a matrix ring")
    return base


def _quotient_base(ring):
    if ring.kind != "quotient":
        raise DescriptorError("rule needs a quotient (truncated polynomial) ring")
    return ring.base


def _with_corner(value, entry):
    rows = [list(r) for r in value]
    rows[0][1] = entry
    return tuple(tuple(r) for r in rows)


def _image_rule(ring, rule):
    img = rule.get("image")
    if not isinstance(img, list) or len(img) != ring.order:
        raise DescriptorError(f"'image' rule needs a list of {ring.order} element expressions")
    return [_expr.element(ring, x) for x in img]


def expand_sigma(ring, rule):
    """Expand a sigma rule (dict with a ``rule`` key) to an image vector."""
    kind = rule.get("rule", "identity")
    if kind == "identity":
        return list(range(ring.order))
    if kind == "image":
        return _image_rule(ring, rule)
    if kind == "evaluate_at_zero":
        base = _quotient_base(ring)
        return _value_map(ring, lambda v: (v[0],) + (base.zero,) * (len(v) - 1))
    if kind == "conjugate":
        base = _quotient_base(ring)
        return _value_map(ring, lambda v: tuple(c if k % 2 == 0 else base.neg(c) for k, c in enumerate(v)))
    if kind == "power":
        k = int(rule.get("exponent", 2))
        out = []
        for a in range(ring.order):
            acc = ring.one
            for _ in range(k):
                acc = ring.mul(acc, a)
            out.append(acc)
        return out
    if kind == "negate_corner":
        base = _matrix_base(ring)
        return _value_map(ring, lambda v: _with_corner(v, base.neg(v[0][1])))
    if kind == "scale_corner":
        base = _matrix_base(ring)
        f = _expr.element(base, rule.get("factor", 1))
        return _value_map(ring, lambda v: _with_corner(v, base.mul(f, v[0][1])))
    raise DescriptorError(f"unknown sigma rule {kind!r}")


def expand_delta(ring, sigma, rule):
    """Expand a delta rule to an image vector; ``sigma`` is a validated morphism."""
    kind = rule.get("rule", "zero")
    if kind == "zero":
        return [ring.zero] * ring.order
    if kind == "image":
        return _image_rule(ring, rule)
    if kind == "derivative":
        base = _quotient_base(ring)
        return _value_map(
            ring,
            lambda v: tuple(base.mul(base.scalar(k + 1), v[k + 1]) for k in range(len(v) - 1)) + (base.zero,),
        )
    if kind == "corner_only":
        base = _matrix_base(ring)
        f = _expr.element(base, rule.get("factor", 1))
        z = base.zero
        return _value_map(
            ring, lambda v: tuple(tuple(base.mul(f, v[0][1]) if (i, j) == (0, 1) else z for j in range(len(v))) for i in range(len(v)))
        )
    if kind in ("inner", "id_minus_sigma"):
        c = ring.one if kind == "id_minus_sigma" else _expr.element(ring, rule["element"])
        s = sigma.image_list
        return [ring.sub(ring.mul(c, a), ring.mul(s[a], c)) for a in range(ring.order)]
    raise DescriptorError(f"unknown delta rule {kind!r}")


def context_from_rules(ring, sigma_rule=None, delta_rule=None, name="", require_automorphism=False):
    sigma = validate_morphism(ring, expand_sigma(ring, sigma_rule or {}), require_automorphism)
    delta = validate_derivation(ring, sigma, expand_delta(ring, sigma, delta_rule or {}))
    return OreContext(ring, sigma, delta, name=name)
