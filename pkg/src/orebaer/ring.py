"""Finite rings compiled to addition/multiplication tables.

Every construction recipe (``modular``, ``quotient``, matrix rings, products,
subrings, raw tables) compiles to a :class:`FiniteRing` whose elements are the
indices ``0..n-1``. Downstream algorithms only ever see the tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import expr as _expr
from .errors import DescriptorError, ParseError, RingAxiomError, RingMismatch, RingTooLarge

DEFAULT_MAX_ORDER = 4096
EXHAUSTIVE_AXIOM_LIMIT = 512
AXIOM_SAMPLES = 10**6
AXIOM_SEED = 0


@dataclass(frozen=True, eq=False)
class FiniteRing:
    add_table: np.ndarray
    mul_table: np.ndarray
    zero: int
    one: int
    elem_names: tuple
    descriptor: dict
    kind: str = "table"
    values: tuple = ()
    base: "FiniteRing | None" = None
    var: "str | None" = None
    ambient: "FiniteRing | None" = None
    embedding: "np.ndarray | None" = None
    shape: "tuple | None" = None  # matrix size and free positions, for matrix-valued rings

    def __post_init__(self):
        for tab in (self.add_table, self.mul_table):
            tab.setflags(write=False)

    def __repr__(self):
        return f"FiniteRing({self.kind}, order={self.order})"

    @property
    def order(self):
        return self.add_table.shape[0]

    def __len__(self):
        return self.order

    # -- fast scalar arithmetic on indices ---------------------------------

    @cached_property
    def neg_table(self):
        rows, cols = np.nonzero(self.add_table == self.zero)
        out = np.empty(self.order, dtype=np.int64)
        out[rows] = cols
        out.setflags(write=False)
        return out

    @cached_property
    def add_list(self):
        return self.add_table.tolist()

    @cached_property
    def mul_list(self):
        return self.mul_table.tolist()

    @cached_property
    def neg_list(self):
        return self.neg_table.tolist()

    def add(self, a, b):
        return self.add_list[a][b]

    def mul(self, a, b):
        return self.mul_list[a][b]

    def neg(self, a):
        return self.neg_list[a]

    def sub(self, a, b):
        return self.add_list[a][self.neg_list[b]]

    def scalar(self, k):
        """Index of ``k * 1``."""
        acc, base = self.zero, self.one
        if k < 0:
            k, base = -k, self.neg(self.one)
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def name(self, a):
        return self.elem_names[a]

    @cached_property
    def characteristic(self):
        k, acc = 1, self.one
        while acc != self.zero:
            acc = self.add(acc, self.one)
            k += 1
        return k

    @cached_property
    def is_commutative(self):
        return bool(np.array_equal(self.mul_table, self.mul_table.T))

    @cached_property
    def _value_index(self):
        return {v: i for i, v in enumerate(self.values)}

    def index_of_value(self, value):
        try:
            return self._value_index[value]
        except KeyError:
            raise DescriptorError(f"value {value!r} is not an element of {self!r}") from None

    # -- element handles and parsing -----------------------------------------

    def elem(self, index):
        if not 0 <= index < self.order:
            raise IndexError(f"element index {index} outside ring of order {self.order}")
        return RingElem(self, int(index))

    def __call__(self, text):
        """Parse an element expression, e.g. ``R("1+t")`` or ``R("[[1,1],[0,0]]")``."""
        return RingElem(self, _expr.element(self, text))

    def parse(self, text):
        return _expr.element(self, text)

    def resolve_name(self, name):
        if self.ambient is not None:
            idx = self.ambient.resolve_name(name)
            return None if idx is None else self._from_ambient(idx)
        if self.kind == "quotient" and name == self.var:
            return self._generator_index
        if self.base is not None:
            b = self.base.resolve_name(name)
            if b is not None:
                return self.embed_base(b)
        if name in self.elem_names:
            return self.elem_names.index(name)
        return None

    def _from_ambient(self, idx):
        pos = np.searchsorted(self.embedding, idx)
        if pos >= len(self.embedding) or self.embedding[pos] != idx:
            raise ParseError(f"{self.ambient.name(idx)} is not in the subring")
        return int(pos)

    @cached_property
    def _generator_index(self):
        mod = self.descriptor["_modulus_idx"]
        d = len(mod) - 1
        if d >= 2:
            v = [self.base.zero] * d
            v[1] = self.base.one
        else:
            v = [self.base.neg(mod[0])]
        return self.index_of_value(tuple(v))

    def embed_base(self, b):
        """Image of a coefficient-ring element (constant polynomial or scalar matrix)."""
        if self.kind == "quotient":
            d = len(self.descriptor["_modulus_idx"]) - 1
            return self.index_of_value((b,) + (self.base.zero,) * (d - 1))
        if self.kind == "matrix":
            k = self.shape[0]
            z = self.base.zero
            rows = tuple(tuple(b if i == j else z for j in range(k)) for i in range(k))
            return self.index_of_value(rows)
        raise ParseError(f"cannot embed coefficient elements into a {self.kind} ring")

    def from_matrix_ast(self, node):
        if self.ambient is not None:
            return self._from_ambient(self.ambient.from_matrix_ast(node))
        if self.kind != "matrix":
            raise ParseError(f"matrix literal given for a {self.kind} ring")
        k = self.shape[0]
        if len(node.rows) != k or any(len(r) != k for r in node.rows):
            raise ParseError(f"expected a {k}x{k} matrix literal")
        rows = tuple(tuple(_expr.evaluate(x, self.base) for x in row) for row in node.rows)
        if rows not in self._value_index:
            raise ParseError("matrix is not an element of this ring (check the zero pattern)")
        return self._value_index[rows]

    def from_pair_ast(self, node):
        if self.ambient is not None:
            return self._from_ambient(self.ambient.from_pair_ast(node))
        if self.kind != "product":
            raise ParseError(f"pair literal given for a {self.kind} ring")
        left, right = self.descriptor["_factors"]
        i = _expr.evaluate(node.left, left)
        j = _expr.evaluate(node.right, right)
        return i * right.order + j

    # -- matrix helpers ------------------------------------------------------

    def matrix_of(self, a):
        """Entries (as coefficient-ring indices) of a matrix-valued element."""
        ring = self.ambient if self.ambient is not None else self
        if ring.kind != "matrix":
            raise TypeError(f"{self!r} is not a matrix ring")
        return self.values[a]

    @property
    def matrix_base(self):
        ring = self.ambient if self.ambient is not None else self
        return ring.base if ring.kind == "matrix" else None

    def from_entries(self, rows):
        return self.index_of_value(tuple(tuple(r) for r in rows))


@dataclass(frozen=True, eq=False)
class RingElem:
    ring: FiniteRing
    index: int

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.scalar(other)
        if not isinstance(other, RingElem) or other.ring is not self.ring:
            raise RingMismatch("elements of different rings never mix")
        return other.index

    def __add__(self, other):
        return RingElem(self.ring, self.ring.add(self.index, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElem(self.ring, self.ring.sub(self.index, self._check(other)))

    def __rsub__(self, other):
        return RingElem(self.ring, self.ring.sub(self._check(other), self.index))

    def __mul__(self, other):
        return RingElem(self.ring, self.ring.mul(self.index, self._check(other)))

    def __rmul__(self, other):
        return RingElem(self.ring, self.ring.mul(self._check(other), self.index))

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.index))

    def __pow__(self, k):
        acc = self.ring.one
        for _ in range(k):
            acc = self.ring.mul(acc, self.index)
        return RingElem(self.ring, acc)

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring is other.ring and self.index == other.index
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __int__(self):
        return self.index

    def __index__(self):
        return self.index

    def __repr__(self):
        return self.ring.name(self.index)


def _idx(x):
    return x.index if isinstance(x, RingElem) else int(x)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def construct_ring(descriptor, max_order=DEFAULT_MAX_ORDER, verify=True):
    """Compile a ring descriptor (a JSON-compatible dict) to a :class:`FiniteRing`.

    Same descriptor, same index assignment. With ``verify`` the ring axioms are
    re-checked on the finished tables.
    """
    if isinstance(descriptor, str):
        descriptor = shorthand_descriptor(descriptor)
    if not isinstance(descriptor, dict) or "kind" not in descriptor:
        raise DescriptorError("ring descriptor must be an object with a 'kind' field")
    kind = descriptor["kind"]
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise DescriptorError(f"unknown ring kind {kind!r}; expected one of {sorted(_BUILDERS)}")
    ring = builder(descriptor, max_order)
    if verify:
        verify_ring_axioms(ring)
    return ring


def shorthand_descriptor(text):
    """``modular:6`` style shorthands used on the command line."""
    parts = text.split(":")
    if parts[0] == "modular" and len(parts) == 2 and parts[1].isdigit():
        return {"kind": "modular", "n": int(parts[1])}
    if parts[0] in ("ut", "upper_triangular_2x2") and len(parts) >= 2:
        return {"kind": "upper_triangular_2x2", "base": shorthand_descriptor(":".join(parts[1:]))}
    if parts[0] == "matrix" and len(parts) >= 3 and parts[1].isdigit():
        return {"kind": "full_matrix", "k": int(parts[1]), "base": shorthand_descriptor(":".join(parts[2:]))}
    raise DescriptorError(f"unrecognised ring shorthand {text!r}")


def _check_order(n, max_order):
    if n > max_order:
        raise RingTooLarge(f"ring of order {n} exceeds the configured limit {max_order}")
    if n < 1:
        raise DescriptorError("ring must have at least one element")


def _sub_descriptor(desc, key, max_order):
    if key not in desc:
        raise DescriptorError(f"{desc['kind']} descriptor needs a '{key}' field")
    return construct_ring(desc[key], max_order=max_order, verify=False)


def _pairwise(n, fn, chunk=256):
    """Fill an n x n table by calling ``fn(rows, cols)`` on index blocks."""
    out = np.empty((n, n), dtype=np.int64)
    cols = np.arange(n)
    for start in range(0, n, chunk):
        rows = np.arange(start, min(n, start + chunk))
        out[start:start + len(rows)] = fn(rows[:, None], cols[None, :])
    return out


def _build_modular(desc, max_order):
    n = desc.get("n")
    if not isinstance(n, int) or n < 1:
        raise DescriptorError("modular descriptor needs a positive integer 'n'")
    _check_order(n, max_order)
    r = np.arange(n)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    return FiniteRing(add, mul, 0, 1 % n, tuple(str(i) for i in range(n)), dict(desc),
                      kind="modular", values=tuple(range(n)))


def _coef_name(base, c):
    s = base.name(c)
    return f"({s})" if any(ch in s for ch in "+-") and not s.startswith("[") else s


def _poly_name(base, coeffs, var):
    terms = []
    for k, c in enumerate(coeffs):
        if c == base.zero:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(base.name(c))
        elif c == base.one:
            terms.append(mono)
        else:
            terms.append(f"{_coef_name(base, c)}*{mono}")
    return "+".join(terms) if terms else "0"


def _build_quotient(desc, max_order):
    base = _sub_descriptor(desc, "base", max_order)
    raw = desc.get("modulus")
    if not isinstance(raw, list) or len(raw) < 2:
        raise DescriptorError("quotient needs 'modulus': coefficient list (low to high) of degree >= 1")
    mod = [_expr.element(base, c) for c in raw]
    if mod[-1] != base.one:
        raise DescriptorError("quotient polynomial must be monic")
    d = len(mod) - 1
    nb = base.order
    n = nb**d
    _check_order(n, max_order)
    var = desc.get("var", "t")
    idx = np.arange(n)
    coords = np.stack([(idx // nb**k) % nb for k in range(d)], axis=1)
    badd, bmul, bneg = base.add_table, base.mul_table, base.neg_table
    weights = nb ** np.arange(d)

    def add_fn(r, c):
        return (badd[coords[r], coords[c]] * weights).sum(-1)

    def mul_fn(r, c):
        a = coords[r]  # (rows, 1, d)
        b = coords[c]  # (1, n, d)
        shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
        conv = np.full(shape + (2 * d - 1,), base.zero, dtype=np.int64)
        for i in range(d):
            for j in range(d):
                conv[..., i + j] = badd[conv[..., i + j], bmul[a[..., i], b[..., j]]]
        for k in range(2 * d - 2, d - 1, -1):
            top = conv[..., k]
            for i in range(d):
                conv[..., k - d + i] = badd[conv[..., k - d + i], bneg[bmul[top, mod[i]]]]
        return (conv[..., :d] * weights).sum(-1)

    values = tuple(tuple(int(x) for x in row) for row in coords)
    names = tuple(_poly_name(base, v, var) for v in values)
    d2 = dict(desc)
    d2["_modulus_idx"] = mod
    return FiniteRing(_pairwise(n, add_fn), _pairwise(n, mul_fn), 0, int(base.one), names, d2,
                      kind="quotient", values=values, base=base, var=var)


def _matrix_ring(desc, base, k, positions, max_order):
    nb = base.order
    m = len(positions)
    n = nb**m
    _check_order(n, max_order)
    idx = np.arange(n)
    # first listed entry is most significant
    coords = np.stack([(idx // nb**(m - 1 - s)) % nb for s in range(m)], axis=1)
    weights = nb ** np.arange(m - 1, -1, -1)
    slot = {p: s for s, p in enumerate(positions)}
    badd, bmul = base.add_table, base.mul_table
    prods = []
    for s, (i, j) in enumerate(positions):
        terms = [(slot[(i, l)], slot[(l, j)]) for l in range(k) if (i, l) in slot and (l, j) in slot]
        prods.append(terms)

    def add_fn(r, c):
        return (badd[coords[r], coords[c]] * weights).sum(-1)

    def mul_fn(r, c):
        a = coords[r]
        b = coords[c]
        total = 0
        for s, terms in enumerate(prods):
            acc = np.full(np.broadcast_shapes(a.shape[:-1], b.shape[:-1]), base.zero, dtype=np.int64)
            for sa, sb in terms:
                acc = badd[acc, bmul[a[..., sa], b[..., sb]]]
            total = total + acc * weights[s]
        return total

    # products must stay inside the pattern
    for i, l in positions:
        for l2, j in positions:
            if l == l2 and (i, j) not in slot:
                raise DescriptorError("matrix zero pattern is not closed under multiplication")

    values = []
    for row in coords:
        mat = [[base.zero] * k for _ in range(k)]
        for s, (i, j) in enumerate(positions):
            mat[i][j] = int(row[s])
        values.append(tuple(tuple(r) for r in mat))
    names = tuple("[" + ",".join("[" + ",".join(base.name(x) for x in r) + "]" for r in v) + "]" for v in values)
    one_val = tuple(tuple(base.one if i == j else base.zero for j in range(k)) for i in range(k))
    ring = FiniteRing(_pairwise(n, add_fn), _pairwise(n, mul_fn), 0, 0, names, dict(desc),
                      kind="matrix", values=tuple(values), base=base, shape=(k, tuple(positions)))
    object.__setattr__(ring, "one", ring.index_of_value(one_val))
    return ring


def _build_upper_triangular(desc, max_order):
    base = _sub_descriptor(desc, "base", max_order)
    return _matrix_ring(desc, base, 2, [(0, 0), (0, 1), (1, 1)], max_order)


def _build_full_matrix(desc, max_order):
    base = _sub_descriptor(desc, "base", max_order)
    k = desc.get("k", 2)
    if k not in (1, 2):
        raise DescriptorError("full_matrix supports k = 1 or k = 2")
    positions = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_ring(desc, base, k, positions, max_order)


def _build_product(desc, max_order):
    if "left" not in desc or "right" not in desc:
        raise DescriptorError("product descriptor needs 'left' and 'right'")
    r1 = construct_ring(desc["left"], max_order=max_order, verify=False)
    r2 = construct_ring(desc["right"], max_order=max_order, verify=False)
    n2 = r2.order
    n = r1.order * n2
    _check_order(n, max_order)
    idx = np.arange(n)
    i, j = idx // n2, idx % n2
    add = r1.add_table[i[:, None], i[None, :]] * n2 + r2.add_table[j[:, None], j[None, :]]
    mul = r1.mul_table[i[:, None], i[None, :]] * n2 + r2.mul_table[j[:, None], j[None, :]]
    values = tuple((int(a), int(b)) for a, b in zip(i, j))
    names = tuple(f"({r1.name(a)},{r2.name(b)})" for a, b in values)
    d2 = dict(desc)
    d2["_factors"] = (r1, r2)
    return FiniteRing(add, mul, r1.zero * n2 + r2.zero, r1.one * n2 + r2.one, names, d2,
                      kind="product", values=values)


def _build_subring(desc, max_order):
    amb = _sub_descriptor(desc, "base", max_order)
    gens = [_expr.element(amb, g) for g in desc.get("generators", [])]
    members = np.zeros(amb.order, dtype=bool)
    members[[amb.zero, amb.one] + gens] = True
    while True:
        ids = np.flatnonzero(members)
        grown = members.copy()
        grown[amb.add_table[np.ix_(ids, ids)].ravel()] = True
        grown[amb.mul_table[np.ix_(ids, ids)].ravel()] = True
        if grown.sum() == members.sum():
            break
        members = grown
    emb = np.flatnonzero(members)
    inv = np.full(amb.order, -1, dtype=np.int64)
    inv[emb] = np.arange(len(emb))
    add = inv[amb.add_table[np.ix_(emb, emb)]]
    mul = inv[amb.mul_table[np.ix_(emb, emb)]]
    names = tuple(amb.name(int(a)) for a in emb)
    values = tuple(amb.values[int(a)] for a in emb) if amb.values else tuple(range(len(emb)))
    emb.setflags(write=False)
    return FiniteRing(add, mul, int(inv[amb.zero]), int(inv[amb.one]), names, dict(desc),
                      kind="subring", values=values, base=amb.base, ambient=amb, embedding=emb,
                      shape=amb.shape)


def _build_table(desc, max_order):
    try:
        add = np.asarray(desc["add"], dtype=np.int64)
        mul = np.asarray(desc["mul"], dtype=np.int64)
    except KeyError as exc:
        raise DescriptorError(f"table descriptor missing {exc.args[0]!r}") from None
    except (TypeError, ValueError):
        raise DescriptorError("table entries must be integer matrices") from None
    n = add.shape[0] if add.ndim == 2 else 0
    if add.shape != (n, n) or mul.shape != (n, n):
        raise DescriptorError("add and mul tables must be square and of equal size")
    _check_order(n, max_order)
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        raise RingAxiomError("closure", "table entry outside 0..n-1")
    names = tuple(desc.get("names") or (str(i) for i in range(n)))
    if len(names) != n:
        raise DescriptorError("names list must have one entry per element")
    return FiniteRing(add, mul, int(desc.get("zero", 0)), int(desc.get("one", 1)), names, dict(desc),
                      kind="table", values=tuple(range(n)))


_BUILDERS = {
    "modular": _build_modular,
    "quotient": _build_quotient,
    "upper_triangular_2x2": _build_upper_triangular,
    "full_matrix": _build_full_matrix,
    "product": _build_product,
    "subring": _build_subring,
    "table": _build_table,
}


def verify_ring_axioms(ring, exhaustive_limit=EXHAUSTIVE_AXIOM_LIMIT, samples=AXIOM_SAMPLES, seed=AXIOM_SEED):
    """Scan the tables for ring-axiom violations; raise :class:`RingAxiomError` on the first.

    Exhaustive over all triples up to ``exhaustive_limit`` elements, a seeded
    random sample of triples above that.
    """
    A, M = ring.add_table, ring.mul_table
    n = ring.order
    z, e = ring.zero, ring.one
    r = np.arange(n)
    if not (0 <= z < n and 0 <= e < n):
        raise RingAxiomError("identity", "zero/one index out of range")
    bad = np.flatnonzero((A[z] != r) | (A[:, z] != r))
    if bad.size:
        raise RingAxiomError("additive identity", (int(bad[0]),))
    bad = np.argwhere(A != A.T)
    if bad.size:
        raise RingAxiomError("additive commutativity", tuple(int(x) for x in bad[0]))
    bad = np.flatnonzero(~(A == z).any(axis=1))
    if bad.size:
        raise RingAxiomError("additive inverse", (int(bad[0]),))
    bad = np.flatnonzero((M[e] != r) | (M[:, e] != r))
    if bad.size:
        raise RingAxiomError("multiplicative identity", (int(bad[0]),))

    def report(name, a, mask):
        hit = np.argwhere(mask)
        if hit.size:
            raise RingAxiomError(name, (int(a), *(int(x) for x in hit[0])))

    if n <= exhaustive_limit:
        for a in range(n):
            report("additive associativity", a, A[A[a]] != A[a][A])
            report("multiplicative associativity", a, M[M[a]] != M[a][M])
            report("left distributivity", a, M[a][A] != A[M[a][:, None], M[a][None, :]])
            col = M[:, a]
            report("right distributivity", a, col[A] != A[col[:, None], col[None, :]])
        return
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, n, size=(3, samples))
    checks = [
        ("additive associativity", A[A[a, b], c] != A[a, A[b, c]]),
        ("multiplicative associativity", M[M[a, b], c] != M[a, M[b, c]]),
        ("left distributivity", M[a, A[b, c]] != A[M[a, b], M[a, c]]),
        ("right distributivity", M[A[b, c], a] != A[M[b, a], M[c, a]]),
    ]
    for name, mask in checks:
        hit = np.flatnonzero(mask)
        if hit.size:
            k = hit[0]
            raise RingAxiomError(name, (int(a[k]), int(b[k]), int(c[k])))


# ---------------------------------------------------------------------------
# subsets, ideals, annihilators
# ---------------------------------------------------------------------------

ADDITIVE = "additive"
RIGHT_IDEAL = "right_ideal"
LEFT_IDEAL = "left_ideal"


class RingSubset:
    """Membership vector over a ring's elements, plus verified closure flags."""

    __slots__ = ("ring", "members", "flags")

    def __init__(self, ring, members, flags=()):
        m = np.asarray(members, dtype=bool)
        if m.shape != (ring.order,):
            raise ValueError("membership vector must have one entry per ring element")
        m = m.copy()
        m.setflags(write=False)
        self.ring = ring
        self.members = m
        self.flags = frozenset(flags)

    @classmethod
    def of(cls, ring, elements, flags=()):
        m = np.zeros(ring.order, dtype=bool)
        m[[_idx(x) for x in elements]] = True
        return cls(ring, m, flags)

    @classmethod
    def whole(cls, ring):
        return cls(ring, np.ones(ring.order, dtype=bool), (ADDITIVE, RIGHT_IDEAL, LEFT_IDEAL))

    @property
    def elements(self):
        return [int(i) for i in np.flatnonzero(self.members)]

    @property
    def names(self):
        return [self.ring.name(i) for i in self.elements]

    @property
    def key(self):
        return self.members.tobytes()

    @property
    def is_right_ideal(self):
        return RIGHT_IDEAL in self.flags

    @property
    def is_left_ideal(self):
        return LEFT_IDEAL in self.flags

    @property
    def is_ideal(self):
        return self.is_left_ideal and self.is_right_ideal

    def __len__(self):
        return int(self.members.sum())

    def __contains__(self, x):
        return bool(self.members[_idx(x)])

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, RingSubset):
            return NotImplemented
        return self.ring is other.ring and self.key == other.key

    def __hash__(self):
        return hash((id(self.ring), self.key))

    def __and__(self, other):
        _same_ring(self, other)
        return RingSubset(self.ring, self.members & other.members, verified_flags(self.ring, self.members & other.members))

    def issubset(self, other):
        _same_ring(self, other)
        return not bool((self.members & ~other.members).any())

    def __repr__(self):
        return "{" + ", ".join(self.names) + "}"


def _same_ring(a, b):
    if a.ring is not b.ring:
        raise RingMismatch("subsets of different rings")


def verified_flags(ring, members):
    """Closure flags that the membership vector actually satisfies."""
    ids = np.flatnonzero(members)
    flags = []
    if ids.size == 0 or not members[ring.zero]:
        return frozenset()
    if members[ring.add_table[np.ix_(ids, ids)]].all():
        flags.append(ADDITIVE)
        if members[ring.mul_table[ids, :]].all():
            flags.append(RIGHT_IDEAL)
        if members[ring.mul_table[:, ids]].all():
            flags.append(LEFT_IDEAL)
    return frozenset(flags)


def _as_subset(ring_or_subset, elements=None):
    if isinstance(ring_or_subset, RingSubset):
        return ring_or_subset
    return RingSubset.of(ring_or_subset, elements)


def right_annihilator(X):
    """``{a : x a = 0 for all x in X}``; a right ideal, two-sided when X is a right ideal."""
    if len(X) == 0:
        raise ValueError("annihilator of the empty set is not defined here")
    ring = X.ring
    ids = np.flatnonzero(X.members)
    members = (ring.mul_table[ids, :] == ring.zero).all(axis=0)
    flags = verified_flags(ring, members)
    assert RIGHT_IDEAL in flags
    if X.is_right_ideal:
        assert LEFT_IDEAL in flags, "right annihilator of a right ideal must be two-sided"
    return RingSubset(ring, members, flags)


def left_annihilator(X):
    if len(X) == 0:
        raise ValueError("annihilator of the empty set is not defined here")
    ring = X.ring
    ids = np.flatnonzero(X.members)
    members = (ring.mul_table[:, ids] == ring.zero).all(axis=1)
    return RingSubset(ring, members, verified_flags(ring, members))


def _closure(ring, gens, right=False, left=False):
    members = np.zeros(ring.order, dtype=bool)
    members[ring.zero] = True
    members[[_idx(g) for g in gens]] = True
    while True:
        ids = np.flatnonzero(members)
        grown = members.copy()
        grown[ring.add_table[np.ix_(ids, ids)].ravel()] = True
        if right:
            grown[ring.mul_table[ids, :].ravel()] = True
        if left:
            grown[ring.mul_table[:, ids].ravel()] = True
        if grown.sum() == members.sum():
            return RingSubset(ring, members, verified_flags(ring, members))
        members = grown


def right_ideal_closure(ring, gens):
    """Smallest right ideal containing ``gens`` (fixed point of +, right multiplication)."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    return _closure(ring, gens, right=True)


def left_ideal_closure(ring, gens):
    return _closure(ring, list(gens), left=True)


def ideal_closure(ring, gens):
    """Smallest two-sided ideal containing ``gens``."""
    return _closure(ring, list(gens), right=True, left=True)


def additive_closure(ring, gens):
    return _closure(ring, list(gens))


def principal_right_ideal(ring, a):
    """``aR`` as a subset (a right ideal since R has unity)."""
    members = np.zeros(ring.order, dtype=bool)
    members[ring.mul_table[_idx(a), :]] = True
    return RingSubset(ring, members, verified_flags(ring, members))


def principal_left_ideal(ring, a):
    members = np.zeros(ring.order, dtype=bool)
    members[ring.mul_table[:, _idx(a)]] = True
    return RingSubset(ring, members, verified_flags(ring, members))


def additive_generators(ring, subset=None):
    """A small generating set of the additive group of ``subset`` (greedy, lowest index first)."""
    candidates = range(ring.order) if subset is None else subset.elements
    span = np.zeros(ring.order, dtype=bool)
    span[ring.zero] = True
    gens = []
    for a in candidates:
        if span[a]:
            continue
        gens.append(a)
        span = additive_closure(ring, [*gens]).members.copy()
    return gens


@dataclass(frozen=True)
class IdempotentClass:
    element: RingElem
    is_central: bool
    is_left_semicentral: bool
    is_right_semicentral: bool

    @property
    def index(self):
        return self.element.index


def idempotent_set(ring):
    """All idempotents, classified by exhaustive tests of exe = xe, exe = ex, ex = xe."""
    M = ring.mul_table
    out = []
    for e in np.flatnonzero(M[np.arange(ring.order), np.arange(ring.order)] == np.arange(ring.order)):
        e = int(e)
        xe = M[:, e]
        ex = M[e, :]
        exe = M[ex, e]
        left = bool((exe == xe).all())
        right = bool((exe == ex).all())
        central = bool((ex == xe).all())
        assert central == (left and right)
        out.append(IdempotentClass(ring.elem(e), central, left, right))
    return out


def left_semicentral(ring):
    return [c.index for c in idempotent_set(ring) if c.is_left_semicentral]


def right_semicentral(ring):
    return [c.index for c in idempotent_set(ring) if c.is_right_semicentral]


def central_idempotents(ring):
    return [c.index for c in idempotent_set(ring) if c.is_central]


def intersection_closure(family):
    """Smallest family containing ``family`` closed under pairwise intersection.

    Deduplicated; ordered by decreasing size, ties broken by membership vector.
    """
    family = list(family)
    if not family:
        return []
    ring = family[0].ring
    seen = {}
    for s in family:
        _same_ring(s, family[0])
        seen.setdefault(s.key, s)
    frontier = list(seen.values())
    while frontier:
        fresh = []
        current = list(seen.values())
        for a in frontier:
            for b in current:
                m = a.members & b.members
                k = m.tobytes()
                if k not in seen:
                    s = RingSubset(ring, m, verified_flags(ring, m))
                    seen[k] = s
                    fresh.append(s)
        frontier = fresh
    return sorted(seen.values(), key=lambda s: (-len(s), tuple(~s.members)))
