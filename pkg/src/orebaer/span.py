"""Additive subgroups of R^width kept in echelon layers.

Layer ``d`` maps every leading coefficient that occurs at position ``d``
(the highest nonzero slot) to one representative vector. When a new leading
coefficient ``a`` arrives, the layer grows by the cosets L + m*a and the single
relation k*v - rep(k*a), k the order of a modulo L, drops to lower layers.
That relation set is complete for the cyclic extension, so reduction to zero
decides membership and |span| = prod |layer|.
"""

from __future__ import annotations

from math import prod

from .ring import additive_generators


class AdditiveSpan:
    def __init__(self, ring, width):
        self.ring = ring
        self.width = width
        self.zero_vec = (ring.zero,) * width
        self.layers = [{ring.zero: self.zero_vec} for _ in range(width)]
        self.generators = []

    # vector arithmetic ---------------------------------------------------------

    def vadd(self, u, v):
        add = self.ring.add_list
        return tuple(add[a][b] for a, b in zip(u, v))

    def vsub(self, u, v):
        add, neg = self.ring.add_list, self.ring.neg_list
        return tuple(add[a][neg[b]] for a, b in zip(u, v))

    def top(self, v):
        z = self.ring.zero
        for d in range(self.width - 1, -1, -1):
            if v[d] != z:
                return d
        return -1

    # membership ------------------------------------------------------------------

    def reduce(self, v):
        v = tuple(v)
        while True:
            d = self.top(v)
            if d < 0:
                return v
            rep = self.layers[d].get(v[d])
            if rep is None:
                return v
            v = self.vsub(v, rep)

    def __contains__(self, v):
        return self.top(self.reduce(v)) < 0

    def insert(self, v):
        """Add ``v`` to the span; returns the vectors that enlarged some layer."""
        add = self.ring.add_list
        new = []
        stack = [tuple(v)]
        while stack:
            w = self.reduce(stack.pop())
            d = self.top(w)
            if d < 0:
                continue
            layer = self.layers[d]
            a = w[d]
            old = list(layer.items())
            lead, mult = a, w
            while lead not in layer:
                for l, r in old:
                    layer[add[l][lead]] = self.vadd(r, mult)
                lead = add[lead][a]
                mult = self.vadd(mult, w)
            # lead = k*a now lies in the old layer; mult = k*w
            stack.append(self.vsub(mult, layer[lead]))
            new.append(w)
            self.generators.append(w)
        return new

    # views ---------------------------------------------------------------------

    def size(self):
        return prod(len(layer) for layer in self.layers)

    def leads(self, d):
        return set(self.layers[d])

    def representatives(self):
        """Every stored representative (nonzero), an additive generating set."""
        z = self.ring.zero
        return [r for layer in self.layers for lead, r in layer.items() if lead != z]

    def truncated(self, width):
        """The sub-span living in positions < width, as a new span of that width."""
        sub = AdditiveSpan(self.ring, width)
        for d in range(width):
            sub.layers[d] = {lead: r[:width] for lead, r in self.layers[d].items()}
        sub.generators = [g[:width] for g in self.generators if self.top(g) < width]
        return sub


def additive_kernel(ring, width, image_of, gens=None):
    """Kernel of an additive map R^width -> R^h, as an :class:`AdditiveSpan`.

    ``image_of(v)`` returns the image tuple of a coefficient vector. The graph
    {(v, image(v))} is reduced with image slots on top, so what survives below
    position ``width`` is exactly the kernel.
    """
    if gens is None:
        gens = additive_generators(ring)
    z = ring.zero
    basis = []
    for slot in range(width):
        for g in gens:
            v = [z] * width
            v[slot] = g
            basis.append(tuple(v))
    images = [tuple(image_of(v)) for v in basis]
    h = max((len(im) for im in images), default=0)
    span = AdditiveSpan(ring, width + h)
    for v, im in zip(basis, images):
        span.insert(v + im + (z,) * (h - len(im)))
    return span.truncated(width)
