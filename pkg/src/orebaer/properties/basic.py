"""Element-level properties: reduced, abelian, semiprime, rigid, compatible, stable."""

from __future__ import annotations

import numpy as np

from ..errors import NotIdempotent
from ..ring import idempotent_set
from .verdict import PropertyVerdict, Status, Stopwatch


def _first(mask):
    hit = np.flatnonzero(mask)
    return None if hit.size == 0 else int(hit[0])


def check_basic(ring, which):
    """``which`` is one of ``reduced``, ``abelian``, ``semiprime``."""
    clock = Stopwatch()
    M = ring.mul_table
    r = np.arange(ring.order)
    nonzero = r != ring.zero
    witness = None
    if which == "reduced":
        a = _first(nonzero & (M[r, r] == ring.zero))
        if a is not None:
            witness = {"element": ring.elem(a), "square": ring.elem(ring.zero)}
    elif which == "abelian":
        for c in idempotent_set(ring):
            if not c.is_central:
                e = c.index
                x = _first(M[e, :] != M[:, e])
                witness = {"idempotent": c.element, "x": ring.elem(x)}
                break
    elif which == "semiprime":
        # a R a = 0 for a != 0 means aR is a nonzero nilpotent right ideal
        aRa = M[M[:, :], r[:, None]]  # aRa[a, s] = (a s) a
        a = _first(nonzero & (aRa == ring.zero).all(axis=1))
        if a is not None:
            witness = {"element": ring.elem(a)}
    else:
        raise ValueError(f"unknown basic property {which!r}")
    status = Status.FAILS if witness else Status.HOLDS
    return PropertyVerdict(which, status, witness, elapsed_ms=clock.ms)


def check_rigid(ring, sigma):
    """a sigma(a) = 0 implies a = 0."""
    clock = Stopwatch()
    r = np.arange(ring.order)
    a = _first((r != ring.zero) & (ring.mul_table[r, sigma.image] == ring.zero))
    witness = None if a is None else {"element": ring.elem(a), "sigma_image": ring.elem(int(sigma.image[a]))}
    return PropertyVerdict("rigid", Status.FAILS if witness else Status.HOLDS, witness, elapsed_ms=clock.ms)


_DIRECTIONS = (
    "ab=0 but a*sigma(b)!=0",
    "a*sigma(b)=0 but ab!=0",
    "ab=0 but a*delta(b)!=0",
)


def _compat_failure(ring, sigma, delta, a, b):
    M, z = ring.mul_list, ring.zero
    ab = M[a][b] == z
    asb = M[a][sigma(b)] == z
    if ab and not asb:
        return _DIRECTIONS[0]
    if asb and not ab:
        return _DIRECTIONS[1]
    if ab and M[a][delta(b)] != z:
        return _DIRECTIONS[2]
    return None


def check_compatible(ring, sigma, delta, hints=()):
    """(sigma, delta)-compatibility: ab = 0 <=> a sigma(b) = 0, and ab = 0 => a delta(b) = 0.

    ``hints`` are (a, b) pairs tried before the exhaustive scan; otherwise the
    lowest-index violating pair is reported.
    """
    clock = Stopwatch()
    detail = {"pairs_checked": ring.order**2}
    for a, b in hints:
        a, b = int(a), int(b)
        direction = _compat_failure(ring, sigma, delta, a, b)
        if direction:
            w = {"a": ring.elem(a), "b": ring.elem(b), "direction": direction}
            detail["witness_source"] = "hint"
            return PropertyVerdict("compatible", Status.FAILS, w, elapsed_ms=clock.ms, detail=detail)
    M, z = ring.mul_table, ring.zero
    Z = M == z
    ZS = M[:, sigma.image] == z
    ZD = M[:, delta.image] == z
    bad = (Z != ZS) | (Z & ~ZD)
    hit = np.argwhere(bad)
    if hit.size:
        a, b = (int(x) for x in hit[0])
        w = {"a": ring.elem(a), "b": ring.elem(b), "direction": _compat_failure(ring, sigma, delta, a, b)}
        return PropertyVerdict("compatible", Status.FAILS, w, elapsed_ms=clock.ms, detail=detail)
    return PropertyVerdict("compatible", Status.HOLDS, elapsed_ms=clock.ms, detail=detail)


def check_stability(ring, sigma, delta, e):
    """Is Re closed under sigma and delta?"""
    clock = Stopwatch()
    e = int(e)
    if ring.mul(e, e) != e:
        raise NotIdempotent(f"{ring.name(e)} is not idempotent")
    members = np.zeros(ring.order, dtype=bool)
    members[ring.mul_table[:, e]] = True
    for name, img in (("sigma", sigma.image), ("delta", delta.image)):
        y = _first(members & ~members[img])
        if y is not None:
            w = {"idempotent": ring.elem(e), "element": ring.elem(y), "map": name,
                 "image": ring.elem(int(img[y]))}
            return PropertyVerdict("stability", Status.FAILS, w, elapsed_ms=clock.ms,
                                   detail={"Re_size": int(members.sum())})
    return PropertyVerdict("stability", Status.HOLDS, elapsed_ms=clock.ms,
                           detail={"idempotent": ring.elem(e), "Re_size": int(members.sum())})
