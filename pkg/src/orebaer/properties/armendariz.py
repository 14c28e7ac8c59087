"""Bounded search for skew-Armendariz violations.

A pair (p, q) violates the (sigma, delta) condition when pq = 0 but some
monomial product a_i x^i * b_j x^j = sum_l a_i f_l^i(b_j) x^(l+j) is nonzero.
The sigma variant (delta = 0) asks for a_i sigma^i(b_j) = 0 instead.
"""

from __future__ import annotations

import numpy as np

from ..errors import BudgetExceeded
from ..ore import DEFAULT_BUDGET, OrePoly, batch_mul, coefficient_block
from .verdict import PropertyVerdict, Status, Stopwatch

DEFAULT_TRIALS = 10**5
_BLOCK_CELLS = 1 << 22
_Q_ENUM_CAP = 1 << 20


def _check_variant(ctx, variant):
    if variant not in ("sigma_delta", "sigma"):
        raise ValueError(f"unknown Armendariz variant {variant!r}")
    if variant == "sigma" and not ctx.delta.is_zero:
        raise ValueError("the sigma variant is only defined for delta = 0")


def monomial_product(ctx, a, i, b, j):
    """a x^i * b x^j as an OrePoly."""
    return OrePoly.monomial(ctx, a, i) * OrePoly.monomial(ctx, b, j)


def armendariz_violations(ctx, p, q, variant="sigma_delta"):
    """Index pairs (i, j) whose monomial product does not vanish.

    Ordered by i descending, then j ascending (leading factor of p first).
    """
    _check_variant(ctx, variant)
    ring = ctx.ring
    out = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        for j in range(len(q.coeffs)):
            a, b = p.coeffs[i], q.coeffs[j]
            if variant == "sigma":
                bad = ring.mul(a, int(ctx.f(i, i)[b])) != ring.zero
            else:
                bad = not monomial_product(ctx, a, i, b, j).is_zero()
            if bad:
                out.append((i, j))
    return out


def _witness(ctx, p, q, variant):
    viol = armendariz_violations(ctx, p, q, variant)
    if not (p * q).is_zero() or not viol:
        return None
    i, j = viol[0]
    ring = ctx.ring
    a, b = p.coeffs[i], q.coeffs[j]
    return {
        "p": p,
        "q": q,
        "i": i,
        "j": j,
        "a_i": ring.elem(a),
        "b_j": ring.elem(b),
        "a_i_sigma_i_b_j": ring.elem(ring.mul(a, int(ctx.f(i, i)[b]))),
        "monomial_product": monomial_product(ctx, a, i, b, j),
        "violations": [list(v) for v in viol],
    }


def _violation_mask(ctx, P, Q, variant):
    """P (k, wp), Q (k, wq) zero-product rows; True where some monomial condition fails."""
    ring = ctx.ring
    M, z = ring.mul_table, ring.zero
    bad = np.zeros(len(P), dtype=bool)
    for i in range(P.shape[1]):
        a = P[:, i]
        for j in range(Q.shape[1]):
            b = Q[:, j]
            if variant == "sigma":
                bad |= M[a, ctx.f(i, i)[b]] != z
            else:
                # coefficients of a x^i b x^j are a f_l^i(b), l = 0..i
                for l in range(i + 1):
                    bad |= M[a, ctx.f(l, i)[b]] != z
    return bad


def _scan(ctx, P, Q, variant):
    """Zero products and first violation over the grid P x Q (lowest P row, then Q row)."""
    z = ctx.ring.zero
    prod = batch_mul(ctx, P[:, None, :], Q[None, :, :])
    zero = (prod == z).all(axis=-1)
    pi, qi = np.nonzero(zero)
    if pi.size == 0:
        return 0, None
    bad = _violation_mask(ctx, P[pi], Q[qi], variant)
    hit = np.flatnonzero(bad)
    first = None if hit.size == 0 else (int(pi[hit[0]]), int(qi[hit[0]]))
    return int(pi.size), first


def check_skew_armendariz(ctx, deg_p, deg_q, mode="exhaustive", budget=DEFAULT_BUDGET, seed=None,
                          trials=DEFAULT_TRIALS, variant=None, hints=()):
    """Search pairs with deg p <= deg_p, deg q <= deg_q for Armendariz violations.

    Exhaustive mode enumerates all |R|^(deg_p+deg_q+2) pairs and needs that to
    fit the budget; success is a certificate up to the bound. Randomized mode
    samples ``trials`` left factors p (with ``seed``) and scans every right
    factor q for each; it can only refute. ``hints`` are (p, q) pairs tried first.
    """
    clock = Stopwatch()
    if variant is None:
        variant = "sigma" if ctx.delta.is_zero else "sigma_delta"
    _check_variant(ctx, variant)
    ring = ctx.ring
    n = ring.order
    wp, wq = deg_p + 1, deg_q + 1
    name = "skew_armendariz"
    for p, q in hints:
        w = _witness(ctx, p, q, variant)
        if w:
            return PropertyVerdict(name, Status.FAILS, w, bound={"deg_p": deg_p, "deg_q": deg_q},
                                   mode=mode, seed=seed, elapsed_ms=clock.ms,
                                   detail={"witness_source": "hint", "variant": variant})

    nq = n**wq
    if mode == "exhaustive":
        total = n**wp * nq
        if total > budget:
            raise BudgetExceeded(total, budget)
        Q = coefficient_block(n, wq, 0, nq)
        block = max(1, _BLOCK_CELLS // (nq * (wp + wq)))
        zeros = 0
        for start in range(0, n**wp, block):
            P = coefficient_block(n, wp, start, min(n**wp, start + block))
            z, first = _scan(ctx, P, Q, variant)
            zeros += z
            if first:
                p = OrePoly(ctx, P[first[0]].tolist())
                q = OrePoly(ctx, Q[first[1]].tolist())
                return PropertyVerdict(name, Status.FAILS, _witness(ctx, p, q, variant),
                                       bound={"deg_p": deg_p, "deg_q": deg_q}, mode="exhaustive",
                                       elapsed_ms=clock.ms, detail={"variant": variant})
        return PropertyVerdict(name, Status.CERTIFIED, bound={"deg_p": deg_p, "deg_q": deg_q, "pairs": total},
                               mode="exhaustive", elapsed_ms=clock.ms,
                               detail={"zero_products": zeros, "variant": variant})

    if mode != "randomized":
        raise ValueError(f"unknown search mode {mode!r}")
    if seed is None:
        raise ValueError("randomized mode requires a seed")
    rng = np.random.default_rng(seed)
    if nq <= _Q_ENUM_CAP:
        Q = coefficient_block(n, wq, 0, nq)
        q_desc = "all"
    else:
        Q = rng.integers(0, n, size=(_Q_ENUM_CAP, wq))
        q_desc = f"{_Q_ENUM_CAP} sampled"
    block = max(1, _BLOCK_CELLS // (len(Q) * (wp + wq)))
    zeros = 0
    done = 0
    while done < trials:
        k = min(block, trials - done)
        P = rng.integers(0, n, size=(k, wp))
        z, first = _scan(ctx, P, Q, variant)
        zeros += z
        if first:
            p = OrePoly(ctx, P[first[0]].tolist())
            q = OrePoly(ctx, Q[first[1]].tolist())
            return PropertyVerdict(name, Status.FAILS, _witness(ctx, p, q, variant),
                                   bound={"deg_p": deg_p, "deg_q": deg_q}, mode="randomized", seed=seed,
                                   trials=done + first[0] + 1, elapsed_ms=clock.ms,
                                   detail={"variant": variant, "right_factors": q_desc})
        done += k
    return PropertyVerdict(name, Status.CERTIFIED,
                           bound={"deg_p": deg_p, "deg_q": deg_q, "left_factors_sampled": trials,
                                  "right_factors": q_desc},
                           mode="randomized", seed=seed, trials=trials, elapsed_ms=clock.ms,
                           detail={"zero_products": zeros, "variant": variant,
                                   "note": f"no counterexample found in {trials} trials"})
