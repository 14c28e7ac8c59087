"""Re-evaluate failing witnesses against the definitions, with plain loops.

Nothing here reuses the vectorised scans of the checkers: products of
polynomials go through ``x a = sigma(a) x + delta(a)`` one step at a time and
annihilators are recomputed element by element.
"""

from __future__ import annotations

from ..ore import OrePoly, x_times


def _i(x):
    return int(x.index) if hasattr(x, "index") else int(x)


def _scale(ctx, a, p):
    mul = ctx.ring.mul
    return OrePoly(ctx, [mul(a, c) for c in p.coeffs])


def stepwise_mul(p, q):
    """p q as the sum of a_i (x^i q), with x^i q built by repeated left multiplication by x."""
    ctx = p.ctx
    out = OrePoly(ctx)
    shifted = q
    for i, a in enumerate(p.coeffs):
        if i:
            shifted = x_times(shifted)
        out = out + _scale(ctx, a, shifted)
    return out


def _right_ideal(ring, gens):
    members = {ring.zero, *gens}
    while True:
        grown = set(members)
        for a in members:
            for b in members:
                grown.add(ring.add(a, b))
            for r in range(ring.order):
                grown.add(ring.mul(a, r))
        if grown == members:
            return members
        members = grown


def _right_ann(ring, X):
    return {a for a in range(ring.order) if all(ring.mul(x, a) == ring.zero for x in X)}


def _is_idempotent_generated(ring, A):
    for e in range(ring.order):
        if ring.mul(e, e) == e and {ring.mul(e, r) for r in range(ring.order)} == A:
            return True
    return False


def _Re(ring, e):
    return {ring.mul(r, e) for r in range(ring.order)}


def recheck_witness(verdict, ring, ctx=None):
    """True when the failing verdict's witness really violates the property."""
    w = verdict.witness
    if not w:
        return False
    R = ring
    z = R.zero
    prop = verdict.property
    if prop == "reduced":
        a = _i(w["element"])
        return a != z and R.mul(a, a) == z
    if prop == "abelian":
        e, x = _i(w["idempotent"]), _i(w["x"])
        return R.mul(e, e) == e and R.mul(e, x) != R.mul(x, e)
    if prop == "semiprime":
        a = _i(w["element"])
        return a != z and all(R.mul(R.mul(a, r), a) == z for r in range(R.order))
    if prop == "rigid":
        a = _i(w["element"])
        return a != z and R.mul(a, ctx.sigma(a)) == z
    if prop == "compatible":
        a, b = _i(w["a"]), _i(w["b"])
        ab, asb, adb = R.mul(a, b), R.mul(a, ctx.sigma(b)), R.mul(a, ctx.delta(b))
        return {
            "ab=0 but a*sigma(b)!=0": ab == z and asb != z,
            "a*sigma(b)=0 but ab!=0": asb == z and ab != z,
            "ab=0 but a*delta(b)!=0": ab == z and adb != z,
        }[w["direction"]]
    if prop == "stability":
        e, y = _i(w["idempotent"]), _i(w["element"])
        Re = _Re(R, e)
        f = ctx.sigma if w["map"] == "sigma" else ctx.delta
        return R.mul(e, e) == e and y in Re and f(y) not in Re
    if prop in ("quasi_baer", "baer"):
        gens = [_i(g) for g in w["generated_by"]]
        A = {_i(a) for a in w["annihilator"]}
        if prop == "quasi_baer":
            X = _right_ideal(R, gens)
            expected = _right_ann(R, X)
        else:
            expected = set(range(R.order))
            for g in gens:
                expected &= _right_ann(R, {g})
        return A == expected and not _is_idempotent_generated(R, A)
    if prop == "skew_armendariz":
        p, q, i, j = w["p"], w["q"], w["i"], w["j"]
        if not stepwise_mul(p, q).is_zero():
            return False
        a, b = p.coeff(i), q.coeff(j)
        if ctx.delta.is_zero:
            b_shift = b
            for _ in range(i):
                b_shift = ctx.sigma(b_shift)
            return R.mul(a, b_shift) != z
        return not stepwise_mul(OrePoly.monomial(ctx, a, i), OrePoly.monomial(ctx, b, j)).is_zero()
    raise ValueError(f"no re-check for property {prop!r}")
