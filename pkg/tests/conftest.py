import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from orebaer.maps import context_from_rules, make_context
from orebaer.ore import OrePoly
from orebaer.registry import default_registry
from orebaer.ring import construct_ring

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

REGISTRY = default_registry()
LIVE_IDS = sorted(i for i, r in REGISTRY.examples.items() if not r.skipped)

SMALL_RINGS = {
    "Z2": "modular:2",
    "Z4": "modular:4",
    "Z6": "modular:6",
    "Z8": "modular:8",
    "Z12": "modular:12",
    "Z2[t]/t2": {"kind": "quotient", "base": "modular:2", "modulus": [0, 0, 1]},
    "Z2[t]/t3": {"kind": "quotient", "base": "modular:2", "modulus": [0, 0, 0, 1]},
    "F4": {"kind": "quotient", "base": "modular:2", "modulus": [1, 1, 1]},
    "Z3[u]/u2+1": {"kind": "quotient", "base": "modular:3", "modulus": [1, 0, 1], "var": "u"},
    "Z4[t]/t2": {"kind": "quotient", "base": "modular:4", "modulus": [0, 0, 1]},
    "UT(Z2)": "ut:modular:2",
    "UT(Z3)": "ut:modular:3",
    "M2(Z2)": "matrix:2:modular:2",
    "Z2xZ2": {"kind": "product", "left": "modular:2", "right": "modular:2"},
    "Z2xZ3[t]/t2": {"kind": "product", "left": "modular:2",
                    "right": {"kind": "quotient", "base": "modular:3", "modulus": [0, 0, 1]}},
}

_ring_cache = {}


def small_ring(name):
    if name not in _ring_cache:
        _ring_cache[name] = construct_ring(SMALL_RINGS[name])
    return _ring_cache[name]


_inst_cache = {}


def instance(ex_id):
    if ex_id not in _inst_cache:
        _inst_cache[ex_id] = REGISTRY.instantiate(ex_id)
    return _inst_cache[ex_id]


def registry_contexts():
    return [instance(i).ctx for i in LIVE_IDS]


def extra_contexts():
    """Contexts outside the registry, including a non-automorphism and inner derivations."""
    out = []
    R = small_ring("Z2[t]/t3")
    out.append(context_from_rules(R, {"rule": "evaluate_at_zero"}, None, name="Z2[t]/t3 eval0"))
    R = small_ring("Z2[t]/t2")
    out.append(context_from_rules(R, None, {"rule": "derivative"}, name="Z2[t]/t2 d/dt"))
    R = small_ring("UT(Z3)")
    out.append(context_from_rules(R, None, {"rule": "inner", "element": "[[1,1],[0,2]]"}, name="UT(Z3) inner"))
    R = small_ring("F4")
    frob = [R.mul(a, a) for a in range(R.order)]
    out.append(make_context(R, frob, name="F4 frobenius"))
    out.append(make_context(small_ring("Z6"), name="Z6"))
    return out


ALL_CONTEXTS = None


def all_contexts():
    global ALL_CONTEXTS
    if ALL_CONTEXTS is None:
        ALL_CONTEXTS = registry_contexts() + extra_contexts()
    return ALL_CONTEXTS


def polys(ctx, max_degree):
    """Strategy for OrePolys of degree <= max_degree over ctx."""
    n = ctx.ring.order
    return st.lists(st.integers(0, n - 1), max_size=max_degree + 1).map(lambda c: OrePoly(ctx, c))


def context_ids():
    return [c.name for c in all_contexts()]


@pytest.fixture(params=range(len(LIVE_IDS) + 5), ids=lambda k: (LIVE_IDS + ["eval0", "deriv", "inner", "frob", "Z6"])[k])
def any_ctx(request):
    return all_contexts()[request.param]
