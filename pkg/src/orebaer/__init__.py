"""Exact arithmetic in finite rings and their Ore extensions R[x; sigma, delta]."""

from .errors import OreBaerError
from .maps import OreContext, RingMorphism, SigmaDerivation, context_from_rules, make_context
from .ore import NEG_INF, OrePoly, idempotent_search, monomial_shift, ore_mul
from .ring import FiniteRing, RingElem, RingSubset, construct_ring, idempotent_set

__version__ = "0.1.0"

__all__ = [
    "FiniteRing",
    "NEG_INF",
    "OreBaerError",
    "OreContext",
    "OrePoly",
    "RingElem",
    "RingMorphism",
    "RingSubset",
    "SigmaDerivation",
    "construct_ring",
    "context_from_rules",
    "idempotent_search",
    "idempotent_set",
    "make_context",
    "monomial_shift",
    "ore_mul",
]
