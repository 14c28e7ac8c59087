"""Verdict type shared by every checker."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..ore import OrePoly
from ..ring import RingElem, RingSubset


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    CERTIFIED = "certified_up_to_bound"


@dataclass
class PropertyVerdict:
    property: str
    status: Status
    witness: "dict | None" = None
    bound: "dict | None" = None
    mode: str = "exhaustive"
    seed: "int | None" = None
    trials: "int | None" = None
    elapsed_ms: float = 0.0
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status is Status.FAILS and not self.witness:
            raise ValueError("a failing verdict must carry a witness")
        if self.status is Status.CERTIFIED and self.bound is None:
            raise ValueError("a bounded certificate must state its bound")
        if self.mode.startswith("randomized") and self.status is Status.HOLDS:
            raise ValueError("randomized search can never establish a property")

    @property
    def ok(self):
        return self.status is not Status.FAILS

    def to_json(self):
        return {
            "property": self.property,
            "status": self.status.value,
            "witness": render(self.witness),
            "bound": render(self.bound),
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "detail": render(self.detail),
        }


def render(obj):
    """JSON-ready rendering: elements by name, polynomials as literals, subsets as name lists."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, RingElem):
        return obj.ring.name(obj.index)
    if isinstance(obj, OrePoly):
        return obj.literal()
    if isinstance(obj, RingSubset):
        return obj.names
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): render(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [render(v) for v in obj]
    raise TypeError(f"cannot render {type(obj).__name__}")


class Stopwatch:
    def __init__(self):
        self.start = time.perf_counter()

    @property
    def ms(self):
        return (time.perf_counter() - self.start) * 1000.0
