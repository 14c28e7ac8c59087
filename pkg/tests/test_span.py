import itertools

from hypothesis import given
from hypothesis import strategies as st

from conftest import small_ring
from orebaer.span import AdditiveSpan, additive_kernel

RINGS = ["Z4", "Z6", "Z2[t]/t2", "Z4[t]/t2", "UT(Z2)", "Z8"]


def _closure(ring, width, vecs):
    """Additive span of ``vecs`` by fixed-point iteration over explicit sets."""
    zero = (ring.zero,) * width
    members = {zero}
    frontier = {zero}
    while frontier:
        fresh = set()
        for m in frontier:
            for v in vecs:
                s = tuple(ring.add(a, b) for a, b in zip(m, v))
                if s not in members:
                    fresh.add(s)
        members |= fresh
        frontier = fresh
    return members


def _vectors(ring, width):
    return st.lists(st.lists(st.integers(0, ring.order - 1), min_size=width, max_size=width).map(tuple),
                    min_size=1, max_size=4)


@given(data=st.data())
def test_span_size_and_membership_match_closure(data):
    R = small_ring(data.draw(st.sampled_from(RINGS)))
    width = data.draw(st.integers(1, 3))
    vecs = data.draw(_vectors(R, width))
    span = AdditiveSpan(R, width)
    for v in vecs:
        span.insert(v)
    ref = _closure(R, width, vecs)
    assert span.size() == len(ref)
    for v in itertools.islice(itertools.product(range(R.order), repeat=width), 600):
        assert (v in span) == (v in ref)


@given(data=st.data())
def test_kernel_matches_brute_force(data):
    R = small_ring(data.draw(st.sampled_from(["Z4", "Z6", "Z2[t]/t2", "UT(Z2)"])))
    width = data.draw(st.integers(1, 2))
    c = data.draw(st.lists(st.integers(0, R.order - 1), min_size=width, max_size=width))

    def image(v):
        acc = R.zero
        for a, b in zip(c, v):
            acc = R.add(acc, R.mul(a, b))
        return (acc,)

    K = additive_kernel(R, width, image)
    ref = {v for v in itertools.product(range(R.order), repeat=width) if image(v) == (R.zero,)}
    assert K.size() == len(ref)
    assert all(v in K for v in ref)


def test_truncated_keeps_low_part():
    R = small_ring("Z4")
    span = AdditiveSpan(R, 2)
    span.insert((1, 2))
    span.insert((2, 0))
    low = span.truncated(1)
    assert low.size() == len({v[:1] for v in _closure(R, 2, [(1, 2), (2, 0)]) if v[1] == 0})
