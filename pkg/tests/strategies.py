"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from gl2hopf.algebra import CoeffRing, LocalizedCarrier

RINGS = [CoeffRing.integers(), CoeffRing.rationals(), CoeffRing.prime_field(2),
         CoeffRing.prime_field(3), CoeffRing.prime_field(7)]

rings = st.sampled_from(RINGS)
small = st.integers(-3, 3)


def exps(width, lo=0, hi=2):
    return st.tuples(*[st.integers(lo, hi)] * width)


def term_dicts(width, lo=0, hi=2, max_terms=4):
    return st.dictionaries(exps(width, lo, hi), small, max_size=max_terms)


@st.composite
def localized(draw, carrier: LocalizedCarrier):
    return carrier.make(draw(term_dicts(4)), (draw(st.integers(0, 2)),))


@st.composite
def split_elems(draw, carrier):
    """Element of a one-leg SplitCarrier with Laurent exponents."""
    data = {c: draw(term_dicts(carrier.width, -2, 2, 3)) for c in range(carrier.ncomp)}
    return carrier.make(data)
