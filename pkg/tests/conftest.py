from hypothesis import strategies as st


@st.composite
def dominant_weights(draw, n=None, lo=-6, hi=6):
    n = draw(st.integers(1, 5)) if n is None else n
    parts = draw(st.lists(st.integers(lo, hi), min_size=n, max_size=n))
    return tuple(sorted(parts, reverse=True))


@st.composite
def partitions(draw, n=None, hi=6):
    return draw(dominant_weights(n=n, lo=0, hi=hi))
