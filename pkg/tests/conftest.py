from hypothesis import strategies as st

small_ints = st.integers(min_value=-5, max_value=5)
zstrings = st.lists(small_ints, max_size=12).map(tuple)


@st.composite
def reduced_strings(draw, max_len=3, bound=3, min_len=1):
    n = draw(st.integers(min_value=min_len, max_value=max_len))
    out = []
    while len(out) < n:
        x = draw(st.integers(min_value=-bound, max_value=bound).filter(bool))
        if not out or out[-1] != x:
            out.append(x)
    return tuple(out)
