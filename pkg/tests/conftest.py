import random

import pytest
from hypothesis import settings, strategies as st

from finitetype.braid import BraidWord, Letter, Kind

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def words(draw, n=None, min_len=0, max_len=8, kinds=(Kind.POS, Kind.NEG)):
    n = n or draw(st.integers(2, 5))
    letters = draw(
        st.lists(
            st.builds(Letter, st.integers(1, n - 1), st.sampled_from(kinds)),
            min_size=min_len,
            max_size=max_len,
        )
    )
    return BraidWord(n, tuple(letters))


@pytest.fixture
def rng():
    return random.Random(20261016)
