import random

import pytest
from hypothesis import given, strategies as st

from finitetype.braid import BraidWord, Kind, Letter, parse_braid_word
from finitetype.invariants import evaluate
from finitetype.moves import MoveSpec, all_specs, bh_blocks, bh_word, rhs_symbolic
from finitetype.singular import (
    FormalSum,
    SignConvention,
    canonical,
    degree_normal_form,
    desingularize,
    expand_blocks,
    expand_letter,
    expand_word,
    key_reduce,
    multiply,
    so,
    truncate,
)

ADD, MUL = SignConvention.ADDITIVE, SignConvention.MULTIPLICATIVE


def fs(pairs, n=3, o=None):
    return FormalSum.parse(pairs, n, o)


def test_so_examples():
    assert so(1, 2, (0, 0), ADD) == so(1, 2, (0, 0), MUL) == 1
    assert so(1, -2, (0, 0)) == -1
    assert so(1, 2, (1, 0), ADD) == -1
    assert so(1, 2, (1, 0), MUL) == 1


def test_expand_letter_examples():
    assert str(expand_letter(1, 2, "000")) == "e + p1"
    assert str(expand_letter(1, -2, "000")) == "e - m1"
    assert str(expand_letter(1, 2, "10", ADD)) == "e - p1"


def test_multiply_before_reduction():
    a = fs([(1, ""), (1, "p1")])
    b = fs([(1, ""), (-1, "m1")])
    assert multiply(a, b) == fs([(1, ""), (1, "p1"), (-1, "m1"), (-1, "p1 m1")])
    w = fs([(2, "s1 x2")])
    assert multiply(FormalSum.identity(3), w) == w
    assert multiply(FormalSum.zero(3), w).is_zero()


def test_key_relation_examples():
    assert key_reduce(fs([(1, "p1 m1")])) == fs([(1, "p1"), (-1, "m1")])
    assert key_reduce(fs([(1, ""), (1, "p1"), (-1, "m1"), (-1, "p1 m1")])) == FormalSum.identity(3)
    assert key_reduce(fs([(1, "p2 m1")])) == fs([(1, "p2 m1")])


def test_key_relation_picks_up_orientation_sign():
    assert key_reduce(fs([(1, "m1 p1")], 2, "01")) == fs([(-1, "p1"), (1, "m1")], 2, "01")


def test_truncate_examples():
    assert truncate(fs([(1, "p1 p2 m1")]), 2).is_zero()
    s = fs([(1, ""), (1, "p1 p2"), (-1, "p2 m1"), (3, "p1 p2 m1")])
    assert truncate(s, 2) == fs([(1, ""), (1, "p1 p2"), (-1, "p2 m1")])
    assert truncate(s, None) == s
    with pytest.raises(ValueError):
        truncate(s, -1)


def test_worked_expansion_literally():
    w = parse_braid_word("s1^2 s2^2 s1^-2 s2^-2", 3, "000")
    assert str(expand_word(w, max_sing=2)) == "e + p1 p2 - p2 m1"


def test_expand_rejects_non_double_words():
    with pytest.raises(ValueError):
        expand_word(parse_braid_word("s1 s2", 3))


def test_k2_expansion_matches_four_term_sum():
    spec = MoveSpec(2, (2, 2, 2))
    rhs = rhs_symbolic(spec)
    assert len(rhs) == 5
    assert [c for w, c in rhs if w] == [1, -1, -1, 1] or sorted(c for w, c in rhs if w) == [-1, -1, 1, 1]
    exp = expand_word(bh_word(spec), max_sing=3)
    assert degree_normal_form(exp, 3) == degree_normal_form(rhs, 3)


def test_rhs_symbolic_mixed_d():
    rhs = rhs_symbolic(MoveSpec(1, (-2, 2)))
    assert rhs == fs([(1, ""), (-1, "m1 p2"), (1, "p2 p1")])


def test_rhs_symbolic_k2_sign_order():
    # u = (1,1), (0,1), (1,0), (0,0)
    rhs = rhs_symbolic(MoveSpec(2, (2, 2, 2)))
    assert rhs.coefficient("p1 p2 p3") == 1
    assert rhs.coefficient("p2 p3 m1") == -1
    assert rhs.coefficient("p1 p3 m2") == -1
    assert rhs.coefficient("p3 m2 m1") == 1


def test_desingularize_examples():
    assert desingularize(fs([(1, "x1")], 2)) == fs([(1, "s1"), (-1, "s1^-1")], 2)
    assert desingularize(fs([(1, "p1")], 2)) == fs([(1, "s1 s1"), (-1, "")], 2)
    assert desingularize(FormalSum.identity(2)) == FormalSum.identity(2)


@st.composite
def double_words(draw):
    n = draw(st.integers(2, 4))
    o = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    blocks = draw(st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from((2, -2))), max_size=6))
    letters = []
    for i, d in blocks:
        letters += [Letter(i, Kind.POS if d > 0 else Kind.NEG)] * 2
    return BraidWord(n, tuple(letters), o)


@given(double_words())
def test_birman_lin_soundness(w):
    assert desingularize(expand_word(w)) == canonical(FormalSum.from_word(w))


@st.composite
def pm_sums(draw):
    n = 3
    terms = draw(
        st.lists(
            st.tuples(
                st.lists(st.builds(Letter, st.integers(1, 2), st.sampled_from((Kind.SPOS, Kind.SNEG))), max_size=6),
                st.integers(-3, 3),
            ),
            max_size=4,
        )
    )
    o = draw(st.sampled_from(["000", "010", "111", "001"]))
    return FormalSum(n, o, [(tuple(w), c) for w, c in terms])


def _random_order_reduce(sm, rng):
    """Fire one randomly chosen adjacent redex per word, then finish normally."""
    out = FormalSum.zero(sm.n, sm.o)
    for w, c in sm:
        spots = [j for j in range(len(w) - 1) if w[j].index == w[j + 1].index and {w[j].kind, w[j + 1].kind} == {Kind.SPOS, Kind.SNEG}]
        if not spots:
            out = out + FormalSum(sm.n, sm.o, {w: c})
            continue
        j = rng.choice(spots)
        from finitetype.singular import _epsilons

        e = _epsilons(w, sm.o)[j]
        head, tail, i = w[:j], w[j + 2 :], w[j].index
        out = out + FormalSum(sm.n, sm.o, {head + (Letter(i, Kind.SPOS),) + tail: c * e, head + (Letter(i, Kind.SNEG),) + tail: -c * e})
    return key_reduce(out)


@given(pm_sums(), st.integers(0, 1000))
def test_key_reduce_is_confluent(sm, seed):
    rng = random.Random(seed)
    assert _random_order_reduce(sm, rng) == key_reduce(sm)
    assert key_reduce(key_reduce(sm)) == key_reduce(sm)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_mn_is_identity(k):
    for spec in all_specs(k):
        blocks = bh_blocks(k, spec.d)
        mn = blocks[1 : 2 * k] + blocks[2 * k + 1 :]
        assert expand_blocks(mn, k + 2, spec.o) == FormalSum.identity(k + 2, spec.o)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("bit", [0, 1])
def test_symbolic_theorem_constant_orientation(k, bit):
    for spec in all_specs(k, [bit] * (k + 2)):
        exp = expand_word(bh_word(spec), max_sing=k + 1)
        assert degree_normal_form(exp, k + 1) == degree_normal_form(rhs_symbolic(spec), k + 1)


def test_truncation_is_invisible_to_degree_two_invariants():
    spec = MoveSpec(1, (2, -2))
    T = parse_braid_word("s1^-1 s2 s2 s2", 3)
    full = expand_word(bh_word(spec))
    dropped = [w for w, _ in full if sum(x.kind.singular for x in w) > 2]
    assert dropped
    for w in dropped:
        word = BraidWord(3, w + T.letters)
        assert evaluate("c2", word) == 0 and evaluate("j2", word) == 0


def test_json_round_trip_and_order():
    s = fs([(1, "p1 p2"), (-1, "p2 m1"), (1, "")])
    data = s.to_json()
    assert data[0] == {"coeff": 1, "word": "e"}
    assert FormalSum.from_json(s.dumps(), 3) == s
