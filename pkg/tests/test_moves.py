import pytest

from finitetype.braid import parse_braid_word, permutation_of
from finitetype.invariants import evaluate
from finitetype.moves import (
    MoveSpec,
    all_specs,
    bh_word,
    block_bh_word,
    block_rhs_terms,
    make_pair,
    rhs_symbolic,
    rhs_terms,
    theorem_sign,
    u_vectors,
    w_word,
)
from finitetype.singular import FormalSum


def test_spec_validation():
    with pytest.raises(ValueError):
        MoveSpec(0, [])
    with pytest.raises(ValueError):
        MoveSpec(1, (2,))
    with pytest.raises(ValueError):
        MoveSpec(1, (2, 3))
    with pytest.raises(ValueError):
        MoveSpec(1, (2, 2), "01")


def test_spec_json_round_trip():
    spec = MoveSpec(2, (2, -2, 2), "0000")
    assert spec.to_json() == {"k": 2, "d": [2, -2, 2], "o": "0000", "conv": "additive"}
    assert MoveSpec.from_json(spec.to_json())[0] == spec


@pytest.mark.parametrize(
    "k, d, expected",
    [
        (1, (2, 2), "s1^2 s2^2 s1^-2 s2^-2"),
        (2, (2, 2, 2), "s1^2 s2^2 s3^2 s2^-2 s1^-2 s2^2 s3^-2 s2^-2"),
        (1, (-2, 2), "s1^-2 s2^2 s1^2 s2^-2"),
    ],
)
def test_bh_word_examples(k, d, expected):
    assert bh_word(MoveSpec(k, d)) == parse_braid_word(expected, k + 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_bh_length(k):
    for spec in all_specs(k):
        assert len(bh_word(spec)) == 8 * k


def test_w_word_examples():
    assert str(w_word((1,), n=3)) == "s1 s1"
    assert str(w_word((0, 0, 0))) == "e"
    assert str(w_word((1, 0, 1), reversed=True)) == "s3 s3 s1 s1"
    assert str(w_word((1, 1), variant="singular")) == "p1 p2"


def test_u_vector_order():
    assert list(u_vectors(2)) == [(1, 1), (0, 1), (1, 0), (0, 0)]


def test_theorem_sign_examples():
    spec = MoveSpec(1, (2, 2))
    assert theorem_sign((1,), spec) == 1
    assert theorem_sign((0,), spec) == -1
    assert theorem_sign((0, 0), MoveSpec(2, (2, 2, 2))) == 1


def test_make_pair():
    T = parse_braid_word("s1 s2", 3)
    pair = make_pair(MoveSpec(1, (2, 2)), T)
    assert pair.K_word == parse_braid_word("s1^2 s2^2 s1^-2 s2^-2 s1 s2", 3)
    assert pair.J_word == T
    make_pair(MoveSpec(2, (2, 2, 2)), parse_braid_word("s1 s2 s3", 4))
    with pytest.raises(ValueError):
        make_pair(MoveSpec(1, (2, 2)), parse_braid_word("s1 s1", 3))


def test_rhs_terms_k1():
    x = parse_braid_word("s1 s2", 3)
    terms = rhs_terms(MoveSpec(1, (2, 2)), x)
    assert [(sg, str(w)) for sg, w in terms] == [
        (1, "s1 s1 s2 s2 s1 s2"),
        (-1, "s2 s2 s1 s1 s1 s2"),
    ]


def test_rhs_terms_k2_signs_and_phi_check():
    x = parse_braid_word("s1 s2 s3", 4)
    terms = rhs_terms(MoveSpec(2, (2, 2, 2)), x)
    assert [sg for sg, _ in terms] == [1, -1, -1, 1]
    assert all(permutation_of(w).is_full_cycle() for _, w in terms)
    with pytest.raises(ValueError):
        rhs_terms(MoveSpec(2, (2, 2, 2)), x, T=parse_braid_word("s3 s2 s1", 4))


def test_singular_variant_matches_symbolic_sum():
    # sigma^+ words closed with x, evaluated, agree with rhs_symbolic closed with x
    spec = MoveSpec(1, (2, -2))
    x = parse_braid_word("s1^-1 s2", 3)
    from finitetype.invariants import evaluate_sum

    direct = sum(sg * evaluate("c2", w) for sg, w in rhs_terms(spec, x, variant="singular"))
    sym = rhs_symbolic(spec) - FormalSum.identity(3)
    closed = FormalSum(3, spec.o, {w + x.letters: c for w, c in sym})
    assert direct == evaluate_sum("c2", closed)


def test_block_words():
    specs = [MoveSpec(1, (2, 2)), MoveSpec(1, (2, -2))]
    w = block_bh_word(specs)
    assert w.strands == 6 and len(w) == 16
    assert {letter.index for letter in w.letters[8:]} == {4, 5}
    assert block_bh_word(specs[:1]) == bh_word(specs[0])
    x = parse_braid_word("s1 s2 s3 s4 s5", 6)
    terms = block_rhs_terms(specs, x)
    assert len(terms) == 4
    assert all(permutation_of(t).is_full_cycle() for _, t in terms)
    assert block_rhs_terms(specs[:1], parse_braid_word("s1 s2", 3)) == rhs_terms(specs[0], parse_braid_word("s1 s2", 3))
    with pytest.raises(ValueError):
        block_bh_word([MoveSpec(1, (2, 2)), MoveSpec(2, (2, 2, 2))])
