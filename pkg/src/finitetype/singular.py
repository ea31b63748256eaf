"""Free integer module on singular braid words.

A :class:`FormalSum` is a finite integer combination of braid words that share
a strand count and an orientation.  The calculus here is the one obtained by
applying the Birman-Lin condition letter by letter:

* a singular crossing resolves as (positive crossing) - (negative crossing),
  where positive/negative refer to the *oriented* crossing sign;
* therefore ``sigma_i**(+-2) = e + so * sigma_i^(+-)`` and
  ``sigma_i^+ sigma_i^- = eps * (sigma_i^+ - sigma_i^-)``, with ``eps`` the
  orientation sign of the two strands meeting at that crossing.
"""

from __future__ import annotations

import json
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .braid import (
    BraidWord,
    Kind,
    Letter,
    free_reduce,
    parse_braid_word,
    parse_orientation,
    render,
    s,
    sinv,
)

Word = tuple[Letter, ...]


class SignConvention(str, Enum):
    """How the orientation bits of two neighbouring strands enter a local sign."""

    ADDITIVE = "additive"  # (-1)**(o(i) + o(i+1))
    MULTIPLICATIVE = "multiplicative"  # (-1)**(o(i) * o(i+1))

    def orientation_sign(self, a: int, b: int) -> int:
        e = a + b if self is SignConvention.ADDITIVE else a * b
        return -1 if e % 2 else 1


DEFAULT_CONVENTION = SignConvention.ADDITIVE


def sign_of(x: int) -> int:
    if x == 0:
        raise ValueError("sign of zero is undefined")
    return 1 if x > 0 else -1


def so(i: int, d: int, o: Sequence[int], conv: SignConvention = DEFAULT_CONVENTION) -> int:
    """Local sign in ``sigma_i**d = e + so * sigma_i^(sign d)`` (``i`` is 1-based)."""
    if d not in (2, -2):
        raise ValueError(f"d must be +2 or -2, got {d}")
    return sign_of(d) * SignConvention(conv).orientation_sign(o[i - 1], o[i])


def _epsilons(letters: Word, o: tuple[int, ...]) -> list[int]:
    ori = list(o)
    out = []
    for letter in letters:
        i = letter.index - 1
        out.append(-1 if ori[i] != ori[i + 1] else 1)
        if letter.kind.swaps:
            ori[i], ori[i + 1] = ori[i + 1], ori[i]
    return out


def _sort_key(word: Word):
    return (sum(1 for x in word if x.kind.singular), len(word), render(word))


class FormalSum:
    """Immutable integer combination of braid words on ``n`` strands with orientation ``o``."""

    __slots__ = ("n", "o", "_terms")

    def __init__(self, n: int, o, terms: Mapping[Word, int] | Iterable[tuple[Word, int]] = ()):
        self.n = n
        self.o = parse_orientation(o, n)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Word, int] = {}
        for word, c in items:
            word = tuple(word)
            for letter in word:
                if not 1 <= letter.index < n:
                    raise ValueError(f"letter {letter} out of range for {n} strands")
            clean[word] = clean.get(word, 0) + c
        self._terms = {w: c for w, c in clean.items() if c}

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n: int, o=None) -> FormalSum:
        return cls(n, o)

    @classmethod
    def identity(cls, n: int, o=None) -> FormalSum:
        return cls(n, o, {(): 1})

    @classmethod
    def from_word(cls, w: BraidWord, coeff: int = 1) -> FormalSum:
        return cls(w.strands, w.o, {w.letters: coeff})

    @classmethod
    def parse(cls, pairs: Iterable[tuple[int, str]], n: int, o=None) -> FormalSum:
        return cls(n, o, [(parse_braid_word(text, n, o).letters, c) for c, text in pairs])

    # -- access -------------------------------------------------------------
    @property
    def terms(self) -> dict[Word, int]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        for word in sorted(self._terms, key=_sort_key):
            yield word, self._terms[word]

    def coefficient(self, word: Word | BraidWord | str) -> int:
        if isinstance(word, str):
            word = parse_braid_word(word, self.n, self.o).letters
        elif isinstance(word, BraidWord):
            word = word.letters
        return self._terms.get(tuple(word), 0)

    def words(self) -> list[BraidWord]:
        return [BraidWord(self.n, w, self.o) for w, _ in self]

    def is_zero(self) -> bool:
        return not self._terms

    def max_singularities(self) -> int:
        return max((sum(1 for x in w if x.kind.singular) for w in self._terms), default=0)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: FormalSum) -> None:
        if (self.n, self.o) != (other.n, other.o):
            raise ValueError("formal sums live on different strand counts or orientations")

    def __add__(self, other: FormalSum) -> FormalSum:
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return FormalSum(self.n, self.o, out)

    def __neg__(self) -> FormalSum:
        return FormalSum(self.n, self.o, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: FormalSum) -> FormalSum:
        return self + (-other)

    def scale(self, k: int) -> FormalSum:
        return FormalSum(self.n, self.o, {w: k * c for w, c in self._terms.items()})

    def __rmul__(self, k: int) -> FormalSum:
        return self.scale(k)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return (self.n, self.o, self._terms) == (other.n, other.o, other._terms)

    def __hash__(self):
        return hash((self.n, self.o, frozenset(self._terms.items())))

    # -- display / serialization -------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for i, (w, c) in enumerate(self):
            body = render(w) or "e"
            mag = abs(c)
            piece = body if mag == 1 else f"{mag}*{body}" if w else str(mag)
            if i == 0:
                out = ("-" if c < 0 else "") + piece
            else:
                out += (" - " if c < 0 else " + ") + piece
        return out

    def __repr__(self):
        return f"FormalSum(n={self.n}, o={''.join(map(str, self.o))!r}, {str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "word": render(w) or "e"} for w, c in self]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: list[dict] | str, n: int, o=None) -> FormalSum:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.parse([(item["coeff"], item["word"]) for item in data], n, o)


# -- operations ----------------------------------------------------------------


def multiply(a: FormalSum, b: FormalSum) -> FormalSum:
    """Bilinear concatenation: ``a`` below, ``b`` on top."""
    a._check(b)
    out: dict[Word, int] = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            w = wa + wb
            out[w] = out.get(w, 0) + ca * cb
    return FormalSum(a.n, a.o, out)


def expand_letter(
    index: int, d: int, o, conv: SignConvention = DEFAULT_CONVENTION, n: int | None = None
) -> FormalSum:
    """``sigma_i**d = e + so(i) * sigma_i^(sign d)`` for a double crossing ``d = +-2``."""
    o = tuple(o) if not isinstance(o, str) else parse_orientation(o, len(o))
    n = n or len(o)
    if not 1 <= index < n:
        raise ValueError(f"index {index} out of range for {n} strands")
    sign = so(index, d, o, conv)
    kind = Kind.SPOS if d > 0 else Kind.SNEG
    return FormalSum(n, o, {(): 1, (Letter(index, kind),): sign})


def commute_normal_form(word: Word) -> Word:
    """Lexicographic normal form under far commutation ``a_i b_j = b_j a_i`` for ``|i-j| >= 2``."""
    w = list(word)
    changed = True
    while changed:
        changed = False
        for j in range(len(w) - 1):
            a, b = w[j], w[j + 1]
            if a.index - b.index >= 2:
                w[j], w[j + 1] = b, a
                changed = True
    return tuple(w)


@lru_cache(maxsize=200_000)
def _reduce_word(word: Word, o: tuple[int, ...]) -> tuple[tuple[Word, int], ...]:
    word = commute_normal_form(word)
    for j in range(len(word) - 1):
        a, b = word[j], word[j + 1]
        if a.index == b.index and {a.kind, b.kind} == {Kind.SPOS, Kind.SNEG}:
            e = _epsilons(word, o)[j]
            head, tail = word[:j], word[j + 2 :]
            out: dict[Word, int] = {}
            for kind, c in ((Kind.SPOS, e), (Kind.SNEG, -e)):
                for w2, c2 in _reduce_word(head + (Letter(a.index, kind),) + tail, o):
                    out[w2] = out.get(w2, 0) + c * c2
            return tuple((w, c) for w, c in out.items() if c)
    return ((word, 1),)


def key_reduce(sm: FormalSum) -> FormalSum:
    """Rewrite ``sigma_i^+ sigma_i^-`` / ``sigma_i^- sigma_i^+`` to ``eps*(sigma_i^+ - sigma_i^-)``.

    Words are first put in commutation normal form, so a pair counts as
    adjacent when only far-commuting letters separate it.  Each rewrite
    shortens the word, so the process terminates.
    """
    out: dict[Word, int] = {}
    for w, c in sm._terms.items():
        for w2, c2 in _reduce_word(w, sm.o):
            out[w2] = out.get(w2, 0) + c * c2
    return FormalSum(sm.n, sm.o, out)


def singularities(word: Word) -> int:
    return sum(1 for x in word if x.kind.singular)


def truncate(sm: FormalSum, max_sing: int | None) -> FormalSum:
    """Drop every word with more than ``max_sing`` singular letters (``None`` keeps all)."""
    if max_sing is None:
        return sm
    if max_sing < 0:
        raise ValueError("max_sing must be non-negative")
    return FormalSum(sm.n, sm.o, {w: c for w, c in sm._terms.items() if singularities(w) <= max_sing})


def double_blocks(w: BraidWord) -> list[tuple[int, int]]:
    """Split a word into ``sigma_i**(+-2)`` blocks, as ``(index, +-2)`` pairs."""
    letters = w.letters
    if len(letters) % 2:
        raise ValueError("word is not a product of double crossings")
    blocks = []
    for j in range(0, len(letters), 2):
        a, b = letters[j], letters[j + 1]
        if a != b or a.kind not in (Kind.POS, Kind.NEG):
            raise ValueError(f"letters {a} {b} do not form a double crossing")
        blocks.append((a.index, 2 if a.kind is Kind.POS else -2))
    return blocks


def expand_blocks(
    blocks: Sequence[tuple[int, int]],
    n: int,
    o,
    conv: SignConvention = DEFAULT_CONVENTION,
    max_sing: int | None = None,
) -> FormalSum:
    """Multiply out ``prod (e + so * sigma^(+-))`` left to right.

    After every multiplication the product is truncated to ``max_sing``
    singular letters and then key-reduced.  Dropping words with too many
    double points is sound for invariants of degree ``max_sing``; the key
    reduction is an identity.  Truncating first reproduces the hand
    computation for ``k = 1`` term for term.
    """
    o = parse_orientation(o, n)
    acc = FormalSum.identity(n, o)
    for index, d in blocks:
        acc = key_reduce(truncate(multiply(acc, expand_letter(index, d, o, conv, n)), max_sing))
    return acc


def expand_word(
    w: BraidWord, conv: SignConvention = DEFAULT_CONVENTION, max_sing: int | None = None
) -> FormalSum:
    """Birman-Lin expansion of a product of double crossings."""
    return expand_blocks(double_blocks(w), w.strands, w.o, conv, max_sing)


def desingularize(sm: FormalSum) -> FormalSum:
    """Resolve every singular letter into non-singular words, freely reduced.

    ``x_i -> eps*(s_i - s_i^-1)``, ``p_i -> eps*(s_i s_i - e)`` and
    ``m_i -> eps*(e - s_i^-1 s_i^-1)``, where ``eps`` is the orientation sign
    of the two strands at that crossing.
    """
    out: dict[Word, int] = {}
    for w, c in sm._terms.items():
        for w2, c2 in _desingularize_word(w, sm.o):
            out[w2] = out.get(w2, 0) + c * c2
    return FormalSum(sm.n, sm.o, out)


@lru_cache(maxsize=100_000)
def _desingularize_word(word: Word, o: tuple[int, ...]) -> tuple[tuple[Word, int], ...]:
    eps = _epsilons(word, o)
    partial: dict[Word, int] = {(): 1}
    for letter, e in zip(word, eps):
        i = letter.index
        if letter.kind is Kind.SING:
            options = (((s(i),), e), ((sinv(i),), -e))
        elif letter.kind is Kind.SPOS:
            options = (((s(i), s(i)), e), ((), -e))
        elif letter.kind is Kind.SNEG:
            options = (((), e), ((sinv(i), sinv(i)), -e))
        else:
            options = (((letter,), 1),)
        nxt: dict[Word, int] = {}
        for w, c in partial.items():
            for piece, c2 in options:
                w2 = w + piece
                nxt[w2] = nxt.get(w2, 0) + c * c2
        partial = nxt
    out: dict[Word, int] = {}
    for w, c in partial.items():
        w2 = canonical_word(w)
        out[w2] = out.get(w2, 0) + c
    return tuple((w, c) for w, c in out.items() if c)


def canonical_word(word: Word) -> Word:
    """Free reduction modulo far commutation, in commutation normal form."""
    prev = None
    word = tuple(word)
    while word != prev:
        prev = word
        word = free_reduce(commute_normal_form(word))
    return word


def canonical(sm: FormalSum) -> FormalSum:
    """Apply :func:`canonical_word` termwise (for non-singular sums)."""
    out: dict[Word, int] = {}
    for w, c in sm._terms.items():
        w2 = canonical_word(w)
        out[w2] = out.get(w2, 0) + c
    return FormalSum(sm.n, sm.o, out)


def top_degree_normal_form(sm: FormalSum, degree: int) -> FormalSum:
    """Identify ``sigma_i^-`` with ``sigma_i^+`` inside words with exactly ``degree`` singular letters.

    Their difference carries one more double point, so the identification is
    exact for invariants of degree ``degree``.
    """
    out: dict[Word, int] = {}
    for w, c in sm._terms.items():
        if singularities(w) == degree:
            w = tuple(Letter(x.index, Kind.SPOS) if x.kind is Kind.SNEG else x for x in w)
        out[w] = out.get(w, 0) + c
    return FormalSum(sm.n, sm.o, out)


def degree_normal_form(sm: FormalSum, degree: int) -> FormalSum:
    """Canonical representative of ``sm`` as seen by invariants of degree ``degree``.

    Key-reduce, drop words with more than ``degree`` singular letters, then
    identify the two fused letters in top-degree words.
    """
    return key_reduce(top_degree_normal_form(truncate(key_reduce(sm), degree), degree))
