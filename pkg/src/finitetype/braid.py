"""Oriented (possibly singular) braid words and the permutation map.

Strands are numbered ``1..n`` from the left, the floor is the bottom of the
picture and a word is read bottom to top.  An orientation function ``o`` gives
each position a bit: 0 means the strand at that position runs upward (enters
at the floor), 1 means it runs downward.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence


class Kind(str, Enum):
    POS = "s"  # sigma_i
    NEG = "s^-1"  # sigma_i^-1
    SING = "x"  # singular crossing
    SPOS = "p"  # sigma_i^x sigma_i
    SNEG = "m"  # sigma_i^x sigma_i^-1

    @property
    def singular(self) -> bool:
        return self in (Kind.SING, Kind.SPOS, Kind.SNEG)

    @property
    def swaps(self) -> bool:
        """Whether the letter exchanges the strands at positions i, i+1."""
        return self in (Kind.POS, Kind.NEG, Kind.SING)


_INVERSE = {
    Kind.POS: Kind.NEG,
    Kind.NEG: Kind.POS,
    Kind.SING: Kind.SING,
    Kind.SPOS: Kind.SNEG,
    Kind.SNEG: Kind.SPOS,
}


@dataclass(frozen=True, order=True)
class Letter:
    index: int
    kind: Kind

    def inverse(self) -> Letter:
        """Letter of the upside-down, crossing-reversed word (singular points stay)."""
        return Letter(self.index, _INVERSE[self.kind])

    def render(self) -> str:
        i = self.index
        return {
            Kind.POS: f"s{i}",
            Kind.NEG: f"s{i}^-1",
            Kind.SING: f"x{i}",
            Kind.SPOS: f"p{i}",
            Kind.SNEG: f"m{i}",
        }[self.kind]

    def __str__(self):
        return self.render()


def s(i: int) -> Letter:
    return Letter(i, Kind.POS)


def sinv(i: int) -> Letter:
    return Letter(i, Kind.NEG)


def sp(i: int) -> Letter:
    return Letter(i, Kind.SPOS)


def sm(i: int) -> Letter:
    return Letter(i, Kind.SNEG)


def sx(i: int) -> Letter:
    return Letter(i, Kind.SING)


def power(i: int, e: int) -> list[Letter]:
    """``sigma_i**e`` as |e| letters."""
    return [s(i) if e > 0 else sinv(i)] * abs(e)


def parse_orientation(bits: str | Sequence[int] | None, n: int) -> tuple[int, ...]:
    """Orientation string (index 1 leftmost) to a tuple of bits; ``None`` means all zero."""
    if bits is None:
        return (0,) * n
    if isinstance(bits, str):
        if not re.fullmatch(r"[01]*", bits):
            raise ValueError(f"orientation must be a string over {{0,1}}: {bits!r}")
        out = tuple(int(b) for b in bits)
    else:
        out = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in out):
            raise ValueError(f"orientation bits must be 0 or 1: {bits!r}")
    if len(out) != n:
        raise ValueError(f"orientation has length {len(out)}, expected {n}")
    return out


def render_orientation(o: Sequence[int]) -> str:
    return "".join(str(b) for b in o)


@dataclass(frozen=True)
class BraidWord:
    """A free word in braid letters on ``strands`` strands with orientation ``o``.

    Words are never reduced automatically; ``s1 s1^-1`` stays two letters.
    """

    strands: int
    letters: tuple[Letter, ...] = ()
    o: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid word needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "o", parse_orientation(self.o, self.strands))
        for letter in self.letters:
            if not 1 <= letter.index < self.strands:
                raise ValueError(
                    f"generator index {letter.index} out of range for {self.strands} strands"
                )

    @classmethod
    def from_letters(cls, letters: Iterable[Letter], n: int, o=None) -> BraidWord:
        return cls(n, tuple(letters), o)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    @property
    def singularity_count(self) -> int:
        return sum(1 for letter in self.letters if letter.kind.singular)

    @property
    def is_singular(self) -> bool:
        return self.singularity_count > 0

    def with_letters(self, letters: Iterable[Letter]) -> BraidWord:
        return BraidWord(self.strands, tuple(letters), self.o)

    def inverse(self) -> BraidWord:
        return self.with_letters(letter.inverse() for letter in reversed(self.letters))

    def mirror(self) -> BraidWord:
        """Negate every non-singular exponent (the mirror image of the closure)."""
        flip = {Kind.POS: Kind.NEG, Kind.NEG: Kind.POS}
        if self.is_singular:
            raise ValueError("mirror is only defined for non-singular words")
        return self.with_letters(Letter(x.index, flip[x.kind]) for x in self.letters)

    def free_reduce(self) -> BraidWord:
        """Cancel adjacent ``s_i s_i^-1`` pairs (valid in the braid group)."""
        return self.with_letters(free_reduce(self.letters))

    def render(self) -> str:
        return render(self)

    def __str__(self):
        return self.render() or "e"


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if (
            stack
            and not letter.kind.singular
            and stack[-1].index == letter.index
            and stack[-1].kind == _INVERSE[letter.kind]
        ):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


_TOKEN = re.compile(r"^([sxpm])(\d+)(?:\^(-?\d+))?$")


def parse_letters(text: str) -> list[Letter]:
    letters: list[Letter] = []
    if text.strip() == "e":  # the empty word, as printed by str()
        return letters
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"malformed token {tok!r}")
        head, idx, exp = m.group(1), int(m.group(2)), m.group(3)
        if idx < 1:
            raise ValueError(f"generator index must be positive: {tok!r}")
        if head == "s":
            e = 1 if exp is None else int(exp)
            if e == 0:
                raise ValueError(f"zero exponent in {tok!r}")
            letters.extend(power(idx, e))
        else:
            if exp is not None:
                raise ValueError(f"exponent not allowed on singular token {tok!r}")
            letters.append(Letter(idx, {"x": Kind.SING, "p": Kind.SPOS, "m": Kind.SNEG}[head]))
    return letters


def parse_braid_word(text: str, n: int, o=None) -> BraidWord:
    """Parse the whitespace-separated grammar ``s<i>[^<e>] | x<i> | p<i> | m<i>``.

    >>> str(parse_braid_word("s1^2 m2", 3))
    's1 s1 m2'
    """
    if n < 2:
        raise ValueError("a braid word needs at least 2 strands")
    return BraidWord(n, tuple(parse_letters(text)), o)


def render(w: BraidWord | Iterable[Letter]) -> str:
    letters = w.letters if isinstance(w, BraidWord) else w
    return " ".join(letter.render() for letter in letters)


def identity(n: int, o=None) -> BraidWord:
    return BraidWord(n, (), o)


def _check_compatible(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")
    if a.o != b.o:
        raise ValueError(
            f"orientation mismatch: {render_orientation(a.o)} vs {render_orientation(b.o)}"
        )


def compose(bottom: BraidWord, top: BraidWord) -> BraidWord:
    """Place ``top`` on top of ``bottom``: the letters of ``bottom`` come first."""
    _check_compatible(bottom, top)
    if bottom.letters and not bottom.is_singular and top.letters:
        # the bottom word has to land on the orientation pattern top starts from
        if strand_orientations_after(bottom) != bottom.o:
            raise ValueError("bottom word does not preserve the orientation pattern")
    return BraidWord(bottom.strands, bottom.letters + top.letters, bottom.o)


# -- permutations ------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other`` (apply ``other`` first)."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_full_cycle(self) -> bool:
        return len(self.cycles()) == 1

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def position_permutation(w: BraidWord | Iterable[Letter], n: int | None = None) -> Permutation:
    """Bottom-to-top position map: the strand entering the floor at ``i`` leaves the ceiling at ``pi(i)``.

    Singular crossings count as transpositions; ``p``/``m`` letters are pure.
    """
    if isinstance(w, BraidWord):
        n, letters = w.strands, w.letters
    else:
        letters = tuple(w)
    assert n is not None
    at = list(range(1, n + 1))  # at[pos-1] = strand (named by its floor position)
    for letter in letters:
        if letter.kind.swaps:
            i = letter.index - 1
            at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * n
    for pos, strand in enumerate(at, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def strand_orientations_after(w: BraidWord, upto: int | None = None) -> tuple[int, ...]:
    """Orientation bits at each position after the first ``upto`` letters (all, by default)."""
    ori = list(w.o)
    for letter in w.letters[: len(w.letters) if upto is None else upto]:
        if letter.kind.swaps:
            i = letter.index - 1
            ori[i], ori[i + 1] = ori[i + 1], ori[i]
    return tuple(ori)


def crossing_epsilons(w: BraidWord) -> list[int]:
    """For each letter, ``(-1)**(a+b)`` for the orientation bits of the two strands it involves."""
    ori = list(w.o)
    out = []
    for letter in w.letters:
        i = letter.index - 1
        out.append(-1 if ori[i] != ori[i + 1] else 1)
        if letter.kind.swaps:
            ori[i], ori[i + 1] = ori[i + 1], ori[i]
    return out


def permutation_of(w: BraidWord) -> Permutation:
    """The map from incoming to outgoing boundary points, each side enumerated left to right.

    Upward strands (bit 0) enter at the floor, downward strands (bit 1) at the
    ceiling, so downward positions read the position map backwards.
    """
    if w.is_singular:
        raise ValueError("permutation_of is defined for non-singular words only")
    pi = position_permutation(w)
    pinv = pi.inverse()
    images = []
    for i in range(1, w.strands + 1):
        j = pi(i) if w.o[i - 1] == 0 else pinv(i)
        if w.o[j - 1] != w.o[i - 1]:
            raise ValueError(
                f"word {w} does not respect orientation {render_orientation(w.o)}"
            )
        images.append(j)
    return Permutation(tuple(images))


def is_pure(w: BraidWord) -> bool:
    return position_permutation(w).is_identity()


def is_knot_closure(w: BraidWord) -> bool:
    return permutation_of(w).is_full_cycle()
