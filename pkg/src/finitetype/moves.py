"""Move words for the ``C_{k,d,o}`` family and the signed word lists of the difference formula."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .braid import (
    BraidWord,
    Kind,
    Letter,
    compose,
    parse_orientation,
    permutation_of,
    power,
    render_orientation,
    s,
)
from .singular import (
    DEFAULT_CONVENTION,
    FormalSum,
    SignConvention,
    sign_of,
    so,
)


@dataclass(frozen=True)
class MoveSpec:
    """One move: ``k >= 1``, a vector ``d`` of ``k+1`` entries in ``{+-2}``, orientation on ``k+2`` strands."""

    k: int
    d: tuple[int, ...]
    o: tuple[int, ...]

    def __init__(self, k: int, d: Sequence[int], o=None):
        if k < 1:
            raise ValueError("k must be a positive integer")
        d = tuple(int(x) for x in d)
        if len(d) != k + 1:
            raise ValueError(f"d must have k+1 = {k + 1} entries, got {len(d)}")
        if any(x not in (2, -2) for x in d):
            raise ValueError(f"entries of d must be +2 or -2: {d}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "o", parse_orientation(o, k + 2))

    @property
    def strands(self) -> int:
        return self.k + 2

    def to_json(self, conv: SignConvention = DEFAULT_CONVENTION) -> dict:
        return {"k": self.k, "d": list(self.d), "o": render_orientation(self.o), "conv": SignConvention(conv).value}

    @classmethod
    def from_json(cls, data: dict | str) -> tuple[MoveSpec, SignConvention]:
        if isinstance(data, str):
            data = json.loads(data)
        spec = cls(int(data["k"]), data["d"], data.get("o"))
        return spec, SignConvention(data.get("conv", DEFAULT_CONVENTION.value))

    def __str__(self):
        return f"k={self.k} d=({','.join(map(str, self.d))}) o={render_orientation(self.o)}"


def all_specs(k: int, o=None) -> Iterator[MoveSpec]:
    for d in itertools.product((2, -2), repeat=k + 1):
        yield MoveSpec(k, d, o)


def bh_blocks(k: int, d: Sequence[int], offset: int = 0) -> list[tuple[int, int]]:
    """The six-factor product as ``(generator index, exponent)`` blocks."""
    d = list(d)
    blocks = [(i, d[i - 1]) for i in range(1, k + 1)]
    blocks.append((k + 1, d[k]))
    blocks += [(k + 1 - i, -d[k - i]) for i in range(1, k + 1)]
    blocks += [(i, d[i - 1]) for i in range(2, k + 1)]
    blocks.append((k + 1, -d[k]))
    blocks += [(k + 2 - i, -d[k + 1 - i]) for i in range(2, k + 1)]
    return [(i + offset, e) for i, e in blocks]


def _blocks_to_letters(blocks) -> list[Letter]:
    out: list[Letter] = []
    for i, e in blocks:
        out += power(i, e)
    return out


def bh_word(spec: MoveSpec) -> BraidWord:
    """Pure braid on ``k+2`` strands whose insertion performs the move."""
    return BraidWord(spec.strands, tuple(_blocks_to_letters(bh_blocks(spec.k, spec.d))), spec.o)


def u_vectors(k: int) -> Iterator[tuple[int, ...]]:
    """All of ``Z_2^k``, ordered from all-ones down to all-zeros (first coordinate fastest)."""
    for bits in itertools.product((1, 0), repeat=k):
        yield tuple(reversed(bits))


def flip(u: Sequence[int]) -> tuple[int, ...]:
    return tuple(1 - x for x in u)


def w_letters(
    u: Sequence[int], variant: str = "squared", reversed_: bool = False, offset: int = 0
) -> list[Letter]:
    if variant not in ("squared", "singular"):
        raise ValueError(f"unknown variant {variant!r}")
    idx = [i for i in range(1, len(u) + 1) if u[i - 1]]
    if reversed_:
        idx.reverse()
    out: list[Letter] = []
    for i in idx:
        if variant == "squared":
            out += [s(i + offset), s(i + offset)]
        else:
            out.append(Letter(i + offset, Kind.SPOS))
    return out


def w_word(
    u: Sequence[int],
    variant: str = "squared",
    reversed: bool = False,
    n: int | None = None,
    o=None,
    offset: int = 0,
) -> BraidWord:
    """``W_u`` (ascending) or ``W_u^r`` (descending): ``sigma_i**2`` or ``sigma_i^+`` where ``u_i = 1``."""
    n = n or len(u) + 2 + offset
    return BraidWord(n, tuple(w_letters(u, variant, reversed, offset)), o)


def theorem_sign(u: Sequence[int], spec: MoveSpec, conv: SignConvention = DEFAULT_CONVENTION) -> int:
    """Overall sign of the ``u`` term, the ``d_{k+1}`` prefactor included."""
    conv = SignConvention(conv)
    k, d, o = spec.k, spec.d, spec.o
    if len(u) != k:
        raise ValueError(f"u must have {k} entries")
    sign = sign_of(d[k]) * conv.orientation_sign(o[k], o[k + 1])
    for i in range(1, k + 1):
        sign *= (-1) ** (u[i - 1] + 1) * sign_of(d[i - 1]) * conv.orientation_sign(o[i - 1], o[i])
    return sign


@dataclass(frozen=True)
class MovePair:
    spec: MoveSpec
    T: BraidWord
    K_word: BraidWord
    J_word: BraidWord


def _require_knot(T: BraidWord, n: int, o) -> None:
    if T.strands != n:
        raise ValueError(f"T has {T.strands} strands, expected {n}")
    if T.o != tuple(o):
        raise ValueError("T carries a different orientation")
    if not permutation_of(T).is_full_cycle():
        raise ValueError(f"closure of {T} is not a knot (permutation {permutation_of(T)})")


def make_pair(spec: MoveSpec, T: BraidWord) -> MovePair:
    """``K = closure(BH T)`` and ``J = closure(T)``: knots one move apart."""
    _require_knot(T, spec.strands, spec.o)
    return MovePair(spec, T, compose(bh_word(spec), T), T)


def _check_x(x: BraidWord, n: int, o, target) -> None:
    if x.strands != n or x.o != tuple(o):
        raise ValueError("x has the wrong strand count or orientation")
    if target is not None and permutation_of(x) != target:
        raise ValueError(f"x has permutation {permutation_of(x)}, expected {target}")


def rhs_terms(
    spec: MoveSpec,
    x: BraidWord,
    conv: SignConvention = DEFAULT_CONVENTION,
    variant: str = "squared",
    T: BraidWord | None = None,
) -> list[tuple[int, BraidWord]]:
    """Signed words ``W_u sigma_{k+1}^2 W_{u+1}^r x`` over all ``u`` in ``Z_2^k``.

    With ``variant="singular"`` every square is replaced by ``sigma^+``.
    """
    _check_x(x, spec.strands, spec.o, permutation_of(T) if T is not None else None)
    return _block_terms(spec, x, conv, variant, offset=0, literal=False)


def _block_terms(spec, x, conv, variant, offset, literal):
    k = spec.k
    mid = [s(k + 1 + offset)] * 2 if variant == "squared" else [Letter(k + 1 + offset, Kind.SPOS)]
    out = []
    for u in u_vectors(k):
        right = u if literal else flip(u)
        letters = (
            w_letters(u, variant, False, offset)
            + mid
            + w_letters(right, variant, True, offset)
            + list(x.letters)
        )
        out.append((theorem_sign(u, spec, conv), BraidWord(x.strands, tuple(letters), x.o)))
    return out


def rhs_symbolic(spec: MoveSpec, conv: SignConvention = DEFAULT_CONVENTION, offset: int = 0, n: int | None = None, o=None) -> FormalSum:
    """``e + sum_u so_u * U_u sigma_{k+1}^(s) U_{u+1}^-1``, built directly from the words."""
    conv = SignConvention(conv)
    k, d = spec.k, spec.d
    n = n or spec.strands
    o = spec.o if o is None else parse_orientation(o, n)
    ang = {i: Letter(i + offset, Kind.SPOS if d[i - 1] > 0 else Kind.SNEG) for i in range(1, k + 2)}
    terms: dict = {(): 1}
    for u in u_vectors(k):
        sign = so(k + 1, d[k], spec.o, conv)
        for i in range(1, k + 1):
            sign *= so(i, d[i - 1], spec.o, conv) * (-1) ** (u[i - 1] + 1)
        left = [ang[i] for i in range(1, k + 1) if u[i - 1]]
        v = flip(u)
        right_inv = [ang[i].inverse() for i in range(k, 0, -1) if v[i - 1]]
        word = tuple(left + [ang[k + 1]] + right_inv)
        terms[word] = terms.get(word, 0) + sign
    return FormalSum(n, o, terms)


# -- several blocks side by side ----------------------------------------------


def _block_orientation(specs: Sequence[MoveSpec]) -> tuple[int, ...]:
    ks = {sp.k for sp in specs}
    if len(ks) != 1:
        raise ValueError("all blocks must share the same k")
    return tuple(b for sp in specs for b in sp.o)


def block_bh_blocks(specs: Sequence[MoveSpec]) -> list[tuple[int, int]]:
    if not specs:
        raise ValueError("need at least one block")
    k = specs[0].k
    _block_orientation(specs)
    out = []
    for j, sp in enumerate(specs):
        out += bh_blocks(k, sp.d, offset=j * (k + 2))
    return out


def block_bh_word(specs: Sequence[MoveSpec]) -> BraidWord:
    """Blocks ``BH_{d_j}^{o_j}(k)`` placed side by side on disjoint windows of ``k+2`` strands."""
    o = _block_orientation(specs)
    return BraidWord(len(o), tuple(_blocks_to_letters(block_bh_blocks(specs))), o)


def block_rhs_terms(
    specs: Sequence[MoveSpec],
    x: BraidWord,
    conv: SignConvention = DEFAULT_CONVENTION,
    variant: str = "squared",
    literal: bool = False,
    T: BraidWord | None = None,
) -> list[tuple[int, BraidWord]]:
    """Signed words of every block, ``2**k`` per block.

    ``literal=True`` uses ``W_u^r`` instead of ``W_{u+1}^r`` on the right.
    """
    o = _block_orientation(specs)
    _check_x(x, len(o), o, permutation_of(T) if T is not None else None)
    k = specs[0].k
    out = []
    for j, sp in enumerate(specs):
        out += _block_terms(sp, x, conv, variant, offset=j * (k + 2), literal=literal)
    return out


def block_rhs_symbolic(specs: Sequence[MoveSpec], conv: SignConvention = DEFAULT_CONVENTION, literal: bool = False) -> FormalSum:
    o = _block_orientation(specs)
    k = specs[0].k
    total = FormalSum.identity(len(o), o)
    for j, sp in enumerate(specs):
        part = rhs_symbolic(sp, conv, offset=j * (k + 2), n=len(o), o=o) - FormalSum.identity(len(o), o)
        if literal:
            part = _literal_variant(part, sp, conv, j * (k + 2), len(o), o)
        total = total + part
    return total


def _literal_variant(part, sp, conv, offset, n, o):
    k, d = sp.k, sp.d
    ang = {i: Letter(i + offset, Kind.SPOS if d[i - 1] > 0 else Kind.SNEG) for i in range(1, k + 2)}
    terms = {}
    for u in u_vectors(k):
        sign = so(k + 1, d[k], sp.o, conv)
        for i in range(1, k + 1):
            sign *= so(i, d[i - 1], sp.o, conv) * (-1) ** (u[i - 1] + 1)
        left = [ang[i] for i in range(1, k + 1) if u[i - 1]]
        right_inv = [ang[i].inverse() for i in range(k, 0, -1) if u[i - 1]]
        word = tuple(left + [ang[k + 1]] + right_inv)
        terms[word] = terms.get(word, 0) + sign
    return FormalSum(n, o, terms)
