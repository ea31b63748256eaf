"""Seeded random braid words with a prescribed permutation.

Words are a random prefix followed by a bubble-sort suffix that carries the
prefix's position map onto the target, each swap getting a random sign, so no
rejection sampling is needed.
"""

from __future__ import annotations

import random
from typing import Sequence

from .braid import BraidWord, Letter, Permutation, parse_orientation, position_permutation, s, sinv, sx


def random_letters(rng: random.Random, n: int, length: int) -> list[Letter]:
    return [(s if rng.random() < 0.5 else sinv)(rng.randrange(1, n)) for _ in range(length)]


def realize(rng: random.Random, target: Permutation) -> list[Letter]:
    """Letters whose position map is ``target`` (bubble sort, random crossing signs)."""
    labels = list(target.images)  # strand at floor position p must reach labels[p-1]
    out = []
    changed = True
    while changed:
        changed = False
        for i in range(len(labels) - 1):
            if labels[i] > labels[i + 1]:
                labels[i], labels[i + 1] = labels[i + 1], labels[i]
                out.append((s if rng.random() < 0.5 else sinv)(i + 1))
                changed = True
    return out


def word_with_permutation(
    rng: random.Random, n: int, target: Permutation, prefix_len: int, o=None
) -> BraidWord:
    """Random word of the form ``prefix * suffix`` whose position map is ``target``."""
    prefix = random_letters(rng, n, prefix_len)
    have = position_permutation(prefix, n)
    need = target.compose(have.inverse())
    return BraidWord(n, tuple(prefix + realize(rng, need)), o)


def random_cycle(rng: random.Random, members: Sequence[int], n: int) -> Permutation:
    """A permutation of ``1..n`` that cycles ``members`` in random order and fixes the rest."""
    order = list(members)
    rng.shuffle(order)
    images = list(range(1, n + 1))
    for a, b in zip(order, order[1:] + order[:1]):
        images[a - 1] = b
    return Permutation(tuple(images))


def random_knot_word(rng: random.Random, n: int, prefix_len: int = 4, o=None) -> BraidWord:
    """Word on ``n`` strands whose closure is a knot; needs constant orientation."""
    o = parse_orientation(o, n)
    if len(set(o)) > 1:
        raise ValueError("a braid closing to a knot needs all strands oriented alike")
    return word_with_permutation(rng, n, random_cycle(rng, range(1, n + 1), n), prefix_len, o)


def random_same_permutation(rng: random.Random, T: BraidWord, prefix_len: int = 4) -> BraidWord:
    """Random ``x`` with the same position map as ``T`` (hence the same ``Phi``)."""
    return word_with_permutation(rng, T.strands, position_permutation(T), prefix_len, T.o)


def distinct_same_permutation(rng: random.Random, T: BraidWord, count: int, max_len: int = 12) -> list[BraidWord]:
    """``count`` pairwise distinct words sharing ``T``'s permutation, each at most ``max_len`` letters."""
    seen: dict[tuple, BraidWord] = {}
    attempts = 0
    while len(seen) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise RuntimeError("could not find enough distinct words")
        x = random_same_permutation(rng, T, rng.randint(0, 5))
        if len(x) <= max_len:
            seen.setdefault(x.letters, x)
    return list(seen.values())


def random_singular_knot_word(rng: random.Random, n: int, singular: int, plain: int, o=None) -> BraidWord:
    """Word with ``singular`` letters ``x_i`` among ordinary ones, closing to a (singular) knot."""
    letters = random_letters(rng, n, plain)
    for _ in range(singular):
        letters.insert(rng.randrange(len(letters) + 1), sx(rng.randrange(1, n)))
    have = position_permutation(letters, n)
    need = random_cycle(rng, range(1, n + 1), n).compose(have.inverse())
    return BraidWord(n, tuple(letters + realize(rng, need)), o)
