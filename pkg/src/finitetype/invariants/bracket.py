"""Kauffman bracket and Jones polynomial of braid closures.

The fast route pushes a Temperley-Lieb state (planar matchings of the ``2n``
boundary points) through the word one letter at a time; the slow route is the
plain ``2**c`` state sum over a planar diagram and serves as the oracle.

Conventions: ``<s_i> = A <id> + A^-1 <U_i>``, the unknot is normalized to 1,
``V = (-A^3)^(-writhe) <L>`` and then ``t = A^4``, which gives
``V = -t^-4 + t^-3 + t^-1`` for the closure of ``s1^3``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from ..braid import BraidWord, Kind
from ..diagram import LinkDiagram, close
from ..laurent import LaurentPoly

Matching = tuple[int, ...]

DELTA = LaurentPoly({2: -1, -2: -1}, "A")


@lru_cache(maxsize=None)
def _identity(n: int) -> Matching:
    return tuple(range(n, 2 * n)) + tuple(range(n))


@lru_cache(maxsize=500_000)
def _stack_cupcap(m: Matching, i: int, n: int) -> tuple[Matching, int]:
    """Stack ``U_i`` (0-based position ``i``) on top; returns (matching, closed loops)."""
    a, b = n + i, n + i + 1
    p = list(m)
    loops = 0
    if p[a] == b:
        loops = 1
    else:
        pa, pb = p[a], p[b]
        p[pa], p[pb] = pb, pa
    p[a], p[b] = b, a
    return tuple(p), loops


@lru_cache(maxsize=500_000)
def _closure_loops(m: Matching, n: int) -> int:
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        x = start
        while not seen[x]:
            seen[x] = True
            y = m[x]
            seen[y] = True
            x = y - n if y >= n else y + n  # closure strand joins top j to bottom j
    return loops


def _add_shifted(target: dict, poly: dict, shift: int, times_delta: bool) -> None:
    for e, c in poly.items():
        if times_delta:
            for de in (e + shift + 2, e + shift - 2):
                v = target.get(de, 0) - c
                if v:
                    target[de] = v
                else:
                    target.pop(de, None)
        else:
            de = e + shift
            v = target.get(de, 0) + c
            if v:
                target[de] = v
            else:
                target.pop(de, None)


def bracket_transfer(w: BraidWord) -> LaurentPoly:
    """Normalized bracket of the closure via Temperley-Lieb transfer."""
    if w.is_singular:
        raise ValueError("bracket needs a non-singular word")
    n = w.strands
    state: dict[Matching, dict[int, int]] = {_identity(n): {0: 1}}
    for letter in w.letters:
        i = letter.index - 1
        a_id = 1 if letter.kind is Kind.POS else -1
        nxt: dict[Matching, dict[int, int]] = {}
        for m, poly in state.items():
            _add_shifted(nxt.setdefault(m, {}), poly, a_id, False)
            m2, loops = _stack_cupcap(m, i, n)
            _add_shifted(nxt.setdefault(m2, {}), poly, -a_id, bool(loops))
        state = {m: p for m, p in nxt.items() if p}
    total = LaurentPoly({}, "A")
    for m, poly in state.items():
        total = total + LaurentPoly(poly, "A") * DELTA ** (_closure_loops(m, n) - 1)
    return total


def bracket_state_sum(diagram: LinkDiagram) -> LaurentPoly:
    """Normalized bracket by brute force over all ``2**c`` smoothings.

    The A-smoothing of crossing ``(a, b, c, d)`` joins ``a-b`` and ``c-d``.
    """
    crossings = diagram.crossings
    total = LaurentPoly({}, "A")
    counts: dict[tuple[int, int], int] = {}
    for choice in itertools.product((0, 1), repeat=len(crossings)):
        parent = list(range(diagram.edges))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        a_count = 0
        for cr, ch in zip(crossings, choice):
            a, b, c, d = cr.arcs
            if ch == 0:
                a_count += 1
                union(a, b)
                union(c, d)
            else:
                union(a, d)
                union(b, c)
        loops = len({find(x) for x in range(diagram.edges)}) + diagram.free_loops
        key = (a_count - (len(crossings) - a_count), loops)
        counts[key] = counts.get(key, 0) + 1
    for (a_exp, loops), mult in counts.items():
        total = total + LaurentPoly({a_exp: mult}, "A") * DELTA ** (loops - 1)
    return total


def _writhe(w: BraidWord) -> int:
    return close(w).writhe


def jones_from_bracket(br: LaurentPoly, writhe: int) -> LaurentPoly:
    poly = br * LaurentPoly({-3 * writhe: -1 if writhe % 2 else 1}, "A")
    return poly.substitute_power(Fraction(1, 4), "t")


def bracket(w: BraidWord, method: str = "transfer") -> LaurentPoly:
    if method == "transfer":
        return bracket_transfer(w)
    if method == "state_sum":
        return bracket_state_sum(close(w))
    raise ValueError(f"unknown bracket method {method!r}")


def jones(w: BraidWord, method: str = "transfer") -> LaurentPoly:
    """Jones polynomial of the oriented closure (half-integer powers for some links)."""
    return jones_from_bracket(bracket(w, method), _writhe(w))
