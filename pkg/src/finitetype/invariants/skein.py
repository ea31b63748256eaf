"""Conway polynomial of a planar diagram by skein recursion; used as an oracle.

Components are ordered by their smallest edge label and traversed from that
edge.  The first crossing met first as an under-crossing is switched and
smoothed:

    C(L+) - C(L-) = z C(L0)

A diagram with no such crossing is descending, hence an unlink.
"""

from __future__ import annotations

from ..diagram import LinkDiagram
from ..laurent import LaurentPoly

_Cross = tuple[int, tuple[int, int, int, int]]  # (sign, arcs)


def _over(sign, arcs):
    a, b, c, d = arcs
    return (d, b) if sign > 0 else (b, d)


def _successor(crossings):
    nxt = {}
    for sign, arcs in crossings:
        nxt[arcs[0]] = arcs[2]
        i, o = _over(sign, arcs)
        nxt[i] = o
    return nxt


def _components(crossings) -> list[list[int]]:
    nxt = _successor(crossings)
    seen: set[int] = set()
    comps = []
    for start in sorted(nxt):
        if start in seen:
            continue
        comp, e = [], start
        while e not in seen:
            seen.add(e)
            comp.append(e)
            e = nxt[e]
        comps.append(comp)
    return comps


def _first_bad(crossings):
    """Index of the first crossing reached first along its under-strand, or None."""
    by_in: dict[int, list[tuple[int, bool]]] = {}
    for idx, (sign, arcs) in enumerate(crossings):
        by_in.setdefault(arcs[0], []).append((idx, True))
        by_in.setdefault(_over(sign, arcs)[0], []).append((idx, False))
    met: set[int] = set()
    for comp in _components(crossings):
        for e in comp:  # comp starts at its smallest edge
            for idx, under in by_in.get(e, ()):
                if idx in met:
                    continue
                met.add(idx)
                if under:
                    return idx
    return None


def _switch(sign, arcs):
    a, b, c, d = arcs
    if sign > 0:
        return -sign, (d, a, b, c)
    return -sign, (b, c, d, a)


def _smooth(crossings, idx):
    """Oriented smoothing of crossing ``idx``; returns (crossings, extra free loops)."""
    sign, arcs = crossings[idx]
    a, b, c, d = arcs
    pairs = [(a, b), (d, c)] if sign > 0 else [(a, d), (b, c)]
    rest = [cr for j, cr in enumerate(crossings) if j != idx]
    loops = 0
    for k, (inc, out) in enumerate(pairs):
        if inc == out:
            loops += 1
            continue
        ren = lambda e: inc if e == out else e  # noqa: E731
        rest = [(sg, tuple(ren(e) for e in ar)) for sg, ar in rest]
        pairs[k + 1 :] = [(ren(x), ren(y)) for x, y in pairs[k + 1 :]]
    return rest, loops


def _conway(crossings, free_loops) -> LaurentPoly:
    comps = len(_components(crossings)) + free_loops
    idx = _first_bad(crossings)
    if idx is None:
        return LaurentPoly({0: 1} if comps == 1 else {}, "z")
    if free_loops and crossings:
        # a split unknotted circle kills the Conway polynomial
        return LaurentPoly({}, "z")
    sign, arcs = crossings[idx]
    switched = list(crossings)
    switched[idx] = _switch(sign, arcs)
    smoothed, loops = _smooth(crossings, idx)
    z = LaurentPoly({1: 1}, "z")
    return _conway(switched, free_loops) + z * _conway(smoothed, free_loops + loops) * sign


def conway_skein(diagram: LinkDiagram) -> LaurentPoly:
    crossings = [(c.sign, tuple(c.arcs)) for c in diagram.crossings]
    return _conway(crossings, diagram.free_loops)
