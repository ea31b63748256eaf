"""Planar diagrams of braid closures.

Crossings use the usual planar-diagram convention: the four incident edges are
listed counterclockwise starting from the incoming under-edge.  Edges are the
segments of the 4-valent graph between crossings; a column touched by no
letter closes up into a crossingless loop.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .braid import BraidWord, Kind


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: int
    arcs: tuple[int, int, int, int]  # (a, b, c, d): a incoming under, counterclockwise

    @property
    def under(self) -> tuple[int, int]:
        """(incoming, outgoing) edges of the under strand."""
        return self.arcs[0], self.arcs[2]

    @property
    def over(self) -> tuple[int, int]:
        """(incoming, outgoing) edges of the over strand."""
        a, b, c, d = self.arcs
        return (d, b) if self.sign > 0 else (b, d)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    edges: int  # edge ids are 0..edges-1
    free_loops: int = 0

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def successor(self) -> dict[int, int]:
        """Edge that follows each edge when passing straight through its head crossing."""
        nxt = {}
        for c in self.crossings:
            for inc, out in (c.under, c.over):
                nxt[inc] = out
        return nxt

    def component_edges(self) -> list[list[int]]:
        nxt = self.successor()
        seen: set[int] = set()
        comps = []
        for start in range(self.edges):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            e = nxt[start]
            while e != start:
                comp.append(e)
                seen.add(e)
                e = nxt[e]
            comps.append(comp)
        return comps

    @property
    def components(self) -> int:
        return len(self.component_edges()) + self.free_loops

    def to_json(self) -> dict:
        return {
            "crossings": [{"id": c.id, "sign": c.sign, "arcs": list(c.arcs)} for c in self.crossings],
            "components": self.components,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def close(w: BraidWord) -> LinkDiagram:
    """Closure of a non-singular word, one crossing per letter.

    ``s_i`` has the strand from the lower-left over the strand from the
    lower-right; with both strands running upward that is a positive crossing.
    Reversing one strand flips the sign.
    """
    if w.is_singular:
        raise ValueError("close() needs a non-singular word; desingularize first")
    n = w.strands
    touch: list[list[int]] = [[] for _ in range(n + 1)]  # position -> letter heights
    for h, letter in enumerate(w.letters):
        touch[letter.index].append(h)
        touch[letter.index + 1].append(h)

    # edge_above[(h, p)]: edge leaving letter h upward at position p; edge_below likewise
    edge_above: dict[tuple[int, int], int] = {}
    edge_below: dict[tuple[int, int], int] = {}
    eid = 0
    free_loops = 0
    for p in range(1, n + 1):
        hs = touch[p]
        if not hs:
            free_loops += 1
            continue
        for j, h in enumerate(hs):
            nxt = hs[(j + 1) % len(hs)]
            edge_above[(h, p)] = eid
            edge_below[(nxt, p)] = eid
            eid += 1

    ori = list(w.o)  # 0 = up
    crossings = []
    for h, letter in enumerate(w.letters):
        i = letter.index
        up_left, up_right = ori[i - 1] == 0, ori[i] == 0
        BL, BR = edge_below[(h, i)], edge_below[(h, i + 1)]
        TL, TR = edge_above[(h, i)], edge_above[(h, i + 1)]
        ccw = [BR, TR, TL, BL]
        # slots are located by position: BL and TL coincide when a column has one letter
        if letter.kind is Kind.POS:
            # over: BL-TR (strand from the left), under: BR-TL
            r = 0 if up_right else 2
            sign = (1 if up_left else -1) * (1 if up_right else -1)
        else:
            # over: BR-TL, under: BL-TR
            r = 3 if up_left else 1
            sign = -(1 if up_left else -1) * (1 if up_right else -1)
        arcs = tuple(ccw[r:] + ccw[:r])
        crossings.append(Crossing(h, sign, arcs))  # type: ignore[arg-type]
        ori[i - 1], ori[i] = ori[i], ori[i - 1]
    if tuple(ori) != w.o:
        raise ValueError("word does not respect its orientation; closure is not consistently oriented")
    return LinkDiagram(tuple(crossings), eid, free_loops)
