"""Polynomial invariants of a few closures, each checked against an independent oracle."""

from finitetype import close, conway, evaluate, jones, parse_braid_word
from finitetype.invariants import alexander, bracket_state_sum, conway_skein, jones_from_bracket

knots = {
    "unknot": parse_braid_word("s1 s2", 3),
    "trefoil": parse_braid_word("s1^3", 2),
    "figure-eight": parse_braid_word("s1 s2^-1 s1 s2^-1", 3),
    "5_1": parse_braid_word("s1^5", 2),
}

for name, w in knots.items():
    d = close(w)
    print(f"{name}  ({w})")
    print("  jones     ", jones(w))
    print("  state sum ", jones_from_bracket(bracket_state_sum(d), d.writhe))
    print("  conway    ", conway(w), "| skein:", conway_skein(d))
    print("  alexander ", alexander(w))
    print("  c2 =", evaluate("c2", w), " j2 =", evaluate("j2", w), " j3 =", evaluate("j3", w))
