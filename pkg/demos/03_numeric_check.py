"""Evaluate both sides of the move identity on actual knots.

K and J are closures of T * (move word) and T; the right side is a signed
sum of knots built from x, which only needs T's permutation.
"""

import random

from finitetype import MoveSpec, make_pair
from finitetype.corpus import random_knot_word, random_same_permutation
from finitetype.verify import check_theorem

rng = random.Random(7)
spec = MoveSpec(1, (2, -2), "000")
T = random_knot_word(rng, 3, 4, spec.o)
x = random_same_permutation(rng, T, 3)
pair = make_pair(spec, T)
print("T =", T)
print("x =", x)
print("K =", pair.K_word)

for inv in ("c2", "j2"):
    rep = check_theorem(spec, T, x, inv)
    print(f"\n{inv}: lhs {rep.lhs}  rhs {rep.rhs}  equal {rep.equal}")
    for sign, word, value in rep.term_values:
        print(f"   {'+' if sign > 0 else '-'} {str(value):>4}  {word}")

spec2 = MoveSpec(2, (2, 2, -2), "1111")
T2 = random_knot_word(rng, 4, 4, spec2.o)
x2 = random_same_permutation(rng, T2, 4)
rep = check_theorem(spec2, T2, x2, "j3")
print(f"\nk=2, j3: lhs {rep.lhs}  rhs {rep.rhs}  equal {rep.equal}")
