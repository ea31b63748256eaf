"""Two k=1 blocks side by side on six strands.

The default right factor flips the middle index; the literal reading without
the flip is kept behind a flag and fails the symbolic comparison.
"""

import random

from finitetype import MoveSpec
from finitetype.corpus import random_knot_word, random_same_permutation
from finitetype.verify import check_block_symbolic, check_general

specs = [MoveSpec(1, (2, 2), "000"), MoveSpec(1, (-2, 2), "000")]
for literal in (False, True):
    rep = check_block_symbolic(specs, literal=literal)
    print(f"{'literal' if literal else 'flipped'} right factor: symbolic match {rep.equal}")

rng = random.Random(11)
T = random_knot_word(rng, 6, 3, "000000")
x = random_same_permutation(rng, T, 3)
rep = check_general(2, specs, T, x, "c2")
print(f"\nc2 on T = {T}: lhs {rep.lhs}, rhs {rep.rhs} over {len(rep.term_values)} terms, equal {rep.equal}")
