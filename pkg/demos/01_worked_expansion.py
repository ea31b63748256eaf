"""Expand the smallest move word into singular letters and read off the identity.

Every square sigma^2 (or sigma^-2) is rewritten through the Birman-Lin
substitution; words with more than k+1 singular letters are dropped.
"""

from finitetype import MoveSpec, bh_word, rhs_symbolic
from finitetype.verify import check_symbolic

spec = MoveSpec(1, (2, 2), "000")
print("move word:", bh_word(spec))

rep = check_symbolic(spec)
print("truncated expansion:", rep.expansion)
print("signed word sum    :", rhs_symbolic(spec))
print("agree modulo degree k+2:", rep.equal)

# same thing with every strand pointing down
down = MoveSpec(1, (2, -2), "111")
print()
print("down-oriented move word:", bh_word(down))
print("agree:", check_symbolic(down).equal)
