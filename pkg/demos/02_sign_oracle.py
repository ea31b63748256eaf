"""Decide between the two readings of the orientation sign by brute force.

For every d and every orientation at k = 1, 2 the symbolic identity is
checked under each convention; the one with zero failures ships as default.
"""

from finitetype import DEFAULT_CONVENTION
from finitetype.verify import sign_convention_oracle

res = sign_convention_oracle((1, 2))
print(res.summary())
for conv, n in res.failures.items():
    print(f"  {conv:>14}: {n} failing (d, o) cases")
print("shipped default:", DEFAULT_CONVENTION.value)
