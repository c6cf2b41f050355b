"""
Strings of integers and their classes
=====================================

Two strings are equivalent when they agree after deleting zeros and
collapsing repeated neighbours.  Each class has one reduced member.
"""
from rado_strings import allowed_emissions, are_equivalent, is_coherent, is_reduced, reduce

s = (0, 1, 1, -2, 0, -2, 0, 0, 3, 3, 0, 3)
print("reduce", s, "->", reduce(s))

# zeros split a run, but the run still collapses once they are gone
print("reduce (5, 5, 0, 5, 7, 0) ->", reduce((5, 5, 0, 5, 7, 0)))

print("(2, 2, -1) reduced?", is_reduced((2, 2, -1)))
print("(1, 2) ~ (2, 1)?", are_equivalent((1, 2), (2, 1)))
print("(1, 0, 1, 1) in the class of (1)?", is_coherent((1, 0, 1, 1), (1,)))

# A string can be read one entry at a time: after matching sigma[:q],
# these are the values it may emit next.
sigma = (1, -2, 3)
for q in range(len(sigma) + 1):
    print(f"state {q}: may emit {sorted(allowed_emissions(sigma, q))}")
