"""
Solving an equation inside the class of a string
================================================

A solution is a matrix whose columns all reduce to sigma and whose rows
each annihilate the coefficient vector.  The solver returns the shortest
such matrix, and in injective mode the columns must also be distinct.
"""
from rado_strings import brute_force_oracle, parse_equation, solve_in_class, verify_witness

eq = parse_equation("4x1+2x2+3x3-5x4-x5-2x6=0")

# a hand-written witness with four rows
M = [
    (1, 1, 0, 1, 1, 0),
    (0, 1, 1, 1, 0, 0),
    (0, 0, 1, 0, 1, 1),
    (0, 1, 0, 0, 0, 1),
]
print("hand-written witness valid:", verify_witness(eq, (1,), M, injective=True))

v = solve_in_class(eq, (1,), injective=True)
print("solver:", v.status, "with", v.k, "rows")
for row in v.witness:
    print("   ", row)

# 2x1 - 2x2 - x3 - x4: solvable, but x3 and x4 always share a column
eq2 = parse_equation("2x1-2x2-x3-x4")
print("plain    :", solve_in_class(eq2, (1,)).to_json())
print("injective:", solve_in_class(eq2, (1,), injective=True).to_json())

# the brute-force oracle reaches the same witness on small instances
schur = parse_equation("x1+x2-x3")
v = solve_in_class(schur, (1, -1), injective=True)
o = brute_force_oracle(schur, (1, -1), True, v.k)
print("Schur in (1,-1):", v.witness, "oracle agrees:", o.witness == v.witness)
