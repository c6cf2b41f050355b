"""
Three-variable equations
========================

With c1 + c2 + c3 = 0 constant columns always work, so the question is
about injective solutions.  They exist exactly when some adjacent pair
of sigma is a multiple of some (c_i, -c_j) with i != j.  When instead a
pair of coefficients cancels, only Schur's equation survives.
"""
from rado_strings import (
    classify_three_var,
    fastpath,
    reduce_to_adjacent_pair,
    schur_only_test,
    solve_in_class,
    three_var_sum_zero_injective,
)

eq = (3, -5, 2)
sigma = (5, 7, -10, -6, 13)
print(classify_three_var(eq).to_json())
print("closed form:", three_var_sum_zero_injective(eq, sigma))
print("first good adjacent pair h =", reduce_to_adjacent_pair(eq, sigma))
print("solver     :", solve_in_class(eq, sigma, injective=True).sat)

# (1,-1) is parallel to every (c_i, -c_i), yet no injective solution exists
print("3x1-5x2+2x3 in (1,-1):", solve_in_class(eq, (1, -1), injective=True).sat)

for c, d in [(1, 1), (1, 2), (1, 3)]:
    print(f"c(x1-x2)+{d}x3 with c={c}: solvable for every sigma?", schur_only_test(c, d))

print(fastpath((1, -1, 2), (2, -3, 1)).to_json())
print(fastpath((4, 2, 3, -5, -1, -2), (1,)).to_json())
