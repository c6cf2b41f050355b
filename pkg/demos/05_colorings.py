"""
Monochromatic solutions in finite colorings
===========================================

A finite sanity check of partition regularity: color [-N, N] minus 0 and
look for a solution inside one color.
"""
from rado_strings import color_check, is_rado
from rado_strings.coloring import parity_coloring, random_coloring, sign_coloring

print("x+y=z, parity coloring:", color_check((1, 1, -1), parity_coloring(5)))
print("x+2y=0 is Rado?", is_rado((1, 2)))
print("x+2y=0, sign coloring:", color_check((1, 2), sign_coloring(20)))

for seed in range(3):
    col = random_coloring(30, 3, seed)
    sol = color_check((1, 1, -1), col)
    print(f"seed {seed}: x+y=z ->", sol, "color", col[sol[0]])
