"""
Sparse sequences and Milliken-Taylor sums
=========================================

If every term of a sequence outweighs M times the absolute sum of the
earlier ones, small integer combinations of it cannot cancel by accident.
A witness matrix then turns into actual integers solving the equation.
"""
from rado_strings import (
    gen_sparse_sequence,
    instantiate_witness,
    levelwise_cancellation_check,
    mt_decompose,
    mt_enumerate,
    solve_in_class,
    sparsity_constant,
)

seq = gen_sparse_sequence(4, 3, seed=0, jitter=False)
print("4-sparse:", seq.values)

for e in mt_enumerate((1, -2), seq, max_index=3, max_block_size=1):
    print("  MT element", e.value, "blocks", e.blocks)

print("3*x1 - x2 vanishes?", levelwise_cancellation_check((3, -1), seq, 4))

eq, sigma = (1, 1, -1), (2, -1)
v = solve_in_class(eq, sigma, injective=True)
M = sparsity_constant(sigma, eq)
seq = gen_sparse_sequence(M, v.k, seed=7, signs="random")
y = instantiate_witness(v.witness, eq, sigma, seq)
print("witness", v.witness)
print("sequence", seq.values, "gives y =", y, "and x1+x2-x3 =", y[0] + y[1] - y[2])
for yj in y:
    print("  ", yj, "decomposes as", mt_decompose(yj, sigma, seq).blocks)
