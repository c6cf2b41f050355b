"""Decide when a linear equation has a solution made of strings coherent with a given reduced string."""
from .characterizations import (
    FastpathVerdict,
    NoFastpath,
    ThreeVarClass,
    ThreeVarKind,
    classify_three_var,
    fastpath,
    reduce_to_adjacent_pair,
    schur_only_test,
    sigma_one_criterion,
    three_var_sum_zero_injective,
)
from .coloring import Coloring, color_check
from .equations import (
    EquationParseError,
    LinearEquation,
    content_normalize,
    is_rado,
    parse_equation,
    render,
)
from .mtsystems import (
    MTElement,
    SparseSequence,
    gen_sparse_sequence,
    instantiate_witness,
    levelwise_cancellation_check,
    mt_decompose,
    mt_enumerate,
    sparsity_constant,
)
from .solver import (
    IndeterminateError,
    SolverVerdict,
    brute_force_oracle,
    solve_in_class,
    verify_witness,
)
from .strings import allowed_emissions, are_equivalent, is_coherent, is_reduced, reduce

__version__ = "0.1.0"
