"""
quasishuffle: exact-arithmetic descent combinatorics, free braid/virtual
word lifts of permutations, and quantum quasi-shuffle products.

All coefficients are rational and all comparisons exact.  See the module
docstrings for the conventions (composition order, action order, shuffle
membership) shared across the package.
"""

from .braided import (
    BraidedAlgebraSpec,
    SpecValidationError,
    TensorElement,
    act,
    algebra_from_json,
    apply_generator,
    builtin_algebra,
    delete_units,
    ensure_valid,
    validate_braided,
)
from .ideals import (
    NotARelationError,
    RelationBasis,
    UnliftableError,
    braid_symmetrize,
    commutativity_check,
    graded_product_check,
    kernel_braid_symmetrizer,
    kernel_total_symmetrization,
    lift_relation,
    top_component,
    w_action,
)
from .lifting import (
    lift_descent,
    lift_descent_sum,
    lift_shuffle,
    lift_shuffle_extended,
    m_map,
    m_map_prime,
    mt_section,
    total_symmetrization_element,
)
from .permutations import (
    BubbleDecomposition,
    PermSum,
    Permutation,
    all_permutations,
    bubble_decompose,
    composition_to_descents,
    descent_class_order,
    descent_classes,
    descent_factorize,
    descent_factorize_alt,
    descent_symmetrizer,
    descents_to_composition,
    enumerate_descent_class,
    enumerate_shuffles,
    parse_permutation,
    partial_symmetrizer,
    shuffle_split,
)
from .products import (
    iterated_product,
    qq_product,
    quantum_shuffle_product,
    quasi_shuffle_oracle,
    shuffle_product,
    total_symmetrize,
    verify_descent_theorem,
)
from .words import (
    GvbElement,
    GvbLetter,
    GvbWord,
    braid_symmetrizer,
    project_alpha,
    project_beta,
    tits_section,
)

__version__ = "0.1.0"
