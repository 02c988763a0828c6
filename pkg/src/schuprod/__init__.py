"""Exact multiplication of Schubert classes from a Cartan matrix.

The pipeline: validate a finite-type Cartan matrix, enumerate the Weyl
group (or the minimal coset representatives of a parabolic quotient),
attach to a reduced word its strictly upper-triangular relative matrix,
solve the subword equations for the two factors, and evaluate the
triangular operator on the product of the solution sums.  Everything is
integer-exact; an independent tableau-counting oracle covers the type-A
Grassmannian case.
"""

from .errors import (
    DegreeMismatch,
    GroupTooLarge,
    LengthMismatch,
    NotCartan,
    NotFiniteType,
    NotGrassmannianPermutation,
    NotMinimalRep,
    NotReduced,
    SchubertError,
    SizeMismatch,
    VariableCountMismatch,
)
from .oracles import (
    format_partition,
    grassmannian_dictionary,
    lr_coefficient,
    parse_partition,
    partitions_in_box,
)
from .relmat import RelativeCartanMatrix, cartan_matrix_of_word
from .rootsys import (
    CartanMatrix,
    Root,
    cartan_matrix_by_name,
    cartan_pair,
    positive_roots,
    validate_cartan,
)
from .schubert import (
    StructureConstant,
    product_expansion,
    structure_constant,
    structure_constant_for_word,
    subword_solutions,
    subword_sum,
)
from .triop import (
    FlowMatrix,
    HomogPoly,
    flow_matrices,
    poly_mul,
    triangular_eval,
    triangular_eval_closed,
    vanishing_filter,
)
from .weyl import (
    ParabolicSubset,
    WeylElement,
    Word,
    all_reduced_words,
    element_of_word,
    enumerate_group,
    length,
    minimal_coset_reps,
    reduced_word,
)

__version__ = "0.1.0"

__all__ = [
    "CartanMatrix",
    "DegreeMismatch",
    "FlowMatrix",
    "GroupTooLarge",
    "HomogPoly",
    "LengthMismatch",
    "NotCartan",
    "NotFiniteType",
    "NotGrassmannianPermutation",
    "NotMinimalRep",
    "NotReduced",
    "ParabolicSubset",
    "RelativeCartanMatrix",
    "Root",
    "SchubertError",
    "SizeMismatch",
    "StructureConstant",
    "VariableCountMismatch",
    "WeylElement",
    "Word",
    "all_reduced_words",
    "cartan_matrix_by_name",
    "cartan_matrix_of_word",
    "cartan_pair",
    "element_of_word",
    "enumerate_group",
    "flow_matrices",
    "format_partition",
    "grassmannian_dictionary",
    "length",
    "lr_coefficient",
    "minimal_coset_reps",
    "parse_partition",
    "partitions_in_box",
    "poly_mul",
    "positive_roots",
    "product_expansion",
    "reduced_word",
    "structure_constant",
    "structure_constant_for_word",
    "subword_solutions",
    "subword_sum",
    "triangular_eval",
    "triangular_eval_closed",
    "validate_cartan",
    "vanishing_filter",
]
