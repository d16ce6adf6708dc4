"""Finite-model laboratory for hypercompositional algebra."""

from .axioms import (
    AxiomResult,
    IdentitySets,
    PreconditionError,
    Witness,
    attractive_elements,
    check_law,
    check_opposite_additivity,
    check_polysymmetry,
    check_reversibility_canonical,
    check_reversibility_poly,
    check_ring_axioms,
    check_unique_opposite,
    find_identities,
    opposite_map,
    symmetric_set,
)
from .classify import (
    ClassificationReport,
    check_hypermodule,
    classify_single,
    classify_two_op,
)
from .model import (
    HyperTable,
    HypermoduleModel,
    TwoOpModel,
    apply_permutation,
    canonical_form,
    complex_product,
    left_division,
    right_division,
)
from .dorroh import DorrohPair, ProbeReport, associativity_probe, dorroh_add, dorroh_mul, scaled_sum
from .enumeration import EnumerationJob, EnumerationSummary, enumerate_models, golden_check
from .modelio import ParseError, parse_model, serialize_model
from .theorems import THEOREM_IDS, VerificationReport, search_independence, verify

__version__ = "0.1.0"
