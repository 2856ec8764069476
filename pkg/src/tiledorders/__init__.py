"""Reflection classes, normalizer norms and type numbers of tiled orders."""
from .abgroup import FinAbGroup, power_quotient_size, quotient_by, smith_normal_form
from .classes import (
    NormalizerData,
    ReflectionClassLabel,
    are_isomorphic,
    class_label,
    norm_exponent,
    normalizer,
    oracle_reflection_class_count,
    reflection_class_count,
    reflection_class_count_prime,
    reflection_equivalent,
)
from .core import (
    ExponentMatrix,
    MonomialMatrix,
    conjugate_by_monomial,
    is_maximal,
    monomial_type,
    shifted,
    six_tuple,
    structural_invariants,
    validate,
    vertex_types,
)
from .typenumber import GlobalProblem, TPrime, TypeNumberReport, prime_degree_type_number, type_number

__version__ = "0.1.0"

__all__ = [
    "FinAbGroup",
    "power_quotient_size",
    "quotient_by",
    "smith_normal_form",
    "NormalizerData",
    "ReflectionClassLabel",
    "are_isomorphic",
    "class_label",
    "norm_exponent",
    "normalizer",
    "oracle_reflection_class_count",
    "reflection_class_count",
    "reflection_class_count_prime",
    "reflection_equivalent",
    "ExponentMatrix",
    "MonomialMatrix",
    "conjugate_by_monomial",
    "is_maximal",
    "monomial_type",
    "shifted",
    "six_tuple",
    "structural_invariants",
    "validate",
    "vertex_types",
    "GlobalProblem",
    "TPrime",
    "TypeNumberReport",
    "prime_degree_type_number",
    "type_number",
]
