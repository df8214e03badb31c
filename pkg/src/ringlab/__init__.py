"""ringlab: finite-ring computational algebra and claim verification.

Build small unital rings from a construction DSL, compute their
radical-like subsets (U, Id, Nil, Z, J, J#, Nil*), decide ring classes
such as UJ#, UJ and UU, and mechanically check a registry of structural
statements over a ring corpus with counterexample witnesses.
"""

from .core import (
    DEFAULT_MAX_ORDER,
    ElemSet,
    ElementIndexError,
    OutOfCapError,
    RingError,
    RingValidationError,
    TableRing,
    Violation,
    elem_add,
    elem_mul,
    elem_neg,
    elem_pow,
    elem_sub,
    power_orbit,
    validate_ring,
)
from .expr import canonical_hash, compile_expr, compile_text, parse, print_canonical
from .subsets import InvariantBundle, compute_bundle
from .checks import default_corpus, registry, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_ORDER",
    "ElemSet",
    "ElementIndexError",
    "InvariantBundle",
    "OutOfCapError",
    "RingError",
    "RingValidationError",
    "TableRing",
    "Violation",
    "canonical_hash",
    "compile_expr",
    "compile_text",
    "compute_bundle",
    "default_corpus",
    "elem_add",
    "elem_mul",
    "elem_neg",
    "elem_pow",
    "elem_sub",
    "parse",
    "power_orbit",
    "print_canonical",
    "registry",
    "run_check",
    "run_suite",
    "validate_ring",
    "__version__",
]
