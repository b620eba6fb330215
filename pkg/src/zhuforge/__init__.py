"""zhuforge: exact symbolic Zhu algebras from C1-presented vertex algebras.

Given finitely many generators with weights, the products u^i_k u^j for
k >= 0 in PBW form, and optionally some singular vectors, the package
completes the product table, computes normal forms by a Diamond-Lemma
rewrite system, measures the failure of the Jacobi identities, and derives
a presentation of the Zhu algebra as a quotient of a PBW-straightened
polynomial algebra — everything in exact rational arithmetic.
"""

__version__ = "0.1.0"

from .catalog import bundled_names, load_bundled
from .engine import FullTable, ReductionStrategy, complete_table
from .presentation import (
    Presentation,
    PresentationError,
    load_presentation,
    parse_presentation,
    validate,
)
from .quotient import QuotientModel, check_matrix_model, quotient_basis
from .reduction import (
    JacobiDefect,
    c1_singular_elements,
    is_nondegenerate,
    mode_order,
    normal_form,
)
from .va_calculus import (
    OpExpansion,
    apply_D,
    apply_mode,
    commutator,
    element_mode,
    evaluate,
    generated_span,
)
from .zhu import (
    ClosureBounds,
    NCPoly,
    ZhuAlgebra,
    ZhuPresentation,
    circ,
    reduces_to_zero,
    relation_closure,
    star,
    zhu_commutators,
    zhu_image,
)

__all__ = [
    "ClosureBounds",
    "FullTable",
    "JacobiDefect",
    "NCPoly",
    "OpExpansion",
    "Presentation",
    "PresentationError",
    "QuotientModel",
    "ReductionStrategy",
    "ZhuAlgebra",
    "ZhuPresentation",
    "apply_D",
    "apply_mode",
    "bundled_names",
    "c1_singular_elements",
    "check_matrix_model",
    "circ",
    "commutator",
    "complete_table",
    "element_mode",
    "evaluate",
    "generated_span",
    "is_nondegenerate",
    "load_bundled",
    "load_presentation",
    "mode_order",
    "normal_form",
    "parse_presentation",
    "quotient_basis",
    "reduces_to_zero",
    "relation_closure",
    "star",
    "validate",
    "zhu_commutators",
    "zhu_image",
    "__version__",
]
