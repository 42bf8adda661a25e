"""superforms: exact-arithmetic classical Lie superalgebras, compact real
forms, and Grassmann-valued points of the associated matrix supergroups."""

from .scalars import GaussScalar
from .grassmann import GrassmannElement, gr_conj, gr_inv, gr_mul, gr_parity_body
from .supermatrix import (
    SuperMatrix,
    sm_berezinian,
    sm_exp_nilpotent,
    sm_inv,
    sm_mul,
    sm_supertrace_supertranspose,
)
from .superalgebra import (
    ChevalleyData,
    LieSuperalgebra,
    Root,
    build_algebra,
    check_assumption,
    chevalley_basis,
    super_jacobi_check,
)
from .realform import (
    RealFormBasis,
    SemilinearMap,
    closure_check,
    compact_form_basis,
    fixed_points_equal_k,
    involution_s,
    realform_report,
)
from .supergroup import (
    APointsContext,
    GeneratorWord,
    Letter,
    evaluate,
    k_membership,
    make_letter,
    sigma_matrix,
    sigma_word,
)
from .enveloping import TruncatedUEA, extend_involution, invariants_dim_compare, pbw_basis

__version__ = "0.1.0"

__all__ = [
    "GaussScalar",
    "GrassmannElement",
    "SuperMatrix",
    "LieSuperalgebra",
    "Root",
    "ChevalleyData",
    "RealFormBasis",
    "SemilinearMap",
    "APointsContext",
    "GeneratorWord",
    "Letter",
    "TruncatedUEA",
    "build_algebra",
    "chevalley_basis",
    "check_assumption",
    "super_jacobi_check",
    "involution_s",
    "compact_form_basis",
    "closure_check",
    "fixed_points_equal_k",
    "realform_report",
    "evaluate",
    "make_letter",
    "sigma_word",
    "sigma_matrix",
    "k_membership",
    "pbw_basis",
    "extend_involution",
    "invariants_dim_compare",
    "gr_mul",
    "gr_conj",
    "gr_inv",
    "gr_parity_body",
    "sm_mul",
    "sm_inv",
    "sm_berezinian",
    "sm_exp_nilpotent",
    "sm_supertrace_supertranspose",
]
