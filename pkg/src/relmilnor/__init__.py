"""relmilnor: relative Milnor algebras of quasihomogeneous polynomials and
equivalence decisions relative to a fixed hypersurface, with exact rational
arithmetic throughout."""

__version__ = "0.1.0"

from .qpoly import (  # noqa: F401
    INFINITY,
    GradedSlice,
    Polynomial,
    PolyParseError,
    PolyRing,
    WeightSystem,
    euler_apply,
    format_poly,
    graded_slice,
    infer_weights,
    is_quasihomogeneous,
    monomials_of_wdeg,
    parse_poly,
    quasi_degree,
    weighted_order,
)
from .groebner import ReductionResult, buchberger, reduce_mod_ideal  # noqa: F401
from .logder import (  # noqa: F401
    TangentBasis,
    VectorField,
    apply_field,
    bracket,
    euler_field,
    lie0_ambient,
    theta_piece,
    vf_order,
)
from .milnor import (  # noqa: F401
    HilbertFingerprint,
    IdealPiece,
    hilbert_fingerprint,
    ideal_equal_up_to,
    jacobian_piece,
    pieces_equal,
    quotient_basis,
)
from .pencil import (  # noqa: F401
    PencilMatrix,
    PencilReport,
    assemble_pencil,
    exceptional_locus,
    mather_verdict,
    tangent_inclusion,
)
from .equiv import (  # noqa: F401
    DecideOptions,
    EquivVerdict,
    NotInvertibleError,
    Substitution,
    apply_subst,
    decide_rv_equiv,
    forward_invariance_check,
    is_degree_preserving,
    preserves_V,
    subst_order,
    verify_transport,
)
