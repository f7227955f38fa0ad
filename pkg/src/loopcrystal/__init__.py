"""Type A affine geometric crystals in the unipotent loop group, in exact arithmetic."""
from .crystal import (
    CartanData,
    FactorPoint,
    ProductPoint,
    basic_e,
    basic_stats,
    check_axioms,
    product_e,
    product_stats,
    random_point,
)
from .exact import LoopVarPoly, MissingVariableError, PoleError, VarId, poly_equal, poly_eval
from .loopsym import (
    SkewShape,
    corner_sets,
    energy,
    jacobi_trudi_schur,
    loop_e,
    schur_pushforward,
    tableaux_schur,
)
from .rmatrix import apply_s, apply_word, kappa
from .ucrystal import UCrystalContext, quotient_check, thm_e_image, u_e, u_stats
from .whirl import PeriodicBandedMatrix, chevalley, entry, from_factors, multiply, whirl, window

__all__ = [
    "CartanData",
    "FactorPoint",
    "ProductPoint",
    "basic_e",
    "basic_stats",
    "check_axioms",
    "product_e",
    "product_stats",
    "random_point",
    "LoopVarPoly",
    "MissingVariableError",
    "PoleError",
    "VarId",
    "poly_equal",
    "poly_eval",
    "SkewShape",
    "corner_sets",
    "energy",
    "jacobi_trudi_schur",
    "loop_e",
    "schur_pushforward",
    "tableaux_schur",
    "apply_s",
    "apply_word",
    "kappa",
    "UCrystalContext",
    "quotient_check",
    "thm_e_image",
    "u_e",
    "u_stats",
    "PeriodicBandedMatrix",
    "chevalley",
    "entry",
    "from_factors",
    "multiply",
    "whirl",
    "window",
]

__version__ = "0.1.0"
