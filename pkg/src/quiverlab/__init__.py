"""Exact linear algebra for quivers: Tits classification, Coxeter
cyclotomicity, categorical entropy, and resolution growth over trivial
extensions."""

from .builders import (
    CanonicalSpec,
    GentlePresentation,
    canonical_algebra,
    gentle_algebra,
    parse_canonical_spec,
    parse_gentle,
    path_algebra,
)
from .cyclo import (
    CycloProfile,
    char_poly,
    companion_matrix,
    cyclotomic_profile,
    min_poly,
    spectral_radius,
)
from .intpoly import IntPolynomial, cyclotomic_factorization, cyclotomic_poly
from .quiver import (
    Arrow,
    Quiver,
    QuiverType,
    cartan_path_algebra,
    classify_quiver,
    coxeter_matrix,
    has_oriented_cycle,
    parse_quiver,
    quiver_from_data,
    tits_matrix,
)
from .ratmat import RatMatrix, Vector, as_fraction, l1_norm, vector
from .resolution import (
    ComplexityEstimate,
    RepModule,
    ResolutionTrace,
    combine_estimates,
    complexity_estimate,
    global_complexity_estimate,
    jacobson_radical,
    minimal_resolution,
    projective_cover,
    resolve_simple_modules,
    simple_modules,
    zero_module,
)
from .scalgebra import BasisElement, Element, SCAlgebra, cartan_matrix
from .serre import (
    CoxeterReport,
    EntropyLine,
    GrowthEstimate,
    SerreVerdict,
    canonical_verdict,
    coxeter_necessary_check,
    entropy_line,
    graded_path_verdict,
    growth_degree,
    hereditary_entropy,
    serre_entropy,
    verify_k_shadow,
)
from .trivext import dual_pairing, is_symmetric_form_associative, trivial_extension

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "BasisElement",
    "CanonicalSpec",
    "ComplexityEstimate",
    "CoxeterReport",
    "CycloProfile",
    "Element",
    "EntropyLine",
    "GentlePresentation",
    "GrowthEstimate",
    "IntPolynomial",
    "Quiver",
    "QuiverType",
    "RatMatrix",
    "RepModule",
    "ResolutionTrace",
    "SCAlgebra",
    "SerreVerdict",
    "Vector",
    "as_fraction",
    "canonical_algebra",
    "canonical_verdict",
    "cartan_matrix",
    "cartan_path_algebra",
    "char_poly",
    "classify_quiver",
    "combine_estimates",
    "companion_matrix",
    "complexity_estimate",
    "coxeter_matrix",
    "coxeter_necessary_check",
    "cyclotomic_factorization",
    "cyclotomic_poly",
    "cyclotomic_profile",
    "dual_pairing",
    "entropy_line",
    "gentle_algebra",
    "global_complexity_estimate",
    "graded_path_verdict",
    "growth_degree",
    "has_oriented_cycle",
    "hereditary_entropy",
    "is_symmetric_form_associative",
    "jacobson_radical",
    "l1_norm",
    "min_poly",
    "minimal_resolution",
    "parse_canonical_spec",
    "parse_gentle",
    "parse_quiver",
    "path_algebra",
    "projective_cover",
    "quiver_from_data",
    "resolve_simple_modules",
    "serre_entropy",
    "simple_modules",
    "spectral_radius",
    "tits_matrix",
    "trivial_extension",
    "vector",
    "verify_k_shadow",
    "zero_module",
]
