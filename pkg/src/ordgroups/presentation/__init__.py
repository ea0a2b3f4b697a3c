"""Finite presentations: abelianization, rewriting, quotient witnesses and order obstructions."""
from .abelian import AbelianizationResult, SmithForm, abelianization, check_smith_form, smith_normal_form
from .certificate import FORMAT_VERSION, Certificate, verify_certificate
from .cone import (
    CaseAnalysisResult,
    CaseSchema,
    ConeBounds,
    ConeResult,
    SignSeed,
    cone_consistency_search,
    default_schema,
    nonLO_case_analysis,
)
from .data import bundled, bundled_names, load_presentation
from .quotient import homomorphisms, search_quotient, word_image
from .refute import (
    RULES,
    IndicabilityResult,
    RefutationResult,
    RefuteBounds,
    biorder_refute,
    finite_quotient_witness,
    indicability_obstruction,
)
from .rewrite import BallResult, Chain, RewriteBounds, Step, prove_trivial, rewrite_ball, verify_chain
from .words import Presentation, commutator, concat, free_reduce, inverse, power

__all__ = [
    "AbelianizationResult",
    "BallResult",
    "CaseAnalysisResult",
    "CaseSchema",
    "Certificate",
    "Chain",
    "ConeBounds",
    "ConeResult",
    "FORMAT_VERSION",
    "IndicabilityResult",
    "Presentation",
    "RULES",
    "RefutationResult",
    "RefuteBounds",
    "RewriteBounds",
    "SignSeed",
    "SmithForm",
    "Step",
    "abelianization",
    "biorder_refute",
    "bundled",
    "bundled_names",
    "check_smith_form",
    "commutator",
    "concat",
    "cone_consistency_search",
    "default_schema",
    "finite_quotient_witness",
    "free_reduce",
    "homomorphisms",
    "indicability_obstruction",
    "inverse",
    "load_presentation",
    "nonLO_case_analysis",
    "power",
    "prove_trivial",
    "rewrite_ball",
    "search_quotient",
    "smith_normal_form",
    "verify_certificate",
    "verify_chain",
    "word_image",
]
